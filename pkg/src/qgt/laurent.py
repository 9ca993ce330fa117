"""Multivariate Laurent polynomials and rational functions over Q(q).

A LaurentPoly is a dict from exponent vectors (tuples of ints, one slot per
variable of its ring) to nonzero QScalar coefficients.  A RatFun is a
quotient of two such polynomials kept in a lightly reduced form: common
monomial factors and scalar content are stripped and exact division is
attempted, but no full multivariate gcd is computed; equality is decided by
cross-multiplication, which is exact.
"""
from __future__ import annotations

from qgt.scalar import ONE, QScalar, ZERO


class LaurentRing:
    """Ring of Laurent polynomials in a fixed ordered list of variables."""

    def __init__(self, names):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.index = {n: i for i, n in enumerate(self.names)}
        self._zero_exp = (0,) * self.nvars
        self.zero = LaurentPoly(self, {})
        self.one = LaurentPoly(self, {self._zero_exp: ONE})

    def gen(self, name, power=1):
        e = list(self._zero_exp)
        e[self.index[name]] = power
        return LaurentPoly(self, {tuple(e): ONE})

    def scalar(self, c):
        if isinstance(c, int):
            c = QScalar.from_int(c)
        if c.is_zero():
            return self.zero
        return LaurentPoly(self, {self._zero_exp: c})

    def monomial(self, exps, coeff=ONE):
        if coeff.is_zero():
            return self.zero
        return LaurentPoly(self, {tuple(exps): coeff})

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "LaurentRing(%s)" % ", ".join(self.names)


class LaurentPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_scalar(self):
        if not self.terms:
            return True
        return len(self.terms) == 1 and self.ring._zero_exp in self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentPoly(self.ring, out)

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QScalar):
            return self.scale(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = c
                else:
                    s = s + c
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
        return LaurentPoly(self.ring, out)

    def scale(self, c):
        if c.is_zero():
            return self.ring.zero
        if c.is_one():
            return self
        return LaurentPoly(self.ring, {e: x * c for e, x in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial; invert first")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.ring.names == other.ring.names
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def substitute(self, values):
        """Evaluate with each variable replaced by a QScalar (all required)."""
        out = ZERO
        for e, c in self.terms.items():
            t = c
            for i, p in enumerate(e):
                if p:
                    t = t * values[i] ** p
            out = out + t
        return out

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def monomial_unit_inverse(self):
        """Inverse, defined when the polynomial is a single term."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        ((e, c),) = self.terms.items()
        return LaurentPoly(self.ring, {tuple(-x for x in e): c.inv()})

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for i, p in enumerate(e):
                if p == 0:
                    continue
                name = self.ring.names[i]
                factors.append(name if p == 1 else "%s^%d" % (name, p))
            body = "*".join(factors)
            cs = c.render()
            if body:
                if cs == "1":
                    term = body
                elif cs == "-1":
                    term = "-" + body
                else:
                    if "+" in cs[1:] or "-" in cs[1:] or "/" in cs:
                        cs = "(%s)" % cs
                    term = "%s*%s" % (cs, body)
            else:
                term = cs
            if parts and not term.startswith("-"):
                parts.append("+")
            parts.append(term)
        return "".join(parts)

    __str__ = render

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


def _strip_monomial(p):
    """Factor p as q-scalar-content * monomial * primitive part.

    Returns (shift, content, stripped) where shift is the exponent vector of
    the extracted monomial and content a QScalar; stripped has a term with
    exponent vector having zero minimum in each variable and content ONE is
    not enforced (content extraction here only normalizes the q-scalar by the
    coefficient of the leading monomial).
    """
    if not p.terms:
        return p.ring._zero_exp, ONE, p
    mins = None
    for e in p.terms:
        if mins is None:
            mins = list(e)
        else:
            for i, x in enumerate(e):
                if x < mins[i]:
                    mins[i] = x
    shift = tuple(mins)
    if any(shift):
        terms = {
            tuple(x - m for x, m in zip(e, shift)): c for e, c in p.terms.items()
        }
        p = LaurentPoly(p.ring, terms)
    lead = max(p.terms)
    c = p.terms[lead]
    if not c.is_one():
        p = p.scale(c.inv())
    return shift, c, p


def _try_exact_div(num, den):
    """Divide num by den in the Laurent ring if the quotient is polynomial.

    den is assumed primitive with leading (max exponent) coefficient 1.
    Returns the quotient or None.
    """
    if den.is_scalar():
        return num
    lead = max(den.terms)
    rem = dict(num.terms)
    out = {}
    guard = len(num.terms) * (len(den.terms) + 2) + 16
    while rem:
        if guard <= 0:
            return None
        guard -= 1
        e = max(rem)
        if any(x < y for x, y in zip(e, lead)):
            return None
        qe = tuple(x - y for x, y in zip(e, lead))
        qc = rem[e]
        out[qe] = qc
        for de, dc in den.terms.items():
            te = tuple(x + y for x, y in zip(qe, de))
            s = rem.get(te)
            v = qc * dc
            if s is None:
                rem[te] = -v
            else:
                s = s - v
                if s.is_zero():
                    del rem[te]
                else:
                    rem[te] = s
    return LaurentPoly(num.ring, out)


class RatFun:
    """A quotient of Laurent polynomials over Q(q), lightly reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = num.ring.one
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _rf_reduce(num, den)
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = RatFun(other)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QScalar):
            return RatFun(self.num.scale(other), self.den)
        if isinstance(other, LaurentPoly):
            other = RatFun(other)
        return RatFun(self.num * other.num, self.den * other.den)

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inversion of zero")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = RatFun(self.ring.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFun is unhashable (equality is cross-multiplicative)")

    def substitute(self, values):
        d = self.den.substitute(values)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at substitution point")
        return self.num.substitute(values) / d

    def render(self):
        if self.den == self.ring.one:
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())

    __str__ = render

    def __repr__(self):
        return "RatFun(%s)" % self.render()


def _rf_reduce(num, den):
    if num.is_zero():
        return num, num.ring.one
    ns, nc, np_ = _strip_monomial(num)
    ds, dc, dp = _strip_monomial(den)
    shift = tuple(a - b for a, b in zip(ns, ds))
    c = nc * dc.inv()
    if dp.is_scalar():
        return np_.scale(c) * num.ring.monomial(shift), num.ring.one
    quo = _try_exact_div(np_, dp)
    if quo is not None:
        return quo.scale(c) * num.ring.monomial(shift), num.ring.one
    return np_.scale(c) * num.ring.monomial(shift), dp
