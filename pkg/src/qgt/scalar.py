"""Exact arithmetic in the field Q(q) of rational functions in the deformation
parameter q.

q is treated as a formal transcendental throughout: no numeric specialization,
no root-of-unity behavior.  Values are fractions of integer-coefficient
polynomials in q, kept in a canonical reduced form so that equality is
structural equality.
"""
from __future__ import annotations

import re
from functools import lru_cache
from math import gcd as _igcd

# ---------------------------------------------------------------------------
# dense univariate polynomials over Z, as tuples of coefficients (ascending
# powers); the zero polynomial is the empty tuple
# ---------------------------------------------------------------------------


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _pcontent(a):
    g = 0
    for x in a:
        g = _igcd(g, abs(x))
        if g == 1:
            return 1
    return g


def _pprim(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = _pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _pdiv_exact(a, b):
    """Exact division of a by b over Q, returned with integer coefficients.

    Assumes b | a in Q[q] and the quotient has integer coefficients
    (true when dividing by a gcd of integer polynomials after content
    handling).  Raises ValueError if not exact.
    """
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return ()
    if b == (1,):
        return a
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, db - 1, -1):
        if rem[i] == 0:
            continue
        if rem[i] % lb != 0:
            raise ValueError("inexact polynomial division")
        qc = rem[i] // lb
        out[i - db] = qc
        for j in range(db + 1):
            rem[i - db + j] -= qc * b[j]
    if any(rem):
        raise ValueError("inexact polynomial division")
    return _trim(out)


def _prem(a, b):
    """Pseudo-remainder of a by b (both nonzero)."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a
    lb = b[-1]
    rem = list(a)
    for i in range(da, db - 1, -1):
        if rem[i] == 0:
            continue
        c = rem[i]
        for j in range(len(rem)):
            rem[j] *= lb
        for j in range(db + 1):
            rem[i - db + j] -= c * b[j]
        rem[i] = 0
    return _trim(rem)


@lru_cache(maxsize=1 << 16)
def _pgcd(a, b):
    """Primitive gcd in Z[q] (positive leading coefficient); content excluded."""
    a, b = _pprim(a), _pprim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pprim(_prem(a, b))
        a, b = b, r
    return a


# ---------------------------------------------------------------------------
# QScalar
# ---------------------------------------------------------------------------


class QScalar:
    """A rational function in q over Z, in canonical reduced form.

    Canonical form: numerator and denominator are coprime in Z[q]
    (including integer content) and the denominator has positive leading
    coefficient.  Equality and hashing are structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=(1,), _reduced=False):
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = hash((num, den))

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_int(n):
        if n == 0:
            return ZERO
        return QScalar((n,), (1,), _reduced=True)

    @staticmethod
    def from_fraction(p, r):
        return QScalar((p,), (r,))

    @staticmethod
    def q_power(n):
        return _qpow(n)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        return _add(self, other)

    def __sub__(self, other):
        return _add(self, _neg(other))

    def __neg__(self):
        return _neg(self)

    def __mul__(self, other):
        return _mul(self, other)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inversion of zero scalar")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return QScalar(num, den, _reduced=True)

    def __truediv__(self, other):
        return _mul(self, other.inv())

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = _mul(out, base)
            base = _mul(base, base)
            n >>= 1
        return out

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, QScalar)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return self._hash

    # -- rendering ----------------------------------------------------------

    def render(self):
        if not self.num:
            return "0"
        if self.den == (1,):
            return _poly_str(self.num)
        return "(%s)/(%s)" % (_poly_str(self.num), _poly_str(self.den))

    __str__ = render

    def __repr__(self):
        return "QScalar(%s)" % self.render()

    @staticmethod
    def parse(text):
        return _parse_scalar(text)


def _reduce(num, den):
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    if den == (1,):
        return num, den
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    if den == (1,):
        return num, den
    # strip common power of q
    vn = next(i for i, x in enumerate(num) if x)
    vd = next(i for i, x in enumerate(den) if x)
    v = vn if vn < vd else vd
    if v:
        num, den = num[v:], den[v:]
    # integer content
    cn, cd = _pcontent(num), _pcontent(den)
    g = _igcd(cn, cd)
    if g > 1:
        num = tuple(x // g for x in num)
        den = tuple(x // g for x in den)
    if den == (1,):
        return num, den
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


@lru_cache(maxsize=1 << 18)
def _add(a, b):
    if not a.num:
        return b
    if not b.num:
        return a
    if a.den == b.den:
        return QScalar(_padd(a.num, b.num), a.den)
    return QScalar(
        _padd(_pmul(a.num, b.den), _pmul(b.num, a.den)), _pmul(a.den, b.den)
    )


@lru_cache(maxsize=1 << 18)
def _mul(a, b):
    if not a.num or not b.num:
        return ZERO
    if a.den == (1,) and b.den == (1,):
        return QScalar(_pmul(a.num, b.num), (1,), _reduced=True)
    return QScalar(_pmul(a.num, b.num), _pmul(a.den, b.den))


def _neg(a):
    return QScalar(_pneg(a.num), a.den, _reduced=True)


@lru_cache(maxsize=4096)
def _qpow(n):
    if n >= 0:
        return QScalar((0,) * n + (1,), (1,), _reduced=True)
    return QScalar((1,), (0,) * (-n) + (1,), _reduced=True)


ZERO = QScalar((), (1,), _reduced=True)
ONE = QScalar((1,), (1,), _reduced=True)
Q = QScalar((0, 1), (1,), _reduced=True)
QINV = QScalar((1,), (0, 1), _reduced=True)
QMQI = Q - QINV  # q - q^{-1}


# ---------------------------------------------------------------------------
# text form: polynomials like "q^2-1", fractions like "(q^2-1)/(q)"
# ---------------------------------------------------------------------------


def _poly_str(p):
    parts = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        ac = abs(c)
        if e == 0:
            body = str(ac)
        else:
            var = "q" if e == 1 else "q^%d" % e
            body = var if ac == 1 else "%d%s" % (ac, var)
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


_TOKEN = re.compile(r"\s*(\d+|q|\^|\+|\-|\*|/|\(|\))")


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError("bad scalar syntax at %r" % text[pos:])
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _ScalarParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise ValueError("trailing input in scalar expression")
        return v

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.power()
        while self.peek() in ("*", "/") or self.peek() in ("q", "(") or (
            self.peek() or ""
        ).isdigit():
            if self.peek() in ("*", "/"):
                op = self.take()
                w = self.power()
                v = v * w if op == "*" else v / w
            else:
                v = v * self.power()
        return v

    def power(self):
        v = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            e = self.take()
            if not e or not e.isdigit():
                raise ValueError("bad exponent in scalar expression")
            v = v ** (sign * int(e))
        return v

    def atom(self):
        t = self.take()
        if t is None:
            raise ValueError("unexpected end of scalar expression")
        if t == "q":
            return Q
        if t.isdigit():
            return QScalar.from_int(int(t))
        if t == "(":
            v = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parentheses")
            return v
        raise ValueError("unexpected token %r" % t)


def _parse_scalar(text):
    return _ScalarParser(_tokenize(text)).parse()
