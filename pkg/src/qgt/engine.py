"""Normal-form engine for U_q(gl_N).

Elements are stored over an internal basis of normal-ordered monomials in the
triangular matrix generators: products

    t_{j1 i1}^{a_1} ... (lower entries, by root order)  *  K_1^{l_1}...K_N^{l_N}
        *  tbar_{i1 j1}^{b_1} ... (upper entries, by root order)

This basis is in bijection with the usual PBW basis F^r K^lam E^k: each PBW
monomial equals a single internal monomial times an explicit scalar, because
the generator dictionary

    t_{ji} = -(q - q^{-1}) F_{b_ij} K_i,
    tbar_{ij} = (q - q^{-1}) (-1)^{i-j+1} K_i^{-1} E_{b_ij},
    t_{ii} = K_i,   tbar_{ii} = K_i^{-1}

only shuffles diagonal factors.  Straightening an arbitrary word into this
basis uses the quadratic exchange relations of the triangular generators;
rewriting terminates because every correction term is strictly smaller in the
total-degree filtration.

Internal monomials are triples (low, diag, up): low and up are M-tuples of
nonnegative exponents indexed by the positive-root enumeration b_12, b_13,
..., b_1N, b_23, ..., b_{N-1,N}; diag is an N-tuple of integers (Laurent
exponents of the K_i).
"""
from __future__ import annotations

import sys
from itertools import product as iproduct

from qgt.scalar import ONE, QMQI, QScalar, ZERO

sys.setrecursionlimit(200000)

_QMQI_INV = QMQI.inv()


class UqEngine:
    """U_q(gl_N) for a fixed N: monomial straightening and element algebra."""

    def __init__(self, N):
        if N < 1:
            raise ValueError("N must be at least 1")
        self.N = N
        self.roots = [(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
        self.M = len(self.roots)
        self.pos = {r: p for p, r in enumerate(self.roots)}
        self._zlow = (0,) * self.M
        self._zdiag = (0,) * N
        self._unit_mono = (self._zlow, self._zdiag, self._zlow)
        self.zero = Element(self, {})
        self.one = Element(self, {self._unit_mono: ONE})
        self._ma_cache = {}
        self._mm_cache = {}

    # -- generator elements -------------------------------------------------

    def scalar(self, c):
        if isinstance(c, int):
            c = QScalar.from_int(c)
        if c.is_zero():
            return self.zero
        return Element(self, {self._unit_mono: c})

    def K(self, i, e=1):
        self._check_index(i)
        if e == 0:
            return self.one
        d = list(self._zdiag)
        d[i - 1] = e
        return Element(self, {(self._zlow, tuple(d), self._zlow): ONE})

    def t(self, i, j):
        """Matrix generator t_ij (zero when i < j)."""
        self._check_index(i)
        self._check_index(j)
        if i < j:
            return self.zero
        if i == j:
            return self.K(i)
        low = list(self._zlow)
        low[self.pos[(j, i)]] = 1
        return Element(self, {(tuple(low), self._zdiag, self._zlow): ONE})

    def tb(self, i, j):
        """Matrix generator tbar_ij (zero when i > j)."""
        self._check_index(i)
        self._check_index(j)
        if i > j:
            return self.zero
        if i == j:
            return self.K(i, -1)
        up = list(self._zlow)
        up[self.pos[(i, j)]] = 1
        return Element(self, {(self._zlow, self._zdiag, tuple(up)): ONE})

    def Fbeta(self, i, j):
        """Root vector F_{b_ij} = -(q-q^{-1})^{-1} t_{ji} tbar_{ii}."""
        p = self._root_pos(i, j)
        low = list(self._zlow)
        low[p] = 1
        d = list(self._zdiag)
        d[i - 1] = -1
        mono = (tuple(low), tuple(d), self._zlow)
        return Element(self, {mono: -_QMQI_INV})

    def Ebeta(self, i, j):
        """Root vector E_{b_ij} = (-1)^{i-j+1}(q-q^{-1})^{-1} t_{ii} tbar_{ij}."""
        p = self._root_pos(i, j)
        up = list(self._zlow)
        up[p] = 1
        d = list(self._zdiag)
        d[i - 1] = 1
        mono = (self._zlow, tuple(d), tuple(up))
        c = _QMQI_INV if (j - i) % 2 == 1 else -_QMQI_INV
        return Element(self, {mono: c})

    def E(self, i):
        return self.Ebeta(i, i + 1)

    def F(self, i):
        return self.Fbeta(i, i + 1)

    def _check_index(self, i):
        if not 1 <= i <= self.N:
            raise ValueError("index %d out of range for N=%d" % (i, self.N))

    def _root_pos(self, i, j):
        if not (1 <= i < j <= self.N):
            raise ValueError("(%d,%d) is not a positive root for N=%d" % (i, j, self.N))
        return self.pos[(i, j)]

    # -- PBW basis bridge ----------------------------------------------------

    def pbw_to_internal(self, r, lam, k):
        """Internal image of F^r K^lam E^k; returns (coeff, mono)."""
        c = ONE
        diag = list(lam)
        # each F_{b_ij} contributes t_{ji} K_i^{-1}; collecting the K_i^{-1}
        # into the diagonal block costs q-powers from passing later t's, and
        # likewise for the K_i of each E_{b_ij} moving right past earlier
        # tbar's.  Powers of a single F (or E) also self-interact.
        qshift = 0
        for p, (i, j) in enumerate(self.roots):
            a = r[p]
            if a == 0:
                continue
            c = c * (-_QMQI_INV) ** a
            diag[i - 1] -= a
            # K_i^{-1} moves right past the remaining t_{j'i'} factors of this
            # and later roots: t_{j'i'} K_i^{-1} picks q^{+delta_{i,i'}} when
            # passing (K_i^e X = q^{e(d_row - d_col)} X K_i^e with X lower).
            qshift += a * (a - 1) // 2
            for p2 in range(p + 1, self.M):
                i2, _ = self.roots[p2]
                if i2 == i:
                    qshift += a * r[p2]
        for p, (i, j) in enumerate(self.roots):
            b = k[p]
            if b == 0:
                continue
            base = _QMQI_INV if (j - i) % 2 == 1 else -_QMQI_INV
            c = c * base ** b
            diag[i - 1] += b
            # K_i moves left past the tbar factors of earlier roots and of
            # its own block: tbar_{i'j'} K_i = q^{-delta_{i,i'}} K_i tbar_{i'j'}.
            qshift -= b * (b - 1) // 2
            for p2 in range(p):
                i2, _ = self.roots[p2]
                if i2 == i:
                    qshift -= b * k[p2]
        if qshift:
            c = c * QScalar.q_power(qshift)
        return c, (tuple(r), tuple(diag), tuple(k))

    def internal_to_pbw(self, mono):
        """PBW monomial equal to the internal monomial; returns (coeff, (r, lam, k))."""
        low, diag, up = mono
        lam = list(diag)
        for p, (i, j) in enumerate(self.roots):
            lam[i - 1] += low[p] - up[p]
        c, m2 = self.pbw_to_internal(low, lam, up)
        assert m2 == mono
        return c.inv(), (low, tuple(lam), up)

    def from_pbw(self, r, lam, k, coeff=ONE):
        c, mono = self.pbw_to_internal(r, lam, k)
        c = c * coeff
        if c.is_zero():
            return self.zero
        return Element(self, {mono: c})

    def enumerate_pbw(self, bound):
        """All PBW monomials (r, lam, k) with every |exponent| <= bound."""
        nn = range(0, bound + 1)
        zz = range(-bound, bound + 1)
        out = []
        for r in iproduct(nn, repeat=self.M):
            for lam in iproduct(zz, repeat=self.N):
                for k in iproduct(nn, repeat=self.M):
                    out.append((r, lam, k))
        return out

    # -- straightening core --------------------------------------------------

    def _t_atom(self, r, c):
        """Atom for the generator t_rc, or None when it is zero."""
        if r > c:
            return ("L", self.pos[(c, r)])
        if r == c:
            return ("D", r, 1)
        return None

    def _tb_atom(self, r, c):
        if r < c:
            return ("U", self.pos[(r, c)])
        if r == c:
            return ("D", r, -1)
        return None

    def _swap_LL(self, pa, pb):
        """t_{j1 i1} t_{j2 i2} (root pa then pb, pa > pb) rewritten.

        Returns [(coeff, word)] with words read left to right.
        """
        i1, j1 = self.roots[pa]
        i2, j2 = self.roots[pb]
        dij = 1 if j1 == j2 else 0
        dab = 1 if i1 == i2 else 0
        main = QScalar.q_power(dab - dij)
        sgn = (1 if i2 < i1 else 0) - (1 if j1 < j2 else 0)
        corr = None
        if sgn:
            a1 = self._t_atom(j2, i1)
            a2 = self._t_atom(j1, i2)
            if a1 is not None and a2 is not None:
                c = QMQI * QScalar.q_power(-dij)
                if sgn < 0:
                    c = -c
                corr = (c, (a1, a2))
        return self._assemble(main, (("L", pb), ("L", pa)), corr, (("L", pa), ("L", pb)))

    def _swap_UU(self, pa, pb):
        """tbar_{i1 j1} tbar_{i2 j2} (root pa then pb, pa > pb) rewritten."""
        i1, j1 = self.roots[pa]
        i2, j2 = self.roots[pb]
        dij = 1 if i1 == i2 else 0
        dab = 1 if j1 == j2 else 0
        main = QScalar.q_power(dab - dij)
        sgn = (1 if j2 < j1 else 0) - (1 if i1 < i2 else 0)
        corr = None
        if sgn:
            a1 = self._tb_atom(i2, j1)
            a2 = self._tb_atom(i1, j2)
            if a1 is not None and a2 is not None:
                c = QMQI * QScalar.q_power(-dij)
                if sgn < 0:
                    c = -c
                corr = (c, (a1, a2))
        return self._assemble(main, (("U", pb), ("U", pa)), corr, (("U", pa), ("U", pb)))

    @staticmethod
    def _assemble(main_coeff, main_word, corr, input_word):
        """Combine the reordered pair with its correction term.

        When two generators share a row or a column the relation's correction
        term is the input pair itself; solving for it turns the exchange into
        a plain q-commutation instead of an infinite rewrite.
        """
        if corr is None:
            return [(main_coeff, main_word)]
        c, word = corr
        if word == input_word:
            return [(main_coeff * (ONE - c).inv(), main_word)]
        if word == main_word:
            return [(main_coeff + c, main_word)]
        return [(main_coeff, main_word), (c, word)]

    def _swap_UL(self, pu, pl):
        """tbar_{ia} t_{jb} (upper root pu, then lower root pl) rewritten."""
        i, a = self.roots[pu]
        b, j = self.roots[pl]
        dij = 1 if i == j else 0
        dab = 1 if a == b else 0
        out = [(QScalar.q_power(dab - dij), (("L", pl), ("U", pu)))]
        pref = QMQI * QScalar.q_power(-dij)
        if b < a:
            a1 = self._t_atom(j, a)
            a2 = self._tb_atom(i, b)
            if a1 is not None and a2 is not None:
                out.append((pref, (a1, a2)))
        if i < j:
            a1 = self._tb_atom(j, a)
            a2 = self._t_atom(i, b)
            if a1 is not None and a2 is not None:
                out.append((-pref, (a1, a2)))
        return out

    def _mono_atom(self, mono, atom):
        """Product mono * atom as a dict {internal monomial: coefficient}."""
        key = (mono, atom)
        hit = self._ma_cache.get(key)
        if hit is not None:
            return hit
        low, diag, up = mono
        kind = atom[0]
        if kind == "D":
            _, i, e = atom
            s = 0
            for p, m in enumerate(up):
                if m:
                    r, c = self.roots[p]
                    s += m * ((1 if i == r else 0) - (1 if i == c else 0))
            d = list(diag)
            d[i - 1] += e
            out = {(low, tuple(d), up): QScalar.q_power(-e * s)}
        elif kind == "U":
            p = atom[1]
            pmax = self._max_pos(up)
            if pmax is None or pmax <= p:
                u = list(up)
                u[p] += 1
                out = {(low, diag, tuple(u)): ONE}
            else:
                rest = self._drop_up(mono, pmax)
                out = self._apply_swaps(rest, self._swap_UU(pmax, p))
        else:  # 'L'
            p = atom[1]
            pmax = self._max_pos(up)
            if pmax is not None:
                rest = self._drop_up(mono, pmax)
                out = self._apply_swaps(rest, self._swap_UL(pmax, p))
            elif any(diag):
                i2, j2 = self.roots[p]
                s = diag[j2 - 1] - diag[i2 - 1]
                c0 = QScalar.q_power(s)
                base = self._mono_atom((low, self._zdiag, self._zlow), atom)
                out = {}
                for (l2, d2, u2), c in base.items():
                    d = tuple(x + y for x, y in zip(d2, diag))
                    _acc(out, (l2, d, u2), c * c0)
            else:
                pmax = self._max_pos(low)
                if pmax is None or pmax <= p:
                    l2 = list(low)
                    l2[p] += 1
                    out = {(tuple(l2), diag, up): ONE}
                else:
                    l2 = list(low)
                    l2[pmax] -= 1
                    rest = (tuple(l2), diag, up)
                    out = self._apply_swaps(rest, self._swap_LL(pmax, p))
        self._ma_cache[key] = out
        return out

    @staticmethod
    def _max_pos(v):
        for p in range(len(v) - 1, -1, -1):
            if v[p]:
                return p
        return None

    @staticmethod
    def _drop_up(mono, p):
        low, diag, up = mono
        u = list(up)
        u[p] -= 1
        return (low, diag, tuple(u))

    def _apply_swaps(self, rest, swaps):
        out = {}
        for c, word in swaps:
            terms = {rest: c}
            for atom in word:
                terms = self._terms_atom(terms, atom)
            for m, cc in terms.items():
                _acc(out, m, cc)
        return out

    def _terms_atom(self, terms, atom):
        out = {}
        for m, c in terms.items():
            for m2, c2 in self._mono_atom(m, atom).items():
                _acc(out, m2, c * c2)
        return out

    def _mono_word(self, mono, word):
        terms = {mono: ONE}
        for atom in word:
            terms = self._terms_atom(terms, atom)
        return terms

    @staticmethod
    def _atoms_of(mono):
        low, diag, up = mono
        word = []
        for p, m in enumerate(low):
            word.extend((("L", p),) * m)
        for i, e in enumerate(diag):
            if e:
                word.append(("D", i + 1, e))
        for p, m in enumerate(up):
            word.extend((("U", p),) * m)
        return tuple(word)

    def _mono_mono(self, m1, m2):
        key = (m1, m2)
        hit = self._mm_cache.get(key)
        if hit is None:
            hit = self._mono_word(m1, self._atoms_of(m2))
            self._mm_cache[key] = hit
        return hit


def _acc(d, k, c):
    s = d.get(k)
    if s is None:
        if not c.is_zero():
            d[k] = c
    else:
        s = s + c
        if s.is_zero():
            del d[k]
        else:
            d[k] = s


class Element:
    """An element of U_q(gl_N): map from internal monomials to coefficients."""

    __slots__ = ("engine", "terms")

    def __init__(self, engine, terms):
        self.engine = engine
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return Element(self.engine, out)

    def __neg__(self):
        return Element(self.engine, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = QScalar.from_int(c)
        if c.is_zero():
            return self.engine.zero
        if c.is_one():
            return self
        return Element(self.engine, {m: x * c for m, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (QScalar, int)):
            return self.scale(other)
        self._check(other)
        eng = self.engine
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, cc in eng._mono_mono(m1, m2).items():
                    _acc(out, m, c * cc)
        return Element(eng, out)

    def __rmul__(self, other):
        if isinstance(other, (QScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("general elements have no inverse")
        out = self.engine.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.engine is other.engine
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _check(self, other):
        if not isinstance(other, Element) or other.engine is not self.engine:
            raise TypeError("operands belong to different algebras")

    # -- PBW view ------------------------------------------------------------

    def pbw_terms(self):
        """List of ((r, lam, k), coeff) in a deterministic order."""
        out = []
        for mono in sorted(self.terms):
            c, pbw = self.engine.internal_to_pbw(mono)
            out.append((pbw, self.terms[mono] * c))
        return out

    def pbw_coefficient(self, r, lam, k):
        c, mono = self.engine.pbw_to_internal(r, lam, k)
        x = self.terms.get(mono)
        if x is None:
            return ZERO
        return x * c.inv()

    def k_part(self):
        """The sub-sum of monomials with no E- and no F-factors (K-only)."""
        eng = self.engine
        z = eng._zlow
        out = {m: c for m, c in self.terms.items() if m[0] == z and m[2] == z}
        return Element(eng, out)

    def support_levels(self):
        """Largest algebra index occurring in any monomial (0 for scalars)."""
        top = 0
        for low, diag, up in self.terms:
            for p, (i, j) in enumerate(self.engine.roots):
                if low[p] or up[p]:
                    top = max(top, j)
            for i, e in enumerate(diag):
                if e:
                    top = max(top, i + 1)
        return top

    def __repr__(self):
        from qgt.exprs import render_element

        return render_element(self)
