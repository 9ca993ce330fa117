"""De Concini-Kac filtration tools: degree vectors, leading terms, the
q-commuting associated graded algebra, permutation combinatorics for the
determinant-like generators, and the brute-force leading-permutation oracle.

Degree significance order (most to least significant): total height first,
then F-exponents from the largest root down, then E-exponents from the
smallest root up.  K-exponents contribute nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from qgt.scalar import ONE, QScalar


def root_height(root):
    i, j = root
    return j - i


def root_form(r1, r2):
    """Standard bilinear form of two positive roots e_i - e_j."""
    (i, j), (k, l) = r1, r2
    return (
        (1 if i == k else 0)
        - (1 if i == l else 0)
        - (1 if j == k else 0)
        + (1 if j == l else 0)
    )


def weight_root_form(alpha, root):
    """Form of a K-weight (integer N-vector) against a positive root."""
    i, j = root
    return alpha[i - 1] - alpha[j - 1]


@dataclass(frozen=True, order=True)
class DegreeVector:
    """Comparison key of the De Concini-Kac total degree.

    Stored directly in significance order so dataclass ordering is the
    filtration order: (ht, rdeg_M..rdeg_1, kdeg_1..kdeg_M).
    """

    ht: int
    rdeg_desc: tuple
    kdeg: tuple

    @property
    def rdeg(self):
        return tuple(reversed(self.rdeg_desc))

    def __add__(self, other):
        return DegreeVector(
            self.ht + other.ht,
            tuple(a + b for a, b in zip(self.rdeg_desc, other.rdeg_desc)),
            tuple(a + b for a, b in zip(self.kdeg, other.kdeg)),
        )


def degree_of_exponents(engine, r, k):
    ht = 0
    for p, root in enumerate(engine.roots):
        ht += (r[p] + k[p]) * root_height(root)
    return DegreeVector(ht, tuple(reversed(r)), tuple(k))


def total_degree(engine, pbw):
    """Degree of a PBW monomial (r, lam, k); the K-part is ignored."""
    r, _lam, k = pbw
    return degree_of_exponents(engine, r, k)


def element_degree(a):
    """Maximal degree over the monomials of a nonzero element."""
    if a.is_zero():
        raise ValueError("the zero element has no degree")
    eng = a.engine
    return max(degree_of_exponents(eng, m[0], m[2]) for m in a.terms)


def leading_term(a):
    """The unique maximal-degree PBW monomial of a with its coefficient.

    Raises ValueError on zero input or when the maximum is not unique
    (several monomials share the maximal degree).
    """
    mono, coeff = leading_internal(a)
    c2, pbw = a.engine.internal_to_pbw(mono)
    return pbw, coeff * c2


def leading_internal(a):
    """Leading term of a over the internal (triangular-generator) basis."""
    if a.is_zero():
        raise ValueError("the zero element has no leading term")
    eng = a.engine
    best, best_deg = None, None
    tie = False
    for m in a.terms:
        d = degree_of_exponents(eng, m[0], m[2])
        if best_deg is None or d > best_deg:
            best, best_deg, tie = m, d, False
        elif d == best_deg:
            tie = True
    if tie:
        raise ValueError("leading term is not unique at degree %r" % (best_deg,))
    return best, a.terms[best]


# ---------------------------------------------------------------------------
# associated graded algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrMonomial:
    """A monomial of the q-commuting graded algebra, in PBW coordinates."""

    coeff: QScalar
    rdeg: tuple
    alpha: tuple
    kdeg: tuple


def gr_multiply(engine, x, y):
    """Product in the associated graded algebra.

    Exponents add; the coefficient picks up the q-power of re-sorting the
    concatenated word, using the graded exchange relations: K-weights scale
    E/F root vectors by q^{+-(alpha,beta)}, equal-family root vectors
    q-commute by q^{(beta_i,beta_j)}, and E against F commute on the nose.
    """
    roots = engine.roots
    s = 0
    for p, root in enumerate(roots):
        if y.rdeg[p]:
            s -= y.rdeg[p] * weight_root_form(x.alpha, root)
        if x.kdeg[p]:
            s -= x.kdeg[p] * weight_root_form(y.alpha, root)
    for p1 in range(len(roots)):
        a_r, a_k = x.rdeg[p1], x.kdeg[p1]
        if not (a_r or a_k):
            continue
        for p2 in range(p1):
            if a_r and y.rdeg[p2]:
                s += a_r * y.rdeg[p2] * root_form(roots[p1], roots[p2])
            if a_k and y.kdeg[p2]:
                s += a_k * y.kdeg[p2] * root_form(roots[p1], roots[p2])
    coeff = x.coeff * y.coeff * QScalar.q_power(s)
    return GrMonomial(
        coeff,
        tuple(a + b for a, b in zip(x.rdeg, y.rdeg)),
        tuple(a + b for a, b in zip(x.alpha, y.alpha)),
        tuple(a + b for a, b in zip(x.kdeg, y.kdeg)),
    )


def gr_of_pbw(pbw, coeff=ONE):
    r, lam, k = pbw
    return GrMonomial(coeff, tuple(r), tuple(lam), tuple(k))


# ---------------------------------------------------------------------------
# permutation combinatorics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PermRecord:
    sigma: tuple
    ht: int
    c_less: int
    c_greater: int
    derangement: bool


def perm_stats(sigma):
    """sigma is a tuple of 1-based images (sigma[i-1] = sigma(i))."""
    ht = sum(abs(v - (i + 1)) for i, v in enumerate(sigma))
    c_less = sum(1 for i, v in enumerate(sigma) if v < i + 1)
    c_greater = sum(1 for i, v in enumerate(sigma) if v > i + 1)
    der = all(v != i + 1 for i, v in enumerate(sigma))
    return PermRecord(tuple(sigma), ht, c_less, c_greater, der)


def inversions(sigma):
    n = len(sigma)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b]
    )


def term_admissible(sigma, s, r):
    st = perm_stats(sigma)
    return st.c_less <= s and st.c_greater <= r - s


def theorem_perm(r, s):
    """sigma = (1 2 ... r)^s, the permutation of the leading-term statement."""
    return tuple(((i + s - 1) % r) + 1 for i in range(1, r + 1))


def perm_term_degree(engine, sigma, s):
    """Degree of any d-term built on sigma (column j carries t_{sigma(j) j}).

    Rows below the diagonal contribute F-exponents, rows above contribute
    E-exponents, fixed points only diagonal factors.  The degree does not
    depend on how the remaining k-choices fall on fixed points.
    """
    M = engine.M
    rdeg = [0] * M
    kdeg = [0] * M
    for j, v in enumerate(sigma, start=1):
        if v > j:
            rdeg[engine.pos[(j, v)]] += 1
        elif v < j:
            kdeg[engine.pos[(v, j)]] += 1
    return degree_of_exponents(engine, tuple(rdeg), tuple(kdeg))


def term_internal_monomial(engine, sigma, kvec):
    """Internal monomial of the (sigma, k) term, ignoring the coefficient."""
    M = engine.M
    low = [0] * M
    up = [0] * M
    diag = [0] * engine.N
    for j, v in enumerate(sigma, start=1):
        if v > j:
            low[engine.pos[(j, v)]] += 1
        elif v < j:
            up[engine.pos[(v, j)]] += 1
        else:
            diag[j - 1] += 1 if kvec[j - 1] == 0 else -1
    return (tuple(low), tuple(diag), tuple(up))


def admissible_terms(r, s):
    """All (sigma, k) index pairs of nonzero terms of the (r, s) generator.

    k_j is forced to 0 below the diagonal and 1 above it; the remaining
    budget of 1-entries distributes freely over fixed points.
    """
    out = []
    for sigma in permutations(range(1, r + 1)):
        st = perm_stats(sigma)
        if st.c_less > s or st.c_greater > r - s:
            continue
        fixed = [j for j in range(1, r + 1) if sigma[j - 1] == j]
        need = s - st.c_less
        base = [0] * r
        for j, v in enumerate(sigma, start=1):
            if v < j:
                base[j - 1] = 1
        for ones in combinations(fixed, need):
            k = list(base)
            for j in ones:
                k[j - 1] = 1
            out.append((sigma, tuple(k)))
    return out


def brute_force_leading_perm(engine, r, s):
    """Argmax of the term degree over all admissible (sigma, k) pairs.

    Independent of the straightening engine: degrees are additive over the
    term's factors, so each term's degree is read off its index data.  A tie
    for the maximal monomial is an invariant violation and raises.
    """
    best = None
    best_key = None
    tie = False
    for sigma, k in admissible_terms(r, s):
        mono = term_internal_monomial(engine, sigma, k)
        deg = degree_of_exponents(engine, mono[0], mono[2])
        key = (deg, mono)
        if best_key is None or key[0] > best_key[0]:
            best, best_key, tie = (sigma, k, mono), key, False
        elif key[0] == best_key[0]:
            if key[1] == best_key[1]:
                tie = True
            # distinct monomials of equal degree both compete for the
            # maximum; that alone already breaks uniqueness
            else:
                tie = True
    if tie:
        raise ValueError("maximal term is not unique for (r,s)=(%d,%d)" % (r, s))
    return best[0]


def theorem_monomial(engine, r, s):
    """Internal monomial of the stated leading term of the (r,s) generator."""
    M = engine.M
    low = [0] * M
    up = [0] * M
    diag = [0] * engine.N
    for i in range(1, r - s + 1):
        low[engine.pos[(i, i + s)]] += 1
    for i in range(1, s + 1):
        if r == s:
            diag[i - 1] -= 1
        else:
            up[engine.pos[(i, r - s + i)]] += 1
    return (tuple(low), tuple(diag), tuple(up))


def count_marker(a, r, s):
    """Exponent of the marker generator tbar_sr in the leading term of a."""
    mono, _ = leading_internal(a)
    return mono[2][a.engine.pos[(s, r)]]


def verify_lt_theorem(engine, rmax=None):
    """Cross-check the leading term of every (r,s) generator, r <= rmax.

    Each generator's engine-computed leading monomial must equal both the
    stated cyclic-permutation monomial and the brute-force oracle's argmax.
    """
    from qgt.gtsub import d_gen

    if rmax is None:
        rmax = engine.N
    pairs = []
    ok = True
    for r in range(1, rmax + 1):
        for s in range(1, r + 1):
            d = d_gen(engine, r, s)
            mono, coeff = leading_internal(d)
            tmono = theorem_monomial(engine, r, s)
            sig = theorem_perm(r, s)
            osig = brute_force_leading_perm(engine, r, s)
            match = mono == tmono and sig == osig and not coeff.is_zero()
            ok = ok and match
            pairs.append(
                {
                    "r": r,
                    "s": s,
                    "theorem_perm": list(sig),
                    "oracle_perm": list(osig),
                    "match": bool(match),
                    "lt_monomial": _mono_str(engine, mono),
                }
            )
    return {"N": engine.N, "ok": ok, "pairs": pairs}


def _mono_str(engine, mono):
    low, diag, up = mono
    parts = []
    for p, (i, j) in enumerate(engine.roots):
        if low[p]:
            parts.append("t[%d,%d]%s" % (j, i, "^%d" % low[p] if low[p] > 1 else ""))
    for i, e in enumerate(diag, start=1):
        if e:
            parts.append("K[%d]%s" % (i, "^%d" % e if e != 1 else ""))
    for p, (i, j) in enumerate(engine.roots):
        if up[p]:
            parts.append("tb[%d,%d]%s" % (i, j, "^%d" % up[p] if up[p] > 1 else ""))
    return "*".join(parts) if parts else "1"
