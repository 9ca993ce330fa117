"""Skew monoid ring realization: the Laurent field in the triangular X
variables, the product-of-type-D-Weyl-groups action, the free abelian monoid
of q-scaling automorphisms, the embedding of the quantum group, and the
invariant generators with the splitting polynomial.
"""
from __future__ import annotations

from itertools import combinations

from qgt.laurent import LaurentRing, RatFun
from qgt.scalar import ONE, QMQI, QScalar

_QMQI_INV2 = (QMQI * QMQI).inv()


class GaloisContext:
    """Variables X_mi (1 <= i <= m <= N), the group G, and the monoid."""

    def __init__(self, N):
        self.N = N
        self.vars = [(m, i) for m in range(1, N + 1) for i in range(1, m + 1)]
        self.vindex = {v: p for p, v in enumerate(self.vars)}
        self.ring = LaurentRing(["X%d_%d" % v for v in self.vars])
        self.deltas = [(m, i) for m in range(1, N) for i in range(1, m + 1)]
        self.dindex = {v: p for p, v in enumerate(self.deltas)}
        self.zero_m = (0,) * len(self.deltas)

    def X(self, m, i, power=1):
        return self.ring.gen("X%d_%d" % (m, i), power)

    def delta(self, m, i, power=1):
        e = list(self.zero_m)
        e[self.dindex[(m, i)]] = power
        return tuple(e)

    # -- monoid action -------------------------------------------------------

    def act_M_poly(self, mvec, poly):
        """delta^{mi} scales X_mi by q^{-1}; a monoid vector acts q-diagonally."""
        if not any(mvec):
            return poly
        out = {}
        for e, c in poly.terms.items():
            s = 0
            for (m, i), mv in zip(self.deltas, mvec):
                if mv:
                    ex = e[self.vindex[(m, i)]]
                    if ex:
                        s -= mv * ex
            out[e] = c * QScalar.q_power(s) if s else c
        return type(poly)(poly.ring, out)

    def act_M(self, mvec, f):
        if isinstance(f, RatFun):
            return RatFun(
                self.act_M_poly(mvec, f.num), self.act_M_poly(mvec, f.den)
            )
        return self.act_M_poly(mvec, f)

    # -- group ---------------------------------------------------------------

    def identity_g(self):
        return tuple(
            (tuple(range(1, m + 1)), (0,) * m) for m in range(1, self.N + 1)
        )

    def g_transposition(self, m, i):
        """Swap X_mi and X_m,i+1."""
        g = [list(x) for x in self.identity_g()]
        zeta = list(g[m - 1][0])
        zeta[i - 1], zeta[i] = zeta[i], zeta[i - 1]
        g[m - 1][0] = tuple(zeta)
        return tuple((tuple(z), tuple(a)) for z, a in g)

    def g_double_sign(self, m):
        """Flip the signs of X_m1 and X_m2 (even sign vector)."""
        g = [list(x) for x in self.identity_g()]
        alpha = [0] * m
        alpha[0] = alpha[1] = 1
        g[m - 1][1] = tuple(alpha)
        return tuple((tuple(z), tuple(a)) for z, a in g)

    def group_generators(self):
        gens = []
        for m in range(2, self.N + 1):
            for i in range(1, m):
                gens.append(("swap(%d;%d,%d)" % (m, i, i + 1), self.g_transposition(m, i)))
            gens.append(("signs(%d;1,2)" % m, self.g_double_sign(m)))
        return gens

    def act_G_poly(self, g, poly):
        out = {}
        for e, c in poly.terms.items():
            e2 = [0] * len(e)
            sgn = 0
            for p, ex in enumerate(e):
                if ex == 0:
                    continue
                m, i = self.vars[p]
                zeta, alpha = g[m - 1]
                e2[self.vindex[(m, zeta[i - 1])]] += ex
                sgn += alpha[i - 1] * ex
            e2 = tuple(e2)
            cc = -c if sgn % 2 else c
            cur = out.get(e2)
            if cur is None:
                out[e2] = cc
            else:
                cur = cur + cc
                if cur.is_zero():
                    del out[e2]
                else:
                    out[e2] = cur
        return type(poly)(poly.ring, out)

    def act_G(self, g, f):
        if isinstance(f, RatFun):
            return RatFun(self.act_G_poly(g, f.num), self.act_G_poly(g, f.den))
        return self.act_G_poly(g, f)

    def conj_monoid(self, g, mvec):
        """g . delta^{mi} . g^{-1} = delta^{m, zeta_m(i)}."""
        out = [0] * len(mvec)
        for (m, i), mv in zip(self.deltas, mvec):
            if mv:
                zeta = g[m - 1][0]
                out[self.dindex[(m, zeta[i - 1])]] += mv
        return tuple(out)


class SkewElement:
    """Finite sum of (rational function) * (monoid element)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {m: f for m, f in terms.items() if not f.is_zero()}

    @staticmethod
    def from_ratfun(ctx, f, mvec=None):
        if mvec is None:
            mvec = ctx.zero_m
        return SkewElement(ctx, {mvec: f})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, f in other.terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = f
            else:
                out[m] = cur + f
        return SkewElement(self.ctx, out)

    def __neg__(self):
        return SkewElement(self.ctx, {m: -f for m, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QScalar):
            return self.scale(other)
        ctx = self.ctx
        out = {}
        for m1, f1 in self.terms.items():
            for m2, f2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                f = f1 * ctx.act_M(m1, f2)
                cur = out.get(m)
                out[m] = f if cur is None else cur + f
        return SkewElement(ctx, out)

    def scale(self, c):
        if isinstance(c, int):
            c = QScalar.from_int(c)
        return SkewElement(self.ctx, {m: f * c for m, f in self.terms.items()})

    def commutator(self, other):
        return self * other - other * self

    def apply_G(self, g):
        ctx = self.ctx
        out = {}
        for m, f in self.terms.items():
            m2 = ctx.conj_monoid(g, m)
            f2 = ctx.act_G(g, f)
            cur = out.get(m2)
            out[m2] = f2 if cur is None else cur + f2
        return SkewElement(ctx, out)

    def is_G_invariant(self):
        return all(
            (self.apply_G(g) - self).is_zero()
            for _, g in self.ctx.group_generators()
        )

    def __eq__(self, other):
        return isinstance(other, SkewElement) and (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "SkewElement(0)"
        parts = []
        for m in sorted(self.terms):
            lbl = "*".join(
                "d[%d,%d]%s" % (mi[0], mi[1], "^%d" % v if v != 1 else "")
                for mi, v in zip(self.ctx.deltas, m)
                if v
            )
            parts.append("(%s)%s" % (self.terms[m].render(), "*" + lbl if lbl else ""))
        return "SkewElement(%s)" % " + ".join(parts)


# ---------------------------------------------------------------------------
# the embedding
# ---------------------------------------------------------------------------


def _pair(ctx, a, b):
    """X_a X_b^{-1} - X_a^{-1} X_b for variable labels a=(m,i), b=(k,j)."""
    return ctx.X(*a) * ctx.X(b[0], b[1], -1) - ctx.X(a[0], a[1], -1) * ctx.X(*b)


def A_plus(ctx, m, i):
    num = ctx.ring.one
    for j in range(1, m + 2):
        num = num * _pair(ctx, (m + 1, j), (m, i))
    den = ctx.ring.one
    for j in range(1, m + 1):
        if j != i:
            den = den * _pair(ctx, (m, j), (m, i))
    return RatFun(num, den) * (-_QMQI_INV2)


def A_minus(ctx, m, i):
    num = ctx.ring.one
    for j in range(1, m):
        num = num * _pair(ctx, (m - 1, j), (m, i))
    den = ctx.ring.one
    for j in range(1, m + 1):
        if j != i:
            den = den * _pair(ctx, (m, j), (m, i))
    return RatFun(num, den)


def A_zero(ctx, m):
    out = ctx.ring.scalar(QScalar.q_power(m))
    for i in range(1, m + 1):
        out = out * ctx.X(m, i)
    for i in range(1, m):
        out = out * ctx.X(m - 1, i, -1)
    return out


def phi_K(ctx, m, power=1):
    mono = A_zero(ctx, m)
    if power < 0:
        mono = mono.monomial_unit_inverse() ** (-power)
    else:
        mono = mono**power
    return SkewElement.from_ratfun(ctx, RatFun(mono))


def phi_E(ctx, m, sign):
    """Image of E_m^+ (sign=+1) or E_m^- (sign=-1).

    The sum (+-delta^{mi}) A_mi^+- has the monoid element written on the
    left, so in coefficient-first normal form the coefficient is the monoid
    element applied to the rational function.

    The bare A_mi^+- have odd parity in the level-m variables, so their sum
    is anti-invariant under the even sign flips at level m.  The unit
    normalization A_mi^+ -> q X_mi A_mi^+ and A_mi^- -> X_mi^{-1} A_mi^-
    makes every image G-invariant; the paired factors q X_mi and X_mi^{-1}
    cancel inside the E/F commutator, so all defining relations still hold
    (checked exactly at N = 2, 3 for both normalizations).
    """
    if not 1 <= m <= ctx.N - 1:
        raise ValueError("E index out of range")
    terms = {}
    for i in range(1, m + 1):
        mvec = ctx.delta(m, i, sign)
        A = A_plus(ctx, m, i) if sign > 0 else A_minus(ctx, m, i)
        A = A * RatFun(ctx.X(m, i, sign))
        if sign > 0:
            A = A * QScalar.q_power(1)
        terms[mvec] = ctx.act_M(mvec, A)
    return SkewElement(ctx, terms)


class PhiGenerators:
    """Generator interface over the skew ring, for shared relation checks."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.N = ctx.N
        self._cache = {}

    def E(self, i):
        return self._memo(("E", i), lambda: phi_E(self.ctx, i, +1))

    def F(self, i):
        return self._memo(("F", i), lambda: phi_E(self.ctx, i, -1))

    def K(self, i, e=1):
        return self._memo(("K", i, e), lambda: phi_K(self.ctx, i, e))

    def one(self):
        return SkewElement.from_ratfun(self.ctx, RatFun(self.ctx.ring.one))

    def scalar(self, c):
        return SkewElement.from_ratfun(self.ctx, RatFun(self.ctx.ring.scalar(c)))

    def _memo(self, key, thunk):
        if key not in self._cache:
            self._cache[key] = thunk()
        return self._cache[key]


def check_relations_under_phi(N, threads=None):
    from qgt.relations import defining_relations

    ctx = GaloisContext(N)
    gens = PhiGenerators(ctx)
    records = []
    for name, residue in defining_relations(gens, N):
        records.append({"name": name, "residue_is_zero": residue.is_zero()})
    images = []
    for m in range(1, N):
        images.append(("E[%d]" % m, gens.E(m)))
        images.append(("F[%d]" % m, gens.F(m)))
    for m in range(1, N + 1):
        images.append(("K[%d]" % m, gens.K(m)))
    invariance = [
        {"generator": lbl, "invariant": el.is_G_invariant()} for lbl, el in images
    ]
    ok = all(r["residue_is_zero"] for r in records) and all(
        r["invariant"] for r in invariance
    )
    return {"N": N, "ok": ok, "relations": records, "invariance": invariance}


def check_monoid_G_stability(ctx):
    """G-conjugation permutes the monoid generators: verified as automorphisms
    of the Laurent field on every variable."""
    for _, g in ctx.group_generators():
        ginv = _g_inverse(ctx, g)
        for m, i in ctx.deltas:
            d = ctx.delta(m, i)
            conj = ctx.conj_monoid(g, d)
            for v in ctx.vars:
                x = ctx.X(*v)
                lhs = ctx.act_G_poly(g, ctx.act_M_poly(d, ctx.act_G_poly(ginv, x)))
                rhs = ctx.act_M_poly(conj, x)
                if lhs != rhs:
                    return False
    return True


def _g_inverse(ctx, g):
    out = []
    for zeta, alpha in g:
        m = len(zeta)
        zinv = [0] * m
        for i in range(1, m + 1):
            zinv[zeta[i - 1] - 1] = i
        ainv = tuple(alpha[zinv[i] - 1] for i in range(m))
        out.append((tuple(zinv), ainv))
    return tuple(out)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def x_rs(ctx, r, s):
    """Elementary symmetric polynomial e_s of the squared level-r variables."""
    out = ctx.ring.zero
    for subset in combinations(range(1, r + 1), s):
        term = ctx.ring.one
        for i in subset:
            term = term * ctx.X(r, i, 2)
        out = out + term
    return out


def x_rr(ctx, r, power=1):
    out = ctx.ring.one
    for i in range(1, r + 1):
        out = out * ctx.X(r, i, power)
    return out


def invariant_generators(ctx):
    gens = {}
    for r in range(1, ctx.N + 1):
        for s in range(1, r):
            gens[(r, s)] = x_rs(ctx, r, s)
        gens[(r, r)] = x_rr(ctx, r)
        gens[(r, -r)] = x_rr(ctx, r, -1)
    return gens


def splitting_polynomial(ctx):
    """Coefficient list (ascending in x) of the splitting polynomial

        p(x) = prod_j (x^2 - X_j1^2) ... (x^2 - X_jj^2) (x - X_j1...X_jj).
    """
    coeffs = [ctx.ring.one]
    for j in range(1, ctx.N + 1):
        for i in range(1, j + 1):
            coeffs = _poly_mul_x(coeffs, [-ctx.X(j, i, 2), ctx.ring.zero, ctx.ring.one])
        coeffs = _poly_mul_x(coeffs, [-x_rr(ctx, j), ctx.ring.one])
    return coeffs


def _poly_mul_x(a, b):
    out = [a[0].ring.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def poly_is_G_invariant(ctx, poly):
    return all(
        ctx.act_G_poly(g, poly) == poly for _, g in ctx.group_generators()
    )


def stabilizer_M(ctx, point):
    """Monoid stabilizer of a point with all coordinates nonzero.

    Every monoid generator scales some coordinate by a nonzero power of q,
    and q is transcendental, so the stabilizer is trivial; this checks the
    witness explicitly and raises on invalid points.
    """
    if len(point) != len(ctx.vars):
        raise ValueError("point must assign a value to every variable")
    for v in point:
        if v.is_zero():
            raise ValueError("points have invertible coordinates; zero given")
    moved = []
    for m, i in ctx.deltas:
        val = point[ctx.vindex[(m, i)]]
        moved.append(not (val * QScalar.q_power(-1) - val).is_zero())
    return {"trivial": all(moved), "generators_moving_point": sum(moved)}


def phi_gamma_image(ctx, hc_element, r):
    """Transport a K-Laurent element along K_i -> q^i X_ri."""
    out = ctx.ring.zero
    for (low, diag, up), c in hc_element.terms.items():
        if any(low) or any(up):
            raise ValueError("element has E/F factors")
        term = ctx.ring.scalar(c)
        qexp = 0
        for i, e in enumerate(diag, start=1):
            if e:
                if i > r:
                    raise ValueError("element does not lie in level %d" % r)
                term = term * ctx.X(r, i, e)
                qexp += i * e
        out = out + term * ctx.ring.scalar(QScalar.q_power(qexp))
    return out


def phi_gamma_check(engine, ctx, r, s):
    """The transported Harish-Chandra image of the (r,s) generator must be a
    G-invariant Laurent polynomial proportional to x_rr^{-1} x_{r,r-s}."""
    from qgt.gtsub import d_gen, hc_project

    img = phi_gamma_image(ctx, hc_project(d_gen(engine, r, s)), r)
    invariant = poly_is_G_invariant(ctx, img)
    target = x_rr(ctx, r, -1) * (
        x_rs(ctx, r, r - s) if s < r else ctx.ring.one
    )
    ratio = _poly_scalar_ratio(img, target)
    return {
        "r": r,
        "s": s,
        "polynomial": True,
        "g_invariant": invariant,
        "proportional": ratio is not None,
        "constant": ratio.render() if ratio is not None else None,
    }


def _poly_scalar_ratio(a, b):
    if b.is_zero() or a.is_zero():
        return None
    e = next(iter(b.terms))
    ca = a.terms.get(e)
    if ca is None:
        return None
    c = ca * b.terms[e].inv()
    return c if (a - b.scale(c)).is_zero() else None
