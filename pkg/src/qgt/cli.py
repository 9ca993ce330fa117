"""Command-line front end: one verb per verification or computation.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
Output is deterministic for fixed arguments and seed; --json switches to
machine-readable reports and --out duplicates output to a file.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from qgt.scalar import QScalar


def _engine(n):
    from qgt.engine import UqEngine

    return UqEngine(n)


def _emit(args, text_lines, payload, ok):
    if args.json:
        out = json.dumps(payload, indent=2, sort_keys=True)
    else:
        out = "\n".join(text_lines)
    print(out)
    if args.out:
        with open(args.out, "w") as f:
            f.write(out + "\n")
    return 0 if ok else 1


def cmd_dgen(args):
    from qgt.gtsub import d_gen

    a = d_gen(_engine(args.n), args.r, args.s)
    payload = {"n": args.n, "r": args.r, "s": args.s, "element": repr(a)}
    return _emit(args, ["d_%d%d = %r" % (args.r, args.s, a)], payload, True)


def cmd_zpoly(args):
    from qgt.gtsub import z_poly

    coeffs = z_poly(_engine(args.n), args.r)
    lines = ["z_%d(u) coefficients (power of u^-s):" % args.r]
    payload = {"n": args.n, "r": args.r, "coefficients": {}}
    for s, c in enumerate(coeffs):
        lines.append("  u^-%d: %r" % (s, c))
        payload["coefficients"][str(s)] = repr(c)
    return _emit(args, lines, payload, True)


def cmd_lt(args):
    from qgt.dck import element_degree, leading_term
    from qgt.gtsub import d_gen

    d = d_gen(_engine(args.n), args.r, args.s)
    mono, coeff = leading_term(d)
    deg = element_degree(d)
    payload = {
        "n": args.n,
        "r": args.r,
        "s": args.s,
        "monomial": list(map(list, mono)),
        "coefficient": coeff.render(),
        "degree": {"ht": deg.ht, "rdeg": list(deg.rdeg), "kdeg": list(deg.kdeg)},
    }
    lines = [
        "lt(d_%d%d): coeff %s, monomial %s, ht %d"
        % (args.r, args.s, coeff.render(), mono, deg.ht)
    ]
    return _emit(args, lines, payload, True)


def cmd_verify_lt(args):
    from qgt.dck import verify_lt_theorem

    rep = verify_lt_theorem(_engine(args.n))
    lines = []
    for p in rep["pairs"]:
        lines.append(
            "(%d,%d): theorem %s oracle %s %s"
            % (
                p["r"],
                p["s"],
                tuple(p["theorem_perm"]),
                tuple(p["oracle_perm"]),
                "PASS" if p["match"] else "FAIL",
            )
        )
    return _emit(args, lines, rep, rep["ok"])


def cmd_commute(args):
    from qgt.gtsub import commute_check

    rep = commute_check(_engine(args.n))
    lines = [
        "[d_%d%d, d_%d%d] = 0: %s (%d ms)"
        % (p["r"], p["s"], p["r2"], p["s2"], p["commutes"], p["millis"])
        for p in rep["pairs"]
    ]
    return _emit(args, lines, rep, rep["ok"])


def cmd_hc(args):
    from qgt.gtsub import d_gen, hc_closed_form, hc_project

    eng = _engine(args.n)
    pairs = (
        [(args.r, args.s)]
        if args.s is not None
        else [(r, s) for r in range(1, args.n + 1) for s in range(1, r + 1)]
        if args.r is None
        else [(args.r, s) for s in range(1, args.r + 1)]
    )
    ok = True
    lines = []
    payload = {"n": args.n, "pairs": []}
    for r, s in pairs:
        img = hc_project(d_gen(eng, r, s))
        closed = hc_closed_form(eng, r, s)
        match = (img - closed).is_zero()
        ok = ok and match
        lines.append("hc(d_%d%d) = %r  closed-form match: %s" % (r, s, img, match))
        payload["pairs"].append(
            {"r": r, "s": s, "image": repr(img), "closed_form_match": match}
        )
    return _emit(args, lines, payload, ok)


def cmd_gr(args):
    from qgt.dck import element_degree, gr_of_pbw, leading_term
    from qgt.gtsub import d_gen

    eng = _engine(args.n)
    d = d_gen(eng, args.r, args.s)
    deg = element_degree(d)
    mono, coeff = leading_term(d)
    g = gr_of_pbw(mono, coeff)
    payload = {
        "n": args.n,
        "r": args.r,
        "s": args.s,
        "degree": {"ht": deg.ht, "rdeg": list(deg.rdeg), "kdeg": list(deg.kdeg)},
        "leading_graded_monomial": repr(g),
    }
    lines = ["deg(d_%d%d): ht %d" % (args.r, args.s, deg.ht), "gr lt: %r" % (g,)]
    return _emit(args, lines, payload, True)


def cmd_embed_check(args):
    from qgt.galois import (
        GaloisContext,
        check_monoid_G_stability,
        check_relations_under_phi,
        phi_gamma_check,
    )

    rep = check_relations_under_phi(args.n)
    ctx = GaloisContext(args.n)
    monoid_ok = check_monoid_G_stability(ctx)
    eng = _engine(args.n)
    gamma = [
        phi_gamma_check(eng, ctx, r, s)
        for r in range(1, args.n + 1)
        for s in range(1, r + 1)
    ]
    gamma_ok = all(g["polynomial"] and g["g_invariant"] and g["proportional"] for g in gamma)
    ok = rep["ok"] and monoid_ok and gamma_ok
    payload = dict(rep, monoid_G_stable=monoid_ok, gamma_images=gamma)
    lines = ["relation residues zero: %s" % all(r["residue_is_zero"] for r in rep["relations"])]
    lines += ["  %s: %s" % (r["name"], r["residue_is_zero"]) for r in rep["relations"]]
    lines.append("G-invariance of generator images: %s" % all(r["invariant"] for r in rep["invariance"]))
    lines.append("G-conjugation preserves the monoid: %s" % monoid_ok)
    lines.append("transported subalgebra images polynomial/invariant/proportional: %s" % gamma_ok)
    return _emit(args, lines, payload, ok)


def cmd_invariance(args):
    import random

    from qgt.galois import (
        GaloisContext,
        invariant_generators,
        poly_is_G_invariant,
        splitting_polynomial,
        stabilizer_M,
    )

    ctx = GaloisContext(args.n)
    gens = invariant_generators(ctx)
    gen_ok = all(poly_is_G_invariant(ctx, p) for p in gens.values())
    p_ok = all(poly_is_G_invariant(ctx, c) for c in splitting_polynomial(ctx))
    rng = random.Random(args.seed)
    count = args.bound or 100
    stab_ok = True
    for _ in range(count):
        point = [
            QScalar.q_power(rng.randrange(-4, 5)) * QScalar.from_int(rng.randrange(1, 20))
            for _ in ctx.vars
        ]
        if not stabilizer_M(ctx, point)["trivial"]:
            stab_ok = False
    ok = gen_ok and p_ok and stab_ok
    payload = {
        "n": args.n,
        "x_generators_invariant": gen_ok,
        "splitting_polynomial_invariant": p_ok,
        "stabilizer_trivial_on_samples": stab_ok,
        "samples": count,
        "seed": args.seed,
    }
    lines = [
        "x_rs generators G-invariant: %s" % gen_ok,
        "splitting polynomial coefficients G-invariant: %s" % p_ok,
        "monoid stabilizer trivial on %d sampled points: %s" % (count, stab_ok),
    ]
    return _emit(args, lines, payload, ok)


def cmd_maxcomm_cert(args):
    from qgt.maxcomm import certificate

    rep = certificate(_engine(2), args.bound or 1)
    lines = [
        "box %d, commutant dim %d, subalgebra dim %d, equal: %s"
        % (rep["box_size"], rep["commutant_dim"], rep["gamma_dim"], rep["equal"])
    ]
    return _emit(args, lines, rep, rep["equal"])


def cmd_gl2_fiber(args):
    from qgt.gl2gwa import (
        GWA,
        GTCharacter,
        fiber_gl2,
        module_action_check,
        sample_characters,
    )

    gwa = GWA()
    if args.char:
        data = json.loads(args.char)
        chi = GTCharacter(
            QScalar.parse(data["g11"]),
            QScalar.parse(data["g21"]),
            QScalar.parse(data["g22"]),
        )
        chars = [("input", chi)]
    else:
        chars = sample_characters(gwa, seed=args.seed, count=args.bound or 20)
    ok = True
    reports = []
    lines = []
    for kind, chi in chars:
        rep = fiber_gl2(gwa, chi)
        checks = [module_action_check(gwa, chi, m, 5) for m in rep["modules"]]
        good = (
            1 <= rep["count"] <= 2
            and all(c["ok"] for c in checks)
            and any(c["dim_character_space"] > 0 for c in checks)
        )
        ok = ok and good
        reports.append(dict(rep, kind=kind, action_checks=checks))
        lines.append(
            "%s: count %d, modules %s, action checks %s"
            % (kind, rep["count"], [m["kind"] for m in rep["modules"]],
               all(c["ok"] for c in checks))
        )
    return _emit(args, lines, {"fibers": reports}, ok)


def cmd_bench(args):
    from qgt.dck import verify_lt_theorem
    from qgt.gtsub import commute_check, d_gen

    rows = []
    for label, fn in [
        ("d-generators N=3", lambda: [d_gen(_engine(3), r, s) for r in (1, 2, 3) for s in range(1, r + 1)]),
        ("commute N=3", lambda: commute_check(_engine(3))),
        ("leading terms N=4", lambda: verify_lt_theorem(_engine(4))),
    ]:
        t0 = time.time()
        fn()
        rows.append({"task": label, "millis": int((time.time() - t0) * 1000)})
    lines = ["%-20s %6d ms" % (r["task"], r["millis"]) for r in rows]
    return _emit(args, lines, {"bench": rows}, True)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="qgt", description="Exact verification toolkit for the quantum group engine."
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **needs):
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, default=needs.get("n", 3))
        p.add_argument("--r", type=int, default=needs.get("r"))
        p.add_argument("--s", type=int, default=needs.get("s"))
        p.add_argument("--bound", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")
        p.add_argument("--out", default=None)
        p.add_argument("--char", default=None, help="character as JSON {g11,g21,g22}")
        p.set_defaults(fn=fn)
        return p

    add("dgen", cmd_dgen, r=2, s=1)
    add("zpoly", cmd_zpoly, r=2)
    add("lt", cmd_lt, r=2, s=1)
    add("verify-lt", cmd_verify_lt)
    add("commute", cmd_commute)
    add("hc", cmd_hc)
    add("gr", cmd_gr, r=2, s=1)
    add("embed-check", cmd_embed_check)
    add("invariance", cmd_invariance)
    add("maxcomm-cert", cmd_maxcomm_cert)
    add("gl2-fiber", cmd_gl2_fiber)
    add("bench", cmd_bench)

    args = parser.parse_args(argv)
    if args.r is not None and args.s is not None and not (args.s <= args.r <= args.n):
        parser.error("require s <= r <= n")
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
