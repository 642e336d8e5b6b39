"""Command-line entry point: ``ternalg dims | verify | simulate | table | factorize``.

Machine-readable JSON (sorted keys) goes to standard output or ``--out``;
a one-line-per-check summary goes to standard error.  Exit codes: 0 all
checks pass, 1 a check failed, 2 usage error, 3 malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .report import CheckResult

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

VERIFY_TARGETS = (
    "confinement",
    "d3",
    "himbert",
    "nambu-properties",
    "nonions",
    "pauli-ternary",
    "poly-clifford",
    "triple-system",
    "yang-baxter",
)


class InputError(Exception):
    pass


class UsageError(Exception):
    pass


def _load_json(path: str | None):
    """(parsed object, sha256 digest) or (None, None) without a path."""
    if path is None:
        return None, None
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
        return json.loads(raw), hashlib.sha256(raw).hexdigest()
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _parse(loader, obj):
    try:
        return loader(obj)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc


# ---------------------------------------------------------------------------
# dims


def cmd_dims(args) -> tuple[dict, bool]:
    n = args.n
    if n < 1:
        raise InputError("--n must be positive")
    if args.what == "grassmann":
        from .grassmann import d_formula, total_dimension

        try:
            total = total_dimension(n)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        formula = d_formula(n)
        return {"family": "merged", "N": n, "total": total, "formula": formula, "match": total == formula}, total == formula
    if args.what == "exterior":
        from .exterior import module_dimension, module_dimension_formula

        try:
            total = module_dimension(n)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        formula = module_dimension_formula(n)
        return {"family": "exterior", "N": n, "total": total, "formula": formula, "match": total == formula}, total == formula
    from .graded_rewrite import KINDS, RelationFamily, dimension_table, theta_generators

    if args.kind is None or args.kind not in KINDS or args.kind == "Custom":
        raise InputError(f"--kind must be one of {', '.join(k for k in KINDS if k != 'Custom')}")
    weight = args.weight if args.weight is not None else 4
    if not 1 <= weight <= 6:
        raise InputError("--weight must lie in 1..6")
    gens = theta_generators(n, bar=args.kind == "Lbar" or args.kind == "Sbar")
    return dimension_table(gens, RelationFamily(args.kind), weight, name=args.kind), True


# ---------------------------------------------------------------------------
# verify


def _verify_pauli(args, obj):
    from .cubic_matrix import pauli_ternary_check

    return [pauli_ternary_check(a, b) for a in (1, 2, 3) for b in (1, 2, 3) if a != b]


def _verify_nonions(args, obj):
    from .cubic_matrix import nonion_basis, nonion_relation_check
    from .cyclotomic import CycMatrix

    alg = nonion_basis()
    one = CycMatrix.identity(3)
    out = [
        CheckResult("eta1_cubed", alg.eta1 ** 3 == one),
        CheckResult("eta2_cubed", alg.eta2 ** 3 == one),
        CheckResult("nonion_rank", alg.rank == 9, details={"rank": alg.rank}),
    ]
    gens = {"eta1": alg.eta1, "eta2": alg.eta2}
    for names in [(a, b, c) for a in gens for b in gens for c in gens]:
        r = nonion_relation_check(*(gens[x] for x in names))
        out.append(CheckResult(f"nonion_relation({','.join(names)})", r.passed, r.witness, r.details))
    return out


def _verify_himbert(args, obj):
    from .exterior import himbert_check, monomials

    bad = None
    count = 0
    for p in monomials(3, 5):
        count += 1
        r = himbert_check(p)
        if not r.passed:
            bad = r
            break
    if bad is not None:
        return [bad]
    return [CheckResult("himbert_factorization", True, details={"monomials": count, "max_degree": 5})]


def _verify_yang_baxter(args, obj):
    from .triple_systems import (
        RFamily,
        RMatrix,
        flip,
        spectral_check_all,
        symmetry_check,
        yb_check_braid,
        yb_check_constant,
        yb_test_set,
    )

    if obj is not None:
        if args.spectral:
            fam = _parse(RFamily.from_json_obj, obj)
            results = spectral_check_all(fam)
            if not results:
                raise InputError("no (theta, theta'') pair has theta + theta'' in the family")
            return results
        R = _parse(RMatrix.from_json_obj, obj)
        return [
            CheckResult("yang_baxter_constant", yb_check_constant(R)),
            CheckResult("yang_baxter_braid_of_PR", yb_check_braid(flip(R.dim) @ R)),
        ]
    out = []
    for n in (2, 3):
        for name, R in (("identity", RMatrix.identity(n)), ("flip", flip(n))):
            out.append(CheckResult(f"{name}_N{n}", yb_check_constant(R) and yb_check_braid(R)
                                   and symmetry_check(R)))
    P = flip(2)
    mismatch = None
    tests = yb_test_set(args.seed, 20, 2)
    for t, R in enumerate(tests):
        if yb_check_braid(P @ R) != yb_check_constant(R):
            mismatch = t
            break
    solved = sum(yb_check_constant(R) for R in tests)
    out.append(CheckResult("braid_constant_equivalence", mismatch is None, witness=mismatch,
                           details={"matrices": len(tests), "solutions": solved}))
    E = RMatrix.from_function(2, lambda a, b, c, d: int((a, b, c, d) == (0, 0, 0, 1)))
    pert = RMatrix.identity(2) + E
    out.append(CheckResult("perturbed_rejected", not yb_check_constant(pert) and not yb_check_braid(P @ pert),
                           details={"R": "identity + E11 (x) E12"}))
    return out


def _verify_triple_system(args, obj):
    from .triple_systems import TripleSystem, axioms_check, orthogonal_model, r_from_triple, symmetry_check

    ts = _parse(TripleSystem.from_json_obj, obj) if obj is not None else orthogonal_model(2, 1)
    results = axioms_check(ts)
    try:
        R = r_from_triple(ts)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    results[0].details["R"] = R.matrix.to_nested()
    results[0].details["R_symmetric"] = symmetry_check(R)
    return results


def _verify_confinement(args, obj):
    from .graded_operators import confinement_check

    return confinement_check(args.dim, args.trials, args.seed)


def _verify_poly_clifford(args, obj):
    from .cyclotomic import CycMatrix
    from .graded_operators import (
        PolyCliffordRep,
        block_rep,
        dirac_cube_check,
        lorentz_commutator_check,
        lorentz_forms_check,
        nonion_gtilde,
        omega_rescaled,
        poly_clifford_check,
        w_vectors,
    )

    rep = _parse(PolyCliffordRep.from_json_obj, obj) if obj is not None else block_rep()
    m = Fraction(args.mass)
    out = poly_clifford_check(rep)
    verdicts = [r.passed for r in out]
    rescaled = [r.passed for r in poly_clifford_check(omega_rescaled(rep))]
    out.append(CheckResult("omega_rescaling_invariance", verdicts == rescaled))
    if all(verdicts):
        out.append(dirac_cube_check(rep, m))
    wv = w_vectors(rep)
    forms = lorentz_forms_check(rep)
    out[0].details.update({"w_sum_vanishes": wv["sum_vanishes"], "lorentz_forms": forms})
    lor = lorentz_commutator_check(rep)
    out[0].details["lorentz_commutators"] = lor.as_dict()
    T = nonion_gtilde()
    out.append(CheckResult("p0_sector_nonion", T @ T @ T * (m ** 3) == CycMatrix.scalar(3, -(m ** 3)),
                           details={"gtilde": "-eta1", "m": str(m)}))
    return out


def _verify_d3(args, obj):
    from .exterior import d3_zero_check, random_one_form, random_poly

    rng = random.Random(args.seed)
    out = []
    for label, make, count in (("d3_functions", lambda: random_poly(rng, rng.randint(1, 3), 4), args.trials),
                               ("d3_one_forms", lambda: random_one_form(rng, rng.randint(1, 3), 3), 50)):
        res = CheckResult(label, True, details={"trials": count})
        for t in range(count):
            r = d3_zero_check(make())
            if not r.passed:
                res = CheckResult(label, False, witness={"trial": t, **r.details})
                break
        out.append(res)
    return out


def _verify_nambu(args, obj):
    from .nambu import property_suite, random_unimodular, sl3_invariance_check

    out = property_suite(args.seed, 50)
    rng = random.Random(args.seed)
    bad = None
    for t in range(10):
        M = random_unimodular(rng)
        r = sl3_invariance_check(M, seed=args.seed + t)
        if not r.passed:
            bad = {"matrix": M, **({"witness": r.witness} if r.witness else {})}
            break
    out.append(CheckResult("sl3_invariance", bad is None, witness=bad, details={"matrices": 10}))
    return out


VERIFIERS = {
    "pauli-ternary": _verify_pauli,
    "nonions": _verify_nonions,
    "himbert": _verify_himbert,
    "yang-baxter": _verify_yang_baxter,
    "triple-system": _verify_triple_system,
    "confinement": _verify_confinement,
    "poly-clifford": _verify_poly_clifford,
    "d3": _verify_d3,
    "nambu-properties": _verify_nambu,
}


def cmd_verify(args) -> tuple[dict, bool]:
    if args.all:
        if args.target not in (None, "all"):
            raise UsageError("--all does not combine with a target")
        args.target = "all"
    if args.target is None:
        raise UsageError("verify needs a target or --all")
    obj, digest = _load_json(args.input)
    if args.target == "all":
        if args.input:
            raise InputError("verify all does not take --input")
        checks = {}
        for name in sorted(VERIFIERS):
            results = VERIFIERS[name](args, None)
            checks[name] = {"pass": all(r.passed for r in results), "results": [r.as_dict() for r in results]}
        ok = all(c["pass"] for c in checks.values())
        return {"check": "all", "pass": ok, "checks": checks, "version": __version__, "seed": args.seed}, ok
    results = VERIFIERS[args.target](args, obj)
    ok = all(r.passed for r in results)
    return {"check": args.target, "pass": ok, "results": [r.as_dict() for r in results],
            "version": __version__, "input_digest": digest, "seed": args.seed}, ok


# ---------------------------------------------------------------------------
# simulate, table, factorize


def _floats(text: str, count: int) -> list[float]:
    try:
        vals = [float(Fraction(x.strip())) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad vector {text!r}") from exc
    if len(vals) != count:
        raise InputError(f"expected {count} comma-separated numbers, got {text!r}")
    return vals


def cmd_simulate(args) -> tuple[dict | str, bool]:
    from .nambu import EulerTopParams, NonFiniteState, integrate

    try:
        params = EulerTopParams(Fraction(args.jx), Fraction(args.jy), Fraction(args.jz))
        h = float(Fraction(args.h))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc
    l0 = _floats(args.l0, 3)
    try:
        traj = integrate(params.system(), l0, h, args.steps)
    except NonFiniteState as exc:
        return {"check": "euler_top", "pass": False, "error": str(exc)}, False
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    dh, dg = traj.max_drift()
    summary = {"check": "euler_top", "pass": True, "h": args.h, "steps": args.steps,
               "J": [args.jx, args.jy, args.jz], "L0": args.l0,
               "max_rel_drift_H": dh, "max_rel_drift_G": dg, "version": __version__}
    if args.csv:
        traj.write_csv(args.csv)
        summary["csv"] = args.csv
        return summary, True
    buf = io.StringIO()
    traj.write(buf)
    print(f"drift H {dh:.3e}  G {dg:.3e}", file=sys.stderr)
    return buf.getvalue(), True


def cmd_table(args) -> tuple[dict, bool]:
    from .ternary_products import (
        S3_TRANSPOSITIONS,
        TRANSPOSITION_NAMES,
        compose_permutations,
        sitarz_s3_table,
        strong_associativity_check,
    )

    table = sitarz_s3_table()
    rows = []
    for i, j, k in sorted((i, j, k) for i in range(3) for j in range(3) for k in range(3)):
        (l,) = [l for l in range(3) if table.coeff(l, i, j, k)]
        rows.append([TRANSPOSITION_NAMES[x] for x in (i, j, k, l)])
    check = compose_permutations(S3_TRANSPOSITIONS[0], S3_TRANSPOSITIONS[1], S3_TRANSPOSITIONS[0]) == S3_TRANSPOSITIONS[2]
    assoc = strong_associativity_check(table)
    ok = check and len(rows) == 27
    return {"check": "sitarz_table", "table": "sitarz", "basis": list(TRANSPOSITION_NAMES), "products": rows,
            "structure": table.to_json_obj(), "entry_(12)(13)(12)=(23)": check,
            "strongly_associative": assoc.passed, "pass": ok}, ok


def cmd_factorize(args) -> tuple[dict, bool]:
    from .cyclotomic import parse_scalar
    from .ternary_products import SearchSpaceTooLarge, TernaryTable, binary_factorization_search

    obj, digest = _load_json(args.input)
    table = _parse(TernaryTable.from_json_obj, obj)
    try:
        alphabet = [parse_scalar(x.strip()) for x in args.alphabet.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad alphabet: {exc}") from exc
    if not alphabet:
        raise InputError("empty alphabet")
    try:
        found = binary_factorization_search(table, alphabet)
    except SearchSpaceTooLarge as exc:
        raise InputError(str(exc)) from exc
    payload = {"check": "binary_factorization", "pass": found is not None, "input_digest": digest,
               "alphabet": [str(a) for a in alphabet], "binary": found.to_json_obj() if found else None,
               "version": __version__}
    return payload, found is not None


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps (default 0)")
    common.add_argument("--out", help="write the JSON payload to this file instead of standard output")

    parser = argparse.ArgumentParser(prog="ternalg", description="Exact checks for ternary and Z3-graded algebra.")
    parser.add_argument("--version", action="version", version=f"ternalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="dimension counts")
    p.add_argument("what", choices=("grassmann", "exterior", "family"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", type=int, help="top weight for 'family' (default 4)")
    p.add_argument("--kind", help="relation family for 'family', e.g. S0, L, L1")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("verify", parents=[common], help="run exact verifications")
    p.add_argument("target", nargs="?", choices=VERIFY_TARGETS + ("all",))
    p.add_argument("--all", action="store_true", help="same as the 'all' target")
    p.add_argument("--input", help="JSON input (R-matrix, R family, triple system or representation)")
    p.add_argument("--spectral", action="store_true", help="treat the yang-baxter input as an R family")
    p.add_argument("--dim", type=int, default=3, help="largest inner dimension for confinement")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--mass", default="1", help="mass parameter for the cube identity")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", parents=[common], help="integrate the Euler top")
    p.add_argument("system", choices=("euler-top",))
    p.add_argument("--jx", default="1")
    p.add_argument("--jy", default="2")
    p.add_argument("--jz", default="3")
    p.add_argument("--l0", default="1,1,1", help="initial angular momentum x,y,z")
    p.add_argument("--h", default="0.001")
    p.add_argument("--steps", type=int, default=10000)
    p.add_argument("--csv", help="write the trajectory here and print a JSON summary")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("table", parents=[common], help="print a ternary multiplication table")
    p.add_argument("name", choices=("sitarz",))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("factorize", parents=[common], help="search a binary law behind a ternary one")
    p.add_argument("what", choices=("ternary",))
    p.add_argument("--input", required=True)
    p.add_argument("--alphabet", default="0,1,-1", help="comma-separated candidate constants")
    p.set_defaults(func=cmd_factorize)
    return parser


def _summarize(payload) -> None:
    if not isinstance(payload, dict):
        return
    if "results" in payload:
        for r in payload["results"]:
            print(f"{'PASS' if r['pass'] else 'FAIL'} {r['check']}", file=sys.stderr)
    elif "checks" in payload:
        for name, c in payload["checks"].items():
            print(f"{'PASS' if c['pass'] else 'FAIL'} {name}", file=sys.stderr)
    elif "pass" in payload or "match" in payload:
        ok = payload.get("pass", payload.get("match"))
        print(f"{'PASS' if ok else 'FAIL'} {payload.get('check', payload.get('family', ''))}", file=sys.stderr)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        payload, ok = args.func(args)
    except UsageError as exc:
        print(f"ternalg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"ternalg: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    _summarize(payload)
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
