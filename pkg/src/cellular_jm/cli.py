"""
Command-line front end.

    cellular-jm verify <family> [--n N] [--m M] [--q Q] [--u a,b,...]
                                [--checks LIST|all] [--json PATH] [--timing]
    cellular-jm params --n N --m M

Exit status: 0 when every requested check passes (for the counterexample
family: when both conditions of the main theorem fail together), 1 when a
check fails, 2 on an invalid configuration.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .cellular_core import verify_algebra_table, verify_cellularity, verify_jm_axioms, verify_separation
from .center_theory import (
    NoSeparatingFamily,
    cell_content_vectors,
    lemma_lmjm1_check,
    lemma_lmjm2_triangularize,
    main_theorem_check,
    verify_proof_identity,
    verify_prop_converse,
    verify_prop_sym_central,
)
from .combinatorics import ak_distinctness_case_analysis, content_sequence_ak, initial_tableau, lemma_lmp_check
from .concrete_algebras import (
    AKParams,
    InvalidParameters,
    build_ak_seminormal,
    build_counterexample_pair,
    build_group_algebra,
    build_hecke_typeA,
    find_valid_params,
    separation_polynomial_nonzero,
    validate_params,
)
from .exact_field import EchelonBasis, format_scalar, scalar
from .seminormal import build_seminormal_system, verify_seminormal_theorems

SCHEMA_VERSION = 1
FAMILIES = ["symmetric-group", "hecke-a", "ariki-koike-model", "counterexample"]
CHECKS = ["cellularity", "jm", "separation", "seminormal", "center", "main-theorem", "lemmas"]


class ConfigError(ValueError):
    pass


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_scalar(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def parse_checks(text: str) -> list:
    if text == "all":
        return list(CHECKS)
    wanted = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in wanted if c not in CHECKS]
    if unknown:
        raise ConfigError("unknown checks: %s" % ", ".join(unknown))
    return [c for c in CHECKS if c in wanted]


def make_config(args) -> dict:
    family = args.family
    cfg = {"family": family, "n": args.n, "m": args.m, "q": args.q, "u": None,
           "checks": parse_checks(args.checks)}
    if args.u is not None:
        cfg["u"] = [s.strip() for s in args.u.split(",")]
    if family in ("symmetric-group", "counterexample"):
        if args.m is not None or args.q is not None or args.u is not None:
            raise ConfigError("--m, --q and --u do not apply to %s" % family)
    if family == "hecke-a" and (args.m is not None or args.u is not None):
        raise ConfigError("--m and --u do not apply to hecke-a")
    if family == "counterexample":
        if args.n is not None:
            raise ConfigError("--n does not apply to counterexample")
    elif args.n is None:
        raise ConfigError("--n is required for %s" % family)
    try:
        if cfg["q"] is not None:
            cfg["q"] = format_scalar(scalar(cfg["q"]))
        if cfg["u"] is not None:
            cfg["u"] = [format_scalar(scalar(x)) for x in cfg["u"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError("bad rational: %s" % exc)
    return cfg


def build_instance(cfg: dict):
    family, n = cfg["family"], cfg["n"]
    try:
        if family == "symmetric-group":
            return build_group_algebra(n)
        if family == "hecke-a":
            if cfg["q"] is None:
                cfg["q"] = "2"
            return build_hecke_typeA(n, scalar(cfg["q"]))
        if family == "ariki-koike-model":
            m = cfg["m"] if cfg["m"] is not None else 2
            cfg["m"] = m
            if cfg["q"] is None and cfg["u"] is None:
                params = find_valid_params(n, m)
                cfg["q"] = format_scalar(params.q)
                cfg["u"] = [format_scalar(x) for x in params.u]
            else:
                q = scalar(cfg["q"] if cfg["q"] is not None else 2)
                if cfg["u"] is None:
                    raise ConfigError("--u is required when --q is given")
                params = validate_params(AKParams(n, m, q, [scalar(x) for x in cfg["u"]]))
            return build_ak_seminormal(params)
        return build_counterexample_pair()
    except InvalidParameters as exc:
        raise ConfigError(str(exc))
    except ValueError as exc:
        raise ConfigError(str(exc))


def _entry(name, passed, witness=None, details=None, status=None):
    out = {"name": name, "status": status or ("pass" if passed else "fail")}
    if witness:
        out["witness"] = _jsonable(witness)
    if details:
        out["details"] = _jsonable(details)
    return out


def _lemma_checks(inst, report_center):
    algebra, contents = inst.algebra, inst.contents
    failures = []
    details = {}
    conv = verify_prop_converse(algebra, inst.L, contents)
    failures.extend(conv.failures)
    vectors = cell_content_vectors(algebra, contents)
    cells = list(vectors)
    for i, a in enumerate(cells):
        for b in cells[i:]:
            holds, _ = lemma_lmjm1_check(vectors[a], vectors[b])
            if holds != (sorted(vectors[a]) == sorted(vectors[b])):
                failures.append({"lemma": "lmjm1", "cells": [a, b]})
    try:
        tri = lemma_lmjm2_triangularize(list(vectors.values()))
        details["triangular_determinant"] = tri.determinant
        details["triangular_polys"] = [str(p) for p in tri.polys]
        ok = tri.determinant == tri.original_determinant != 0
        triangularized = True
    except NoSeparatingFamily as exc:
        details["triangular_error"] = str(exc)
        ok, triangularized = True, False
    if not ok:
        failures.append({"lemma": "lmjm2", "reason": "determinant changed or vanished"})
    if report_center is not None and report_center.applicable:
        if triangularized != report_center.condition_two:
            failures.append({"lemma": "lmjm2", "reason": "disagrees with condition two"})
    if inst.family == "ariki-koike-model":
        params = inst.params["params"]
        cases = {}
        for i, a in enumerate(cells):
            for b in cells[i + 1:]:
                distinct, case, _ = ak_distinctness_case_analysis(a, b, params.q, params.u)
                brute = sorted(content_sequence_ak(initial_tableau(a), params.q, params.u)) != \
                    sorted(content_sequence_ak(initial_tableau(b), params.q, params.u))
                cases[case] = cases.get(case, 0) + 1
                if distinct != brute:
                    failures.append({"lemma": "case-analysis", "cells": [a, b]})
        details["case_counts"] = cases
    elif inst.family in ("symmetric-group", "hecke-a"):
        for i, a in enumerate(cells):
            for b in cells:
                if lemma_lmp_check(a, b) != (a == b):
                    failures.append({"lemma": "lmp", "cells": [a, b]})
    return _entry("lemmas", not failures, failures, details)


def run(cfg: dict, timing: bool = False) -> tuple[int, dict]:
    """Build the instance, run the requested checks in order, and assemble the report."""
    start = time.perf_counter()
    inst = build_instance(cfg)
    algebra = inst.algebra
    checks = cfg["checks"]
    entries = []
    system = None
    center = None
    dims = {"algebra": algebra.dim, "center": None, "symSpan": None, "cells": len(algebra.datum.cells)}

    def seminormal_system():
        nonlocal system
        if system is None:
            system = build_seminormal_system(algebra, inst.L, inst.contents, strict=False)
        return system

    if "cellularity" in checks:
        rep = verify_cellularity(algebra, inst.generators)
        table = verify_algebra_table(algebra)
        entries.append(_entry("cellularity", rep.passed and table.passed,
                              rep.failures + table.failures, rep.details))
    if "jm" in checks:
        rep = verify_jm_axioms(algebra, inst.L, inst.contents)
        entries.append(_entry("jm", rep.passed, rep.failures, rep.details))
    if "separation" in checks:
        ok, witness = verify_separation(inst.contents, algebra.datum)
        entries.append(_entry("separation", ok, witness))
    if "seminormal" in checks:
        rep = verify_seminormal_theorems(algebra, inst.L, inst.contents, seminormal_system())
        entries.append(_entry("seminormal", rep.passed, rep.failures,
                              {k: v for k, v in rep.details.items() if k != "corner_dims"}))
    if "center" in checks or "main-theorem" in checks or "lemmas" in checks:
        center = main_theorem_check(algebra, inst.L, inst.contents)
        dims["center"] = len(center.center_basis)
        dims["symSpan"] = len(center.sym_span_basis)
    if "center" in checks:
        hyp = verify_prop_sym_central(algebra, inst.L, inst.contents, center.sym_span_basis)
        ident = verify_proof_identity(algebra, inst.L, inst.contents, seminormal_system())
        eb = EchelonBasis(algebra.dim)
        for z in center.center_basis:
            eb.add(dict(z.c))
        contained = all(eb.contains(dict(z.c)) for z in center.sym_span_basis)
        bounded = len(center.sym_span_basis) <= len(algebra.datum.cells)
        failures = hyp.failures + ident.failures
        if not contained:
            failures.append({"property": "symSpan inside center"})
        if not bounded:
            failures.append({"property": "symSpan dimension <= cells"})
        entries.append(_entry("center", hyp.passed and ident.passed and contained and bounded,
                              failures, {"proof_identity_polys": ident.details["polys"]}))
    if "main-theorem" in checks:
        if not center.applicable:
            entries.append(_entry("main-theorem", False, status="inapplicable"))
        else:
            entries.append(_entry(
                "main-theorem", center.equivalence_holds, center.witness,
                {"conditionOne": center.condition_one, "conditionTwo": center.condition_two,
                 "equivalenceHolds": center.equivalence_holds,
                 "reductionNonsingular": center.reduction_nonsingular},
            ))
    if "lemmas" in checks:
        entries.append(_lemma_checks(inst, center))

    report = {
        "schemaVersion": SCHEMA_VERSION,
        "config": _jsonable(cfg),
        "checks": entries,
        "dimensions": dims,
        "gamma": system.gamma_json() if system is not None else {},
        "contents": inst.contents.to_json(),
        "orientation": {"inForce": algebra.datum.orientation,
                        "confirmed": inst.params.get("orientation_confirmed", [])},
        "timingMs": round((time.perf_counter() - start) * 1000) if timing else None,
    }
    if inst.family == "counterexample":
        mt = [e for e in entries if e["name"] == "main-theorem"]
        ok = bool(mt) and mt[0]["status"] == "pass"
    else:
        ok = all(e["status"] == "pass" for e in entries)
    return (0 if ok else 1), report


def format_params(params: AKParams) -> str:
    ok, factors = separation_polynomial_nonzero(params)
    lines = [
        "n=%d m=%d q=%s u=(%s)" % (params.n, params.m, format_scalar(params.q),
                                   ",".join(format_scalar(x) for x in params.u)),
        "separation polynomial nonzero: %s" % ("yes" if ok else "no"),
    ]
    lines += ["  %s = %s" % (label, format_scalar(v)) for label, v in factors]
    return "\n".join(lines)


def _summary(report: dict) -> str:
    lines = ["%s: %s" % (report["config"]["family"], json.dumps(report["dimensions"]))]
    for e in report["checks"]:
        lines.append("  %-13s %s" % (e["name"], e["status"]))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cellular-jm", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="build an instance and run verification checks")
    v.add_argument("family", choices=FAMILIES)
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--q")
    v.add_argument("--u", help="comma separated rationals, e.g. 1,7")
    v.add_argument("--checks", default="all")
    v.add_argument("--json", dest="json_path")
    v.add_argument("--timing", action="store_true", help="record wall-clock time in the report")
    p = sub.add_parser("params", help="print validated Ariki-Koike parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "params":
        print(format_params(find_valid_params(args.n, args.m)))
        return 0
    try:
        cfg = make_config(args)
        code, report = run(cfg, timing=args.timing)
    except ConfigError as exc:
        print("cellular-jm: invalid configuration: %s" % exc, file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2) + "\n"
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(text)
    print(_summary(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
