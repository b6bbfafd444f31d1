"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 a cross-check, verification or
oracle comparison disagreed.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import reports
from .coalgebra import comatrix, grouplike, one_dim
from .errors import ContractViolation, MultalgError, PropertyMismatch
from .fields import field_from_name
from .fixtures import FIXTURES
from .serialize import (
    ParseError,
    algebra_from_spec,
    algebra_to_spec,
    coalgebra_from_spec,
    coalgebra_to_spec,
    dumps,
    hom_from_spec,
    read_json,
)

COALGEBRA_FIXTURES = {
    "grouplike3": lambda field: grouplike(3, field),
    "comatrix2": lambda field: comatrix(2, field),
    "one_dim": lambda field: one_dim(field),
}

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


class Mismatch(Exception):
    """Raised by a command whose report records a disagreement."""

    def __init__(self, report):
        super().__init__("mismatch")
        self.report = report


def _field_arg(text: str | None):
    if text is None:
        return None
    try:
        return field_from_name(text)
    except ValueError as exc:
        raise ParseError(f"--field: {exc}") from None


def _load_algebra(path, args):
    return algebra_from_spec(read_json(path), _field_arg(args.field))


def cmd_analyze(args):
    return reports.analyze_report(_load_algebra(args.path, args), args.verify)


def cmd_multipliers(args):
    return reports.multipliers_report(_load_algebra(args.path, args), args.verify)


def cmd_units(args):
    return reports.units_report(_load_algebra(args.path, args), args.verify)


def cmd_closure(args):
    return reports.closure_report(_load_algebra(args.path, args), args.verify)


def cmd_extend(args):
    A = _load_algebra(args.source, args)
    B = _load_algebra(args.target, args)
    gamma = hom_from_spec(read_json(args.hom), A, B)
    return reports.extend_report(gamma, args.verify)


def cmd_coalg(args):
    C = coalgebra_from_spec(read_json(args.path), _field_arg(args.field))
    if args.action == "dual":
        return reports.dual_report(C)
    return reports.cofrobenius_report(C, args.verify)


def cmd_fixture(args):
    field = _field_arg(args.field) or field_from_name("Q")
    if args.name in FIXTURES:
        spec = algebra_to_spec(FIXTURES[args.name](field))
        if args.verify and algebra_from_spec(spec) != FIXTURES[args.name](field):
            raise PropertyMismatch(f"fixture {args.name} does not re-parse to itself")
        return spec
    if args.name in COALGEBRA_FIXTURES:
        return coalgebra_to_spec(COALGEBRA_FIXTURES[args.name](field))
    names = sorted(FIXTURES) + sorted(COALGEBRA_FIXTURES)
    raise ParseError(f"unknown fixture {args.name!r}; choose from {', '.join(names)}")


def cmd_oracle(args):
    from .oracles import run_oracle

    field = _field_arg(args.field) or field_from_name("GF:2")
    if not hasattr(field, "p"):
        raise ParseError("--field: the oracle needs a prime field GF:p")
    rows = run_oracle(field, args.max_dim)
    report = {
        "field": field.name,
        "max_dim": args.max_dim,
        "algebras": len(rows),
        "mismatches": sum(not r.ok for r in rows),
        "rows": [
            {"name": r.name, "dim": r.dim, "dim_L": r.dim_L, "dim_R": r.dim_R, "dim_M": r.dim_M, "ok": r.ok}
            for r in rows
        ],
    }
    if report["mismatches"]:
        raise Mismatch(report)
    return report


def _builtin_multiplier(args, field):
    from . import colimit

    if args.multiplier == "indicator":
        S = None if args.indices is None else [int(t) for t in args.indices.split(",") if t]
        return colimit.indicator(args.family, S, field)
    if args.multiplier == "poly":
        coeffs = [field.parse(t) for t in args.coeffs.split(",")]
        return colimit.polynomial_diagonal(coeffs, args.family, field)
    if args.family != "matrices":
        raise ParseError("--multiplier banded needs --family matrices")
    return colimit.banded(lambda i, j: 1 + i + 2 * j, args.width, field)


def cmd_colimit(args):
    """Apply a built-in multiplier to random finite sets and check every probe."""
    from . import colimit

    field = _field_arg(args.field) or field_from_name("Q")
    x = _builtin_multiplier(args, field)
    rng = random.Random(args.seed)
    unit_refuted = probes_ok = 0
    for _ in range(args.sets):
        F = colimit.random_finite_set(rng, args.family, field=field)
        F2 = F + colimit.random_finite_set(rng, args.family, field=field)
        for a in F:
            for side in ("left", "right"):
                colimit.multiplier_apply(x, a, side)
        if colimit.probe_coherence(x, F, F2):
            probes_ok += 1
        e = colimit.local_unit_for(F)
        if colimit.refute_unit(e) is not None:
            unit_refuted += 1
    report = {
        "family": args.family,
        "multiplier": x.name,
        "seed": args.seed,
        "sets": args.sets,
        "coherent_probes": probes_ok,
        "local_units_refuted_as_units": unit_refuted,
    }
    if probes_ok != args.sets or unit_refuted != args.sets:
        raise Mismatch(report)
    return report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit deterministic JSON")
    common.add_argument("--field", help='override the field: "Q", "Qi" or "GF:p"')
    common.add_argument("--verify", action="store_true", help="re-check every certificate after computing it")

    parser = argparse.ArgumentParser(prog="multalg", description="Multiplier algebras of finite-dimensional algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, text in [
        ("analyze", cmd_analyze, "full report for an algebra file"),
        ("multipliers", cmd_multipliers, "left, right and two-sided multipliers"),
        ("units", cmd_units, "unit, local units and firmness"),
        ("closure", cmd_closure, "strict closure and density"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("path")
        p.set_defaults(func=fn)

    p = sub.add_parser("extend", parents=[common], help="extend a non-degenerate hom A -> M(B) to M(A) -> M(B)")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("hom")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("coalg", parents=[common], help="dual algebra or co-Frobenius search for a coalgebra file")
    p.add_argument("action", choices=["dual", "cofrobenius"])
    p.add_argument("path")
    p.set_defaults(func=cmd_coalg)

    p = sub.add_parser("fixture", parents=[common], help="print a built-in algebra or coalgebra as JSON")
    p.add_argument("name")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("oracle", parents=[common], help="compare against exhaustive enumeration")
    p.add_argument("--max-dim", type=int, default=3)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("colimit", parents=[common], help="probe a built-in multiplier of an infinite algebra")
    p.add_argument("--family", choices=["functions", "matrices"], default="functions")
    p.add_argument("--multiplier", choices=["indicator", "poly", "banded"], default="indicator")
    p.add_argument("--indices", help="comma-separated support for indicator (default: all of N)")
    p.add_argument("--coeffs", default="0,1", help="comma-separated polynomial coefficients")
    p.add_argument("--width", type=int, default=1)
    p.add_argument("--sets", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_colimit)
    return parser


def _lines(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _lines(obj[k], f"{prefix}{k}." if prefix or k else "")
    elif isinstance(obj, list) and obj and all(isinstance(v, (dict, list)) for v in obj):
        for n, v in enumerate(obj):
            yield from _lines(v, f"{prefix}{n}.")
    else:
        value = "none" if obj is None else ", ".join(map(str, obj)) if isinstance(obj, list) else str(obj)
        yield f"{prefix.rstrip('.')}: {value}"


def render(report, as_json: bool) -> str:
    if as_json:
        return dumps(report)
    return "\n".join(_lines(report)) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except Mismatch as exc:
        sys.stdout.write(render(exc.report, args.json))
        return EXIT_MISMATCH
    except (PropertyMismatch, ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (MultalgError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    # fixtures and duals are spec files, so they are always JSON
    emits_spec = args.command == "fixture" or getattr(args, "action", None) == "dual"
    sys.stdout.write(render(report, args.json or emits_spec))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
