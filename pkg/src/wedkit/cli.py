"""Command-line interface: one binary, JSON in, one JSON document out.

Exit codes: 0 on success, 2 on input validation problems (message on
stderr), 1 on internal assertion failures.  Output is byte-identical
across runs for identical inputs (keys sorted, no timestamps, exact
rational arithmetic throughout).  ``--pretty`` renders human-readable
tables instead of JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Algebra, Subspace
from .errors import ExponentHypothesisFails, InputError, InternalError, WedkitError
from .ga import (
    GaRep,
    clebsch_gordan,
    clebsch_gordan_oracle,
    hom_dim,
    hom_dim_oracle,
    sl2_consistency,
)
from .linalg import Matrix, format_rational
from .quiver import Quiver, envelope, positive_roots
from .tensor import (
    GradedObject,
    Permutation,
    TensorMorphism,
    kimura_dim,
    lambda_trace,
    nagata_higman_check,
    twisted_trace,
)
from .wedderburn import Section, conjugate_sections, lift_section


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        _print_table(payload)
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        sys.stdout.write("\n")


def _print_table(payload, indent: str = "") -> None:
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _print_table(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                _print_table(value, indent + "  ")
                print()
            else:
                print(f"{indent}- {value}")
    else:
        print(f"{indent}{payload}")


# -- verb handlers -----------------------------------------------------------


def _cmd_radical(args) -> dict:
    alg = Algebra.from_json(_load_json(args.input))
    rad = alg.radical()
    return {
        "radical_dim": rad.dim,
        "radical_basis": [[format_rational(c) for c in v] for v in rad.basis],
    }


def _cmd_decompose(args) -> dict:
    alg = Algebra.from_json(_load_json(args.input))
    return alg.semisimple_decompose().to_json()


def _cmd_check(args) -> dict:
    alg = Algebra.from_json(_load_json(args.input))
    return alg.is_wedderburn().to_json()


def _cmd_split(args) -> dict:
    alg = Algebra.from_json(_load_json(args.input))
    section = lift_section(alg)
    return section.to_json()


def _cmd_conjugate(args) -> dict:
    alg = Algebra.from_json(_load_json(args.input))
    rad = alg.radical()
    quotient, proj = alg.quotient(rad)
    s1 = Section(alg, quotient, proj, Matrix.from_json(_load_json(args.s1)))
    s2 = Section(alg, quotient, proj, Matrix.from_json(_load_json(args.s2)))
    u = conjugate_sections(alg, s1, s2)
    return {"u": [format_rational(c) for c in u]}


def _cmd_envelope(args) -> dict:
    q = Quiver.from_json(_load_json(args.input))
    return envelope(q).to_json()


def _cmd_roots(args) -> dict:
    name = args.type.strip().upper()
    if len(name) < 2 or name[0] not in "ADE":
        raise InputError(f"bad type {args.type!r}: expected e.g. A4, D5, E6")
    try:
        rank = int(name[1:])
    except ValueError as exc:
        raise InputError(f"bad type {args.type!r}") from exc
    rs = positive_roots(name[0], rank)
    return {
        "type": rs.name,
        "count": len(rs.positive_roots),
        "roots": [list(r) for r in rs.positive_roots],
    }


def _cmd_trace(args) -> dict:
    mats_raw = _load_json(args.mats)
    if not isinstance(mats_raw, list) or not mats_raw:
        raise InputError("mats file must hold a nonempty JSON list of matrices")
    mats = tuple(Matrix.from_json(m) for m in mats_raw)
    sigma = Permutation.from_cycles(args.perm, len(mats))
    tm = TensorMorphism(mats, sigma)
    value = twisted_trace(tm)
    return {"trace": format_rational(value)}


def _cmd_lambda(args) -> dict:
    f = Matrix.from_json(_load_json(args.mat))
    if args.n < 1:
        raise InputError("-n must be at least 1")
    return {"n": args.n, "lambda_trace": format_rational(lambda_trace(f, args.n))}


def _cmd_kimura(args) -> dict:
    if args.p < 0 or args.q < 0:
        raise InputError("dimensions must be nonnegative")
    return kimura_dim(GradedObject(args.p, args.q)).to_json()


def _cmd_nagata(args) -> dict:
    data = _load_json(args.input)
    if isinstance(data, dict) and "generators" in data:
        data = data["generators"]
    if not isinstance(data, list) or not data:
        raise InputError("input must be a JSON list of matrices (or {'generators': [...]})")
    gens = [Matrix.from_json(m) for m in data]
    report = nagata_higman_check(gens, args.n)
    return report.to_json()


def _cmd_ga_hom(args) -> dict:
    if args.m < 0 or args.n < 0:
        raise InputError("-m and -n must be nonnegative")
    formula = hom_dim(args.m, args.n)
    oracle = hom_dim_oracle(args.m, args.n)
    if formula != oracle:
        raise InternalError("hom dimension formula disagrees with the exact solve")
    return {"m": args.m, "n": args.n, "hom_dim": formula, "oracle_dim": oracle}


def _cmd_ga_cg(args) -> dict:
    if args.m < 0 or args.n < 0:
        raise InputError("-m and -n must be nonnegative")
    components = clebsch_gordan(args.m, args.n)
    oracle = clebsch_gordan_oracle(args.m, args.n)
    if components != oracle:
        raise InternalError("tensor decomposition disagrees with the Jordan oracle")
    return {"m": args.m, "n": args.n, "components": components}


def _cmd_ga_sl2(args) -> dict:
    if args.max < 0:
        raise InputError("--max must be nonnegative")
    return sl2_consistency(args.max).to_json()


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedkit",
        description="Exact computations with finite-dimensional algebras over Q.",
    )
    parser.add_argument(
        "--pretty", action="store_true", help="human-readable output instead of JSON"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("radical", help="Jacobson radical of an algebra")
    p.add_argument("-i", "--input", required=True, help="algebra JSON file")
    p.set_defaults(handler=_cmd_radical)

    p = sub.add_parser("decompose", help="simple blocks of a semisimple algebra")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("check", help="radical index and quotient block report")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("split", help="multiplicative section of A -> A/rad(A)")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(handler=_cmd_split)

    p = sub.add_parser("conjugate", help="conjugating unit between two sections")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--s1", required=True, help="first section matrix JSON")
    p.add_argument("--s2", required=True, help="second section matrix JSON")
    p.set_defaults(handler=_cmd_conjugate)

    p = sub.add_parser("envelope", help="semisimple envelope blocks of a path algebra")
    p.add_argument("-i", "--input", required=True, help="quiver JSON file")
    p.set_defaults(handler=_cmd_envelope)

    p = sub.add_parser("roots", help="positive roots of an ADE diagram")
    p.add_argument("--type", required=True, help="diagram name, e.g. A4 or E6")
    p.set_defaults(handler=_cmd_roots)

    p = sub.add_parser("trace", help="twisted trace of a permuted tensor product")
    p.add_argument("--perm", required=True, help='cycle notation, e.g. "(0 1 2)"')
    p.add_argument("--mats", required=True, help="JSON list of square matrices")
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("lambda", help="trace of the n-th alternating power")
    p.add_argument("--mat", required=True, help="matrix JSON file")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_lambda)

    p = sub.add_parser("kimura", help="Kimura dimension of a graded space")
    p.add_argument("-p", type=int, required=True, help="even dimension")
    p.add_argument("-q", type=int, required=True, help="odd dimension")
    p.set_defaults(handler=_cmd_kimura)

    p = sub.add_parser("nagata", help="nil-exponent bound check on matrix generators")
    p.add_argument("-i", "--input", required=True, help="JSON list of matrices")
    p.add_argument("-n", type=int, required=True, help="nil exponent")
    p.set_defaults(handler=_cmd_nagata)

    p = sub.add_parser("ga-hom", help="intertwiner space dimension between blocks")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_ga_hom)

    p = sub.add_parser("ga-cg", help="tensor decomposition of two blocks")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_ga_cg)

    p = sub.add_parser("ga-sl2", help="indecomposable/irreducible consistency report")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=_cmd_ga_sl2)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        payload = args.handler(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except ExponentHypothesisFails as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(
                "witness: " + json.dumps(exc.witness.to_json(), sort_keys=True),
                file=sys.stderr,
            )
        return 2
    except (InputError, WedkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion failure: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.pretty)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
