"""Command-line front end.

Subcommands: generate, verify, spectra, enumerate, power, inverse,
commute, tables.  Exit codes: 0 success, 1 a checked property came out
false (e.g. `verify --expect natural` on a non-natural square), 2 usage
or input errors.  All data output is deterministic — identical
invocations produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (
    FIER9_EXPECTED_PAIRS,
    commuting_pair_report,
    fier9_commuting_pairs,
)
from .construct import (
    FRIERSON9_SETS,
    format_lucas_params,
    frierson_to_lucas,
    frierson_well_formed,
    lucas,
    parse_frierson_params,
    parse_lucas_params,
)
from .enumeration import census, enumerate_fundamental
from .exactmat import SquareMatrix
from .spectra import (
    eigenvalues,
    lucas3_inverse,
    matrix_power,
    singular_values,
    spectrum_report,
    table1_row,
)
from .verify import recover_lucas_params, verify_report

# Table 1 pairs letters whose squares share a spectrum; keep its row order.
_TABLE1_ROWS = (("A", "G"), ("D", "J"), ("B", "H"), ("E", "K"), ("C", "I"), ("F", "L"))

_EXPECT_CHOICES = ("magic", "regular", "natural", "fnc")


def _parse_family_params(family: str, text: str, level=None):
    """Parameter grammar -> level triples, with an optional level check."""
    if family == "frierson":
        pairs = parse_frierson_params(text)
        if not frierson_well_formed(pairs):
            print(
                "warning: zero parameters give a degenerate (never natural) "
                "frierson square",
                file=sys.stderr,
            )
        triples = frierson_to_lucas(pairs)
    else:
        triples = parse_lucas_params(text)
    if level is not None and len(triples) != level:
        raise ValueError(
            f"--level {level} disagrees with {len(triples)} parameter group(s)"
        )
    return triples


def _read_matrix(path: str, fmt: str = "auto") -> SquareMatrix:
    text = Path(path).read_text()
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "grid"
    if fmt == "json":
        return SquareMatrix.from_json(text)
    return SquareMatrix.from_grid(text)


def _matrix_text(m: SquareMatrix, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(m.to_json(), indent=2) + "\n"
    return m.to_grid()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_generate(args) -> int:
    triples = _parse_family_params(args.family, args.params, args.level)
    _emit(_matrix_text(lucas(triples), args.format), args.out)
    return 0


def _cmd_verify(args) -> int:
    m = _read_matrix(args.matrix, args.format)
    report = verify_report(m)
    out = report.to_json()
    failures = []

    expectations = []
    for chunk in args.expect or []:
        expectations.extend(p.strip() for p in chunk.split(",") if p.strip())
    for prop in expectations:
        if prop not in _EXPECT_CHOICES:
            raise ValueError(
                f"unknown property {prop!r}; choose from {', '.join(_EXPECT_CHOICES)}"
            )
        value = {
            "magic": report.is_magic,
            "regular": report.is_regular,
            "natural": report.is_natural,
            "fnc": report.fnc_pass,
        }[prop]
        if value is not True:
            failures.append(prop)

    if args.recover_params:
        if report.lucas_params is None:
            failures.append("recover-params")
        else:
            out["recovered_params"] = format_lucas_params(report.lucas_params)

    if failures:
        out["failed_expectations"] = failures
    print(json.dumps(out, indent=2))
    return 1 if failures else 0


def _spectra_markdown(triples) -> str:
    """One Table-1-style markdown row for any level: |lambda_i| per level
    and the nonzero sigma/sqrt(3) integers."""
    lev = len(triples)
    evs = eigenvalues(triples)
    svs = singular_values(triples)
    lams = [str(abs(evs[2 * i - 1])) for i in range(1, lev + 1)]
    sigs = []
    for r in svs[1 : 2 * lev + 1]:
        if r.radicand not in (0, 3):  # never happens: sigma = integer * sqrt(3)
            raise AssertionError("sigma/sqrt(3) is not an integer")
        sigs.append(str(0 if r.is_zero() else int(r.coeff)))
    head = [f"\\|lambda_{i}\\|" for i in range(1, lev + 1)]
    head += [f"sigma_{j}/sqrt(3)" for j in range(2, 2 * lev + 2)]
    lines = [
        "| " + " | ".join(["params"] + head) + " |",
        "|" + "---|" * (len(head) + 1),
        "| " + " | ".join([format_lucas_params(triples)] + lams + sigs) + " |",
    ]
    return "\n".join(lines) + "\n"


def _cmd_spectra(args) -> int:
    if args.matrix is not None:
        m = _read_matrix(args.matrix, "auto")
        triples = recover_lucas_params(m)
        if triples is None:
            raise ValueError(
                f"{args.matrix} is not a compound Lucas square; "
                "closed-form spectra need family parameters"
            )
    else:
        if args.params is None:
            raise ValueError("provide --params or a matrix file")
        triples = _parse_family_params(args.family, args.params, args.level)
    report = spectrum_report(triples)
    print(json.dumps(report.to_json(), indent=2))
    print()
    sys.stdout.write(_spectra_markdown(triples))
    return 0


def _cmd_enumerate(args) -> int:
    if not args.fundamental:
        print(json.dumps(census(args.level).to_json(), indent=2))
        return 0
    result = enumerate_fundamental(
        args.level, args.family, emit_matrices=args.emit is not None
    )
    if args.count_only or result.representatives is None:
        print(result.fundamental_count)
        return 0
    lines = [format_lucas_params(rep) for rep in result.representatives]
    if args.emit is not None:
        outdir = Path(args.emit)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "params.txt").write_text("\n".join(lines) + "\n")
        width = len(str(len(result.representatives) - 1))
        for i, rep in enumerate(result.representatives):
            (outdir / f"rep_{i:0{width}d}.txt").write_text(lucas(rep).to_grid())
        print(f"{result.fundamental_count} representatives -> {outdir}")
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_power(args) -> int:
    triples = _parse_family_params(args.family, args.params, args.level)
    _emit(_matrix_text(matrix_power(triples, args.exponent), args.format), args.out)
    return 0


def _cmd_inverse(args) -> int:
    triples = parse_lucas_params(args.params)
    if len(triples) != 1:
        raise ValueError("inverse takes a single order-3 triple c,v,y")
    _emit(lucas3_inverse(*triples[0]).to_grid(), args.out)
    return 0


def _cmd_commute(args) -> int:
    if args.suite is not None:
        found = fier9_commuting_pairs()
        expected = sorted(tuple(sorted(p)) for p in FIER9_EXPECTED_PAIRS)
        ok = found == expected
        print(
            json.dumps(
                {
                    "suite": args.suite,
                    "commuting_pairs": [list(p) for p in found],
                    "expected_pairs": [list(p) for p in expected],
                    "match": ok,
                },
                indent=2,
            )
        )
        return 0 if ok else 1
    if len(args.matrices) != 2:
        raise ValueError("commute needs two matrix files (or --suite fier9)")
    a = _read_matrix(args.matrices[0], "auto")
    b = _read_matrix(args.matrices[1], "auto")
    print(json.dumps(commuting_pair_report(a, b).to_json(), indent=2))
    return 0


def _cmd_tables(args) -> int:
    if args.which == 1:
        rows = []
        for first, second in _TABLE1_ROWS:
            r1 = table1_row(*FRIERSON9_SETS[first])
            r2 = table1_row(*FRIERSON9_SETS[second])
            if (r1["abs_lambda1"], r1["abs_lambda2"], r1["sigma_over_sqrt3"]) != (
                r2["abs_lambda1"],
                r2["abs_lambda2"],
                r2["sigma_over_sqrt3"],
            ):  # pragma: no cover - fixture letters always pair up
                raise AssertionError(f"{first} and {second} no longer share a row")
            rows.append((f"{first}, {second}", r1))
        print("| v,y,s,t | \\|lambda_1\\| | \\|lambda_2\\| | "
              "sigma_2/sqrt(3) | sigma_3/sqrt(3) | sigma_4/sqrt(3) | sigma_5/sqrt(3) |")
        print("|---|---|---|---|---|---|---|")
        for label, r in rows:
            sig = " | ".join(str(x) for x in r["sigma_over_sqrt3"])
            print(f"| {label} | {r['abs_lambda1']} | {r['abs_lambda2']} | {sig} |")
    else:
        print("| l | n | mu | N_L | N_F | rank | N_SV |")
        print("|---|---|---|---|---|---|---|")
        for lev in range(1, 7):
            row = census(lev)
            print(
                f"| {row.level} | {row.order:,} | {row.mu:,} "
                f"| {row.lucas_fundamental:,} | {row.frierson_fundamental:,} "
                f"| {row.rank} | {row.sv_classes:,} |"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucasmagic",
        description="Compound Lucas/Frierson magic squares: construct, "
        "verify, decompose, enumerate, and test commutation — exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_params(p, params_required=True):
        p.add_argument("--family", choices=("lucas", "frierson"), default="lucas")
        p.add_argument(
            "--params",
            required=params_required,
            help='level groups split by ";", values by ","; innermost level '
            'first ("c,v,y;..." for lucas, "v,y;..." for frierson)',
        )
        p.add_argument("--level", type=int, help="cross-check the group count")

    p = sub.add_parser("generate", help="construct a square from parameters")
    family_params(p)
    p.add_argument("--format", choices=("grid", "json"), default="grid")
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="run all property checks on a matrix file")
    p.add_argument("matrix", help="matrix file (grid or json)")
    p.add_argument("--format", choices=("auto", "grid", "json"), default="auto")
    p.add_argument(
        "--expect",
        action="append",
        metavar="PROP[,PROP...]",
        help=f"exit 1 unless these hold ({', '.join(_EXPECT_CHOICES)})",
    )
    p.add_argument(
        "--recover-params",
        action="store_true",
        help="also report the recovered construction parameters (exit 1 if none)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectra", help="closed-form eigen/singular structure")
    p.add_argument("matrix", nargs="?", help="matrix file (alternative to --params)")
    family_params(p, params_required=False)
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("enumerate", help="census or fundamental representatives")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--family", choices=("lucas", "frierson"), default="lucas")
    p.add_argument(
        "--fundamental",
        action="store_true",
        help="list fundamental representatives instead of the census row",
    )
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--emit", metavar="DIR", help="write params.txt + grid files")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("power", help="k-th matrix power by closed form")
    family_params(p)
    p.add_argument("-k", "--exponent", type=int, required=True)
    p.add_argument("--format", choices=("grid", "json"), default="grid")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser("inverse", help="exact inverse of an order-3 square")
    p.add_argument("--params", required=True, help='"c,v,y"')
    p.add_argument("--out")
    p.set_defaults(func=_cmd_inverse)

    p = sub.add_parser("commute", help="commutation report for two squares")
    p.add_argument("matrices", nargs="*", help="two matrix files")
    p.add_argument("--suite", choices=("fier9",), help="run the fixture suite")
    p.set_defaults(func=_cmd_commute)

    p = sub.add_parser("tables", help="reference tables as markdown")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
