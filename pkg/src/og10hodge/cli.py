"""Command line front end.

Diamond producing verbs print the interchange format so that outputs can
be fed back in as inputs; every verb also speaks json through
``--output json``.  Exit codes: 0 on success, 1 when a mathematical
check fails or a domain error occurs, 2 on usage or file format errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import pipeline
from .diamond import DiamondError, DuplicateEntry, VirtualDiamond
from .diamondfile import ParseError, parse_diamond, write_diamond
from .ledger import Inconsistent, StratumRankTable, solve_epsilon
from .partitions import Partition
from .pipeline import ConsistencyError
from .series import goettsche, macdonald_sym
from .symfunc import ext_power, schur, sym_power
from .validators import validation_report


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_arg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _load(path: str) -> VirtualDiamond:
    if path == "-":
        return parse_diamond(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_diamond(handle.read())


def _print_json(payload: dict):
    print(json.dumps(payload, sort_keys=True))


def _entry_list(d: VirtualDiamond) -> list[list[int]]:
    return [[p, q, mult] for (p, q), mult in d.items()]


def _emit_diamond(args, command: str, d: VirtualDiamond) -> int:
    if args.output == "json":
        _print_json({"command": command, "entries": _entry_list(d)})
    else:
        print(write_diamond(d), end="")
    return 0


def _half_rows(d: VirtualDiamond, dim: int) -> list[str]:
    return [
        " ".join(str(d[w - j, j]) for j in range(w // 2 + 1))
        for w in range(0, dim + 1, 2)
    ]


def _cmd_k3(args) -> int:
    return _emit_diamond(args, "k3", pipeline.k3())


def _cmd_hilb(args) -> int:
    surface = _load(args.surface) if args.surface else pipeline.k3()
    return _emit_diamond(args, "hilb", goettsche(surface, args.n))


def _cmd_sym(args) -> int:
    return _emit_diamond(args, "sym", sym_power(_load(args.file), args.n))


def _cmd_ext(args) -> int:
    return _emit_diamond(args, "ext", ext_power(_load(args.file), args.n))


def _cmd_schur(args) -> int:
    return _emit_diamond(args, "schur", schur(_load(args.file), args.shape))


def _cmd_tensor(args) -> int:
    return _emit_diamond(args, "tensor", _load(args.left) * _load(args.right))


def _cmd_og10(args) -> int:
    d = pipeline.og10_diamond()
    even_betti = [d.betti(w) for w in range(0, 11, 2)]
    if args.output == "json":
        _print_json(
            {
                "command": "og10",
                "entries": _entry_list(d),
                "betti": list(d.betti_numbers()),
                "even_betti": even_betti,
                "euler": d.euler(),
                "ok": True,
            }
        )
        return 0
    print("OG10 Hodge diamond, half rows h^{d,0} .. by even degree d:")
    for row in _half_rows(d, 10):
        print(row)
    print("even Betti numbers b_0 b_2 .. b_10:")
    print(" ".join(str(b) for b in even_betti))
    print(f"Euler characteristic: {d.euler()}")
    return 0


def _cmd_theorem_b(args) -> int:
    og10_match = pipeline.og10_schur_decomposition() == pipeline.og10_diamond()
    hilb5_match = pipeline.hilb5_schur_decomposition() == pipeline.hilb5()
    ok = og10_match and hilb5_match
    if args.output == "json":
        _print_json(
            {
                "command": "theorem-b",
                "og10_match": og10_match,
                "hilb5_match": hilb5_match,
                "ok": ok,
            }
        )
    else:
        print(f"og10 schur decomposition matches: {'ok' if og10_match else 'FAIL'}")
        print(f"hilb5 schur decomposition matches: {'ok' if hilb5_match else 'FAIL'}")
    return 0 if ok else 1


def _cmd_validate(args) -> int:
    d = _load(args.file)
    if not d.is_nonnegative():
        print("validate requires a genuine diamond, found negative entries",
              file=sys.stderr)
        return 1
    report = validation_report(d, args.dim, args.euler)
    if args.output == "json":
        _print_json({"command": "validate", **report})
    else:
        symmetry = report["hodge_symmetry"]
        print(f"hodge symmetry: {'ok' if symmetry['ok'] else 'FAIL'}")
        poincare = report["poincare"]
        print(
            f"poincare duality (dim {poincare['dim']}): "
            f"{'ok' if poincare['ok'] else 'FAIL'}"
        )
        salamon = report["salamon"]
        if salamon.get("applicable", True):
            print(
                f"salamon relation (n={salamon['n']}): "
                f"lhs {salamon['lhs']} vs rhs {salamon['rhs']}: "
                f"{'ok' if salamon['ok'] else 'FAIL'}"
            )
        else:
            print("salamon relation: not applicable in odd dimension")
        if "euler" in report:
            euler = report["euler"]
            print(
                f"euler characteristic: {euler['value']} vs expected "
                f"{euler['expected']}: {'ok' if euler['ok'] else 'FAIL'}"
            )
        print("all checks passed" if report["ok"] else "some checks FAILED")
    return 0 if report["ok"] else 1


def _cmd_ledger(args) -> int:
    blowup = StratumRankTable(
        b_minus_sigma=(1, 0),
        sigma_minus_delta=(2, 0),
        delta=(args.blowup_delta, 0),
    )
    companion = StratumRankTable(
        b_minus_sigma=(1, 0),
        sigma_minus_delta=(1, 1),
        delta=(args.companion_delta, 0),
    )
    solution = solve_epsilon(blowup, companion)
    rows = [
        {
            "x": m.extra_on_delta,
            "epsilon": m.epsilon,
            "blowup": {"r_b": m.r_b, "r_sigma": m.r_sigma, "r_delta": m.r_delta},
            "companion": {"r_b": c.r_b, "r_sigma": c.r_sigma, "r_delta": c.r_delta},
        }
        for m, c in solution.consistent
    ]
    if args.output == "json":
        _print_json({"command": "ledger-solve", "solutions": rows, "ok": True})
    else:
        print("consistent assignments shared by both fibrations:")
        for row in rows:
            print(
                f"x={row['x']}: epsilon={row['epsilon']}; "
                f"blowup r_B={row['blowup']['r_b']} "
                f"r_Sigma={row['blowup']['r_sigma']} "
                f"r_Delta={row['blowup']['r_delta']}; "
                f"companion r_B={row['companion']['r_b']} "
                f"r_Sigma={row['companion']['r_sigma']} "
                f"r_Delta={row['companion']['r_delta']}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="og10hodge",
        description="Exact integer Hodge diamond calculator for OG10.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=("table", "json"),
        default="table",
        help="output format (default: table)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("k3", parents=[common], help="print the K3 diamond")
    p.set_defaults(handler=_cmd_k3)

    p = sub.add_parser(
        "hilb",
        parents=[common],
        help="Hilbert scheme of n points on a surface (default K3)",
    )
    p.add_argument("--n", type=_nonneg_arg, required=True)
    p.add_argument("--surface", help="diamond file of the surface")
    p.set_defaults(handler=_cmd_hilb)

    p = sub.add_parser("sym", parents=[common], help="n-th symmetric power")
    p.add_argument("--n", type=_nonneg_arg, required=True)
    p.add_argument("file")
    p.set_defaults(handler=_cmd_sym)

    p = sub.add_parser("ext", parents=[common], help="n-th exterior power")
    p.add_argument("--n", type=_nonneg_arg, required=True)
    p.add_argument("file")
    p.set_defaults(handler=_cmd_ext)

    p = sub.add_parser(
        "schur", parents=[common], help="Schur functor of a given shape"
    )
    p.add_argument(
        "--lambda",
        dest="shape",
        type=_partition_arg,
        required=True,
        metavar="PARTS",
        help="partition as comma separated parts, e.g. 2,1",
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_schur)

    p = sub.add_parser("tensor", parents=[common], help="tensor product")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_tensor)

    p = sub.add_parser(
        "og10", parents=[common], help="assemble the OG10 Hodge diamond"
    )
    p.add_argument(
        "--format",
        dest="output",
        choices=("table", "json"),
        help="alias for --output",
    )
    p.set_defaults(handler=_cmd_og10)

    p = sub.add_parser(
        "theorem-b",
        parents=[common],
        help="check both closed form Schur decompositions",
    )
    p.set_defaults(handler=_cmd_theorem_b)

    p = sub.add_parser(
        "validate", parents=[common], help="structural checks on a diamond file"
    )
    p.add_argument("file")
    p.add_argument("--dim", type=_nonneg_arg, required=True)
    p.add_argument("--euler", type=int, default=None)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser(
        "ledger", parents=[common], help="Ngo string bookkeeping"
    )
    p.add_argument("action", choices=("solve",))
    p.add_argument(
        "--blowup-delta",
        type=_nonneg_arg,
        default=4,
        help="observed trivial rank on Delta for the blowup fibration",
    )
    p.add_argument(
        "--companion-delta",
        type=_nonneg_arg,
        default=2,
        help="observed trivial rank on Delta for the companion fibration",
    )
    p.set_defaults(handler=_cmd_ledger)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return 2
    except (ParseError, DuplicateEntry) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DiamondError, ConsistencyError, Inconsistent, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
