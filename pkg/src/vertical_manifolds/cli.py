"""Command-line interface.

Exit codes: 0 success, 1 internal consistency failure, 2 usage error,
3 degenerate arc, 4 invalid trisection data.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional

from .arcs import decompose_full
from .classify import ConsistencyError, UnrecognizedTuple, classify_four_manifold
from .enumeration import enumerate_case_a, enumerate_case_b, enumerate_identity
from .families import is_vertical_realizable
from .geometry import ArcDegeneracy, parse_arc
from .records import data_from_record, data_to_record, dumps, six_tuple_to_record
from .render import render_svg
from .surgery import DoubleForm, SurgeryPresentation, classify_double, homology
from .templates import named_template, template_names
from .trisection import (
    InvalidData,
    build_case_A,
    build_case_B,
    build_identity,
    canonical,
    six_tuple,
    validate,
)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_INVALID_DATA = 4

OUTPUT_DIR_ENV = "VERTICAL_MANIFOLDS_OUTPUT_DIR"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _range(text: str):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range")
    return lo, hi


def _sign(text: str) -> int:
    v = int(text)
    if v not in (1, -1):
        raise argparse.ArgumentTypeError("sign must be 1 or -1")
    return v


def _add_format(p):
    p.add_argument("--format", choices=("text", "json"), default="text")


def _add_data(p):
    g = p.add_argument_group("trisection data (a JSON file or builder flags)")
    g.add_argument("--data", help="JSON file with trisection data")
    g.add_argument("--case", choices=("A", "B", "Id"), help="build data of the given case")
    g.add_argument("--sign", type=_sign, default=1, help="sign of the twist (default 1)")
    g.add_argument("--subcase", choices=("P0", "Pm1", "Pm2"), default="P0")
    g.add_argument("--q", type=int, help="family parameter q for subcase P0")
    g.add_argument("--power", type=int, choices=(1, 4), default=1)
    g.add_argument("--eps2", type=_sign, default=1)


def _load_data(args):
    if args.data:
        try:
            rec = json.loads(Path(args.data).read_text())
            data = data_from_record(rec)
        except OSError as exc:
            raise CliError(EXIT_USAGE, f"cannot read {args.data}: {exc.strerror}") from None
        except (ValueError, TypeError) as exc:
            raise CliError(EXIT_INVALID_DATA, f"invalid data: {exc}") from None
    elif args.case == "A":
        if args.subcase == "P0" and args.q is None:
            raise CliError(EXIT_USAGE, "--q is required for subcase P0")
        try:
            q = None if args.q is None else args.sign * args.q
            data = build_case_A(args.sign, args.subcase, q)
        except ValueError as exc:
            raise CliError(EXIT_INVALID_DATA, f"invalid data: {exc}") from None
    elif args.case == "B":
        data = build_case_B(args.power, args.sign, args.eps2)
    elif args.case == "Id":
        data = build_identity()
    else:
        raise CliError(EXIT_USAGE, "give --data FILE or --case")
    problems = validate(data)
    if problems:
        raise CliError(EXIT_INVALID_DATA, "invalid data: " + "; ".join(problems))
    return data


def _load_arc(args):
    if args.template:
        try:
            return named_template(args.template)
        except (KeyError, ValueError) as exc:
            raise CliError(EXIT_USAGE, str(exc)) from None
    if args.arc:
        try:
            return parse_arc(Path(args.arc).read_text())
        except OSError as exc:
            raise CliError(EXIT_USAGE, f"cannot read {args.arc}: {exc.strerror}") from None
        except ValueError as exc:
            raise CliError(EXIT_DEGENERATE, f"bad arc file: {exc}") from None
    raise CliError(EXIT_USAGE, "give --arc FILE or --template NAME")


def _add_arc(p):
    g = p.add_argument_group("arc")
    g.add_argument("--arc", help="arc file: one 'x y' vertex per line, rationals like 3/2")
    g.add_argument("--template", help="named template: " + ", ".join(template_names()) + ", sum_R_S")


def _emit(args, record, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(dumps(record))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_enumerate(args) -> int:
    if args.case == "A":
        lo, hi = args.q
        instances = list(enumerate_case_a(lo, hi))
    elif args.case == "B":
        instances = list(enumerate_case_b())
    else:
        instances = list(enumerate_identity())
    rows = []
    failures = 0
    for inst in instances:
        t = six_tuple(inst.data)
        ok = canonical(t) == canonical(inst.closed_form)
        if inst.case == "Id":
            verdict = "unclassified"
        else:
            try:
                verdict = str(classify_four_manifold(inst.data))
            except (ConsistencyError, UnrecognizedTuple) as exc:
                verdict = f"error: {exc}"
                ok = False
        failures += not ok
        rows.append(
            {
                "case": inst.case,
                "params": inst.param_dict,
                "six_tuple": six_tuple_to_record(canonical(t)),
                "verdict": verdict,
                "consistent": ok,
            }
        )
    lines = []
    for r in rows:
        mark = "" if r["consistent"] else "  INCONSISTENT"
        params = " ".join(f"{k}={v}" for k, v in r["params"].items()) or "-"
        entries = list(r["six_tuple"].values())
        lines.append(
            f"{r['case']:<3}{params:<26}({', '.join(entries[:3])}; {', '.join(entries[3:])})  {r['verdict']}{mark}"
        )
    _emit(args, {"rows": rows, "count": len(rows)}, "\n".join(lines))
    return EXIT_INCONSISTENT if failures else EXIT_OK


def cmd_six_tuple(args) -> int:
    data = _load_data(args)
    t = six_tuple(data)
    c = canonical(t)
    rec = {"data": data_to_record(data), "six_tuple": six_tuple_to_record(t), "canonical": six_tuple_to_record(c)}
    text = t.table() + ("\ncanonical:\n" + c.table() if c != t else "")
    _emit(args, rec, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    data = _load_data(args)
    try:
        verdict = classify_four_manifold(data)
    except UnrecognizedTuple as exc:
        raise CliError(EXIT_INVALID_DATA, str(exc)) from None
    except ConsistencyError as exc:
        raise CliError(EXIT_INCONSISTENT, str(exc)) from None
    _emit(args, {"verdict": str(verdict), "names": list(verdict.names)}, str(verdict))
    return EXIT_OK


def cmd_decompose(args) -> int:
    data = _load_data(args)
    arc = _load_arc(args)
    try:
        result = decompose_full(arc, data)
    except ArcDegeneracy as exc:
        raise CliError(EXIT_DEGENERATE, f"degenerate arc: {exc}") from None
    ok, witness = is_vertical_realizable(result.manifold, args.k_bound, args.count_bound)
    rec = {
        "manifold": str(result.manifold),
        "realizable": ok,
        "witness": witness.as_dict() if witness else None,
        "word": [str(e) for e in result.word],
        "bigons": result.bigons,
        "pieces": [str(v) for v in result.values],
    }
    text = "\n".join(
        [
            str(result.manifold),
            f"witness: {witness}" if witness else "witness: none within bounds",
            f"word: {result.word}",
        ]
    )
    _emit(args, rec, text)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def cmd_homology(args) -> int:
    group = homology(SurgeryPresentation(args.r1, args.r2, args.n))
    rec = {"group": str(group), "factors": list(group.factors), "order": group.order}
    _emit(args, rec, str(group))
    return EXIT_OK


def cmd_double(args) -> int:
    try:
        name = classify_double(DoubleForm(args.f1, args.f2, args.n))
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    _emit(args, {"double": name}, name)
    return EXIT_OK


def cmd_render(args) -> int:
    # without an arc only the model is drawn
    arc = _load_arc(args) if args.arc or args.template else None
    out_dir = Path(os.environ.get(OUTPUT_DIR_ENV, "."))
    default = args.template or (Path(args.arc).stem if args.arc else "model")
    name = args.output or default + ".svg"
    path = out_dir / name
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        path.write_text(render_svg(arc, title=args.template or ""))
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"cannot write {path}: {exc.strerror}") from None
    _emit(args, {"path": str(path)}, str(path))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vertical-manifolds",
        description="Vertical 3-manifolds of simplified (2,0)-trisection maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="six-tuples and verdicts over a family")
    p.add_argument("--case", choices=("A", "B", "Id"), required=True)
    p.add_argument("--q", type=_range, default=(-20, 20), help="range LO..HI of q for case A")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("six-tuple", help="six vertical manifolds of the standard arcs")
    _add_data(p)
    _add_format(p)
    p.set_defaults(func=cmd_six_tuple)

    p = sub.add_parser("classify", help="identify the 4-manifold")
    _add_data(p)
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="vertical manifold of an arc")
    _add_data(p)
    _add_arc(p)
    p.add_argument("--k-bound", type=int, default=50)
    p.add_argument("--count-bound", type=int, default=5)
    _add_format(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("homology", help="first homology of a two-component surgery")
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("double", help="identify the double from its Kirby data")
    p.add_argument("--f1", type=int, required=True)
    p.add_argument("--f2", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("render", help=f"write an SVG of the model and an arc (directory from ${OUTPUT_DIR_ENV})")
    _add_arc(p)
    p.add_argument("--output", help="file name (default: template or arc file name)")
    _add_format(p)
    p.set_defaults(func=cmd_render)
    return parser


def _join_ranges(argv: List[str]) -> List[str]:
    # "--q -6..6" would otherwise be read as an option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--q" and i + 1 < len(argv) and ".." in argv[i + 1]:
            out.append("--q=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_ranges(list(sys.argv[1:] if argv is None else argv)))
        if getattr(args, "k_bound", 1) < 1 or getattr(args, "count_bound", 1) < 0:
            parser.error("bounds must be positive")
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 after --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidData as exc:
        print(f"error: invalid data: {exc}", file=sys.stderr)
        return EXIT_INVALID_DATA


if __name__ == "__main__":
    sys.exit(main())
