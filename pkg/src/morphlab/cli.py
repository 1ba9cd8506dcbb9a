"""Command-line front door.

Subcommands: analyze, normalize, expand, verify, matrix.  Machine output
is JSON; domain errors exit with code 2 and parse errors with code 3,
both printing {"error": {...}} so scripts can react.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import spectral, streams
from .errors import MorphlabError, ParseError
from .fixtures import load_matrix_text
from .normalize import MorphicPresentation, normalize
from .parser import format_morphism, parse_file
from .streams import image_prefix, prefix_equal

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DOMAIN_ERROR = 2
EXIT_PARSE_ERROR = 3


def _width_fraction(text):
    value = Fraction(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return value


def _load_file(path):
    return parse_file(Path(path).read_text())


def _resolve_pair(mf, pair_arg, start_arg):
    if pair_arg:
        f_name, g_name = (x.strip() for x in pair_arg.split(","))
        f = mf.morphism(f_name)
        g = mf.morphism(g_name)
    elif mf.pair:
        f = mf.morphism(mf.pair[0])
        g = mf.morphism(mf.pair[1])
    else:
        raise MorphlabError("no pair given: use --pair or a 'pair = f, g;' directive")
    start = start_arg or mf.start
    if start is None:
        raise MorphlabError("no start letter: use --start or a 'start = a;' directive")
    return MorphicPresentation(f, g, start)


def _print_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=False))


def _cmd_analyze(args):
    mf = _load_file(args.file)
    f = mf.morphism(args.morphism)
    report = spectral.analyze_morphism(f, width=args.width)
    if args.json:
        _print_json(report)
    else:
        print(f"p = {report['p']}")
        for block in report["blocks"]:
            letters = ",".join(block["letters"])
            lo, hi = block["radius"]["enclosure"]
            print(f"block [{letters}] {block['kind']} radius in [{lo}, {hi}]")
        for letter, growth in report["letter_growth"].items():
            print(f"growth({letter}) = ({growth['lambda_per_step']}, {growth['d']})")
    return EXIT_OK


def _cmd_normalize(args):
    mf = _load_file(args.file)
    pres = _resolve_pair(mf, args.pair, args.start)
    report = normalize(pres)
    payload = report.as_dict(include_stages=args.trace)
    if args.check:
        budget = args.budget if args.budget else streams.default_budget()
        original = image_prefix(pres.g, pres.f, pres.start, args.check, max_pump=budget)
        rebuilt = image_prefix(report.tau, report.sigma, report.start, args.check, max_pump=budget)
        payload["verified_prefix"] = args.check if prefix_equal(original, rebuilt, args.check) else None
        if payload["verified_prefix"] is None:
            raise MorphlabError("normalized output disagrees with the input word")
    if args.emit:
        text = "\n".join(
            (
                format_morphism(args.emit_sigma, report.sigma),
                format_morphism(args.emit_tau, report.tau),
            )
        )
        Path(args.emit).write_text(text + "\n")
        payload["emitted"] = {
            "path": args.emit,
            "sigma": args.emit_sigma,
            "tau": args.emit_tau,
            "start": report.start,
        }
    if args.json:
        _print_json(payload)
    else:
        print(f"start = {report.start}")
        for name, morphism in (("sigma", report.sigma), ("tau", report.tau)):
            print(format_morphism(name, morphism))
        print(f"p = {report.cyclicity_power}, k_seq = {list(report.mortal_counts)}, "
              f"N = {report.visibility_power}, q = {report.stretch_power}")
        print(f"trichotomy case {report.trichotomy_case}; growth "
              f"({report.input_growth.rate.describe()}, {report.input_growth.degree}) -> "
              f"({report.output_growth.rate.describe()}, {report.output_growth.degree})")
        if args.trace:
            for stage in report.stages:
                removed = f" removed {list(stage.removed)}" if stage.removed else ""
                print(f"stage {stage.name}:{removed}")
                print(format_morphism("f", stage.f))
                print(format_morphism("g", stage.g))
    return EXIT_OK


def _cmd_expand(args):
    mf = _load_file(args.file)
    f = mf.morphism(args.morphism)
    start = args.start or mf.start
    if start is None:
        raise MorphlabError("no start letter: use --start or a 'start = a;' directive")
    budget = args.budget if args.budget else streams.default_budget()
    if args.image:
        g = mf.morphism(args.image)
        word = image_prefix(g, f, start, args.limit, max_pump=budget)
    else:
        word = streams.fixed_point_prefix(f, start, args.limit)
    if args.binary:
        out = sys.stdout.buffer
        for letter in word.letters():
            data = letter.encode("utf-8")
            out.write(len(data).to_bytes(4, "big"))
            out.write(data)
        out.flush()
    elif args.json:
        _print_json({"prefix": list(word.letters()), "length": len(word)})
    else:
        print(word.text())
    return EXIT_OK


def _cmd_verify(args):
    mf = _load_file(args.file)
    pres1 = _resolve_pair(mf, args.pair1, args.start)
    pres2 = _resolve_pair(mf, args.pair2, args.start2 or args.start)
    budget = args.budget if args.budget else streams.default_budget()
    w1 = image_prefix(pres1.g, pres1.f, pres1.start, args.len, max_pump=budget)
    w2 = image_prefix(pres2.g, pres2.f, pres2.start, args.len, max_pump=budget)
    mismatch = streams.first_mismatch(w1, w2, args.len)
    payload = {"equal": mismatch is None, "length": args.len, "mismatch_index": mismatch}
    if args.json:
        _print_json(payload)
    elif mismatch is None:
        print(f"equal up to {args.len} symbols")
    else:
        print(f"mismatch at index {mismatch}")
    return EXIT_OK if mismatch is None else EXIT_MISMATCH


def _parse_entry_list(spec_list):
    entries = []
    for item in spec_list:
        parts = item.split(",")
        if len(parts) != 2:
            raise MorphlabError(f"entries look like i,j (1-based), got {item!r}")
        entries.append((int(parts[0]), int(parts[1])))
    return entries


def _growth_payload(growth):
    return {
        "vanishes": growth.is_vanishing,
        "lambda_per_step": growth.rate.describe(),
        "d": growth.degree,
    }


def _cmd_matrix(args):
    matrix = load_matrix_text(Path(args.file).read_text())
    dec = spectral.decompose(matrix)
    payload = {
        "p": dec.p,
        "blocks": dec.blocks_as_json(args.width),
        "entries": [],
        "rows": [],
        "cols": [],
    }
    for i, j in _parse_entry_list(args.entries or []):
        for r in range(dec.p):
            growth = dec.entry_growth(i - 1, j - 1, r)
            payload["entries"].append({"i": i, "j": j, "r": r, **_growth_payload(growth)})
    for i in args.rows or []:
        payload["rows"].append({"i": i, **_growth_payload(dec.row_growth(i - 1))})
    for j in args.cols or []:
        payload["cols"].append({"j": j, **_growth_payload(dec.column_growth(j - 1))})
    if args.json:
        _print_json(payload)
    else:
        print(f"p = {dec.p}")
        for block in payload["blocks"]:
            letters = ",".join(block["letters"])
            lo, hi = block["radius"]["enclosure"]
            print(f"block [{letters}] {block['kind']} radius in [{lo}, {hi}]")

        def fmt(entry):
            if entry["vanishes"]:
                return "0"
            return f"Theta(n^{entry['d']} * ({entry['lambda_per_step']})^n) per step"

        for row in payload["entries"]:
            print(f"({row['i']},{row['j']}) r={row['r']}: {fmt(row)}")
        for row in payload["rows"]:
            print(f"row {row['i']} sum: {fmt(row)}")
        for row in payload["cols"]:
            print(f"column {row['j']} sum: {fmt(row)}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="morphlab",
        description="Analyze free-monoid morphisms and normalize erasing presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument(
            "--width",
            type=_width_fraction,
            default=spectral.DEFAULT_WIDTH,
            help="enclosure width for radius reports (default 1/10^9)",
        )

    p = sub.add_parser("analyze", help="spectral report for one endomorphism")
    p.add_argument("--file", required=True)
    p.add_argument("--morphism", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("normalize", help="remove erasure from a presentation")
    p.add_argument("--file", required=True)
    p.add_argument("--pair", help="names 'f,g' (defaults to the file's pair directive)")
    p.add_argument("--start", help="start letter (defaults to the file's start directive)")
    p.add_argument("--check", type=int, default=0, help="verify this many output symbols")
    p.add_argument("--budget", type=int, default=0, help="source-symbol pump budget")
    p.add_argument("--trace", action="store_true", help="include every pipeline stage")
    p.add_argument("--emit", help="write the normalized morphisms to this file")
    p.add_argument("--emit-sigma", default="normalized_sigma", help="emitted generator name")
    p.add_argument("--emit-tau", default="normalized_tau", help="emitted coding name")
    add_common(p)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("expand", help="print a prefix of f^w(start) or g(f^w(start))")
    p.add_argument("--file", required=True)
    p.add_argument("--morphism", required=True)
    p.add_argument("--start")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--image", help="apply this morphism to the fixed point")
    p.add_argument("--budget", type=int, default=0, help="source-symbol pump budget")
    p.add_argument("--binary", action="store_true", help="length-prefixed binary symbols")
    add_common(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("verify", help="compare two presentations symbol by symbol")
    p.add_argument("--file", required=True)
    p.add_argument("--pair1", required=True, help="names 'f,g'")
    p.add_argument("--pair2", required=True, help="names 'f,g'")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--start", help="start letter for both pairs")
    p.add_argument("--start2", help="start letter for the second pair, when different")
    p.add_argument("--budget", type=int, default=0, help="source-symbol pump budget")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("matrix", help="growth table for a whitespace integer grid")
    p.add_argument("--file", required=True, help="path to a .mat file")
    p.add_argument("--entries", nargs="*", help="entries i,j (1-based)")
    p.add_argument("--rows", nargs="*", type=int, help="row-sum growth (1-based)")
    p.add_argument("--cols", nargs="*", type=int, help="column-sum growth (1-based)")
    add_common(p)
    p.set_defaults(func=_cmd_matrix)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _print_json({"error": {"kind": "parse", "message": str(exc)}})
        return EXIT_PARSE_ERROR
    except MorphlabError as exc:
        _print_json({"error": {"kind": type(exc).__name__, "message": str(exc)}})
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
