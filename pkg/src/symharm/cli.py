"""Command-line front end: ``symharm <command> [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report
from .chords import Chord, class_of, equivalence_classes, find_class
from .errors import SymHarmError
from .measures import (VOICINGS, brefeld_chord, brefeld_modified, stolzenburg_class_average,
                       stolzenburg_harmonicity, symmetric_harmonicity)
from .ranking import class_members_report, class_table, compare_to_empirical
from .scales import BUILTIN_IDS, Scale, builtin_scale, builtin_scales, continued_fraction_scale, parse_scale

MEASURE_FLAGS = {
    "symm": "symmetric_harmonicity",
    "brefeld": "brefeld",
    "brefeld-mod": "brefeld_modified",
    "stolzenburg": "stolzenburg",
    "stolzenburg-avg": "stolzenburg_avg",
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").strip("()").split(",") if t]
    except ValueError:
        raise SymHarmError(f"expected a comma-separated list of integers, got {text!r}") from None


def load_scale_file(path: str) -> Scale:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise SymHarmError(f"cannot read scale file {path}: {e.strerror}") from None
    return parse_scale(text, name=p.stem)


def resolve_scales(args, allow_all: bool = False) -> list[Scale]:
    """The scales selected by --scale / --scale-file / --tolerance."""
    if args.scale_file:
        return [load_scale_file(args.scale_file)]
    sid = (args.scale or "A").upper()
    if sid == "ALL":
        if not allow_all:
            raise SymHarmError("--scale all is not supported by this command")
        ids = BUILTIN_IDS
    else:
        ids = (sid,)
    out = []
    for i in ids:
        if i == "C" and args.tolerance is not None:
            out.append(continued_fraction_scale(args.tolerance, name=f"C(tol={args.tolerance:g})"))
        else:
            out.append(builtin_scale(i))
    return out


def cmd_scales(args) -> str:
    scales = builtin_scales()
    if args.tolerance is not None:
        scales.append(continued_fraction_scale(args.tolerance, name=f"C(tol={args.tolerance:g})"))
    if args.scale_file:
        scales.append(load_scale_file(args.scale_file))
    return report.render_scales(scales, args.format)


def cmd_intervals(args) -> str:
    return report.render_intervals(resolve_scales(args, allow_all=True), args.format)


def cmd_classes(args) -> str:
    return report.render_classes(equivalence_classes(args.k), args.format)


def cmd_rank(args) -> str:
    kind = MEASURE_FLAGS[args.measure]
    tables = [class_table(s, args.k, kind, args.voicing, args.threshold)
              for s in resolve_scales(args, allow_all=True)]
    if args.ranks_only:
        return report.render_rank_matrix(tables, args.format)
    return report.render_ranked(tables, args.format, args.k)


def _chord_report(scale: Scale, notes: list[int]) -> dict:
    return {
        "notes": notes,
        "class": str(class_of(Chord.from_notes(notes)).label),
        "symmetric_harmonicity": symmetric_harmonicity(scale, notes),
        "brefeld": float(format(brefeld_chord(scale, notes), ".15g")),
        "brefeld_modified": brefeld_modified(scale, notes),
        "stolzenburg": stolzenburg_harmonicity(scale, notes),
    }


def cmd_chord(args) -> str:
    (scale,) = resolve_scales(args)
    if bool(args.notes) == bool(args.cls):
        raise SymHarmError("give exactly one of --notes or --class")
    if args.notes:
        notes = _int_list(args.notes)
        data = {"scale": scale.name, **_chord_report(scale, notes)}
        if args.format == "json":
            return json.dumps(data, indent=2) + "\n"
        keys = ["class", "symmetric_harmonicity", "brefeld", "brefeld_modified", "stolzenburg"]
        if args.format == "csv":
            return report._csv(["scale", "notes"] + keys,
                               [[scale.name, " ".join(map(str, notes))] + [data[k] for k in keys]])
        rows = [[k, f"{data[k]:.6g}" if isinstance(data[k], float) else data[k]] for k in keys]
        return f"chord {notes} in scale {scale.name}\n\n" + report._md_table(["measure", "value"], rows)

    cls = find_class(args.cls)
    members = class_members_report(scale, cls)
    avg = stolzenburg_class_average(scale, cls, args.voicing)
    if args.format == "json":
        return json.dumps({
            "scale": scale.name, "class": str(cls.label), "size": cls.size,
            "interval_classes": list(cls.signature),
            "orbits": [[str(m) for m in o] for o in cls.orbits],
            "stolzenburg_avg": report.exact_value(avg), "voicing": args.voicing,
            "members": [{**m, "brefeld": report.exact_value(m["brefeld"])} for m in members],
        }, indent=2) + "\n"
    keys = ["chord", "symmetric_harmonicity", "brefeld", "brefeld_modified", "stolzenburg"]
    if args.format == "csv":
        return report._csv(keys, [[report.exact_value(m[k]) for k in keys] for m in members])
    rows = [[m["chord"], m["symmetric_harmonicity"], f"{m['brefeld']:.4f}", m["brefeld_modified"],
             m["stolzenburg"]] for m in members]
    head = (f"class {cls.label} in scale {scale.name}: {cls.size} members, "
            f"interval classes {' '.join(map(str, cls.signature))}\n"
            f"averaged Stolzenburg harmonicity ({args.voicing}): {report.display_value(avg, 'stolzenburg_avg')}\n\n")
    return head + report._md_table(keys, rows)


def cmd_compare(args) -> str:
    (scale,) = resolve_scales(args) if (args.scale or args.scale_file) else [builtin_scale("C")]
    cmp = compare_to_empirical(class_table(scale, 3))
    return report.render_comparison(cmp, args.format)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scale", help="built-in scale A..E (default A); 'all' where a table allows it")
    common.add_argument("--scale-file", metavar="PATH", help="read a 12-ratio scale file instead")
    common.add_argument("--format", choices=report.FORMATS, default="md")
    common.add_argument("--tolerance", type=float, metavar="R",
                        help="regenerate scale C with this relative tolerance")

    p = argparse.ArgumentParser(prog="symharm", description="Symmetric harmonicity of chords in just scales.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("scales", parents=[common], help="list the built-in scales").set_defaults(func=cmd_scales)
    sub.add_parser("intervals", parents=[common], help="interval harmonicities h1..h11").set_defaults(
        func=cmd_intervals)

    sp = sub.add_parser("classes", parents=[common], help="equivalence classes of k-chords")
    sp.add_argument("-k", type=int, default=3)
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("rank", parents=[common], help="measure and rank all k-chord classes")
    sp.add_argument("-k", type=int, default=3)
    sp.add_argument("--measure", choices=MEASURE_FLAGS, default="symm")
    sp.add_argument("--threshold", type=int, metavar="N", help="keep classes with value below N")
    sp.add_argument("--voicing", choices=VOICINGS, default="closed",
                    help="octave convention for stolzenburg-avg")
    sp.add_argument("--ranks-only", action="store_true", help="one row of ranks per scale")
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("chord", parents=[common], help="all measures for one chord or class")
    sp.add_argument("--notes", metavar="LIST", help="absolute note indices, e.g. 0,4,7")
    sp.add_argument("--class", dest="cls", metavar="LABEL", help="class label, e.g. 3,7")
    sp.add_argument("--voicing", choices=VOICINGS, default="closed")
    sp.set_defaults(func=cmd_chord)

    sp = sub.add_parser("compare", parents=[common], help="triad ranks vs. the empirical study (default scale C)")
    sp.set_defaults(func=cmd_compare)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except SymHarmError as e:
        print(f"symharm: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
