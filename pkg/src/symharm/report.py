"""Markdown, CSV and JSON renderings of scales, interval tables and rankings.

CSV and JSON carry exact values (integers in full, averages as ``p/q``);
markdown scales large numbers the way the printed tables do.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Sequence

from .chords import ChordClass
from .errors import SymHarmError
from .exact import format_rational
from .measures import harmonicity_table
from .ranking import AVG_HARM_TRIAD_RANKS, Comparison, RankedTable
from .scales import NOTE_NAMES, Scale

FORMATS = ("md", "csv", "json")


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise SymHarmError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")


def _md_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def exact_value(v):
    """JSON/CSV-safe exact form of a measure value."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else format_rational(v)
    if isinstance(v, float):
        return float(format(v, ".15g"))
    return v


def _trim(x: Fraction, places: int) -> str:
    s = f"{float(x):.{places}f}" if x.denominator != 1 else str(x.numerator)
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s


def display_value(v, kind: str, k: int = 3) -> str:
    """Human scaling: triad harmonicities in thousands, larger chords in millions."""
    if v is None:
        return "n/a"
    if kind == "symmetric_harmonicity":
        if k <= 3:
            return _trim(Fraction(v, 1000), 3)
        return f"{v / 10**6:.1f}"
    if isinstance(v, float):
        return f"{v:.3f}"
    if isinstance(v, Fraction):
        return _trim(v, 2) if v.denominator != 1 else str(v.numerator)
    return str(v)


def display_unit(kind: str, k: int = 3) -> str:
    if kind == "symmetric_harmonicity":
        return "thousands" if k <= 3 else "millions"
    return ""


# --- scales -----------------------------------------------------------------

def render_scales(scales: Sequence[Scale], fmt: str = "md") -> str:
    _check_format(fmt)
    if fmt == "json":
        return _json([{"name": s.name, "ratios": [format_rational(r) for r in s.ratios]} for s in scales])
    rows = [[s.name] + [format_rational(r) for r in s.ratios] for s in scales]
    header = ["scale"] + list(NOTE_NAMES)
    if fmt == "csv":
        return _csv(header, rows)
    md_rows = [[s.name] + [f"{r.numerator}:{r.denominator}" for r in s.ratios] for s in scales]
    return _md_table(header, md_rows)


# --- interval harmonicities ---------------------------------------------------

def _factor(scale: Scale, n: int) -> str:
    """``a·b`` for whichever of n, 12-n attains the minimum."""
    r, s = scale.ratios[n], scale.ratios[12 - n]
    pick = r if r.numerator * r.denominator <= s.numerator * s.denominator else s
    return f"{pick.numerator}·{pick.denominator}"


def render_intervals(scales: Sequence[Scale], fmt: str = "md") -> str:
    _check_format(fmt)
    tables = [harmonicity_table(s) for s in scales]
    header = ["scale"] + [f"h{n}" for n in range(1, 12)]
    if fmt == "json":
        return _json([{"scale": t.scale.name, "h": {str(n): t[n] for n in range(1, 12)}} for t in tables])
    if fmt == "csv":
        return _csv(header, [[t.scale.name] + list(t.h) for t in tables])
    rows = [[t.scale.name] + [f"{_factor(t.scale, n)} = {t[n]}" for n in range(1, 12)] for t in tables]
    return _md_table(header, rows)


# --- ranked class tables -------------------------------------------------------

def render_ranked(tables: Sequence[RankedTable], fmt: str = "md", k: int = 3) -> str:
    _check_format(fmt)
    if fmt == "json":
        return _json([{
            "scale": t.row_label,
            "measure": t.measure,
            "k": k,
            "classes": [{"class": c, "value": exact_value(v.value), "rank": r}
                        for c, v, r in zip(t.columns, t.values, t.ranks)],
        } for t in tables])
    if fmt == "csv":
        rows = [[t.row_label, t.measure, c, exact_value(v.value), r]
                for t in tables for c, v, r in zip(t.columns, t.values, t.ranks)]
        return _csv(["scale", "measure", "class", "value", "rank"], rows)
    out = []
    for t in tables:
        unit = display_unit(t.measure, k)
        head = f"{t.measure} in scale {t.row_label}" + (f" ({unit})" if unit else "")
        rows = [["value"] + [display_value(v.value, t.measure, k) for v in t.values],
                ["rank"] + ["n/a" if r is None else str(r) for r in t.ranks]]
        out.append(f"{head}\n\n" + _md_table([""] + list(t.columns), rows))
    return "\n".join(out)


def render_rank_matrix(tables: Sequence[RankedTable], fmt: str = "md") -> str:
    """Ranks only, one row per scale (the layout of the printed ranking tables)."""
    _check_format(fmt)
    cols = list(tables[0].columns)
    if any(list(t.columns) != cols for t in tables):
        raise SymHarmError("rank matrix needs tables with identical columns")
    if fmt == "json":
        return _json({t.row_label: t.ranks_by_label() for t in tables})
    rows = [[t.row_label] + list(t.ranks) for t in tables]
    if fmt == "csv":
        return _csv(["scale"] + cols, rows)
    return _md_table([""] + cols, rows)


# --- classes ------------------------------------------------------------------

def render_classes(classes: Sequence[ChordClass], fmt: str = "md") -> str:
    _check_format(fmt)
    data = [{
        "class": str(c.label),
        "size": c.size,
        "interval_classes": list(c.signature),
        "members": [str(m) for m in c.members],
        "orbits": [[str(m) for m in o] for o in c.orbits],
    } for c in classes]
    if fmt == "json":
        return _json(data)
    if fmt == "csv":
        return _csv(["class", "size", "interval_classes", "members", "orbits"],
                    [[d["class"], d["size"], " ".join(map(str, d["interval_classes"])),
                      " ".join(d["members"]), len(d["orbits"])] for d in data])
    rows = []
    for d, c in zip(data, classes):
        members = " ".join(d["members"])
        if len(c.orbits) > 1:
            members += "; orbits: " + " / ".join(" ".join(o) for o in d["orbits"])
        rows.append([d["class"], d["size"], " ".join(map(str, d["interval_classes"])), members])
    return _md_table(["class", "size", "interval classes", "members"], rows)


# --- empirical comparison -------------------------------------------------------

def render_comparison(cmp: Comparison, fmt: str = "md") -> str:
    _check_format(fmt)
    if fmt == "json":
        return _json({
            "measure": cmp.measure_label,
            "classes": [{"class": r.label, "empirical": r.empirical, "measured": r.measured,
                         "agree": r.agree, "avg_harm_reference": AVG_HARM_TRIAD_RANKS.get(r.label)}
                        for r in cmp.rows],
            "agreements": cmp.agreements,
            "compared": cmp.compared,
            "extra_rank_correlation": round(cmp.spearman(), 12),
        })
    if fmt == "csv":
        return _csv(["class", "empirical", "measured", "agree", "avg_harm_reference"],
                    [[r.label, _na(r.empirical), r.measured, _na(r.agree),
                      _na(AVG_HARM_TRIAD_RANKS.get(r.label))] for r in cmp.rows])
    cols = [r.label for r in cmp.rows]
    rows = [
        ["empirical"] + [_na(r.empirical) for r in cmp.rows],
        [cmp.measure_label] + [_na(r.measured) for r in cmp.rows],
        ["avg harm (reference)"] + [_na(AVG_HARM_TRIAD_RANKS.get(c)) for c in cols],
        ["agree"] + ["n/a" if r.agree is None else ("yes" if r.agree else "no") for r in cmp.rows],
    ]
    summary = (f"\nagreement on {cmp.agreements} of {cmp.compared} classes; "
               f"rank correlation (extra, not in the reference tables): {cmp.spearman():.3f}\n")
    return _md_table([""] + cols, rows) + summary


def _na(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)
