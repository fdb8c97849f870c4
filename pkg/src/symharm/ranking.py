"""Tie-aware rankings of chord classes and the empirical reference data."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .chords import ChordClass, equivalence_classes
from .errors import SymHarmError
from .measures import MeasureResult, measure
from .scales import Scale

# Triad ratings from the Johnson-Laird, Kang & Leong study, averaged per class
# (None: class not included in the experiment).
EMPIRICAL_TRIAD_RANKS: dict[str, int | None] = {
    "(1,2)": 10, "(1,3)": 6, "(1,4)": None, "(1,5)": 7, "(1,6)": 8, "(2,4)": None,
    "(2,5)": 3, "(2,6)": 5, "(2,7)": 2, "(3,6)": 4, "(3,7)": 1, "(4,8)": 9,
}

# Stolzenburg harmonicity over the study's own chord list (scale C, base note =
# lowest note). Display only: the chord list is not reproduced here.
AVG_HARM_TRIAD_RANKS: dict[str, int | None] = {
    "(1,2)": 9, "(1,3)": 10, "(1,4)": None, "(1,5)": 8, "(1,6)": 6, "(2,4)": None,
    "(2,5)": 4, "(2,6)": 7, "(2,7)": 2, "(3,6)": 4, "(3,7)": 1, "(4,8)": 3,
}

# Ranks of some 4-chord classes in the same study's second experiment. Display only.
EMPIRICAL_FOURCHORD_RANKS: dict[str, int] = {
    "(2,5,9)": 4, "(2,5,7)": 6, "(1,5,8)": 2, "(2,4,7)": 1, "(3,5,9)": 5,
}


def competition_rank(values: Sequence) -> list[int]:
    """Standard competition ranking, smallest value first: 1 + number of strictly smaller values."""
    if not values:
        raise SymHarmError("cannot rank an empty list")
    ordered = sorted(values)
    first = {}
    for i, v in enumerate(ordered):
        first.setdefault(v, i + 1)
    return [first[v] for v in values]


@dataclass(frozen=True)
class RankedTable:
    row_label: str
    measure: str
    columns: tuple[str, ...]
    values: tuple[MeasureResult, ...]
    ranks: tuple[int | None, ...]

    def value_of(self, label: str):
        return self.values[self.columns.index(label)].value

    def rank_of(self, label: str) -> int | None:
        return self.ranks[self.columns.index(label)]

    def ranks_by_label(self) -> dict[str, int | None]:
        return dict(zip(self.columns, self.ranks))


def class_table(scale: Scale, k: int, kind: str = "symmetric_harmonicity",
                voicing: str = "closed", threshold: int | None = None) -> RankedTable:
    """Measure every k-chord class and rank the classes.

    Without a threshold the columns follow the canonical label order. With
    one, only classes whose value is below it are kept, sorted by value (ties
    by label); ranks are still taken over all classes.
    """
    classes = equivalence_classes(k)
    results = [measure(scale, kind, cc.label, voicing) for cc in classes]
    ranks = competition_rank([r.value for r in results])
    rows = list(zip(classes, results, ranks))
    if threshold is not None:
        if threshold <= 0:
            raise SymHarmError(f"threshold must be positive, got {threshold}")
        rows = sorted((r for r in rows if r[1].value < threshold), key=lambda r: (r[1].value, r[0].label))
    return RankedTable(
        scale.name, kind,
        tuple(str(cc.label) for cc, _, _ in rows),
        tuple(res for _, res, _ in rows),
        tuple(rk for _, _, rk in rows),
    )


def triad_ranking_table(scales: Sequence[Scale]) -> list[RankedTable]:
    return [class_table(s, 3) for s in scales]


def averaged_stolzenburg_table(scales: Sequence[Scale], voicing: str = "closed") -> list[RankedTable]:
    return [class_table(s, 3, "stolzenburg_avg", voicing) for s in scales]


def fourchord_table(scale: Scale, threshold: int = 10**8) -> RankedTable:
    return class_table(scale, 4, threshold=threshold)


def empirical_table() -> RankedTable:
    cols = tuple(EMPIRICAL_TRIAD_RANKS)
    return RankedTable(
        "empirical", "empirical", cols,
        tuple(MeasureResult(c, "empirical", EMPIRICAL_TRIAD_RANKS[c]) for c in cols),
        tuple(EMPIRICAL_TRIAD_RANKS[c] for c in cols),
    )


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    empirical: int | None
    measured: int | None
    agree: bool | None


@dataclass(frozen=True)
class Comparison:
    measure_label: str
    rows: tuple[ComparisonRow, ...]

    @property
    def agreements(self) -> int:
        return sum(1 for r in self.rows if r.agree)

    @property
    def compared(self) -> int:
        return sum(1 for r in self.rows if r.agree is not None)

    def spearman(self) -> float:
        """Pearson correlation of the two rank vectors over the compared classes.

        Extra statistic, not part of the reference tables.
        """
        pairs = [(r.empirical, r.measured) for r in self.rows if r.agree is not None]
        xs, ys = zip(*pairs)
        mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
        cov = sum((x - mx) * (y - my) for x, y in pairs)
        sx = math.sqrt(sum((x - mx) ** 2 for x in xs))
        sy = math.sqrt(sum((y - my) ** 2 for y in ys))
        return cov / (sx * sy)


def compare_to_empirical(ranked: RankedTable, reference: dict[str, int | None] | None = None) -> Comparison:
    """Align a triad ranking with the empirical ranks, class by class."""
    reference = EMPIRICAL_TRIAD_RANKS if reference is None else reference
    measured = ranked.ranks_by_label()
    missing = [c for c in reference if c not in measured]
    if missing:
        raise SymHarmError(f"ranking lacks classes {', '.join(missing)}; compare a full triad table")
    rows = []
    for label, emp in reference.items():
        got = measured[label]
        rows.append(ComparisonRow(label, emp, got, None if emp is None else emp == got))
    return Comparison(f"{ranked.measure} ({ranked.row_label})", tuple(rows))


def class_members_report(scale: Scale, cls: ChordClass) -> list[dict]:
    """Per-member measures for one class; only symmetric harmonicity is shared."""
    out = []
    for m in cls.members:
        out.append({
            "chord": str(m),
            "notes": list(m.notes),
            "symmetric_harmonicity": measure(scale, "symmetric_harmonicity", m).value,
            "brefeld": measure(scale, "brefeld", m).value,
            "brefeld_modified": measure(scale, "brefeld_modified", m).value,
            "stolzenburg": measure(scale, "stolzenburg", m).value,
        })
    return out

