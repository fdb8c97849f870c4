"""Symmetric harmonicity and the Brefeld / Stolzenburg comparison measures.

Integer-valued measures are exact Python ints. Stolzenburg class averages are
exact :class:`~fractions.Fraction` means; Brefeld values are floats obtained
from an exact integer product with a single high-precision root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence, Union

from .chords import N, Chord, ChordClass, class_of
from .errors import SymHarmError
from .exact import lcm_all
from .scales import Scale, frequency_ratio

Notes = Union[Chord, Sequence[int]]

MEASURES = ("symmetric_harmonicity", "brefeld", "brefeld_modified", "stolzenburg", "stolzenburg_avg")

# Voicings for averaging Stolzenburg harmonicity over a class:
#   closed      every translation t = 0..11 of every T0 member; notes above 11
#               climb into the next octave (ratio times 2)
#   reduced     same chords, but wrapped notes keep their in-octave ratio
#   pitch_set   every triple 0 <= x0 < x1 < ... <= 11 in the class, no wrapping
VOICINGS = ("closed", "reduced", "pitch_set")


@dataclass(frozen=True)
class HarmonicityTable:
    scale: Scale
    h: tuple[int, ...]  # h[0] is h_1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= N - 1:
            raise SymHarmError(f"interval index must be 1..11, got {n}")
        return self.h[n - 1]

    def as_dict(self) -> dict[int, int]:
        return {n: self[n] for n in range(1, N)}


@dataclass(frozen=True)
class MeasureResult:
    label: str
    kind: str
    value: int | float | Fraction


def _num_times_den(r: Fraction) -> int:
    return r.numerator * r.denominator


@lru_cache(maxsize=64)
def harmonicity_table(scale: Scale) -> HarmonicityTable:
    """Interval harmonicities ``h_n = min(a_n b_n, a_{12-n} b_{12-n})``."""
    ab = [_num_times_den(r) for r in scale.ratios]
    return HarmonicityTable(scale, tuple(min(ab[n], ab[N - n]) for n in range(1, N)))


def _notes(chord: Notes) -> tuple[int, ...]:
    if isinstance(chord, Chord):
        return chord.notes
    notes = tuple(chord)
    if not notes:
        raise SymHarmError("empty chord")
    if any(b <= a for a, b in zip(notes, notes[1:])) or notes[0] < 0:
        raise SymHarmError(f"notes must be non-negative and strictly increasing, got {list(notes)}")
    return notes


def symmetric_harmonicity(scale: Scale, chord: Notes) -> int:
    """Product of ``h_d`` over every pairwise step difference ``d`` in the chord."""
    if not isinstance(chord, Chord):
        chord = Chord.from_notes(_notes(chord))
    table = harmonicity_table(scale)
    out = 1
    for a, b in combinations(chord.notes, 2):
        out *= table[b - a]
    return out


def triad_harmonicity(scale: Scale, a: int, b: int) -> int:
    """``h_a * h_b * h_(b-a)`` for the triad (0, a, b)."""
    table = harmonicity_table(scale)
    return table[a] * table[b] * table[b - a]


def brefeld_interval(scale: Scale, n: int) -> float:
    if not 1 <= n <= N - 1:
        raise SymHarmError(f"interval index must be 1..11, got {n}")
    return math.sqrt(_num_times_den(scale.ratios[n]))


def _pair_ratios(scale: Scale, notes: Sequence[int]) -> list[Fraction]:
    freqs = [frequency_ratio(scale, n) for n in notes]
    return [hi / lo for lo, hi in combinations(freqs, 2)]


def brefeld_modified(scale: Scale, chord: Notes) -> int:
    """Product of numerator times denominator over the chord's actual interval ratios."""
    notes = _notes(chord)
    out = 1
    for r in _pair_ratios(scale, notes):
        out *= _num_times_den(r)
    return out


def brefeld_chord(scale: Scale, chord: Notes) -> float:
    """Geometric mean of ``sqrt(a*b)`` over all intervals of the chord."""
    notes = _notes(chord)
    m = len(notes) * (len(notes) - 1) // 2
    if m == 0:
        raise SymHarmError("a chord needs at least two notes")
    product = brefeld_modified(scale, notes)
    with localcontext() as ctx:
        ctx.prec = 40
        return float(Decimal(product) ** (Decimal(1) / (2 * m)))


def stolzenburg_harmonicity(scale: Scale, notes: Notes) -> int:
    """Relative periodicity: lcm of denominators of each tone's ratio to the lowest tone."""
    notes = _notes(notes)
    base = frequency_ratio(scale, notes[0])
    return lcm_all((frequency_ratio(scale, n) / base).denominator for n in notes)


def _stolzenburg_reduced(scale: Scale, notes: Sequence[int]) -> int:
    base = scale.ratios[notes[0] % N]
    return lcm_all((scale.ratios[n % N] / base).denominator for n in notes)


def class_voicings(cls: ChordClass, voicing: str = "closed") -> list[tuple[int, ...]]:
    """The absolute-note chords averaged over for ``cls`` under ``voicing``."""
    if voicing in ("closed", "reduced"):
        return [tuple(t + x for x in m.notes) for t in range(N) for m in cls.members]
    if voicing == "pitch_set":
        members = set(cls.members)
        return [c for c in combinations(range(N), cls.k)
                if Chord(tuple(x - c[0] for x in c[1:])) in members]
    raise SymHarmError(f"unknown voicing {voicing!r}; choose one of {', '.join(VOICINGS)}")


def stolzenburg_class_average(scale: Scale, cls: ChordClass | Sequence[Chord],
                              voicing: str = "closed") -> Fraction:
    """Exact mean Stolzenburg harmonicity over every translation of every member.

    ``cls`` may also be a plain list of T0 chords; with ``closed`` voicing
    that averages over their 12 translations each.
    """
    if not isinstance(cls, ChordClass):
        members = tuple(cls)
        if not members:
            raise SymHarmError("cannot average over an empty set of chords")
        cls = ChordClass(members[0], members, ())
    chords = class_voicings(cls, voicing)
    fn = _stolzenburg_reduced if voicing == "reduced" else stolzenburg_harmonicity
    return Fraction(sum(fn(scale, c) for c in chords), len(chords))


def measure(scale: Scale, kind: str, chord: Chord, voicing: str = "closed") -> MeasureResult:
    """Evaluate one measure; translation-dependent ones use the chord based at note 0."""
    if kind == "symmetric_harmonicity":
        value = symmetric_harmonicity(scale, chord)
    elif kind == "brefeld":
        value = brefeld_chord(scale, chord)
    elif kind == "brefeld_modified":
        value = brefeld_modified(scale, chord)
    elif kind == "stolzenburg":
        value = stolzenburg_harmonicity(scale, chord)
    elif kind == "stolzenburg_avg":
        value = stolzenburg_class_average(scale, class_of(chord), voicing)
    else:
        raise SymHarmError(f"unknown measure {kind!r}")
    return MeasureResult(str(chord), kind, value)
