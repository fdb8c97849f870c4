"""Chords in Z12 based at 0 and their equivalence classes.

Two chords are equivalent when they have the same multiset of pairwise
interval classes. This covers translation and inversion, and it also merges
Z-related chords (e.g. the two all-interval tetrachords). :meth:`ChordClass.orbits`
splits a class back into translation/inversion/reflection orbits.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SymHarmError

N = 12


@dataclass(frozen=True, order=True)
class Chord:
    """The chord ``(0, *offsets)`` with strictly increasing offsets in 1..11."""

    offsets: tuple[int, ...]

    def __post_init__(self):
        offs = tuple(int(x) for x in self.offsets)
        object.__setattr__(self, "offsets", offs)
        prev = 0
        for x in offs:
            if not prev < x < N:
                raise SymHarmError(f"chord offsets must satisfy 0 < x1 < ... <= 11, got {offs}")
            prev = x

    @property
    def notes(self) -> tuple[int, ...]:
        return (0,) + self.offsets

    @property
    def k(self) -> int:
        return len(self.offsets) + 1

    def __str__(self):
        return "(" + ",".join(map(str, self.offsets)) + ")"

    @classmethod
    def from_label(cls, label: str) -> "Chord":
        """Parse ``"3,7"`` or ``"(3,7)"``."""
        body = label.strip().strip("()")
        try:
            offsets = tuple(int(t) for t in body.split(",") if t.strip())
        except ValueError:
            raise SymHarmError(f"invalid chord label {label!r}") from None
        if not offsets:
            raise SymHarmError(f"invalid chord label {label!r}")
        return cls(offsets)

    @classmethod
    def from_notes(cls, notes: Iterable[int]) -> "Chord":
        """Translate a set of absolute notes so its lowest pitch class sits at 0."""
        notes = sorted(notes)
        if not notes:
            raise SymHarmError("empty chord")
        pcs = sorted({(n - notes[0]) % N for n in notes})
        if len(pcs) != len(notes):
            raise SymHarmError(f"notes {notes} repeat a pitch class")
        return cls(tuple(pcs[1:]))


def interval_class(d: int) -> int:
    d %= N
    return min(d, N - d)


def gap_composition(chord: Chord) -> tuple[int, ...]:
    """Steps between consecutive notes, wrapping back to the octave."""
    pts = chord.notes + (N,)
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def interval_class_multiset(chord: Chord) -> tuple[int, ...]:
    """Sorted interval classes of all pairwise differences."""
    return tuple(sorted(interval_class(b - a) for a, b in combinations(chord.notes, 2)))


def interval_vector(signature: Sequence[int]) -> tuple[int, ...]:
    """Counts of interval classes 1..6 for a signature."""
    c = Counter(signature)
    return tuple(c[i] for i in range(1, 7))


def _check_k(k: int) -> None:
    if not 2 <= k <= N:
        raise SymHarmError(f"chord size k must be between 2 and {N}, got {k}")


def enumerate_chords(k: int) -> list[Chord]:
    _check_k(k)
    return [Chord(c) for c in combinations(range(1, N), k - 1)]


def chord_from_gaps(gaps: Sequence[int]) -> Chord:
    offs, acc = [], 0
    for g in gaps[:-1]:
        acc += g
        offs.append(acc)
    return Chord(tuple(offs))


def dihedral_orbit(chord: Chord) -> frozenset[Chord]:
    """Members of T0 reachable by inversion (rotation of gaps) and reflection."""
    gaps = gap_composition(chord)
    out = set()
    for seq in (gaps, gaps[::-1]):
        for i in range(len(seq)):
            out.add(chord_from_gaps(seq[i:] + seq[:i]))
    return frozenset(out)


@dataclass(frozen=True)
class ChordClass:
    label: Chord
    members: tuple[Chord, ...]
    signature: tuple[int, ...]
    orbits: tuple[tuple[Chord, ...], ...] = field(default=(), compare=False)

    @property
    def k(self) -> int:
        return self.label.k

    @property
    def size(self) -> int:
        return len(self.members)

    def __str__(self):
        return str(self.label)


def _build_class(members: list[Chord]) -> ChordClass:
    members = sorted(members)
    remaining = set(members)
    orbits = []
    for c in members:
        if c in remaining:
            orb = tuple(sorted(dihedral_orbit(c)))
            remaining -= set(orb)
            orbits.append(orb)
    return ChordClass(members[0], tuple(members), interval_class_multiset(members[0]), tuple(orbits))


@lru_cache(maxsize=None)
def _classes(k: int) -> tuple[ChordClass, ...]:
    groups: dict[tuple[int, ...], list[Chord]] = {}
    for c in enumerate_chords(k):
        groups.setdefault(interval_class_multiset(c), []).append(c)
    return tuple(sorted((_build_class(g) for g in groups.values()), key=lambda cc: cc.label))


def equivalence_classes(k: int) -> list[ChordClass]:
    """All classes of k-chords, ordered by canonical (lexicographically least) label."""
    _check_k(k)
    return list(_classes(k))


def class_of(chord: Chord) -> ChordClass:
    sig = interval_class_multiset(chord)
    for cc in _classes(chord.k):
        if cc.signature == sig:
            return cc
    raise AssertionError("unreachable: every chord belongs to a class")


def find_class(label: Chord | str) -> ChordClass:
    """The class containing ``label``; any member may be used, not only the canonical one."""
    chord = Chord.from_label(label) if isinstance(label, str) else label
    return class_of(chord)
