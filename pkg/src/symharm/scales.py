"""Twelve-note just scales: built-in tunings, generators and a text format."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ScaleFormatError, SymHarmError
from .exact import convergents_within, format_rational, parse_rational, power_of_two

NOTES_PER_OCTAVE = 12
NOTE_NAMES = ("C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B")


@dataclass(frozen=True)
class Scale:
    name: str
    ratios: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "ratios", tuple(Fraction(r) for r in self.ratios))
        _validate(self.ratios)

    def __getitem__(self, n: int) -> Fraction:
        return self.ratios[n]

    def __len__(self):
        return len(self.ratios)


def _validate(ratios) -> None:
    if len(ratios) != NOTES_PER_OCTAVE:
        raise ScaleFormatError(f"expected {NOTES_PER_OCTAVE} ratios, got {len(ratios)}")
    if ratios[0] != 1:
        raise ScaleFormatError(f"first ratio must be 1/1, got {format_rational(ratios[0])}", 0)
    for i, r in enumerate(ratios):
        if not 1 <= r < 2:
            raise ScaleFormatError(f"{format_rational(r)} is outside [1, 2)", i)
        if i and r <= ratios[i - 1]:
            raise ScaleFormatError(
                f"{format_rational(r)} does not exceed previous ratio {format_rational(ratios[i - 1])}", i
            )


def _row(name: str, text: str) -> Scale:
    return Scale(name, tuple(parse_rational(t) for t in text.split()))


# Static ground truth; C and E are also regenerated by the functions below.
_BUILTIN = {
    "A": _row("A", "1/1 16/15 9/8 6/5 5/4 4/3 45/32 3/2 8/5 5/3 16/9 15/8"),
    "B": _row("B", "1/1 17/16 9/8 6/5 5/4 4/3 11/8 3/2 13/8 5/3 7/4 15/8"),
    "C": _row("C", "1/1 17/16 9/8 6/5 5/4 4/3 17/12 3/2 8/5 5/3 16/9 15/8"),
    "D": _row("D", "1/1 16/15 9/8 6/5 5/4 4/3 17/12 3/2 8/5 5/3 16/9 15/8"),
    "E": _row("E", "1/1 256/243 9/8 32/27 81/64 4/3 729/512 3/2 128/81 27/16 16/9 243/128"),
}

SCALE_DESCRIPTIONS = {
    "A": "Kepler's just scale (Monochord No. 2, down a fifth)",
    "B": "Wendy Carlos super just scale",
    "C": "continued-fraction scale (first convergent within 1%)",
    "D": "Stolzenburg rational tuning",
    "E": "Pythagorean scale, tritone 729/512",
}

BUILTIN_IDS = tuple(_BUILTIN)


def builtin_scale(scale_id: str) -> Scale:
    try:
        return _BUILTIN[scale_id.upper()]
    except KeyError:
        raise SymHarmError(f"unknown scale {scale_id!r}; choose one of {', '.join(BUILTIN_IDS)}") from None


def builtin_scales() -> list[Scale]:
    return list(_BUILTIN.values())


def continued_fraction_scale(rel_tol: float = 0.01, name: str | None = None) -> Scale:
    """Approximate each power of the equal-tempered semitone by continued fractions.

    Note ``n`` gets the first convergent of ``2**(n/12)`` within ``rel_tol``.
    """
    ratios = [convergents_within(power_of_two(Fraction(n, NOTES_PER_OCTAVE)), rel_tol)
              for n in range(NOTES_PER_OCTAVE)]
    return Scale(name or f"CF({rel_tol:g})", tuple(ratios))


def _octave_reduce(r: Fraction) -> Fraction:
    while r >= 2:
        r /= 2
    while r < 1:
        r *= 2
    return r


def pythagorean_scale(tritone: str = "fifths_up", name: str | None = None) -> Scale:
    """Circle-of-fifths scale.

    ``fifths_up`` stacks fifths k = -5..6 (tritone 729/512); ``fifths_down``
    uses k = -6..5 (tritone 1024/729).
    """
    if tritone == "fifths_up":
        ks = range(-5, 7)
    elif tritone == "fifths_down":
        ks = range(-6, 6)
    else:
        raise SymHarmError(f"tritone must be 'fifths_up' or 'fifths_down', got {tritone!r}")
    ratios: list[Fraction | None] = [None] * NOTES_PER_OCTAVE
    for k in ks:
        ratios[(7 * k) % NOTES_PER_OCTAVE] = _octave_reduce(Fraction(3, 2) ** k)
    return Scale(name or f"Pythagorean({tritone})", tuple(ratios))


def frequency_ratio(scale: Scale, note: int) -> Fraction:
    """Ratio of ``note`` (any non-negative step count) to the bottom note."""
    if note < 0:
        raise SymHarmError(f"note index must be non-negative, got {note}")
    octave, step = divmod(note, NOTES_PER_OCTAVE)
    return scale.ratios[step] * 2**octave


_TOKEN_SPLIT = re.compile(r"[\s,]+")


def parse_scale(text: str, name: str = "custom") -> Scale:
    """Read a scale file: optional name line, then 12 ratio tokens.

    Tokens are ``p/q`` or ``p:q`` separated by whitespace or commas. Lines
    starting with ``#`` are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if lines and not re.match(r"^\d", lines[0]):
        name = lines.pop(0)
    tokens = [t for t in _TOKEN_SPLIT.split(" ".join(lines)) if t]
    if len(tokens) != NOTES_PER_OCTAVE:
        raise ScaleFormatError(f"expected {NOTES_PER_OCTAVE} ratios, got {len(tokens)}")
    ratios = []
    for i, tok in enumerate(tokens):
        try:
            ratios.append(parse_rational(tok))
        except SymHarmError:
            raise ScaleFormatError(f"malformed ratio {tok!r}", i) from None
    return Scale(name, tuple(ratios))


def serialize_scale(scale: Scale) -> str:
    return f"{scale.name}\n" + " ".join(format_rational(r) for r in scale.ratios) + "\n"
