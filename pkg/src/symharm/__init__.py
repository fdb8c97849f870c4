"""Exact consonance measures for chords in twelve-note just scales."""
from .chords import (Chord, ChordClass, class_of, enumerate_chords, equivalence_classes, find_class,
                     gap_composition, interval_class_multiset)
from .errors import ScaleFormatError, SymHarmError
from .exact import convergents_within, lcm_all, make_rational
from .measures import (HarmonicityTable, brefeld_chord, brefeld_interval, brefeld_modified, harmonicity_table,
                       stolzenburg_class_average, stolzenburg_harmonicity, symmetric_harmonicity)
from .ranking import (EMPIRICAL_TRIAD_RANKS, RankedTable, averaged_stolzenburg_table, compare_to_empirical,
                      competition_rank, fourchord_table, triad_ranking_table)
from .scales import (Scale, builtin_scale, continued_fraction_scale, frequency_ratio, parse_scale,
                     pythagorean_scale, serialize_scale)

__version__ = "0.1.0"
