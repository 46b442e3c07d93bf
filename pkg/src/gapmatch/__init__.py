"""Multiple matching of gapped patterns with bit-parallel dynamic programming."""

from gapmatch._engine import BACKEND
from gapmatch.ac import AcAutomaton
from gapmatch.bitcolumn import BitColumn
from gapmatch.column import ColumnMatcher, Occurrence, preprocess
from gapmatch.decompose import GeneratingSet, decompose_set, phi, power_of_two_generating_set
from gapmatch.pattern import (
    CharClass,
    GappedPattern,
    JBarSet,
    MetaPattern,
    PatternSet,
    PatternSyntaxError,
    Str,
    jbar_transform,
    parse_pattern_file,
    psi_split,
    wildcard,
)
from gapmatch.row import RowMatcher

__all__ = [
    "BACKEND",
    "AcAutomaton",
    "BitColumn",
    "CharClass",
    "ColumnMatcher",
    "GappedPattern",
    "GeneratingSet",
    "JBarSet",
    "MetaPattern",
    "Occurrence",
    "PatternSet",
    "PatternSyntaxError",
    "RowMatcher",
    "Str",
    "decompose_set",
    "jbar_transform",
    "parse_pattern_file",
    "phi",
    "power_of_two_generating_set",
    "preprocess",
    "psi_split",
    "wildcard",
]
