"""Exact generalized-order computations on finite permutation groups.

The heavy lifting lives in the _core extension; this package re-exports the
operational surface: group fixtures, conjugacy classes, the class-algebra and
brute-force alpha counts, character tables, and the lower central series.
"""

from ._core import (
    CharacterTable,
    CharTableError,
    Classes,
    CycloParseError,
    EnumerationCapError,
    FixtureError,
    Group,
    cyclo_as_integer,
    cyclo_eval,
    load_group,
)

__all__ = [
    "CharacterTable",
    "CharTableError",
    "Classes",
    "CycloParseError",
    "EnumerationCapError",
    "FixtureError",
    "Group",
    "cyclo_as_integer",
    "cyclo_eval",
    "load_group",
]

__version__ = "0.1.0"
