"""Dijoin packing in weighted digraphs with chordal structure.

The native module does the work; this package re-exports its public names.
"""

from dijoins._core import (
    Arc,
    ChordalParams,
    Dicut,
    Error,
    Fixture,
    InvalidInput,
    MinDicutResult,
    NotChordal,
    OracleOptions,
    OracleResult,
    Packing,
    PackingEntry,
    PackingInvariantReport,
    PackOptions,
    PackStats,
    ResourceLimit,
    VerificationFailure,
    WeightedDigraph,
    can_pack,
    enumerate_dicuts,
    find_chordless_cycle,
    fixture_names,
    graph_from_json,
    graph_to_json,
    is_chordal,
    is_dijoin,
    load_fixture,
    max_packing_size,
    min_dicut_weight,
    pack_dijoins,
    packing_from_json,
    packing_to_json,
    random_chordal_digraph,
    validate_packing,
)

__all__ = [
    "Arc",
    "ChordalParams",
    "Dicut",
    "Error",
    "Fixture",
    "InvalidInput",
    "MinDicutResult",
    "NotChordal",
    "OracleOptions",
    "OracleResult",
    "Packing",
    "PackingEntry",
    "PackingInvariantReport",
    "PackOptions",
    "PackStats",
    "ResourceLimit",
    "VerificationFailure",
    "WeightedDigraph",
    "can_pack",
    "enumerate_dicuts",
    "find_chordless_cycle",
    "fixture_names",
    "graph_from_json",
    "graph_to_json",
    "is_chordal",
    "is_dijoin",
    "load_fixture",
    "max_packing_size",
    "min_dicut_weight",
    "pack_dijoins",
    "packing_from_json",
    "packing_to_json",
    "random_chordal_digraph",
    "validate_packing",
]
