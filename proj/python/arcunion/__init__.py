"""Dynamic union of unit discs, lower envelopes and unit-arc search."""

from _arcunion import (  # noqa: F401
    ArcSearchIndex,
    DiscUnion,
    LowerEnvelope,
    arc_intersects_disc,
    criteria_check,
    figure_one_stream,
    lens_area,
    mc_area,
    set_tolerance,
    three_disc_union_area,
    tolerance,
    two_disc_union_area,
)

__all__ = [
    "ArcSearchIndex",
    "DiscUnion",
    "LowerEnvelope",
    "arc_intersects_disc",
    "criteria_check",
    "figure_one_stream",
    "lens_area",
    "mc_area",
    "set_tolerance",
    "three_disc_union_area",
    "tolerance",
    "two_disc_union_area",
]
