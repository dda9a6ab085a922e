"""Exact domino tiling counts for the expanded (p,q)-Aztec diamond."""

from ._core import (
    CapacityError,
    aztec_closed_form,
    bar_A,
    bar_B,
    cells,
    central_C,
    count,
    count_mosaics_bruteforce,
    delannoy_closed_form,
    enumerate_tilings,
    lower_L,
    restricted_A,
    row_lengths,
    square_count,
    state_index,
    state_word,
    upper_U,
)

__all__ = [
    "CapacityError",
    "aztec_closed_form",
    "bar_A",
    "bar_B",
    "cells",
    "central_C",
    "count",
    "count_mosaics_bruteforce",
    "delannoy_closed_form",
    "enumerate_tilings",
    "lower_L",
    "restricted_A",
    "row_lengths",
    "square_count",
    "state_index",
    "state_word",
    "upper_U",
]
