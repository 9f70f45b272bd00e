"""Multiple divisor sums: bracket q-series, products, derivatives, dimensions and zeta values."""

from ._core import (
    VerificationError,
    bracket_series,
    decompose_in_one,
    derivative,
    dim_lower_bound,
    fil_table_csv,
    mzv,
    quasi_shuffle,
    relation_search,
    verify_group,
)

__all__ = [
    "VerificationError",
    "bracket_series",
    "decompose_in_one",
    "derivative",
    "dim_lower_bound",
    "fil_table_csv",
    "mzv",
    "quasi_shuffle",
    "relation_search",
    "verify_group",
]
