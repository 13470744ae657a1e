"""hwz: exact monotone Hurwitz numbers and Wishart / inverse Wishart cumulants."""

from .symcore import IntPartition, Permutation, SetPartition, Transposition
from .hurwitz import (
    HurwitzQuery,
    PathQuery,
    ResourceGuardError,
    count_double_hurwitz,
    count_paths,
    count_paths_fast,
    hurwitz_number,
)

from .cumulants import CumulantSeries, scaled_cumulant, time_delay_coefficients

__all__ = [
    "CumulantSeries",
    "scaled_cumulant",
    "time_delay_coefficients",
    "IntPartition",
    "Permutation",
    "SetPartition",
    "Transposition",
    "HurwitzQuery",
    "PathQuery",
    "ResourceGuardError",
    "count_double_hurwitz",
    "count_paths",
    "count_paths_fast",
    "hurwitz_number",
]

__version__ = "0.1.0"
