"""Super-d-complexity of finite words.

A super-d-subword of ``x1 x2 ... xn`` keeps letters whose positions in the
source are at least ``d`` apart.  This package counts them for rainbow words
(all letters distinct) by several independent routes, enumerates them, and
searches for the maximum complexity over small alphabets.
"""

from superd.counting import (
    BeginCountVector,
    begin_count_binomial,
    begin_counts,
    complexity_binomial,
    complexity_middle,
    complexity_power_of_two,
    complexity_recursive,
    middle_series,
    middle_term,
)
from superd.general import (
    MaxComplexityResult,
    complexity_bounds,
    complexity_general,
    max_complexity,
    oracle_enumerate,
    verify_f2_identities,
)
from superd.graph import (
    build_adjacency,
    complexity_graph,
    enumerate_rainbow,
    warshall_latin,
    warshall_paths,
)

__version__ = "0.1.0"

__all__ = [
    "BeginCountVector",
    "MaxComplexityResult",
    "begin_count_binomial",
    "begin_counts",
    "build_adjacency",
    "complexity_binomial",
    "complexity_bounds",
    "complexity_general",
    "complexity_graph",
    "complexity_middle",
    "complexity_power_of_two",
    "complexity_recursive",
    "enumerate_rainbow",
    "max_complexity",
    "middle_series",
    "middle_term",
    "oracle_enumerate",
    "verify_f2_identities",
    "warshall_latin",
    "warshall_paths",
]
