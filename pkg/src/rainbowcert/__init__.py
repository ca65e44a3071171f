"""Completely balanced edge-colorings of complete graphs without rainbow cliques."""

__version__ = "0.1.0"

from .coloring import (
    BalanceProfile,
    ColorClassShape,
    EdgeColoring,
    ValidationReport,
    balance_profile,
    color_class_shapes,
    format_cbc,
    get_color,
    parse_cbc,
    read_cbc,
    validate,
    write_cbc,
)
from .constructions import LexIndexing, difference_coloring, lex_power, lex_product, round_robin
from .diffsets import (
    DifferenceSet,
    is_perfect_difference_set,
    pds_search,
    ppc_divisibility_screen,
    singer,
)
from .errors import CbcParseError, ConsistencyError, DomainError, ResourceError
from .search import RainbowReport, enumerate_rainbow_sets, find_rainbow_clique, is_rainbow_set
from .sidon import (
    SidonSet,
    build_sidon_profile,
    check_size_bounds,
    is_2_sidon,
    is_weak_2_sidon,
    rainbow_to_sidon,
)
