"""Smooth (C-infinity) words over two-letter alphabets.

Derivative and primitive operators, height classes, maximal right smooth
extension chains, enumeration by length, Kolakoski statistics and growth
exponent estimates. See :mod:`smoothwords.cli` for the command line.
"""

from .chains import (
    Chain,
    ChainFamily,
    chain_complement,
    chain_count,
    chain_primitives,
    chains_of_height,
    simple_right_extensions,
    split_by_first_letter,
    verify_partition,
)
from .enumeration import (
    StatsRecord,
    chain_bounds_check,
    fe_length_extrema,
    frequency_extrema,
    gamma,
    gamma_prime,
    height_extrema_by_length,
    is_fe,
    is_lde,
    lde_count_by_height,
    length_stats,
    smooth_words_of_length,
)
from .errors import (
    DomainError,
    EmptyClass,
    InsufficientData,
    InvariantError,
    NotDifferentiable,
    NotSmooth,
    ResourceLimitError,
    SmoothWordError,
)
from .kernel import backend_name
from .primitives import HeightClass, expand, height_class, primitives
from .words import complement, derivative, derivative_k, from_runs, height, is_smooth, runs

__version__ = "0.1.0"
