"""Hilbert series of matrix invariant rings through symmetric-group combinatorics."""

from .characters import CharacterTable, character, character_table
from .coefficients import iterated_lr, kronecker, kronecker_vector, lr_coefficient, lr_table, lr_tableaux
from .counting import f_brute, f_fast, f_recursion, g_brute, g_fast, tensor_dim_via_f, tuple_dim_via_g
from .errors import ConsistencyError
from .golden import golden_data
from .hilbert import (
    tensor_series_22,
    tensor_term,
    tensor_terms,
    tuple_series_closed_form,
    tuple_term,
    tuple_terms,
    verify_suite,
)
from .partitions import Partition, enumerate_partitions, parse_partition
from .series import FactoredRational, TruncatedSeries, expand
from .zel import ZelElement, star_product

__version__ = "0.1.0"
