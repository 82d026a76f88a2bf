"""Exact Kostka numbers.

K(alpha, beta) counts the semistandard Young tableaux of shape alpha and
content beta.  The package computes it three independent ways (a signed
permutation sum of generalized multinomials, a strip-peeling recursion,
and brute-force enumeration), provides the classical standard-tableau
formulas, and cross-validates everything against closed-form identities.
All arithmetic is exact; there is no floating point anywhere.
"""

from .core import (
    DEFAULT_PERM_CAP,
    as_content,
    as_partition,
    bounded_compositions,
    compositions,
    contents,
    horizontal_strips,
    is_partition,
    normalize_content,
    partitions,
    perm_sign,
    permutations_signed,
    shifted_vector,
    signed_shifted_vectors,
    trim,
    weight,
)
from .counting import (
    KostkaResult,
    METHODS,
    gordon_product,
    gordon_sum,
    kostka,
    kostka_det,
    kostka_rec,
)
from .errors import (
    InvalidShapeError,
    KostkaError,
    NegativeEntryError,
    SizeLimitError,
    WeightMismatchError,
)
from .multinomials import mu, mu_matrix_oracle, mu_table, multinomial
from .tableaux import (
    count_ssyt,
    enumerate_ssyt,
    f_det,
    f_hook,
    hook_lengths,
    is_valid_ssyt,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PERM_CAP",
    "InvalidShapeError",
    "KostkaError",
    "KostkaResult",
    "METHODS",
    "NegativeEntryError",
    "SizeLimitError",
    "WeightMismatchError",
    "as_content",
    "as_partition",
    "bounded_compositions",
    "compositions",
    "contents",
    "count_ssyt",
    "enumerate_ssyt",
    "f_det",
    "f_hook",
    "gordon_product",
    "gordon_sum",
    "hook_lengths",
    "horizontal_strips",
    "is_partition",
    "is_valid_ssyt",
    "kostka",
    "kostka_det",
    "kostka_rec",
    "mu",
    "mu_matrix_oracle",
    "mu_table",
    "multinomial",
    "normalize_content",
    "partitions",
    "perm_sign",
    "permutations_signed",
    "shifted_vector",
    "signed_shifted_vectors",
    "trim",
    "weight",
]
