"""prodex: exact product expansions of integer power series.

Every unit integer power series f has one and only one representation as
an infinite product prod_k (1 - m_k x^k) with integer exponents m_k.  This
package computes that expansion and its inverse exactly, transforms
exponent sequences to and from their divisor-sum (ghost) sequences, and
uses the machinery to produce Fermat quotients, a full verification of
p | a^p - a, a Wieferich-prime scanner, and the partition-number product.
"""

from .congruences import (
    FermatWitness,
    PartitionTable,
    RationalFamily,
    WieferichScanReport,
    fermat_check,
    fermat_quotient_via_product,
    fermat_witness,
    is_prime,
    is_wieferich,
    partition_numbers,
    primes_in_range,
    rational_family_series,
    wieferich_scan,
)
from .errors import (
    IdentityViolationError,
    NonUnitConstantError,
    NotPrimeError,
    NotRealizableError,
    OrderMismatchError,
)
from .ghost import (
    exponents_from_ghost,
    ghost_from_exponents,
    verify_reciprocal_identity,
)
from .products import (
    ProductExpansion,
    expand_to_product,
    inverse_sequence,
    product_to_series,
    tilde_transform,
)
from .series import (
    GhostSequence,
    TruncatedSeries,
    derivative,
    make_series,
    mul,
    neg_x_log_derivative,
    reciprocal,
    truncate,
)

__version__ = "0.1.0"

__all__ = [
    "TruncatedSeries",
    "GhostSequence",
    "ProductExpansion",
    "RationalFamily",
    "FermatWitness",
    "WieferichScanReport",
    "PartitionTable",
    "make_series",
    "truncate",
    "mul",
    "reciprocal",
    "derivative",
    "neg_x_log_derivative",
    "expand_to_product",
    "product_to_series",
    "inverse_sequence",
    "tilde_transform",
    "ghost_from_exponents",
    "exponents_from_ghost",
    "verify_reciprocal_identity",
    "rational_family_series",
    "fermat_quotient_via_product",
    "fermat_witness",
    "fermat_check",
    "is_prime",
    "is_wieferich",
    "wieferich_scan",
    "partition_numbers",
    "primes_in_range",
    "OrderMismatchError",
    "NonUnitConstantError",
    "NotPrimeError",
    "NotRealizableError",
    "IdentityViolationError",
]
