import pytest
from hypothesis import given

from prodex import (
    NonUnitConstantError,
    ProductExpansion,
    expand_to_product,
    inverse_sequence,
    make_series,
    mul,
    partition_numbers,
    product_to_series,
    tilde_transform,
)

from conftest import expansions, unit_series


def ones(order):
    return ProductExpansion((1,) * order)


# --- expansion --------------------------------------------------------------


def test_expand_single_factor():
    f = make_series([1, -1, 0, 0, 0])
    assert expand_to_product(f).exponents == (1, 0, 0, 0)


def test_expand_geometric_series_gives_binary_pattern():
    # 1/(1-x) = (1+x)(1+x^2)(1+x^4)(1+x^8)...: exponents -1 at powers of two
    f = make_series([1] * 9)
    assert expand_to_product(f).exponents == (-1, -1, 0, -1, 0, 0, 0, -1)


def test_expand_fibonacci_denominator():
    f = make_series([1, -1, -1, 0, 0, 0, 0])
    assert expand_to_product(f).exponents == (1, 1, 1, 1, 2, 2)


def test_expand_rejects_non_unit():
    with pytest.raises(NonUnitConstantError):
        expand_to_product(make_series([0, 1, 1]))


def test_expand_rejects_order_zero():
    with pytest.raises(ValueError):
        expand_to_product(make_series([1]))


# --- reconstruction ---------------------------------------------------------


def test_product_of_zeros_is_one():
    m = ProductExpansion((0, 0, 0, 0))
    assert product_to_series(m).coeffs == (1, 0, 0, 0, 0)


def test_product_of_ones_pentagonal_pattern():
    assert product_to_series(ones(7)).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_product_single_factor():
    m = ProductExpansion((1, 0, 0, 0))
    assert product_to_series(m).coeffs == (1, -1, 0, 0, 0)


# --- inverse sequences ------------------------------------------------------


def test_inverse_of_zeros():
    m = ProductExpansion((0, 0, 0))
    assert inverse_sequence(m).exponents == (0, 0, 0)


def test_inverse_of_ones():
    assert inverse_sequence(ones(8)).exponents == (-1, -2, -1, -4, -1, 0, -1, -14)


def test_inverse_of_fibonacci_exponents():
    m = ProductExpansion((1, 1, 1, 1, 2, 2))
    assert inverse_sequence(m).exponents == (-1, -2, -1, -4, -2, -1)


# --- tilde transform --------------------------------------------------------


def test_tilde_negates():
    m = ProductExpansion((-1, -2, -1))
    assert tilde_transform(m).exponents == (1, 2, 1)


def test_tilde_involution():
    m = ProductExpansion((3, -7, 0, 2))
    assert tilde_transform(tilde_transform(m)) == m


def test_tilde_of_inverse_ones_even_entries():
    flipped = tilde_transform(inverse_sequence(ones(8)))
    assert flipped.exponents[1::2] == (2, 4, 0, 14)
    assert flipped.exponents[0::2] == (1, 1, 1, 1)


# --- serialization ----------------------------------------------------------


def test_expansion_json_round_trip():
    m = ProductExpansion((1, -(10**21), 0))
    data = m.to_json_dict()
    assert data["exponents"] == ["1", str(-(10**21)), "0"]
    assert ProductExpansion.from_json_dict(data) == m


# --- algebraic laws ---------------------------------------------------------


@given(expansions())
def test_expand_after_reconstruct_is_identity(m):
    assert expand_to_product(product_to_series(m)) == m


@given(unit_series())
def test_reconstruct_after_expand_is_identity(f):
    assert product_to_series(expand_to_product(f)) == f


@given(unit_series(max_order=32))
def test_expansion_deterministic(f):
    assert expand_to_product(f) == expand_to_product(f)


@given(expansions())
def test_inverse_pairing(m):
    n = inverse_sequence(m)
    product = mul(product_to_series(m), product_to_series(n))
    assert product.coeffs == (1,) + (0,) * m.order


@given(expansions(max_order=63))
def test_inverse_negates_odd_indices(m):
    n = inverse_sequence(m)
    for k in range(1, m.order + 1, 2):
        assert n.exponents[k - 1] == -m.exponents[k - 1]


def test_inverse_even_index_inequality_witness():
    # negation genuinely fails at even indices: all-ones has n_2 = -2 != -1
    n = inverse_sequence(ones(8))
    assert n.exponents[1] == -2
    assert n.exponents[1] != -ones(8).exponents[1]


def test_partition_identity_against_pentagonal_oracle():
    # coefficients of prod(1 + tilde_n_k x^k) are the partition numbers
    n = inverse_sequence(ones(32))
    rebuilt = product_to_series(n)  # (1 - n_k x^k) == (1 + tilde_n_k x^k)
    assert rebuilt.coeffs == partition_numbers(32).values
