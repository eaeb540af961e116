import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sscodes.gf import (
    FieldError,
    FieldSpec,
    field_make,
    field_of_order,
    is_irreducible,
    mult_subgroup,
    smallest_irreducible,
)

GRID = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64)


@pytest.mark.parametrize("q", GRID)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    idx = np.arange(q)
    a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    add, mul = F.add, F.mul
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    assert np.array_equal(add[add[a, b], c], add[a, add[b, c]])
    assert np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]])
    assert np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]])
    assert np.array_equal(add[0], idx) and np.array_equal(mul[1], idx)
    assert np.all(add[idx, F.neg] == 0)
    nz = idx[1:]
    assert np.all(mul[nz, F.inv[nz]] == 1)


@pytest.mark.parametrize("q", GRID)
def test_encoding_round_trip(q):
    F = field_of_order(q)
    for a in range(q):
        coeffs = F.to_poly(a)
        assert len(coeffs) == F.m and all(0 <= c < F.p for c in coeffs)
        assert F.from_poly(coeffs) == a


@pytest.mark.parametrize("q", (5, 7, 11, 13))
def test_prime_fields_are_integers_mod_p(q):
    F = field_of_order(q)
    idx = np.arange(q)
    assert np.array_equal(F.add, (idx[:, None] + idx[None, :]) % q)
    assert np.array_equal(F.mul, (idx[:, None] * idx[None, :]) % q)


def test_gf2_add():
    assert field_make(2).plus(1, 1) == 0


def test_gf9_reduction_poly_is_smallest():
    F = field_make(3, 2)
    # x^2, x^2+x, x^2+2x all have the root 0; x^2+1 has no root in GF(3)
    assert F.reduction_poly == (1, 0, 1)
    for c0, c1 in itertools.product(range(3), repeat=2):
        if (c0, c1) < (1, 0):
            assert not is_irreducible((c0, c1, 1), 3)


def test_smallest_irreducible_is_irreducible_and_minimal():
    for p, m in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)]:
        poly = smallest_irreducible(p, m)
        assert poly[-1] == 1 and len(poly) == m + 1
        assert is_irreducible(poly, p)
        for cand in itertools.product(range(p), repeat=m):
            if cand == poly[:-1]:
                break
            assert not is_irreducible((*cand, 1), p)


def test_gf9_cyclic_of_order_8():
    F = field_make(3, 2)
    orders = [F.order(a) for a in range(1, 9)]
    assert 8 in orders
    assert all(8 % o == 0 for o in orders)


def test_gf8_generator_has_order_7():
    F = field_make(2, 3)
    g = F.primitive_element
    assert F.power(g, 7) == 1
    assert len({F.power(g, i) for i in range(7)}) == 7


def test_inverse_of_zero_is_an_error():
    F = field_of_order(7)
    with pytest.raises(ZeroDivisionError):
        F.inverse(0)


@pytest.mark.parametrize(
    "args, msg",
    [((4, 1), "not prime"), ((1, 1), "not prime"), ((2, 0), ">= 1"), ((2, 11), "size guard"), ((3, 7), "size guard")],
)
def test_field_make_errors(args, msg):
    with pytest.raises(FieldError, match=msg):
        field_make(*args)


def test_size_guard_is_configurable():
    assert field_make(2, 11, max_order=4096).q == 2048


def test_reducible_poly_rejected():
    with pytest.raises(FieldError, match="reducible"):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over GF(2)


@pytest.mark.parametrize("q", (6, 10, 12, 1))
def test_field_of_order_rejects_non_prime_powers(q):
    with pytest.raises(FieldError):
        field_of_order(q)


def test_field_make_is_deterministic():
    assert field_make(2, 4) is field_make(2, 4)
    assert np.array_equal(field_make(2, 4).mul, FieldSpec(2, 4, smallest_irreducible(2, 4)).mul)


@pytest.mark.parametrize(
    "q, e, expected", [(7, 1, [1]), (7, 6, None), (7, 2, [1, 6]), (13, 3, None), (9, 4, None)]
)
def test_mult_subgroup_examples(q, e, expected):
    F = field_of_order(q)
    H = mult_subgroup(F, e)
    if expected is not None:
        assert sorted(H) == expected
    if e == q - 1:
        assert sorted(H) == list(range(1, q))
    assert H[0] == 1 and len(H) == len(set(H)) == e


@pytest.mark.parametrize("q", (3, 4, 5, 7, 8, 9, 16, 25, 27))
def test_mult_subgroup_properties(q):
    F = field_of_order(q)
    for e in range(1, q):
        if (q - 1) % e:
            with pytest.raises(FieldError):
                mult_subgroup(F, e)
            continue
        H = mult_subgroup(F, e)
        Hs = set(H)
        assert len(H) == e
        assert all(F.power(x, e) == 1 for x in H)
        assert all(F.times(a, b) in Hs for a in H for b in H)
        assert all(F.inverse(a) in Hs for a in H)


@given(st.sampled_from((243, 256, 343, 512, 625, 729, 1024)), st.data())
def test_large_field_axioms_sampled(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.times(a, F.plus(b, c)) == F.plus(F.times(a, b), F.times(a, c))
    assert F.times(F.times(a, b), c) == F.times(a, F.times(b, c))
    if a:
        assert F.times(a, F.inverse(a)) == 1
        assert F.power(a, q - 1) == 1
