import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from paleydesigns.errors import FieldDomainError, InvalidSpecError, ResourceLimitError
from paleydesigns.field import (GF, find_irreducible, is_irreducible, is_prime, prime_factors,
                                prime_power)

SMALL_FIELDS = [(3, 1), (5, 1), (13, 1), (2, 3), (3, 2), (5, 2), (7, 2), (3, 3), (3, 4)]


def test_is_prime_matches_sieve():
    sieve = [True] * 500
    sieve[0] = sieve[1] = False
    for i in range(2, 500):
        if sieve[i]:
            for j in range(i * i, 500, i):
                sieve[j] = False
    assert [n for n in range(500) if is_prime(n)] == [n for n in range(500) if sieve[n]]


def test_prime_power_and_factors():
    assert prime_power(6241) == (79, 2)
    assert prime_power(729) == (3, 6)
    assert prime_power(12) is None
    assert prime_factors(360) == [2, 3, 5]


@pytest.mark.parametrize("p,r,expected", [
    (13, 1, (0, 1)),
    (3, 2, (1, 0, 1)),
    (7, 2, (1, 0, 1)),
])
def test_find_irreducible_examples(p, r, expected):
    assert find_irreducible(p, r) == expected


def test_x2_plus_1_has_no_root_mod_3():
    assert all((x * x + 1) % 3 for x in range(3))


@pytest.mark.parametrize("p,r", [(2, 2), (2, 4), (3, 3), (5, 2), (5, 3), (11, 2), (2, 6), (3, 4)])
def test_find_irreducible_is_lex_smallest(p, r):
    # oracle: sympy's irreducibility test over every candidate in order
    expected = None
    for low in itertools.product(range(p), repeat=r):
        dense = [1, *reversed(low)]  # sympy wants high -> low
        if gf_irreducible_p(dense, p, ZZ):
            expected = (*low, 1)
            break
    assert find_irreducible(p, r) == expected


def test_is_irreducible_agrees_with_sympy_exhaustively():
    for p, r in [(2, 4), (3, 4), (5, 3)]:
        for low in itertools.product(range(p), repeat=r):
            dense = [1, *reversed(low)]
            assert is_irreducible((*low, 1), p) == bool(gf_irreducible_p(dense, p, ZZ))


def test_rejects_bad_specs():
    with pytest.raises(InvalidSpecError):
        GF(9)
    with pytest.raises(InvalidSpecError):
        GF(3, 2, modulus=(2, 0, 1))  # x^2 + 2 = (x-1)(x+1) over GF(3)
    with pytest.raises(ResourceLimitError):
        GF(2, 21)
    assert GF(2, 21, max_q=2**21).q == 2**21


def test_gf9_example_products():
    F = GF(3, 2)
    assert F([1, 1]) * F([2, 1]) == F.one
    assert (F([1, 1]) * F([2, 1])).index == 1


def test_prime_field_inverse_example():
    F = GF(13)
    assert F(2).inverse() == F(7)
    with pytest.raises(FieldDomainError):
        F(0).inverse()


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_canonical_index_is_bijection(p, r):
    F = GF(p, r)
    assert [e.index for e in F.elements()] == list(range(F.q))
    assert F.zero.index == 0 and F.one.index == 1


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_inverse_exhaustive(p, r):
    F = GF(p, r)
    for a in F.elements()[1:]:
        assert a * a.inverse() == F.one


@pytest.mark.parametrize("p,r", [(3, 2), (5, 2), (3, 3), (2, 4)])
def test_field_axioms_exhaustive(p, r):
    F = GF(p, r)
    els = F.elements()
    for a in els:
        assert a + F.zero == a
        assert a * F.one == a
        assert a - a == F.zero
    for a, b in itertools.product(els, repeat=2):
        assert a * b == b * a
        assert a + b == b + a


field_strategy = st.sampled_from([GF(3, 3), GF(5, 2), GF(7, 2), GF(11, 2), GF(2, 5)])


@settings(max_examples=200, deadline=None)
@given(field_strategy, st.data())
def test_ring_laws_random(F, data):
    idx = st.integers(0, F.q - 1)
    a, b, c = (F(data.draw(idx)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert (a + b) - b == a
    if not b.is_zero():
        assert (a / b) * b == a


@pytest.mark.parametrize("p,r", SMALL_FIELDS + [(3, 5), (5, 3)])
def test_vector_index_arithmetic_matches_scalar(p, r):
    F = GF(p, r)
    rng = np.random.default_rng(p * 100 + r)
    a = rng.integers(0, F.q, 200)
    b = rng.integers(0, F.q, 200)
    sub = F.sub_indices(a, b)
    add = F.add_indices(a, b)
    mul = F.mul_indices(a, b)
    for x, y, s, t, m in zip(a, b, sub, add, mul):
        assert (F(int(x)) - F(int(y))).index == s
        assert (F(int(x)) + F(int(y))).index == t
        assert (F(int(x)) * F(int(y))).index == m
    assert np.array_equal(F.from_digits(F.digits(a)), a)


def test_chi_examples():
    F = GF(13)
    assert F.chi(0) == 0
    assert F.chi(4) == 1
    assert F.chi(2) == -1
    assert pow(2, 6, 13) == 12


@pytest.mark.parametrize("p,r", [(5, 1), (13, 1), (3, 2), (5, 2), (7, 2), (3, 3), (3, 4)])
def test_chi_against_square_set(p, r):
    F = GF(p, r)
    els = F.elements()
    squares = {(x * x).index for x in els[1:]}
    for x in els:
        want = 0 if x.is_zero() else (1 if x.index in squares else -1)
        assert F.chi(x) == want
        assert F.chi_table[x.index] == want
    assert len(squares) == (F.q - 1) // 2


@pytest.mark.parametrize("p,r", [(13, 1), (29, 1), (3, 2), (5, 2), (3, 3)])
def test_chi_multiplicative_exhaustive(p, r):
    F = GF(p, r)
    chi = F.chi_table.astype(int)
    idx = np.arange(1, F.q)
    prod = F.mul_indices(idx[:, None], idx[None, :])
    assert np.array_equal(chi[prod], np.outer(chi[idx], chi[idx]))


@pytest.mark.parametrize("p,r,expected", [(5, 1, 2), (13, 1, 2), (3, 2, 4)])
def test_primitive_root_examples(p, r, expected):
    F = GF(p, r)
    assert F.primitive_root.index == expected
    assert F.order(F.primitive_root) == F.q - 1


def test_gf9_primitive_root_is_x_plus_1():
    F = GF(3, 2)
    w = F.primitive_root
    assert w == F([1, 1])
    assert w**4 == -F.one
    # every element of smaller index has order < 8
    assert all(F.order(i) < 8 for i in range(1, w.index))


@pytest.mark.parametrize("p,r", [(7, 1), (29, 1), (3, 4), (7, 2), (5, 3)])
def test_primitive_root_is_smallest(p, r):
    F = GF(p, r)
    orders = [len({(F(i) ** j).index for j in range(1, F.q)}) for i in range(1, F.q)]
    first = 1 + orders.index(F.q - 1)
    assert F.primitive_root.index == first


def test_power_class_examples():
    F = GF(3, 2)
    cls = F.power_class_table()
    w = F.primitive_root
    assert cls[w.index] == 1
    assert cls[F.one.index] == 0
    assert cls[2] == 0  # -1 = w^4
    assert cls[0] == -1


@pytest.mark.parametrize("p,r", [(5, 1), (13, 1), (3, 2), (7, 2), (3, 4), (11, 2)])
def test_power_classes_balanced_and_match_chi(p, r):
    F = GF(p, r)
    cls = F.power_class_table()
    log = F.log_table()
    counts = np.bincount(cls[1:], minlength=4)
    assert (counts == (F.q - 1) // 4).all()
    # a nonzero element is a square exactly when its discrete log is even
    assert np.array_equal(F.chi_table[1:] == 1, log[1:] % 2 == 0)
    exp = F.exp_table()
    assert np.array_equal(log[exp], np.arange(F.q - 1))
