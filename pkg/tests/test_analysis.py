from fractions import Fraction
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paleydesigns.analysis import (STATED_NORMALIZATION, asymptotic_ratio, char_sum,
                                   fit_normalization, k4_char_sum, k4_interval, thomason_check)
from paleydesigns.census import k4_fast
from paleydesigns.errors import StructuralFailure, UnsupportedParametersError
from paleydesigns.field import GF, prime_power
from paleydesigns.graphs import build_graph, build_paley, common_neighborhood
from paleydesigns.reference import paley_k4_table


def naive_char_sum(p):
    """Direct double loop over unordered pairs, using Euler's criterion."""
    def chi(x):
        x %= p
        return 0 if x == 0 else (1 if pow(x, (p - 1) // 2, p) == 1 else -1)

    total = 0
    for a in range(2, p):
        for b in range(a + 1, p):
            total += ((1 + chi(a - b)) * (1 + chi(a)) * (1 + chi(a - 1))
                      * (1 + chi(b)) * (1 + chi(b - 1)))
    return total


@pytest.mark.parametrize("p", [13, 17, 29, 37])
def test_char_sum_matches_direct_loop(p):
    assert char_sum(GF(p)) == naive_char_sum(p)


def test_char_sum_counts_k4_through_an_edge():
    # each term is 32 exactly when {0, 1, a, b} is a 4-clique, and 0 otherwise
    for q in (29, 37):
        g = build_paley(GF(q))
        nb = common_neighborhood(g, 0, 1)
        m = int(g.adjacency[np.ix_(nb, nb)].sum()) // 2
        assert char_sum(GF(q)) == 32 * m


def test_fitted_normalization():
    c = fit_normalization()
    assert c == Fraction(1, 768)
    assert c != STATED_NORMALIZATION


@pytest.mark.parametrize("p,r,k4", [(13, 1, 0), (29, 1, 203), (37, 1, 555), (5, 2, 75),
                                    (53, 1, 3445), (3, 4, 21870)])
def test_k4_char_sum_examples(p, r, k4):
    res = k4_char_sum(GF(p, r))
    assert res.k4_value == k4
    assert not res.matches_stated_constant


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29, 37, 41, 49, 53, 61, 73, 81, 89, 97, 101])
def test_k4_char_sum_agrees_with_census_up_to_101(q):
    f = GF(*prime_power(q))
    assert k4_char_sum(f).k4_value == k4_fast(build_paley(f))


def test_stated_constant_is_not_integral_at_29():
    # 1/512 would give 203 * 768 / 512 = 304.5
    with pytest.raises(StructuralFailure):
        k4_char_sum(GF(29), normalization=STATED_NORMALIZATION)


def test_char_sum_is_paley_only():
    with pytest.raises(UnsupportedParametersError):
        char_sum(GF(7))


def test_thomason_trivial_subsets():
    g = build_paley(GF(29))
    for u in ([], [5]):
        rep = thomason_check(g, u)
        assert rep.lhs_squared == 0 and rep.holds


def test_thomason_common_neighbourhood_29():
    g = build_paley(GF(29))
    u = common_neighborhood(g, 0, 1)
    rep = thomason_check(g, u)
    assert (rep.size, rep.edges, rep.center) == (6, 6, Fraction(15, 2))
    assert rep.bound == pytest.approx(6 * 23 / (4 * 29**0.5))
    assert rep.holds


@pytest.mark.parametrize("p", [29, 53, 101])
def test_thomason_random_subsets(p):
    g = build_paley(GF(p))
    rng = np.random.default_rng(p)
    for _ in range(1000):
        size = int(rng.integers(0, p + 1))
        u = rng.choice(p, size, replace=False)
        assert thomason_check(g, u).holds


@settings(max_examples=50, deadline=None)
@given(st.sets(st.integers(0, 36)))
def test_thomason_property_37(u):
    g = build_paley(GF(37))
    rep = thomason_check(g, u)
    # float cross-check of the exact comparison, away from equality
    lhs = rep.deviation
    rhs = len(u) * (37 - len(u)) / (4 * 37**0.5)
    assert lhs <= rhs + 1e-9


def test_thomason_rejects_peisert():
    with pytest.raises(UnsupportedParametersError):
        thomason_check(build_graph(3, 2, "peisert"), [0, 1])


@pytest.mark.parametrize("q,k4", [(29, 203), (281, 3737300), (5, 0)])
def test_interval_examples(q, k4):
    iv = k4_interval(q)
    assert iv.contains(k4)
    assert iv.lower <= k4 <= iv.upper


def test_interval_29_endpoints():
    iv = k4_interval(29)
    assert float(iv.lower) == pytest.approx(37.0, abs=0.1)
    assert float(iv.upper) == pytest.approx(470.5, abs=0.1)
    assert not iv.contains(471) and not iv.contains(36)


def test_interval_exact_membership_matches_endpoints():
    for q in (13, 29, 37, 101):
        iv = k4_interval(q)
        for k4 in range(max(0, int(iv.lower) - 3), int(iv.upper) + 4):
            inside = iv.lower <= k4 <= iv.upper
            if abs(k4 - iv.lower) > 1e-6 and abs(k4 - iv.upper) > 1e-6:
                assert iv.contains(k4) == inside


def test_interval_width_over_q_to_seven_halves():
    ratios = []
    for row in paley_k4_table():
        if row.q == 5:
            continue  # the interval collapses to {0}
        ratios.append(float(k4_interval(row.q).width) / row.q**3.5)
    assert max(ratios) < 1 / 256
    assert min(ratios) > 0


def test_interval_rejects_bad_q():
    with pytest.raises(UnsupportedParametersError):
        k4_interval(31)
    with pytest.raises(UnsupportedParametersError):
        k4_interval(21)


def test_asymptotic_ratio():
    assert float(asymptotic_ratio(281, 3737300)) == pytest.approx(0.9207, abs=5e-5)
    assert asymptotic_ratio(29, 203) == Fraction(1536 * 203, 29**4)
    assert round(float(asymptotic_ratio(29, 203)), 4) == 0.4409
    assert asymptotic_ratio(5, 0) == 0
