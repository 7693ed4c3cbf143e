from math import gcd

import networkx as nx
import numpy as np
import pytest

from paleydesigns.errors import InvalidArgumentError, StructuralFailure, UnsupportedParametersError
from paleydesigns.field import GF
from paleydesigns.graphs import (Graph, GraphKind, SrgParams, build_graph, build_paley,
                                 build_peisert, common_neighborhood, complement_map,
                                 find_isomorphism, verify_srg)


def paley_by_hand(p):
    squares = {x * x % p for x in range(1, p)}
    return np.array([[(x - y) % p in squares for y in range(p)] for x in range(p)])


def test_paley_5_is_the_pentagon():
    g = build_paley(GF(5))
    assert sorted(g.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_paley_13_neighbours_of_zero():
    g = build_paley(GF(13))
    assert g.neighbors(0).tolist() == [1, 3, 4, 9, 10, 12]


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41, 101])
def test_prime_paley_matches_residue_definition(p):
    assert np.array_equal(build_paley(GF(p)).adjacency, paley_by_hand(p))


@pytest.mark.parametrize("p,r,kind,edges", [
    (3, 2, "paley", 18),
    (7, 2, "peisert", 588),
    (5, 2, "paley", 150),
    (3, 4, "peisert", 1620),
])
def test_edge_count(p, r, kind, edges):
    g = build_graph(p, r, kind)
    assert g.n_edges == edges == g.q * (g.q - 1) // 4


def test_peisert_9_degree_four():
    g = build_graph(3, 2, "peisert")
    assert (g.degrees() == 4).all()


def test_parameter_checks():
    with pytest.raises(UnsupportedParametersError):
        build_graph(7, 1, "peisert")
    with pytest.raises(UnsupportedParametersError):
        build_graph(5, 2, "peisert")  # p = 1 (mod 4)
    with pytest.raises(UnsupportedParametersError):
        build_graph(7, 1, "paley")
    with pytest.raises(UnsupportedParametersError):
        build_paley(GF(3, 3))


def test_adjacency_is_read_only():
    g = build_paley(GF(13))
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False


@pytest.mark.parametrize("p,r,kind,expected", [
    (13, 1, "paley", (13, 6, 2, 3)),
    (29, 1, "paley", (29, 14, 6, 7)),
    (7, 2, "peisert", (49, 24, 11, 12)),
    (7, 2, "paley", (49, 24, 11, 12)),
])
def test_verify_srg_examples(p, r, kind, expected):
    assert verify_srg(build_graph(p, r, kind)).as_tuple() == expected


def test_srg_params_networkx_oracle():
    g = build_graph(3, 4, "peisert")
    G = nx.from_numpy_array(g.adjacency.astype(int))
    assert nx.is_strongly_regular(G)
    assert nx.intersection_array(G) == ([40, 20], [1, 20])  # (81, 40, 19, 20)
    assert SrgParams.expected(81).as_tuple() == (81, 40, 19, 20)


def _tampered(g, x, y):
    a = g.adjacency.copy()
    a[x, y] = a[y, x] = not a[x, y]
    a.setflags(write=False)
    return Graph(g.field, g.kind, a)


def test_verify_srg_names_offending_pair():
    g = build_paley(GF(13))
    with pytest.raises(StructuralFailure) as exc:
        verify_srg(_tampered(g, 0, 2))
    assert exc.value.witness is not None
    # an asymmetric tweak is caught too
    a = g.adjacency.copy()
    a[0, 2] = True
    bad = Graph(g.field, g.kind, a)
    with pytest.raises(StructuralFailure, match="symmetric"):
        verify_srg(bad)


def test_verify_srg_catches_regular_non_srg():
    # swap two edges so every degree is kept but common-neighbour counts change
    g = build_paley(GF(13))
    a = g.adjacency.copy()
    # 0~1 and 2~3 are edges, 0~2 and 1~3 are not
    assert a[0, 1] and a[2, 3] and not a[0, 2] and not a[1, 3]
    for x, y, v in [(0, 1, False), (2, 3, False), (0, 2, True), (1, 3, True)]:
        a[x, y] = a[y, x] = v
    assert (a.sum(axis=1) == 6).all()
    with pytest.raises(StructuralFailure, match="common neighbours"):
        verify_srg(Graph(g.field, g.kind, a))


@pytest.mark.parametrize("p,r,kind", [(13, 1, "paley"), (5, 1, "paley"), (3, 2, "paley"),
                                      (3, 2, "peisert"), (7, 2, "peisert"), (29, 1, "paley")])
def test_complement_map(p, r, kind):
    g = build_graph(p, r, kind)
    s = complement_map(g)
    a = g.adjacency
    assert sorted(s.tolist()) == list(range(g.q))
    for x, y in np.argwhere(~np.eye(g.q, dtype=bool)):
        assert a[x, y] != a[s[x], s[y]]
    # sigma twice maps edges to edges
    ss = s[s]
    assert all(a[ss[x], ss[y]] for x, y in g.edges())


def test_paley_13_complement_is_doubling():
    assert complement_map(build_paley(GF(13))).tolist() == [2 * x % 13 for x in range(13)]


def test_paley_5_complement_is_doubling():
    g = build_paley(GF(5))
    s = complement_map(g)
    assert s.tolist() == [0, 2, 4, 1, 3]


def test_common_neighborhood():
    g = build_paley(GF(13))
    assert len(common_neighborhood(g, 0, 1)) == 2
    assert len(common_neighborhood(g, 0, 2)) == 3
    assert len(common_neighborhood(build_paley(GF(29)), 0, 1)) == 6
    with pytest.raises(InvalidArgumentError):
        common_neighborhood(g, 4, 4)


def test_paley_and_peisert_9_isomorphic():
    a = build_graph(3, 2, "paley").adjacency
    b = build_graph(3, 2, "peisert").adjacency
    perm = find_isomorphism(a, b)
    assert perm is not None
    assert np.array_equal(b[np.ix_(perm, perm)], a)
    assert nx.is_isomorphic(nx.from_numpy_array(a.astype(int)), nx.from_numpy_array(b.astype(int)))


def test_paley_and_peisert_49_not_isomorphic():
    a = build_graph(7, 2, "paley").adjacency
    b = build_graph(7, 2, "peisert").adjacency
    assert find_isomorphism(a, b) is None


def test_isomorphism_search_limit():
    a = build_graph(11, 2, "paley").adjacency
    with pytest.raises(InvalidArgumentError):
        find_isomorphism(a, a)


@pytest.mark.parametrize("p,r", [(3, 2), (7, 2)])
def test_peisert_independent_of_primitive_root(p, r):
    f = GF(p, r)
    q = f.q
    w = f.primitive_root
    canon = build_peisert(f)
    idx = np.arange(q)
    w1, w3 = w.index, (w ** 3).index
    for s in range(1, q - 1):
        if gcd(s, q - 1) != 1:
            continue
        g = build_peisert(f, root=(w ** s).index)
        if s % 4 == 1:
            assert np.array_equal(g.adjacency, canon.adjacency)
        else:
            assert s % 4 == 3
            # x -> w^3 x carries the canonical graph onto the new one; x -> w x undoes it
            assert np.array_equal(canon.relabel(f.mul_indices(idx, w3)), g.adjacency)
            assert np.array_equal(g.relabel(f.mul_indices(idx, w1)), canon.adjacency)


def test_graph_kind_and_repr():
    g = build_graph(3, 2, GraphKind.PEISERT)
    assert g.kind is GraphKind.PEISERT and g.root == 4
    assert "peisert" in repr(g)
