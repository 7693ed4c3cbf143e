"""Paley and Peisert graphs on GF(q) and the structural checks they must pass.

Vertices are canonical field indices 0..q-1.  Adjacency is held as a dense,
read-only boolean numpy matrix: both graphs are half-dense, and row
intersections are the inner loop of every count downstream.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, StructuralFailure, UnsupportedParametersError
from .field import GF


class GraphKind(str, enum.Enum):
    PALEY = "paley"
    PEISERT = "peisert"


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    @classmethod
    def expected(cls, q: int) -> SrgParams:
        return cls(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)

    def as_tuple(self):
        return (self.v, self.k, self.lam, self.mu)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable dense graph on the canonical indices of ``field``."""

    field: GF
    kind: GraphKind
    adjacency: np.ndarray
    root: int | None = None  # canonical index of the primitive root (Peisert)

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self):
        return f"Graph({self.kind.value}, q={self.q})"

    def is_edge(self, x: int, y: int) -> bool:
        return bool(self.adjacency[x, y])

    def neighbors(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[x])

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def n_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with u < v in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def relabel(self, perm) -> np.ndarray:
        """Adjacency of the image graph under the vertex map x -> perm[x]."""
        perm = np.asarray(perm)
        out = np.zeros_like(self.adjacency)
        out[np.ix_(perm, perm)] = self.adjacency
        return out


def _connection_adjacency(field: GF, connection: np.ndarray, block: int = 512) -> np.ndarray:
    # adj[x, y] = connection[x - y], filled in row blocks to bound memory
    q = field.q
    idx = np.arange(q)
    adj = np.empty((q, q), dtype=bool)
    for start in range(0, q, block):
        rows = idx[start:start + block]
        adj[start:start + block] = connection[field.sub_indices(rows[:, None], idx[None, :])]
    adj.setflags(write=False)
    return adj


def paley_connection_set(field: GF) -> np.ndarray:
    return field.chi_table == 1


def peisert_connection_set(field: GF, root=None) -> np.ndarray:
    cls = field.power_class_table(root)
    return (cls == 0) | (cls == 1)


def check_paley_parameters(p: int, r: int) -> None:
    if p == 2 or (p**r) % 4 != 1:
        raise UnsupportedParametersError(f"Paley graph needs q = {p}^{r} = 1 (mod 4)")


def check_peisert_parameters(p: int, r: int) -> None:
    if p % 4 != 3 or r % 2 != 0:
        raise UnsupportedParametersError(
            f"Peisert graph needs p = 3 (mod 4) and r even; got p={p}, r={r}"
        )


def build_paley(field: GF) -> Graph:
    """Edge {x, y} iff x - y is a nonzero square."""
    check_paley_parameters(field.p, field.r)
    return Graph(field, GraphKind.PALEY, _connection_adjacency(field, paley_connection_set(field)))


def build_peisert(field: GF, root=None) -> Graph:
    """Edge {x, y} iff x - y = w^j with j = 0 or 1 (mod 4), w a primitive root.

    ``root`` defaults to the canonical primitive root of the field.
    """
    check_peisert_parameters(field.p, field.r)
    w = field.primitive_root if root is None else field(root)
    adj = _connection_adjacency(field, peisert_connection_set(field, w))
    return Graph(field, GraphKind.PEISERT, adj, root=w.index)


def build_graph(p: int, r: int, kind, **field_kwargs) -> Graph:
    kind = GraphKind(kind)
    if kind is GraphKind.PALEY:
        check_paley_parameters(p, r)
        return build_paley(GF(p, r, **field_kwargs))
    check_peisert_parameters(p, r)
    return build_peisert(GF(p, r, **field_kwargs))


def common_neighborhood(g: Graph, x: int, y: int) -> np.ndarray:
    if x == y:
        raise InvalidArgumentError("common neighborhood needs two distinct vertices")
    return np.flatnonzero(g.adjacency[x] & g.adjacency[y])


def verify_srg(g: Graph) -> SrgParams:
    """Check the strongly regular parameters pairwise and via A^2.

    The pairwise route counts |N(x) & N(y)| row by row; the matrix route checks
    A^2 = kI + lam*A + mu*(J - I - A) as an integer identity.
    """
    q = g.q
    exp = SrgParams.expected(q)
    a = g.adjacency
    if a.diagonal().any():
        x = int(np.flatnonzero(a.diagonal())[0])
        raise StructuralFailure(f"self-loop at {x}", witness=(x, x))
    if not np.array_equal(a, a.T):
        x, y = (int(t) for t in np.argwhere(a != a.T)[0])
        raise StructuralFailure(f"adjacency not symmetric at {(x, y)}", witness=(x, y))
    deg = a.sum(axis=1)
    bad = np.flatnonzero(deg != exp.k)
    if bad.size:
        x = int(bad[0])
        raise StructuralFailure(f"vertex {x} has degree {deg[x]}, expected {exp.k}", witness=(x,))

    for x in range(q - 1):
        common = (a[x] & a[x + 1:]).sum(axis=1)
        target = np.where(a[x, x + 1:], exp.lam, exp.mu)
        wrong = np.flatnonzero(common != target)
        if wrong.size:
            y = x + 1 + int(wrong[0])
            raise StructuralFailure(
                f"pair {(x, y)} has {common[wrong[0]]} common neighbours, expected "
                f"{target[wrong[0]]}",
                witness=(x, y),
            )

    # float64 products are exact here: entries are bounded by q
    af = a.astype(np.float64)
    sq = np.rint(af @ af).astype(np.int64)
    ai = a.astype(np.int64)
    eye = np.eye(q, dtype=np.int64)
    rhs = exp.k * eye + exp.lam * ai + exp.mu * (1 - eye - ai)
    if not np.array_equal(sq, rhs):
        x, y = (int(t) for t in np.argwhere(sq != rhs)[0])
        raise StructuralFailure(f"A^2 identity fails at {(x, y)}", witness=(x, y))
    return exp


def _is_complementing(g: Graph, perm: np.ndarray) -> bool:
    a = g.adjacency
    image = a[np.ix_(perm, perm)]
    off = ~np.eye(g.q, dtype=bool)
    return bool(np.array_equal(image[off], ~a[off]))


def complement_map(g: Graph) -> np.ndarray:
    """A vertex permutation sending edges to non-edges and vice versa.

    Paley: x -> nu*x for the smallest non-square nu.  Peisert: x -> w^c * x for
    the first c in (1, 2, 3) that verifies.  Every candidate is checked against
    the full adjacency before being returned.
    """
    f = g.field
    idx = np.arange(g.q)
    if g.kind is GraphKind.PALEY:
        nu = int(np.flatnonzero(f.chi_table == -1)[0])
        candidates = [nu]
    else:
        exp = f.exp_table(g.root)
        candidates = [int(exp[c]) for c in (1, 2, 3)]
    for c in candidates:
        perm = f.mul_indices(idx, c)
        if _is_complementing(g, perm):
            perm.setflags(write=False)
            return perm
    raise StructuralFailure(f"no candidate multiplier complements {g!r}")


def find_isomorphism(a: np.ndarray, b: np.ndarray, *, max_vertices: int = 100):
    """Backtracking isomorphism search between two adjacency matrices.

    Returns ``perm`` with ``a[x, y] == b[perm[x], perm[y]]`` or None.  Vertex 0
    is pinned to 0, which is complete when ``b`` is vertex-transitive (true for
    every graph built here); callers with other inputs should not rely on a
    None result.
    """
    n = a.shape[0]
    if n > max_vertices:
        raise InvalidArgumentError(f"isomorphism search limited to {max_vertices} vertices")
    if b.shape != a.shape:
        return None
    if sorted(a.sum(axis=1)) != sorted(b.sum(axis=1)):
        return None
    a = np.asarray(a, dtype=bool)
    b = np.asarray(b, dtype=bool)

    # order vertices of a so each has as many already-placed neighbours as possible
    order = [0]
    placed = np.zeros(n, dtype=bool)
    placed[0] = True
    links = a[0].astype(int).copy()
    for _ in range(n - 1):
        cand = np.where(placed, -1, links)
        v = int(np.argmax(cand))
        order.append(v)
        placed[v] = True
        links += a[v]

    perm = np.full(n, -1)
    used = np.zeros(n, dtype=bool)

    def extend(depth):
        if depth == n:
            return True
        v = order[depth]
        prev = order[:depth]
        want = a[v, prev]
        images = perm[prev]
        for w in np.flatnonzero(~used):
            if np.array_equal(b[w, images], want):
                perm[v] = w
                used[w] = True
                if extend(depth + 1):
                    return True
                used[w] = False
                perm[v] = -1
        return False

    perm[0] = 0
    used[0] = True
    if extend(1):
        return perm.copy()
    return None
