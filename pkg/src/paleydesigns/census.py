"""Induced 4-vertex subgraph census, closed-form counts and counting identities.

Two independent routes give the same census:

* :func:`brute_census` classifies every 4-subset of the vertex set;
* :func:`census_from_k4` evaluates closed forms in q and k4, with k4 itself
  obtained from one common neighbourhood by :func:`k4_fast`.

A 4-vertex graph is identified by its edge count and sorted degree sequence,
which separates all eleven isomorphism classes.
"""

from __future__ import annotations

import enum
import itertools
import os
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError, StructuralFailure
from .graphs import Graph, common_neighborhood

DEFAULT_BRUTE_CAP = int(os.environ.get("PALEYDESIGNS_BRUTE_CAP", 200))


class IsoClass4(enum.Enum):
    """The eleven graphs on four vertices, in the fixed reporting order."""

    E4 = "E4"
    K2_2I = "K2+2I"
    P3_I = "P3+I"
    TWO_K2 = "2K2"
    K3_I = "K3+I"
    P4 = "P4"
    K13 = "K13"
    C4 = "C4"
    R = "R"
    D = "D"
    K4 = "K4"

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> IsoClass4:
        key = re.sub(r"[\s_+,{}]", "", name).upper()
        for c in cls:
            if key in (re.sub(r"[_+]", "", c.value).upper(), c.name.replace("_", "")):
                return c
        if key in _ALIASES:
            return cls[_ALIASES[key]]
        raise InvalidArgumentError(f"unknown 4-vertex class {name!r}")

    @property
    def complement(self) -> IsoClass4:
        return _COMPLEMENT[self]

    @property
    def n_edges(self) -> int:
        return _EDGE_COUNT[self]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """A representative edge list on vertices 0..3."""
        return _REPRESENTATIVE[self]


ISO_CLASSES = tuple(IsoClass4)

_ALIASES = {"CLAW": "K13", "STAR": "K13", "PAW": "R", "DIAMOND": "D"}

# The six classes indexing tilde counts: one per complement pair.
TILDE_CLASSES = (IsoClass4.K4, IsoClass4.D, IsoClass4.R, IsoClass4.C4, IsoClass4.K13,
                 IsoClass4.P4)

_COMPLEMENT = {
    IsoClass4.E4: IsoClass4.K4, IsoClass4.K2_2I: IsoClass4.D, IsoClass4.TWO_K2: IsoClass4.C4,
    IsoClass4.P3_I: IsoClass4.R, IsoClass4.K3_I: IsoClass4.K13, IsoClass4.P4: IsoClass4.P4,
}
_COMPLEMENT.update({v: k for k, v in list(_COMPLEMENT.items())})

_REPRESENTATIVE = {
    IsoClass4.E4: (),
    IsoClass4.K2_2I: ((0, 1),),
    IsoClass4.P3_I: ((0, 1), (1, 2)),
    IsoClass4.TWO_K2: ((0, 1), (2, 3)),
    IsoClass4.K3_I: ((0, 1), (0, 2), (1, 2)),
    IsoClass4.P4: ((0, 1), (1, 2), (2, 3)),
    IsoClass4.K13: ((0, 1), (0, 2), (0, 3)),
    IsoClass4.C4: ((0, 1), (1, 2), (2, 3), (0, 3)),
    IsoClass4.R: ((0, 1), (0, 2), (1, 2), (2, 3)),
    IsoClass4.D: ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)),
    IsoClass4.K4: ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
}
_EDGE_COUNT = {c: len(e) for c, e in _REPRESENTATIVE.items()}

_BY_SIGNATURE = {
    (0, (0, 0, 0, 0)): IsoClass4.E4,
    (1, (0, 0, 1, 1)): IsoClass4.K2_2I,
    (2, (0, 1, 1, 2)): IsoClass4.P3_I,
    (2, (1, 1, 1, 1)): IsoClass4.TWO_K2,
    (3, (0, 2, 2, 2)): IsoClass4.K3_I,
    (3, (1, 1, 2, 2)): IsoClass4.P4,
    (3, (1, 1, 1, 3)): IsoClass4.K13,
    (4, (2, 2, 2, 2)): IsoClass4.C4,
    (4, (1, 2, 2, 3)): IsoClass4.R,
    (5, (2, 2, 3, 3)): IsoClass4.D,
    (6, (3, 3, 3, 3)): IsoClass4.K4,
}

# bit i of a 4-vertex edge mask refers to this pair of positions
PAIRS4 = tuple(itertools.combinations(range(4), 2))


def classify_edges(edges) -> IsoClass4:
    """Class of a graph on vertices 0..3 given by its edge list."""
    deg = [0, 0, 0, 0]
    seen = set()
    for u, v in edges:
        if u == v or (min(u, v), max(u, v)) in seen:
            raise InvalidArgumentError(f"bad edge {(u, v)}")
        seen.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    return _BY_SIGNATURE[(len(seen), tuple(sorted(deg)))]


def _mask_edges(mask: int):
    return [PAIRS4[i] for i in range(6) if mask >> i & 1]


# lookup from 6-bit edge mask to position of the class in ISO_CLASSES
CLASS_OF_MASK = np.array(
    [ISO_CLASSES.index(classify_edges(_mask_edges(m))) for m in range(64)], dtype=np.int64
)


@dataclass(frozen=True)
class Census4:
    """Exact induced-subgraph counts for every 4-vertex class."""

    q: int
    counts: dict

    def __getitem__(self, cls: IsoClass4) -> int:
        return self.counts[cls]

    def total(self) -> int:
        return sum(self.counts.values())

    def tilde(self, cls: IsoClass4) -> int:
        """Number of 4-sets inducing ``cls`` or its complement."""
        if cls.complement is cls:
            return self.counts[cls]
        return self.counts[cls] + self.counts[cls.complement]

    def tilde_counts(self) -> dict:
        return {c: self.tilde(c) for c in TILDE_CLASSES}

    def complement_symmetric(self) -> bool:
        return all(self.counts[c] == self.counts[c.complement] for c in ISO_CLASSES)

    def rows(self):
        return [(c.label, self.counts[c]) for c in ISO_CLASSES]

    def __eq__(self, other):
        return (isinstance(other, Census4) and self.q == other.q
                and all(self.counts[c] == other.counts[c] for c in ISO_CLASSES))


def classify_4set(g: Graph, s) -> IsoClass4:
    s = [int(v) for v in s]
    if len(s) != 4 or len(set(s)) != 4:
        raise InvalidArgumentError(f"need four distinct vertices, got {s}")
    a = g.adjacency
    mask = sum(1 << i for i, (u, v) in enumerate(PAIRS4) if a[s[u], s[v]])
    return ISO_CLASSES[CLASS_OF_MASK[mask]]


def _census_rows(adjacency: np.ndarray, firsts) -> np.ndarray:
    """Class histogram of all 4-sets whose smallest vertex lies in ``firsts``."""
    q = adjacency.shape[0]
    a = adjacency.astype(np.int64)
    hist = np.zeros(len(ISO_CLASSES), dtype=np.int64)
    if q < 4:
        return hist
    # all triples (b, c, d) of range(q), lexicographic; those with b > a are a suffix
    trip = np.array(list(itertools.combinations(range(q), 3)), dtype=np.int64)
    b, c, d = trip[:, 0], trip[:, 1], trip[:, 2]
    bc = a[b, c]
    bd = a[b, d] << 4
    cd = a[c, d] << 5
    # first index of triples whose smallest element is >= j
    offsets = np.searchsorted(b, np.arange(q + 1), side="left")
    for x in firsts:
        start = offsets[x + 1]
        if start >= len(trip):
            continue
        row = a[x]
        mask = (row[b[start:]] | row[c[start:]] << 1 | row[d[start:]] << 2
                | bc[start:] << 3 | bd[start:] | cd[start:])
        hist += np.bincount(CLASS_OF_MASK[mask], minlength=len(ISO_CLASSES))
    return hist


def brute_census(g: Graph, *, cap: int | None = None, workers: int = 1) -> Census4:
    """Classify all C(q, 4) vertex subsets.

    The smallest vertex of each subset is split across ``workers`` processes;
    the merged histogram does not depend on the split.
    """
    cap = DEFAULT_BRUTE_CAP if cap is None else cap
    if g.q > cap:
        raise ResourceLimitError(
            f"brute census capped at q <= {cap} (q = {g.q}); use census_from_k4(q, k4_fast(g))"
        )
    q = g.q
    if workers <= 1:
        hist = _census_rows(g.adjacency, range(q))
    else:
        chunks = [range(i, q, workers) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_census_rows, [np.asarray(g.adjacency)] * workers, chunks)
            hist = sum(parts)
    counts = {c: int(n) for c, n in zip(ISO_CLASSES, hist)}
    return Census4(q, counts)


def k4_fast(g: Graph, edge: tuple[int, int] | None = None) -> int:
    """Number of 4-cliques from the edges inside one common neighbourhood.

    With m edges inside N(x) & N(y) for an edge {x, y}, edge-transitivity
    gives k4 = |E| * m / 6 = q(q-1) m / 24.  The default edge is {0, smallest
    neighbour of 0}.
    """
    if edge is None:
        x = 0
        y = int(g.neighbors(0)[0])
    else:
        x, y = edge
        if not g.is_edge(x, y):
            raise InvalidArgumentError(f"{edge} is not an edge")
    nb = common_neighborhood(g, x, y)
    m = int(g.adjacency[np.ix_(nb, nb)].sum()) // 2
    num = g.q * (g.q - 1) * m
    if num % 24:
        raise StructuralFailure(
            f"q(q-1)m/24 is not integral for q={g.q}, m={m}; graph is not edge-transitive",
            witness=(x, y),
        )
    return num // 24


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InvalidArgumentError(f"{what} = {value} is not an integer")
    return int(value)


def tilde_counts_from_k4(q: int, k4: int) -> dict:
    """Closed forms for the six tilde counts in terms of q and k4."""
    if q % 4 != 1 or k4 < 0:
        raise InvalidArgumentError(f"need q = 1 (mod 4) and k4 >= 0, got q={q}, k4={k4}")
    base = Fraction(q * (q - 1))
    forms = {
        IsoClass4.K4: Fraction(2 * k4),
        IsoClass4.D: base * (q - 5) * (q - 9) / 64 - 12 * k4,
        IsoClass4.R: base * (q - 5) / 4 + 24 * k4,
        IsoClass4.C4: base * (q - 5) / 16 + 6 * k4,
        IsoClass4.K13: base * (q - 5) * (q - 9) / 96 - 8 * k4,
        IsoClass4.P4: base * (q * q - 10 * q + 41) / 64 - 12 * k4,
    }
    out = {c: _exact(v, f"|~{c.label}|") for c, v in forms.items()}
    for c, v in out.items():
        if v < 0:
            raise InvalidArgumentError(f"|~{c.label}| = {v} < 0 for q={q}, k4={k4}")
    return out


def census_from_k4(q: int, k4: int) -> Census4:
    """Full census from the closed forms; complement classes filled symmetrically."""
    tilde = tilde_counts_from_k4(q, k4)
    counts = {}
    for c, v in tilde.items():
        if c.complement is c:
            counts[c] = v
        else:
            half = _exact(Fraction(v, 2), f"|{c.label}|")
            counts[c] = counts[c.complement] = half
    return Census4(q, {c: counts[c] for c in ISO_CLASSES})


@dataclass(frozen=True)
class TriangleCounts:
    k3: int
    p3: int


def triangle_counts(g: Graph) -> TriangleCounts:
    """Directly counted triangles and induced 3-paths, checked against closed forms."""
    a = g.adjacency
    q = g.q
    k3 = 0
    for x, y in g.edges():
        k3 += int((a[x] & a[y]).sum())
    k3 //= 3
    deg = a.sum(axis=1).astype(np.int64)
    # each induced P3 has one centre; each triangle is counted thrice among centres
    p3 = int(sum(comb(int(d), 2) for d in deg)) - 3 * k3
    want_k3 = Fraction(q * (q - 1) * (q - 5), 48)
    want_p3 = Fraction(q * (q - 1) ** 2, 16)
    if k3 != want_k3:
        raise StructuralFailure(f"|K3| = {k3}, closed form gives {want_k3}", witness="K3")
    if p3 != want_p3:
        raise StructuralFailure(f"|P3| = {p3}, closed form gives {want_p3}", witness="P3")
    return TriangleCounts(k3, p3)


@dataclass(frozen=True)
class RelationResult:
    name: str
    lhs: int
    rhs: Fraction
    holds: bool


def linear_relations(q: int, c: Census4) -> list[RelationResult]:
    """The five linear identities between D, R, P4, K4, C4 and K13 counts.

    Relation (b) is ``2|R| + 2|P4| = q(q-1)^3 / 32``; the variant with a single
    |P4| is not satisfied by any census and is not used.
    """
    I = IsoClass4
    k4, d, paw, c4, k13, p4 = (c[I.K4], c[I.D], c[I.R], c[I.C4], c[I.K13], c[I.P4])
    Q = Fraction(q)
    specs = [
        ("a", 4 * d + 2 * paw, Q * (q - 1) ** 2 * (q - 5) / 32),
        ("b", 2 * paw + 2 * p4, Q * (q - 1) ** 3 / 32),
        ("c", 6 * k4 + d, Q * (q - 1) * (q - 5) * (q - 9) / 128),
        ("d", d + 2 * c4, Q * (q - 1) ** 2 * (q - 5) / 128),
        ("e", 3 * k13 + paw, Q * (q - 1) ** 2 * (q - 5) / 64),
    ]
    return [RelationResult(n, lhs, rhs, lhs == rhs) for n, lhs, rhs in specs]


def check_linear_relations(q: int, c: Census4) -> dict:
    """Map relation name to pass/fail."""
    return {r.name: r.holds for r in linear_relations(q, c)}


def count_through_pair(g: Graph, cls: IsoClass4, pair) -> int:
    """Number of 4-sets containing both ends of an edge that induce ``cls``."""
    x, y = (int(v) for v in pair)
    if cls.n_edges == 0:
        raise InvalidArgumentError(f"{cls.label} has no edges; the pair count is undefined")
    if x == y or not g.is_edge(x, y):
        raise InvalidArgumentError(f"{(x, y)} is not an edge")
    a = g.adjacency.astype(np.int64)
    rest = np.array([v for v in range(g.q) if v not in (x, y)])
    i, j = np.triu_indices(len(rest), 1)
    z, w = rest[i], rest[j]
    # positions: x=0, y=1, z=2, w=3 in PAIRS4 bit order
    mask = (1 | a[x, z] << 1 | a[x, w] << 2 | a[y, z] << 3 | a[y, w] << 4 | a[z, w] << 5)
    target = ISO_CLASSES.index(cls)
    return int((CLASS_OF_MASK[mask] == target).sum())


def triangle_k4_extensions(g: Graph) -> Counter:
    """Multiset, over all triangles, of the number of 4-cliques containing it."""
    a = g.adjacency
    out = Counter()
    for x, y in g.edges():
        common = np.flatnonzero(a[x] & a[y])
        for z in common[common > y]:
            out[int((a[x] & a[y] & a[z]).sum())] += 1
    return out


def expected_total(q: int) -> int:
    return comb(q, 4)
