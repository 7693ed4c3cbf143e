"""Block designs from induced-subgraph classes.

For a family of k-vertex graphs no two of which are isomorphic or
complementary, the k-subsets of the vertex set inducing a member of the
family or a complement of one form a 2-design.  Blocks are materialised by
classifying every k-subset; lambda is then recovered by counting, for each of
the C(q, 2) point pairs, the blocks containing it.  Formulas for lambda are
used only as predictions to compare against.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .census import (CLASS_OF_MASK, ISO_CLASSES, TILDE_CLASSES, IsoClass4, k4_fast,
                     tilde_counts_from_k4)
from .errors import (FamilyValidationError, InvalidArgumentError, NotADesignError,
                     ResourceLimitError, StructuralFailure)
from .graphs import Graph

DEFAULT_K_CAP = int(os.environ.get("PALEYDESIGNS_K_CAP", 5))
DEFAULT_APPENDIX_Q_CAP = 61
MAX_VALIDATE_K = 8


# -- small graphs on vertices 0..k-1 ---------------------------------------

def _norm_edges(edges):
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


def complement_edges(k: int, edges) -> frozenset:
    return frozenset(itertools.combinations(range(k), 2)) - _norm_edges(edges)


def are_isomorphic(k: int, e1, e2) -> bool:
    """Isomorphism of two k-vertex graphs by trying every vertex permutation."""
    e1, e2 = _norm_edges(e1), _norm_edges(e2)
    if len(e1) != len(e2):
        return False
    for perm in itertools.permutations(range(k)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in e2 for u, v in e1):
            return True
    return False


def edge_mask(k: int, edges) -> int:
    pairs = list(itertools.combinations(range(k), 2))
    return sum(1 << pairs.index(e) for e in _norm_edges(edges))


@lru_cache(maxsize=None)
def canonical_table(k: int) -> np.ndarray:
    """Smallest relabelled edge mask for every mask of a k-vertex graph."""
    if k > 6:
        raise ResourceLimitError(f"canonical table limited to k <= 6, got {k}")
    pairs = list(itertools.combinations(range(k), 2))
    where = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    best = masks.copy()
    for perm in itertools.permutations(range(k)):
        image = np.zeros_like(masks)
        for i, (u, v) in enumerate(pairs):
            j = where[(min(perm[u], perm[v]), max(perm[u], perm[v]))]
            image |= ((masks >> i) & 1) << j
        np.minimum(best, image, out=best)
    best.setflags(write=False)
    return best


NAMED_GRAPHS = {
    "K2": (2, ((0, 1),)),
    "K3": (3, ((0, 1), (0, 2), (1, 2))),
    "P3": (3, ((0, 1), (1, 2))),
    **{c.label: (4, c.edges) for c in ISO_CLASSES},
}


def named_graph(name: str):
    """``(k, edges)`` for K2, K3, P3 or any 4-vertex class name."""
    key = name.strip()
    if key.upper() in ("K2", "K3", "P3"):
        return NAMED_GRAPHS[key.upper()]
    c = IsoClass4.parse(key)
    return 4, c.edges


@dataclass(frozen=True)
class Clash:
    i: int
    j: int
    relation: str  # "isomorphic" or "complement"


def validate_family(representatives, k: int | None = None) -> list[Clash]:
    """Pairs of representatives that are isomorphic or complementary.

    An empty list means the family is valid.
    """
    reps = [_norm_edges(e) for e in representatives]
    if k is None:
        k = 1 + max((v for e in reps for pair in e for v in pair), default=0)
    if k > MAX_VALIDATE_K:
        raise ResourceLimitError(f"family validation limited to k <= {MAX_VALIDATE_K}")
    clashes = []
    for i, j in itertools.combinations(range(len(reps)), 2):
        if are_isomorphic(k, reps[i], reps[j]):
            clashes.append(Clash(i, j, "isomorphic"))
        elif are_isomorphic(k, reps[i], complement_edges(k, reps[j])):
            clashes.append(Clash(i, j, "complement"))
    return clashes


@dataclass(frozen=True)
class BlockFamily:
    """Representatives (edge lists on 0..k-1) whose tilde classes form the blocks."""

    k: int
    representatives: tuple
    names: tuple = ()

    @classmethod
    def from_names(cls, names) -> BlockFamily:
        if isinstance(names, str):
            names = [n for n in names.split(",") if n.strip()]
        graphs = [named_graph(n) for n in names]
        ks = {g[0] for g in graphs}
        if len(ks) != 1:
            raise InvalidArgumentError(f"family mixes vertex counts {sorted(ks)}")
        labels = tuple(_display_name(n) for n in names)
        return cls(ks.pop(), tuple(tuple(g[1]) for g in graphs), labels)

    @classmethod
    def from_classes(cls, classes) -> BlockFamily:
        classes = list(classes)
        return cls(4, tuple(c.edges for c in classes), tuple(c.label for c in classes))

    def validate(self) -> None:
        clashes = validate_family(self.representatives, self.k)
        if clashes:
            desc = ", ".join(f"{c.i}~{c.j} ({c.relation})" for c in clashes)
            raise FamilyValidationError(f"family representatives clash: {desc}", clashes)

    def target_masks(self) -> np.ndarray:
        canon = canonical_table(self.k)
        out = set()
        for rep in self.representatives:
            out.add(int(canon[edge_mask(self.k, rep)]))
            out.add(int(canon[edge_mask(self.k, complement_edges(self.k, rep))]))
        return np.array(sorted(out), dtype=np.int64)


def _display_name(name: str) -> str:
    key = name.strip()
    if key.upper() in ("K2", "K3", "P3"):
        return key.upper()
    return IsoClass4.parse(key).label


@dataclass(frozen=True, eq=False)
class Design:
    """Point set range(q) with a sorted array of sorted k-subsets as blocks."""

    q: int
    k: int
    blocks: np.ndarray
    lam: int | None = None
    name: str = ""

    @property
    def b(self) -> int:
        return int(self.blocks.shape[0])

    @property
    def replication(self) -> int | None:
        if self.lam is None or self.k < 2:
            return None
        return self.lam * (self.q - 1) // (self.k - 1)

    def block_set(self) -> set:
        return {tuple(row) for row in self.blocks.tolist()}


def _sorted_blocks(blocks: np.ndarray) -> np.ndarray:
    blocks = np.sort(np.asarray(blocks, dtype=np.int64), axis=1)
    if blocks.shape[0] == 0:
        return blocks
    order = np.lexsort(blocks.T[::-1])
    return blocks[order]


def _combinations(q: int, k: int, chunk: int = 1 << 18):
    it = itertools.combinations(range(q), k)
    while True:
        flat = np.fromiter(itertools.chain.from_iterable(itertools.islice(it, chunk)),
                           dtype=np.int64)
        if flat.size == 0:
            return
        yield flat.reshape(-1, k)


def _subset_masks(adjacency: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    k = subsets.shape[1]
    a = adjacency
    mask = np.zeros(subsets.shape[0], dtype=np.int64)
    for i, (u, v) in enumerate(itertools.combinations(range(k), 2)):
        mask |= a[subsets[:, u], subsets[:, v]].astype(np.int64) << i
    return mask


def build_blocks(g: Graph, fam: BlockFamily, *, k_cap: int | None = None) -> Design:
    """All k-subsets inducing a representative or a representative's complement.

    The returned design has ``lam=None``; call :func:`verify_2design`.
    """
    k_cap = DEFAULT_K_CAP if k_cap is None else k_cap
    if fam.k > k_cap:
        raise ResourceLimitError(f"block size {fam.k} exceeds the cap {k_cap}")
    if fam.k < 2:
        raise InvalidArgumentError("block size must be at least 2")
    fam.validate()
    canon = canonical_table(fam.k)
    targets = fam.target_masks()
    kept = []
    for subsets in _combinations(g.q, fam.k):
        sel = np.isin(canon[_subset_masks(g.adjacency, subsets)], targets)
        kept.append(subsets[sel])
    blocks = np.concatenate(kept) if kept else np.empty((0, fam.k), dtype=np.int64)
    name = "~" + " u ~".join(fam.names) if fam.names else ""
    return Design(g.q, fam.k, blocks, None, name)


def pair_incidence(d: Design, chunk: int = 1 << 16) -> np.ndarray:
    """q x q matrix of how many blocks contain each pair (diagonal: per point)."""
    q = d.q
    counts = np.zeros((q, q), dtype=np.float64)
    rows = np.arange(min(chunk, max(d.b, 1)))
    for start in range(0, d.b, chunk):
        part = d.blocks[start:start + chunk]
        m = np.zeros((part.shape[0], q), dtype=np.float64)
        m[rows[:part.shape[0], None], part] = 1.0
        counts += m.T @ m
    # entries are integers below 2**53, so the float accumulation is exact
    return np.rint(counts).astype(np.int64)


def verify_2design(d: Design) -> int:
    """Exhaustively verify the 2-design property and return lambda."""
    q, k = d.q, d.k
    blocks = d.blocks
    if blocks.ndim != 2 or blocks.shape[1] != k:
        raise StructuralFailure(f"blocks must have shape (b, {k})", witness=d.name)
    if d.b:
        srt = np.sort(blocks, axis=1)
        if (np.diff(srt, axis=1) == 0).any():
            raise StructuralFailure("a block repeats a point", witness=d.name)
        if len({tuple(r) for r in srt.tolist()}) != d.b:
            raise StructuralFailure("repeated block", witness=d.name)
    counts = pair_incidence(d)
    iu, ju = np.triu_indices(q, 1)
    off = counts[iu, ju]
    lam = int(off[0])
    bad = np.flatnonzero(off != lam)
    if bad.size:
        i = int(bad[0])
        raise NotADesignError(
            f"pair {(0, 1)} lies in {lam} blocks but pair {(int(iu[i]), int(ju[i]))} "
            f"lies in {int(off[i])}",
            witness=(((0, 1), lam), ((int(iu[i]), int(ju[i])), int(off[i]))),
        )
    reps = np.diag(counts)
    if (reps != reps[0]).any() or reps[0] * (k - 1) != lam * (q - 1):
        raise StructuralFailure("replication number is not constant", witness=d.name)
    if d.b * comb(k, 2) != lam * comb(q, 2):
        raise StructuralFailure("b C(k,2) != lambda C(q,2)", witness=d.name)
    return lam


def verified(d: Design) -> Design:
    return replace(d, lam=verify_2design(d))


def build_design(g: Graph, fam: BlockFamily, **kw) -> Design:
    return verified(build_blocks(g, fam, **kw))


def _tilde_classes(fam) -> list[IsoClass4]:
    out = []
    for c in fam:
        c = IsoClass4.parse(c) if isinstance(c, str) else c
        t = c if c in TILDE_CLASSES else c.complement
        if t in out:
            raise FamilyValidationError(f"{c.label} repeats the class of {t.label}")
        out.append(t)
    return out


def predicted_lambda(q: int, k4: int, fam) -> int:
    """lambda = C(4,2) / C(q,2) * (sum of tilde counts), from q and k4 alone."""
    tilde = tilde_counts_from_k4(q, k4)
    total = sum(tilde[c] for c in _tilde_classes(fam))
    lam = Fraction(comb(4, 2) * total, comb(q, 2))
    if lam.denominator != 1:
        raise StructuralFailure(f"lambda = {lam} is not integral", witness=tuple(fam))
    return int(lam)


COROLLARY_FAMILIES = {
    "B1": ("K3",),
    "B2": ("P3",),
    "B3": ("P4", "R", "D"),
    "B4": ("K4", "K13", "C4"),
}


def corollary_lambdas(q: int) -> dict:
    return {
        "B1": Fraction(q - 5, 4),
        "B2": Fraction(3 * (q - 1), 4),
        "B3": Fraction(3 * (q - 1) * (q - 3), 8),
        "B4": Fraction((q - 3) * (q - 5), 8),
    }


def corollary2_designs(g: Graph) -> dict:
    """The four designs from triangles, 3-paths and two 4-vertex unions, verified."""
    want = corollary_lambdas(g.q)
    out = {}
    for name, members in COROLLARY_FAMILIES.items():
        d = build_design(g, BlockFamily.from_names(members))
        d = replace(d, name=name)
        if d.lam != want[name]:
            raise StructuralFailure(
                f"{name}: verified lambda {d.lam}, expected {want[name]}", witness=name
            )
        out[name] = d
    return out


def complement_lambdas(q: int) -> dict:
    """lambda of the complementary designs of B1..B4 (blocks of size q-3 or q-4)."""
    return {
        "B1": Fraction((q - 3) * (q - 4) * (q - 5), 24),
        "B2": Fraction((q - 1) * (q - 3) * (q - 4), 8),
        "B3": Fraction((q - 1) * (q - 3) * (q - 4) * (q - 5), 32),
        "B4": Fraction((q - 3) * (q - 4) * (q - 5) ** 2, 96),
    }


def complement_design(d: Design) -> Design:
    """Replace every block by its complement in the point set; verified."""
    m = np.ones((d.b, d.q), dtype=bool)
    if d.b:
        m[np.arange(d.b)[:, None], d.blocks] = False
    rows, cols = np.nonzero(m)
    blocks = cols.reshape(d.b, d.q - d.k)
    name = f"complement of {d.name}" if d.name else ""
    return verified(Design(d.q, d.q - d.k, _sorted_blocks(blocks), None, name))


# -- the 62 nontrivial 4-vertex families -------------------------------------

def appendix_families() -> list[tuple]:
    """Nonempty proper subsets of the six tilde classes, by size then position."""
    return [combo for size in range(1, len(TILDE_CLASSES))
            for combo in itertools.combinations(TILDE_CLASSES, size)]


@dataclass(frozen=True)
class AppendixRow:
    family: tuple
    lambda_predicted: int
    lambda_verified: int
    b: int
    lambda_reference: int | None = None

    @property
    def matches_reference(self) -> bool | None:
        if self.lambda_reference is None:
            return None
        return self.lambda_reference == self.lambda_verified

    @property
    def label(self) -> str:
        return ",".join(c.label for c in self.family)


def classify_all_4sets(g: Graph):
    """(subsets, class position) for every 4-subset, subsets in lexicographic order."""
    parts, classes = [], []
    for subsets in _combinations(g.q, 4):
        parts.append(subsets)
        classes.append(CLASS_OF_MASK[_subset_masks(g.adjacency, subsets)])
    return np.concatenate(parts), np.concatenate(classes)


def appendix_table(g: Graph, k4: int | None = None, reference: dict | None = None,
                   *, q_cap: int = DEFAULT_APPENDIX_Q_CAP) -> list[AppendixRow]:
    """Predicted and exhaustively verified lambda for all 62 families.

    ``reference`` optionally maps family tuples to externally recorded lambda
    values, which are attached to each row for comparison but never asserted.
    """
    if g.q > q_cap:
        raise ResourceLimitError(f"appendix table materialisation capped at q <= {q_cap}")
    if k4 is None:
        k4 = k4_fast(g)
    subsets, cls = classify_all_4sets(g)
    position = {c: i for i, c in enumerate(ISO_CLASSES)}
    rows = []
    for fam in appendix_families():
        wanted = [position[c] for c in fam] + [position[c.complement] for c in fam]
        d = Design(g.q, 4, subsets[np.isin(cls, wanted)])
        lam = verify_2design(d)
        pred = predicted_lambda(g.q, k4, fam)
        if pred != lam:
            raise StructuralFailure(
                f"family {[c.label for c in fam]}: predicted {pred}, verified {lam}",
                witness=fam,
            )
        ref = None if reference is None else reference.get(tuple(fam))
        rows.append(AppendixRow(tuple(fam), pred, lam, d.b, ref))
    return rows
