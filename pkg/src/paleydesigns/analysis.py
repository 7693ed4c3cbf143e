"""Character-sum evaluation of k4, spectral edge-distribution bounds, asymptotics.

Everything that decides a pass/fail is done in exact integer or rational
arithmetic; square roots are eliminated by squaring both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

import numpy as np

from .census import k4_fast
from .errors import StructuralFailure, UnsupportedParametersError
from .field import GF, prime_power
from .graphs import Graph, GraphKind, build_paley, check_paley_parameters

CALIBRATION_Q = (13, 17, 25, 29)
STATED_NORMALIZATION = Fraction(1, 512)


# -- character sum -------------------------------------------------------------

def char_sum(field: GF) -> int:
    """Sum over unordered pairs {a, b} of GF(q) minus {0, 1} of
    (1 + chi(a - b)) * prod over i in {0, 1} of (1 + chi(a - i)) (1 + chi(b - i)).
    """
    check_paley_parameters(field.p, field.r)
    q = field.q
    chi = field.chi_table.astype(np.int64)
    pts = np.arange(2, q)
    one = field.sub_indices(pts, 1)
    weight = (1 + chi[pts]) * (1 + chi[one])
    diff = chi[field.sub_indices(pts[:, None], pts[None, :])]
    pair = 1 + diff
    np.fill_diagonal(pair, 0)
    total = int(weight @ pair @ weight)
    if total % 2:
        raise StructuralFailure("ordered character sum is odd; chi(-1) != 1?")
    return total // 2


def _field_for(q: int) -> GF:
    pr = prime_power(q)
    if pr is None:
        raise UnsupportedParametersError(f"{q} is not a prime power")
    return GF(*pr)


@lru_cache(maxsize=None)
def fit_normalization(calibration=CALIBRATION_Q) -> Fraction:
    """The constant c with k4 = c * q(q-1) * char_sum, fitted against k4_fast.

    Calibration values whose sum vanishes must have k4 = 0; all others must
    agree on a single rational c.
    """
    fitted = set()
    for q in calibration:
        f = _field_for(q)
        s = char_sum(f)
        k4 = k4_fast(build_paley(f))
        if s == 0:
            if k4 != 0:
                raise StructuralFailure(f"q={q}: character sum 0 but k4={k4}")
            continue
        fitted.add(Fraction(k4, q * (q - 1) * s))
    if len(fitted) != 1:
        raise StructuralFailure(f"no single normalization fits {calibration}: {fitted}")
    return fitted.pop()


@dataclass(frozen=True)
class CharSumResult:
    q: int
    raw_sum: int
    k4_value: int
    normalization: Fraction

    @property
    def matches_stated_constant(self) -> bool:
        return self.normalization == STATED_NORMALIZATION


def k4_char_sum(field: GF, normalization: Fraction | None = None) -> CharSumResult:
    c = fit_normalization() if normalization is None else Fraction(normalization)
    s = char_sum(field)
    k4 = c * field.q * (field.q - 1) * s
    if k4.denominator != 1:
        raise StructuralFailure(f"q={field.q}: normalised sum {k4} is not an integer")
    return CharSumResult(field.q, s, int(k4), c)


# -- edge distribution bound ---------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    q: int
    size: int
    edges: int
    center: Fraction
    lhs_squared: Fraction  # 16 q (|E(U)| - C(|U|,2)/2)^2
    rhs_squared: int  # (|U| (q - |U|))^2

    @property
    def holds(self) -> bool:
        return self.lhs_squared <= self.rhs_squared

    @property
    def deviation(self) -> float:
        return float(abs(self.edges - self.center))

    @property
    def bound(self) -> float:
        """|U|(q-|U|) / (4 sqrt q) as a float, for display."""
        return (self.rhs_squared / (16 * self.q)) ** 0.5


def thomason_check(g: Graph, u) -> BoundReport:
    """Check | |E(G[U])| - C(|U|,2)/2 | <= |U|(q-|U|) / (4 sqrt q) exactly."""
    if g.kind is not GraphKind.PALEY:
        raise UnsupportedParametersError("the edge-distribution bound is checked for Paley graphs")
    u = np.unique(np.asarray(list(u), dtype=np.int64))
    n = len(u)
    e = int(g.adjacency[np.ix_(u, u)].sum()) // 2 if n else 0
    center = Fraction(comb(n, 2), 2)
    lhs = 16 * g.q * (e - center) ** 2
    rhs = (n * (g.q - n)) ** 2
    report = BoundReport(g.q, n, e, center, lhs, rhs)
    if not report.holds:
        raise StructuralFailure(f"bound violated for |U|={n}: {e} edges", witness=tuple(u))
    return report


# -- k4 interval ----------------------------------------------------------------

def _sqrt_bounds(q: int, digits: int = 30) -> tuple[Fraction, Fraction]:
    scale = 10**digits
    lo = isqrt(q * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


@dataclass(frozen=True)
class BoundInterval:
    """Bounds on k4 implied by the bound on edges inside a common neighbourhood.

    ``lower``/``upper`` are rational outer approximations of the exact
    endpoints; :meth:`contains` tests membership in the exact interval.
    """

    q: int
    lower: Fraction
    upper: Fraction

    def contains(self, k4: int) -> bool:
        q = self.q
        # m = 24 k4 / (q (q-1)) edges per common neighbourhood
        m = Fraction(24 * k4, q * (q - 1))
        center = Fraction((q - 5) * (q - 9), 64)
        return (m - center) ** 2 * 64**2 * q <= ((q - 5) * (3 * q + 5)) ** 2

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


def k4_interval(q: int) -> BoundInterval:
    pr = prime_power(q)
    if pr is None:
        raise UnsupportedParametersError(f"{q} is not a prime power")
    check_paley_parameters(*pr)
    scale = Fraction(q * (q - 1), 24)
    center = Fraction((q - 5) * (q - 9), 64)
    sqrt_lo, _ = _sqrt_bounds(q)
    radius = Fraction((q - 5) * (3 * q + 5), 64) / sqrt_lo
    return BoundInterval(q, scale * (center - radius), scale * (center + radius))


def asymptotic_ratio(q: int, k4: int) -> Fraction:
    """1536 k4 / q^4, which tends to 1."""
    return Fraction(1536 * k4, q**4)
