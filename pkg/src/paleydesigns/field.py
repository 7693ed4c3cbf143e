"""Arithmetic in GF(p^r) over a polynomial basis.

Elements are polynomials of degree < r over GF(p), reduced modulo a monic
irreducible polynomial of degree r.  Every element has a canonical index
``sum(c_i * p**i)`` which is used as the vertex label of the graphs built on
the field.  The modulus and the primitive root are chosen deterministically
(lexicographically / canonically smallest), so every run labels vertices
identically.

Besides scalar :class:`FieldElement` arithmetic, :class:`GF` exposes numpy
helpers operating on whole arrays of canonical indices (digit-wise
subtraction, multiplication through discrete-log tables, character tables).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import FieldDomainError, InvalidSpecError, ResourceLimitError

DEFAULT_MAX_Q = int(os.environ.get("PALEYDESIGNS_MAX_Q", 2**20))


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, r)`` with ``q == p**r`` and p prime, or None."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p = fs[0]
    r = 0
    while q > 1:
        q //= p
        r += 1
    return p, r


# -- polynomials over GF(p), coefficient lists low -> high -------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, f, p):
    a = _trim(a)
    f = _trim(f)
    inv_lead = pow(f[-1], -1, p)
    while len(a) >= len(f):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(f)
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        a = _trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, f, p)


def _poly_powmod(a, e, f, p):
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Irreducibility of a monic polynomial (coefficients low -> high) over GF(p).

    A degree-r polynomial f is irreducible iff gcd(f, x^(p^d) - x) = 1 for
    every d <= r/2; for r <= 3 this reduces to having no root.
    """
    f = _trim(modulus)
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    if f[0] == 0:
        return False
    h = [0, 1]
    for _ in range(r // 2):
        h = _poly_powmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(f, diff, p)) > 1:
            return False
    return True


def find_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of degree r.

    Candidates ``(c_0, ..., c_{r-1})`` are scanned in ascending lexicographic
    order; the result is the full coefficient tuple ``(c_0, ..., c_{r-1}, 1)``.
    """
    if not is_prime(p):
        raise InvalidSpecError(f"{p} is not prime")
    if r < 1:
        raise InvalidSpecError(f"extension degree must be >= 1, got {r}")
    for low in itertools.product(range(p), repeat=r):
        poly = (*low, 1)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class GF:
    """The finite field GF(p^r) = GF(p)[x] / (modulus).

    >>> F = GF(3, 2)
    >>> F.modulus
    (1, 0, 1)
    >>> (F([1, 1]) * F([2, 1])).index
    1
    """

    def __init__(self, p: int, r: int = 1, modulus=None, *, max_q: int | None = None):
        if not is_prime(p):
            raise InvalidSpecError(f"{p} is not prime")
        if r < 1:
            raise InvalidSpecError(f"extension degree must be >= 1, got {r}")
        q = p**r
        cap = DEFAULT_MAX_Q if max_q is None else max_q
        if q > cap:
            raise ResourceLimitError(f"q = {q} exceeds the field size cap {cap}")
        if modulus is None:
            modulus = find_irreducible(p, r)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != r + 1 or modulus[-1] != 1:
                raise InvalidSpecError("modulus must be monic of degree r")
            if not is_irreducible(modulus, p):
                raise InvalidSpecError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.r = r
        self.q = q
        self.modulus = tuple(modulus)
        self._weights = np.array([p**i for i in range(r)], dtype=np.int64)

    def __repr__(self):
        return f"GF({self.p}**{self.r})" if self.r > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __len__(self):
        return self.q

    # -- element construction -------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise InvalidSpecError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if self.r == 1:
                return FieldElement(self, (value % self.p,))
            if not 0 <= value < self.q:
                raise ValueError(f"canonical index {value} outside [0, {self.q})")
            return self.from_index(value)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.r:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs = coeffs + [0] * (self.r - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_index(self, index: int) -> FieldElement:
        coeffs = []
        for _ in range(self.r):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.r)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.r - 1))

    def elements(self):
        """All elements in canonical-index order."""
        return [self.from_index(i) for i in range(self.q)]

    # -- coefficient-tuple arithmetic ----------------------------------------

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def _mul(self, a, b):
        if self.r == 1:
            return (a[0] * b[0] % self.p,)
        prod = _poly_mulmod(_trim(a), _trim(b), self.modulus, self.p)
        return tuple(prod) + (0,) * (self.r - len(prod))

    def _pow(self, a, e):
        if self.r == 1:
            return (pow(a[0], e, self.p),)
        result = self.one.coeffs
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- characters and roots -------------------------------------------------

    def chi(self, a) -> int:
        """Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0."""
        a = self(a)
        if self.p == 2:
            raise InvalidSpecError("quadratic character needs odd characteristic")
        if a.is_zero():
            return 0
        value = self._pow(a.coeffs, (self.q - 1) // 2)
        if value == self.one.coeffs:
            return 1
        if value == self._sub(self.zero.coeffs, self.one.coeffs):
            return -1
        raise AssertionError(f"Euler criterion gave {value}")

    def order(self, a) -> int:
        """Multiplicative order of a nonzero element."""
        a = self(a)
        if a.is_zero():
            raise FieldDomainError("zero has no multiplicative order")
        n = self.q - 1
        for ell in prime_factors(self.q - 1):
            while n % ell == 0 and self._pow(a.coeffs, n // ell) == self.one.coeffs:
                n //= ell
        return n

    def is_primitive(self, a) -> bool:
        a = self(a)
        if a.is_zero():
            return False
        one = self.one.coeffs
        return all(
            self._pow(a.coeffs, (self.q - 1) // ell) != one
            for ell in prime_factors(self.q - 1)
        )

    @cached_property
    def primitive_root(self) -> FieldElement:
        """Smallest element (by canonical index) of order q - 1."""
        for i in range(1, self.q):
            if self.is_primitive(i):
                return self.from_index(i)
        raise AssertionError("unreachable: the multiplicative group is cyclic")

    # -- whole-field tables (numpy, indexed by canonical index) ---------------

    def exp_table(self, root=None) -> np.ndarray:
        """``exp[j]`` = canonical index of root**j for j in [0, q-1)."""
        return self._tables(root)[0]

    def log_table(self, root=None) -> np.ndarray:
        """``log[i]`` = discrete log of element i to base root; -1 at zero."""
        return self._tables(root)[1]

    def power_class_table(self, root=None) -> np.ndarray:
        """Discrete log mod 4 for each canonical index; -1 at zero."""
        log = self.log_table(root)
        out = np.where(log >= 0, log % 4, -1)
        out.setflags(write=False)
        return out

    def _tables(self, root):
        root = self.primitive_root if root is None else self(root)
        cache = self.__dict__.setdefault("_table_cache", {})
        key = root.coeffs
        if key not in cache:
            if not self.is_primitive(root):
                raise InvalidSpecError(f"{root} is not a primitive root")
            n = self.q - 1
            exp = np.empty(n, dtype=np.int64)
            z = self.one.coeffs
            w = root.coeffs
            weights = [self.p**i for i in range(self.r)]
            for j in range(n):
                exp[j] = sum(c * wt for c, wt in zip(z, weights))
                z = self._mul(z, w)
            log = np.full(self.q, -1, dtype=np.int64)
            log[exp] = np.arange(n)
            exp.setflags(write=False)
            log.setflags(write=False)
            cache[key] = (exp, log)
        return cache[key]

    @cached_property
    def chi_table(self) -> np.ndarray:
        """Quadratic character of every canonical index as an int8 array."""
        if self.r == 1:
            e = (self.q - 1) // 2
            vals = np.array([pow(i, e, self.p) for i in range(self.q)], dtype=np.int64)
            out = np.where(vals == 1, 1, np.where(vals == 0, 0, -1)).astype(np.int8)
        else:
            log = self.log_table()
            out = np.where(log < 0, 0, np.where(log % 2 == 0, 1, -1)).astype(np.int8)
        out.setflags(write=False)
        return out

    def digits(self, idx) -> np.ndarray:
        """Base-p digits (coefficients) of canonical indices; trailing axis r."""
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self._weights) % self.p

    def from_digits(self, digits) -> np.ndarray:
        return np.asarray(digits, dtype=np.int64) @ self._weights

    def sub_indices(self, a, b) -> np.ndarray:
        """Canonical index of (a - b), broadcasting over index arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.r == 1:
            return (a - b) % self.p
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for w in self._weights.tolist():
            out += (((a // w) % self.p - (b // w) % self.p) % self.p) * w
        return out

    def add_indices(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.r == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for w in self._weights.tolist():
            out += (((a // w) % self.p + (b // w) % self.p) % self.p) * w
        return out

    def mul_indices(self, a, b) -> np.ndarray:
        """Canonical index of a * b via the discrete-log tables."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        exp, log = self._tables(None)
        la, lb = log[a], log[b]
        prod = exp[(la + lb) % (self.q - 1)]
        return np.where((la < 0) | (lb < 0), 0, prod)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`GF`, stored as r coefficients (x^0 first)."""

    field: GF
    coeffs: tuple

    @property
    def index(self) -> int:
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __int__(self):
        return self.index

    def __index__(self):
        return self.index

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InvalidSpecError("operands belong to different fields")
            return other.coeffs
        if isinstance(other, (int, np.integer)):
            return self.field(int(other) % self.field.p).coeffs
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._sub(self.coeffs, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._sub(b, self.coeffs))

    def __neg__(self):
        return FieldElement(self.field, self.field._sub(self.field.zero.coeffs, self.coeffs))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field._mul(self.coeffs, b))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise FieldDomainError("zero has no multiplicative inverse")
        return FieldElement(self.field, self.field._pow(self.coeffs, self.field.q - 2))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(self.field, b).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field, self.field._pow(self.coeffs, e))

    def chi(self) -> int:
        return self.field.chi(self)

    def __repr__(self):
        if self.field.r == 1:
            return f"{self.coeffs[0]}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(f"{c}" if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(reversed(terms)) or "0"
