"""Arithmetic in GF(p^m) backed by precomputed lookup tables.

Elements are integers in ``[0, q)``.  The base-p digits of an element, least
significant first, are the coefficients of its residue polynomial in the basis
``1, x, ..., x^(m-1)``.  Index 0 is zero and index 1 is one.

All tables are read-only numpy arrays, so vectorised code can index them
directly, e.g. ``F.add[a, b]`` for arrays ``a`` and ``b``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_FIELD_ORDER = 1024


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``b`` over GF(p), coefficient lists low degree first."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    r = [c % p for c in a[:db]]
    while r and r[-1] == 0:
        r.pop()
    return r


def is_irreducible(poly: list[int] | tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = list(poly)
    m = len(poly) - 1
    if m < 1 or poly[-1] % p != 1:
        raise FieldError("expected a monic polynomial of degree >= 1")
    if m == 1:
        return True
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m, compared low degree first."""
    for low in itertools.product(range(p), repeat=m):
        poly = low + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(p^m).  Build with :func:`field_make`."""

    p: int
    m: int
    reduction_poly: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.m}")
        if len(self.reduction_poly) != self.m + 1 or self.reduction_poly[-1] != 1:
            raise FieldError("reduction polynomial must be monic of degree m")
        if self.m > 1 and not is_irreducible(self.reduction_poly, self.p):
            raise FieldError(f"{self.reduction_poly} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p ** self.m

    def __repr__(self):
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- element encoding -------------------------------------------------

    def to_poly(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p ** i) % self.p for i in range(self.m))

    def from_poly(self, coeffs) -> int:
        if len(coeffs) > self.m:
            coeffs = _poly_mod(list(coeffs), list(self.reduction_poly), self.p)
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    # -- tables -----------------------------------------------------------

    @cached_property
    def _digits(self) -> np.ndarray:
        idx = np.arange(self.q)
        return np.stack([(idx // self.p ** i) % self.p for i in range(self.m)], axis=1)

    def _undigit(self, digits: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.m)
        return digits @ weights

    @cached_property
    def add(self) -> np.ndarray:
        if self.m == 1:
            idx = np.arange(self.q)
            t = (idx[:, None] + idx[None, :]) % self.p
        else:
            d = self._digits
            t = self._undigit((d[:, None, :] + d[None, :, :]) % self.p)
        return _frozen(t)

    @cached_property
    def neg(self) -> np.ndarray:
        if self.m == 1:
            t = (-np.arange(self.q)) % self.p
        else:
            t = self._undigit((-self._digits) % self.p)
        return _frozen(t)

    @cached_property
    def sub(self) -> np.ndarray:
        return _frozen(self.add[:, self.neg])

    @cached_property
    def mul(self) -> np.ndarray:
        q, p, m = self.q, self.p, self.m
        idx = np.arange(q)
        if m == 1:
            return _frozen((idx[:, None] * idx[None, :]) % p)
        # shifted[j] holds the digits of a * x^j for every a
        red = np.array(self.reduction_poly[:m])
        shifted = [self._digits]
        for _ in range(1, m):
            prev = shifted[-1]
            top = prev[:, m - 1]
            nxt = np.zeros_like(prev)
            nxt[:, 1:] = prev[:, :-1]
            nxt = (nxt - top[:, None] * red[None, :]) % p
            shifted.append(nxt)
        shifted = np.stack(shifted)  # (m, q, m)
        bdig = self._digits  # (q, m)
        prod = np.einsum("jad,bj->abd", shifted, bdig) % p
        return _frozen(self._undigit(prod))

    @cached_property
    def inv(self) -> np.ndarray:
        """Inverse table; entry 0 is -1 and must never be used (see :meth:`inverse`)."""
        rows, cols = np.nonzero(self.mul == 1)
        t = np.full(self.q, -1, dtype=np.int64)
        t[rows] = cols
        return _frozen(t)

    @cached_property
    def primitive_element(self) -> int:
        """Smallest element of multiplicative order q - 1."""
        for g in range(1, self.q):
            if self.order(g) == self.q - 1:
                return g
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    # -- scalar operations ------------------------------------------------

    def _check(self, *elems):
        for a in elems:
            if not 0 <= a < self.q:
                raise FieldError(f"{a} is not an element of {self!r}")

    def plus(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.mul[a, b])

    def negate(self, a: int) -> int:
        self._check(a)
        return int(self.neg[a])

    def inverse(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return int(self.inv[a])

    def power(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a, e = self.inverse(a), -e
        r = 1
        while e:
            if e & 1:
                r = int(self.mul[r, a])
            a = int(self.mul[a, a])
            e >>= 1
        return r

    def order(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = int(self.mul[x, a])
            n += 1
        return n


def _frozen(t: np.ndarray) -> np.ndarray:
    t = np.ascontiguousarray(t, dtype=np.int64)
    t.setflags(write=False)
    return t


@functools.lru_cache(maxsize=None)
def field_make(p: int, m: int = 1, max_order: int = MAX_FIELD_ORDER) -> FieldSpec:
    """Return GF(p^m) reduced by the smallest monic irreducible of degree m.

    Calls are cached, so equal arguments return the same object and the lookup
    tables are built once.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p ** m > max_order:
        raise FieldError(f"field order {p}^{m} exceeds the size guard {max_order}")
    return FieldSpec(p, m, smallest_irreducible(p, m))


def field_of_order(q: int, max_order: int = MAX_FIELD_ORDER) -> FieldSpec:
    """GF(q) for a prime power q."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return field_make(p, m, max_order)


def mult_subgroup(F: FieldSpec, e: int) -> list[int]:
    """The order-e subgroup of GF(q)^*, as powers of g^((q-1)/e) starting from 1."""
    if e < 1 or (F.q - 1) % e:
        raise FieldError(f"e={e} does not divide q-1={F.q - 1}")
    step = F.power(F.primitive_element, (F.q - 1) // e)
    out = [1]
    for _ in range(e - 1):
        out.append(int(F.mul[out[-1], step]))
    return out
