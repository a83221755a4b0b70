"""Exact arithmetic in Z[xi], xi = exp(2*pi*i/q).

Values are integer coefficient vectors over the powers ``xi^0..xi^(q-1)``.
That representation is not unique, so zero-ness is decided by reducing the
polynomial modulo the cyclotomic polynomial Phi_q, which is the minimal
polynomial of xi.  Coefficients are Python ints and never overflow.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

MAX_MODULUS = 256

__all__ = [
    "MAX_MODULUS",
    "RootOfUnitySum",
    "unit",
    "add",
    "conjugate",
    "cyclotomic_polynomial",
    "reduce_mod_cyclotomic",
    "is_zero",
    "magnitude",
    "zero_mask",
]


def _check_modulus(q: int) -> None:
    if not 1 <= q <= MAX_MODULUS:
        raise ValueError(f"modulus {q} outside supported range [1, {MAX_MODULUS}]")


@dataclass(frozen=True)
class RootOfUnitySum:
    """``sum(coeffs[k] * xi**k)`` for a primitive q-th root of unity xi."""

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.q)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.q:
            raise ValueError(f"expected {self.q} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, q: int) -> "RootOfUnitySum":
        return cls(q, (0,) * q)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], q: int) -> "RootOfUnitySum":
        """Sum of ``xi**e`` over the given exponents."""
        counts = [0] * q
        for e in exponents:
            counts[e % q] += 1
        return cls(q, tuple(counts))

    def __add__(self, other: "RootOfUnitySum") -> "RootOfUnitySum":
        return add(self, other)

    def __neg__(self) -> "RootOfUnitySum":
        return RootOfUnitySum(self.q, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RootOfUnitySum") -> "RootOfUnitySum":
        return add(self, -other)

    def conjugate(self) -> "RootOfUnitySum":
        return conjugate(self)

    def is_zero(self) -> bool:
        return is_zero(self)

    def equals(self, other: "RootOfUnitySum") -> bool:
        """Value equality in Z[xi] (not coefficient equality)."""
        return is_zero(self - other)

    def __abs__(self) -> float:
        return magnitude(self)

    def __complex__(self) -> complex:
        return sum((c * cmath.exp(2j * cmath.pi * k / self.q) for k, c in enumerate(self.coeffs) if c), 0j)


def unit(k: int, q: int) -> RootOfUnitySum:
    """The atom ``xi**k``."""
    _check_modulus(q)
    coeffs = [0] * q
    coeffs[k % q] = 1
    return RootOfUnitySum(q, tuple(coeffs))


def add(a: RootOfUnitySum, b: RootOfUnitySum) -> RootOfUnitySum:
    if a.q != b.q:
        raise ValueError(f"modulus mismatch: {a.q} != {b.q}")
    return RootOfUnitySum(a.q, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def conjugate(a: RootOfUnitySum) -> RootOfUnitySum:
    q = a.q
    return RootOfUnitySum(q, tuple(a.coeffs[(q - k) % q] for k in range(q)))


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Integer long division by a monic polynomial (coefficients low -> high)."""
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) <= dd:
        return [0], rem
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                rem[i - dd + j] -= c * den[j]
    return quot, rem[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Coefficients of Phi_q, lowest degree first.

    Built from ``x^q - 1 = prod(Phi_d for d | q)`` by exact division.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    _check_modulus(q)
    if q == 1:
        return (-1, 1)
    num = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            if any(rem):
                raise ArithmeticError(f"inexact division computing Phi_{q}")
    return tuple(num)


def reduce_mod_cyclotomic(coeffs: Sequence[int], q: int) -> tuple[int, ...]:
    """Remainder of ``sum(coeffs[k] x^k)`` modulo Phi_q."""
    _, rem = _poly_divmod([int(c) for c in coeffs], cyclotomic_polynomial(q))
    return tuple(rem)


def is_zero(s: RootOfUnitySum) -> bool:
    """True iff the sum vanishes, decided exactly by divisibility by Phi_q."""
    return not any(reduce_mod_cyclotomic(s.coeffs, s.q))


def magnitude(s: RootOfUnitySum) -> float:
    """Floating-point ``|sum(coeffs[k] * xi**k)|``; for reporting only."""
    return abs(complex(s))


@lru_cache(maxsize=None)
def _reduction_matrix(q: int) -> np.ndarray:
    # row k holds x^k mod Phi_q, so counts @ matrix is the reduced form
    phi = cyclotomic_polynomial(q)
    deg = len(phi) - 1
    rows = []
    for k in range(q):
        rem = list(reduce_mod_cyclotomic([0] * k + [1], q))
        rows.append(rem + [0] * (deg - len(rem)))
    return np.array(rows, dtype=np.int64)


def zero_mask(counts: np.ndarray, q: int) -> np.ndarray:
    """Vectorised :func:`is_zero` over the last axis of an integer array.

    ``counts[..., k]`` is the multiplicity of ``xi**k``.  Runs in int64, so
    entries are bounded by ``2**62 / (q * max|x^k mod Phi_q|)``; correlation
    counts never exceed N*L, far below that.
    """
    _check_modulus(q)
    counts = np.asarray(counts, dtype=np.int64)
    if counts.shape[-1] != q:
        raise ValueError(f"last axis must have length {q}")
    mat = _reduction_matrix(q)
    limit = 2**62 // (q * max(1, int(np.abs(mat).max())))
    if counts.size and np.abs(counts).max() >= limit:
        raise OverflowError("coefficients too large for the batched zero test")
    reduced = counts @ mat
    return ~np.any(reduced != 0, axis=-1)
