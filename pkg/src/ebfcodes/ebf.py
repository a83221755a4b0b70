"""Extended Boolean functions over Z_q and their sequences.

An extended Boolean function (EBF) maps ``Z_r^m -> Z_q``.  Normally the
variable radix ``r`` equals ``q``; generalized Boolean functions (binary
variables, values in Z_q for even q) use ``radix=2``.  The sequence of an
EBF lists ``f(i_1, ..., i_m)`` for ``i = sum(i_k * r**(k-1))``, i.e. the
digit tuple is little-endian: ``digits[0]`` is the least significant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "RadixIndex",
    "Monomial",
    "ExtendedBooleanFunction",
    "QarySequence",
    "to_digits",
    "from_digits",
    "digit_matrix",
    "evaluate",
    "expand",
    "add_linear",
]


class RadixIndex(tuple):
    """Little-endian digit tuple of an integer in radix ``q``."""

    def __new__(cls, digits: Iterable[int], q: int):
        obj = super().__new__(cls, tuple(int(x) for x in digits))
        obj.q = q
        for x in obj:
            if not 0 <= x < q:
                raise ValueError(f"digit {x} outside [0, {q})")
        return obj

    def to_int(self) -> int:
        return from_digits(self, self.q)


def to_digits(i: int, q: int, m: int) -> RadixIndex:
    """Return the ``m`` radix-``q`` digits of ``i``, least significant first.

    >>> tuple(to_digits(5, 3, 2))
    (2, 1)
    """
    if q < 2:
        raise ValueError(f"radix must be >= 2, got {q}")
    if not 0 <= i < q**m:
        raise ValueError(f"index {i} outside [0, {q}**{m})")
    digits = []
    for _ in range(m):
        i, r = divmod(i, q)
        digits.append(r)
    return RadixIndex(digits, q)


def from_digits(digits: Sequence[int], q: int) -> int:
    value = 0
    for d in reversed(digits):
        if not 0 <= d < q:
            raise ValueError(f"digit {d} outside [0, {q})")
        value = value * q + d
    return value


def digit_matrix(length: int, q: int, m: int) -> np.ndarray:
    """Digits of ``0..length-1`` as an ``(length, m)`` int64 array.

    Column ``k`` holds the digit multiplying ``q**k`` (variable ``x_{k+1}``).
    """
    if not 0 <= length <= q**m:
        raise ValueError(f"length {length} outside [0, {q}**{m}]")
    idx = np.arange(length, dtype=np.int64)
    out = np.empty((length, m), dtype=np.int64)
    for k in range(m):
        out[:, k] = idx % q
        idx //= q
    return out


@dataclass(frozen=True)
class Monomial:
    """``coefficient * prod(x_s ** e_s)``; ``factors`` is sorted ``(s, e)`` pairs."""

    factors: tuple[tuple[int, int], ...]
    coefficient: int = 1

    def __post_init__(self):
        if isinstance(self.factors, Mapping):
            items = tuple(sorted((int(s), int(e)) for s, e in self.factors.items()))
        else:
            items = tuple(sorted((int(s), int(e)) for s, e in self.factors))
        seen = [s for s, _ in items]
        if len(set(seen)) != len(seen):
            raise ValueError(f"repeated variable in monomial {items}")
        for s, e in items:
            if s < 1 or e < 1:
                raise ValueError(f"bad factor x_{s}^{e}")
        object.__setattr__(self, "factors", items)

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.factors)


def _mono(coef: int, *factors: tuple[int, int]) -> Monomial:
    return Monomial(tuple(factors), coef)


@dataclass(frozen=True)
class ExtendedBooleanFunction:
    """Polynomial ``Z_radix^m -> Z_q``: a sum of monomials plus a constant."""

    q: int
    m: int
    terms: tuple[Monomial, ...] = ()
    constant: int = 0
    radix: int | None = None

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"modulus must be >= 2, got {self.q}")
        if self.m < 1:
            raise ValueError(f"need at least one variable, got m={self.m}")
        radix = self.q if self.radix is None else self.radix
        if radix < 2:
            raise ValueError(f"radix must be >= 2, got {radix}")
        object.__setattr__(self, "radix", radix)
        terms = []
        for t in self.terms:
            coef = t.coefficient % self.q
            if coef == 0:
                continue
            for s, _ in t.factors:
                if not 1 <= s <= self.m:
                    raise ValueError(f"variable x_{s} outside x_1..x_{self.m}")
            terms.append(Monomial(t.factors, coef))
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "constant", self.constant % self.q)

    @property
    def size(self) -> int:
        """Full sequence length ``radix**m``."""
        return self.radix**self.m

    def __add__(self, other: "ExtendedBooleanFunction") -> "ExtendedBooleanFunction":
        if (self.q, self.m, self.radix) != (other.q, other.m, other.radix):
            raise ValueError("cannot add functions over different domains")
        return ExtendedBooleanFunction(
            self.q, self.m, self.terms + other.terms,
            self.constant + other.constant, self.radix,
        )

    def __call__(self, *point: int) -> int:
        return evaluate(self, point)


@dataclass(frozen=True)
class QarySequence:
    """A finite sequence over Z_q."""

    q: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64).reshape(-1)
        if vals.size and (vals.min() < 0 or vals.max() >= self.q):
            raise ValueError(f"sequence symbols must lie in [0, {self.q})")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, item):
        return self.values[item]

    def __eq__(self, other):
        if isinstance(other, QarySequence):
            return self.q == other.q and np.array_equal(self.values, other.values)
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.values.tobytes()))

    def tolist(self) -> list[int]:
        return self.values.tolist()


def _power_mod(base: np.ndarray | int, exp: int, q: int):
    # repeated products reduced mod q: keeps int64 safe for any q <= 2**31
    out = base % q
    for _ in range(exp - 1):
        out = (out * base) % q
    return out


def evaluate(f: ExtendedBooleanFunction, point: Sequence[int]) -> int:
    """Value of ``f`` at a digit tuple ``(x_1, ..., x_m)``."""
    if len(point) != f.m:
        raise ValueError(f"expected {f.m} coordinates, got {len(point)}")
    for x in point:
        if not 0 <= x < f.radix:
            raise ValueError(f"coordinate {x} outside [0, {f.radix})")
    total = f.constant
    for t in f.terms:
        prod = t.coefficient
        for s, e in t.factors:
            prod = prod * _power_mod(int(point[s - 1]), e, f.q) % f.q
        total += prod
    return total % f.q


def _evaluate_digits(f: ExtendedBooleanFunction, digits: np.ndarray) -> np.ndarray:
    out = np.full(digits.shape[0], f.constant, dtype=np.int64)
    powers: dict[tuple[int, int], np.ndarray] = {}
    for t in f.terms:
        prod = np.full(digits.shape[0], t.coefficient, dtype=np.int64)
        for s, e in t.factors:
            key = (s, e)
            if key not in powers:
                powers[key] = _power_mod(digits[:, s - 1], e, f.q)
            prod = (prod * powers[key]) % f.q
        out += prod
    return out % f.q


def expand(f: ExtendedBooleanFunction, length: int | None = None) -> QarySequence:
    """Sequence ``(f_0, ..., f_{L-1})``: the first ``length`` entries of ``f``.

    Only indices below ``length`` are evaluated.
    """
    if length is None:
        length = f.size
    if not 1 <= length <= f.size:
        raise ValueError(f"length {length} outside [1, {f.size}]")
    digits = digit_matrix(length, f.radix, f.m)
    return QarySequence(f.q, _evaluate_digits(f, digits))


def add_linear(
    f: ExtendedBooleanFunction,
    offsets: Mapping[int, int],
    constant_delta: int = 0,
) -> ExtendedBooleanFunction:
    """Return ``f + sum(offsets[s] * x_s) + constant_delta``."""
    extra = tuple(_mono(c, (s, 1)) for s, c in sorted(offsets.items()))
    for s in offsets:
        if not 1 <= s <= f.m:
            raise ValueError(f"variable x_{s} outside x_1..x_{f.m}")
    return ExtendedBooleanFunction(
        f.q, f.m, f.terms + extra, f.constant + constant_delta, f.radix
    )
