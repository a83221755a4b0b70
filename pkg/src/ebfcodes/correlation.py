"""Aperiodic correlation of q-ary sequences, sets and families.

Every correlation value is a sum of q-th roots of unity and is kept exactly
as a count vector ``c`` with ``R = sum(c[k] * xi**k)``.  The batch engine
(:func:`correlation_counts`) computes the counts for every shift of a pair
of sequence sets with one ``bincount`` over the pairwise difference grid.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterator, Sequence

import numpy as np

from .cyclotomic import RootOfUnitySum, conjugate, zero_mask
from .ebf import QarySequence

__all__ = [
    "SequenceSet",
    "SequenceFamily",
    "CorrelationProfile",
    "accf",
    "aacf",
    "set_ccf",
    "correlation_counts",
    "profile",
    "measure_zcz",
    "pair_scan",
    "worker_count",
]

KINDS = ("GCS", "MOCS", "CCC", "ZCCS")

# cap on the size of one difference grid chunk (elements)
_CHUNK = 1 << 22


def _as_symbol_array(values, q: int, ndim: int) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array of symbols, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= q):
        raise ValueError(f"symbols must lie in [0, {q})")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SequenceSet:
    """``N`` sequences of common length ``L`` over Z_q, stored as an (N, L) array."""

    q: int
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        if isinstance(self.data, (list, tuple)) and self.data and isinstance(self.data[0], QarySequence):
            if any(s.q != self.q for s in self.data):
                raise ValueError("sequence modulus differs from set modulus")
            rows = [s.values for s in self.data]
            if len({len(r) for r in rows}) != 1:
                raise ValueError("sequences in a set must share one length")
            data = np.stack(rows)
        else:
            data = self.data
        object.__setattr__(self, "data", _as_symbol_array(data, self.q, 2))

    @property
    def N(self) -> int:
        return self.data.shape[0]

    @property
    def L(self) -> int:
        return self.data.shape[1]

    @property
    def sequences(self) -> list[QarySequence]:
        return [QarySequence(self.q, row) for row in self.data]

    def __len__(self) -> int:
        return self.N

    def __getitem__(self, n: int) -> QarySequence:
        return QarySequence(self.q, self.data[n])


@dataclass(frozen=True, eq=False)
class SequenceFamily:
    """``M`` sequence sets of shape (N, L), stored as an (M, N, L) array.

    ``kind`` and ``claimed_z`` record what the producer claims; they are
    never trusted by the verifier.
    """

    q: int
    data: np.ndarray = field(repr=False)
    kind: str | None = None
    claimed_z: int | None = None
    provenance: dict[str, Any] | None = field(default=None, repr=False)

    def __post_init__(self):
        data = self.data
        if isinstance(data, (list, tuple)) and data and isinstance(data[0], SequenceSet):
            if any(s.q != self.q for s in data):
                raise ValueError("set modulus differs from family modulus")
            if len({s.data.shape for s in data}) != 1:
                raise ValueError("all sets in a family must share N and L")
            data = np.stack([s.data for s in data])
        object.__setattr__(self, "data", _as_symbol_array(data, self.q, 3))
        if self.kind is not None and self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def M(self) -> int:
        return self.data.shape[0]

    @property
    def N(self) -> int:
        return self.data.shape[1]

    @property
    def L(self) -> int:
        return self.data.shape[2]

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.M, self.N, self.L

    @property
    def sets(self) -> list[SequenceSet]:
        return [SequenceSet(self.q, block) for block in self.data]

    def __getitem__(self, p: int) -> SequenceSet:
        return SequenceSet(self.q, self.data[p])


@dataclass(frozen=True, eq=False)
class CorrelationProfile:
    """Set correlation of one ordered pair over every shift ``-(L-1)..L-1``."""

    q: int
    shifts: np.ndarray
    counts: np.ndarray = field(repr=False)
    zero: np.ndarray = field(repr=False)
    magnitudes: np.ndarray = field(repr=False)

    @property
    def values(self) -> list[RootOfUnitySum]:
        return [RootOfUnitySum(self.q, tuple(row)) for row in self.counts.tolist()]

    def at(self, tau: int) -> RootOfUnitySum:
        L = (len(self.shifts) + 1) // 2
        return RootOfUnitySum(self.q, tuple(self.counts[tau + L - 1].tolist()))


def worker_count() -> int:
    """Thread cap from ``CCS_THREADS`` (0 or unset = one per CPU)."""
    raw = os.environ.get("CCS_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"CCS_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError("CCS_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def _check_pair(a: QarySequence, b: QarySequence, tau: int) -> int:
    if a.q != b.q:
        raise ValueError(f"modulus mismatch: {a.q} != {b.q}")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    L = len(a)
    if not -L < tau < L:
        raise ValueError(f"shift {tau} outside |tau| <= {L - 1}")
    return L


def accf(a: QarySequence, b: QarySequence, tau: int) -> RootOfUnitySum:
    """Aperiodic cross-correlation ``R_{a,b}(tau)``.

    For ``tau >= 0`` this is ``sum_i xi**(a_i - b_{i+tau})``; negative shifts
    use ``R_{a,b}(-t) = conj(R_{b,a}(t))``.
    """
    L = _check_pair(a, b, tau)
    if tau < 0:
        return conjugate(accf(b, a, -tau))
    diff = (a.values[: L - tau] - b.values[tau:]) % a.q
    return RootOfUnitySum(a.q, tuple(np.bincount(diff, minlength=a.q).tolist()))


def aacf(a: QarySequence, tau: int) -> RootOfUnitySum:
    return accf(a, a, tau)


def _check_sets(si: SequenceSet, sj: SequenceSet) -> None:
    if si.q != sj.q:
        raise ValueError(f"modulus mismatch: {si.q} != {sj.q}")
    if si.data.shape != sj.data.shape:
        raise ValueError(f"set shape mismatch: {si.data.shape} != {sj.data.shape}")


def set_ccf(si: SequenceSet, sj: SequenceSet, tau: int) -> RootOfUnitySum:
    """``sum_k R_{a_k^i, a_k^j}(tau)`` over the N sequence positions."""
    _check_sets(si, sj)
    L, q = si.L, si.q
    if not -L < tau < L:
        raise ValueError(f"shift {tau} outside |tau| <= {L - 1}")
    if tau < 0:
        return conjugate(set_ccf(sj, si, -tau))
    diff = (si.data[:, : L - tau] - sj.data[:, tau:]) % q
    return RootOfUnitySum(q, tuple(np.bincount(diff.ravel(), minlength=q).tolist()))


@lru_cache(maxsize=32)
def _shift_keys(L: int, q: int) -> np.ndarray:
    i = np.arange(L, dtype=np.int64)
    keys = (i[None, :] - i[:, None] + (L - 1)) * q
    keys.setflags(write=False)
    return keys


def correlation_counts(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """Exact set correlation counts for all shifts.

    ``a`` and ``b`` are (N, L) symbol arrays.  Returns an int64 array of shape
    (2L-1, q); row ``tau + L - 1`` holds the multiplicities of ``xi**k`` in
    ``sum_n R_{a_n, b_n}(tau)``.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape or a.ndim != 2:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    N, L = a.shape
    keys = _shift_keys(L, q)
    size = (2 * L - 1) * q
    total = np.zeros(size, dtype=np.int64)
    step = max(1, _CHUNK // max(1, L * L))
    for lo in range(0, N, step):
        # pair (i, j) of positions contributes xi^(a_i - b_j) at shift j - i
        diff = (a[lo : lo + step, :, None] - b[lo : lo + step, None, :]) % q
        total += np.bincount((diff + keys).ravel(), minlength=size)
    return total.reshape(2 * L - 1, q)


def _pair_result(family: SequenceFamily, i: int, j: int):
    counts = correlation_counts(family.data[i], family.data[j], family.q)
    return i, j, counts, zero_mask(counts, family.q)


def pair_scan(family: SequenceFamily, workers: int | None = None) -> Iterator[tuple[int, int, np.ndarray, np.ndarray]]:
    """Yield ``(i, j, counts, zero)`` for every pair ``i <= j`` in index order.

    The swapped pair follows by conjugate symmetry:
    ``R_{S_j,S_i}(tau) = conj(R_{S_i,S_j}(-tau))``.  Pairs may be evaluated
    on a thread pool; output order does not depend on scheduling.
    """
    pairs = [(i, j) for i in range(family.M) for j in range(i, family.M)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(pairs) < 2:
        for i, j in pairs:
            yield _pair_result(family, i, j)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(lambda ij: _pair_result(family, *ij), pairs)


def _magnitudes(counts: np.ndarray, q: int) -> np.ndarray:
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    return np.abs(counts.astype(np.float64) @ roots)


def profile(family: SequenceFamily, i: int, j: int) -> CorrelationProfile:
    """Full correlation profile of sets ``i`` and ``j``.

    Magnitudes of sums that vanish exactly are reported as exactly 0.
    """
    for idx in (i, j):
        if not 0 <= idx < family.M:
            raise IndexError(f"set index {idx} outside [0, {family.M})")
    counts = correlation_counts(family.data[i], family.data[j], family.q)
    zero = zero_mask(counts, family.q)
    mags = _magnitudes(counts, family.q)
    mags[zero] = 0.0
    L = family.L
    return CorrelationProfile(family.q, np.arange(-(L - 1), L), counts, zero, mags)


def first_violation(zero: np.ndarray, L: int, cross: bool) -> int | None:
    """Smallest ``|tau|`` with a nonzero value (``tau = 0`` counts only for cross pairs)."""
    centre = L - 1
    if cross and not zero[centre]:
        return 0
    bad = ~(zero[centre + 1 :] & zero[centre - 1 :: -1][: L - 1])
    hits = np.flatnonzero(bad)
    return int(hits[0]) + 1 if hits.size else None


def measure_zcz(family: SequenceFamily, workers: int | None = None) -> int:
    """Largest ZCZ width ``Z`` of the family, ``L`` if it is a full MOCS.

    Auto set-correlations must vanish for ``0 < |tau| < Z`` and cross
    set-correlations for ``|tau| < Z``; a nonzero cross value at ``tau = 0``
    gives 0.
    """
    if family.M < 1:
        raise ValueError("family has no sets")
    L = family.L
    width = L
    for i, j, _, zero in pair_scan(family, workers):
        hit = first_violation(zero, L, cross=i != j)
        if hit is not None:
            width = min(width, hit)
    return width


def as_family(obj: SequenceSet | SequenceFamily | Sequence[SequenceSet]) -> SequenceFamily:
    if isinstance(obj, SequenceFamily):
        return obj
    if isinstance(obj, SequenceSet):
        return SequenceFamily(obj.q, obj.data[None, :, :])
    sets = list(obj)
    return SequenceFamily(sets[0].q, sets)
