"""Exact brute-force verification of complementary-set claims.

All verdicts come from exact zero tests in Z[xi]; floating point appears
only in the reported violation magnitudes.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from . import __version__
from .correlation import SequenceFamily, SequenceSet, as_family, first_violation, pair_scan

__all__ = [
    "Violation",
    "VerificationReport",
    "BoundReport",
    "check_bounds",
    "verify_gcs",
    "verify_mocs",
    "verify_zccs",
    "verify_claim",
    "classify",
]

MAX_LISTED = 100


@dataclass(frozen=True)
class Violation:
    """A nonzero set correlation at sets ``(i, j)`` and shift ``tau``."""

    i: int
    j: int
    tau: int
    magnitude: float


@dataclass(frozen=True)
class BoundReport:
    M: int
    N: int
    L: int
    Z: int
    set_size_bound_ok: bool | None
    zcz_bound_ok: bool
    optimal: bool


def check_bounds(M: int, N: int, L: int, Z: int) -> BoundReport:
    """Set-size bounds ``M <= N`` (when ``Z = L``) and ``M <= N * floor(L / Z)``.

    >>> check_bounds(16, 4, 64, 16).optimal
    True
    """
    for name, val in (("M", M), ("N", N), ("L", L), ("Z", Z)):
        if val < 1:
            raise ValueError(f"{name} must be positive (got {val})")
    if Z > L:
        raise ValueError(f"Z={Z} exceeds L={L}")
    limit = N * (L // Z)
    return BoundReport(
        M, N, L, Z,
        set_size_bound_ok=(M <= N) if Z == L else None,
        zcz_bound_ok=M <= limit,
        optimal=M == limit,
    )


@dataclass
class VerificationReport:
    kind_claimed: str | None
    kind_confirmed: str | None
    confirmed: bool
    M: int
    N: int
    L: int
    q: int
    claimed_Z: int | None
    measured_Z: int
    set_size_bound_ok: bool | None
    zcz_bound_ok: bool | None
    optimal: bool | None
    diagonal_ok: bool
    violation_count: int
    first_violation: Violation | None
    violations: list[Violation] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["violations"] = [[v.i, v.j, v.tau, v.magnitude] for v in self.violations]
        fv = self.first_violation
        out["first_violation"] = None if fv is None else [fv.i, fv.j, fv.tau, fv.magnitude]
        out["version"] = __version__
        return out


def classify(M: int, N: int, L: int, Z: int) -> str | None:
    """Strongest kind a family with measured ZCZ width ``Z`` qualifies as."""
    if Z == L:
        if M == 1:
            return "GCS"
        return "CCC" if M == N else "MOCS"
    return "ZCCS" if Z >= 1 else None


class _Scan:
    """Single pass over all set pairs; keeps what every verdict needs."""

    def __init__(self, family: SequenceFamily, zone: int, cross: bool, workers: int | None):
        self.family = family
        L, q = family.L, family.q
        self.measured_Z = L
        self.violations: list[Violation] = []
        self.count = 0
        self.diagonal_ok = True
        roots = np.exp(2j * np.pi * np.arange(q) / q)
        centre = L - 1
        taus = np.arange(-(L - 1), L)
        for i, j, counts, zero in pair_scan(family, workers):
            is_cross = i != j
            if is_cross and not cross:
                continue
            hit = first_violation(zero, L, cross=is_cross)
            if hit is not None:
                self.measured_Z = min(self.measured_Z, hit)
            if not is_cross:
                expect = np.zeros(q, dtype=np.int64)
                expect[0] = family.N * L
                if not np.array_equal(counts[centre], expect):
                    self.diagonal_ok = False
            bad = ~zero & (np.abs(taus) < zone)
            if not is_cross:
                bad[centre] = False
            idx = np.flatnonzero(bad)
            # (i, j, tau) order: tau ascending within each pair
            self.count += idx.size
            room = MAX_LISTED - len(self.violations)
            for k in idx[: max(room, 0)]:
                mag = float(abs(counts[k].astype(np.float64) @ roots))
                self.violations.append(Violation(i, j, int(taus[k]), mag))


def _report(family, kind_claimed, kind_confirmed, confirmed, claimed_Z, scan, measured_Z, started):
    M, N, L = family.shape
    bounds = check_bounds(M, N, L, measured_Z) if measured_Z >= 1 else None
    optimal = None
    if kind_claimed == "ZCCS" and claimed_Z is not None:
        optimal = confirmed and check_bounds(M, N, L, claimed_Z).optimal
    return VerificationReport(
        kind_claimed=kind_claimed,
        kind_confirmed=kind_confirmed,
        confirmed=confirmed,
        M=M, N=N, L=L, q=family.q,
        claimed_Z=claimed_Z,
        measured_Z=measured_Z,
        set_size_bound_ok=None if bounds is None else bounds.set_size_bound_ok,
        zcz_bound_ok=None if bounds is None else bounds.zcz_bound_ok,
        optimal=optimal,
        diagonal_ok=scan.diagonal_ok,
        violation_count=scan.count,
        first_violation=scan.violations[0] if scan.violations else None,
        violations=scan.violations,
        wall_time=time.perf_counter() - started,
    )


def verify_gcs(gcs: SequenceSet | SequenceFamily, workers: int | None = None) -> VerificationReport:
    """Check that every set's auto-correlation sum vanishes at all nonzero shifts.

    A family argument is checked set by set (cross pairs are ignored).
    """
    started = time.perf_counter()
    family = as_family(gcs)
    if family.N < 1:
        raise ValueError("empty sequence set")
    scan = _Scan(family, family.L, cross=False, workers=workers)
    ok = scan.count == 0 and scan.diagonal_ok
    kind = "GCS" if ok else None
    # auto pairs only, so this is the width of the auto condition alone
    return _report(family, "GCS", kind, ok, family.L, scan, scan.measured_Z, started)


def verify_mocs(family: SequenceFamily, workers: int | None = None, claim: str = "MOCS") -> VerificationReport:
    """Every set is a GCS and distinct sets are orthogonal at every shift.

    With ``claim="CCC"`` the family must additionally have ``M == N``.
    """
    started = time.perf_counter()
    if family.M < 1:
        raise ValueError("family has no sets")
    scan = _Scan(family, family.L, cross=True, workers=workers)
    is_mocs = scan.count == 0 and scan.diagonal_ok
    kind = classify(family.M, family.N, family.L, scan.measured_Z) if scan.diagonal_ok else None
    if claim == "CCC":
        ok = is_mocs and family.M == family.N
    elif claim == "MOCS":
        ok = is_mocs
    else:
        raise ValueError(f"verify_mocs cannot confirm claim {claim!r}")
    return _report(family, claim, kind, ok, family.L, scan, scan.measured_Z, started)


def verify_zccs(family: SequenceFamily, claimed_z: int, workers: int | None = None) -> VerificationReport:
    """Confirm a ZCZ of width at least ``claimed_z``.

    Auto sums must vanish for ``0 < |tau| < Z``, cross sums for ``|tau| < Z``,
    and every diagonal value at ``tau = 0`` must equal ``N * L`` exactly.
    """
    started = time.perf_counter()
    if not 1 <= claimed_z <= family.L:
        raise ValueError(f"claimed ZCZ width {claimed_z} outside [1, {family.L}]")
    scan = _Scan(family, claimed_z, cross=True, workers=workers)
    ok = scan.measured_Z >= claimed_z and scan.diagonal_ok
    kind = classify(family.M, family.N, family.L, scan.measured_Z) if scan.diagonal_ok else None
    return _report(family, "ZCCS", kind, ok, claimed_z, scan, scan.measured_Z, started)


def verify_claim(family: SequenceFamily, kind: str | None = None, z: int | None = None,
                 workers: int | None = None) -> VerificationReport:
    """Verify ``kind`` (default: the family's own claim) and return the report."""
    kind = (kind or family.kind or "MOCS").upper()
    if kind == "GCS":
        return verify_gcs(family, workers)
    if kind in ("MOCS", "CCC"):
        return verify_mocs(family, workers, claim=kind)
    if kind == "ZCCS":
        if z is None:
            z = family.claimed_z if family.claimed_z is not None else family.L
        return verify_zccs(family, z, workers)
    raise ValueError(f"unknown claim kind {kind!r}")
