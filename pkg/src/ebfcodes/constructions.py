"""Direct constructions of complementary code families from EBFs.

Four generators are provided:

* :func:`build_mocs` -- ``(q^d', q^(v+d), L)`` mutually orthogonal
  complementary sets with flexible length ``L``;
* :func:`build_ccc`  -- ``(q^d, q^d, q^m)`` complete complementary codes;
* :func:`build_zccs` -- optimal ``(q^(v+d), q^d, q^m, q^(m-v))`` Z-complementary
  code sets;
* :func:`build_gcs`  -- ``2^(k+1)`` Golay complementary sets of truncated
  length over even q (generalized Boolean functions, binary variables).

Each family member is ``f^p_n = f + (linear form in the digits of n) +
(linear form in the digits of p)``.  Sets are ordered by ``p`` ascending and
sequences within a set by ``n`` ascending; digit tuples are little-endian.
Parameter checks collect *every* violated condition before raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, Sequence, Union

import numpy as np

from .correlation import SequenceFamily, SequenceSet
from .cyclotomic import MAX_MODULUS
from .ebf import ExtendedBooleanFunction, Monomial, add_linear, digit_matrix, expand

__all__ = [
    "ValidationError",
    "MocsParams",
    "CccParams",
    "ZccsParams",
    "GcsParams",
    "validate",
    "check",
    "mocs_length",
    "gcs_length",
    "base_function",
    "family_functions",
    "build_mocs",
    "build_ccc",
    "build_zccs",
    "build_gcs",
    "build",
]


class ValidationError(ValueError):
    """Raised when construction parameters violate one or more conditions."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("invalid parameters:\n  - " + "\n  - ".join(self.violations))


Partition = tuple[tuple[int, ...], ...]


def _partition(blocks) -> Partition:
    return tuple(tuple(int(x) for x in b) for b in blocks)


@dataclass(frozen=True)
class MocsParams:
    """Parameters of the flexible-length MOCS construction.

    ``partition[a-1][b-1]`` is ``pi_a(b)``; the blocks partition
    ``{1..m-v}``.  ``length_digits`` is ``(a_1, ..., a_{v-1}, a_m)`` so that
    ``L = a_m q^(m-1) + sum(a_k q^(m-v+k-1)) + q^u``.
    """

    q: int
    m: int
    v: int
    d_prime: int
    partition: Partition
    u: int
    a_quad: Mapping[tuple[int, int], int] = field(default_factory=dict)
    b_cross: Mapping[tuple[int, int, int], int] = field(default_factory=dict)
    c_power: Mapping[tuple[int, int], int] = field(default_factory=dict)
    c0: int = 0
    c: int = 1
    length_digits: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "partition", _partition(self.partition))
        if self.length_digits is None:
            object.__setattr__(self, "length_digits", (0,) * max(self.v - 1, 0) + (1,))
        else:
            object.__setattr__(self, "length_digits", tuple(int(a) for a in self.length_digits))

    @property
    def d(self) -> int:
        return len(self.partition)


@dataclass(frozen=True)
class CccParams:
    """Parameters of the CCC construction; blocks partition ``{1..m}``."""

    q: int
    m: int
    partition: Partition
    a_quad: Mapping[tuple[int, int], int] = field(default_factory=dict)
    h_power: Mapping[tuple[int, int], int] = field(default_factory=dict)
    h0: int = 0

    def __post_init__(self):
        object.__setattr__(self, "partition", _partition(self.partition))

    @property
    def d(self) -> int:
        return len(self.partition)


@dataclass(frozen=True)
class ZccsParams:
    """Parameters of the optimal ZCCS construction; blocks partition ``{1..m-v}``."""

    q: int
    m: int
    v: int
    partition: Partition
    a_quad: Mapping[tuple[int, int], int] = field(default_factory=dict)
    h_power: Mapping[tuple[int, int], int] = field(default_factory=dict)
    h0: int = 0
    b: int = 1

    def __post_init__(self):
        object.__setattr__(self, "partition", _partition(self.partition))

    @property
    def d(self) -> int:
        return len(self.partition)


@dataclass(frozen=True)
class GcsParams:
    """Parameters of the even-q truncated GCS construction.

    ``pi`` lists ``(pi(1), ..., pi(m))``; ``length_bits`` is
    ``(a_1, ..., a_{k-1})`` with each bit in {0, 1}.
    """

    q: int
    m: int
    k: int
    v: int
    pi: tuple[int, ...]
    c_cross: Mapping[tuple[int, int], int] = field(default_factory=dict)
    c_lin: Mapping[int, int] = field(default_factory=dict)
    c0: int = 0
    length_bits: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "pi", tuple(int(x) for x in self.pi))
        if self.length_bits is None:
            object.__setattr__(self, "length_bits", (0,) * max(self.k - 1, 0))
        else:
            object.__setattr__(self, "length_bits", tuple(int(a) for a in self.length_bits))


Params = Union[MocsParams, CccParams, ZccsParams, GcsParams]


# ---------------------------------------------------------------- validation


def _check_modulus(q: int, errs: list[str]) -> bool:
    if not isinstance(q, int) or not 2 <= q <= MAX_MODULUS:
        errs.append(f"q must be an integer in [2, {MAX_MODULUS}] (q={q})")
        return False
    return True


def _check_partition(blocks: Partition, n: int, errs: list[str]) -> bool:
    flat = [x for b in blocks for x in b]
    ok = True
    if any(len(b) == 0 for b in blocks):
        errs.append("partition blocks must be nonempty")
        ok = False
    if len(flat) != len(set(flat)):
        errs.append("partition blocks must be disjoint (and each pi_a injective)")
        ok = False
    if set(flat) != set(range(1, n + 1)):
        errs.append(f"partition must cover exactly {{1..{n}}} (got {sorted(set(flat))})")
        ok = False
    return ok


def _check_unit_coeffs(name, coeffs, positions, q, errs):
    for key, val in coeffs.items():
        if key not in positions:
            errs.append(f"{name}{key} is not a coefficient position of this construction")
        elif gcd(val % q, q) != 1:
            errs.append(f"gcd({name}{key}, q) != 1 ({name}{key}={val}, q={q})")


def _check_keys(name, coeffs, positions, errs):
    for key in coeffs:
        if key not in positions:
            errs.append(f"{name}{key} is not a coefficient position of this construction")


def _quad_positions(blocks: Partition) -> set[tuple[int, int]]:
    return {(a, b) for a, blk in enumerate(blocks, 1) for b in range(1, len(blk))}


def _power_positions(m: int, q: int) -> set[tuple[int, int]]:
    return {(s, l) for s in range(1, m + 1) for l in range(1, q)}


def _validate_mocs(p: MocsParams) -> list[str]:
    errs: list[str] = []
    q_ok = _check_modulus(p.q, errs)
    if not p.m >= 1:
        errs.append(f"m must be positive (m={p.m})")
    if not 1 <= p.v < p.m:
        errs.append(f"0<v<m required (v={p.v}, m={p.m})")
    if not 0 < p.d_prime < p.d < p.m:
        errs.append(f"0<d'<d<m required (d'={p.d_prime}, d={p.d}, m={p.m})")
    if not _check_partition(p.partition, p.m - p.v, errs):
        return errs
    sizes = [len(b) for b in p.partition]
    if 0 < p.d_prime < p.d:
        lo = sum(sizes[: p.d_prime])
        hi = lo + sizes[p.d_prime]
        if not lo < p.u < hi:
            errs.append(f"u out of range: need {lo} < u < {hi} (u={p.u})")
        else:
            u_prime = p.u - lo
            prefix = [x for b in p.partition[: p.d_prime] for x in b]
            prefix += list(p.partition[p.d_prime][:u_prime])
            if set(prefix) != set(range(1, p.u + 1)):
                errs.append(
                    f"prefix-set condition failed: first {p.u} partition entries "
                    f"(u'={u_prime}) are {sorted(prefix)}, expected {{1..{p.u}}}"
                )
    if not q_ok:
        return errs
    _check_unit_coeffs("a", p.a_quad, _quad_positions(p.partition), p.q, errs)
    b_pos = {(a, b, k) for a, blk in enumerate(p.partition, 1)
             for b in range(1, len(blk) + 1) for k in range(1, p.v + 1)}
    _check_keys("b", p.b_cross, b_pos, errs)
    _check_keys("c", p.c_power, _power_positions(p.m, p.q), errs)
    if gcd(p.c % p.q, p.q) != 1:
        errs.append(f"gcd(c, q) != 1 (c={p.c}, q={p.q})")
    if len(p.length_digits) != p.v:
        errs.append(f"length_digits must hold a_1..a_(v-1) and a_m ({p.v} values, got {len(p.length_digits)})")
    else:
        if any(not 0 <= a < p.q for a in p.length_digits):
            errs.append(f"length digits must lie in Z_q (got {list(p.length_digits)})")
        elif p.length_digits[-1] == 0:
            errs.append("a_m must be nonzero")
    return errs


def _validate_ccc(p: CccParams) -> list[str]:
    errs: list[str] = []
    q_ok = _check_modulus(p.q, errs)
    if not 2 <= p.d < p.m:
        errs.append(f"2<=d<m required (d={p.d}, m={p.m})")
    part_ok = _check_partition(p.partition, p.m, errs)
    if q_ok and part_ok:
        _check_unit_coeffs("a", p.a_quad, _quad_positions(p.partition), p.q, errs)
        _check_keys("h", p.h_power, _power_positions(p.m, p.q), errs)
    return errs


def _validate_zccs(p: ZccsParams) -> list[str]:
    errs: list[str] = []
    q_ok = _check_modulus(p.q, errs)
    if not 0 <= p.v < p.m:
        errs.append(f"0<=v<m required (v={p.v}, m={p.m})")
    if not 1 <= p.d <= p.m - p.v:
        errs.append(f"1<=d<=m-v required (d={p.d}, m-v={p.m - p.v})")
    part_ok = _check_partition(p.partition, p.m - p.v, errs)
    if q_ok:
        if part_ok:
            _check_unit_coeffs("a", p.a_quad, _quad_positions(p.partition), p.q, errs)
        _check_keys("h", p.h_power, _power_positions(p.m, p.q), errs)
        if gcd(p.b % p.q, p.q) != 1:
            errs.append(f"gcd(b, q) != 1 (b={p.b}, q={p.q})")
    return errs


def _validate_gcs(p: GcsParams) -> list[str]:
    errs: list[str] = []
    q_ok = _check_modulus(p.q, errs)
    if q_ok and p.q % 2:
        errs.append(f"q must be even (q={p.q})")
    m, k, v, pi = p.m, p.k, p.v, p.pi
    if not 1 <= k <= m:
        errs.append(f"1<=k<=m required (k={k}, m={m})")
        return errs
    if not 0 <= v <= m - k:
        errs.append(f"0<=v<=m-k required (v={v}, m-k={m - k})")
    if sorted(pi) != list(range(1, m + 1)):
        errs.append(f"pi must be a permutation of 1..{m} (got {list(pi)})")
        return errs

    def P(i):
        return pi[i - 1]

    tail = [P(m - k + a) for a in range(1, k + 1)]
    if any(x >= y for x, y in zip(tail, tail[1:])) or tail[-1] != m:
        errs.append(f"condition (1) failed: need pi(m-k+1)<...<pi(m)=m (got {tail})")
    if v > 0 and {P(i) for i in range(1, v + 1)} != set(range(1, v + 1)):
        errs.append(f"condition (2) failed: {{pi(1..{v})}} must equal {{1..{v}}}")
    for a in range(1, k):
        for t in range(2, m - k + 1):
            if P(t) < P(m - k + a) and not P(t - 1) < P(m - k + a):
                errs.append(f"condition (3) failed at alpha={a}, t={t}")
    if q_ok:
        cross_pos = {(a, s) for a in range(1, k + 1) for s in range(1, m - k + 1)}
        _check_keys("c", p.c_cross, cross_pos, errs)
        _check_keys("c", {(s,): 0 for s in p.c_lin}, {(s,) for s in range(1, m + 1)}, errs)
    if len(p.length_bits) != k - 1:
        errs.append(f"length_bits must hold a_1..a_(k-1) ({k - 1} values, got {len(p.length_bits)})")
    elif any(a not in (0, 1) for a in p.length_bits):
        errs.append(f"length bits must be 0 or 1 (got {list(p.length_bits)})")
    elif not errs and gcs_length(p) > 2**m:
        errs.append(f"length {gcs_length(p)} exceeds 2^m = {2**m}")
    return errs


_VALIDATORS = {
    MocsParams: _validate_mocs,
    CccParams: _validate_ccc,
    ZccsParams: _validate_zccs,
    GcsParams: _validate_gcs,
}


def validate(params: Params) -> list[str]:
    """Every violated condition of ``params``; an empty list means valid."""
    try:
        fn = _VALIDATORS[type(params)]
    except KeyError:
        raise TypeError(f"unsupported parameter type {type(params).__name__}") from None
    return fn(params)


def check(params: Params) -> None:
    errs = validate(params)
    if errs:
        raise ValidationError(errs)


# ------------------------------------------------------------------ lengths


def mocs_length(params: MocsParams) -> int:
    """``a_m q^(m-1) + sum_{k<v} a_k q^(m-v+k-1) + q^u``."""
    check(params)
    return _mocs_length(params)


def _mocs_length(p: MocsParams) -> int:
    *a, a_m = p.length_digits
    middle = sum(ak * p.q ** (p.m - p.v + k - 1) for k, ak in enumerate(a, 1))
    return a_m * p.q ** (p.m - 1) + middle + p.q**p.u


def gcs_length(params: GcsParams) -> int:
    """``2^(m-1) + sum a_alpha 2^(pi(m-k+alpha)-1) + 2^v``."""
    p = params
    bits = sum(a * 2 ** (p.pi[p.m - p.k + al - 1] - 1) for al, a in enumerate(p.length_bits, 1))
    return 2 ** (p.m - 1) + bits + 2**p.v


def family_shape(params: Params) -> tuple[int, int, int]:
    """``(M, N, L)`` without building anything."""
    check(params)
    q = params.q
    if isinstance(params, MocsParams):
        return q**params.d_prime, q ** (params.v + params.d), _mocs_length(params)
    if isinstance(params, CccParams):
        return q**params.d, q**params.d, q**params.m
    if isinstance(params, ZccsParams):
        return q ** (params.v + params.d), q**params.d, q**params.m
    return 1, 2 ** (params.k + 1), gcs_length(params)


def claimed_zcz(params: Params) -> int:
    _, _, L = family_shape(params)
    if isinstance(params, ZccsParams):
        return params.q ** (params.m - params.v)
    return L


def claimed_kind(params: Params) -> str:
    return {MocsParams: "MOCS", CccParams: "CCC", ZccsParams: "ZCCS", GcsParams: "GCS"}[type(params)]


# ------------------------------------------------------------ the functions


def _quad(coef: int, a: int, b: int) -> Monomial:
    return Monomial(((a, 1), (b, 1)), coef)


def _chain_terms(blocks: Partition, a_quad) -> list[Monomial]:
    terms = []
    for a, blk in enumerate(blocks, 1):
        for b in range(1, len(blk)):
            terms.append(_quad(a_quad.get((a, b), 1), blk[b - 1], blk[b]))
    return terms


def _power_terms(coeffs) -> list[Monomial]:
    return [Monomial(((s, l),), c) for (s, l), c in sorted(coeffs.items())]


def base_function(params: Params) -> ExtendedBooleanFunction:
    """The shared quadratic EBF ``f`` that every family member offsets."""
    check(params)
    q, m = params.q, params.m
    if isinstance(params, MocsParams):
        terms = _chain_terms(params.partition, params.a_quad)
        for (a, b, k), coef in sorted(params.b_cross.items()):
            terms.append(_quad(coef, params.partition[a - 1][b - 1], m - params.v + k))
        terms += _power_terms(params.c_power)
        return ExtendedBooleanFunction(q, m, tuple(terms), params.c0)
    if isinstance(params, (CccParams, ZccsParams)):
        terms = _chain_terms(params.partition, params.a_quad) + _power_terms(params.h_power)
        return ExtendedBooleanFunction(q, m, tuple(terms), params.h0)
    pi, k = params.pi, params.k
    half = q // 2
    terms = [_quad(half, pi[s - 1], pi[s]) for s in range(1, m - k)]
    for (a, s), coef in sorted(params.c_cross.items()):
        terms.append(_quad(coef, pi[m - k + a - 1], pi[s - 1]))
    terms += [Monomial(((s, 1),), c) for s, c in sorted(params.c_lin.items())]
    return ExtendedBooleanFunction(q, m, tuple(terms), params.c0, radix=2)


def _offset_plan(params: Params):
    """Linear forms attached to the digits of n and of p.

    Returns ``(n_vars, n_mult, n_radix, p_vars, p_mult, p_radix)``: digit ``t``
    of ``n`` adds ``n_mult * n_t * x_{n_vars[t]}``, likewise for ``p``.
    """
    q, m = params.q, params.m
    if isinstance(params, GcsParams):
        pi, k = params.pi, params.k
        n_vars = [pi[m - k + a - 1] for a in range(1, k + 1)] + [pi[0]]
        return n_vars, q // 2, 2, [], 1, 2
    firsts = [blk[0] for blk in params.partition]
    lasts = [blk[-1] for blk in params.partition]
    if isinstance(params, MocsParams):
        tail = [m - params.v + k for k in range(1, params.v + 1)]
        return firsts + tail, 1, q, lasts[: params.d_prime], params.c % q, q
    if isinstance(params, CccParams):
        return firsts, 1, q, lasts, 1, q
    tail = [m - params.v + k for k in range(1, params.v + 1)]
    return firsts, 1, q, lasts + tail, params.b % q, q


def family_functions(params: Params) -> list[list[ExtendedBooleanFunction]]:
    """The EBFs ``f^p_n`` as an ``M x N`` grid (``p`` rows, ``n`` columns)."""
    f = base_function(params)
    n_vars, n_mult, n_radix, p_vars, p_mult, p_radix = _offset_plan(params)
    grid = []
    for p in range(p_radix ** len(p_vars)):
        p_off: dict[int, int] = {}
        for t, var in enumerate(p_vars):
            p_off[var] = p_off.get(var, 0) + p_mult * (p // p_radix**t % p_radix)
        row = []
        for n in range(n_radix ** len(n_vars)):
            off = dict(p_off)
            for t, var in enumerate(n_vars):
                off[var] = off.get(var, 0) + n_mult * (n // n_radix**t % n_radix)
            row.append(add_linear(f, off))
        grid.append(row)
    return grid


def _grid_offsets(vars_: list[int], radix: int, mult: int, x: np.ndarray, q: int) -> np.ndarray:
    """Offset sequences for every index value: shape ``(radix**len(vars_), L)``."""
    if not vars_:
        return np.zeros((1, x.shape[0]), dtype=np.int64)
    digits = digit_matrix(radix ** len(vars_), radix, len(vars_))
    cols = x[:, np.asarray(vars_) - 1]
    return (digits * mult) @ cols.T % q


def _build_array(params: Params) -> np.ndarray:
    _, _, L = family_shape(params)
    f = base_function(params)
    n_vars, n_mult, n_radix, p_vars, p_mult, p_radix = _offset_plan(params)
    x = digit_matrix(L, f.radix, f.m)
    base = expand(f, L).values
    n_off = _grid_offsets(n_vars, n_radix, n_mult, x, params.q)
    p_off = _grid_offsets(p_vars, p_radix, p_mult, x, params.q)
    return (base[None, None, :] + p_off[:, None, :] + n_off[None, :, :]) % params.q


def _family(params: Params) -> SequenceFamily:
    data = _build_array(params)
    return SequenceFamily(params.q, data, kind=claimed_kind(params), claimed_z=claimed_zcz(params))


def build_mocs(params: MocsParams) -> SequenceFamily:
    """``q^d'`` sets of ``q^(v+d)`` sequences of length :func:`mocs_length`."""
    if not isinstance(params, MocsParams):
        raise TypeError("build_mocs expects MocsParams")
    return _family(params)


def build_ccc(params: CccParams) -> SequenceFamily:
    """``q^d`` sets of ``q^d`` sequences of length ``q^m``."""
    if not isinstance(params, CccParams):
        raise TypeError("build_ccc expects CccParams")
    return _family(params)


def build_zccs(params: ZccsParams) -> SequenceFamily:
    """``q^(v+d)`` sets of ``q^d`` sequences of length ``q^m``, ZCZ ``q^(m-v)``."""
    if not isinstance(params, ZccsParams):
        raise TypeError("build_zccs expects ZccsParams")
    return _family(params)


def build_gcs(params: GcsParams) -> SequenceSet:
    """``2^(k+1)`` sequences over Z_q (q even) of length :func:`gcs_length`."""
    if not isinstance(params, GcsParams):
        raise TypeError("build_gcs expects GcsParams")
    return SequenceSet(params.q, _build_array(params)[0])


def build(params: Params) -> SequenceFamily:
    """Dispatch on the parameter type; a GCS comes back as a one-set family."""
    return _family(params)
