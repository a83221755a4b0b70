"""Enumerate valid parameter tuples of the MOCS, CCC and ZCCS constructions.

Partitions are enumerated as ordered compositions with consecutive blocks
in index order, e.g. ``(2, 1)`` of ``{1, 2, 3}`` is ``[[1, 2], [3]]``.
Within-block orders are ascending unless ``all_orders`` is set; the
constructions hold for any bijection, so one representative suffices for
coverage.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .constructions import MocsParams, _mocs_length, validate

__all__ = ["compositions", "enumerate_parameters", "ENUMERABLE"]

ENUMERABLE = ("mocs_thm1", "ccc_thm2", "zccs_thm3")


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write ``n`` as ``parts`` positive integers."""
    if parts < 1 or n < parts:
        return
    for cuts in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _blocks(shape: tuple[int, ...]) -> list[list[int]]:
    out, start = [], 1
    for size in shape:
        out.append(list(range(start, start + size)))
        start += size
    return out


def _orderings(shape: tuple[int, ...], all_orders: bool):
    blocks = _blocks(shape)
    if not all_orders:
        yield blocks
        return
    for combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
        yield [list(b) for b in combo]


def _mocs_rows(q: int, max_length: int, all_orders: bool):
    m = 4
    while q ** (m - 1) < max_length:
        for v in range(1, m - 2):
            n = m - v
            for d in range(2, n + 1):
                for shape in compositions(n, d):
                    for dp in range(1, d):
                        lo = sum(shape[:dp])
                        for u in range(lo + 1, lo + shape[dp]):
                            for digits in itertools.product(range(q), repeat=v - 1):
                                for a_m in range(1, q):
                                    ld = digits + (a_m,)
                                    for part in _orderings(shape, all_orders):
                                        p = MocsParams(q, m, v, dp, part, u, length_digits=ld)
                                        if validate(p):
                                            continue
                                        L = _mocs_length(p)
                                        if L > max_length:
                                            continue
                                        yield {
                                            "theorem": "mocs_thm1",
                                            "m": m, "v": v, "d": d, "d_prime": dp, "u": u,
                                            "shape": list(shape), "a_digits": list(ld),
                                            "M": q**dp, "N": q ** (v + d), "L": L, "Z": L,
                                            "config": {
                                                "theorem": "mocs_thm1", "q": q, "m": m, "v": v,
                                                "d": d, "d_prime": dp, "u": u,
                                                "partition": part, "length_digits": list(ld),
                                            },
                                        }
        m += 1


def _zccs_rows(q: int, max_length: int, all_orders: bool, ccc: bool):
    m = 1
    while q**m <= max_length:
        for v in ([0] if ccc else range(0, m)):
            n = m - v
            for d in range(2 if ccc else 1, (m if ccc else n + 1)):
                for shape in compositions(n, d):
                    for part in _orderings(shape, all_orders):
                        if ccc:
                            cfg = {"theorem": "ccc_thm2", "q": q, "m": m, "d": d, "partition": part}
                            M = N = q**d
                        else:
                            cfg = {"theorem": "zccs_thm3", "q": q, "m": m, "v": v, "d": d, "partition": part}
                            M, N = q ** (v + d), q**d
                        yield {
                            "theorem": cfg["theorem"],
                            "m": m, "v": v, "d": d, "d_prime": None, "u": None,
                            "shape": list(shape), "a_digits": None,
                            "M": M, "N": N, "L": q**m, "Z": q ** (m - v),
                            "config": cfg,
                        }
        m += 1


def enumerate_parameters(q: int, theorem: str, max_length: int, all_orders: bool = False) -> list[dict]:
    """Every valid parameter tuple with family length at most ``max_length``."""
    if q < 2:
        raise ValueError(f"q must be >= 2 (got {q})")
    if max_length < 1:
        raise ValueError(f"max_length must be >= 1 (got {max_length})")
    if theorem == "mocs_thm1":
        return list(_mocs_rows(q, max_length, all_orders))
    if theorem == "ccc_thm2":
        return list(_zccs_rows(q, max_length, all_orders, ccc=True))
    if theorem == "zccs_thm3":
        return list(_zccs_rows(q, max_length, all_orders, ccc=False))
    raise ValueError(f"cannot enumerate {theorem!r}; choose from {', '.join(ENUMERABLE)}")
