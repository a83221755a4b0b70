import json
from pathlib import Path

import pytest

from ebfcodes.constructions import MocsParams, ZccsParams, build

DATA = Path(__file__).parent / "data"

EXAMPLE2_H = {
    (1, 1): 1, (2, 1): 2, (3, 1): 2,
    (1, 2): 3, (2, 2): 1, (3, 2): 0,
    (1, 3): 2, (2, 3): 1, (3, 3): 3,
}

EXAMPLE2_CONFIG = {
    "theorem": "zccs_thm3", "q": 4, "m": 3, "v": 1, "d": 1, "partition": [[2, 1]],
    "coeffs": {"a_quad": {"1,1": 1}, "b": 1, "h0": 1,
               "h_power": {f"{s},{l}": c for (s, l), c in EXAMPLE2_H.items()}},
}

EXAMPLE1_CONFIG = {
    "theorem": "mocs_thm1", "q": 3, "m": 5, "v": 1, "d": 2, "d_prime": 1,
    "partition": [[1, 2], [3, 4]], "u": 3, "length_digits": [1],
    "coeffs": {
        "a_quad": {"1,1": 1, "2,1": 1},
        "b_cross": {f"{a},{b},1": 1 for a in (1, 2) for b in (1, 2)},
        "c_power": {f"{s},{l}": 1 for s in range(1, 6) for l in (1, 2)},
        "c0": 1, "c": 1,
    },
}


def example2_params():
    return ZccsParams(q=4, m=3, v=1, partition=[[2, 1]], a_quad={(1, 1): 1},
                      h_power=EXAMPLE2_H, h0=1, b=1)


def example1_params():
    return MocsParams(
        q=3, m=5, v=1, d_prime=1, partition=[[1, 2], [3, 4]], u=3,
        a_quad={(1, 1): 1, (2, 1): 1},
        b_cross={(a, b, 1): 1 for a in (1, 2) for b in (1, 2)},
        c_power={(s, l): 1 for s in range(1, 6) for l in (1, 2)},
        c0=1, c=1, length_digits=(1,),
    )


@pytest.fixture(scope="session")
def example2():
    return build(example2_params())


@pytest.fixture(scope="session")
def example1():
    return build(example1_params())


@pytest.fixture(scope="session")
def printed_example2():
    return json.loads((DATA / "example2_printed.json").read_text())


# one PASS/FAIL line per acceptance criterion, filled by test_acceptance
_CRITERIA: dict = {}


@pytest.fixture
def criterion(request):
    def record(number, ok, detail=""):
        prev = _CRITERIA.get(number)
        if prev is not None:
            ok = ok and prev[0]
            detail = "; ".join(x for x in (prev[1], detail) if x)
        _CRITERIA[number] = (ok, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        ok, detail = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
