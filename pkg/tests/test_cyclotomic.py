import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ebfcodes.cyclotomic import (
    RootOfUnitySum,
    add,
    conjugate,
    cyclotomic_polynomial,
    is_zero,
    magnitude,
    unit,
    zero_mask,
)


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _naive_phi(q):
    # product of (x - w) over primitive roots, rounded: an independent oracle
    poly = np.array([1.0 + 0j])
    for k in range(1, q + 1):
        if math.gcd(k, q) == 1:
            poly = np.convolve(poly, [-np.exp(2j * np.pi * k / q), 1])
    return tuple(int(round(c.real)) for c in poly)


def test_unit_examples():
    assert unit(0, 4).coeffs == (1, 0, 0, 0)
    assert unit(5, 4).coeffs == (0, 1, 0, 0)
    assert unit(2, 2).coeffs == (1, 0)


def test_add_and_conjugate_examples():
    assert add(RootOfUnitySum(3, (1, 0, 0)), RootOfUnitySum(3, (0, 1, 0))).coeffs == (1, 1, 0)
    assert conjugate(RootOfUnitySum(4, (0, 1, 0, 0))).coeffs == (0, 0, 0, 1)
    assert conjugate(RootOfUnitySum(2, (5, 0))).coeffs == (5, 0)
    with pytest.raises(ValueError):
        add(unit(0, 3), unit(0, 4))


def test_cyclotomic_examples():
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


@pytest.mark.parametrize("q", range(2, 41))
def test_cyclotomic_matches_root_product(q):
    assert cyclotomic_polynomial(q) == _naive_phi(q)


@pytest.mark.parametrize("q", [12, 30, 35, 64])
def test_cyclotomic_divides_xq_minus_1(q):
    prod = [1]
    for d in range(1, q + 1):
        if q % d == 0:
            prod = _mul(prod, cyclotomic_polynomial(d))
    assert prod == [-1] + [0] * (q - 1) + [1]


def test_is_zero_examples():
    assert is_zero(RootOfUnitySum(3, (1, 1, 1)))
    assert is_zero(RootOfUnitySum(4, (1, 0, 1, 0)))
    assert not is_zero(RootOfUnitySum(4, (1, 1, 0, 0)))


def test_magnitude_examples():
    assert magnitude(RootOfUnitySum(5, (7, 0, 0, 0, 0))) == pytest.approx(7)
    assert magnitude(RootOfUnitySum(3, (1, 1, 1))) < 1e-12
    assert magnitude(RootOfUnitySum(4, (1, 1, 0, 0))) == pytest.approx(math.sqrt(2), abs=1e-9)


def test_modulus_range():
    with pytest.raises(ValueError):
        unit(0, 257)
    with pytest.raises(ValueError):
        RootOfUnitySum(3, (1, 2))


@st.composite
def sums(draw):
    q = draw(st.integers(2, 12))
    return RootOfUnitySum(q, tuple(draw(st.lists(st.integers(0, 4), min_size=q, max_size=q))))


@settings(max_examples=300)
@given(sums())
def test_is_zero_agrees_with_float(s):
    assert is_zero(s) == (magnitude(s) < 1e-9)


@given(st.integers(2, 12), st.data())
def test_vanishing_sums_of_divisor_cosets(q, data):
    # sum of all d-th roots of unity (d | q, d > 1) vanishes; adding it keeps the value
    d = data.draw(st.sampled_from([d for d in range(2, q + 1) if q % d == 0]))
    base = RootOfUnitySum(q, tuple(data.draw(st.lists(st.integers(0, 4), min_size=q, max_size=q))))
    coset = RootOfUnitySum.from_exponents(range(0, q, q // d), q)
    assert is_zero(coset)
    assert (base + coset).equals(base)


@settings(max_examples=100)
@given(st.integers(2, 16), st.data())
def test_zero_mask_matches_is_zero(q, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, 3), min_size=q, max_size=q), min_size=1, max_size=8))
    mask = zero_mask(np.array(rows), q)
    assert mask.tolist() == [is_zero(RootOfUnitySum(q, tuple(r))) for r in rows]


def test_conjugate_magnitude_invariant():
    s = RootOfUnitySum(5, (3, 0, 1, 2, 0))
    assert abs(s) == pytest.approx(abs(s.conjugate()))
    assert complex(s.conjugate()) == pytest.approx(complex(s).conjugate())
