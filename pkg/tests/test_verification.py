import numpy as np
import pytest

from ebfcodes.constructions import CccParams, GcsParams, build, build_ccc, build_gcs
from ebfcodes.correlation import SequenceFamily, SequenceSet
from ebfcodes.verification import check_bounds, classify, verify_claim, verify_gcs, verify_mocs, verify_zccs


def float_zcz(data, q):
    """Independent float oracle: ZCZ width from complex correlations."""
    w = np.exp(2j * np.pi * np.asarray(data) / q)
    M, N, L = w.shape
    width = L
    for i in range(M):
        for j in range(M):
            r = sum(np.correlate(w[j, n], w[i, n], mode="full") for n in range(N))
            # np.correlate(b, a)[k] = sum a[t] conj(b[t + k - (L-1)]) with the order above
            for t in range(-(L - 1), L):
                if i == j and t == 0:
                    continue
                if abs(r[t + L - 1]) > 1e-6:
                    width = min(width, abs(t))
    return width


def test_golay_pair():
    rep = verify_gcs(SequenceSet(2, [[0, 0, 0, 1], [0, 0, 1, 0]]))
    assert rep.confirmed and rep.kind_confirmed == "GCS"


def test_lemma3_output_confirmed():
    assert verify_gcs(build_gcs(GcsParams(2, 3, 1, 1, (1, 2, 3)))).confirmed


def test_all_zero_sequence_rejected_at_shift_one():
    rep = verify_gcs(SequenceSet(3, [[0, 0, 0, 0]]))
    assert not rep.confirmed
    assert rep.first_violation.tau == -3 or rep.measured_Z == 1
    assert {abs(v.tau) for v in rep.violations} == {1, 2, 3}


def test_example1_confirmed(example1):
    rep = verify_mocs(example1)
    assert rep.confirmed and rep.kind_confirmed == "MOCS"
    assert rep.set_size_bound_ok and rep.measured_Z == 108


def test_ccc_confirmed():
    rep = verify_mocs(build_ccc(CccParams(2, 3, [[1, 2], [3]])), claim="CCC")
    assert rep.confirmed and rep.kind_confirmed == "CCC"


def test_two_identical_gcs_rejected():
    g = [[0, 0, 0, 1], [0, 0, 1, 0]]
    rep = verify_mocs(SequenceFamily(2, [g, g]))
    assert not rep.confirmed
    assert rep.measured_Z == 0
    assert any(v.tau == 0 and v.i != v.j and v.magnitude == pytest.approx(8) for v in rep.violations)


def test_example2_zccs(example2):
    rep = verify_zccs(example2, 16)
    assert rep.confirmed and rep.optimal and rep.diagonal_ok
    assert (rep.M, rep.N, rep.L, rep.measured_Z) == (16, 4, 64, 16)
    rep = verify_zccs(example2, 17)
    assert not rep.confirmed and rep.violation_count > 0
    assert all(abs(v.tau) == 16 for v in rep.violations)


def test_mocs_as_zccs_with_full_zone(example1):
    assert verify_zccs(example1, example1.L).confirmed
    with pytest.raises(ValueError):
        verify_zccs(example1, 109)


def test_claim_defaults_to_family(example2):
    assert verify_claim(example2).kind_claimed == "ZCCS"
    assert verify_claim(example2, "mocs").confirmed is False


def test_check_bounds_examples():
    b = check_bounds(16, 4, 64, 16)
    assert b.zcz_bound_ok and b.optimal
    b = check_bounds(3, 27, 108, 108)
    assert b.set_size_bound_ok and b.zcz_bound_ok and not b.optimal
    assert not check_bounds(5, 1, 8, 2).zcz_bound_ok
    with pytest.raises(ValueError):
        check_bounds(1, 1, 4, 5)


def test_classify():
    assert classify(1, 2, 4, 4) == "GCS"
    assert classify(4, 4, 8, 8) == "CCC"
    assert classify(2, 8, 12, 12) == "MOCS"
    assert classify(16, 4, 64, 16) == "ZCCS"
    assert classify(2, 2, 4, 0) is None


def test_exact_agrees_with_float_oracle():
    rng = np.random.default_rng(2024)
    cases = [build(CccParams(2, 3, [[1, 2], [3]])), build(CccParams(3, 3, [[1], [2, 3]]))]
    for fam in cases:
        for trial in range(6):
            data = fam.data.copy()
            if trial:
                p, n, t = (rng.integers(s) for s in data.shape)
                data[p, n, t] = (data[p, n, t] + rng.integers(1, fam.q)) % fam.q
            corrupted = SequenceFamily(fam.q, data)
            assert verify_mocs(corrupted).measured_Z == float_zcz(data, fam.q)


def test_report_serialises(example2):
    d = verify_zccs(example2, 17).to_dict()
    assert d["version"] and isinstance(d["violations"][0], list)
    assert d["first_violation"] == d["violations"][0]


def test_threads_do_not_change_verdict(example2, monkeypatch):
    monkeypatch.setenv("CCS_THREADS", "1")
    a = verify_zccs(example2, 17).to_dict()
    monkeypatch.setenv("CCS_THREADS", "4")
    b = verify_zccs(example2, 17).to_dict()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b
