import json

import numpy as np
import pytest

from ebfcodes.constructions import ValidationError
from ebfcodes.fileio import (
    FileFormatError,
    family_from_dict,
    family_to_json,
    generate,
    params_from_config,
    profile_to_csv,
    read_family,
    write_family,
)
from ebfcodes.correlation import profile

from conftest import EXAMPLE1_CONFIG, EXAMPLE2_CONFIG, example2_params


def test_config_matches_python_params():
    assert params_from_config(EXAMPLE2_CONFIG) == example2_params()


def test_generate_examples():
    fam = generate(EXAMPLE2_CONFIG)
    assert fam.shape == (16, 4, 64)
    assert fam.data[3, 0, :4].tolist() == [1, 2, 1, 2]
    assert fam.provenance == EXAMPLE2_CONFIG
    assert generate(EXAMPLE1_CONFIG).shape == (3, 27, 108)


def test_round_trip(tmp_path):
    fam = generate(EXAMPLE2_CONFIG)
    path = tmp_path / "f.json"
    write_family(fam, path)
    back = read_family(path)
    assert np.array_equal(back.data, fam.data)
    assert (back.kind, back.claimed_z, back.provenance) == (fam.kind, fam.claimed_z, fam.provenance)
    assert family_to_json(back) == path.read_text()


def test_output_is_deterministic_and_line_per_sequence():
    a = family_to_json(generate(EXAMPLE2_CONFIG))
    assert a == family_to_json(generate(json.loads(json.dumps(EXAMPLE2_CONFIG))))
    rows = [ln for ln in a.splitlines() if ln.startswith("      [")]
    assert len(rows) == 16 * 4
    json.loads(a)


def test_config_errors_are_collected():
    cfg = dict(EXAMPLE2_CONFIG, extra=1, d=2)
    cfg["coeffs"] = dict(cfg["coeffs"], b=2, zz=1)
    with pytest.raises(ValidationError) as exc:
        params_from_config(cfg)
    msgs = exc.value.violations
    assert any("unknown key 'extra'" in m for m in msgs)
    assert any("unknown coefficient 'zz'" in m for m in msgs)
    assert any("does not match" in m for m in msgs)


def test_config_condition_errors():
    cfg = dict(EXAMPLE2_CONFIG)
    cfg["coeffs"] = dict(cfg["coeffs"], b=2)
    with pytest.raises(ValidationError) as exc:
        params_from_config(cfg)
    assert any("gcd(b, q) != 1" in m for m in exc.value.violations)
    with pytest.raises(ValidationError):
        params_from_config({"theorem": "nope"})
    with pytest.raises(ValidationError, match="missing"):
        params_from_config({"theorem": "ccc_thm2", "q": 2})


def test_bad_family_files():
    good = json.loads(family_to_json(generate(EXAMPLE2_CONFIG)))
    with pytest.raises(FileFormatError):
        family_from_dict(dict(good, M=15))
    with pytest.raises(FileFormatError):
        family_from_dict({k: v for k, v in good.items() if k != "sets"})
    bad = json.loads(json.dumps(good))
    bad["sets"][0][0][0] = 4
    with pytest.raises(FileFormatError):
        family_from_dict(bad)
    with pytest.raises(FileFormatError):
        family_from_dict(dict(good, kind_claimed="nope"))


def test_profile_csv_symmetric_and_exact(example2):
    text = profile_to_csv(profile(example2, 3, 3))
    rows = [ln.split(",") for ln in text.splitlines()[1:]]
    mags = {int(t): m for t, m in rows}
    assert text.startswith("tau,magnitude\n")
    assert len(mags) == 127 and mags[0] == "256"
    assert all(mags[t] == mags[-t] for t in range(64))
