"""Construction configs, family files, reports and profile CSVs.

Construction config (JSON)::

    {"theorem": "zccs_thm3", "q": 4, "m": 3, "v": 1, "d": 1,
     "partition": [[2, 1]],
     "coeffs": {"a_quad": {"1,1": 1}, "h_power": {"1,1": 1, ...}, "h0": 1, "b": 1}}

``partition`` lists each block in pi order, 1-based.  ``length_digits`` is
``[a_1, ..., a_(v-1), a_m]`` for ``mocs_thm1`` and ``[a_1, ..., a_(k-1)]``
for ``gcs_lemma3``.  Unknown keys are rejected.

Family file (JSON): ``q, L, M, N, kind_claimed, claimed_Z, provenance`` and
``sets``, an M x N x L array of symbols ordered by p then n.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .constructions import (
    CccParams,
    GcsParams,
    MocsParams,
    Params,
    ValidationError,
    ZccsParams,
    build,
    validate,
)
from .correlation import KINDS, CorrelationProfile, SequenceFamily

THEOREMS = ("mocs_thm1", "ccc_thm2", "zccs_thm3", "gcs_lemma3")

_TOP_KEYS = {
    "mocs_thm1": {"v", "d", "d_prime", "partition", "u", "length_digits"},
    "ccc_thm2": {"d", "partition"},
    "zccs_thm3": {"v", "d", "partition"},
    "gcs_lemma3": {"k", "v", "pi", "length_digits"},
}
_REQUIRED = {
    "mocs_thm1": {"v", "d_prime", "partition", "u"},
    "ccc_thm2": {"partition"},
    "zccs_thm3": {"v", "partition"},
    "gcs_lemma3": {"k", "v", "pi"},
}
# coefficient name -> number of indices in its key (0 = scalar)
_COEFFS = {
    "mocs_thm1": {"a_quad": 2, "b_cross": 3, "c_power": 2, "c0": 0, "c": 0},
    "ccc_thm2": {"a_quad": 2, "h_power": 2, "h0": 0},
    "zccs_thm3": {"a_quad": 2, "h_power": 2, "h0": 0, "b": 0},
    "gcs_lemma3": {"c_cross": 2, "c_lin": 1, "c0": 0},
}


class FileFormatError(ValueError):
    """A family file or config is not well-formed JSON of the expected shape."""


def _int(value, name, errs):
    if isinstance(value, bool) or not isinstance(value, int):
        errs.append(f"{name} must be an integer (got {value!r})")
        return None
    return value


def _parse_coeff_map(name, raw, arity, errs):
    if not isinstance(raw, Mapping):
        errs.append(f"coeffs.{name} must be an object keyed by \"i,j,...\"")
        return {}
    out = {}
    for key, val in raw.items():
        parts = str(key).split(",")
        try:
            idx = tuple(int(p) for p in parts)
        except ValueError:
            idx = ()
        if len(idx) != arity:
            errs.append(f"coeffs.{name} key {key!r} must have {arity} comma-separated integers")
            continue
        v = _int(val, f"coeffs.{name}[{key}]", errs)
        if v is not None:
            out[idx[0] if arity == 1 else idx] = v
    return out


def params_from_config(cfg: Mapping[str, Any]) -> Params:
    """Turn a config mapping into a parameter object.

    Structural problems (unknown keys, wrong types) and construction
    conditions are reported together in one :class:`ValidationError`.
    """
    errs: list[str] = []
    if not isinstance(cfg, Mapping):
        raise ValidationError(["config must be a JSON object"])
    theorem = cfg.get("theorem")
    if theorem not in THEOREMS:
        raise ValidationError([f"theorem must be one of {', '.join(THEOREMS)} (got {theorem!r})"])
    allowed = {"theorem", "q", "m", "coeffs"} | _TOP_KEYS[theorem]
    for key in cfg:
        if key not in allowed:
            errs.append(f"unknown key {key!r} for {theorem}")
    for key in {"q", "m"} | _REQUIRED[theorem]:
        if key not in cfg:
            errs.append(f"missing required key {key!r}")

    kw: dict[str, Any] = {}
    for key in ("q", "m", "v", "d_prime", "u", "k"):
        if key in cfg and key in allowed:
            kw[key] = _int(cfg[key], key, errs)
    if "partition" in cfg:
        part = cfg["partition"]
        if not (isinstance(part, list) and all(isinstance(b, list) for b in part)):
            errs.append("partition must be a list of lists of variable indices")
        else:
            kw["partition"] = tuple(tuple(_int(x, "partition entry", errs) or 0 for x in b) for b in part)
            if "d" in cfg and _int(cfg["d"], "d", errs) != len(part):
                errs.append(f"d={cfg['d']} does not match the {len(part)} partition blocks")
    if "pi" in cfg:
        pi = cfg["pi"]
        if not isinstance(pi, list):
            errs.append("pi must be a list")
        else:
            kw["pi"] = tuple(_int(x, "pi entry", errs) or 0 for x in pi)
    if "length_digits" in cfg:
        digits = cfg["length_digits"]
        if not isinstance(digits, list):
            errs.append("length_digits must be a list")
        else:
            vals = tuple(_int(x, "length digit", errs) or 0 for x in digits)
            kw["length_bits" if theorem == "gcs_lemma3" else "length_digits"] = vals

    coeffs = cfg.get("coeffs", {})
    if not isinstance(coeffs, Mapping):
        errs.append("coeffs must be an object")
        coeffs = {}
    spec = _COEFFS[theorem]
    for name, raw in coeffs.items():
        if name not in spec:
            errs.append(f"unknown coefficient {name!r} for {theorem}")
        elif spec[name] == 0:
            kw[name] = _int(raw, f"coeffs.{name}", errs)
        else:
            kw[name] = _parse_coeff_map(name, raw, spec[name], errs)
    if errs:
        raise ValidationError(errs)

    cls = {"mocs_thm1": MocsParams, "ccc_thm2": CccParams,
           "zccs_thm3": ZccsParams, "gcs_lemma3": GcsParams}[theorem]
    params = cls(**kw)
    errs = validate(params)
    if errs:
        raise ValidationError(errs)
    return params


def load_config(path: str | os.PathLike) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: not valid JSON ({exc})") from None


def generate(cfg: Mapping[str, Any]) -> SequenceFamily:
    """Validate a config and build its family, echoing the config as provenance."""
    params = params_from_config(cfg)
    fam = build(params)
    return SequenceFamily(fam.q, fam.data, fam.kind, fam.claimed_z, provenance=dict(cfg))


def atomic_write(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to ``path`` via a temp file and rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def family_to_json(family: SequenceFamily) -> str:
    """Deterministic JSON text with one sequence per line."""
    header = {
        "q": family.q,
        "L": family.L,
        "M": family.M,
        "N": family.N,
        "kind_claimed": family.kind,
        "claimed_Z": family.claimed_z,
        "provenance": family.provenance,
    }
    lines = ["{"]
    for key, val in header.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(val, sort_keys=True)},")
    lines.append('  "sets": [')
    for p, block in enumerate(family.data):
        lines.append("    [")
        rows = [f"      [{','.join(map(str, row.tolist()))}]" for row in block]
        lines.append(",\n".join(rows))
        lines.append("    ]" + ("," if p < family.M - 1 else ""))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_family(family: SequenceFamily, path: str | os.PathLike) -> None:
    atomic_write(path, family_to_json(family))


def family_from_dict(obj: Mapping[str, Any]) -> SequenceFamily:
    if not isinstance(obj, Mapping):
        raise FileFormatError("family file must hold a JSON object")
    for key in ("q", "L", "M", "N", "sets"):
        if key not in obj:
            raise FileFormatError(f"family file lacks {key!r}")
    q, L, M, N = (obj[k] for k in ("q", "L", "M", "N"))
    try:
        data = np.asarray(obj["sets"], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"sets is not a rectangular integer array ({exc})") from None
    if data.shape != (M, N, L):
        raise FileFormatError(f"sets has shape {data.shape}, header says {(M, N, L)}")
    kind = obj.get("kind_claimed")
    if kind is not None and kind not in KINDS:
        raise FileFormatError(f"unknown kind_claimed {kind!r}")
    claimed_z = obj.get("claimed_Z")
    try:
        return SequenceFamily(q, data, kind, claimed_z, provenance=obj.get("provenance"))
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None


def read_family(path: str | os.PathLike) -> SequenceFamily:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: not valid JSON ({exc})") from None
    return family_from_dict(obj)


def report_to_json(report) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def _fmt_magnitude(x: float) -> str:
    return "0" if x == 0 else f"{x:.12g}"


def profile_to_csv(prof: CorrelationProfile) -> str:
    rows = ["tau,magnitude"]
    rows += [f"{t},{_fmt_magnitude(m)}" for t, m in zip(prof.shifts.tolist(), prof.magnitudes.tolist())]
    return "\n".join(rows) + "\n"


def profile_to_json(prof: CorrelationProfile) -> str:
    body = {
        "q": prof.q,
        "tau": prof.shifts.tolist(),
        "coeffs": prof.counts.tolist(),
        "zero": prof.zero.tolist(),
        "magnitude": prof.magnitudes.tolist(),
    }
    return json.dumps(body) + "\n"
