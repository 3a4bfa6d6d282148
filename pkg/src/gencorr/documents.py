"""JSON state documents and report documents.

Complex numbers are ``[re, im]`` pairs.  Amplitude index ``i`` of an
``n``-qubit state has qubit 1 as its most significant bit.
"""
from __future__ import annotations

import json
from typing import Any, Callable

import jsonschema
import numpy as np

from . import states
from .errors import InvalidInputError
from .states import MixedState, PureState, SymmetricState

DOCUMENT_TOL = 1e-6
RENORMALIZE_ABOVE = 1e-12

_complex = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}

STATE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "StateDocument",
    "type": "object",
    "required": ["kind"],
    "oneOf": [
        {
            "properties": {
                "kind": {"const": "pure"},
                "n": {"type": "integer", "minimum": 1},
                "amplitudes": {"type": "array", "items": _complex, "minItems": 2},
            },
            "required": ["kind", "n", "amplitudes"],
            "additionalProperties": False,
        },
        {
            "properties": {
                "kind": {"const": "mixed"},
                "n": {"type": "integer", "minimum": 1},
                "matrix": {"type": "array", "items": {"type": "array", "items": _complex}, "minItems": 2},
            },
            "required": ["kind", "n", "matrix"],
            "additionalProperties": False,
        },
        {
            "properties": {
                "kind": {"const": "named"},
                "name": {"enum": None},  # filled below from CATALOG
                "params": {"type": "object"},
            },
            "required": ["kind", "name"],
            "additionalProperties": False,
        },
        {
            "properties": {
                "kind": {"const": "symmetric"},
                "n": {"type": "integer", "minimum": 1},
                "dicke_coeffs": {"type": "array", "items": _complex, "minItems": 2},
            },
            "required": ["kind", "n", "dicke_coeffs"],
            "additionalProperties": False,
        },
    ],
}

_labels = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_nullable = lambda s: {"anyOf": [s, {"type": "null"}]}  # noqa: E731

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ReportDocument",
    "type": "object",
    "required": ["command", "input", "method", "tolerances", "timing", "warnings"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["analyze", "factorize", "decompose", "degree"]},
        "input": {
            "type": "object",
            "required": ["source", "kind", "n"],
            "properties": {
                "source": {"type": "string"},
                "kind": {"enum": ["pure", "mixed", "named", "symmetric"]},
                "n": {"type": "integer"},
                "name": {"type": "string"},
            },
        },
        "verdict": {"enum": ["genuine", "not_genuine"]},
        "witness": _nullable(_labels),
        "degree": {"type": "integer", "minimum": 1},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["qubits", "state"],
                "properties": {"qubits": _labels, "state": {"$ref": "#/$defs/state"}},
                "additionalProperties": False,
            },
        },
        "global_phase": _complex,
        "cut_ranks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["subset", "rank"],
                "properties": {"subset": _labels, "rank": {"type": "integer", "minimum": 0}},
                "additionalProperties": False,
            },
        },
        "cut_rank_kind": {"enum": ["coefficient", "operator"]},
        "symmetric_class": {"enum": ["genuine", "product", "trivial_dicke0", "trivial_dicken"]},
        "cut": _labels,
        "k": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["left", "right"],
                "properties": {"left": {"type": "array", "items": _complex}, "right": {"type": "array", "items": _complex}},
                "additionalProperties": False,
            },
        },
        "residual": {"type": "number", "minimum": 0},
        "method": {"type": "string"},
        "tolerances": {
            "type": "object",
            "required": ["rank", "density", "zero"],
            "properties": {k: {"type": "number", "exclusiveMinimum": 0} for k in ("rank", "density", "zero")},
        },
        "timing": {"type": "object", "required": ["seconds"], "properties": {"seconds": {"type": "number"}}},
        "warnings": {"type": "array", "items": {"type": "string", "pattern": "^[a-z_]+$"}},
    },
    "$defs": {},
}


# -- catalog ---------------------------------------------------------------------


def _ints(text) -> list[int]:
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    return [int(x) for x in str(text).split(",") if x]


# name -> (builder, {param: converter}, required params)
CATALOG: dict[str, tuple[Callable, dict[str, Callable], tuple[str, ...]]] = {
    "dicke": (lambda n, l: states.dicke(n, l), {"n": int, "l": int}, ("n", "l")),
    "ghz": (lambda n: states.ghz(n), {"n": int}, ("n",)),
    "w": (lambda n: states.w(n), {"n": int}, ("n",)),
    "bell": (lambda x, y: states.bell(x, y), {"x": int, "y": int}, ("x", "y")),
    "swapping": (lambda: states.swapping_state(), {}, ()),
    "smolin": (lambda: states.smolin(), {}, ()),
    "ghz_w_mixture": (lambda p, n=3: states.ghz_w_mixture(p, n), {"p": float, "n": int}, ("p",)),
    "dicke_mixture": (
        lambda n, l, l_prime, p: states.dicke_mixture(n, l, l_prime, p),
        {"n": int, "l": int, "l_prime": int, "p": float},
        ("n", "l", "l_prime", "p"),
    ),
    "random_pure": (lambda n, seed: states.random_pure(n, seed), {"n": int, "seed": int}, ("n", "seed")),
    "random_product": (
        lambda n, sizes, seed: states.random_product(n, sizes, seed),
        {"n": int, "sizes": _ints, "seed": int},
        ("n", "sizes", "seed"),
    ),
}
STATE_SCHEMA["oneOf"][2]["properties"]["name"]["enum"] = sorted(CATALOG)
REPORT_SCHEMA["$defs"]["state"] = {k: v for k, v in STATE_SCHEMA.items() if k != "$schema"}


def build_named(name: str, params: dict[str, Any], default_seed=None):
    if name not in CATALOG:
        raise InvalidInputError(f"unknown state {name!r}; valid names: {', '.join(sorted(CATALOG))}")
    builder, convert, required = CATALOG[name]
    params = dict(params)
    if "seed" in convert and "seed" not in params and default_seed is not None:
        params["seed"] = default_seed
    unknown = set(params) - set(convert)
    if unknown:
        raise InvalidInputError(f"{name}: unknown parameters {sorted(unknown)}; expected {sorted(convert)}")
    missing = [p for p in required if p not in params]
    if missing:
        raise InvalidInputError(f"{name}: missing parameters {missing}")
    try:
        kwargs = {k: convert[k](v) for k, v in params.items()}
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name}: bad parameter value ({exc})") from exc
    return builder(**kwargs)


# -- serialization -----------------------------------------------------------------


def _pairs(v: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex).reshape(-1)]


def _unpairs(items) -> np.ndarray:
    return np.array([complex(re, im) for re, im in items], dtype=complex)


def state_to_document(state) -> dict[str, Any]:
    if isinstance(state, PureState):
        return {"kind": "pure", "n": state.n, "amplitudes": _pairs(state.amplitudes)}
    if isinstance(state, MixedState):
        return {"kind": "mixed", "n": state.n, "matrix": [_pairs(row) for row in state.matrix]}
    if isinstance(state, SymmetricState):
        return {"kind": "symmetric", "n": state.n, "dicke_coeffs": _pairs(state.dicke_coeffs)}
    raise InvalidInputError(f"cannot serialize {type(state).__name__}")


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, allow_nan=False) + "\n"


def validate(doc: Any, schema: dict[str, Any] = STATE_SCHEMA) -> None:
    """Raise :class:`InvalidInputError` naming the offending field."""
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        where = "/".join(map(str, err.absolute_path)) or "<root>"
        raise InvalidInputError(f"schema error at {where}: {err.message}")


def parse_document(text: str, source: str = "<input>") -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    validate(doc)
    return doc


def _size_check(n: int, got: int, what: str) -> None:
    if got != 1 << n:
        raise InvalidInputError(f"{what}: expected {1 << n} entries for n={n}, got {got}")


def document_to_state(doc: dict[str, Any], default_seed=None):
    """Build a state from a validated document; returns ``(state, warnings)``.

    Documents off by more than 1e-6 (norm, trace, Hermiticity) are rejected;
    smaller deviations are repaired and reported as warnings.
    """
    kind = doc["kind"]
    warnings: list[str] = []
    if kind == "named":
        return build_named(doc["name"], doc.get("params", {}), default_seed), warnings
    n = doc["n"]
    if kind in ("pure", "symmetric"):
        key = "amplitudes" if kind == "pure" else "dicke_coeffs"
        v = _unpairs(doc[key])
        if kind == "pure":
            _size_check(n, v.size, key)
        elif v.size != n + 1:
            raise InvalidInputError(f"{key}: expected {n + 1} entries for n={n}, got {v.size}")
        norm = np.linalg.norm(v)
        if abs(norm - 1) > DOCUMENT_TOL:
            raise InvalidInputError(f"{key}: norm {norm} differs from 1 by more than {DOCUMENT_TOL}")
        if abs(norm - 1) > RENORMALIZE_ABOVE:
            v = v / norm
            warnings.append("renormalized")
        return (PureState(v) if kind == "pure" else SymmetricState(v)), warnings
    rows = doc["matrix"]
    _size_check(n, len(rows), "matrix")
    for i, row in enumerate(rows):
        _size_check(n, len(row), f"matrix/{i}")
    m = np.array([_unpairs(row) for row in rows])
    asym = np.max(np.abs(m - m.conj().T))
    if asym > DOCUMENT_TOL:
        raise InvalidInputError(f"matrix: not Hermitian (max deviation {asym})")
    if asym > RENORMALIZE_ABOVE:
        m = (m + m.conj().T) / 2
        warnings.append("hermitized")
    tr = np.trace(m).real
    if abs(tr - 1) > DOCUMENT_TOL:
        raise InvalidInputError(f"matrix: trace {tr} differs from 1 by more than {DOCUMENT_TOL}")
    if abs(tr - 1) > RENORMALIZE_ABOVE:
        m = m / tr
        warnings.append("renormalized")
    return MixedState(m), warnings
