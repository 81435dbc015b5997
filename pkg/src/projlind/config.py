"""JSON scenario configuration: parsing, validation and serialization.

Schema
------
A configuration is a single JSON object with these keys:

``dimension``
    Positive integer n.
``hamiltonian``
    n x n matrix. Every matrix is a list of rows; every entry is a
    two-element array ``[re, im]``. Bare numbers are rejected, so the format
    is unambiguous.
``projectors``
    List of objects, each carrying ``rate`` (positive number) and exactly
    one of:

    * ``matrix``: an explicit n x n projector, entries as ``[re, im]``;
    * ``vectors``: a list of orthonormal length-n vectors (entries as
      ``[re, im]``); the projector is assembled as sum v v^dag, so rank > 1
      projectors can be entered without writing the matrix out.
``initial_state``
    n x n density matrix, entries as ``[re, im]``.
``time_grid``
    Either an explicit ascending list of non-negative numbers, or an object
    ``{"start": a, "stop": b, "count": k, "spacing": "linear" | "log"}``.
    Log spacing requires start > 0.

Syntax errors raise :class:`~projlind.exceptions.ConfigError` with the
line and column; invariant violations raise
:class:`~projlind.exceptions.InvalidInputError` carrying the offending
field, projector index or pair, and the measured residual.
"""

from __future__ import annotations

import json

import numpy as np

from .exceptions import ConfigError, InvalidInputError
from .model import DensityMatrix, Hamiltonian, ProjectorFamily, Scenario, projector_from_vectors

_REQUIRED_KEYS = ("dimension", "hamiltonian", "projectors", "initial_state", "time_grid")


def _complex_entry(node, path: str) -> complex:
    if (not isinstance(node, (list, tuple)) or len(node) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in node)):
        raise ConfigError(f"{path}: expected a [re, im] pair, got {node!r}")
    return complex(float(node[0]), float(node[1]))


def _complex_matrix(node, path: str, rows: int, cols: int) -> np.ndarray:
    if not isinstance(node, list) or len(node) != rows:
        raise ConfigError(f"{path}: expected {rows} rows")
    out = np.zeros((rows, cols), dtype=complex)
    for i, row in enumerate(node):
        if not isinstance(row, list) or len(row) != cols:
            raise ConfigError(f"{path}[{i}]: expected {cols} entries")
        for j, entry in enumerate(row):
            out[i, j] = _complex_entry(entry, f"{path}[{i}][{j}]")
    return out


def _complex_vector(node, path: str, length: int) -> np.ndarray:
    if not isinstance(node, list) or len(node) != length:
        raise ConfigError(f"{path}: expected {length} entries")
    return np.array([_complex_entry(e, f"{path}[{j}]") for j, e in enumerate(node)])


def _time_grid(node, path: str) -> np.ndarray:
    if isinstance(node, list):
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in node):
            raise ConfigError(f"{path}: explicit grid must contain numbers only")
        return np.array([float(x) for x in node])
    if isinstance(node, dict):
        extra = set(node) - {"start", "stop", "count", "spacing"}
        if extra:
            raise ConfigError(f"{path}: unknown keys {sorted(extra)}")
        try:
            start = float(node["start"])
            stop = float(node["stop"])
            count = int(node["count"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"{path}: needs numeric start, stop and integer count") from exc
        spacing = node.get("spacing", "linear")
        if count < 1:
            raise ConfigError(f"{path}: count must be >= 1, got {count}")
        if spacing == "linear":
            return np.linspace(start, stop, count)
        if spacing == "log":
            if start <= 0.0:
                raise ConfigError(f"{path}: log spacing requires start > 0, got {start}")
            return np.geomspace(start, stop, count)
        raise ConfigError(f"{path}.spacing: expected 'linear' or 'log', got {spacing!r}")
    raise ConfigError(f"{path}: expected a list of times or a start/stop/count object")


def _parse_members(doc: dict, n: int) -> list[tuple[np.ndarray, float]]:
    """Raw (projector matrix, rate) pairs, before family axioms are enforced."""
    node = doc["projectors"]
    if not isinstance(node, list):
        raise ConfigError("projectors: expected a list")
    members = []
    for j, item in enumerate(node):
        path = f"projectors[{j}]"
        if not isinstance(item, dict):
            raise ConfigError(f"{path}: expected an object")
        if "rate" not in item:
            raise ConfigError(f"{path}: missing rate")
        rate = item["rate"]
        if not isinstance(rate, (int, float)) or isinstance(rate, bool):
            raise ConfigError(f"{path}.rate: expected a number, got {rate!r}")
        has_matrix = "matrix" in item
        has_vectors = "vectors" in item
        if has_matrix == has_vectors:
            raise ConfigError(f"{path}: give exactly one of 'matrix' or 'vectors'")
        if has_matrix:
            p = _complex_matrix(item["matrix"], f"{path}.matrix", n, n)
        else:
            vecs_node = item["vectors"]
            if not isinstance(vecs_node, list) or not vecs_node:
                raise ConfigError(f"{path}.vectors: expected a non-empty list of vectors")
            vecs = [_complex_vector(v, f"{path}.vectors[{k}]", n)
                    for k, v in enumerate(vecs_node)]
            try:
                p = projector_from_vectors(vecs)
            except InvalidInputError as exc:
                raise InvalidInputError(f"{path}.vectors: {exc}") from exc
        members.append((p, float(rate)))
    return members


def _parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"JSON syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("top level must be a JSON object")
    missing = [k for k in _REQUIRED_KEYS if k not in doc]
    if missing:
        raise ConfigError(f"missing required keys: {missing}")
    extra = set(doc) - set(_REQUIRED_KEYS)
    if extra:
        raise ConfigError(f"unknown keys: {sorted(extra)}")
    if not isinstance(doc["dimension"], int) or isinstance(doc["dimension"], bool) \
            or doc["dimension"] < 1:
        raise ConfigError(f"dimension: expected a positive integer, got {doc['dimension']!r}")
    return doc


def parse_config(text: str) -> Scenario:
    """Parse a JSON configuration document into a validated Scenario."""
    doc = _parse_document(text)
    n = doc["dimension"]
    h = _complex_matrix(doc["hamiltonian"], "hamiltonian", n, n)
    members = _parse_members(doc, n)
    rho0 = _complex_matrix(doc["initial_state"], "initial_state", n, n)
    grid = _time_grid(doc["time_grid"], "time_grid")
    try:
        hamiltonian = Hamiltonian(h)
    except InvalidInputError as exc:
        raise InvalidInputError(f"hamiltonian: {exc}") from exc
    try:
        family = ProjectorFamily(members, dim=n)
    except InvalidInputError as exc:
        raise InvalidInputError(f"projectors: {exc}") from exc
    try:
        state = DensityMatrix(rho0)
    except InvalidInputError as exc:
        raise InvalidInputError(f"initial_state: {exc}") from exc
    try:
        return Scenario(hamiltonian, family, state, grid)
    except InvalidInputError as exc:
        raise InvalidInputError(f"time_grid: {exc}") from exc


def load_config(path) -> Scenario:
    """Read and parse a configuration file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def _matrix_to_json(m) -> list:
    a = np.asarray(m, dtype=complex)
    return [[[float(a[i, j].real), float(a[i, j].imag)] for j in range(a.shape[1])]
            for i in range(a.shape[0])]


def scenario_to_config(scenario: Scenario) -> dict:
    """Serialize a Scenario to the JSON schema. Round-trips exactly: floats
    are emitted at full precision, so re-parsing reproduces the scenario."""
    return {
        "dimension": scenario.dim,
        "hamiltonian": _matrix_to_json(scenario.hamiltonian.matrix),
        "projectors": [
            {"matrix": _matrix_to_json(p), "rate": float(rate)}
            for p, rate in scenario.family
        ],
        "initial_state": _matrix_to_json(scenario.initial_state.matrix),
        "time_grid": [float(t) for t in scenario.time_grid],
    }


def dumps_config(scenario: Scenario) -> str:
    """JSON text of :func:`scenario_to_config`."""
    return json.dumps(scenario_to_config(scenario), indent=2)
