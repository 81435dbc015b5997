"""Comparison metrics, state diagnostics and time sweeps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, InvalidInputError
from .linalg import HERMITICITY_TOL, hermiticity_residual, kron
from .model import Scenario
from .propagators import approx_propagate_closed, bch_error_indicator, exact_propagate

#: Gaps below this are treated as rounding noise by the convergence fit.
GAP_NOISE_FLOOR = 1e-14

_SIGMAS = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class ErrorRecord:
    """Exact-vs-approximate comparison at one time point."""

    time: float
    trace_distance: float
    frobenius_gap: float
    exact_trace: complex
    approx_trace: complex
    approx_min_eigenvalue: float
    bch_indicator: float


@dataclass(frozen=True)
class StateDiagnostics:
    hermiticity_residual: float
    trace: complex
    min_eigenvalue: float
    purity: float


@dataclass(frozen=True)
class PauliDecomposition:
    """Two-qubit Bloch-type coefficients.

    rho = (1/4) (1 kron 1 + sum_i p_i s_i kron 1 + sum_j q_j 1 kron s_j
                 + sum_ij r_ij s_i kron s_j)

    with s_1 = sigma_x, s_2 = sigma_y, s_3 = sigma_z (stored 0-based).
    """

    p: np.ndarray
    q: np.ndarray
    r: np.ndarray


def _hermitian_part(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    return (a + a.conj().T) / 2.0


def trace_distance(rho, sigma) -> float:
    """Half the absolute-eigenvalue sum of rho - sigma.

    Both inputs must be Hermitian within the package gate; the difference is
    Hermitian, so the eigenvalue route is exact.
    """
    a = np.asarray(rho, dtype=complex)
    b = np.asarray(sigma, dtype=complex)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"states must share a square shape, got {a.shape} and {b.shape}")
    for name, m in (("rho", a), ("sigma", b)):
        if hermiticity_residual(m) > HERMITICITY_TOL:
            raise InvalidInputError(f"{name} is not Hermitian within {HERMITICITY_TOL:g}")
    eigs = np.linalg.eigvalsh(_hermitian_part(a) - _hermitian_part(b))
    return 0.5 * float(np.abs(eigs).sum())


def state_diagnostics(rho) -> StateDiagnostics:
    """Hermiticity residual, trace, minimum eigenvalue and purity tr(rho^2)."""
    a = np.asarray(rho, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"state must be square, got shape {a.shape}")
    return StateDiagnostics(
        hermiticity_residual=hermiticity_residual(a),
        trace=complex(np.trace(a)),
        min_eigenvalue=float(np.linalg.eigvalsh(_hermitian_part(a))[0]),
        purity=float(np.trace(a @ a).real),
    )


def pauli_decompose(rho) -> PauliDecomposition:
    """Coefficients p_i = tr(rho (s_i kron 1)), q_j = tr(rho (1 kron s_j)),
    r_ij = tr(rho (s_i kron s_j)) of a two-qubit state."""
    a = np.asarray(rho, dtype=complex)
    if a.shape != (4, 4):
        raise DimensionError(f"expected a 4x4 two-qubit state, got shape {a.shape}")
    if hermiticity_residual(a) > HERMITICITY_TOL:
        raise InvalidInputError("two-qubit state is not Hermitian")
    eye = np.eye(2, dtype=complex)
    p = np.array([np.trace(a @ kron(s, eye)).real for s in _SIGMAS])
    q = np.array([np.trace(a @ kron(eye, s)).real for s in _SIGMAS])
    r = np.array([[np.trace(a @ kron(si, sj)).real for sj in _SIGMAS] for si in _SIGMAS])
    p.setflags(write=False)
    q.setflags(write=False)
    r.setflags(write=False)
    return PauliDecomposition(p=p, q=q, r=r)


def pauli_reconstruct(d: PauliDecomposition) -> np.ndarray:
    """Inverse of :func:`pauli_decompose`."""
    eye = np.eye(2, dtype=complex)
    out = kron(eye, eye).astype(complex)
    for i, s in enumerate(_SIGMAS):
        out += d.p[i] * kron(s, eye)
        out += d.q[i] * kron(eye, s)
    for i, si in enumerate(_SIGMAS):
        for j, sj in enumerate(_SIGMAS):
            out += d.r[i, j] * kron(si, sj)
    return out / 4.0


def sweep(scenario: Scenario) -> list[ErrorRecord]:
    """Run the exact and closed-form paths over the scenario's time grid and
    record the per-time-point comparison, ordered by time."""
    records = []
    for t in scenario.time_grid:
        exact = exact_propagate(scenario, t)
        approx = approx_propagate_closed(scenario, t)
        records.append(ErrorRecord(
            time=float(t),
            trace_distance=trace_distance(exact.state, approx.state),
            frobenius_gap=float(np.linalg.norm(exact.state - approx.state)),
            exact_trace=complex(np.trace(exact.state)),
            approx_trace=complex(np.trace(approx.state)),
            approx_min_eigenvalue=float(np.linalg.eigvalsh(_hermitian_part(approx.state))[0]),
            bch_indicator=bch_error_indicator(scenario, t),
        ))
    return records


def convergence_order(records) -> float:
    """Least-squares slope of log(frobenius_gap) against log(t).

    Points with t = 0 or a gap below ``GAP_NOISE_FLOOR`` are excluded; at
    least three usable points are required.
    """
    ts = [r.time for r in records if r.time > 0.0 and r.frobenius_gap > GAP_NOISE_FLOOR]
    gaps = [r.frobenius_gap for r in records if r.time > 0.0 and r.frobenius_gap > GAP_NOISE_FLOOR]
    if len(ts) < 3:
        raise InvalidInputError(
            f"need at least 3 records with t > 0 and gap above {GAP_NOISE_FLOOR:g}, "
            f"got {len(ts)}")
    slope, _ = np.polyfit(np.log(ts), np.log(gaps), 1)
    return float(slope)
