"""The three propagation paths and the splitting-error indicator.

Writing the vectorized master equation as d/dt vec(rho) = (A + B) vec(rho)
with

    A = -i (H kron 1 - 1 kron H^T)          (unitary part)
    B = - sum_j (lambda_j/2) (P_j kron Q_j^T + Q_j kron P_j^T)   (dissipative part)

the exact solution is vec(rho(t)) = exp(t (A + B)) vec(rho(0)). The
approximate paths replace exp(t(A+B)) by exp(tA) exp(tB), which is exact
whenever [A, B] = 0 (in particular for H = 0 or [H, P_j] = 0 for all j).
The factor exp(tB) is then evaluated in closed form: the coherence-block
projectors R_j = P_j kron Q_j^T + Q_j kron P_j^T commute and satisfy
exp(c R) = 1 + (e^c - 1) R, so

    exp(tB) = prod_j (1 + (e^{-lambda_j t/2} - 1) R_j),

and multiplying the product out, cross terms R_j R_k collapse to
P_j kron P_k^T + P_k kron P_j^T while triple products vanish. Back in
matrix form this gives the closed expression implemented by
:func:`approx_propagate_closed`; :func:`approx_propagate_product` evaluates
the same map as a literal superoperator product, and the two must agree to
rounding. The dropped Baker-Campbell-Hausdorff interaction term starts at
-(1/2) [tA, tB], so the splitting error is second order in t;
:func:`bch_error_indicator` turns that leading term into a scalar
diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, InvalidInputError
from .linalg import commutator, devectorize, kron, matexp, vectorize
from .model import (
    ProjectorFamily,
    Scenario,
    coherence_block_projector,
    dissipator_superop,
    hamiltonian_superop,
    projector_exp,
)

METHOD_EXACT = "exact"
METHOD_APPROX_CLOSED = "approx-closed"
METHOD_APPROX_PRODUCT = "approx-product"


@dataclass(frozen=True)
class PropagationResult:
    """State at one time point.

    ``state`` is stored raw (not re-validated as a density matrix) so that
    downstream diagnostics can measure constraint violations instead of
    masking them.
    """

    time: float
    state: np.ndarray
    method: str


def _check_time(t) -> float:
    t = float(t)
    if not np.isfinite(t) or t < 0.0:
        raise InvalidInputError(f"time must be a finite non-negative real, got {t}")
    return t


def _unitary(scenario: Scenario, t: float) -> np.ndarray:
    # Eigendecomposition path keeps the factor unitary to rounding.
    return matexp(-1j * t * scenario.hamiltonian.matrix, assume="anti_hermitian")


def exact_propagate(scenario: Scenario, t) -> PropagationResult:
    """Exact solution by exponentiating the full n^2 x n^2 generator.

    This is the reference path: a single general matrix exponential of
    t (A + B), deliberately free of structure exploitation.
    """
    t = _check_time(t)
    gen = hamiltonian_superop(scenario.hamiltonian) + dissipator_superop(scenario.family)
    vec = matexp(t * gen) @ vectorize(scenario.initial_state.matrix)
    return PropagationResult(t, devectorize(vec, scenario.dim), METHOD_EXACT)


def _decay_factors(family: ProjectorFamily, t: float) -> np.ndarray:
    return np.array([np.exp(-lam * t / 2.0) - 1.0 for lam in family.rates])


def _closed_body(family: ProjectorFamily, rho0: np.ndarray, t: float,
                 symmetric_pairs: bool = False) -> np.ndarray:
    """The braces of the closed form, before unitary conjugation.

    The cross term can be summed over ordered pairs j < k or symmetrically
    over j != k with a factor 1/2; both spellings are kept because their
    agreement is a cheap sanity check of the pair algebra.
    """
    eye = np.eye(family.dim, dtype=complex)
    c = _decay_factors(family, t)
    ps = family.projectors
    out = rho0.astype(complex).copy()
    for j, p in enumerate(ps):
        q = eye - p
        out += c[j] * (p @ rho0 @ q + q @ rho0 @ p)
    if symmetric_pairs:
        for j in range(len(ps)):
            for k in range(len(ps)):
                if j != k:
                    out += 0.5 * c[j] * c[k] * (ps[j] @ rho0 @ ps[k] + ps[k] @ rho0 @ ps[j])
    else:
        for j in range(len(ps)):
            for k in range(j + 1, len(ps)):
                out += c[j] * c[k] * (ps[j] @ rho0 @ ps[k] + ps[k] @ rho0 @ ps[j])
    return out


def approx_propagate_closed(scenario: Scenario, t) -> PropagationResult:
    """Closed-form splitting approximation, entirely in matrix form:

        rho(t) ~= U { rho0 + sum_j c_j (P_j rho0 Q_j + Q_j rho0 P_j)
                           + sum_{j<k} c_j c_k (P_j rho0 P_k + P_k rho0 P_j) } U^dag

    with U = exp(-i t H) and c_j = e^{-lambda_j t / 2} - 1. Costs only n x n
    products and one Hermitian eigendecomposition for U.
    """
    t = _check_time(t)
    body = _closed_body(scenario.family, scenario.initial_state.matrix, t)
    u = _unitary(scenario, t)
    return PropagationResult(t, u @ body @ u.conj().T, METHOD_APPROX_CLOSED)


def approx_propagate_product(scenario: Scenario, t) -> PropagationResult:
    """Same map as :func:`approx_propagate_closed`, evaluated as a literal
    superoperator product

        (U kron U*) prod_j (1 + (e^{-lambda_j t/2} - 1) R_j) vec(rho0)

    with factors taken in family order (they commute, so the order only
    fixes determinism).
    """
    t = _check_time(t)
    n = scenario.dim
    op = np.eye(n * n, dtype=complex)
    for p, lam in scenario.family:
        op = op @ projector_exp(-lam * t / 2.0, coherence_block_projector(p))
    u = _unitary(scenario, t)
    vec = kron(u, u.conj()) @ op @ vectorize(scenario.initial_state.matrix)
    return PropagationResult(t, devectorize(vec, n), METHOD_APPROX_PRODUCT)


def _expanded_decay_superop(family: ProjectorFamily, t: float) -> np.ndarray:
    """Multiplied-out form of the dissipative factor:

        1 + sum_j c_j R_j + sum_{j<k} c_j c_k (P_j kron P_k^T + P_k kron P_j^T).

    Kept as a third, independent route for equivalence tests.
    """
    n = family.dim
    c = _decay_factors(family, t)
    ps = family.projectors
    out = np.eye(n * n, dtype=complex)
    for j, p in enumerate(ps):
        out += c[j] * coherence_block_projector(p)
    for j in range(len(ps)):
        for k in range(j + 1, len(ps)):
            out += c[j] * c[k] * (kron(ps[j], ps[k].T) + kron(ps[k], ps[j].T))
    return out


def _approx_propagate_expanded(scenario: Scenario, t) -> PropagationResult:
    t = _check_time(t)
    n = scenario.dim
    u = _unitary(scenario, t)
    vec = kron(u, u.conj()) @ _expanded_decay_superop(scenario.family, t) \
        @ vectorize(scenario.initial_state.matrix)
    return PropagationResult(t, devectorize(vec, n), METHOD_APPROX_PRODUCT)


def bch_interaction_term(a, b) -> np.ndarray:
    """Interaction term of the splitting exp(A+B) = exp(A) exp(I) exp(B),
    truncated after third order:

        I(A, B) ~= -(1/2)[A, B] + (1/6)([[A, B], B] + [A, [A, B]]).

    This is a truncation: the series continues with higher nested
    commutators that are not computed here. For A, B of order t the
    truncation error in exp(I) is O(t^4).
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionError(f"operands must share a shape, got {a.shape} and {b.shape}")
    ab = commutator(a, b)
    return -0.5 * ab + (commutator(ab, b) + commutator(a, ab)) / 6.0


def bch_error_indicator(scenario: Scenario, t) -> float:
    """Size of the leading term dropped by the splitting:

        (1/2) || [t A, t B] ||_F  =  (t^2 / 2) || [A, B] ||_F.

    Zero exactly when the scenario commutes; grows quadratically in t.
    """
    t = float(t)
    a = hamiltonian_superop(scenario.hamiltonian)
    b = dissipator_superop(scenario.family)
    return 0.5 * float(np.linalg.norm(commutator(t * a, t * b)))
