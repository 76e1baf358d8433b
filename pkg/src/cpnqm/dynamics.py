"""Time evolution in the Schrodinger and Heisenberg pictures.

Propagators are built from an exact eigendecomposition of the
Hamiltonian, ``U(t) = V diag(exp(-i lam t / hbar)) V^dagger``, so there
is no stepping error to budget for in the checks below.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

import numpy as np

from cpnqm.errors import DimensionMismatch
from cpnqm.operators import HermitianOperator, as_hermitian
from cpnqm.projective import EPS_NORM, ProjectivePoint, as_state


@dataclass(frozen=True)
class HamiltonianSystem:
    H: HermitianOperator
    hbar: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "H", as_hermitian(self.H))
        if not (np.isfinite(self.hbar) and self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")

    @property
    def dim(self):
        return self.H.dim

    @cached_property
    def _eig(self):
        return np.linalg.eigh(self.H.matrix)

    def propagator(self, t):
        """``exp(-i H t / hbar)``."""
        w, v = self._eig
        return (v * np.exp(-1j * w * t / self.hbar)) @ v.conj().T


def _match(sys, d):
    if sys.dim != d:
        raise DimensionMismatch(f"system dim {sys.dim} != {d}")


def _unit_state(v):
    v = as_state(v.canonical if isinstance(v, ProjectivePoint) else v)
    return v / np.linalg.norm(v)


def evolve_state(sys, v0, t):
    """Schrodinger-picture state at time ``t``; ``v0`` is normalized first."""
    v0 = _unit_state(v0)
    _match(sys, v0.size)
    w, v = sys._eig
    return v @ (np.exp(-1j * w * t / sys.hbar) * (v.conj().T @ v0))


def tangent_vector(sys, v):
    """Components ``da^i/dt = (1 / i hbar) sum_j H_ij a^j`` at the state ``v``."""
    v = np.asarray(v, dtype=np.complex128)
    _match(sys, v.size)
    return (sys.H.matrix @ v) / (1j * sys.hbar)


def heisenberg_rhs(L, sys):
    """Right-hand side ``[L, H] / (i hbar)`` of the Heisenberg equation."""
    L = as_hermitian(L)
    _match(sys, L.dim)
    l, h = L.matrix, sys.H.matrix
    rhs = (l @ h - h @ l) / (1j * sys.hbar)
    return HermitianOperator(0.5 * (rhs + rhs.conj().T))


def evolve_operator_heisenberg(sys, L, t):
    """``U(t)^dagger L U(t)``."""
    L = as_hermitian(L)
    _match(sys, L.dim)
    u = sys.propagator(t)
    m = u.conj().T @ L.matrix @ u
    return HermitianOperator(0.5 * (m + m.conj().T))


def expectation(L, v):
    """``<v|L|v> / <v|v>``; unchanged by rescaling ``v``."""
    L = as_hermitian(L)
    v = as_state(v.canonical if isinstance(v, ProjectivePoint) else v)
    if L.dim != v.size:
        raise DimensionMismatch(f"operator dim {L.dim} != state dim {v.size}")
    return float(np.vdot(v, L.matrix @ v).real / np.vdot(v, v).real)


def flow_residual(flow_sys, rhs_sys, L, v0, t, h):
    # central difference of <L> along flow_sys versus <[L, H]/i hbar> of rhs_sys
    if h <= 0:
        raise ValueError("finite-difference step must be positive")
    fwd = expectation(L, evolve_state(flow_sys, v0, t + h))
    bwd = expectation(L, evolve_state(flow_sys, v0, t - h))
    rate = expectation(heisenberg_rhs(L, rhs_sys), evolve_state(flow_sys, v0, t))
    return abs((fwd - bwd) / (2 * h) - rate)


def poisson_flow_residual(sys, L, v0, t, h=1e-5):
    """Mismatch between ``d<L>/dt`` along the flow and ``<[L, H]/i hbar>``.

    The derivative is a central difference of step ``h`` taken on the
    Schrodinger trajectory from ``v0``. A small residual says that the
    expectation of ``L`` changes exactly as the Heisenberg equation
    prescribes.
    """
    return flow_residual(sys, sys, L, v0, t, h)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray
    points: tuple
    expectations: Mapping[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.times)
        if n == 0:
            raise ValueError("trajectory needs at least one sample")
        if self.states.shape[0] != n or len(self.points) != n:
            raise ValueError("times, states and points must have equal length")
        if n > 1 and not np.all(np.diff(self.times) > 0):
            raise ValueError("times must be strictly ascending")
        for name, series in self.expectations.items():
            if len(series) != n:
                raise ValueError(f"expectation series {name!r} has wrong length")
        norms = np.linalg.norm(self.states, axis=1)
        if np.max(np.abs(norms - 1.0)) > EPS_NORM:
            raise ValueError("trajectory states must be unit-normalized")

    def __len__(self):
        return len(self.times)


def sample_trajectory(sys, v0, times, observables=None):
    """Evolve ``v0`` over ``times`` and record tracked expectations.

    Parameters
    ----------
    sys : HamiltonianSystem
    v0 : array_like
        initial amplitudes; normalized on entry.
    times : sequence of float
        strictly ascending sample times.
    observables : mapping of str to HermitianOperator, optional
    """
    times = np.asarray(times, dtype=float).ravel()
    if times.size > 1 and not np.all(np.diff(times) > 0):
        raise ValueError("times must be strictly ascending")
    observables = {k: as_hermitian(m) for k, m in (observables or {}).items()}
    states = np.array([evolve_state(sys, v0, t) for t in times])
    points = tuple(ProjectivePoint(s) for s in states)
    expectations = {
        name: np.array([expectation(L, s) for s in states]) for name, L in observables.items()
    }
    return Trajectory(times, states, points, expectations)
