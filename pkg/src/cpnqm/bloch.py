"""Spin-1/2 states: CP^1 and the Bloch sphere.

Conventions: the spin-up state ``(1, 0)`` sits at the north pole
``(0, 0, 1)`` and the azimuth is measured from the +x axis.
"""

from dataclasses import dataclass

import numpy as np

from cpnqm.errors import DimensionMismatch, NotUnit
from cpnqm.operators import HermitianOperator, as_special_unitary, generator_basis, traceless_decompose
from cpnqm.projective import EPS_NORM, ProjectivePoint, as_point

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def __post_init__(self):
        r = np.sqrt(self.x**2 + self.y**2 + self.z**2)
        if abs(r - 1.0) > EPS_NORM:
            raise NotUnit(f"Bloch vector has length {r:.12g}, expected 1")

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def as_array(self):
        return np.array((self.x, self.y, self.z))

    def dot(self, other):
        return float(self.as_array() @ np.array(tuple(other), dtype=float))


def bloch_vector(p):
    p = as_point(p)
    if p.dim != 2:
        raise DimensionMismatch(f"Bloch vectors need dim 2, got {p.dim}")
    a, b = p.canonical
    ab = np.conj(a) * b
    return BlochVector(float(2 * ab.real), float(2 * ab.imag), float(abs(a) ** 2 - abs(b) ** 2))


def from_bloch(b, tol=EPS_NORM):
    """Point of CP^1 whose Bloch vector is ``b``.

    Uses ``(cos(theta/2), exp(i phi) sin(theta/2))``.
    """
    x, y, z = (float(c) for c in b)
    r = np.sqrt(x * x + y * y + z * z)
    if abs(r - 1.0) > tol:
        raise NotUnit(f"Bloch vector has length {r:.12g}, expected 1")
    theta = np.arccos(np.clip(z / r, -1.0, 1.0))
    phi = np.arctan2(y, x)
    return ProjectivePoint([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def spin_operators(hbar=1.0):
    """``(s_x, s_y, s_z) = hbar/2 * (sigma_x, sigma_y, sigma_z)``."""
    if not hbar > 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    return tuple(HermitianOperator(0.5 * hbar * s) for s in (PAULI_X, PAULI_Y, PAULI_Z))


def rotation_matrix(g):
    """SO(3) image of ``g`` in SU(2), from the adjoint action on the Pauli basis.

    Column ``j`` holds the Pauli-basis coefficients of
    ``g sigma_j g^dagger``.
    """
    g = as_special_unitary(g)
    if g.dim != 2:
        raise DimensionMismatch(f"expected an SU(2) element, got dim {g.dim}")
    basis = generator_basis(2)
    u = g.matrix
    cols = []
    for s in basis.elements[1:]:
        m = u @ s @ u.conj().T
        cols.append(traceless_decompose(0.5 * (m + m.conj().T), basis)[1:])
    return np.column_stack(cols)
