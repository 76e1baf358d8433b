"""Hermitian observables, the SU(n+1) action on CP^n, and Gell-Mann bases."""

from itertools import combinations

import numpy as np

from cpnqm.errors import DimensionMismatch, KernelState, NotHermitian, NotSpecialUnitary
from cpnqm.projective import (
    EPS_NORM,
    EPS_ZERO,
    ProjectivePoint,
    RepresentationBasis,
    as_point,
)


def _square(m):
    m = np.array(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    return m


class HermitianOperator:
    """A dynamical variable: a complex matrix equal to its adjoint.

    The adjoint condition is checked entrywise to within ``tol``.
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix, tol=EPS_NORM):
        m = _square(matrix)
        err = np.max(np.abs(m - m.conj().T))
        if err > tol:
            raise NotHermitian(f"matrix is not Hermitian (deviation {err:.3g})")
        m.flags.writeable = False
        self._matrix = m

    @property
    def matrix(self):
        return self._matrix

    @property
    def dim(self):
        return self._matrix.shape[0]

    def __repr__(self):
        return f"HermitianOperator(dim={self.dim})"


def as_hermitian(a):
    return a if isinstance(a, HermitianOperator) else HermitianOperator(a)


class SpecialUnitary:
    """Element of SU(d) in its defining representation."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix, tol=EPS_NORM):
        m = _square(matrix)
        uerr = np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))
        if uerr > tol:
            raise NotSpecialUnitary(f"matrix is not unitary (deviation {uerr:.3g})")
        derr = abs(np.linalg.det(m) - 1.0)
        if derr > tol:
            raise NotSpecialUnitary(f"determinant differs from 1 by {derr:.3g}")
        m.flags.writeable = False
        self._matrix = m

    @property
    def matrix(self):
        return self._matrix

    @property
    def dim(self):
        return self._matrix.shape[0]

    def __matmul__(self, other):
        if isinstance(other, SpecialUnitary):
            return SpecialUnitary(self._matrix @ other._matrix)
        return NotImplemented


def as_special_unitary(g):
    return g if isinstance(g, SpecialUnitary) else SpecialUnitary(g)


def eigensystem(a):
    """Ascending eigenvalues and an eigenbasis of a Hermitian operator.

    Each eigenvector is phase-fixed so that its first significant
    component is real and positive. Within a degenerate eigenspace the
    basis is whatever ``numpy.linalg.eigh`` returns.

    Returns
    -------
    eigenvalues : ndarray of float
    basis : RepresentationBasis
        eigenvectors as columns, in the order of ``eigenvalues``.
    """
    a = as_hermitian(a)
    w, v = np.linalg.eigh(a.matrix)
    for j in range(v.shape[1]):
        col = v[:, j]
        k = int(np.argmax(np.abs(col) > EPS_ZERO))
        mag = abs(col[k])
        v[:, j] = col * (np.conj(col[k]) / mag)
        v[k, j] = mag
    return w, RepresentationBasis(v)


def _kernel_scale(m):
    return max(1.0, float(np.max(np.abs(m))))


def apply_operator(a, p):
    """Image of the point ``p`` under the operator ``a``.

    Raises KernelState when ``a`` annihilates the representative.
    """
    a, p = as_hermitian(a), as_point(p)
    if a.dim != p.dim:
        raise DimensionMismatch(f"operator dim {a.dim} != point dim {p.dim}")
    out = a.matrix @ p.canonical
    if np.max(np.abs(out)) <= EPS_ZERO * _kernel_scale(a.matrix):
        raise KernelState("state lies in the kernel of the operator")
    return ProjectivePoint(out)


def apply_operator_eigen(a, p):
    """Same map as :func:`apply_operator`, routed through the eigenbasis.

    Amplitudes in the eigenbasis are scaled by their eigenvalues and then
    transformed back. Kept as an independent cross-check.
    """
    a, p = as_hermitian(a), as_point(p)
    if a.dim != p.dim:
        raise DimensionMismatch(f"operator dim {a.dim} != point dim {p.dim}")
    w, basis = eigensystem(a)
    v = basis.vectors
    amps = w * (v.conj().T @ p.canonical)
    out = v @ amps
    if np.max(np.abs(out)) <= EPS_ZERO * _kernel_scale(a.matrix):
        raise KernelState("state lies in the kernel of the operator")
    return ProjectivePoint(out)


def group_act(g, p):
    g, p = as_special_unitary(g), as_point(p)
    if g.dim != p.dim:
        raise DimensionMismatch(f"group element dim {g.dim} != point dim {p.dim}")
    return ProjectivePoint(g.matrix @ p.canonical)


def _complete_unitary(v):
    # unitary whose first column is exactly v (v unit-norm)
    d = v.size
    q, r = np.linalg.qr(np.column_stack([v, np.eye(d, dtype=np.complex128)]))
    q[:, 0] *= r[0, 0]
    return q


def transitive_element(p, q):
    """An element ``g`` of SU(d) carrying the point ``p`` to the point ``q``.

    Both canonical vectors are completed to unitaries ``U_p``, ``U_q``
    (first column fixed), ``U = U_q U_p^dagger`` and the global phase is
    removed with the principal d-th root of ``det U``.
    """
    p, q = as_point(p), as_point(q)
    if p.dim != q.dim:
        raise DimensionMismatch(f"dims differ: {p.dim} != {q.dim}")
    u = _complete_unitary(q.canonical) @ _complete_unitary(p.canonical).conj().T
    det = np.linalg.det(u)
    u = u * np.exp(-1j * np.angle(det) / p.dim)
    return SpecialUnitary(u)


class GeneratorBasis:
    """Generalized Gell-Mann basis of d x d Hermitian matrices.

    ``elements[0]`` is ``sqrt(2/d) * I``; the remaining ``d**2 - 1``
    elements are traceless. Order: all symmetric off-diagonal elements,
    then all antisymmetric ones (both over pairs ``j < k`` in
    lexicographic order), then the diagonal ones. Every pair satisfies
    ``Tr(G_i G_j) = 2 delta_ij``.
    """

    __slots__ = ("elements", "labels")

    def __init__(self, elements, labels):
        elements = np.array(elements, dtype=np.complex128)
        elements.flags.writeable = False
        self.elements = elements
        self.labels = tuple(labels)

    @property
    def dim(self):
        return self.elements.shape[1]

    def __len__(self):
        return self.elements.shape[0]

    def gram(self):
        """Matrix of trace inner products ``Tr(G_i G_j)``."""
        return np.einsum("iab,jba->ij", self.elements, self.elements)


def generator_basis(d):
    if d < 2:
        raise ValueError("generator basis needs d >= 2")
    elems = [np.sqrt(2.0 / d) * np.eye(d, dtype=np.complex128)]
    labels = ["I"]
    pairs = list(combinations(range(d), 2))
    for j, k in pairs:
        m = np.zeros((d, d), dtype=np.complex128)
        m[j, k] = m[k, j] = 1.0
        elems.append(m)
        labels.append(f"S{j}{k}")
    for j, k in pairs:
        m = np.zeros((d, d), dtype=np.complex128)
        m[j, k] = -1j
        m[k, j] = 1j
        elems.append(m)
        labels.append(f"A{j}{k}")
    for l in range(1, d):
        diag = np.zeros(d)
        diag[:l] = 1.0
        diag[l] = -l
        elems.append(np.sqrt(2.0 / (l * (l + 1))) * np.diag(diag).astype(np.complex128))
        labels.append(f"D{l}")
    return GeneratorBasis(elems, labels)


def traceless_decompose(a, basis=None):
    """Real coefficients ``c_i = Tr(A G_i) / 2`` with ``A = sum_i c_i G_i``."""
    a = as_hermitian(a)
    if basis is None:
        basis = generator_basis(a.dim)
    elif basis.dim != a.dim:
        raise DimensionMismatch(f"basis dim {basis.dim} != operator dim {a.dim}")
    c = np.einsum("ab,iba->i", a.matrix, basis.elements) / 2.0
    return c.real.copy()


def reconstruct(coeffs, basis):
    """Inverse of :func:`traceless_decompose`."""
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.shape != (len(basis),):
        raise DimensionMismatch(f"expected {len(basis)} coefficients, got {coeffs.shape}")
    return np.einsum("i,iab->ab", coeffs, basis.elements)
