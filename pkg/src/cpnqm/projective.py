"""Quantum states as points of complex projective space.

A state vector is any 1-d complex array of length ``n + 1 >= 2`` that is
not identically zero. Two vectors describe the same point of CP^n when
they differ by a nonzero complex factor. Every point is stored through a
canonical representative: unit Euclidean norm, with the first
significant amplitude rotated onto the positive real axis.

Charts are the usual affine patches ``{z : z^k != 0}`` with coordinates
``z^i / z^k`` (pivot omitted). Picking a chart amounts to picking a
representation of the state.
"""

from dataclasses import dataclass

import numpy as np

from cpnqm.errors import (
    AllZero,
    DimensionMismatch,
    NotUnitary,
    ZeroPivot,
    ZeroResult,
)

EPS_NORM = 1e-9
EPS_ZERO = 1e-12
MAX_DIM = 32


def _readonly(a):
    a = np.array(a, dtype=np.complex128)
    a.flags.writeable = False
    return a


def as_state(amplitudes, max_dim=MAX_DIM):
    """Validate ``amplitudes`` as a state vector and return a complex array.

    Raises
    ------
    ValueError
        if the input is not 1-d, has fewer than 2 or more than ``max_dim``
        entries, or contains non-finite values.
    AllZero
        if every amplitude has modulus ``<= EPS_ZERO``.
    """
    v = np.asarray(amplitudes, dtype=np.complex128)
    if v.ndim != 1:
        raise ValueError(f"state vector must be 1-d, got shape {v.shape}")
    if not 2 <= v.size <= max_dim:
        raise ValueError(f"state dimension must lie in [2, {max_dim}], got {v.size}")
    if not np.all(np.isfinite(v)):
        raise ValueError("state vector contains non-finite amplitudes")
    if np.max(np.abs(v)) <= EPS_ZERO:
        raise AllZero("all amplitudes vanish")
    return v


def _fix_phase(v):
    # first significant amplitude -> real positive
    mags = np.abs(v)
    k = int(np.argmax(mags > EPS_ZERO))
    out = v * (np.conj(v[k]) / mags[k])
    out[k] = mags[k]
    return out


class ProjectivePoint:
    """A point of CP^n held through its canonical representative.

    Construct from any nonzero representative; ``ProjectivePoint(c * v)``
    and ``ProjectivePoint(v)`` hold the same canonical array.
    """

    __slots__ = ("_canonical",)

    def __init__(self, amplitudes):
        v = as_state(amplitudes)
        v = v / np.linalg.norm(v)
        self._canonical = _readonly(_fix_phase(v))

    @property
    def canonical(self):
        return self._canonical

    @property
    def dim(self):
        return self._canonical.size

    def __array__(self, dtype=None, copy=None):
        return np.array(self._canonical, dtype=dtype)

    def __repr__(self):
        body = ", ".join(f"{z:.6g}" for z in self._canonical)
        return f"ProjectivePoint([{body}])"


def as_point(p):
    """Return ``p`` as a ProjectivePoint, canonicalizing raw vectors."""
    if isinstance(p, ProjectivePoint):
        return p
    return ProjectivePoint(p)


def canonicalize(v):
    """Canonical representative of the ray through ``v``.

    >>> canonicalize([0, 2j]).canonical
    array([0.+0.j, 1.+0.j])
    """
    if isinstance(v, ProjectivePoint):
        return v
    return ProjectivePoint(v)


def _check_dims(*dims):
    if len(set(dims)) != 1:
        raise DimensionMismatch(f"dimensions differ: {dims}")


def fidelity(p, q):
    """``|<q|p>|^2`` of the unit representatives, clipped to [0, 1]."""
    p, q = as_point(p), as_point(q)
    _check_dims(p.dim, q.dim)
    f = abs(np.vdot(q.canonical, p.canonical)) ** 2
    return float(min(1.0, max(0.0, f)))


def projectively_equal(p, q, tol=EPS_NORM):
    """True when the two points coincide, decided as ``1 - fidelity <= tol``."""
    return 1.0 - fidelity(p, q) <= tol


def superpose(coeffs, vectors):
    """Canonicalized linear combination ``sum_i coeffs[i] * vectors[i]``.

    The combination acts on representatives, not on points: multiplying
    one of the ``vectors`` by a phase changes the result.

    Raises
    ------
    ZeroResult
        when the combination cancels. Cancellation is judged relative to
        ``sum_i |c_i| max|v_i|`` so that roundoff from large inputs is not
        mistaken for a state.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128).ravel()
    vecs = [as_state(v.canonical if isinstance(v, ProjectivePoint) else v) for v in vectors]
    if coeffs.size == 0 or coeffs.size != len(vecs):
        raise ValueError("coeffs and vectors must be nonempty and of equal length")
    _check_dims(*(v.size for v in vecs))
    if np.max(np.abs(coeffs)) <= EPS_ZERO:
        raise ValueError("coefficients cannot all be zero")
    stacked = np.stack(vecs)
    combo = coeffs @ stacked
    scale = max(1.0, float(np.abs(coeffs) @ np.max(np.abs(stacked), axis=1)))
    if np.max(np.abs(combo)) <= EPS_ZERO * scale:
        raise ZeroResult("linear combination cancels to zero")
    return ProjectivePoint(combo)


def inner_product(v, w):
    """``<w|v> = sum_k conj(w_k) v_k``; linear in ``v``."""
    v = np.asarray(v.canonical if isinstance(v, ProjectivePoint) else v, dtype=np.complex128)
    w = np.asarray(w.canonical if isinstance(w, ProjectivePoint) else w, dtype=np.complex128)
    _check_dims(v.size, w.size)
    return complex(np.vdot(w, v))


@dataclass(frozen=True)
class ChartCoordinates:
    """Inhomogeneous coordinates of a point in the chart ``z^chart_index != 0``."""

    chart_index: int
    coords: np.ndarray

    def __post_init__(self):
        coords = np.array(self.coords, dtype=np.complex128).ravel()
        if coords.size < 1:
            raise ValueError("chart coordinates need at least one entry (dim >= 2)")
        if not 0 <= self.chart_index <= coords.size:
            raise ValueError(
                f"chart index {self.chart_index} out of range for dim {coords.size + 1}"
            )
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "chart_index", int(self.chart_index))

    @property
    def dim(self):
        return self.coords.size + 1

    def homogeneous(self):
        """Representative with a 1 inserted at the pivot position."""
        return np.insert(self.coords, self.chart_index, 1.0)


def to_chart(p, k):
    p = as_point(p)
    if not 0 <= k < p.dim:
        raise ValueError(f"chart index {k} out of range for dim {p.dim}")
    z = p.canonical
    if abs(z[k]) <= EPS_ZERO:
        raise ZeroPivot(f"amplitude {k} vanishes; point lies outside chart {k}")
    return ChartCoordinates(k, np.delete(z / z[k], k))


def from_chart(c):
    return ProjectivePoint(c.homogeneous())


def chart_transition(c, j):
    """Re-express chart coordinates ``c`` in chart ``j``."""
    if j == c.chart_index:
        return c
    return to_chart(from_chart(c), j)


class RepresentationBasis:
    """Orthonormal basis stored as the columns of a unitary matrix."""

    __slots__ = ("_vectors",)

    def __init__(self, vectors, tol=EPS_NORM):
        u = np.array(vectors, dtype=np.complex128)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ValueError(f"basis must be a square matrix, got shape {u.shape}")
        err = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
        if err > tol:
            raise NotUnitary(f"basis columns are not orthonormal (deviation {err:.3g})")
        u.flags.writeable = False
        self._vectors = u

    @classmethod
    def standard(cls, dim):
        return cls(np.eye(dim))

    @property
    def vectors(self):
        return self._vectors

    @property
    def dim(self):
        return self._vectors.shape[0]


def _as_basis(b):
    return b if isinstance(b, RepresentationBasis) else RepresentationBasis(b)


def change_representation(v, from_b, to_b):
    """Amplitudes of the same abstract state expressed in ``to_b``.

    ``v`` lists the amplitudes in ``from_b``; the result is
    ``to_b^dagger @ from_b @ v``.
    """
    from_b, to_b = _as_basis(from_b), _as_basis(to_b)
    v = as_state(v)
    _check_dims(v.size, from_b.dim, to_b.dim)
    return to_b.vectors.conj().T @ (from_b.vectors @ v)
