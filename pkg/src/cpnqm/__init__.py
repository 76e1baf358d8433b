"""Finite-dimensional quantum states as points of complex projective space."""

from cpnqm.bloch import BlochVector, bloch_vector, from_bloch, rotation_matrix, spin_operators
from cpnqm.dynamics import (
    HamiltonianSystem,
    Trajectory,
    evolve_operator_heisenberg,
    evolve_state,
    expectation,
    heisenberg_rhs,
    poisson_flow_residual,
    sample_trajectory,
    tangent_vector,
)
from cpnqm.errors import (
    AllZero,
    CPNError,
    DimensionMismatch,
    KernelState,
    NotHermitian,
    NotSpecialUnitary,
    NotUnit,
    NotUnitary,
    ZeroPivot,
    ZeroResult,
)
from cpnqm.operators import (
    GeneratorBasis,
    HermitianOperator,
    SpecialUnitary,
    apply_operator,
    apply_operator_eigen,
    eigensystem,
    generator_basis,
    group_act,
    reconstruct,
    traceless_decompose,
    transitive_element,
)
from cpnqm.projective import (
    EPS_NORM,
    EPS_ZERO,
    ChartCoordinates,
    ProjectivePoint,
    RepresentationBasis,
    as_state,
    canonicalize,
    change_representation,
    chart_transition,
    fidelity,
    from_chart,
    inner_product,
    projectively_equal,
    superpose,
    to_chart,
)

__version__ = "0.1.0"
