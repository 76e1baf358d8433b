"""
Operators on CP^n and the SU(n+1) action
=========================================

An observable maps points to points (unless the state is in its kernel),
decomposes over the generalized Gell-Mann basis, and SU(n+1) moves any
point to any other.
"""

import numpy as np

import cpnqm

rng = np.random.default_rng(11)
d = 3
a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
A = cpnqm.HermitianOperator((a + a.conj().T) / 2)
p = cpnqm.canonicalize(rng.normal(size=d) + 1j * rng.normal(size=d))

direct = cpnqm.apply_operator(A, p)
via_eigenbasis = cpnqm.apply_operator_eigen(A, p)
print("A(p):", np.round(direct.canonical, 6))
print("agree:", cpnqm.projectively_equal(direct, via_eigenbasis))

try:
    cpnqm.apply_operator(np.diag([1.0, 0.0, 2.0]), [0, 1, 0])
except cpnqm.KernelState as exc:
    print("kernel:", exc)

# %%
# Gell-Mann coefficients of A and its reconstruction.
basis = cpnqm.generator_basis(d)
coeffs = cpnqm.traceless_decompose(A, basis)
for label, c in zip(basis.labels, coeffs):
    print(f"{label:>4} {c:+.6f}")
print("residual:", np.max(np.abs(cpnqm.reconstruct(coeffs, basis) - A.matrix)))

# %%
# Transitivity: an explicit g in SU(3) taking p to q.
q = cpnqm.canonicalize(rng.normal(size=d) + 1j * rng.normal(size=d))
g = cpnqm.transitive_element(p, q)
print("det g:", np.round(np.linalg.det(g.matrix), 12))
print("fidelity(g p, q):", cpnqm.fidelity(cpnqm.group_act(g, p), q))
