"""
States as points of CP^n
========================

A state vector and any nonzero multiple of it name the same point.
This script walks through canonical representatives, charts, and the
change of representation.
"""

import numpy as np

import cpnqm

# Two representatives of one ray: their canonical forms coincide.
v = np.array([1, 2j, -1])
p = cpnqm.canonicalize(v)
q = cpnqm.canonicalize((0.3 - 4j) * v)
print("canonical p:", np.round(p.canonical, 6))
print("canonical q:", np.round(q.canonical, 6))
print("projectively equal:", cpnqm.projectively_equal(p, q))

# Superposition works on representatives. Summing multiples of one
# vector gives back the same point ...
print("same ray:", cpnqm.projectively_equal(cpnqm.superpose([2, 3j], [v, v]), p))
# ... unless the coefficients cancel.
try:
    cpnqm.superpose([1, -1], [v, v])
except cpnqm.ZeroResult as exc:
    print("cancellation:", exc)

# %%
# Charts: on the patch z^k != 0 a point has the coordinates z^i / z^k.
c0 = cpnqm.to_chart(p, 0)
c1 = cpnqm.chart_transition(c0, 1)
print("chart 0 coords:", np.round(c0.coords, 6))
print("chart 1 coords:", np.round(c1.coords, 6))
print("back to chart 0:", np.round(cpnqm.chart_transition(c1, 0).coords, 6))

# %%
# A representation is an orthonormal eigenbasis. Switching bases moves
# the amplitudes but leaves overlaps alone.
_, sx_basis = cpnqm.eigensystem([[0, 1], [1, 0]])
e = cpnqm.RepresentationBasis.standard(2)
up = np.array([1, 0])
print("spin-up in the sigma_x basis:", np.round(cpnqm.change_representation(up, e, sx_basis), 6))
a, b = np.array([1, 1j]), np.array([2, -1])
print("fidelity before/after:",
      cpnqm.fidelity(a, b),
      cpnqm.fidelity(cpnqm.change_representation(a, e, sx_basis),
                     cpnqm.change_representation(b, e, sx_basis)))
