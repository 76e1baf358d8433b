"""
Spin-1/2 and the Bloch sphere
=============================

CP^1 is a two-sphere. Every electron spin state maps to a unit vector,
and SU(2) acts on it by rotations.
"""

import numpy as np

import cpnqm

for label, amps in [("up", [1, 0]), ("down", [0, 1]), ("+x", [1, 1]), ("+y", [1, 1j])]:
    print(f"{label:>5}:", cpnqm.bloch_vector(amps))

# Fidelity is fixed by the angle between Bloch vectors.
rng = np.random.default_rng(0)
p, q = rng.normal(size=2) + 1j * rng.normal(size=2), rng.normal(size=2) + 1j * rng.normal(size=2)
bp, bq = cpnqm.bloch_vector(p), cpnqm.bloch_vector(q)
print("fidelity:", cpnqm.fidelity(p, q), " (1 + bp.bq)/2:", (1 + bp.dot(bq)) / 2)

# %%
# A quarter turn about z: the SU(2) element and its SO(3) image.
theta = np.pi / 2
g = cpnqm.SpecialUnitary(np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)]))
print("rotation matrix:\n", np.round(cpnqm.rotation_matrix(g), 12))
print("+x after g:", cpnqm.bloch_vector(cpnqm.group_act(g, [1, 1])))

# The spin operators close under commutation.
sx, sy, sz = cpnqm.spin_operators(hbar=1.0)
comm = sx.matrix @ sy.matrix - sy.matrix @ sx.matrix
print("[s_x, s_y] == i s_z:", np.allclose(comm, 1j * sz.matrix))
