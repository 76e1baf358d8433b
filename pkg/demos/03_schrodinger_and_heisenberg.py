"""
Two pictures of one flow
========================

Larmor precession under H = sigma_z / 2. The Schrodinger route moves the
state, the Heisenberg route moves the observable, and the expectation
values agree. The rate of change of <L> matches <[L, H] / i hbar>.
"""

import numpy as np

import cpnqm

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)

system = cpnqm.HamiltonianSystem(SZ / 2)
times = np.arange(17) * np.pi / 8
traj = cpnqm.sample_trajectory(system, [1, 1], times, {"sx": SX, "sy": SY, "sz": SZ})

print("   t      <sx>     cos t    Bloch z")
for t, sx, p in zip(traj.times, traj.expectations["sx"], traj.points):
    print(f"{t:5.3f}  {sx:+.6f}  {np.cos(t):+.6f}  {cpnqm.bloch_vector(p).z:+.1e}")

# %%
# The same numbers from the Heisenberg picture.
v0 = np.array([1, 1]) / np.sqrt(2)
gap = max(
    abs(cpnqm.expectation(SX, cpnqm.evolve_state(system, v0, t))
        - cpnqm.expectation(cpnqm.evolve_operator_heisenberg(system, SX, t), v0))
    for t in times
)
print("max picture gap:", gap)

# %%
# A random 5-level system: the tangent vector and the flow residual.
rng = np.random.default_rng(7)
a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
H = (a + a.conj().T) / 2
b = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
L = (b + b.conj().T) / 2
system = cpnqm.HamiltonianSystem(H)
psi = rng.normal(size=5) + 1j * rng.normal(size=5)
psi /= np.linalg.norm(psi)
print("tangent vector:", np.round(cpnqm.tangent_vector(system, psi), 4))
print("flow residual:", cpnqm.poisson_flow_residual(system, L, psi, t=1.3))
