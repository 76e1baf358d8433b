"""Acceptance gate: one test per exit criterion, each at its pinned tolerance.

Every test records a one-line verdict; ``conftest.py`` prints them in the
terminal summary. ``python tests/test_acceptance.py`` runs the same
checks without pytest.
"""

import json

import numpy as np
import pytest

from cpnqm import (
    HamiltonianSystem,
    KernelState,
    RepresentationBasis,
    ZeroResult,
    apply_operator,
    apply_operator_eigen,
    bloch_vector,
    canonicalize,
    change_representation,
    chart_transition,
    evolve_operator_heisenberg,
    evolve_state,
    expectation,
    fidelity,
    from_chart,
    generator_basis,
    group_act,
    poisson_flow_residual,
    projectively_equal,
    reconstruct,
    rotation_matrix,
    superpose,
    to_chart,
    traceless_decompose,
    transitive_element,
)
from cpnqm.cli import main as cli_main
from randmat import (
    random_degenerate_hermitian,
    random_hermitian,
    random_scalar,
    random_state,
    random_su,
    random_unitary,
)

RESULTS = []

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)


def record(name, ok, detail):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, detail


@pytest.fixture
def rng():
    return np.random.default_rng(1729)


def test_scale_phase_invariance(rng):
    worst_comp, worst_fid = 0.0, 0.0
    for _ in range(10_000):
        d = int(rng.integers(2, 9))
        v = random_state(rng, d)
        c = random_scalar(rng)
        p, q = canonicalize(v), canonicalize(c * v)
        worst_comp = max(worst_comp, np.max(np.abs(p.canonical - q.canonical)))
        worst_fid = max(worst_fid, 1 - fidelity(v, c * v))
    record("scale/phase invariance", worst_comp <= 1e-9 and worst_fid < 1e-12,
           f"max component gap {worst_comp:.2e} (tol 1e-9), max fidelity deficit {worst_fid:.2e} (tol 1e-12)")


def test_superposition_closure(rng):
    valid = zero = 0
    worst = 0.0
    for i in range(1000):
        d = int(rng.integers(2, 7))
        m = int(rng.integers(1, 5))
        vecs = [random_state(rng, d) for _ in range(m)]
        coeffs = [random_scalar(rng) for _ in range(m)]
        if i % 10 == 0 and m > 1:
            # force a cancellation
            vecs[-1] = vecs[0]
            coeffs[-1] = -coeffs[0]
            vecs[1:-1] = [vecs[0]] * (m - 2)
            coeffs[1:-1] = [0.0] * (m - 2)
        try:
            p = superpose(coeffs, vecs)
        except ZeroResult:
            zero += 1
            continue
        z = p.canonical
        assert abs(np.linalg.norm(z) - 1) < 1e-9
        valid += 1
        # same-ray case on the first vector
        same = [random_scalar(rng) for _ in range(m)]
        if abs(sum(same)) > 1e-6 * sum(abs(c) for c in same):
            worst = max(worst, 1 - fidelity(superpose(same, [vecs[0]] * m), vecs[0]))
    record("superposition closure", valid + zero == 1000 and zero > 0 and worst < 1e-10,
           f"{valid} valid points, {zero} ZeroResult, same-ray deficit {worst:.2e} (tol 1e-10)")


def test_chart_atlas(rng):
    worst_rt = worst_ratio = 0.0
    pairs = 0
    for _ in range(1000):
        d = int(rng.integers(2, 6))
        v = random_state(rng, d)
        p = canonicalize(v)
        charts = [k for k in range(d) if abs(p.canonical[k]) > 1e-12]
        for k in charts:
            c = to_chart(p, k)
            for j in charts:
                cj = chart_transition(c, j)
                back = chart_transition(cj, k)
                scale = max(1.0, np.max(np.abs(c.coords)))
                worst_rt = max(worst_rt, np.max(np.abs(back.coords - c.coords)) / scale)
                ratios = np.delete(v / v[j], j)
                worst_ratio = max(worst_ratio, np.max(np.abs(cj.coords - ratios)) / max(1.0, np.max(np.abs(ratios))))
                pairs += 1
            worst_rt = max(worst_rt, np.max(np.abs(to_chart(from_chart(c), k).coords - c.coords))
                           / max(1.0, np.max(np.abs(c.coords))))
    record("chart atlas consistency", worst_rt <= 1e-9 and worst_ratio <= 1e-9,
           f"{pairs} chart pairs, round trip {worst_rt:.2e}, ratio gap {worst_ratio:.2e} (tol 1e-9)")


def test_representation_switch(rng):
    worst_rt = worst_fid = 0.0
    for _ in range(1000):
        d = int(rng.integers(2, 9))
        a = RepresentationBasis(random_unitary(rng, d))
        b = RepresentationBasis(random_unitary(rng, d))
        v, w = random_state(rng, d), random_state(rng, d)
        v, w = v / np.linalg.norm(v), w / np.linalg.norm(w)
        vb, wb = change_representation(v, a, b), change_representation(w, a, b)
        worst_rt = max(worst_rt, np.max(np.abs(change_representation(vb, b, a) - v)))
        worst_fid = max(worst_fid, abs(fidelity(vb, wb) - fidelity(v, w)))
    record("representation switch", worst_rt < 1e-10 and worst_fid < 1e-10,
           f"round trip {worst_rt:.2e}, fidelity drift {worst_fid:.2e} (tol 1e-10)")


def _dynamics_sweep(rng):
    for _ in range(500):
        d = int(rng.integers(2, 9))
        yield (HamiltonianSystem(random_hermitian(rng, d)), random_hermitian(rng, d),
               random_state(rng, d), float(rng.uniform(-10, 10)))


def test_picture_equivalence(rng):
    worst = 0.0
    for sys_, L, v, t in _dynamics_sweep(rng):
        schrod = expectation(L, evolve_state(sys_, v, t))
        heis = expectation(evolve_operator_heisenberg(sys_, L, t), v)
        worst = max(worst, abs(schrod - heis))
    record("picture equivalence", worst < 1e-9, f"max gap {worst:.2e} over 500 cases (tol 1e-9)")


def test_flow_correspondence(rng):
    worst = max(poisson_flow_residual(sys_, L, v, t, h=1e-5) for sys_, L, v, t in _dynamics_sweep(rng))
    record("flow correspondence", worst < 1e-6, f"max residual {worst:.2e} at h=1e-5 (tol 1e-6)")


def test_larmor_benchmark():
    sys_ = HamiltonianSystem(SZ / 2, hbar=1.0)
    v0 = np.array([1, 1]) / np.sqrt(2)
    times = np.linspace(0, 2 * np.pi, 257)
    sx_gap = z_gap = 0.0
    for t in times:
        psi = evolve_state(sys_, v0, t)
        sx_gap = max(sx_gap, abs(expectation(SX, psi) - np.cos(t)))
        z_gap = max(z_gap, abs(bloch_vector(psi).z))
    half = 1 - fidelity(evolve_state(sys_, v0, np.pi), [1, -1])
    ok = sx_gap < 1e-9 and z_gap < 1e-9 and projectively_equal(evolve_state(sys_, v0, np.pi), [1, -1])
    record("Larmor benchmark", ok,
           f"<sx>-cos t {sx_gap:.2e}, |Bloch z| {z_gap:.2e} (tol 1e-9), deficit at pi {half:.2e}")


def test_operator_action(rng):
    worst = 0.0
    for i in range(1000):
        d = int(rng.integers(2, 7))
        a = random_degenerate_hermitian(rng, d) if i % 2 else random_hermitian(rng, d)
        p = canonicalize(random_state(rng, d))
        try:
            m = apply_operator(a, p)
        except KernelState:
            continue
        worst = max(worst, 1 - fidelity(m, apply_operator_eigen(a, p)))
    kernel_hits = 0
    for _ in range(100):
        d = int(rng.integers(2, 7))
        q = random_unitary(rng, d)
        lam = rng.normal(size=d)
        lam[0] = 0.0
        a = (q * lam) @ q.conj().T
        try:
            apply_operator(0.5 * (a + a.conj().T), q[:, 0])
        except KernelState:
            kernel_hits += 1
    record("operator action", worst < 1e-9 and kernel_hits == 100,
           f"route deficit {worst:.2e} (tol 1e-9), KernelState raised {kernel_hits}/100")


def test_transitivity(rng):
    worst_fid = worst_det = 0.0
    for d in range(2, 7):
        for _ in range(1000):
            p = canonicalize(random_state(rng, d))
            q = canonicalize(random_state(rng, d))
            g = transitive_element(p, q)
            worst_fid = max(worst_fid, 1 - fidelity(group_act(g, p), q))
            worst_det = max(worst_det, abs(np.linalg.det(g.matrix) - 1))
    record("transitivity", worst_fid < 1e-9 and worst_det < 1e-9,
           f"fidelity deficit {worst_fid:.2e}, det error {worst_det:.2e} (tol 1e-9)")


def test_generator_decomposition(rng):
    worst = 0.0
    bases = {d: generator_basis(d) for d in range(2, 6)}
    for _ in range(1000):
        d = int(rng.integers(2, 6))
        a = random_hermitian(rng, d)
        worst = max(worst, np.max(np.abs(reconstruct(traceless_decompose(a, bases[d]), bases[d]) - a)))
    pauli = [np.eye(2), SX, SY, SZ]
    exact = all(np.array_equal(g, s) for g, s in zip(bases[2].elements, pauli))
    record("generator decomposition", worst < 1e-10 and exact,
           f"reconstruction residual {worst:.2e} (tol 1e-10), d=2 basis equals Pauli: {exact}")


def test_bloch_geometry(rng):
    worst_law = worst_eq = 0.0
    for _ in range(1000):
        p, q = random_state(rng, 2), random_state(rng, 2)
        bp, bq = bloch_vector(p), bloch_vector(q)
        worst_law = max(worst_law, abs(fidelity(p, q) - (1 + bp.dot(bq)) / 2))
        g = random_su(rng, 2)
        rotated = rotation_matrix(g) @ bp.as_array()
        worst_eq = max(worst_eq, np.max(np.abs(bloch_vector(group_act(g, p)).as_array() - rotated)))
    record("Bloch geometry", worst_law < 1e-9 and worst_eq < 1e-8,
           f"fidelity-angle gap {worst_law:.2e} (tol 1e-9), equivariance gap {worst_eq:.2e} (tol 1e-8)")


def test_cli_contract(tmp_path):
    pair = lambda m: [[[float(np.real(z)), float(np.imag(z))] for z in row] for row in m]
    cfg = {
        "dim": 2,
        "hamiltonian": pair(SZ / 2),
        "initial_state": [[1, 0], [1, 0]],
        "times": {"start": 0.0, "stop": 2 * np.pi, "step": np.pi / 16},
        "observables": {"sx": pair(SX), "sy": pair(SY), "sz": pair(SZ)},
    }
    path = tmp_path / "larmor.json"
    path.write_text(json.dumps(cfg))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    runs = [cli_main(["evolve", str(path), "-o", str(out)]) for out in (a, b)]
    identical = runs == [0, 0] and a.read_bytes() == b.read_bytes()

    corrupt_codes = []
    for key, value in [("hamiltonian", pair(np.array([[0, 1], [0, 0]]))),
                       ("initial_state", [[0, 0], [0, 0]]),
                       ("times", [1.0, 0.0]),
                       ("dim", 3)]:
        bad = dict(cfg, **{key: value})
        bad_path = tmp_path / f"bad_{key}.json"
        bad_path.write_text(json.dumps(bad))
        corrupt_codes.append(cli_main(["evolve", str(bad_path)]))
    clean = cli_main(["picture-check", str(path), "-o", str(tmp_path / "ok.txt")])
    perturbed = cli_main(["picture-check", str(path), "--perturb", "1e-3", "-o", str(tmp_path / "bad.txt")])
    ok = identical and all(c == 2 for c in corrupt_codes) and clean == 0 and perturbed != 0
    record("CLI contract", ok,
           f"byte-identical CSV: {identical}, corrupted configs exit {corrupt_codes}, "
           f"picture-check clean={clean} perturbed={perturbed}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
