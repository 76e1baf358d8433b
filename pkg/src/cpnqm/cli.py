"""Command-line front end.

Exit codes: 0 success, 1 numerical failure (or a failed check), 2 invalid
input. Run ``python -m cpnqm --help`` for the command list.
"""

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from cpnqm.bloch import bloch_vector
from cpnqm.config import ConfigError, load_config, matrix_from_json
from cpnqm.dynamics import (
    HamiltonianSystem,
    evolve_operator_heisenberg,
    evolve_state,
    expectation,
    flow_residual,
    sample_trajectory,
)
from cpnqm.errors import CPNError
from cpnqm.operators import HermitianOperator, generator_basis, reconstruct, traceless_decompose
from cpnqm.projective import ProjectivePoint, chart_transition, to_chart

EXIT_OK, EXIT_NUMERIC, EXIT_INVALID = 0, 1, 2


class InputError(Exception):
    pass


def _fmt(x):
    return f"{x:.17g}"


def _fmt_complex(z):
    z = complex(z)
    if z.imag == 0:
        return f"{z.real + 0.0:.12g}"
    return f"{z.real + 0.0:.12g}{z.imag + 0.0:+.12g}j"


def parse_amplitude(token):
    try:
        return complex(token.strip().replace("i", "j"))
    except ValueError:
        raise InputError(f"cannot parse amplitude {token!r}") from None


def _system(cfg, args):
    hbar = args.hbar if args.hbar is not None else cfg.hbar
    if not hbar > 0:
        raise InputError(f"--hbar must be positive, got {hbar}")
    return HamiltonianSystem(cfg.hamiltonian, hbar)


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def trajectory_csv(traj, bloch=False):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = list(traj.expectations)
    if bloch:
        w.writerow(["t", "x", "y", "z"])
        for t, p in zip(traj.times, traj.points):
            w.writerow([_fmt(t)] + [_fmt(c) for c in bloch_vector(p)])
        return buf.getvalue()
    d = traj.states.shape[1]
    header = ["t"]
    for i in range(d):
        header += [f"re_a{i}", f"im_a{i}"]
    w.writerow(header + names)
    for n, t in enumerate(traj.times):
        row = [_fmt(t)]
        for z in traj.states[n]:
            row += [_fmt(z.real), _fmt(z.imag)]
        row += [_fmt(traj.expectations[k][n]) for k in names]
        w.writerow(row)
    return buf.getvalue()


def trajectory_json(traj, bloch=False):
    out = {"times": traj.times.tolist()}
    if bloch:
        out["bloch"] = [list(bloch_vector(p)) for p in traj.points]
    else:
        out["states"] = [[[z.real, z.imag] for z in s] for s in traj.states]
    out["expectations"] = {k: v.tolist() for k, v in traj.expectations.items()}
    return json.dumps(out, indent=1) + "\n"


def cmd_evolve(args):
    cfg = load_config(args.config)
    sys_ = _system(cfg, args)
    if args.bloch and cfg.dim != 2:
        raise ConfigError("dim", "--bloch output needs dim 2")
    traj = sample_trajectory(sys_, cfg.initial_state, cfg.times, cfg.observables)
    text = trajectory_json(traj, args.bloch) if args.json else trajectory_csv(traj, args.bloch)
    _write(text, args.output or cfg.output_path)
    return EXIT_OK


def _perturbed(sys_, eps):
    # corrupt the Schrodinger route only: H + eps * (all-ones matrix)
    d = sys_.dim
    return HamiltonianSystem(sys_.H.matrix + eps * np.ones((d, d)), sys_.hbar)


def picture_report(cfg, sys_, perturb=0.0, h=1e-5):
    """Per-observable maxima over the time grid.

    ``picture`` is the largest gap between the Schrodinger and Heisenberg
    expectations; ``flow`` the largest Poisson-flow residual.
    """
    flow_sys = _perturbed(sys_, perturb) if perturb else sys_
    report = {}
    for name, L in cfg.observables.items():
        pic = flow = 0.0
        for t in cfg.times:
            schrod = expectation(L, evolve_state(flow_sys, cfg.initial_state, t))
            heis = expectation(evolve_operator_heisenberg(sys_, L, t), cfg.initial_state)
            pic = max(pic, abs(schrod - heis))
            flow = max(flow, flow_residual(flow_sys, sys_, L, cfg.initial_state, t, h))
        report[name] = {"picture": pic, "flow": flow}
    return report


def cmd_picture_check(args):
    cfg = load_config(args.config)
    if not cfg.observables:
        raise ConfigError("observables", "picture-check needs at least one observable")
    sys_ = _system(cfg, args)
    report = picture_report(cfg, sys_, args.perturb)
    ok = all(r["picture"] < args.tol and r["flow"] < args.tol for r in report.values())
    if args.json:
        text = json.dumps({"tol": args.tol, "pass": ok, "observables": report}, indent=1) + "\n"
    else:
        lines = [f"{n} picture={r['picture']:.3e} flow={r['flow']:.3e}" for n, r in report.items()]
        lines.append(f"{'PASS' if ok else 'FAIL'} tol={args.tol:.3g}")
        text = "\n".join(lines) + "\n"
    _write(text, args.output)
    return EXIT_OK if ok else EXIT_NUMERIC


def cmd_bloch(args):
    if len(args.amplitudes) != 2:
        raise InputError(f"bloch needs exactly 2 amplitudes, got {len(args.amplitudes)}")
    amps = [parse_amplitude(a) for a in args.amplitudes]
    b = bloch_vector(ProjectivePoint(amps))
    if args.json:
        text = json.dumps({"x": b.x, "y": b.y, "z": b.z}) + "\n"
    else:
        text = " ".join(f"{c + 0.0:.12g}" for c in b) + "\n"
    _write(text, args.output)
    return EXIT_OK


def cmd_chart(args):
    p = ProjectivePoint([parse_amplitude(a) for a in args.amplitudes])
    c = to_chart(p, args.k)
    cj = chart_transition(c, args.j)
    if args.json:
        text = json.dumps({
            "from": {"chart": c.chart_index, "coords": [[z.real, z.imag] for z in c.coords]},
            "to": {"chart": cj.chart_index, "coords": [[z.real, z.imag] for z in cj.coords]},
        }) + "\n"
    else:
        text = "".join(
            "(" + ", ".join(_fmt_complex(z) for z in cc.coords) + ")\n" for cc in (c, cj)
        )
    _write(text, args.output)
    return EXIT_OK


def _read_matrix(source):
    text = source
    if not source.lstrip().startswith("["):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["matrix"]
        return matrix_from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse matrix: {exc}") from None


def cmd_decompose(args):
    A = HermitianOperator(_read_matrix(args.matrix))
    if A.dim < 2:
        raise InputError("matrix must be at least 2x2")
    basis = generator_basis(A.dim)
    coeffs = traceless_decompose(A, basis)
    residual = float(np.max(np.abs(reconstruct(coeffs, basis) - A.matrix)))
    if args.json:
        text = json.dumps({
            "labels": list(basis.labels), "coefficients": coeffs.tolist(), "residual": residual,
        }) + "\n"
    else:
        lines = [f"{i} {lab} {c + 0.0:.12g}" for i, (lab, c) in enumerate(zip(basis.labels, coeffs))]
        lines.append(f"residual {residual:.3g}")
        text = "\n".join(lines) + "\n"
    _write(text, args.output)
    return EXIT_OK


def _add_common(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False),
                        help="emit JSON instead of CSV/plain text")
    parser.add_argument("--hbar", type=float, default=d(None),
                        help="override the reduced Planck constant of the scenario")
    parser.add_argument("--tol", type=float, default=d(1e-8),
                        help="pass threshold for picture-check (default 1e-8)")
    parser.add_argument("--perturb", type=float, default=d(0.0),
                        help="test hook: corrupt the Schrodinger evolution by this amount")
    parser.add_argument("-o", "--output", default=d(None),
                        help="output path (default: config output_path or stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cpnqm", description="Quantum states as points of complex projective space."
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="sample a Schrodinger trajectory to CSV/JSON")
    p.add_argument("config")
    p.add_argument("--bloch", action="store_true", help="write t, x, y, z (dim 2 only)")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("picture-check", help="compare Schrodinger and Heisenberg pictures")
    p.add_argument("config")
    p.set_defaults(func=cmd_picture_check)

    p = sub.add_parser("bloch", help="Bloch vector of a spin-1/2 state")
    p.add_argument("amplitudes", nargs="+")
    p.set_defaults(func=cmd_bloch)

    p = sub.add_parser("chart", help="chart coordinates and a chart transition")
    p.add_argument("amplitudes", nargs="+")
    p.add_argument("-k", "--from-chart", dest="k", type=int, default=0)
    p.add_argument("-j", "--to-chart", dest="j", type=int, default=None)
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("decompose", help="generalized Gell-Mann coefficients of a Hermitian matrix")
    p.add_argument("matrix", help="JSON row-major [re, im] matrix, or a path to one")
    p.set_defaults(func=cmd_decompose)

    for sp in sub.choices.values():
        _add_common(sp, suppress=True)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "j", 0) is None:
        args.j = args.k
    try:
        if args.command in ("bloch", "chart"):
            # state-level errors here are user input errors
            try:
                return args.func(args)
            except (CPNError, ValueError) as exc:
                raise InputError(str(exc)) from None
        return args.func(args)
    except (ConfigError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CPNError as exc:
        if args.command == "decompose":
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
