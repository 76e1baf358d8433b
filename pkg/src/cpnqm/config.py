"""Scenario files and the [re, im] wire format for complex data.

A scenario is a JSON (or YAML) mapping::

    {
      "dim": 2,
      "hbar": 1.0,
      "hamiltonian": [[[0.5, 0], [0, 0]], [[0, 0], [-0.5, 0]]],
      "initial_state": [[1, 0], [1, 0]],
      "times": {"start": 0, "stop": 6.283185307179586, "step": 0.19634954084936207},
      "observables": {"sx": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]},
      "output_path": "larmor.csv"
    }

``times`` may also be an explicit list. Complex numbers are always
two-element ``[re, im]`` arrays; a bare real number is accepted as
shorthand for ``[x, 0]``.
"""

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from cpnqm.errors import CPNError
from cpnqm.operators import HermitianOperator
from cpnqm.projective import EPS_ZERO, MAX_DIM


class ConfigError(ValueError):
    """Invalid scenario; ``field`` names the offending key."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


def complex_to_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2:
        re, im = x
        if any(isinstance(c, bool) or not isinstance(c, (int, float)) for c in (re, im)):
            raise TypeError(f"complex pair must hold two numbers, got {x!r}")
        return complex(re, im)
    raise TypeError(f"expected a number or an [re, im] pair, got {x!r}")


def vector_to_json(v):
    return [complex_to_pair(z) for z in np.ravel(v)]


def vector_from_json(data):
    if not isinstance(data, (list, tuple)):
        raise TypeError("expected a list of [re, im] pairs")
    return np.array([pair_to_complex(x) for x in data], dtype=np.complex128)


def matrix_to_json(m):
    return [vector_to_json(row) for row in np.asarray(m)]


def matrix_from_json(data):
    if not isinstance(data, (list, tuple)) or not data:
        raise TypeError("expected a nonempty row-major list of rows")
    rows = [vector_from_json(r) for r in data]
    if len({r.size for r in rows}) != 1:
        raise TypeError("rows have unequal lengths")
    return np.array(rows)


@dataclass(frozen=True)
class ScenarioConfig:
    dim: int
    hamiltonian: HermitianOperator
    initial_state: np.ndarray
    times: np.ndarray
    hbar: float = 1.0
    observables: dict = field(default_factory=dict)
    output_path: str = None


def time_grid(start, stop, step):
    """``start, start + step, ...`` up to ``stop`` inclusive (with slack for roundoff)."""
    if not step > 0:
        raise ValueError("step must be positive")
    if stop < start:
        raise ValueError("stop must not precede start")
    n = math.floor((stop - start) / step + 1e-9) + 1
    return start + step * np.arange(n)


def _real(data, key, positive=False):
    x = data[key]
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise ConfigError(key, f"expected a finite real number, got {x!r}")
    if positive and x <= 0:
        raise ConfigError(key, f"must be positive, got {x!r}")
    return float(x)


def _hermitian(name, raw, dim):
    try:
        m = matrix_from_json(raw)
    except TypeError as exc:
        raise ConfigError(name, str(exc)) from None
    if m.shape != (dim, dim):
        raise ConfigError(name, f"expected a {dim}x{dim} matrix, got {m.shape[0]}x{m.shape[1]}")
    try:
        return HermitianOperator(m)
    except CPNError as exc:
        raise ConfigError(name, str(exc)) from None


def _times(raw):
    if isinstance(raw, dict):
        missing = {"start", "stop", "step"} - raw.keys()
        if missing:
            raise ConfigError("times", f"missing keys {sorted(missing)}")
        start, stop, step = (_real(raw, k) for k in ("start", "stop", "step"))
        try:
            t = time_grid(start, stop, step)
        except ValueError as exc:
            raise ConfigError("times", str(exc)) from None
    elif isinstance(raw, list):
        if any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in raw):
            raise ConfigError("times", "explicit times must be real numbers")
        t = np.array(raw, dtype=float)
    else:
        raise ConfigError("times", "expected a list or a {start, stop, step} mapping")
    if t.size == 0:
        raise ConfigError("times", "no sample times")
    if not np.all(np.isfinite(t)):
        raise ConfigError("times", "non-finite sample time")
    if np.any(np.diff(t) <= 0):
        raise ConfigError("times", "sample times must be strictly ascending")
    return t


def parse_config(data):
    """Validate a decoded scenario mapping and build a ScenarioConfig."""
    if not isinstance(data, dict):
        raise ConfigError("<root>", "scenario must be a mapping")
    known = {"dim", "hbar", "hamiltonian", "initial_state", "times", "observables", "output_path"}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(unknown[0], "unknown key")
    for key in ("dim", "hamiltonian", "initial_state", "times"):
        if key not in data:
            raise ConfigError(key, "required key is missing")

    dim = data["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or not 2 <= dim <= MAX_DIM:
        raise ConfigError("dim", f"expected an integer in [2, {MAX_DIM}], got {dim!r}")
    hbar = _real(data, "hbar", positive=True) if "hbar" in data else 1.0

    H = _hermitian("hamiltonian", data["hamiltonian"], dim)

    try:
        v0 = vector_from_json(data["initial_state"])
    except TypeError as exc:
        raise ConfigError("initial_state", str(exc)) from None
    if v0.size != dim:
        raise ConfigError("initial_state", f"expected {dim} amplitudes, got {v0.size}")
    if np.max(np.abs(v0)) <= EPS_ZERO:
        raise ConfigError("initial_state", "all amplitudes vanish")

    times = _times(data["times"])

    raw_obs = data.get("observables", {})
    if not isinstance(raw_obs, dict):
        raise ConfigError("observables", "expected a mapping of name to matrix")
    observables = {}
    for name, raw in raw_obs.items():
        if not isinstance(name, str) or not name or "," in name:
            raise ConfigError("observables", f"invalid observable name {name!r}")
        observables[name] = _hermitian(f"observables.{name}", raw, dim)

    out = data.get("output_path")
    if out is not None and not isinstance(out, str):
        raise ConfigError("output_path", "expected a string")

    return ScenarioConfig(dim, H, v0, times, hbar, observables, out)


def load_config(path):
    """Read a scenario file; ``.yaml``/``.yml`` as YAML, anything else as JSON."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("<file>", f"cannot read {path}: {exc.strerror}") from None
    try:
        if path.suffix.lower() in (".yaml", ".yml"):
            import yaml

            data = yaml.safe_load(text)
        else:
            data = json.loads(text)
    except Exception as exc:
        raise ConfigError("<file>", f"cannot parse {path}: {exc}") from None
    return parse_config(data)
