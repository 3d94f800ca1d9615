"""Command-line front end.

Each subcommand runs one experiment and writes its rows as CSV (default) or
as JSON ``{"meta": {...}, "rows": [...]}``. Row values are printed with 15
significant digits; parameters echoed in ``meta`` keep full precision.
``--config FILE`` loads a JSON document shaped like the ``meta`` block
(``experiment``, ``parameters``, ``seed``, and optionally
``output_format``/``output_path``); flags on the command line override it.

Exit status: 0 success, 1 usage error, 2 domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import secrets
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from . import bell, dirac, mz
from .dynamics import ZeemanParams
from .errors import TimeQubitError
from .qubit import BlochVector, rotate, state_from_bloch

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _vec3(value) -> list[float]:
    if isinstance(value, str):
        parts = [p for p in value.replace(" ", "").split(",") if p]
    else:
        parts = list(value)
    if len(parts) != 3:
        raise ValueError(f"expected 3 components, got {value!r}")
    return [float(p) for p in parts]


def _float(value) -> float:
    if isinstance(value, bool):
        raise ValueError(f"expected a number, got {value!r}")
    return float(value)


def _int(value) -> int:
    if isinstance(value, bool):
        raise ValueError(f"expected an integer, got {value!r}")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"expected an integer, got {value!r}")
        return int(value)
    return int(value)


_R2 = 1 / math.sqrt(2)
_SETTINGS = {
    "a0": (_vec3, [0.0, 0.0, 1.0]),
    "a1": (_vec3, [1.0, 0.0, 0.0]),
    "b0": (_vec3, [_R2, 0.0, _R2]),
    "b1": (_vec3, [-_R2, 0.0, _R2]),
}
_TRACE = {"t_max": (_float, 4 * math.pi), "steps": (_int, 64)}

# experiment -> {parameter: (converter, default)}
PARAMETERS: dict[str, dict[str, tuple[Callable, Any]]] = {
    "mz-fringes": {
        "omega": (_float, 1.0),
        **_TRACE,
        "lambda": (_float, 0.0),
        "axis": (_vec3, [0.0, 0.0, 1.0]),
        "spin_in": (_vec3, [1.0, 0.0, 0.0]),
    },
    "chsh": dict(_SETTINGS),
    "chsh-sample": {**_SETTINGS, "shots": (_int, 100_000)},
    "bloch-trace": {
        "omega": (_float, 1.0),
        "axis": (_vec3, [0.0, 0.0, 1.0]),
        "initial": (_vec3, [1.0, 0.0, 0.0]),
        **_TRACE,
    },
    "dirac-precess": {
        "m": (_float, 1.0),
        "p": (_vec3, [0.0, 0.0, 1.0]),
        "helicity": (_int, 1),
        "initial": (_vec3, [0.0, 0.0, 1.0]),
        **_TRACE,
    },
    "dirac-spectrum": {"m": (_float, 1.0), "p": (_vec3, [0.0, 0.0, 1.0]), "steps": (_int, 64)},
    "lhv-table": {},
}

COLUMNS = {
    "mz-fringes": ["phase", "p_d1", "p_d2"],
    "chsh": ["e00", "e01", "e10", "e11", "s"],
    "chsh-sample": ["setting_pair", "n_pp", "n_pm", "n_mp", "n_mm", "e_hat"],
    "bloch-trace": ["t", "r_x", "r_y", "r_z"],
    "dirac-precess": ["t", "r_x", "r_y", "r_z"],
    "dirac-spectrum": ["m", "px", "py", "pz", "e_minus", "e_plus"],
    "lhv-table": ["a0", "a1", "b0", "b1", "s"],
}

_CONFIG_KEYS = {"experiment", "parameters", "seed", "output_format", "output_path"}


@dataclass
class RunConfig:
    experiment: str
    parameters: dict = field(default_factory=dict)
    seed: Optional[int] = None
    output_format: str = "csv"
    output_path: Optional[str] = None

    def resolved(self) -> dict:
        """Parameters with defaults filled in, converted to canonical types."""
        spec = PARAMETERS[self.experiment]
        out = {}
        for key, (conv, default) in spec.items():
            out[key] = conv(self.parameters[key]) if key in self.parameters else default
        return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _flag(key: str) -> str:
    return "--" + key.replace("_", "-")


def _convert_param(key: str, conv: Callable, value):
    try:
        return conv(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid value for {key!r}: {exc}") from None


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path!r} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("config must be a JSON object")
    unknown = set(doc) - _CONFIG_KEYS
    if unknown:
        raise UsageError(f"unknown config key {sorted(unknown)[0]!r}")
    return doc


def _top_level_help() -> str:
    lines = ["usage: timequbit EXPERIMENT [--config FILE] [--format {csv,json}] [--output PATH] [--seed N] [params]", "", "experiments:"]
    for name, spec in PARAMETERS.items():
        flags = " ".join(_flag(k) for k in spec) or "(no parameters)"
        lines.append(f"  {name:<15} {flags}")
    lines.append("")
    lines.append("Run 'timequbit EXPERIMENT --help' for the options of one experiment.")
    return "\n".join(lines)


def parse_args(argv) -> RunConfig:
    """Map command-line tokens (and an optional JSON config) to a :class:`RunConfig`."""
    argv = list(argv)
    pre = _Parser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    doc = _load_config(known.config) if known.config else {}

    experiment = doc.get("experiment")
    if rest and not rest[0].startswith("-"):
        cli_exp = rest.pop(0)
        if cli_exp not in PARAMETERS:
            raise UsageError(f"unknown experiment {cli_exp!r}; choose from {', '.join(PARAMETERS)}")
        if experiment is not None and experiment != cli_exp:
            raise UsageError(f"experiment {cli_exp!r} conflicts with config experiment {experiment!r}")
        experiment = cli_exp
    if experiment is None:
        if "-h" in rest or "--help" in rest:
            print(_top_level_help())
            raise SystemExit(EXIT_OK)
        raise UsageError("missing required key 'experiment'")
    if experiment not in PARAMETERS:
        raise UsageError(f"unknown experiment {experiment!r}")
    spec = PARAMETERS[experiment]

    parser = _Parser(prog=f"timequbit {experiment}", argument_default=argparse.SUPPRESS)
    parser.add_argument("--output", dest="output_path")
    parser.add_argument("--format", dest="output_format", choices=["csv", "json"])
    parser.add_argument("--seed", type=int)
    for key in spec:
        parser.add_argument(_flag(key), dest=key)
    ns = vars(parser.parse_args(rest))

    params = {}
    file_params = doc.get("parameters", {}) or {}
    if not isinstance(file_params, dict):
        raise UsageError("config 'parameters' must be an object")
    for key, value in file_params.items():
        if key not in spec:
            raise UsageError(f"unknown parameter {key!r} for {experiment}")
        params[key] = _convert_param(key, spec[key][0], value)
    for key in spec:
        if key in ns:
            params[key] = _convert_param(key, spec[key][0], ns[key])

    seed = ns.get("seed", doc.get("seed"))
    if seed is not None:
        seed = _convert_param("seed", _int, seed)
        if not 0 <= seed < 2**64:
            raise UsageError(f"invalid value for 'seed': {seed} is not an unsigned 64-bit integer")
    fmt = ns.get("output_format", doc.get("output_format", "csv"))
    if fmt not in ("csv", "json"):
        raise UsageError(f"invalid value for 'output_format': {fmt!r}")
    return RunConfig(experiment, params, seed, fmt, ns.get("output_path", doc.get("output_path")))


def _grid(t_max: float, steps: int) -> np.ndarray:
    if steps < 2:
        raise TimeQubitError(f"steps must be >= 2, got {steps}")
    return np.linspace(0.0, t_max, steps)


def _settings(p):
    return (
        bell.MeasurementSetting(p["a0"], "time"),
        bell.MeasurementSetting(p["a1"], "time"),
        bell.MeasurementSetting(p["b0"], "spin"),
        bell.MeasurementSetting(p["b1"], "spin"),
    )


def _mz_fringes(p, seed):
    cfg = mz.MzConfig(
        zeeman=ZeemanParams(p["omega"], tuple(p["axis"])),
        traversal_time=0.0,
        spin_in=state_from_bloch(p["spin_in"]),
        dephasing=p["lambda"],
    )
    return [list(row) for row in mz.fringe_sweep(cfg, p["omega"] * p["t_max"], p["steps"])]


def _chsh(p, seed):
    r = bell.chsh(bell.bell_state(), *_settings(p))
    return [[r.e00, r.e01, r.e10, r.e11, r.s]]


def _chsh_sample(p, seed):
    records, e_hats, s_hat = bell.sample_chsh(bell.bell_state(), *_settings(p), p["shots"], seed)
    rows = [[key, *records[key].counts, e_hats[key]] for key in ("00", "01", "10", "11")]
    rows.append(["s_hat", None, None, None, None, s_hat])
    return rows


def _bloch_trace(p, seed):
    r0 = BlochVector.from_array(p["initial"])
    return [[t, *rotate(r0, p["axis"], p["omega"] * t)] for t in _grid(p["t_max"], p["steps"])]


def _dirac_precess(p, seed):
    params = dirac.DiracParams(p["m"], tuple(p["p"]))
    times = _grid(p["t_max"], p["steps"])
    traj = dirac.precess(BlochVector.from_array(p["initial"]), params, p["helicity"], times)
    return [[t, *r] for t, r in zip(times, traj)]


def _dirac_spectrum(p, seed):
    from .qla import herm_eig

    rows = []
    for frac in _grid(1.0, p["steps"]):
        params = dirac.DiracParams(p["m"], tuple(frac * np.asarray(p["p"])))
        vals, _ = herm_eig(dirac.dirac_hamiltonian(params))
        rows.append([params.mass, *params.momentum, vals[0], vals[-1]])
    return rows


def _lhv_table(p, seed):
    return [list(row) for row in bell.lhv_table()]


RUNNERS = {
    "mz-fringes": _mz_fringes,
    "chsh": _chsh,
    "chsh-sample": _chsh_sample,
    "bloch-trace": _bloch_trace,
    "dirac-precess": _dirac_precess,
    "dirac-spectrum": _dirac_spectrum,
    "lhv-table": _lhv_table,
}


def execute(config: RunConfig) -> tuple[dict, list[str], list[list]]:
    """Run an experiment and return ``(meta, columns, rows)`` without formatting."""
    params = config.resolved()
    seed = config.seed
    if config.experiment == "chsh-sample" and seed is None:
        seed = secrets.randbits(64)
    rows = RUNNERS[config.experiment](params, seed)
    meta = {"experiment": config.experiment, "parameters": params, "seed": seed}
    return meta, COLUMNS[config.experiment], rows


def _num(x):
    if x is None or isinstance(x, str):
        return x
    if isinstance(x, (bool, int, np.integer)):
        return int(x)
    return float(format(float(x), ".15g"))


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".15g")


def format_output(meta: dict, columns: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        doc = {
            # parameters keep full precision so the meta block re-parses exactly
            "meta": {**meta, "parameters": {k: _jsonable(v) for k, v in meta["parameters"].items()}},
            "rows": [{c: _num(v) for c, v in zip(columns, row)} for row in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, np.integer)):
        return int(v)
    return float(v)


def run(config: RunConfig, stdout=None) -> int:
    """Execute ``config`` and write its output; return the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    try:
        meta, columns, rows = execute(config)
    except TimeQubitError as exc:
        print(f"timequbit: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = format_output(meta, columns, rows, config.output_format)
    try:
        if config.output_path:
            with open(config.output_path, "w", newline="") as fh:
                fh.write(text)
        else:
            stdout.write(text)
    except OSError as exc:
        print(f"timequbit: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv=None, stdout=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"timequbit: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"timequbit: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return run(config, stdout)


if __name__ == "__main__":
    sys.exit(main())
