"""Parameter sweeps over (H0, tau0) grids with CSV/JSON output.

Configuration comes from a JSON document with explicit units on every
dimensional quantity (bare numbers are refused); the schema ships with the
package in ``schemas/sweep_config.schema.json``.  Rows are evaluated per H0
(vectorized over tau0) by a thread pool and written into a pre-sized buffer
indexed by grid position, so the output is row-major (H0 outer, tau0 inner)
and byte-identical for any thread count.
"""

from __future__ import annotations

import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import __version__
from .decay import DecayModel, applicability_check, decay_rate
from .errors import ConfigError
from .floquet import DriveField, solve_floquet
from .units import convert, photon_energy_to_omega

__all__ = [
    "SweepConfig",
    "SweepRow",
    "SweepTable",
    "SWEEP_COLUMNS",
    "load_config",
    "run_sweep",
    "write_outputs",
    "read_csv",
    "read_json",
]

SWEEP_COLUMNS = ("H0", "tau0", "x", "Omega", "Omega0", "Gamma",
                 "W_minus", "W_plus", "Delta_W", "S_z")

MAX_GRID_POINTS = 10_000_000

_FIELD_UNITS = ("gauss", "tesla")
_TIME_UNITS = ("s", "ns", "ps", "fs")


@dataclass(frozen=True)
class SweepRow:
    """One grid point: H0 in gauss, tau0 in s, frequencies in rad/s,
    Gamma in 1/s, probabilities dimensionless, S_z in hbar units."""

    H0: float
    tau0: float
    x: float
    Omega: float
    Omega0: float
    Gamma: float
    W_minus: float
    W_plus: float
    Delta_W: float
    S_z: float


@dataclass(frozen=True)
class SweepTable:
    """Sweep results: column names plus a (n_rows, n_cols) float array."""

    columns: tuple[str, ...]
    data: np.ndarray

    def rows(self):
        for r in self.data:
            yield SweepRow(*map(float, r))

    def column(self, name: str) -> np.ndarray:
        return self.data[:, self.columns.index(name)]


@dataclass(frozen=True)
class SweepConfig:
    """Validated sweep parameters in canonical units (gauss, seconds)."""

    photon_energy_ev: float
    h0_gauss: np.ndarray
    tau0_s: np.ndarray
    decay: DecayModel
    helicity: int = 1
    n_spins: int = 2
    output_path: str | None = None
    output_format: str = "csv"
    threads: int = 1
    seed: int = 0
    raw: dict = field(default_factory=dict, repr=False)


def _schema():
    with resources.files("spinfloquet").joinpath(
            "schemas/sweep_config.schema.json").open("r") as fh:
        return json.load(fh)


def _grid_from_spec(spec: dict, name: str, units: tuple[str, ...],
                    to_unit: str, allow_zero: bool) -> np.ndarray:
    unit = spec["unit"]
    if unit not in units:
        raise ConfigError(f"unit must be one of {units}, got {unit!r}", field=name)
    if "values" in spec:
        values = np.asarray(spec["values"], dtype=float)
    else:
        lo, hi, count = spec["min"], spec["max"], spec["count"]
        spacing = spec.get("spacing", "lin")
        if count == 1:
            if lo != hi:
                raise ConfigError("count 1 needs min == max", field=name)
            values = np.array([lo], dtype=float)
        elif spacing == "lin":
            values = np.linspace(lo, hi, count)
        else:
            if lo <= 0.0:
                raise ConfigError("log spacing needs min > 0", field=name)
            values = np.geomspace(lo, hi, count)
    if values.size == 0:
        raise ConfigError("grid must be non-empty", field=name)
    if not np.all(np.isfinite(values)):
        raise ConfigError("grid values must be finite", field=name)
    if values.size > 1 and not np.all(np.diff(values) > 0.0):
        raise ConfigError("grid values must be strictly increasing", field=name)
    low = 0.0 if allow_zero else np.nextafter(0.0, 1.0)
    if values[0] < low:
        kind = ">= 0" if allow_zero else "> 0"
        raise ConfigError(f"grid values must be {kind}", field=name)
    return np.array([convert(v, unit, to_unit) for v in values])


def _decay_from_spec(spec: dict) -> DecayModel:
    if spec["model"] == "radiative":
        return DecayModel.radiative()
    tau_s = convert(spec["tau_s"], spec["unit"], "s")
    if not (math.isfinite(tau_s) and tau_s > 0.0):
        raise ConfigError(f"tau_s must be finite and > 0, got {tau_s}", field="decay")
    return DecayModel.phenomenological(tau_s)


def config_from_dict(doc: dict) -> SweepConfig:
    """Build a SweepConfig from a parsed JSON document, validating it
    against the shipped schema plus the cross-field grid rules."""
    import jsonschema

    try:
        jsonschema.validate(doc, _schema())
    except jsonschema.ValidationError as exc:
        path = ".".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(exc.message, field=path) from exc

    h0 = _grid_from_spec(doc["h0_grid"], "h0_grid", _FIELD_UNITS, "gauss",
                         allow_zero=True)
    tau0 = _grid_from_spec(doc["tau0_grid"], "tau0_grid", _TIME_UNITS, "s",
                           allow_zero=False)
    total = h0.size * tau0.size
    if total > MAX_GRID_POINTS:
        raise ConfigError(
            f"grid has {total} points, above the {MAX_GRID_POINTS} limit; "
            "split the sweep into smaller configs", field="h0_grid")
    n_spins = doc.get("n_spins", 2)
    if n_spins < 0 or n_spins % 2 != 0:
        raise ConfigError(f"n_spins must be even and >= 0, got {n_spins}",
                          field="n_spins")
    out = doc.get("output", {})
    return SweepConfig(
        photon_energy_ev=float(doc["photon_energy_ev"]),
        h0_gauss=h0,
        tau0_s=tau0,
        decay=_decay_from_spec(doc["decay"]),
        helicity=doc.get("helicity", 1),
        n_spins=int(n_spins),
        output_path=out.get("path"),
        output_format=out.get("format", "csv"),
        threads=int(doc.get("threads", 1)),
        seed=int(doc.get("seed", 0)),
        raw=doc,
    )


def load_config(path: str) -> SweepConfig:
    """Read and validate a sweep configuration file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"config root must be a JSON object, got {type(doc).__name__}")
    return config_from_dict(doc)


def default_threads() -> int:
    """Thread count from SPINFLOQUET_THREADS, defaulting to 1."""
    raw = os.environ.get("SPINFLOQUET_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(n, 1)


def _eval_h0_block(omega0: float, helicity: int, h0_gauss: float,
                   tau0: np.ndarray, decay: DecayModel, n_spins: int) -> np.ndarray:
    """All rows for one H0 value, vectorized over tau0."""
    if h0_gauss == 0.0:
        # zero field: no coupling, nothing flips; dressed states degenerate
        # with the bare ones, so the closed forms are bypassed entirely
        block = np.zeros((tau0.size, len(SWEEP_COLUMNS)))
        block[:, 1] = tau0
        block[:, 3] = omega0
        block[:, 4] = omega0 - helicity * omega0
        if decay.kind == "phenomenological":
            block[:, 5] = 1.0 / decay.tau_s
        return block
    sol = solve_floquet(DriveField(h0_gauss=h0_gauss, omega0=omega0,
                                   helicity=helicity))
    gamma = decay_rate(sol, decay)
    one_minus_e = -np.expm1(-gamma * tau0)
    rabi = (sol.coupling / sol.Omega) ** 2 * np.sin(0.5 * sol.Omega * tau0) ** 2
    q_minus = sol.A**2
    q_plus = sol.B**2
    w_minus = q_minus**2 * one_minus_e + rabi * (1.0 - q_minus * one_minus_e)
    w_plus = q_plus**2 * one_minus_e + rabi * (1.0 - q_plus * one_minus_e)
    delta = w_minus - w_plus
    block = np.empty((tau0.size, len(SWEEP_COLUMNS)))
    block[:, 0] = h0_gauss
    block[:, 1] = tau0
    block[:, 2] = sol.x
    block[:, 3] = sol.Omega
    block[:, 4] = sol.Omega0
    block[:, 5] = gamma
    block[:, 6] = w_minus
    block[:, 7] = w_plus
    block[:, 8] = delta
    block[:, 9] = 0.5 * n_spins * delta
    return block


def run_sweep(config: SweepConfig) -> SweepTable:
    """Evaluate the full grid, H0 outer and tau0 inner.

    Emits an applicability warning to stderr when the phenomenological
    lifetime is short against the drive period, then proceeds.
    """
    omega0 = photon_energy_to_omega(config.photon_energy_ev)
    if config.decay.kind == "phenomenological":
        verdict = applicability_check(omega0, config.decay.tau_s)
        if not verdict.ok:
            print(f"warning: omega0 * tau_s = {verdict.product:.3g} is below "
                  f"{verdict.threshold:g}; closed-form flip probabilities are "
                  "qualitative only", file=sys.stderr)

    n_tau = config.tau0_s.size
    data = np.empty((config.h0_gauss.size * n_tau, len(SWEEP_COLUMNS)))

    def work(i: int) -> None:
        block = _eval_h0_block(omega0, config.helicity, float(config.h0_gauss[i]),
                               config.tau0_s, config.decay, config.n_spins)
        data[i * n_tau:(i + 1) * n_tau] = block

    threads = max(int(config.threads), 1)
    if threads == 1:
        for i in range(config.h0_gauss.size):
            work(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, range(config.h0_gauss.size)))
    return SweepTable(columns=SWEEP_COLUMNS, data=data)


def write_outputs(table: SweepTable, fmt: str, path: str,
                  config: SweepConfig | None = None) -> None:
    """Write the table as CSV or JSON.

    CSV: header row with the exact column names, one line per grid point,
    full round-trip precision scientific notation, newline-terminated.
    JSON: {"metadata": {config echo, version, seed}, "columns", "rows"}.
    """
    if fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(",".join(table.columns) + "\n")
            for r in table.data:
                fh.write(",".join(f"{v:.17e}" for v in r) + "\n")
    elif fmt == "json":
        payload = {
            "metadata": {
                "config": config.raw if config is not None else None,
                "version": __version__,
                "seed": config.seed if config is not None else None,
            },
            "columns": list(table.columns),
            "rows": [[float(v) for v in r] for r in table.data],
        }
        with open(path, "w", encoding="utf-8", newline="") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    else:
        raise ConfigError(f"unknown output format {fmt!r}, expected csv or json")


def read_csv(path: str) -> SweepTable:
    """Read back a CSV written by write_outputs (exact round trip)."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        data = np.array([[float(v) for v in line.split(",")]
                         for line in fh if line.strip()])
    if data.size == 0:
        data = data.reshape(0, len(header))
    return SweepTable(columns=tuple(header), data=data)


def read_json(path: str) -> tuple[dict, SweepTable]:
    """Read back a JSON output; returns (metadata, table)."""
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    data = np.asarray(payload["rows"], dtype=float)
    if data.size == 0:
        data = data.reshape(0, len(payload["columns"]))
    return payload["metadata"], SweepTable(columns=tuple(payload["columns"]),
                                           data=data)
