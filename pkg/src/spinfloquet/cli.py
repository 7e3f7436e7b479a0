"""Command-line front end.

Subcommands:
    floquet   print the dressed-state quantities for one field point
    flip      print flip probabilities and the scenario breakdown for a pulse
    sweep     run a (H0, tau0) grid sweep from a JSON config
    check     run the built-in consistency suites (closed forms vs direct
              integration and sampling)

Exit codes: 0 success, 1 usage error, 2 runtime or I/O error, 3 check failure.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from .decay import DecayModel, applicability_check, decay_rate
from .errors import ConfigError, DomainError, UnitError
from .floquet import DriveField, solve_floquet
from .pulse import (PulseSpec, flip_anisotropy, flip_result, induced_spin,
                    scenario_composition)
from .sweep import default_threads, load_config, run_sweep, write_outputs
from .tdse import flip_probability_tdse, monte_carlo_flip, quasienergies_from_monodromy
from .units import CONSTANTS, convert, photon_energy_to_omega

__all__ = ["cli_dispatch", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems via exceptions so the
    dispatcher controls the exit code (argparse would exit with 2)."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _add_field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--photon-energy-ev", type=float, required=True,
                   help="drive photon energy hbar*omega0 in eV")
    p.add_argument("--h0", type=float, required=True,
                   help="rotating-field amplitude (give --h0-unit)")
    p.add_argument("--h0-unit", choices=["gauss", "tesla"], required=True,
                   help="unit of --h0")
    p.add_argument("--helicity", type=int, choices=[1, -1], default=1,
                   help="drive rotation sense (default +1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinfloquet",
                     description="Dressed-state spin dynamics in a rotating field.")
    parser.add_argument("--version", action="version",
                        version=f"spinfloquet {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_floquet = sub.add_parser("floquet", parents=[],
                               help="dressed-state quantities for one field")
    _add_field_args(p_floquet)
    p_floquet.add_argument("--quiet", action="store_true",
                           help="suppress informational output")

    p_flip = sub.add_parser("flip", help="flip probabilities for one pulse")
    _add_field_args(p_flip)
    p_flip.add_argument("--tau0", type=float, required=True,
                        help="pulse duration (give --tau0-unit)")
    p_flip.add_argument("--tau0-unit", choices=["s", "ns", "ps", "fs"],
                        required=True, help="unit of --tau0")
    p_flip.add_argument("--decay", choices=["radiative", "phenomenological"],
                        default="radiative", help="decay model (default radiative)")
    p_flip.add_argument("--tau-s", type=float, default=None,
                        help="spin lifetime for the phenomenological model")
    p_flip.add_argument("--tau-s-unit", choices=["s", "ns", "ps", "fs"],
                        default=None, help="unit of --tau-s")
    p_flip.add_argument("--n-spins", type=int, default=2,
                        help="even spin count for the S_z line (default 2)")
    p_flip.add_argument("--quiet", action="store_true",
                        help="suppress informational output")

    p_sweep = sub.add_parser("sweep", help="grid sweep from a JSON config")
    p_sweep.add_argument("--config", required=True, metavar="PATH",
                         help="JSON sweep configuration")
    p_sweep.add_argument("--output", metavar="PATH", default=None,
                         help="output file (overrides the config)")
    p_sweep.add_argument("--format", choices=["csv", "json"], default=None,
                         help="output format (overrides the config)")
    p_sweep.add_argument("--threads", type=int, default=None,
                         help="worker threads (overrides config and "
                              "SPINFLOQUET_THREADS)")
    p_sweep.add_argument("--seed", type=int, default=None,
                         help="seed recorded in JSON metadata")
    p_sweep.add_argument("--quiet", action="store_true",
                         help="suppress the summary line")

    p_check = sub.add_parser("check", help="run built-in consistency suites")
    p_check.add_argument("--seed", type=int, default=20260825,
                         help="seed for the randomized suites")
    p_check.add_argument("--quiet", action="store_true",
                         help="only report failures")

    return parser


def _cmd_floquet(args) -> int:
    h0_gauss = convert(args.h0, args.h0_unit, "gauss")
    omega0 = photon_energy_to_omega(args.photon_energy_ev)
    sol = solve_floquet(DriveField(h0_gauss=h0_gauss, omega0=omega0,
                                   helicity=args.helicity))
    lines = [
        f"x       = {sol.x:.12g}",
        f"Omega   = {sol.Omega:.12g} rad/s",
        f"Omega0  = {sol.Omega0:.12g} rad/s"
        f"  (hbar*Omega0 = {CONSTANTS.hbar_eV_s * sol.Omega0:.12g} eV)",
        f"eps_g   = {sol.eps_g:.12g} eV",
        f"eps_e   = {sol.eps_e:.12g} eV",
        f"A       = {sol.A:.12g}",
        f"B       = {sol.B:.12g}",
    ]
    print("\n".join(lines))
    return 0


def _cmd_flip(args) -> int:
    h0_gauss = convert(args.h0, args.h0_unit, "gauss")
    omega0 = photon_energy_to_omega(args.photon_energy_ev)
    tau0 = convert(args.tau0, args.tau0_unit, "s")
    if args.decay == "phenomenological":
        if args.tau_s is None or args.tau_s_unit is None:
            raise _UsageError("spinfloquet flip: --decay phenomenological "
                              "requires --tau-s and --tau-s-unit")
        tau_s = convert(args.tau_s, args.tau_s_unit, "s")
        verdict = applicability_check(omega0, tau_s)
        if not verdict.ok:
            print(f"warning: omega0 * tau_s = {verdict.product:.3g} is below "
                  f"{verdict.threshold:g}; results are qualitative only",
                  file=sys.stderr)
        model = DecayModel.phenomenological(tau_s)
    else:
        model = DecayModel.radiative()
    if h0_gauss == 0.0:
        # zero field: nothing couples the spin states, nothing flips
        gamma = 1.0 / model.tau_s if model.kind == "phenomenological" else 0.0
        print(f"Gamma   = {gamma:.12g} 1/s  (Gamma*tau0 = {gamma * tau0:.12g})")
        print("W_minus = 0")
        print("W_plus  = 0")
        print("Delta_W = 0")
        print(f"S_z     = {induced_spin(args.n_spins, 0.0):.12g} hbar "
              f"(n = {args.n_spins})")
        return 0
    field = DriveField(h0_gauss=h0_gauss, omega0=omega0, helicity=args.helicity)
    pulse = PulseSpec(field=field, tau0=tau0)
    sol = solve_floquet(field)
    gamma = decay_rate(sol, model)
    res = flip_result(pulse, gamma)
    print(f"Gamma   = {gamma:.12g} 1/s  (Gamma*tau0 = {gamma * tau0:.12g})")
    print(f"W_minus = {res.W_minus:.12g}")
    print(f"W_plus  = {res.W_plus:.12g}")
    print(f"Delta_W = {res.Delta_W:.12g}")
    print(f"S_z     = {induced_spin(args.n_spins, res.Delta_W):.12g} hbar "
          f"(n = {args.n_spins})")
    if not args.quiet:
        for initial in ("minus", "plus"):
            b = scenario_composition(pulse, gamma, initial)
            print(f"scenario({initial}): w = {b.w:.12g}, "
                  f"with_emission = {b.flip_with_emission:.12g}, "
                  f"without_emission = {b.flip_without_emission:.12g}, "
                  f"total = {b.total:.12g}")
    return 0


def _cmd_sweep(args) -> int:
    config = load_config(args.config)
    if args.threads is not None:
        threads = args.threads
    elif "threads" in config.raw:
        threads = config.threads
    else:
        threads = default_threads()
    if threads < 1:
        raise _UsageError("spinfloquet sweep: --threads must be >= 1")
    from dataclasses import replace
    config = replace(config, threads=threads)
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    fmt = args.format or config.output_format
    path = args.output or config.output_path
    if path is None:
        raise _UsageError("spinfloquet sweep: no output path; give --output "
                          "or set output.path in the config")
    table = run_sweep(config)
    write_outputs(table, fmt, path, config=config)
    if not args.quiet:
        print(f"wrote {table.data.shape[0]} rows "
              f"({config.h0_gauss.size} H0 x {config.tau0_s.size} tau0) to {path}")
    return 0


def _check_quasienergies(rng, report) -> bool:
    omega0 = photon_energy_to_omega(1.0)
    hbar_w0 = CONSTANTS.hbar_eV_s * omega0
    ok = True
    for x in np.linspace(0.1, 5.0, 8):
        h0 = x * hbar_w0 / (2.0 * CONSTANTS.mu_B_eV_per_tesla) * 1e4
        field = DriveField(h0_gauss=h0, omega0=omega0)
        sol = solve_floquet(field)
        eps = quasienergies_from_monodromy(field)
        worst = 0.0
        for target in (sol.eps_g, sol.eps_e):
            d = min(abs(((target - e) % hbar_w0 + 1.5 * hbar_w0) % hbar_w0
                        - 0.5 * hbar_w0) for e in eps)
            worst = max(worst, d)
        ok = ok and worst < 1e-8 * hbar_w0
    report("quasienergies: monodromy vs closed form on x in [0.1, 5]", ok)
    return ok


def _check_rabi(rng, report) -> bool:
    from .pulse import flip_probability
    omega0 = photon_energy_to_omega(1.0)
    hbar_w0 = CONSTANTS.hbar_eV_s * omega0
    ok = True
    for _ in range(10):
        x = rng.uniform(0.05, 5.0)
        phase = rng.uniform(0.3, 20.0 * math.pi)
        h0 = x * hbar_w0 / (2.0 * CONSTANTS.mu_B_eV_per_tesla) * 1e4
        field = DriveField(h0_gauss=h0, omega0=omega0,
                           helicity=1 if rng.random() < 0.5 else -1)
        sol = solve_floquet(field)
        pulse = PulseSpec(field=field, tau0=phase / sol.Omega)
        for initial in ("plus", "minus"):
            closed = flip_probability(pulse, 0.0, initial)
            direct = flip_probability_tdse(pulse, initial)
            ok = ok and abs(closed - direct) < 1e-8
    report("rabi: closed-form flip vs direct integration, Gamma = 0", ok)
    return ok


def _check_scenarios(rng, report) -> bool:
    from .pulse import flip_probability
    omega0 = photon_energy_to_omega(1.0)
    hbar_w0 = CONSTANTS.hbar_eV_s * omega0
    worst = 0.0
    for _ in range(500):
        x = rng.uniform(0.0, 5.0)
        gamma_tau = rng.uniform(0.0, 8.0)
        phase = rng.uniform(1e-3, 20.0 * math.pi)
        h0 = x * hbar_w0 / (2.0 * CONSTANTS.mu_B_eV_per_tesla) * 1e4
        hel = 1 if rng.random() < 0.5 else -1
        field = DriveField(h0_gauss=h0, omega0=omega0, helicity=hel)
        sol = solve_floquet(field)
        tau0 = phase / sol.Omega
        pulse = PulseSpec(field=field, tau0=tau0)
        gamma = gamma_tau / tau0
        for initial in ("plus", "minus"):
            closed = flip_probability(pulse, gamma, initial)
            total = scenario_composition(pulse, gamma, initial).total
            worst = max(worst, abs(closed - total))
    ok = worst < 1e-12
    report("scenarios: emission decomposition vs closed form", ok)
    return ok


def _check_monte_carlo(rng, report) -> bool:
    from .pulse import flip_probability
    omega0 = photon_energy_to_omega(1.0)
    hbar_w0 = CONSTANTS.hbar_eV_s * omega0
    ok = True
    for _ in range(3):
        x = rng.uniform(0.2, 3.0)
        h0 = x * hbar_w0 / (2.0 * CONSTANTS.mu_B_eV_per_tesla) * 1e4
        field = DriveField(h0_gauss=h0, omega0=omega0)
        sol = solve_floquet(field)
        tau0 = rng.uniform(1.0, 30.0) / sol.Omega
        pulse = PulseSpec(field=field, tau0=tau0)
        gamma = rng.uniform(0.0, 3.0) / tau0
        exact = flip_probability(pulse, gamma, "minus")
        mc = monte_carlo_flip(pulse, gamma, "minus", 50_000,
                              seed=int(rng.integers(2**31)))
        margin = 4.0 * max(mc.std_error, 1e-4)
        ok = ok and abs(mc.estimate - exact) < margin
    report("monte-carlo: sampled flip probability vs closed form", ok)
    return ok


def _cmd_check(args) -> int:
    rng = np.random.Generator(np.random.Philox(args.seed))
    failures = []

    def report(name: str, ok: bool) -> None:
        if not ok:
            failures.append(name)
        if not args.quiet or not ok:
            print(f"{'ok  ' if ok else 'FAIL'}  {name}")

    _check_quasienergies(rng, report)
    _check_rabi(rng, report)
    _check_scenarios(rng, report)
    _check_monte_carlo(rng, report)
    if failures:
        print(f"{len(failures)} check(s) failed", file=sys.stderr)
        return 3
    if not args.quiet:
        print("all checks passed")
    return 0


def cli_dispatch(argv: list[str]) -> int:
    """Parse argv (without the program name) and run one subcommand."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError(parser.format_usage()
                              + "spinfloquet: a subcommand is required")
        handler = {"floquet": _cmd_floquet, "flip": _cmd_flip,
                   "sweep": _cmd_sweep, "check": _cmd_check}[args.command]
        return handler(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (ConfigError, UnitError, DomainError) as exc:
        print(f"spinfloquet: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help/--version
        return int(exc.code or 0)
    except OSError as exc:
        print(f"spinfloquet: i/o error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"spinfloquet: runtime error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))
