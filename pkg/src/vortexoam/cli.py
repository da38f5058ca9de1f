"""Command-line front end.

Subcommands: ov-matrix, ev-matrix, y-alpha, selection-table, ledge,
dichroism, verify.  Data subcommands emit CSV or JSON records (stdout or
--out PATH); verify prints one summary line per invariant.  Exit codes:
0 success, 1 domain error, 2 config/usage error, 3 non-converged quadrature.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .config import RunConfig, format_mj
from .errors import ConfigError, NonConvergedError, VortexOamError
from .ev_coupling import FixedGeometry, ev_matrix_element, kernel_coefficients, y_alpha_result
from .ledge import (
    DensityOfStates,
    dichroism,
    edge_kernel,
    enumerate_edge_transitions,
    selection_rule_kernel,
)
from .matter import PhotonOccupation, enumerate_core_states
from .ov_coupling import dipole_matrix_element, ov_com_photon_factor
from .records import ResultRecord, emit

DATA_SUBCOMMANDS = ("ov-matrix", "ev-matrix", "y-alpha", "selection-table", "ledge", "dichroism")


def _record(cfg: RunConfig, subcommand: str, inputs, outputs, diagnostics, header, rows):
    return ResultRecord(
        subcommand=subcommand,
        inputs=inputs,
        outputs=outputs,
        diagnostics=diagnostics,
        defaults=cfg.defaults_block(),
        version=__version__,
        table_header=header,
        table_rows=rows,
    )


def _demo_dos() -> DensityOfStates:
    """Built-in asymmetric occupancy: weight max(0, m_j)."""
    w = {}
    for shell in ("3d_threehalf", "3d_fivehalf"):
        for st in enumerate_core_states(shell):
            w[(shell, st.two_mj)] = max(0.0, 0.5 * st.two_mj)
    return DensityOfStates(w)


def _build_y_alpha(cfg: RunConfig, args: dict):
    n = int(args["n"])
    f_val = float(args["F"])
    g_val = float(args["G"])
    value, res = y_alpha_result(n, f_val, g_val, cfg.tolerance, cfg.singular_margin)
    inputs = {"n": n, "F": f_val, "G": g_val}
    outputs = {"value": value, "imag_residual": res.value.imag}
    diagnostics = {
        "error_estimate": res.error_estimate,
        "evaluations": res.evaluations,
        "converged": res.converged,
    }
    header = ["n", "F", "G", "value", "error_estimate", "evaluations"]
    rows = [[n, f_val, g_val, value, res.error_estimate, res.evaluations]]
    return [_record(cfg, "y-alpha", inputs, outputs, diagnostics, header, rows)]


def _build_ledge(cfg: RunConfig, args: dict):
    choice = args.get("l", "both")
    signs = {"+1": (+1,), "-1": (-1,), "both": (+1, -1)}.get(choice)
    if signs is None:
        raise ConfigError(f"--l must be +1, -1 or both, got {choice!r}")
    header = [
        "beam_l",
        "edge",
        "initial_shell",
        "initial_mj",
        "final_shell",
        "final_mj",
        "strength",
    ]
    rows = []
    transitions = []
    for sign in signs:
        for t in enumerate_edge_transitions(sign, cfg.radial_factor):
            rows.append(
                [
                    sign,
                    t.edge,
                    t.initial.shell,
                    format_mj(t.initial.two_mj),
                    t.final.shell,
                    format_mj(t.final.two_mj),
                    t.strength,
                ]
            )
            transitions.append(
                {
                    "beam_l": sign,
                    "edge": t.edge,
                    "initial": {"shell": t.initial.shell, "mj": format_mj(t.initial.two_mj)},
                    "final": {"shell": t.final.shell, "mj": format_mj(t.final.two_mj)},
                    "strength": t.strength,
                }
            )
    inputs = {"l": choice, "radial_factor": cfg.radial_factor}
    outputs = {"transitions": transitions, "count": len(transitions)}
    return [_record(cfg, "ledge", inputs, outputs, {}, header, rows)]


def _build_dichroism(cfg: RunConfig, args: dict):
    if args.get("demo_dos"):
        dos = _demo_dos()
        dos_source = "demo"
    elif cfg.dos is not None:
        dos = cfg.dos
        dos_source = "config"
    else:
        raise ConfigError("dichroism needs [dos] blocks in the config (or --demo-dos)")
    mode = args.get("kernel", "selection-rule")
    if mode == "selection-rule":
        kernel = selection_rule_kernel()
    elif mode == "fixed":
        kernel = edge_kernel(cfg.build_geometry(), cfg.tolerance)
    else:
        raise ConfigError(f"--kernel must be selection-rule or fixed, got {mode!r}")
    result = dichroism(dos, kernel, cfg.radial_factor)
    inputs = {
        "dos_source": dos_source,
        "dos": {
            f"{shell}:{format_mj(two_mj)}": w
            for (shell, two_mj), w in sorted(dos.weights.items())
        },
        "kernel_mode": mode,
        "abs_C": abs(kernel.C),
        "abs_D": abs(kernel.D),
    }
    outputs = {
        "gamma_plus": result.gamma_plus,
        "gamma_minus": result.gamma_minus,
        "dichroism": result.dichroism,
        "per_edge": result.per_edge,
    }
    diagnostics = {"kernel_converged": kernel.converged}
    header = ["edge", "gamma_plus", "gamma_minus", "dichroism"]
    rows = [
        [edge, d["gamma_plus"], d["gamma_minus"], d["dichroism"]]
        for edge, d in result.per_edge.items()
    ]
    rows.append(["total", result.gamma_plus, result.gamma_minus, result.dichroism])
    return [_record(cfg, "dichroism", inputs, outputs, diagnostics, header, rows)]


def _build_selection_table(cfg: RunConfig, args: dict):
    lmax = int(args.get("lmax", 2))
    big_lmax = int(args.get("Lmax", 2))
    geo = cfg.build_geometry()
    if not isinstance(geo, FixedGeometry):
        raise ConfigError("selection-table needs a fixed geometry")
    header = ["dl", "dL", "dm", "active_channel", "coefficient_re", "coefficient_im"]
    rows = []
    entries = []
    for dl in range(-lmax, lmax + 1):
        kc = kernel_coefficients(dl, 0, geo, cfg.tolerance)
        for d_l_com in range(-big_lmax, big_lmax + 1):
            for dm in (-1, 0, 1):
                if dl + d_l_com == 1 and dm == 1:
                    channel, coeff = "plus", complex(kc.C)
                elif dl + d_l_com == -1 and dm == -1:
                    channel, coeff = "minus", complex(kc.D)
                elif dl + d_l_com == 0 and dm == 0:
                    channel, coeff = "zero", complex(kc.I)
                else:
                    channel, coeff = "none", 0.0 + 0.0j
                rows.append([dl, d_l_com, dm, channel, coeff.real, coeff.imag])
                entries.append(
                    {"dl": dl, "dL": d_l_com, "dm": dm, "channel": channel, "coefficient": coeff}
                )
    inputs = {"lmax": lmax, "Lmax": big_lmax, "F": geo.F, "G": geo.G}
    outputs = {"entries": entries}
    return [_record(cfg, "selection-table", inputs, outputs, {}, header, rows)]


def _build_ov_matrix(cfg: RunConfig, args: dict):
    table = cfg.ov_table
    if not table:
        raise ConfigError("ov-matrix needs an [ov] block in the config")
    beam = cfg.resolve(table, "beam", cfg.beams, "ov")
    internal_i = cfg.resolve(table, "internal_initial", cfg.hydrogenic, "ov")
    internal_f = cfg.resolve(table, "internal_final", cfg.hydrogenic, "ov")
    com_i = cfg.resolve(table, "com_initial", cfg.com, "ov")
    com_f = cfg.resolve(table, "com_final", cfg.com, "ov")
    n_i = PhotonOccupation(int(table.get("n_initial", 1)))
    n_f = PhotonOccupation(int(table.get("n_final", 0)))
    volume = cfg.build_volume(beam)
    dn = n_f.n - n_i.n
    channel = "absorption" if dn <= -1 else "emission"

    dip = dipole_matrix_element(internal_i, internal_f)
    com = ov_com_photon_factor(beam, com_i, com_f, n_i, n_f, channel, volume, cfg.tolerance)
    pol = beam.polarization
    pol_dot_d = (
        pol[0] * (dip.plus + dip.minus)
        + pol[1] * (-1j) * (dip.plus - dip.minus)
        + pol[2] * dip.z
    )
    prefactor = 1j * internal_i.mu * (internal_f.energy - internal_i.energy)
    total = prefactor * pol_dot_d * com.amplitude if abs(dn) == 1 else 0.0 + 0.0j

    inputs = {
        "beam": {"kind": beam.kind, "l": beam.l, "k_perp": beam.k_perp, "k_z": beam.k_z},
        "internal_initial": {"n": internal_i.n, "l": internal_i.l, "m": internal_i.m},
        "internal_final": {"n": internal_f.n, "l": internal_f.l, "m": internal_f.m},
        "com_initial": {"K_R": com_i.K_R, "K_z": com_i.K_z, "L": com_i.L},
        "com_final": {"K_R": com_f.K_R, "K_z": com_f.K_z, "L": com_f.L},
        "n_initial": n_i.n,
        "n_final": n_f.n,
        "volume": {"r_max": volume.r_max, "l_z": volume.l_z},
    }
    outputs = {
        "matrix_element": complex(total),
        "channel": com.channel,
        "delta_L_satisfied": com.delta_L_satisfied,
        "delta_n_satisfied": com.delta_n_satisfied,
        "kz_mismatch": com.kz_mismatch,
        "dipole": {"plus": dip.plus, "minus": dip.minus, "z": dip.z},
        "com_amplitude": com.amplitude,
    }
    diagnostics = {
        "error_estimate": com.error_estimate,
        "evaluations": com.evaluations,
        "converged": com.converged,
    }
    header = [
        "channel",
        "delta_L",
        "delta_n",
        "kz_mismatch",
        "amplitude_re",
        "amplitude_im",
        "matrix_element_re",
        "matrix_element_im",
    ]
    rows = [
        [
            com.channel,
            com.delta_L_satisfied,
            com.delta_n_satisfied,
            com.kz_mismatch,
            com.amplitude.real,
            com.amplitude.imag,
            total.real,
            total.imag,
        ]
    ]
    return [_record(cfg, "ov-matrix", inputs, outputs, diagnostics, header, rows)]


def _build_ev_matrix(cfg: RunConfig, args: dict):
    table = cfg.ev_table
    if not table:
        raise ConfigError("ev-matrix needs an [ev] block in the config")
    beam_i = cfg.resolve(table, "beam_initial", cfg.beams, "ev")
    beam_f = cfg.resolve(table, "beam_final", cfg.beams, "ev")
    internal_i = cfg.resolve(table, "internal_initial", cfg.hydrogenic, "ev")
    internal_f = cfg.resolve(table, "internal_final", cfg.hydrogenic, "ev")
    com_i = cfg.resolve(table, "com_initial", cfg.com, "ev")
    com_f = cfg.resolve(table, "com_final", cfg.com, "ev")
    geo = cfg.build_geometry()
    amp = ev_matrix_element(
        beam_i, beam_f, internal_i, internal_f, com_i, com_f, geo, cfg.tolerance
    )
    kc = amp.kernel
    inputs = {
        "beam_initial": {"l": beam_i.l, "k_perp": beam_i.k_perp, "k_z": beam_i.k_z},
        "beam_final": {"l": beam_f.l, "k_perp": beam_f.k_perp, "k_z": beam_f.k_z},
        "internal_initial": {"n": internal_i.n, "l": internal_i.l, "m": internal_i.m},
        "internal_final": {"n": internal_f.n, "l": internal_f.l, "m": internal_f.m},
        "com_initial": {"K_R": com_i.K_R, "K_z": com_i.K_z, "L": com_i.L},
        "com_final": {"K_R": com_f.K_R, "K_z": com_f.K_z, "L": com_f.L},
        "geometry_mode": kc.mode,
    }
    outputs = {
        "Q": amp.Q,
        "S": amp.S,
        "U": amp.U,
        "active_channel": amp.active_channel,
        "kernel": {"C": complex(kc.C), "D": complex(kc.D), "I": complex(kc.I), "n": kc.n},
    }
    diagnostics = {"error_estimate": kc.error_estimate, "converged": amp.converged}
    header = [
        "active_channel",
        "Q_re",
        "Q_im",
        "S_re",
        "S_im",
        "U_re",
        "U_im",
        "C_re",
        "C_im",
        "D_re",
        "D_im",
        "I_re",
        "I_im",
    ]
    c, d, i_coeff = complex(kc.C), complex(kc.D), complex(kc.I)
    rows = [
        [
            amp.active_channel,
            amp.Q.real,
            amp.Q.imag,
            amp.S.real,
            amp.S.imag,
            amp.U.real,
            amp.U.imag,
            c.real,
            c.imag,
            d.real,
            d.imag,
            i_coeff.real,
            i_coeff.imag,
        ]
    ]
    return [_record(cfg, "ev-matrix", inputs, outputs, diagnostics, header, rows)]


_BUILDERS = {
    "y-alpha": _build_y_alpha,
    "ledge": _build_ledge,
    "dichroism": _build_dichroism,
    "selection-table": _build_selection_table,
    "ov-matrix": _build_ov_matrix,
    "ev-matrix": _build_ev_matrix,
}


def build_records(subcommand: str, cfg: RunConfig, args: dict):
    """Compute the records for one data subcommand."""
    if subcommand not in _BUILDERS:
        raise ConfigError(f"unknown subcommand {subcommand!r}")
    return _BUILDERS[subcommand](cfg, args)


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vortexoam",
        description="Vortex-beam OAM transition matrix elements and selection rules",
    )
    parser.add_argument("--version", action="version", version=f"vortexoam {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML run configuration")
    common.add_argument("--format", choices=("csv", "json"), help="output format")
    common.add_argument("--out", help="output path (default stdout)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("y-alpha", parents=[common], help="azimuthal kernel integral Y_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--F", type=float, required=True)
    p.add_argument("--G", type=float, required=True)

    p = sub.add_parser("ledge", parents=[common], help="L2/L3 transition table")
    p.add_argument("--l", choices=("+1", "-1", "both"), default="both")

    p = sub.add_parser("dichroism", parents=[common], help="L-edge rates and their difference")
    p.add_argument("--kernel", choices=("selection-rule", "fixed"), default="selection-rule")
    p.add_argument("--demo-dos", action="store_true", dest="demo_dos",
                   help="use the built-in asymmetric density of states")

    p = sub.add_parser("selection-table", parents=[common],
                       help="winding-change table of active channels")
    p.add_argument("--lmax", type=int, default=2)
    p.add_argument("--Lmax", type=int, default=2)

    sub.add_parser("ov-matrix", parents=[common], help="optical-vortex matrix element")
    sub.add_parser("ev-matrix", parents=[common], help="electron-vortex matrix element")
    sub.add_parser("verify", parents=[common], help="run the invariant suite")
    return parser


def run(argv) -> int:
    """Entry point with explicit argv; returns the exit code."""
    parser = _make_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        cfg = RunConfig.from_toml(ns.config) if ns.config else RunConfig.default()
        if ns.format:
            cfg.output_format = ns.format
        out_path = ns.out or cfg.output_path

        if ns.subcommand == "verify":
            from .verify import run_checks

            results = run_checks()
            lines = []
            for name, ok, detail in results:
                lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
            n_fail = sum(1 for _, ok, _ in results if not ok)
            lines.append(f"{len(results) - n_fail}/{len(results)} invariant checks passed")
            payload = ("\n".join(lines) + "\n").encode("utf-8")
            _write(payload, out_path)
            return 0 if n_fail == 0 else 1

        records = build_records(ns.subcommand, cfg, vars(ns))
        payload = emit(records, cfg.output_format)
        _write(payload, out_path)
        if any(not r.diagnostics.get("converged", True) for r in records):
            return NonConvergedError.exit_code
        return 0
    except VortexOamError as exc:
        print(f"vortexoam: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"vortexoam: error: {exc}", file=sys.stderr)
        return 1


def _write(payload: bytes, out_path):
    if out_path in (None, "-"):
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        with open(out_path, "wb") as fh:
            fh.write(payload)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
