"""Batch front-end: channels / rabi / sweep / wavefunction / verify.

All output is CSV (plus one standalone SVG for sweeps) with fixed 10
significant-digit formatting, so identical configs reproduce identical
bytes.  Exit codes: 0 success, 2 configuration problems, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .atom import load_species
from .beam import BeamSpec
from .cm import CMState
from .config import ConfigError, ScenarioConfig, parse_config
from .coupling import StateSolver, compute_scenario, enumerate_channels, \
    sweep_topological_charge
from .plot import render_sweep_svg
from .units import field_vpm_to_au, um_to_au
from .verify import run_all

EXIT_OK, EXIT_CONFIG, EXIT_VERIFY = 0, 2, 3

CHANNEL_COLS = ("l", "sigma", "q", "l1", "l2", "l3", "m1", "m2", "m3",
                "M_f", "final_state", "alpha", "beta")
RABI_COLS = CHANNEL_COLS + ("coeff", "radial_e", "radial_cm", "angular",
                            "cg_weight", "rabi_kHz", "lambda_audit")
SWEEP_COLS = ("l", "kind", "channel_group", "final_state", "M_f", "N_f",
              "q", "rabi_kHz")


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def write_csv(path: Path, header, rows) -> None:
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


def _channel_fields(ch):
    return (ch.l, ch.sigma, ch.q, ch.l1, ch.l2, ch.l3, ch.m1, ch.m2, ch.m3,
            ch.M_f, str(ch.final), ch.alpha, ch.beta)


class Runtime:
    """Config resolved into solver-ready objects (atomic units)."""

    def __init__(self, cfg: ScenarioConfig):
        self.cfg = cfg
        self.species = load_species(cfg.species)
        self.beam = BeamSpec(l=cfg.l, w0=um_to_au(cfg.waist_um),
                             E0=field_vpm_to_au(cfg.field_V_per_m),
                             sigma=cfg.sigma, q_max=cfg.q_max,
                             mass_ratio=cfg.mass_ratio)
        self.cm_i = CMState(cfg.N, cfg.M, um_to_au(cfg.w_r_um))
        self.solver = StateSolver(self.species, cfg.grid_step)

    def initial_state(self):
        return self.solver.get(self.cfg.n, self.cfg.l_i,
                               self.cfg.j_i).with_m_j(self.cfg.m_j)

    def scenario(self, beam=None):
        cfg = self.cfg
        return compute_scenario(self.solver, beam or self.beam, cfg.n,
                                cfg.l_i, cfg.j_i, cfg.m_j, self.cm_i,
                                final_l_f_max=cfg.final_l_f_max,
                                n_final=cfg.n_final, j_policy=cfg.j_policy)


def cmd_channels(rt: Runtime, out: Path) -> int:
    chans = enumerate_channels(rt.beam, rt.initial_state(), rt.cm_i,
                               rt.cfg.final_l_f_max, j_policy=rt.cfg.j_policy)
    write_csv(out / "channels.csv", CHANNEL_COLS,
              [_channel_fields(c) for c in chans])
    print(f"wrote {out / 'channels.csv'} ({len(chans)} channels)")
    return EXIT_OK


def cmd_rabi(rt: Runtime, out: Path) -> int:
    results = rt.scenario()
    rows = [_channel_fields(r.channel)
            + (r.coeff, r.radial_e, r.radial_cm, r.angular, r.cg_weight,
               r.rabi_kHz, r.lambda_audit) for r in results]
    write_csv(out / "rabi.csv", RABI_COLS, rows)
    print(f"wrote {out / 'rabi.csv'} ({len(rows)} channels)")
    return EXIT_OK


def cmd_sweep(rt: Runtime, out: Path) -> int:
    cfg = rt.cfg
    rows = sweep_topological_charge(cfg.sweep_l, rt.solver, rt.beam, cfg.n,
                                    cfg.l_i, cfg.j_i, cfg.m_j, rt.cm_i,
                                    final_l_f_max=cfg.final_l_f_max,
                                    n_final=cfg.n_final,
                                    j_policy=cfg.j_policy)
    write_csv(out / "sweep.csv", SWEEP_COLS,
              [(r.l, r.kind, r.group, r.final_state, r.M_f, r.N_f, r.q,
                r.rabi_kHz) for r in rows])
    (out / "sweep.svg").write_text(render_sweep_svg(rows))
    print(f"wrote {out / 'sweep.csv'} ({len(rows)} rows) and "
          f"{out / 'sweep.svg'}")
    return EXIT_OK


def cmd_wavefunction(rt: Runtime, out: Path) -> int:
    st = rt.initial_state()
    r, u = st.u_of_r()          # grid never touches r = 0
    write_csv(out / "wavefunction.csv", ("r", "u", "psi"),
              zip(r, u, u / r))
    print(f"wrote {out / 'wavefunction.csv'} "
          f"(n={st.n} l={st.l} j={st.j}, {len(r)} points, "
          f"nodes={st.nodes}, flags={','.join(st.flags) or 'none'})")
    return EXIT_OK


def cmd_verify(cfg: ScenarioConfig, out: Path) -> int:
    # Suites are self-contained (analytic oracles only), so they run even
    # when the configured species data is unusable.
    ok, text = run_all()
    (out / "verify.txt").write_text(text)
    print(text, end="")
    return EXIT_OK if ok else EXIT_VERIFY


# command -> (handler, needs solver-ready runtime)
_COMMANDS = {"channels": (cmd_channels, True), "rabi": (cmd_rabi, True),
             "sweep": (cmd_sweep, True),
             "wavefunction": (cmd_wavefunction, True),
             "verify": (cmd_verify, False)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgryd",
        description="Vortex-beam Rydberg transition channels and Rabi "
                    "frequencies in a 2-D trap.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
            ("channels", "enumerate transition channels to CSV"),
            ("rabi", "assemble per-channel Rabi frequencies to CSV"),
            ("sweep", "sweep the topological charge; CSV + SVG plot"),
            ("wavefunction", "dump the initial radial wavefunction to CSV"),
            ("verify", "run the built-in verification suites")]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", metavar="PATH",
                       help="scenario config file (defaults apply otherwise)")
        p.add_argument("--out", metavar="DIR",
                       help="output directory (overrides output.dir)")
        p.add_argument("--q-max", type=int, metavar="N", dest="q_max",
                       help="override beam.q_max")
        p.add_argument("--l", metavar="LIST", dest="l_list",
                       help="override compute.sweep_l, e.g. \"1,2,3,4\"")
        p.add_argument("--format", choices=["csv"], default="csv",
                       help="tabular output format (csv)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler, needs_runtime = _COMMANDS[args.command]
    try:
        cfg = parse_config(args.config) if args.config else ScenarioConfig()
        if args.q_max is not None:
            cfg.q_max = args.q_max
        if args.l_list is not None:
            cfg.sweep_l = tuple(int(t) for t in
                                args.l_list.replace(",", " ").split())
        if args.out is not None:
            cfg.out_dir = args.out
        cfg.validate()
        target = Runtime(cfg) if needs_runtime else cfg
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        # species-file and config problems share the config exit code
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return handler(target, out)


if __name__ == "__main__":
    sys.exit(main())
