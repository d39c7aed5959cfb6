#!/usr/bin/env python3
"""Print the Rb 60S reference channel table (console version of `lgryd rabi`).

Groups: pure = no envelope/vortex sharing to the electron, via_tc = vortex
charge feeds the electron, via_gt = envelope gradient feeds the electron.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lgryd.atom import load_species
from lgryd.beam import BeamSpec
from lgryd.cm import CMState
from lgryd.coupling import StateSolver, compute_scenario
from lgryd.units import field_vpm_to_au, um_to_au


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--l", type=int, default=1)
    ap.add_argument("--sigma", type=int, default=1, choices=(-1, 0, 1))
    ap.add_argument("--q-max", type=int, default=1)
    ap.add_argument("--l-f-max", type=int, default=3)
    args = ap.parse_args()

    solver = StateSolver(load_species("rb"))
    beam = BeamSpec(l=args.l, w0=um_to_au(2.7), E0=field_vpm_to_au(2400.0),
                    sigma=args.sigma, q_max=args.q_max, mass_ratio=1.0)
    cm0 = CMState(0, 0, um_to_au(2.2))
    results = compute_scenario(solver, beam, 60, 0, 0.5, -0.5, cm0,
                               final_l_f_max=args.l_f_max)

    hdr = (f"{'q':>2} {'(l1,l2,l3)':>11} {'group':>7} {'final':>12} "
           f"{'M_f':>4} {'alpha':>5} {'beta':>4} {'rabi [kHz]':>16} "
           f"{'audit':>7}")
    print(f"Rb 60S_1/2(-1/2), l={args.l}, sigma={args.sigma:+d}, "
          f"q<={args.q_max}, w0=2.7um, w_r=2.2um, E0=2400 V/m")
    print(hdr)
    print("-" * len(hdr))
    for r in results:
        c = r.channel
        print(f"{c.q:>2} {f'({c.l1},{c.l2},{c.l3})':>11} {c.group:>7} "
              f"{str(c.final):>12} {c.M_f:>4} {c.alpha:>5} {c.beta:>4} "
              f"{r.rabi_kHz:>16.4f} {r.lambda_audit:>7.4f}")

    sums = {}
    for r in results:
        key = (r.channel.group, str(r.channel.final), r.channel.M_f)
        sums[key] = sums.get(key, 0.0) + r.matrix_element
    print("\ncoherent sums per (group, final, M_f) [kHz]:")
    for (g, fin, mf), me in sorted(sums.items()):
        print(f"  {g:>7} -> {fin:>12} M_f={mf:+d}: "
              f"{abs(me) * 6.5796839205e12:16.4f}")


if __name__ == "__main__":
    main()
