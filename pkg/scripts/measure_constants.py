"""Measure C_approx, c0 and C_disc dyad by dyad.

    python3 scripts/measure_constants.py --kmin 8 --kmax 13 [--json out.json]
"""

import argparse
import json
import time
from dataclasses import asdict

from cubic_congruence.experiments import dyad_approx_stats, dyad_spacing_stats
from cubic_congruence.parametrization import enumerate_gamma_data


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmin", type=int, default=8)
    ap.add_argument("--kmax", type=int, default=13)
    ap.add_argument("--radius-scale", type=float, default=1.0)
    ap.add_argument("--json", default=None)
    args = ap.parse_args()

    rows = []
    print(f"{'M':>6} {'pairs':>6} {'m*sup':>8} {'den/m^2/3':>16} {'coef/m^1/3':>10} {'disc':>5} {'c0':>7} {'sec':>6}")
    for k in range(args.kmin, args.kmax + 1):
        M = 2**k
        t0 = time.perf_counter()
        data = enumerate_gamma_data(M)
        a = dyad_approx_stats(M, data)
        s = dyad_spacing_stats(M, args.radius_scale, data)
        dt = time.perf_counter() - t0
        print(f"{M:>6} {a.pair_count:>6} {a.max_m_sup_dist:>8.3f} "
              f"[{a.min_den_ratio:.3f}, {a.max_den_ratio:.3f}] {a.max_coeff_ratio:>10.3f} "
              f"{s.max_disc_count:>5} {s.min_line_norm_scaled:>7.3f} {dt:>6.2f}")
        rows.append({"approx": asdict(a), "spacing": asdict(s), "seconds": dt})
    print(f"C_approx = {max(r['approx']['max_m_sup_dist'] for r in rows):.4f}")
    print(f"c0       = {min(r['spacing']['min_line_norm_scaled'] for r in rows):.4f}")
    print(f"C_disc   = {max(r['spacing']['max_disc_count'] for r in rows)}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1, default=str)


if __name__ == "__main__":
    main()
