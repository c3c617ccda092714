"""Large sieve ratios over a grid of (M, K, L) and seeded +-1 sequences,
plus spike sequences and the Cauchy-Schwarz comparison for small KL.

    python3 scripts/sieve_grid.py [--M 128 512] [--KL 32 128 512 2048] [--seeds 5]
"""

import argparse
import time

from cubic_congruence.root_finder import enumerate_root_pairs
from cubic_congruence.sieve_check import make_random, make_spike, sieve_ratio


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--M", type=int, nargs="+", default=[128, 512])
    ap.add_argument("--KL", type=int, nargs="+", default=[32, 128, 512, 2048])
    ap.add_argument("--seeds", type=int, default=5)
    args = ap.parse_args()

    t0 = time.perf_counter()
    overall = 0.0
    print(f"{'M':>5} {'K':>5} {'L':>5} {'max ratio':>11} {'trivial/rhs':>12}")
    for M in args.M:
        for K in args.KL:
            for L in args.KL:
                reps = [sieve_ratio(M, make_random(K, L, s)) for s in range(1, args.seeds + 1)]
                worst = max(r.ratio for r in reps)
                triv = reps[0].trivial_bound / reps[0].rhs
                overall = max(overall, worst)
                print(f"{M:>5} {K:>5} {L:>5} {worst:>11.4g} {triv:>12.4g}")
    print(f"C_sieve = {overall:.4g}   ({time.perf_counter() - t0:.1f}s)")

    for M in args.M:
        p = enumerate_root_pairs(M)[0]
        r = sieve_ratio(M, make_spike(p.m, p.nu, M, M))
        print(f"spike at {p} with K = L = {M}: ratio {r.ratio:.4f}")


if __name__ == "__main__":
    main()
