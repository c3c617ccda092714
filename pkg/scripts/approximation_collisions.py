"""Does a single approximation point ever serve two root pairs?

    python3 scripts/approximation_collisions.py --kmax 12
"""

import argparse

from cubic_congruence.experiments import approximation_collisions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmin", type=int, default=0)
    ap.add_argument("--kmax", type=int, default=11)
    args = ap.parse_args()
    for k in range(args.kmin, args.kmax + 1):
        print(2**k, approximation_collisions(2**k))


if __name__ == "__main__":
    main()
