#!/usr/bin/env python3
"""Sweep the alternating line family and watch the spanning-tree baseline
drift toward twice the cost of the skip-tree assignment as n grows.

The greedy column (computed up to --greedy-cap points) shows how much of that
gap the solver actually recovers.
"""

import argparse

from minpower import (
    bidirect,
    certify,
    gen_line,
    greedy_solve,
    line_alternative_power,
    minimum_spanning_tree,
    power_of,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="5,10,20,50,100,200",
                        help="comma list of n values (instance has 2n points)")
    parser.add_argument("--epsilon", type=float, default=2.0**-7)
    parser.add_argument("--greedy-cap", type=int, default=400,
                        help="skip the greedy above this many points")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    print(f"{'n':>5} {'points':>7} {'baseline':>10} {'skip-tree':>10} "
          f"{'base/skip':>9} {'greedy':>10} {'greedy/skip':>11}")
    for n in sizes:
        inst = gen_line(n, args.epsilon)
        tree = minimum_spanning_tree(inst)
        baseline = power_of(inst, bidirect(tree)).total
        alt = line_alternative_power(n, args.epsilon)
        if inst.n <= args.greedy_cap:
            solution = greedy_solve(inst)
            if not certify(solution).all_passed:
                raise SystemExit(f"certificate failure at n={n}")
            greedy = f"{solution.total_power:10.4f}"
            greedy_ratio = f"{solution.total_power / alt:11.4f}"
        else:
            greedy = f"{'-':>10}"
            greedy_ratio = f"{'-':>11}"
        print(f"{n:>5} {inst.n:>7} {baseline:>10.4f} {alt:>10.4f} "
              f"{baseline / alt:>9.4f} {greedy} {greedy_ratio}")


if __name__ == "__main__":
    main()
