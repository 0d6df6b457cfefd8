#!/usr/bin/env python3
"""Random-instance stress run: greedy against the exact oracle and LP bound.

Prints one row per instance and the worst observed ratios at the end; any
certificate failure or a greedy/oracle ratio above the 1.85 guarantee aborts
with a nonzero exit code.
"""

import argparse

from minpower import (
    certify,
    exact_optimum,
    gen_random_geometric,
    greedy_solve,
    lp_lower_bound,
    minimum_spanning_tree,
    power_of,
    bidirect,
    ratio_bound,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=60)
    parser.add_argument("--nmin", type=int, default=4)
    parser.add_argument("--nmax", type=int, default=8)
    parser.add_argument("--kappas", default="1,2,4")
    parser.add_argument("--seed0", type=int, default=0)
    parser.add_argument("--lp", action="store_true", help="also compute the LP bound")
    args = parser.parse_args()

    kappas = [float(k) for k in args.kappas.split(",") if k.strip()]
    span = args.nmax - args.nmin + 1
    guarantee = ratio_bound(0.5)
    worst_exact = 0.0
    worst_lp = 0.0
    worst_mst = 0.0

    header = f"{'seed':>6} {'n':>3} {'kappa':>5} {'optimum':>9} {'greedy':>9} {'g/opt':>7} {'mst/opt':>8}"
    if args.lp:
        header += f" {'lp':>9} {'g/lp':>7}"
    print(header)
    for i in range(args.count):
        n = args.nmin + i % span
        kappa = kappas[i % len(kappas)]
        seed = args.seed0 + i
        inst = gen_random_geometric(n, kappa, seed)
        solution = greedy_solve(inst)
        if not certify(solution).all_passed:
            raise SystemExit(f"certificate failure on seed {seed}")
        result = exact_optimum(inst)
        if not result.optimal:
            raise SystemExit(f"oracle inconclusive on seed {seed}")
        mst_power = power_of(inst, bidirect(minimum_spanning_tree(inst))).total
        g_ratio = solution.total_power / result.opt
        m_ratio = mst_power / result.opt
        worst_exact = max(worst_exact, g_ratio)
        worst_mst = max(worst_mst, m_ratio)
        row = (f"{seed:>6} {n:>3} {kappa:>5.1f} {result.opt:>9.4f} "
               f"{solution.total_power:>9.4f} {g_ratio:>7.4f} {m_ratio:>8.4f}")
        if args.lp:
            frac = lp_lower_bound(inst)
            lp_ratio = solution.total_power / frac.value
            worst_lp = max(worst_lp, lp_ratio)
            row += f" {frac.value:>9.4f} {lp_ratio:>7.4f}"
        print(row)

    print(f"\nworst greedy/optimum  {worst_exact:.4f}  (guarantee {guarantee:.4f})")
    print(f"worst mst/optimum     {worst_mst:.4f}  (guarantee 2.0)")
    if args.lp:
        print(f"worst greedy/lp-bound {worst_lp:.4f}  (guarantee {guarantee:.4f})")
    if worst_exact > guarantee + 1e-9:
        raise SystemExit("greedy ratio exceeded its guarantee")


if __name__ == "__main__":
    main()
