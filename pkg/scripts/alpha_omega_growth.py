"""Tabulate ω and α of Γ for two or three factors.

    python scripts/alpha_omega_growth.py [--n 2] [--max-c 6]
"""

from __future__ import annotations

import argparse
from itertools import product

from comaximal.cliques import clique_number, independence_number
from comaximal.factors import ProductRingSpec, build_graph
from comaximal.theorems import alpha_growth_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--max-c", type=int, default=6)
    args = parser.parse_args()

    for counts in product(range(1, args.max_c + 1), repeat=args.n):
        if list(counts) != sorted(counts):
            continue
        spec = ProductRingSpec.of(*counts)
        g = build_graph(spec)
        print(f"{spec}: V={len(g)} ω={clique_number(g)} α={independence_number(g)}")
    print(f"α nondecreasing in each factor: {alpha_growth_check(args.n, args.max_c)}")


if __name__ == "__main__":
    main()
