"""Planarity of Γ over small specs: computed verdict, the classification
predicate, and the refined predicate, with a witness for every mismatch.

    python scripts/planarity_table.py [--max-n 3] [--max-c 4]
"""

from __future__ import annotations

import argparse

from comaximal.factors import build_graph, canonical_specs
from comaximal.planarity import is_planar
from comaximal.theorems import construct_witness, predicate_planar, predicate_planar_refined


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--max-c", type=int, default=4)
    args = parser.parse_args()

    print(f"{'spec':<14}{'V':>5}{'E':>6}  planar  predicate  refined")
    for spec in canonical_specs(args.max_n, args.max_c, min_n=2):
        g = build_graph(spec)
        planar = is_planar(g).planar
        pred, refined = predicate_planar(spec), predicate_planar_refined(spec)
        mark = "" if planar == pred else "  <- mismatch"
        print(f"{str(spec):<14}{len(g):>5}{g.edge_count():>6}  {planar!s:>6}  {pred!s:>9}  {refined!s:>7}{mark}")
        if planar != pred and not planar:
            w = construct_witness(spec, g)
            print(f"    {w.kind}: " + "; ".join(" - ".join(g.labels[v] for v in p) for p in w.paths if len(p) > 2))


if __name__ == "__main__":
    main()
