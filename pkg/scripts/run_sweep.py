"""Run the classification sweep and print one row per spec.

    python scripts/run_sweep.py [config.json] [--workers N] [--only-failures]
"""

from __future__ import annotations

import argparse
import sys
import time

from comaximal.config import load_config
from comaximal.factors import canonical_specs
from comaximal.theorems import ClassificationReport, iter_sweep


def _flag(value) -> str:
    return "-" if value is None else ("y" if value else "n")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("config", nargs="?")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--only-failures", action="store_true")
    args = parser.parse_args()

    cfg = load_config(args.config)
    workers = args.workers or cfg.workers
    specs = canonical_specs(cfg.max_factors, cfg.max_proper_ideals)
    t0 = time.perf_counter()
    print(f"{'spec':<16}{'V':>7}{'E':>9}{'ω':>4}{'α':>6}  planar pred  univ pred  star pred  witness  status")
    failures = 0
    for rep in iter_sweep(specs, cfg.zmod_list, cfg.caps, workers):
        if not isinstance(rep, ClassificationReport):
            failures += rep.equivalent is False
            if args.only_failures and rep.equivalent is not False:
                continue
            print(f"Z/{rep.modulus:<14}{_flag(rep.equivalent):>7}  (ring-core vs factor model) {rep.status}")
            continue
        bad = rep.failures()
        failures += bool(bad)
        if args.only_failures and not bad:
            continue
        kind = rep.witness.kind if rep.witness else "-"
        print(
            f"{str(rep.spec):<16}{rep.vertex_count:>7}{rep.edge_count if rep.edge_count is not None else '-':>9}"
            f"{rep.omega if rep.omega is not None else '-':>4}{rep.alpha if rep.alpha is not None else '-':>6}"
            f"  {_flag(rep.planar):>6} {_flag(rep.predicted_planar):>4}"
            f"  {_flag(rep.universal_vertex_exists):>4} {_flag(rep.predicted_universal):>4}"
            f"  {_flag(rep.star):>4} {_flag(rep.predicted_star):>4}  {kind:>7}  {rep.status}"
            + (f"  FAIL: {', '.join(bad)}" if bad else "")
        )
    print(f"{len(specs)} specs, {failures} with failures, {time.perf_counter() - t0:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
