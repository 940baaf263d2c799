"""Command-line front end.

Exit status: 0 success, 1 a classification disagreement or failed check,
2 usage/config error, 3 capacity or search-budget abort.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .cliques import SearchBudgetExceeded, max_clique, max_independent_set
from .config import ConfigError, SweepConfig, load_config
from .factors import ProductRingSpec, SpecError, build_graph, canonical_specs, spec_from_ring
from .graphs import EXPORT_FORMATS, Graph, export, is_star, universal_vertices
from .kuratowski import SubdivisionWitness, verify_witness
from .planarity import is_planar
from .rings import (
    CapacityError,
    FiniteRing,
    RingError,
    comaximal_graph,
    direct_product,
    enumerate_ideals,
    idempotents,
    make_poly_quotient,
    make_zmod,
)
from .theorems import (
    ClassificationReport,
    ZmodReport,
    construct_witness,
    iter_sweep,
    predicate_planar,
    predicate_planar_refined,
    predicate_star,
    predicate_universal,
)

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Sources


def _zmod_source(text: str) -> tuple[str, int]:
    try:
        return ("zmod", int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--zmod expects an integer, got {text!r}") from None


def _poly_source(text: str) -> tuple[str, tuple[int, list[int]]]:
    try:
        p, coeffs = text.split(":", 1)
        return ("poly", (int(p), [int(c) for c in coeffs.split(",")]))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"--poly expects P:c0,c1,...,cd (low degree first), got {text!r}"
        ) from None


def _factor_counts(text: str) -> list[int]:
    try:
        counts = [int(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--factors expects c1,c2,..., got {text!r}") from None
    return counts


def _add_source_args(p: argparse.ArgumentParser, factors: bool) -> None:
    p.add_argument("--zmod", dest="sources", action="append", type=_zmod_source, metavar="N",
                   help="Z/N; repeat (or mix with --poly) for a direct product")
    p.add_argument("--poly", dest="sources", action="append", type=_poly_source, metavar="P:COEFFS",
                   help="F_P[x]/(f), f monic, coefficients low degree first, e.g. 2:0,0,1 for x^2")
    if factors:
        p.add_argument("--factors", type=_factor_counts, metavar="C1,...,CN",
                       help="abstract product of local rings with C_i proper ideals each")


def build_ring(sources: list[tuple[str, object]]) -> FiniteRing:
    rings = []
    for kind, arg in sources:
        if kind == "zmod":
            rings.append(make_zmod(arg))
        else:
            p, coeffs = arg
            rings.append(make_poly_quotient(p, coeffs))
    return rings[0] if len(rings) == 1 else direct_product(rings)


def _resolve(args) -> tuple[Graph, ProductRingSpec | None]:
    """Graph and (when derivable) factor spec for the command's source."""
    factors = getattr(args, "factors", None)
    if factors is not None and args.sources:
        raise UsageError("give either ring sources or --factors, not both")
    if factors is not None:
        spec = ProductRingSpec.of(*factors)
        return build_graph(spec), spec
    if not args.sources:
        raise UsageError("no ring given: use --zmod, --poly or --factors")
    ring = build_ring(args.sources)
    spec, _ = spec_from_ring(ring)
    return comaximal_graph(ring), spec


# ---------------------------------------------------------------------------
# Commands


def _fmt_set(labels) -> str:
    return "{" + ",".join(labels) + "}"


def cmd_ring(args) -> int:
    if not args.sources:
        raise UsageError("no ring given: use --zmod or --poly")
    ring = build_ring(args.sources)
    lattice = enumerate_ideals(ring)
    spec, _ = spec_from_ring(ring)
    g = comaximal_graph(ring, lattice)
    maximal = sorted((lattice.label(i) for i in lattice.maximal_indices), key=_label_key)
    print(f"ring: {ring.label}")
    print(f"order: {ring.order}")
    print(f"ideals: {len(lattice.ideals)}")
    print(f"maximal: {_fmt_set(maximal)}")
    print(f"J={lattice.label(lattice.jacobson)}")
    print(f"local: {'yes' if lattice.is_local() else 'no'}")
    print(f"idempotents: {len(idempotents(ring))}")
    print(f"factors: {spec}")
    if len(g) == 0:
        print("graph: Γ empty")
    else:
        print(f"graph: {len(g)} vertices, {g.edge_count()} edge{'' if g.edge_count() == 1 else 's'}")
    return EXIT_OK


def _label_key(label: str):
    inner = label.strip("()I")
    return (0, int(inner)) if inner.isdigit() else (1, label)


def cmd_graph(args) -> int:
    g, _ = _resolve(args)
    data = export(g, args.format)
    if args.out:
        try:
            Path(args.out).write_bytes(data)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _print_witness(g: Graph, w: SubdivisionWitness) -> None:
    ok = verify_witness(g, w)
    names = [g.labels[v] for v in w.branch_vertices]
    if w.kind == "K33":
        print(f"witness: K33 {'verified' if ok else 'INVALID'}")
        print(f"  branch: {' '.join(names[:3])} | {' '.join(names[3:])}")
    else:
        print(f"witness: K5 {'verified' if ok else 'INVALID'}")
        print(f"  branch: {' '.join(names)}")
    for path in w.paths:
        print("  path: " + " - ".join(g.labels[v] for v in path))


def cmd_invariants(args) -> int:
    g, spec = _resolve(args)
    status = EXIT_OK
    show_all = not (args.planar or args.omega or args.alpha or args.witness)
    print(f"vertices: {len(g)}")
    print(f"edges: {g.edge_count()}")
    if spec is not None:
        print(f"factors: {spec}")
    numbers = []
    for flag, name, search in (
        (args.omega, "ω", max_clique),
        (args.alpha, "α", max_independent_set),
    ):
        if flag or show_all:
            try:
                numbers.append(f"{name}={len(search(g, args.budget))}")
            except SearchBudgetExceeded:
                print(f"{name}: search budget exceeded")
                status = EXIT_CAPACITY
    if numbers:
        print(" ".join(numbers))
    if args.planar or args.witness or show_all:
        result = is_planar(g, want_witness=args.witness, witness_cap=args.witness_cap)
        line = f"planar: {_yes(result.planar)}"
        if spec is not None:
            predicted = predicate_planar(spec)
            line += f"; predicted: {_yes(predicted)}; {'agree' if predicted == result.planar else 'DISAGREE'}"
            if predicted != result.planar and status == EXIT_OK:
                status = EXIT_DISAGREE
        print(line)
        if args.witness and not result.planar:
            w = result.witness
            if args.factors is not None and (w is None or spec.n >= 4):
                w = construct_witness(spec, g)
            if w is None:
                print(f"witness: not extracted (more than {args.witness_cap} vertices)")
            else:
                _print_witness(g, w)
    if show_all and spec is not None:
        uni, star = bool(universal_vertices(g)), is_star(g)
        print(f"universal vertex: {_yes(uni)}; predicted: {_yes(predicate_universal(spec))}")
        print(f"star: {_yes(star)}; predicted: {_yes(predicate_star(spec))}")
    return status


def _config(args) -> SweepConfig:
    cfg = load_config(args.config)
    if args.workers is not None:
        cfg = replace(cfg, workers=args.workers)
    return cfg


def _sweep(cfg: SweepConfig):
    specs = canonical_specs(cfg.max_factors, cfg.max_proper_ideals)
    return iter_sweep(specs, cfg.zmod_list, cfg.caps, cfg.workers)


CHECKS = ("universal-vertex", "planarity", "star", "closed-form-counts", "clique-number",
          "planarity-oracle", "witness", "embedding")


def _check_value(rep: ClassificationReport, name: str):
    return {
        "universal-vertex": rep.agree_universal,
        "planarity": rep.agree_planar,
        "star": rep.agree_star,
        "closed-form-counts": rep.counts_match,
        "clique-number": rep.omega_matches,
        "planarity-oracle": rep.oracle_agrees,
        "witness": rep.witness_verified,
        "embedding": rep.embedding_verified,
    }[name]


def cmd_verify(args) -> int:
    cfg = _config(args)
    reports: list[ClassificationReport] = []
    zmods: list[ZmodReport] = []
    for rep in _sweep(cfg):
        (zmods if isinstance(rep, ZmodReport) else reports).append(rep)
    skipped = {s: sum(r.status == s for r in reports) for s in ("capacity", "budget")}
    print(f"specs: {len(reports)} (capacity: {skipped['capacity']}, budget: {skipped['budget']})")
    for name in CHECKS:
        values = [_check_value(r, name) for r in reports]
        done = [v for v in values if v is not None]
        print(f"{name}: {sum(done)}/{len(done)} pass")
    done = [z for z in zmods if z.equivalent is not None]
    print(f"zmod-equivalence: {sum(z.equivalent for z in done)}/{len(done)} equal"
          f" ({len(zmods) - len(done)} over capacity)")
    refined = [r for r in reports if r.planar is not None]
    agree = sum(r.planar == predicate_planar_refined(r.spec) for r in refined)
    print(f"refined planarity predicate (informational): {agree}/{len(refined)} agree")

    for rep in reports:
        if rep.failures():
            print(f"FAIL {rep.spec}: {', '.join(rep.failures())}")
            return EXIT_DISAGREE
    for z in zmods:
        if z.equivalent is False:
            print(f"FAIL Z/{z.modulus}: ring-core and factor-model graphs differ")
            return EXIT_DISAGREE
    print("all checks passed")
    return EXIT_OK


def _record_line(rec: dict) -> str:
    return json.dumps(rec, ensure_ascii=False) + "\n"


def cmd_atlas(args) -> int:
    cfg = _config(args)
    out = Path(args.out or cfg.atlas_path)
    try:
        fh = out.open("w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None
    written = 0
    with fh:
        try:
            for rep in _sweep(cfg):
                fh.write(_record_line(rep.as_record()))
                written += 1
        except KeyboardInterrupt:
            fh.write(_record_line({"trailer": "interrupted", "partial": True, "records": written}))
            print(f"interrupted; partial atlas with {written} records at {out}", file=sys.stderr)
            return 130
    print(f"wrote {written} records to {out}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="comaximal", description="Co-maximal ideal graphs of finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", help="ideal structure of a finite ring")
    _add_source_args(p, factors=False)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("graph", help="export the co-maximal ideal graph")
    _add_source_args(p, factors=True)
    p.add_argument("--format", choices=EXPORT_FORMATS, default="json")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("invariants", help="planarity, clique and independence numbers")
    _add_source_args(p, factors=True)
    p.add_argument("--planar", action="store_true")
    p.add_argument("--omega", action="store_true")
    p.add_argument("--alpha", action="store_true")
    p.add_argument("--witness", action="store_true", help="print a K5/K3,3 subdivision when nonplanar")
    p.add_argument("--budget", type=int, default=1_000_000, help="search node budget for ω/α")
    p.add_argument("--witness-cap", type=int, default=64)
    p.set_defaults(func=cmd_invariants)

    for name, func, text in (("verify", cmd_verify, "check the classification over a sweep"),
                             ("atlas", cmd_atlas, "write one JSON record per swept spec")):
        p = sub.add_parser(name, help=text)
        p.add_argument("config", nargs="?", help="JSON sweep config (default: built-in)")
        p.add_argument("--workers", type=int)
        if name == "atlas":
            p.add_argument("--out", help="atlas path (default: config atlas_path)")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigError, RingError, SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
