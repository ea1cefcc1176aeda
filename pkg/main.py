"""Main CLI for the rich-club topology toolkit."""
import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

from loguru import logger
from pydantic import ValidationError
from tqdm import tqdm

from config import (
    ANALYZE_METRICS,
    ATTACK_TRIALS,
    CURVE_POINTS,
    DEFAULT_BIN_WIDTH,
    DEFAULT_FIT_METHOD,
    DEFAULT_HOP_LIMIT,
    DEFAULT_K_MIN,
    DEFAULT_M,
    DEFAULT_R_CUT,
    DEFAULT_R_MAX,
    FIT_METHODS,
    GENERATOR_MODELS,
    INET_EXPONENT,
    OUTPUT_DIR,
    SHOW_PROGRESS,
)
from src.cli import AnalyzeRun, AttackRun, CompareRun, GenerateRun, validate_run
from src.generators import GeneratorConfig, generate_with_report
from src.io_formats import (
    ArtifactStore,
    ParsedEdgeList,
    parse_edge_list,
    write_club_degree_csv,
    write_compare_csv,
    write_edge_list,
    write_json,
    write_matrix_csv,
    write_phi_csv,
    write_summary_json,
)
from src.metrics import (
    club_degree_distribution,
    club_hop_distance,
    default_r_grid,
    largest_club_within_hops,
    link_distribution_matrix,
    rank_nodes,
    rich_club_curve,
    summary_table,
)
from src.robustness import attack_comparison
from src.utils import EXIT_DATA, EXIT_OK, EXIT_USAGE, RichClubError, setup_logging


class DataError(Exception):
    pass


def _read(path: str, lenient: bool = False) -> ParsedEdgeList:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return parse_edge_list(f, strict=not lenient)
    except (OSError, RichClubError) as e:
        raise DataError(f"{path}: {e}") from e


def _generator_fields(run: GenerateRun) -> Dict:
    fields = dict(model=run.model, node_count=run.nodes, seed=run.seed)
    if run.model in ('ba', 'fitness_ba', 'rich_club_ba'):
        fields['m'] = run.m if run.m is not None else DEFAULT_M
    if run.model == 'fitness_ba' and run.fitness is not None:
        fields['fitness'] = run.fitness
    if run.model == 'rich_club_ba':
        fields['extra_links'] = run.c
        if run.retries is not None:
            fields['extra_link_retries'] = run.retries
    if run.model == 'inet_like':
        fields['exponent'] = run.exponent if run.exponent is not None else INET_EXPONENT
        fields['k_max'] = run.k_max
        if run.preference is not None:
            fields['preference'] = run.preference
    if run.model == 'er_random':
        fields['edge_probability'] = run.p
        fields['target_links'] = run.links
    return fields


def cmd_generate(run: GenerateRun):
    config = GeneratorConfig(**_generator_fields(run))
    graph, report = generate_with_report(config)
    out = Path(run.output)
    deg = graph.degrees()
    sidecar = {
        "config": run.resolved(),
        "generator": config.model_dump(),
        "report": report.model_dump(),
        "stats": {
            "node_count": graph.node_count,
            "link_count": graph.edge_count,
            "max_degree": int(deg.max()),
            "avg_degree": 2 * graph.edge_count / graph.node_count,
        },
    }
    store = ArtifactStore(out.parent)
    store.add(out.name, write_edge_list(graph))
    store.add(out.name + ".json", write_json(sidecar))
    store.commit()
    logger.info(f"Generated {config.model} N={graph.node_count} L={graph.edge_count} -> {out}")


def _analyze_phi(g, ranks, run):
    curve = rich_club_curve(g, ranks, default_r_grid(g.node_count, run.curve_points), snap_to_ties=run.snap_ties)
    notes = {"points": len(curve.points), "rejected_points": [e.model_dump() for e in curve.errors]}
    return "phi.csv", write_phi_csv(curve), notes


def _analyze_matrix(g, ranks, run):
    matrix = link_distribution_matrix(g, ranks, run.bin_width)
    return "matrix.csv", write_matrix_csv(matrix), {"bins": matrix.bins, "total": matrix.total}


def _analyze_summary(g, ranks, run):
    summary = summary_table(g, ranks, r_cut=run.r_cut, k_min=run.k_min, method=run.fit_method, r_max=run.r_max)
    return "summary.json", write_summary_json(summary), {}


def _analyze_hops(g, ranks, run):
    doc = {"club": club_hop_distance(g, ranks, run.r_max).model_dump()}
    if run.club_hop_limit is not None:
        limited = largest_club_within_hops(g, ranks, run.club_hop_limit)
        doc["hop_limit"] = run.club_hop_limit
        doc["hop_limited_club"] = limited.model_dump() if limited else None
    return "hops.json", write_json(doc), {}


def _analyze_club_degrees(g, ranks, run):
    report = club_degree_distribution(g, ranks, run.r_max)
    return "club_degrees.csv", write_club_degree_csv(report), {"total_variation": report.total_variation}


_ANALYZERS = {
    'phi': _analyze_phi,
    'matrix': _analyze_matrix,
    'summary': _analyze_summary,
    'hops': _analyze_hops,
    'club_degrees': _analyze_club_degrees,
}


def cmd_analyze(run: AnalyzeRun):
    parsed = _read(run.input, run.lenient)
    g = parsed.graph
    ranks = rank_nodes(g)
    out_dir = Path(run.output_dir) if run.output_dir else OUTPUT_DIR / Path(run.input).stem
    store = ArtifactStore(out_dir)
    manifest = {"config": run.resolved(), "parse_report": parsed.report.model_dump(), "metrics": {}}

    for metric in run.metrics:
        try:
            name, text, notes = _ANALYZERS[metric](g, ranks, run)
        except RichClubError as e:
            logger.warning(f"Metric {metric} failed: {e}")
            manifest["metrics"][metric] = {"status": "error", "error": str(e)}
            continue
        store.add(name, text)
        manifest["metrics"][metric] = {"status": "ok", "artifact": name, **notes}

    store.add("manifest.json", write_json(manifest))
    store.commit()
    logger.info(f"Analysis of {run.input} written to {out_dir}")


def cmd_compare(run: CompareRun):
    labels = run.labels or [Path(p).stem for p in run.inputs]

    graphs = [_read(p, run.lenient).graph for p in tqdm(run.inputs, desc="Reading inputs", disable=not SHOW_PROGRESS)]
    grid = default_r_grid(min(g.node_count for g in graphs), run.curve_points)
    curves = [(label, rich_club_curve(g, rank_nodes(g), grid)) for label, g in zip(labels, graphs)]

    out = Path(run.output)
    sidecar = {
        "config": run.resolved(),
        "r_grid": grid,
        "networks": [
            {"label": label, "node_count": g.node_count, "link_count": g.edge_count,
             "rejected_points": [e.model_dump() for e in curve.errors]}
            for (label, curve), g in zip(curves, graphs)
        ],
    }
    store = ArtifactStore(out.parent)
    store.add(out.name, write_compare_csv(curves))
    store.add(out.name + ".json", write_json(sidecar))
    store.commit()


def cmd_attack(run: AttackRun):
    g = _read(run.input, run.lenient).graph
    seeds = [run.seed + i for i in range(run.trials)]
    comparison = attack_comparison(g, rank_nodes(g), run.fraction, seeds, measure_paths=not run.no_paths)
    out = Path(run.output)
    store = ArtifactStore(out.parent)
    store.add(out.name, write_json({"config": run.resolved(), "comparison": comparison.model_dump()}))
    store.commit()
    logger.info(f"Attack f={run.fraction}: targeted giant {comparison.targeted.giant_component_fraction_after:.4f} "
                f"vs random mean {comparison.mean_random_giant_fraction:.4f}")


def _fraction(lo_open: bool, hi_open: bool):
    def parse(text: str) -> float:
        value = float(text)
        low_ok = value > 0.0 if lo_open else value >= 0.0
        high_ok = value < 1.0 if hi_open else value <= 1.0
        if not (low_ok and high_ok):
            raise argparse.ArgumentTypeError(f"{text} is outside {'(' if lo_open else '['}0, 1{')' if hi_open else ']'}")
        return value
    return parse


def _k_min(text: str):
    return text if text == 'auto' else int(text)


def _add_analysis_flags(p):
    p.add_argument('--r-max', type=_fraction(True, False), default=DEFAULT_R_MAX, help='Rich-club cutoff for hop and club-degree reports')
    p.add_argument('--r-cut', type=_fraction(True, False), default=DEFAULT_R_CUT, help='Top-group cutoff for summary link shares')
    p.add_argument('--bin-width', type=_fraction(True, False), default=DEFAULT_BIN_WIDTH, help='Rank bin width for the link matrix')
    p.add_argument('--k-min', type=_k_min, default=DEFAULT_K_MIN, help='Smallest degree used in the exponent fit, or "auto" for a KS scan')
    p.add_argument('--fit-method', choices=FIT_METHODS, default=DEFAULT_FIT_METHOD)
    p.add_argument('--curve-points', type=int, default=CURVE_POINTS, help='Points on the log-spaced r grid')


def build_parser():
    parser = argparse.ArgumentParser(description="Rich-club topology toolkit")

    sub = parser.add_subparsers(dest='command')

    p_gen = sub.add_parser('generate', help='Generate a synthetic topology')
    p_gen.add_argument('--model', choices=GENERATOR_MODELS, required=True)
    p_gen.add_argument('--nodes', type=int, required=True, help='Number of nodes N')
    p_gen.add_argument('--m', type=int, help=f'Links per new node (BA family, default {DEFAULT_M})')
    p_gen.add_argument('--c', type=int, help='Extra links between existing nodes per step (rich_club_ba)')
    p_gen.add_argument('--retries', type=int, help='Resampling budget per extra link (rich_club_ba)')
    p_gen.add_argument('--fitness', choices=['uniform', 'constant'], help='Fitness distribution (fitness_ba, default uniform)')
    p_gen.add_argument('--exponent', type=float, help=f'Degree exponent y (inet_like, default {INET_EXPONENT})')
    p_gen.add_argument('--k-max', type=int, help='Degree cutoff for inet_like targets (default N-1)')
    p_gen.add_argument('--preference', choices=['degree', 'degree_plus_one'], help='Preference weight (inet_like, default degree)')
    p_gen.add_argument('--p', type=_fraction(False, False), help='Edge probability (er_random)')
    p_gen.add_argument('--links', type=int, help='Exact number of links (er_random)')
    p_gen.add_argument('--seed', type=int, required=True)
    p_gen.add_argument('--output', required=True, help='Edge-list path; a .json sidecar is written next to it')
    p_gen.set_defaults(func=cmd_generate)

    p_an = sub.add_parser('analyze', help='Rich-club analysis of one edge list')
    p_an.add_argument('input')
    p_an.add_argument('--output-dir', help='Artifact directory (default OUTPUT_DIR/<input stem>)')
    p_an.add_argument('--metrics', nargs='+', choices=ANALYZE_METRICS, default=ANALYZE_METRICS)
    _add_analysis_flags(p_an)
    p_an.add_argument('--snap-ties', action='store_true', help='Move curve cutoffs to equal-degree group boundaries')
    p_an.add_argument('--club-hop-limit', type=float, default=DEFAULT_HOP_LIMIT, help='Also report the largest club with mean hop distance <= this')
    p_an.add_argument('--lenient', action='store_true', help='Skip one-token lines instead of failing')
    p_an.set_defaults(func=cmd_analyze)

    p_cmp = sub.add_parser('compare', help='φ(r) curves of several networks in one long-format CSV')
    p_cmp.add_argument('inputs', nargs='+')
    p_cmp.add_argument('--labels', nargs='+', help='Network names (default: file stems)')
    p_cmp.add_argument('--output', required=True)
    p_cmp.add_argument('--curve-points', type=int, default=CURVE_POINTS)
    p_cmp.add_argument('--lenient', action='store_true')
    p_cmp.set_defaults(func=cmd_compare)

    p_att = sub.add_parser('attack', help='Targeted attack versus random failure')
    p_att.add_argument('input')
    p_att.add_argument('--fraction', type=_fraction(True, True), required=True, help='Fraction of nodes removed')
    p_att.add_argument('--seed', type=int, required=True, help='First random-failure seed')
    p_att.add_argument('--trials', type=int, default=ATTACK_TRIALS, help='Random-failure replicas')
    p_att.add_argument('--no-paths', action='store_true', help='Skip path-length measurement after removal')
    p_att.add_argument('--output', required=True)
    p_att.add_argument('--lenient', action='store_true')
    p_att.set_defaults(func=cmd_attack)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, 'func'):
        parser.print_help()
        return EXIT_USAGE

    setup_logging()
    flags = {k: v for k, v in vars(args).items() if k not in ('func', 'command')}
    try:
        run = validate_run(args.command, flags)
    except ValidationError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE

    try:
        args.func(run)
    except ValidationError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except (DataError, RichClubError, OSError) as e:
        logger.error(f"Data error: {e}")
        return EXIT_DATA
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
