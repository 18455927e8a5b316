"""Command-line surface.

Subcommands: perron, check, condense, join, meet, cotree, homog2, chomog,
joint, oracle {we-enum, aut, fpf-involution, max-refine}, experiment.

Graph arguments are file paths or '-' for stdin, in graph6 (default) or
edge-list format (--format edges).  Partitions use the one-cell-per-line
text format.  Numbers print at 12 significant digits.

Exit codes: 0 the computation succeeded / the property holds; 1 the
property fails (check false, homog2 none, chomog false, fpf none, joint
report not fully positive); 2 usage or data errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import __version__
from .cotrees import build_cotree, c_homogeneous_search, two_homogeneous_partition
from .equitability import (
    is_B_invariant,
    is_equitable,
    is_weight_equitable,
    is_weight_equitable_commute,
)
from .errors import NuNotCellConstant, WepartError
from .experiment import (
    EnumeratedSource,
    RandomSource,
    run_experiment,
    write_histogram,
    write_metadata,
    write_records,
)
from .graphs import Graph, parse_edge_list, parse_graph6
from .joint import (
    fractional_isomorphism_witness,
    is_balanced,
    make_joint_context,
    ratio_check,
)
from .oracle import (
    all_automorphisms,
    enumerate_weight_equitable,
    find_fixed_point_free_involution,
    max_we_refinement,
)
from .partitions import (
    Partition,
    build_weighted_view,
    format_partition,
    join,
    meet,
    parse_partition,
)
from .perms import format_cycles
from .spectral import DEFAULT_TOL as PERRON_TOL
from .spectral import perron

CHECK_TOL = 1e-8


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "edges":
        return parse_edge_list(text)
    return parse_graph6(text.strip())


def _read_partition(path: str, n: Optional[int] = None) -> Partition:
    """Partition file; the ground set size is inferred when not given."""
    text = _read_text(path)
    if n is None:
        n = sum(len(line.split()) for line in text.splitlines()
                if line.strip())
    return parse_partition(text, n)


def _emit(args, text: str) -> None:
    text = text.rstrip("\n")
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _matrix_lines(m) -> list[str]:
    return [" ".join(_fmt(x) for x in row) for row in m]


# --- subcommands ---------------------------------------------------------------

def cmd_perron(args) -> int:
    graph = _read_graph(args.graph, args.format)
    data = perron(graph, args.tol)
    lines = [_fmt(data.lambda1)]
    lines.extend(_fmt(x) for x in data.nu)
    _emit(args, "\n".join(lines))
    return 0


def cmd_check(args) -> int:
    graph = _read_graph(args.graph, args.format)
    p = _read_partition(args.partition, graph.n)
    if args.mode == "equitable":
        ok = is_equitable(graph, p)
    else:
        nu = perron(graph).nu
        checker = {
            "weight": is_weight_equitable,
            "commute": is_weight_equitable_commute,
            "binv": is_B_invariant,
        }[args.mode]
        ok = checker(graph, nu, p, args.tol)
    _emit(args, "true" if ok else "false")
    return 0 if ok else 1


def cmd_condense(args) -> int:
    graph = _read_graph(args.graph, args.format)
    p = _read_partition(args.partition, graph.n)
    view = build_weighted_view(graph, perron(graph).nu, p)
    lines = ["B_bar:"]
    lines.extend(_matrix_lines(view.B_bar))
    lines.append("D:")
    lines.append(" ".join(_fmt(x) for x in view.D.diagonal()))
    _emit(args, "\n".join(lines))
    return 0


def _lattice(args, op) -> int:
    p = _read_partition(args.p)
    q = _read_partition(args.q)
    _emit(args, format_partition(op(p, q)))
    return 0


def cmd_join(args) -> int:
    return _lattice(args, join)


def cmd_meet(args) -> int:
    return _lattice(args, meet)


def cmd_cotree(args) -> int:
    graph = _read_graph(args.graph, args.format)
    _emit(args, build_cotree(graph).term())
    return 0


def cmd_homog2(args) -> int:
    graph = _read_graph(args.graph, args.format)
    p = two_homogeneous_partition(graph)
    if p is None:
        _emit(args, "none")
        return 1
    _emit(args, format_partition(p))
    return 0


def cmd_chomog(args) -> int:
    graph = _read_graph(args.graph, args.format)
    ok = c_homogeneous_search(build_cotree(graph), args.c)
    _emit(args, "true" if ok else "false")
    return 0 if ok else 1


def cmd_joint(args) -> int:
    g = _read_graph(args.graph_g, args.format)
    h = _read_graph(args.graph_h, args.format)
    ctx = make_joint_context(g, h, args.tol)
    p = _read_partition(args.partition, g.n + h.n)
    balanced = is_balanced(ctx, p)
    we = is_weight_equitable(ctx.union, ctx.nu_union, p, args.tol)
    lines = [f"balanced: {str(balanced).lower()}",
             f"weight-equitable: {str(we).lower()}"]
    ok = balanced and we
    if ok:
        ratio = ratio_check(ctx, p, args.tol)
        lines.append(f"ratio-law: {str(ratio).lower()}")
        ok = ok and ratio
        try:
            fractional_isomorphism_witness(ctx, p, args.tol)
            lines.append("witness: ok")
        except NuNotCellConstant as exc:
            lines.append(f"witness: unavailable ({exc})")
            ok = False
    else:
        lines.append("ratio-law: skipped")
        lines.append("witness: skipped")
    _emit(args, "\n".join(lines))
    return 0 if ok else 1


def cmd_oracle_we_enum(args) -> int:
    graph = _read_graph(args.graph, args.format)
    blocks = [format_partition(p).rstrip("\n")
              for p in enumerate_weight_equitable(graph, args.tol)]
    _emit(args, "\n\n".join(blocks))
    return 0


def cmd_oracle_aut(args) -> int:
    graph = _read_graph(args.graph, args.format)
    lines = [format_cycles(g) for g in all_automorphisms(graph)]
    _emit(args, "\n".join(lines))
    return 0


def cmd_oracle_fpf(args) -> int:
    graph = _read_graph(args.graph, args.format)
    gamma = find_fixed_point_free_involution(graph)
    if gamma is None:
        _emit(args, "none")
        return 1
    _emit(args, format_cycles(gamma))
    return 0


def cmd_oracle_max_refine(args) -> int:
    graph = _read_graph(args.graph, args.format)
    p = _read_partition(args.partition, graph.n)
    _emit(args, format_partition(max_we_refinement(graph, p, args.tol)))
    return 0


def cmd_experiment(args) -> int:
    if args.enumerate is not None:
        source = EnumeratedSource(args.enumerate)
    else:
        if args.n is None:
            raise WepartError("--random needs --n")
        source = RandomSource(args.random, args.n)
    out_dir = args.out or "."
    os.makedirs(out_dir, exist_ok=True)
    stats: dict = {}
    records = list(run_experiment(source, args.seed, tol=args.tol,
                                  verify_fraction=args.verify_fraction,
                                  stats=stats))
    write_records(records, os.path.join(out_dir, "records.csv"))
    write_histogram(records, stats["admitted"],
                    os.path.join(out_dir, "hist_k.csv"))
    write_metadata(os.path.join(out_dir, "metadata.json"), source=source,
                   seed=args.seed, stats=stats, record_count=len(records),
                   tol=args.tol, verify_fraction=args.verify_fraction)
    print(f"{len(records)} records from {stats['admitted']} graphs "
          f"({stats['skipped']} discarded, {stats['verified']} joins "
          f"re-verified) -> {out_dir}")
    return 0


# --- parser ---------------------------------------------------------------------

def _add_common(sub, *, graph: bool = True, tol: Optional[float] = CHECK_TOL):
    if graph:
        sub.add_argument("graph", help="graph file, or - for stdin")
    sub.add_argument("--format", choices=("graph6", "edges"),
                     default="graph6", help="graph input format")
    if tol is not None:
        sub.add_argument("--tol", type=float, default=tol,
                         help=f"numeric tolerance (default {tol:g})")
    sub.add_argument("--out", help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wepart",
        description="Weight-equitable partition toolkit for undirected graphs.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("perron",
                        help="spectral radius and Perron vector (min entry 1)")
    _add_common(p, tol=PERRON_TOL)
    p.set_defaults(func=cmd_perron)

    p = subs.add_parser("check", help="test a partition against a graph")
    _add_common(p)
    p.add_argument("partition", help="partition file, one cell per line")
    p.add_argument("--mode", choices=("equitable", "weight", "commute", "binv"),
                   default="weight",
                   help="which equitability test to run")
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("condense",
                        help="print the condensed matrix and cell norms")
    _add_common(p)
    p.add_argument("partition")
    p.set_defaults(func=cmd_condense)

    for name, fn in (("join", cmd_join), ("meet", cmd_meet)):
        p = subs.add_parser(name, help=f"{name} of two partition files")
        p.add_argument("p")
        p.add_argument("q")
        p.add_argument("--out", help="write output to this file")
        p.set_defaults(func=fn)

    p = subs.add_parser("cotree", help="canonical cotree term of a cograph")
    _add_common(p, tol=None)
    p.set_defaults(func=cmd_cotree)

    p = subs.add_parser("homog2",
                        help="2-homogeneous partition of a cograph, or none")
    _add_common(p, tol=None)
    p.set_defaults(func=cmd_homog2)

    p = subs.add_parser("chomog",
                        help="search for cell-size-c tree symmetry")
    _add_common(p, tol=None)
    p.add_argument("--c", type=int, required=True, help="cell size, c >= 2")
    p.set_defaults(func=cmd_chomog)

    p = subs.add_parser("joint",
                        help="balanced/weight-equitable/ratio/witness report")
    p.add_argument("graph_g")
    p.add_argument("graph_h")
    p.add_argument("partition", help="joint partition of both vertex sets")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--tol", type=float, default=CHECK_TOL)
    p.add_argument("--out")
    p.set_defaults(func=cmd_joint)

    p = subs.add_parser("oracle", help="brute-force ground truth")
    osubs = p.add_subparsers(dest="oracle_command", required=True)

    q = osubs.add_parser("we-enum",
                         help="all weight-equitable partitions, brute force")
    _add_common(q)
    q.set_defaults(func=cmd_oracle_we_enum)

    q = osubs.add_parser("aut", help="the full automorphism group")
    _add_common(q, tol=None)
    q.set_defaults(func=cmd_oracle_aut)

    q = osubs.add_parser("fpf-involution",
                         help="a fixed-point-free involutionary automorphism")
    _add_common(q, tol=None)
    q.set_defaults(func=cmd_oracle_fpf)

    q = osubs.add_parser("max-refine",
                         help="join of all weight-equitable refinements")
    _add_common(q)
    q.add_argument("partition")
    q.set_defaults(func=cmd_oracle_max_refine)

    p = subs.add_parser("experiment",
                        help="join-coarseness experiment over cographs")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--random", type=int, metavar="COUNT",
                       help="sample COUNT admitting cographs")
    group.add_argument("--enumerate", type=int, metavar="N",
                       help="all connected cographs on N vertices")
    p.add_argument("--n", type=int, help="vertex count for --random")
    p.add_argument("--seed", type=int, help="master seed (required)")
    p.add_argument("--tol", type=float, default=CHECK_TOL)
    p.add_argument("--verify-fraction", type=float, default=0.1,
                   help="fraction of joins to re-verify (default 0.1)")
    p.add_argument("--out", help="output directory (default .)")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WepartError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
