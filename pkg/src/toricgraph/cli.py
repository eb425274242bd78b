"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (reason on stderr), 2 on
usage or I/O errors.
"""

import argparse
import sys

from .blocks import BlockTree, block_decomposition, max_block_distance
from .circuits import circuit_binomial, enumerate_circuit_subgraphs, max_circuit_degree_cactus
from .errors import ENUM_CAP_ENV, ToricGraphError
from .fixtures import fixture, fixtures
from .graphs import Graph, read_graph_file, write_graph_file, format_graph
from .graver import graver_completion
from .grn import GrnParams, build_grn, render_csv, render_table, separation_report
from .lattice import circuit_index, true_degree
from .primitive import graver_from_graph, is_primitive_subgraph
from .toric import Binomial, ToricConfiguration, incidence_configuration

EPILOG = (
    f"Enumeration caps (simple cycles, subgraph sweeps, completion insertions) "
    f"honor the {ENUM_CAP_ENV} environment variable."
)


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("graph", nargs="?", help="graph file (one 'label1 label2' edge per line)")
    sub.add_argument("--fixture", help="use a bundled corpus graph instead of a file")


def _load_graph(args: argparse.Namespace) -> Graph:
    if (args.graph is None) == (args.fixture is None):
        raise ToricGraphError("give exactly one of: a graph file, or --fixture NAME")
    if args.fixture is not None:
        return fixture(args.fixture)
    return read_graph_file(args.graph)


def _read_matrix_file(path: str) -> ToricConfiguration:
    with open(path, encoding="utf-8") as fh:
        tokens = []
        for raw in fh:
            line = raw.split("#", 1)[0]
            tokens.extend(line.split())
    if len(tokens) < 2:
        raise ToricGraphError("matrix file needs a 'rows cols' header")
    rows, cols = int(tokens[0]), int(tokens[1])
    entries = tokens[2:]
    if len(entries) != rows * cols:
        raise ToricGraphError(f"expected {rows * cols} entries, found {len(entries)}")
    data = [[int(entries[i * cols + j]) for j in range(cols)] for i in range(rows)]
    return ToricConfiguration(data)


def _cmd_gen_grn(args: argparse.Namespace) -> int:
    if args.fixture is not None:
        if args.n is not None or args.r is not None:
            raise ToricGraphError("--fixture conflicts with --n/--r")
        g = fixture(args.fixture)
    else:
        if args.n is None or args.r is None:
            raise ToricGraphError("give --n and --r, or --fixture NAME")
        g = build_grn(GrnParams(n=args.n, r=args.r))
    if args.out:
        write_graph_file(g, args.out)
    else:
        sys.stdout.write(format_graph(g))
    return 0


def _cmd_blocks(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    dec = block_decomposition(g)
    tree = BlockTree(dec)
    for b, (edges, kind) in enumerate(zip(dec.blocks, dec.kinds)):
        names = " ".join(f"e{e + 1}" for e in sorted(edges))
        print(f"block B{b} ({kind}): {names}")
    print("cut vertices: " + " ".join(g.label(v) for v in dec.cut_vertices))
    for b, v in tree.edges():
        print(f"block tree edge: B{b} -- {g.label(v)}")
    print(
        f"{len(dec.blocks)} blocks, {len(dec.cut_vertices)} cut vertices, "
        f"max block distance {max_block_distance(tree)}"
    )
    return 0


def _cmd_circuits(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.cactus_fast:
        print(f"t = {max_circuit_degree_cactus(g)}")
        return 0
    best = 0
    for c in enumerate_circuit_subgraphs(g):
        b = circuit_binomial(c, g)
        best = max(best, b.degree)
        if not args.max_degree_only:
            print(b.display())
    print(f"t = {best}")
    return 0


def _cmd_graver(args: argparse.Namespace) -> int:
    if args.matrix is not None:
        if args.graph is not None or args.fixture is not None:
            raise ToricGraphError("--matrix conflicts with a graph argument")
        if args.engine == "graph":
            raise ToricGraphError("the graph engine needs a graph, not a raw matrix")
        vecs = graver_completion(_read_matrix_file(args.matrix)).vectors
    else:
        g = _load_graph(args)
        if args.engine == "completion":
            vecs = graver_completion(incidence_configuration(g)).vectors
        else:
            vecs = tuple(sorted(b.exponents for b in graver_from_graph(g)))
    for v in vecs:
        print(Binomial(v).display())
    return 0


def _cmd_primitive_check(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    verdict = is_primitive_subgraph(g)
    print(f"primitive: {'yes' if verdict.primitive else 'no'}")
    print(f"reason: {verdict.describe()}")
    return 0


def _cmd_index(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    circs = enumerate_circuit_subgraphs(g)
    if not 0 <= args.circuit < len(circs):
        raise ToricGraphError(
            f"circuit index {args.circuit} out of range (graph has {len(circs)} circuits)"
        )
    a = incidence_configuration(g)
    b = circuit_binomial(circs[args.circuit], g)
    print(f"circuit {args.circuit}: {b.display()}")
    print(f"degree = {b.degree}")
    print(f"index = {circuit_index(b, a)}")
    print(f"true degree = {true_degree(b, a)}")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    report = separation_report(args.n, args.rmax, verify_up_to=args.verify_up_to)
    rendered = render_csv(report) if args.format == "csv" else render_table(report)
    sys.stdout.write(rendered)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricgraph",
        description="Circuits, Graver bases, and degree bounds for toric ideals of graphs.",
        epilog=EPILOG,
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gen-grn", help="generate the cycle-attachment graph (or a fixture)")
    p.add_argument("--n", type=int, help="odd cycle length >= 3")
    p.add_argument("--r", type=int, help="attachment depth >= 0")
    p.add_argument("--fixture", help="emit a bundled corpus graph instead")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_gen_grn)

    p = subs.add_parser("blocks", help="block decomposition, block tree, max block distance")
    _add_graph_source(p)
    p.set_defaults(func=_cmd_blocks)

    p = subs.add_parser("circuits", help="enumerate circuits and the max circuit degree t")
    _add_graph_source(p)
    p.add_argument("--max-degree-only", action="store_true", help="print only the t summary")
    p.add_argument(
        "--cactus-fast",
        action="store_true",
        help="compute t by the odd-cactus dynamic program (no enumeration)",
    )
    p.set_defaults(func=_cmd_circuits)

    p = subs.add_parser("graver", help="Graver basis of a graph or raw configuration")
    _add_graph_source(p)
    p.add_argument(
        "--engine",
        choices=("graph", "completion"),
        default="graph",
        help="primitive-subgraph sweep (graph) or lattice completion",
    )
    p.add_argument("--matrix", help="raw matrix file: 'rows cols' then row-major integers")
    p.set_defaults(func=_cmd_graver)

    p = subs.add_parser("primitive-check", help="test the whole input graph for primitivity")
    _add_graph_source(p)
    p.set_defaults(func=_cmd_primitive_check)

    p = subs.add_parser("index", help="degree, lattice index, and true degree of one circuit")
    _add_graph_source(p)
    p.add_argument("--circuit", type=int, required=True, help="0-based position in the circuit enumeration")
    p.set_defaults(func=_cmd_index)

    p = subs.add_parser("report", help="Graver degree vs circuit degree separation table")
    p.add_argument("--n", type=int, required=True, help="odd cycle length >= 3")
    p.add_argument("--rmax", type=int, required=True, help="largest attachment depth")
    p.add_argument("--verify-up-to", type=int, default=2, help="cross-check depth (default 2)")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(func=_cmd_report)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ToricGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
