"""Command-line front end.

Exit codes: 0 success or perfect, 1 negative verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import formats
from .exact import alpha_t, invariant_report, perfection_oracle
from .graph import (
    GraphError,
    MultiGraph,
    connected_components,
    cycle,
    complete,
    random_multigraph,
    s_t,
    t_complement,
    t_complete,
    underlying_simple,
    uniform_inflation,
)
from .perfect_coloring import ImperfectGraphError, color_perfect, max_sdt_set_perfect
from .reduction import build_reduction, parse_dimacs, verify_reduction
from .structural import perfection_certificate
from .corpus import verify_corpus

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2
EXHAUSTIVE_LIMIT = 60000


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _load_graph(path: str) -> MultiGraph:
    return formats.parse_graph(_read_text(path))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _fmt(vs) -> str:
    return " ".join(map(str, vs))


def cmd_info(args) -> int:
    G = _load_graph(args.graph)
    comps = connected_components(G)
    payload = {
        "n": G.n,
        "pairs": G.num_pairs,
        "edges": G.num_edges,
        "mu": G.max_multiplicity,
        "min_degree": G.min_degree,
        "max_degree": G.max_degree,
        "components": len(comps),
    }
    _emit(args, payload, " ".join(f"{k}={v}" for k, v in payload.items()))
    return EXIT_OK


def cmd_invariants(args) -> int:
    G = _load_graph(args.graph)
    rep = invariant_report(G, args.t)
    payload = {"n": G.n, "mu": G.max_multiplicity, "t": args.t, **rep.to_dict()}
    text = "\n".join([
        f"n={G.n} mu={G.max_multiplicity} t={args.t}",
        f"omega_t={rep.omega_t} alpha_t={rep.alpha_t} chi_t={rep.chi_t}",
        f"clique: {_fmt(rep.witness_clique)}",
        f"sdt_set: {_fmt(rep.witness_sdt_set)}",
        "coloring: " + _fmt(f"{v}:{c}" for v, c in rep.witness_coloring.assignment.items()),
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_perfect(args) -> int:
    G = _load_graph(args.graph)
    cert = perfection_certificate(G, args.t)
    payload = cert.to_dict()
    lines = [str(cert)]
    if args.oracle:
        oracle = perfection_oracle(G, args.t)
        payload["oracle"] = {
            "perfect": oracle.perfect,
            "witness": None if oracle.witness is None else list(oracle.witness),
            "omega_t": oracle.omega_t,
            "chi_t": oracle.chi_t,
        }
        if oracle.perfect != cert.perfect:
            print(f"oracle disagreement: structural={cert.verdict} oracle perfect={oracle.perfect}",
                  file=sys.stderr)
            _emit(args, payload, "\n".join(lines))
            return EXIT_ERROR
        lines.append("oracle: agree")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if cert.perfect else EXIT_NEGATIVE


def cmd_color(args) -> int:
    G = _load_graph(args.graph)
    try:
        phi = color_perfect(G, args.t)
    except ImperfectGraphError as exc:
        _emit(args, exc.certificate.to_dict(), str(exc.certificate))
        return EXIT_NEGATIVE
    payload = {"colors": phi.num_colors, "coloring": {str(v): c for v, c in phi.assignment.items()}}
    _emit(args, payload, formats.serialize_coloring(phi.assignment).rstrip("\n"))
    return EXIT_OK


def cmd_alpha(args) -> int:
    G = _load_graph(args.graph)
    method = "exact"
    X = None
    if args.t >= 2:
        try:
            X = max_sdt_set_perfect(G, args.t)
            method = "perfect"
        except ImperfectGraphError:
            X = None
    if X is None:
        X = alpha_t(G, args.t)[1]
    payload = {"alpha_t": len(X), "set": list(X), "method": method}
    _emit(args, payload, f"alpha_t={len(X)}\nset: {_fmt(X)}\nmethod: {method}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    instance = parse_dimacs(_read_text(args.cnf))
    G, rmap = build_reduction(instance, subdivide=args.subdivide)
    graph_text = formats.serialize_graph(G, 2)
    if args.json:
        print(json.dumps({"graph": graph_text, "labels": rmap.labels}, sort_keys=True))
        return EXIT_OK
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(graph_text)
    else:
        sys.stdout.write(graph_text)
    if args.labels:
        with open(args.labels, "w", encoding="utf-8") as f:
            f.write(rmap.serialize())
    elif not args.output:
        sys.stdout.write(rmap.serialize())
    return EXIT_OK


def cmd_verify_reduction(args) -> int:
    instance = parse_dimacs(_read_text(args.cnf))
    rep = verify_reduction(instance, subdivide=args.subdivide)
    text = "\n".join([
        rep.summary(),
        f"order={rep.order} n={rep.n} m={rep.m} subdivide={rep.subdivide}",
        f"induced_cycle: {_fmt(rep.induced_cycle) if rep.induced_cycle else '-'}",
        f"s2_perfect: {rep.s2_perfect} ({rep.s2_certificate})",
        f"structural_perfect: {rep.structural_perfect} ({rep.structural})",
        f"consistent: {rep.consistent}",
    ])
    _emit(args, rep.to_dict(), text)
    return EXIT_OK if rep.agreement and rep.consistent else EXIT_NEGATIVE


def cmd_verify_corpus(args) -> int:
    if args.mode == "exhaustive":
        count = (args.t + 1) ** comb(args.nmax, 2)
        if count > EXHAUSTIVE_LIMIT:
            raise UsageError(f"exhaustive corpus would hold {count} graphs (limit {EXHAUSTIVE_LIMIT})")
    elif args.nmax > 8:
        raise UsageError("random mode supports --nmax <= 8")
    report = verify_corpus(args.t, args.nmax, args.mode, args.seed, args.sample)
    header = f"verify-corpus t={args.t} nmax={args.nmax} mode={args.mode} seed={args.seed}"
    _emit(args, report.to_dict(), header + "\n" + report.summary())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "cycle":
        G = cycle(args.n)
    elif kind == "complete":
        G = complete(args.n)
    elif kind == "tcomplete":
        G = t_complete(args.n, args.t)
    elif kind == "random":
        G = random_multigraph(args.n, args.t, args.density, args.seed)
    else:
        raise UsageError(f"unknown generator {kind!r}")
    if args.inflate > 1:
        G = uniform_inflation(G, args.inflate)
    print(formats.serialize_graph(G), end="")
    return EXIT_OK


def cmd_transform(args) -> int:
    G = _load_graph(args.graph)
    op = args.op
    if op == "st":
        H = s_t(G, args.t)
    elif op == "simple":
        H = underlying_simple(G)
    elif op == "complement":
        H = t_complement(G, args.t)
    else:
        H = uniform_inflation(G, args.t)
    print(formats.serialize_graph(H), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pointpartition", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph file ('-' for stdin)")
        p.add_argument("-t", type=int, default=2, help="level t (default 2)")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    graph_cmd("info", cmd_info, "order, multiplicity and degree statistics")
    graph_cmd("invariants", cmd_invariants, "omega_t, alpha_t, chi_t with witnesses")
    p = graph_cmd("perfect", cmd_perfect, "decide chi_t-perfection with a certificate")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    graph_cmd("color", cmd_color, "optimal SD_t-coloring of a chi_t-perfect graph")
    graph_cmd("alpha", cmd_alpha, "maximum SD_t-set")
    p = graph_cmd("transform", cmd_transform, "derived graphs: S_t, S, t-complement, inflation")
    p.add_argument("op", choices=["st", "simple", "complement", "inflate"])

    for name, func, help_ in (
        ("reduce", cmd_reduce, "build G(I) from a 3-CNF file"),
        ("verify-reduction", cmd_verify_reduction, "check SAT <=> induced cycle on G(I)"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("cnf", help="DIMACS CNF file ('-' for stdin)")
        p.add_argument("--subdivide", action="store_true", help="subdivide the closing edge d_m a_1")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        if name == "reduce":
            p.add_argument("-o", "--output", help="write the graph here instead of stdout")
            p.add_argument("--labels", help="write the label map here")

    p = sub.add_parser("verify-corpus", help="run the invariant suite over a graph corpus")
    p.add_argument("-t", type=int, default=2)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=500)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_corpus)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("kind", choices=["cycle", "complete", "tcomplete", "random"])
    p.add_argument("n", type=int)
    p.add_argument("-t", type=int, default=1)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inflate", type=int, default=1, help="replace each edge by this many parallel edges")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (formats.ParseError, GraphError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
