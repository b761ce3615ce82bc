"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 parse/input error,
3 resource limit exceeded, 4 contract violation.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from . import io
from .coloring import (
    ChiBoundFn,
    chi_bounded_coloring,
    color_bound,
    exact_node_oracle,
    one_join_compose,
)
from .cuts import cut_diversity, cut_matrix, cut_rank
from .decomposition import (
    decomposition_rank,
    exact_rank_width,
    validate_rank_decomposition,
)
from .errors import (
    ContractError,
    InputError,
    ParseError,
    RankchiError,
    ResourceError,
    ValidationError,
)
from .generate import random_graph, random_join_tree
from .graph import bitset, named_graph
from .oracles import (
    clique_number,
    has_vertex_minor,
    is_proper,
    no_max_clique_monochromatic,
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str):
    return io.graph_from_text(_read(path))


def _parse_vertex_set(spec: str) -> int:
    try:
        return bitset(int(tok) for tok in spec.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad vertex set {spec!r}") from exc


def _parse_bound(f_spec: str, r: int) -> ChiBoundFn:
    if f_spec.startswith("const:"):
        try:
            return ChiBoundFn.constant(int(f_spec.split(":", 1)[1]), r)
        except ValueError as exc:
            raise ParseError(f"bad --f value {f_spec!r}") from exc
    try:
        table = tuple(int(tok) for tok in f_spec.split(","))
    except ValueError as exc:
        raise ParseError(f"bad --f value {f_spec!r}") from exc
    return ChiBoundFn(table, r)


def cmd_cutrank(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    w = _parse_vertex_set(args.set)
    if w & ~g.vertex_mask:
        raise InputError("vertex set contains ids outside the graph")
    m = cut_matrix(g, w)
    print(f"rank={cut_rank(m)} diversity={cut_diversity(m)}")
    return 0


def cmd_rankwidth(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    width, witness = exact_rank_width(g)
    out = args.out or args.graph + ".rankdec"
    Path(out).write_text(io.decomposition_to_text(witness.decomposition))
    print(f"rankwidth={width}")
    print(f"witness={out}")
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    g = _load_graph(args.graph)
    dec = io.decomposition_from_text(_read(args.decomposition), g.n)
    bound = _parse_bound(args.f, args.r)
    coloring = chi_bounded_coloring(g, dec, exact_node_oracle, bound)

    # independent re-verification before success is reported
    omega = clique_number(g) if g.n else 0
    limit = color_bound(bound, max(omega, 1))
    proper_ok = is_proper(g, coloring)
    palette_ok = coloring.palette_size <= limit
    out = args.out or args.graph + ".coloring"
    Path(out).write_text(io.coloring_to_text(coloring))
    print(f"omega={omega}")
    print(f"palette={coloring.palette_size}")
    print(f"bound={limit}")
    print(f"check:proper={'pass' if proper_ok else 'fail'}")
    print(f"check:palette_within_bound={'pass' if palette_ok else 'fail'}")
    print(f"coloring={out}")
    print(f"time={time.perf_counter() - start:.3f}")
    if not (proper_ok and palette_ok):
        raise ContractError("re-verification of the produced coloring failed")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    coloring = io.coloring_from_text(_read(args.coloring), g.n)
    results = {
        "proper": is_proper(g, coloring),
        "max_clique_split": no_max_clique_monochromatic(g, coloring),
    }
    width = None
    if args.decomposition:
        dec = io.decomposition_from_text(_read(args.decomposition), g.n)
        try:
            rd = validate_rank_decomposition(g, dec)
            results["rank_decomposition"] = True
            width = rd.width
        except ValidationError:
            results["rank_decomposition"] = False
    for name, ok in results.items():
        print(f"check:{name}={'pass' if ok else 'fail'}")
    if width is not None:
        print(f"width={width}")
    return 0 if all(results.values()) else 1


def cmd_gen(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    if args.n < 0:
        raise InputError("--n must be nonnegative")

    def emit(ext: str, text: str) -> str:
        path = f"{args.out}.{ext}"
        Path(path).write_text(text)
        return path

    if args.mode == "er":
        g = random_graph(rng, args.n, args.p)
        print(f"graph={emit('graph', io.graph_to_text(g))}")
    elif args.mode == "rw":
        g = random_graph(rng, args.n, args.p)
        width, witness = exact_rank_width(g)
        print(f"graph={emit('graph', io.graph_to_text(g))}")
        print(f"witness={emit('rankdec', io.decomposition_to_text(witness.decomposition))}")
        print(f"rankwidth={width}")
    elif args.mode == "jointree":
        pieces = max(2, min(args.n, 6))
        jt = random_join_tree(rng, pieces)
        composed, dec, _ = one_join_compose(jt)
        print(f"jointree={emit('jointree', io.join_tree_to_text(jt))}")
        print(f"graph={emit('graph', io.graph_to_text(composed))}")
        print(f"decomposition={emit('dec', io.decomposition_to_text(dec))}")
        print(f"rank={decomposition_rank(composed, dec)}")
    else:
        raise InputError(f"unknown mode {args.mode!r}")
    return 0


def cmd_vminor(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    target = args.target
    if target.endswith(".graph") or "/" in target or Path(target).exists():
        h = _load_graph(target)
    else:
        h = named_graph(target)
    verdict = has_vertex_minor(g, h)
    print("contains" if verdict else "free")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankchi",
        description="Decompose graphs along cuts of small GF(2) rank and color them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cutrank", help="rank and diversity of a cut")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="comma-separated vertex ids of W")
    p.set_defaults(func=cmd_cutrank)

    p = sub.add_parser("rankwidth", help="exact rank-width with witness")
    p.add_argument("graph")
    p.add_argument("-o", "--out", help="witness decomposition file")
    p.set_defaults(func=cmd_rankwidth)

    p = sub.add_parser("color", help="chi-bounded coloring from a decomposition")
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.add_argument("--f", required=True, help="const:N or a comma-separated table")
    p.add_argument("--r", type=int, required=True, help="decomposition rank budget")
    p.add_argument("-o", "--out", help="coloring output file")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="re-check a coloring (and decomposition)")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--decomposition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write reproducible random instances")
    p.add_argument("--mode", required=True, choices=["er", "jointree", "rw"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("vminor", help="vertex-minor containment check")
    p.add_argument("graph")
    p.add_argument("--target", required=True, help="w5|w7|cube|cube-|<file>")
    p.set_defaults(func=cmd_vminor)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ParseError, ValidationError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RankchiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
