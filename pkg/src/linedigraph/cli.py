"""
Command-line front door.

Every subcommand reads at most one digraph in edge-list format (from
standard input or ``--in``), builds a :class:`~linedigraph.report.Report`
and prints it.  Output depends only on the input and the flags.  The only
randomness is ``verify --random N``, which needs an explicit ``--seed``.

Exit status is 0 when every check in the report passes and 1 when a check
fails or the input is outside a routine's domain.  In the domain-error
case the error class name goes to standard error.  Usage errors exit 2.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from .cayley import verify_cycle_example, cayley_dihedral
from .checks import verify_digraph
from .digraph import (
    Digraph,
    adjacency,
    connected_components,
    induced_subdigraph,
    is_eulerian,
    read_edge_list,
    regularity,
    write_edge_list,
)
from .errors import DigraphError
from .factorization import one_factorization, write_factorization
from .families import (
    random_dag,
    random_digraph,
    random_eulerian_digraph,
    random_regular_digraph,
)
from .line import (
    columns_criterion,
    debruijn,
    is_line_digraph_forbidden,
    iterated_line_digraph,
    line_digraph,
    root_digraph,
    rows_criterion,
)
from .report import Check, Report
from .spectral import PERMANENT_MAX_N, char_poly, permanent, poly_format, poly_mul
from .walk import SUPPORT_TOL, basis_state, build_walk, coin_by_name, distribution, trajectory

__all__ = ["build_parser", "run", "main"]


def _digest(D: Digraph) -> dict:
    k = regularity(D)
    return {"n": D.n, "m": D.m, "regular": "no" if k is None else k}


def _graph_data(D: Digraph, labels: Sequence[Sequence[int]] | None = None) -> dict:
    data: dict = {"n": D.n, "m": D.m, "arcs": [list(a) for a in D.sorted_arcs()]}
    if labels is not None:
        data["labels"] = [list(x) for x in labels]
    return data


def _read_input(args) -> Digraph:
    if args.input:
        with open(args.input) as fh:
            return read_edge_list(fh.read())
    return read_edge_list(sys.stdin.read())


def cmd_line(args) -> Report:
    D = _read_input(args)
    L = line_digraph(D)
    rep = Report("line", _digest(L.graph))
    rep.output = write_edge_list(L.graph, L.label_comments())
    rep.data = _graph_data(L.graph, L.base_arc_of)
    return rep


def cmd_iterate(args) -> Report:
    D = _read_input(args)
    cap = args.max_size if args.max_size is not None else 10**6
    L = iterated_line_digraph(D, args.k, max_vertices=cap)
    rep = Report("iterate", {"k": args.k, **_digest(L.graph)})
    rep.output = write_edge_list(L.graph, L.label_comments())
    rep.data = _graph_data(L.graph, L.base_arc_of)
    return rep


def cmd_recognize(args) -> Report:
    D = _read_input(args)
    rows, cols = rows_criterion(D), columns_criterion(D)
    rep = Report("recognize", {**_digest(D), "line_digraph": "yes" if rows else "no"})
    rep.add("criteria-agree", "row form and column form of the matrix criterion agree", rows == cols)
    cap = args.max_size if args.max_size is not None else 10
    if D.n <= cap:
        forb = is_line_digraph_forbidden(D, max_n=cap)
        rep.info("forbidden-configurations", "no induced forbidden 3- or 4-vertex configuration",
                 ("accepts" if forb else "rejects")
                 + ("" if forb == rows else "; disagrees with the matrix criterion"))
    else:
        rep.skip("forbidden-configurations", "no induced forbidden 3- or 4-vertex configuration",
                 f"{D.n} > {cap} vertices")
    if rows:
        H, arc_of = root_digraph(D)
        rep.output = write_edge_list(
            H, [f"vertex {x} = arc ({a},{b})" for x, (a, b) in enumerate(arc_of)]
        )
        rep.data = {"root": _graph_data(H), "arc_of": [list(a) for a in arc_of]}
    return rep


def cmd_factorize(args) -> Report:
    D = _read_input(args)
    fac = one_factorization(D)
    rep = Report("factorize", _digest(D))
    rep.output = write_factorization(fac)
    rep.data = {"k": fac.k, "n": fac.host_n, "factors": [list(f.successor) for f in fac.factors]}
    return rep


def cmd_walk(args) -> Report:
    D = _read_input(args)
    k = regularity(D)
    coin = coin_by_name(args.coin, k) if k else None
    name = args.coin if k and k > 1 else "trivial"
    W = build_walk(D, coin if coin is not None else np.ones((1, 1)), coin_name=name)
    j, v = args.start
    rep = Report("walk", {**_digest(D), "coin": name, "steps": args.steps})
    if args.json:
        rep.data = W.to_dict(tol=args.tol)
        return rep
    lines = ["t,v,prob"]
    for state in trajectory(W, basis_state(W, j, v), args.steps):
        p = distribution(W, state)
        lines += [f"{state.time},{u},{p[u]:.15g}" for u in range(W.n)]
    rep.output = "\n".join(lines) + "\n"
    return rep


def cmd_spectrum(args) -> Report:
    D = _read_input(args)
    pD = char_poly(adjacency(D))
    rep = Report("spectrum", _digest(D))
    out = [f"charpoly D: {poly_format(pD)}"]
    rep.data = {"charpoly": pD}
    if D.m:
        pL = char_poly(adjacency(line_digraph(D).graph))
        out.append(f"charpoly LD: {poly_format(pL)}")
        rep.data["charpoly_line"] = pL
        if D.m >= D.n:
            rep.add("charpoly", "P(LD, x) = x^(m-n) P(D, x)",
                    pL == poly_mul([0] * (D.m - D.n) + [1], pD))
        else:
            rep.skip("charpoly", "P(LD, x) = x^(m-n) P(D, x)", "m < n")
    rep.output = "\n".join(out) + "\n"
    return rep


def cmd_permanent(args) -> Report:
    D = _read_input(args)
    cap = args.max_size if args.max_size is not None else PERMANENT_MAX_N
    M = adjacency(line_digraph(D).graph) if D.m else np.zeros((0, 0), dtype=np.int64)
    per = permanent(M, max_n=cap)
    comps = all(is_eulerian(induced_subdigraph(D, c)) for c in connected_components(D))
    rep = Report("permanent", _digest(D))
    rep.output = f"permanent: {per}\n"
    rep.data = {"permanent": str(per)}
    rep.add("permanent", "per M(LD) > 0 iff every component eulerian", (per > 0) == comps,
            f"components eulerian: {'yes' if comps else 'no'}")
    return rep


def random_instance(seed: int, index: int) -> Digraph:
    """Instance ``index`` of the ``verify --random`` stream; independent of every other index."""
    rng = np.random.default_rng([seed, index])
    kind = index % 4
    if kind == 0:
        return random_digraph(int(rng.integers(2, 7)), rng, p=0.35)
    if kind == 1:
        n = int(rng.integers(3, 7))
        return random_regular_digraph(n, int(rng.integers(1, 3)), rng)
    if kind == 2:
        return random_eulerian_digraph(int(rng.integers(2, 7)), rng)
    return random_dag(int(rng.integers(2, 7)), rng)


def cmd_verify(args) -> Report:
    opts = dict(coin=args.coin, tol=args.tol)
    if args.max_size is not None:
        opts["max_size"] = args.max_size
    if args.random is None:
        return verify_digraph(_read_input(args), **opts)
    rep = Report("verify", {"instances": args.random, "seed": args.seed})
    for i in range(args.random):
        sub = verify_digraph(random_instance(args.seed, i), **opts)
        dig = " ".join(f"{k}={v}" for k, v in sub.digest.items())
        rep.checks += [
            Check(f"{i}:{c.id}", f"{c.anchor} [{dig}]", c.status, c.detail) for c in sub.checks
        ]
    return rep


def cmd_debruijn(args) -> Report:
    cap = args.max_size if args.max_size is not None else 10**6
    B = debruijn(args.d, args.k, max_vertices=cap)
    rep = Report("debruijn", {"d": args.d, "k": args.k, **_digest(B)})
    rep.output = write_edge_list(B)
    rep.data = _graph_data(B)
    if args.spectrum:
        p = char_poly(adjacency(B))
        rep.output += f"charpoly: {poly_format(p)}\n"
        rep.data["charpoly"] = p
        rep.add("debruijn-spectrum", "spectrum of B(d,k) is {d} plus zeros",
                p == [0] * (B.n - 1) + [-args.d, 1])
    return rep


def cmd_cayley_demo(args) -> Report:
    rep = verify_cycle_example(args.n)
    prism = cayley_dihedral(args.n)
    comments = [f"vertex {i} = {list(g.mapping)}" for i, g in enumerate(prism.element_of)]
    rep.output = write_edge_list(prism.graph, comments)
    rep.data = _graph_data(prism.graph)
    return rep


def _start(text: str) -> tuple[int, int]:
    try:
        j, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'j,v'") from None
    return j, v


def _u64(text: str) -> int:
    x = int(text)
    if not 0 <= x < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="PATH", help="edge-list file (default: stdin)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--seed", type=_u64, default=None, help="seed for verify --random")
    common.add_argument("--max-size", type=int, default=None, help="size cap for the expensive step")
    common.add_argument("--tol", type=float, default=SUPPORT_TOL, help="numeric tolerance")
    common.add_argument("--coin", choices=("hadamard", "grover", "fourier"), default="fourier")
    common.add_argument("--steps", type=int, default=10, help="walk length")

    parser = argparse.ArgumentParser(prog="linedigraph", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("line", cmd_line, "line digraph with arc labels")
    add("iterate", cmd_iterate, "k-th iterated line digraph").add_argument("k", type=int)
    add("recognize", cmd_recognize, "is the input a line digraph; if so, of what")
    add("factorize", cmd_factorize, "1-factorization of a regular digraph")
    add("walk", cmd_walk, "coined quantum walk distributions").add_argument(
        "--start", type=_start, default=(0, 0), metavar="J,V", help="initial basis state |F_J, V>")
    add("spectrum", cmd_spectrum, "exact characteristic polynomials of D and LD")
    add("permanent", cmd_permanent, "exact permanent of the line digraph")
    p = add("verify", cmd_verify, "run every applicable theorem check")
    p.add_argument("--random", type=int, default=None, metavar="N", help="check N seeded random instances")
    p = add("debruijn", cmd_debruijn, "de Bruijn digraph B(d, k)")
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--spectrum", action="store_true")
    add("cayley-demo", cmd_cayley_demo, "dihedral prism as a line digraph").add_argument("n", type=int)
    return parser


def _parse(argv: Sequence[str] | None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.random is not None:
        if args.seed is None:
            parser.error("verify --random needs an explicit --seed")
        if args.random < 0:
            parser.error("--random must be nonnegative")
    if args.steps < 0:
        parser.error("--steps must be nonnegative")
    return args


def run(argv: Sequence[str] | None = None) -> Report:
    """Parse ``argv`` and execute the subcommand; domain errors propagate."""
    args = _parse(argv)
    return args.func(args)


def main(argv: Sequence[str] | None = None) -> int:
    args = _parse(argv)
    try:
        rep = args.func(args)
    except (DigraphError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(rep.render(as_json=args.json))
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
