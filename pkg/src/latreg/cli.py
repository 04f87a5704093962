"""Command-line front end.

Plain-text output by default, ``--json`` for machine-readable objects with
sorted keys; output is byte-deterministic for fixed inputs.  Exit codes:
0 success, 1 domain error (error name on stderr), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .binomial_gb import (
    BinomialIdeal,
    buchberger,
    vanishing_ideal_finite_field,
)
from .errors import LatregError, ParseError
from .ffvanish import (
    PrimeField,
    enumerate_degenerate_torus,
    enumerate_parameterized,
    hilbert_table_points,
    regularity_points,
)
from .graphblocks import (
    Graph,
    edge_point_set,
    graph,
    reg_bipartite_blocks,
    reg_bounds_bipartite,
    reg_colon_method,
)
from .hilbert import (
    a_invariant,
    hilbert_table,
    ideal_hilbert,
    poly_str,
    reg_cm,
)
from .intlat import Lattice, saturate_lattice, smith_normal_form, torsion_order
from .invariants import (
    TorusSpec,
    curve_spec,
    degenerate_torus_invariants,
    mcurve_degree,
    mcurve_regularity,
    prescribe_regularity,
)
from .numsgp import NumericalSemigroup, frobenius_number
from .ring_core import (
    Grading,
    MonomialOrder,
    max_variable_index,
    parse_binomial,
    render_binomial,
    standard_grading,
)


def parse_ideal_file(path: str, num_vars: int | None = None) -> BinomialIdeal:
    """One binomial per line; blank lines and '#' comments ignored."""
    try:
        with open(path) as fh:
            raw = fh.readlines()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    lines = []
    for lineno, line in enumerate(raw, start=1):
        text = line.split("#", 1)[0].strip()
        if text:
            lines.append((lineno, text))
    if num_vars is None:
        num_vars = max((max_variable_index(t) for _, t in lines), default=1)
    gens = []
    for lineno, text in lines:
        try:
            gens.append(parse_binomial(text, num_vars))
        except ParseError as e:
            raise ParseError(f"{path}:{lineno}: {e}") from e
    return BinomialIdeal(num_vars, tuple(gens))


def _read_ideal(args, sources) -> BinomialIdeal:
    """Sources are inline binomials, or a single path to an ideal file."""
    weights = _weights(args)
    num_vars = weights.num_vars if weights else None
    if len(sources) == 1 and os.path.exists(sources[0]):
        return parse_ideal_file(sources[0], num_vars)
    if num_vars is None:
        num_vars = max((max_variable_index(t) for t in sources), default=1)
    gens = tuple(parse_binomial(t, num_vars) for t in sources)
    return BinomialIdeal(num_vars, gens)


def _weights(args) -> Grading | None:
    if getattr(args, "weights", None) is None:
        return None
    try:
        return Grading(tuple(int(w) for w in args.weights.split(",")))
    except ValueError as e:
        raise ParseError(f"bad weights {args.weights!r}") from e


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise ParseError(f"bad integer list {text!r}") from e


def _load_lattice(path: str) -> Lattice:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return Lattice(int(data["ambient"]), [tuple(r) for r in data["generators"]])
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad lattice file {path}: {e}") from e


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return graph(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad graph file {path}: {e}") from e


def _emit(args, obj: dict, lines) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_frobenius(args):
    g = frobenius_number(NumericalSemigroup(tuple(args.generators)))
    _emit(args, {"frobenius": g}, [str(g)])


def _cmd_lattice(args):
    L = _load_lattice(args.file)
    if args.action == "snf":
        sf = smith_normal_form(L.basis if L.basis else ((0,) * L.ambient_dim,))
        inv = list(sf.invariants)
        _emit(
            args,
            {"rank": L.rank, "invariants": inv},
            [f"rank: {L.rank}", "invariants: " + " ".join(map(str, inv))],
        )
    elif args.action == "torsion":
        t = torsion_order(L)
        _emit(args, {"torsion": t}, [str(t)])
    else:  # saturate
        S = saturate_lattice(L)
        rows = [list(r) for r in S.basis]
        _emit(
            args,
            {"ambient": S.ambient_dim, "generators": rows},
            [" ".join(map(str, r)) for r in rows] or ["(zero lattice)"],
        )


def _order_for(args, grading: Grading) -> MonomialOrder:
    kind = getattr(args, "order", "grevlex") or "grevlex"
    if kind == "grevlex":
        return MonomialOrder.grevlex(grading)
    if kind == "lex":
        return MonomialOrder.lex()
    raise ParseError(f"unknown order {kind!r}")


def _cmd_gb(args):
    ideal = _read_ideal(args, args.ideal)
    grading = _weights(args) or standard_grading(ideal.num_vars)
    if grading.num_vars != ideal.num_vars:
        raise ParseError("weights do not match the number of variables")
    G = buchberger(ideal, _order_for(args, grading))
    basis = [render_binomial(b) for b in G.elements]
    _emit(args, {"basis": basis}, basis or ["0"])


def _cmd_hilbert(args):
    ideal = _read_ideal(args, args.ideal)
    grading = _weights(args) or standard_grading(ideal.num_vars)
    if grading.num_vars != ideal.num_vars:
        raise ParseError("weights do not match the number of variables")
    F = ideal_hilbert(ideal, _order_for(args, grading), grading)
    table = hilbert_table(F)
    dim = F.dimension()
    height = grading.num_vars - dim
    reg = reg_cm(F, height)
    _emit(
        args,
        {
            "numerator": list(F.numerator),
            "a_invariant": a_invariant(F),
            "H": list(table.values),
            "dim": dim,
            "reg_cm": reg,
        },
        [
            f"numerator: {poly_str(F.numerator)}",
            f"a-invariant: {a_invariant(F)}",
            "H(0..{}): {}".format(table.truncation, " ".join(map(str, table.values))),
            f"reg (if CM, dim {dim}): {reg}",
        ],
    )


def _cmd_mcurve(args):
    spec = curve_spec(tuple(args.exponents))
    reg, deg = mcurve_regularity(spec), mcurve_degree(spec)
    _emit(args, {"reg": reg, "deg": deg}, [f"reg={reg} deg={deg}"])


def _cmd_torus(args):
    spec = TorusSpec(args.q, _ints(args.v))
    inv = degenerate_torus_invariants(spec)
    _emit(args, {"reg": inv.reg, "deg": inv.deg}, [f"reg={inv.reg} deg={inv.deg}"])


def _cmd_prescribe(args):
    spec = prescribe_regularity(Grading(tuple(args.exponents)))
    _emit(
        args,
        {"q": spec.q, "v": list(spec.v)},
        ["q={} v={}".format(spec.q, ",".join(map(str, spec.v)))],
    )


def _cmd_vanish(args):
    field = PrimeField(args.q)
    if (args.torus is None) == (args.monomials is None):
        raise ParseError("need exactly one of --torus or --monomials")
    if args.torus is not None:
        X = enumerate_degenerate_torus(field, _ints(args.torus))
        vs = None
    else:
        try:
            raw = json.loads(args.monomials)
            vs = [tuple(int(x) for x in v) for v in raw]
        except (ValueError, TypeError) as e:
            raise ParseError(f"bad monomial list: {e}") from e
        X = enumerate_parameterized(field, vs)
    reg = regularity_points(X)
    table = hilbert_table_points(X, reg + 1)
    lines = [
        f"|X|={len(X)}",
        "H(0..{}): {}".format(len(table) - 1, " ".join(map(str, table))),
        f"reg={reg}",
    ]
    obj = {"size": len(X), "H": table, "reg": reg}
    if args.ideal:
        I = vanishing_ideal_finite_field(
            vs if vs is not None else _torus_vectors(_ints(args.torus)), args.q
        )
        basis = [render_binomial(b) for b in I.gens]
        obj["ideal"] = basis
        lines += ["ideal:"] + ["  " + b for b in basis]
    _emit(args, obj, lines)


def _torus_vectors(v):
    s = len(v)
    return [tuple(v[i] if j == i else 0 for j in range(s)) for i in range(s)]


def _cmd_graph_reg(args):
    G = _load_graph(args.file)
    field = PrimeField(args.q)
    if args.method == "oracle":
        reg = regularity_points(edge_point_set(G, field))
        _emit(args, {"reg": reg, "method": "oracle"}, [f"reg={reg}"])
    elif args.method == "blocks":
        reg = reg_bipartite_blocks(G, field)
        _emit(args, {"reg": reg, "method": "blocks"}, [f"reg={reg}"])
    elif args.method == "colon":
        reg = reg_colon_method(G, field)
        _emit(args, {"reg": reg, "method": "colon"}, [f"reg={reg}"])
    else:  # bounds
        lo, hi = reg_bounds_bipartite(G, field)
        _emit(args, {"lower": lo, "upper": hi}, [f"lower={lo} upper={hi}"])


def _cmd_version(args):
    _emit(args, {"version": __version__}, [f"latreg {__version__}"])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latreg",
        description="Exact invariants of graded lattice ideals and of "
        "vanishing ideals over prime fields.",
    )
    ap.add_argument("--json", action="store_true", help="emit a JSON object")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frobenius", help="Frobenius number of a numerical semigroup")
    p.add_argument("generators", nargs="+", type=int)
    p.set_defaults(func=_cmd_frobenius)

    p = sub.add_parser("lattice", help="integer lattice computations")
    p.add_argument("action", choices=["snf", "torsion", "saturate"])
    p.add_argument("file", help='JSON {"ambient": s, "generators": [[...], ...]}')
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("gb", help="reduced Groebner basis of a binomial ideal")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.add_argument("--weights", help="comma-separated positive weights")
    p.add_argument("ideal", nargs="+", help="binomials, or one ideal file")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("hilbert", help="Hilbert series and regularity data")
    p.add_argument("--weights", help="comma-separated positive weights")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.add_argument("ideal", nargs="+", help="binomials, or one ideal file")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("mcurve", help="regularity/degree of a monomial curve")
    p.add_argument("exponents", nargs="+", type=int)
    p.set_defaults(func=_cmd_mcurve)

    p = sub.add_parser("torus", help="invariants of a degenerate projective torus")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--v", required=True, help="comma-separated type")
    p.set_defaults(func=_cmd_torus)

    p = sub.add_parser("prescribe", help="field and torus with prescribed invariants")
    p.add_argument("exponents", nargs="+", type=int)
    p.set_defaults(func=_cmd_prescribe)

    p = sub.add_parser("vanish", help="point counts, Hilbert table, regularity")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--torus", help="comma-separated degenerate torus type")
    p.add_argument("--monomials", help="JSON list of exponent vectors")
    p.add_argument("--ideal", action="store_true", help="also print I(X)")
    p.set_defaults(func=_cmd_vanish)

    p = sub.add_parser("graph-reg", help="regularity of an edge point set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument(
        "--method", choices=["blocks", "oracle", "colon", "bounds"], default="blocks"
    )
    p.add_argument("file", help='JSON {"n": n, "edges": [[u, v], ...]}')
    p.set_defaults(func=_cmd_graph_reg)

    p = sub.add_parser("version", help="print the version")
    p.set_defaults(func=_cmd_version)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.func(args)
    except LatregError as e:
        print(f"{e.name}: {e}", file=sys.stderr)
        return e.exit_code
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
