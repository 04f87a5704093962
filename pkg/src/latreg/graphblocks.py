"""Simple graphs, bipartiteness, block decomposition, and the regularity of
vanishing ideals parameterized by graph edges over prime fields."""

from __future__ import annotations

from dataclasses import dataclass

from .binomial_gb import (
    BinomialIdeal,
    MonomialOrder,
    buchberger,
    initial_ideal,
    initial_ideal_with_monomials,
    toric_ideal_monomial_map,
)
from .errors import InvalidArgumentError, NotFoundError, PreconditionError
from .ffvanish import PointSet, PrimeField, enumerate_parameterized, regularity_points
from .hilbert import (
    HilbertFunctionTable,
    index_of_regularity,
    monomial_hilbert,
)
from .invariants import additive_regularity
from .ring_core import Binomial, standard_grading


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        edges = frozenset(tuple(sorted((int(u), int(v)))) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidArgumentError(f"edge ({u},{v}) out of range 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def isolated_vertices(self) -> tuple[int, ...]:
        seen = {v for e in self.edges for v in e}
        return tuple(v for v in range(1, self.n + 1) if v not in seen)


def graph(n: int, edges) -> Graph:
    return Graph(n, frozenset(tuple(e) for e in edges))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as edge sets (they partition E_G); two blocks meet in at most
    one vertex, a cutvertex."""

    blocks: tuple[tuple[tuple[int, int], ...], ...]
    cutvertices: tuple[int, ...]
    isolated: tuple[int, ...]


def characteristic_vectors(G: Graph) -> list[tuple[int, ...]]:
    """e_i + e_j per edge, edges in sorted lexicographic order."""
    out = []
    for u, v in G.sorted_edges:
        vec = [0] * G.n
        vec[u - 1] = 1
        vec[v - 1] = 1
        out.append(tuple(vec))
    return out


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    adj = G.adjacency()
    seen: set[int] = set()
    comps = []
    for start in range(1, G.n + 1):
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def bipartition(G: Graph):
    """Canonical 2-coloring (lowest vertex of each component in V_1), or None
    when the graph has an odd cycle."""
    adj = G.adjacency()
    color: dict[int, int] = {}
    for start in range(1, G.n + 1):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side1 = tuple(v for v in range(1, G.n + 1) if color[v] == 0)
    side2 = tuple(v for v in range(1, G.n + 1) if color[v] == 1)
    return side1, side2


def blocks(G: Graph) -> BlockDecomposition:
    """Biconnected components by depth-first low-link; bridges come out as
    two-vertex blocks, isolated vertices are reported separately."""
    adj = G.adjacency()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    out_blocks: list[tuple[tuple[int, int], ...]] = []
    cuts: set[int] = set()
    counter = [0]

    def dfs(u: int, parent: int | None):
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        children = 0
        for w in adj[u]:
            if w == parent:
                continue
            if w not in disc:
                children += 1
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    # (u, w) closes a block; everything pushed after it belongs
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (u, w):
                            break
                    out_blocks.append(tuple(sorted(tuple(sorted(e)) for e in block)))
                    if parent is not None:
                        cuts.add(u)
            elif disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if parent is None and children > 1:
            cuts.add(u)

    for v in range(1, G.n + 1):
        if v not in disc and adj[v]:
            dfs(v, None)
    return BlockDecomposition(
        tuple(sorted(out_blocks)), tuple(sorted(cuts)), G.isolated_vertices()
    )


def is_forest(G: Graph) -> bool:
    comps = connected_components(G)
    return len(G.edges) == G.n - len(comps)


def _block_subgraph(block_edges) -> Graph:
    verts = sorted({v for e in block_edges for v in e})
    relabel = {v: i + 1 for i, v in enumerate(verts)}
    return graph(len(verts), [(relabel[u], relabel[v]) for u, v in block_edges])


def edge_point_set(G: Graph, field: PrimeField) -> PointSet:
    """The projective set parameterized by the edge monomials y_i y_j."""
    if G.isolated_vertices():
        raise InvalidArgumentError("graph has isolated vertices")
    if not G.edges:
        raise InvalidArgumentError("graph has no edges")
    return enumerate_parameterized(field, characteristic_vectors(G))


def reg_bipartite_blocks(G: Graph, field: PrimeField) -> int:
    """Regularity of the edge point set of a bipartite graph as the sum of
    the block regularities plus (q-2)(c-1)."""
    if bipartition(G) is None:
        raise PreconditionError("graph is not bipartite")
    if G.isolated_vertices():
        raise PreconditionError("graph has isolated vertices")
    dec = blocks(G)
    parts = [
        regularity_points(edge_point_set(_block_subgraph(b), field))
        for b in dec.blocks
    ]
    return additive_regularity(parts, field.p - 1)


def reg_bounds_bipartite(G: Graph, field: PrimeField) -> tuple[int, int]:
    """((|V_1|-1)(q-2), (|V_1|+|V_2|-2)(q-2)) for connected bipartite G with
    |V_2| <= |V_1|."""
    if len(connected_components(G)) != 1:
        raise PreconditionError("graph is not connected")
    parts = bipartition(G)
    if parts is None:
        raise PreconditionError("graph is not bipartite")
    a, b = sorted((len(parts[0]), len(parts[1])))
    q = field.p
    return ((b - 1) * (q - 2), (a + b - 2) * (q - 2))


_COLON_POWER_CAP = 64


def reg_colon_method(G: Graph, field: PrimeField) -> int:
    """Regularity via the colon construction, entirely on Hilbert series.

    Builds I = P + (t_i^{q-1} - t_j^{q-1} : i < j) with P the toric ideal of
    the edge subring, picks t^a = (t_1...t_s)^N with the least N making
    I + (t^a) m-primary (certified by the Hilbert series of the quotient
    being a polynomial), and reads the regularity off the table difference
    H_I(i) - H_{I+(t^a)}(i), which equals the Hilbert function of the point
    set shifted by |a|.
    """
    if bipartition(G) is None:
        raise PreconditionError("graph is not bipartite")
    if is_forest(G):
        raise PreconditionError("graph is a forest")
    q = field.p
    if q < 3:
        raise PreconditionError("need q >= 3")
    vs = characteristic_vectors(G)
    s = len(vs)
    std = standard_grading(s)
    toric = toric_ideal_monomial_map(vs, homogenize_with_z=True)
    gens = list(toric.gens)
    for i in range(s):
        for j in range(i + 1, s):
            plus = tuple(q - 1 if k == i else 0 for k in range(s))
            minus = tuple(q - 1 if k == j else 0 for k in range(s))
            gens.append(Binomial(plus, minus))
    ideal = BinomialIdeal(s, tuple(gens), std)
    order = MonomialOrder.grevlex(std)
    series_i = monomial_hilbert(initial_ideal(buchberger(ideal, order)), std)

    series_q = None
    shift = None
    for power in range(1, _COLON_POWER_CAP + 1):
        mono = (power,) * s
        in_q = initial_ideal_with_monomials(ideal.gens, [mono], order, s)
        candidate = monomial_hilbert(in_q, std)
        if candidate.dimension() == 0:
            series_q = candidate
            shift = s * power
            break
    if series_q is None:
        raise NotFoundError("no m-primary thickening found")

    top = max(len(series_i.numerator), len(series_q.numerator), shift) + 2
    h_i = series_i.expand(top)
    h_q = series_q.expand(top)
    diff = [h_i[k] - h_q[k] for k in range(shift, top + 1)]
    return index_of_regularity(HilbertFunctionTable(tuple(diff)), 1)
