"""Buchberger engine specialized to pure-difference binomial ideals.

S-polynomials and reductions of pure differences are implemented directly on
exponent vectors, so no coefficient arithmetic ever happens and every result
is simultaneously correct over all fields (char 2 included).  Internally an
element is an oriented pair ``(lead, tail)``; ``tail is None`` denotes a bare
monomial, which only arises when monomial generators are supplied explicitly
(used by the colon-method regularity computation) -- with binomial-only input
the engine stays closed inside pure differences, and asserts it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import (
    DimensionError,
    InvalidArgumentError,
    UnsupportedFieldError,
    UnsupportedInputError,
)
from .intlat import Lattice, is_homogeneous, kernel_lattice
from .ring_core import (
    Binomial,
    Grading,
    MonomialOrder,
    split_parts,
    standard_grading,
)


@dataclass(frozen=True)
class BinomialIdeal:
    """An ideal generated by pure-difference binomials.

    Zero binomials are dropped by the constructor.  When a grading is
    attached, every generator must be homogeneous for it.
    """

    num_vars: int
    gens: tuple[Binomial, ...]
    grading: Grading | None = None

    def __post_init__(self):
        gens = tuple(g for g in self.gens if not g.is_zero())
        for g in gens:
            if g.num_vars != self.num_vars:
                raise DimensionError("generator does not match variable count")
        if self.grading is not None:
            if self.grading.num_vars != self.num_vars:
                raise DimensionError("grading does not match variable count")
            for g in gens:
                if not g.is_homogeneous(self.grading):
                    raise InvalidArgumentError(
                        "generator is not homogeneous for the attached grading"
                    )
        object.__setattr__(self, "gens", gens)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis; each element is oriented with its leading
    exponent in ``plus``.  Unique for (ideal, order)."""

    order: MonomialOrder
    num_vars: int
    elements: tuple[Binomial, ...]

    @property
    def leading_exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.plus for g in self.elements)


# ---------------------------------------------------------------------------
# engine internals: elements are (lead, tail) with tail None for monomials


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _orient(order, u, v):
    """Make (lead, tail) from two monomials; None for the zero element."""
    if u == v:
        return None
    if order.key(u) > order.key(v):
        return (u, v)
    return (v, u)


def _reduce_term(u, basis):
    """Normal form of the monomial t^u modulo basis; None when it reduces to 0."""
    while True:
        for lead, tail in basis:
            if _divides(lead, u):
                if tail is None:
                    return None
                u = tuple(x - a + b for x, a, b in zip(u, lead, tail))
                break
        else:
            return u


def _normal_form_elem(order, elem, basis):
    u = _reduce_term(elem[0], basis)
    v = elem[1] if elem[1] is None else _reduce_term(elem[1], basis)
    if u is None and v is None:
        return None
    if u is None:
        return (v, None)
    if v is None:
        return (u, None)
    return _orient(order, u, v)


def _spoly(f, g):
    lcm = tuple(max(a, b) for a, b in zip(f[0], g[0]))
    u = None if f[1] is None else tuple(l - a + b for l, a, b in zip(lcm, f[0], f[1]))
    v = None if g[1] is None else tuple(l - a + b for l, a, b in zip(lcm, g[0], g[1]))
    return u, v


def _buchberger_elems(elems, order):
    """Canonical reduced basis of (lead, tail) elements.

    Normal selection strategy (smallest lcm degree first) with Buchberger's
    coprimality criterion.  Each surviving remainder is fully reduced, so its
    lead strictly enlarges the initial ideal and termination follows from
    Dickson's lemma.
    """
    G: list = []
    pairs: list = []

    def push_pairs(j):
        lead_j, tail_j = G[j]
        for i in range(j):
            lead_i, tail_i = G[i]
            if tail_i is None and tail_j is None:
                continue  # S-polynomial of two monomials is zero
            lcm = tuple(max(a, b) for a, b in zip(lead_i, lead_j))
            if lcm == tuple(a + b for a, b in zip(lead_i, lead_j)):
                continue  # coprime leads reduce to zero
            heapq.heappush(pairs, (order.degree(lcm), order.key(lcm), i, j))

    seed = [e for e in elems if e is not None]
    seed.sort(key=lambda e: order.key(e[0]))
    for e in seed:
        nf = _normal_form_elem(order, e, G)
        if nf is not None:
            G.append(nf)
            push_pairs(len(G) - 1)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        s = _spoly(G[i], G[j])
        if s[0] == s[1]:
            continue
        if s[0] is None or (s[1] is not None and order.key(s[0]) < order.key(s[1])):
            s = (s[1], s[0])
        nf = _normal_form_elem(order, s, G)
        if nf is not None:
            G.append(nf)
            push_pairs(len(G) - 1)

    # minimalize: drop elements whose lead is divisible by another lead
    G.sort(key=lambda e: order.key(e[0]))
    minimal: list = []
    for e in G:
        if not any(_divides(f[0], e[0]) for f in minimal):
            minimal.append(e)
    # interreduce tails; normal forms modulo a Groebner basis are unique,
    # so the result is the canonical reduced basis
    reduced = []
    for lead, tail in minimal:
        if tail is not None:
            tail = _reduce_term(tail, minimal)
        reduced.append((lead, tail))
    reduced.sort(key=lambda e: order.key(e[0]))
    return tuple(reduced)


def _to_elems(gens, order):
    return [_orient(order, g.plus, g.minus) for g in gens]


def _assert_pure(elems):
    assert all(tail is not None for _, tail in elems), (
        "binomial input produced a non-binomial basis element"
    )


# ---------------------------------------------------------------------------
# public operations


def buchberger(I: BinomialIdeal, order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis of a pure-difference binomial ideal."""
    elems = _buchberger_elems(_to_elems(I.gens, order), order)
    _assert_pure(elems)
    for g in I.gens:
        assert _normal_form_elem(order, (g.plus, g.minus), elems) is None, (
            "input generator does not reduce to zero against the basis"
        )
    return GroebnerBasis(
        order, I.num_vars, tuple(Binomial(lead, tail) for lead, tail in elems)
    )


def normal_form(f: Binomial, G: GroebnerBasis) -> Binomial | None:
    """Remainder of f on division by G; None when f lies in the ideal."""
    if f.num_vars != G.num_vars:
        raise DimensionError("binomial does not match basis variable count")
    elems = [(g.plus, g.minus) for g in G.elements]
    nf = _normal_form_elem(G.order, (f.plus, f.minus), elems)
    if nf is None:
        return None
    assert nf[1] is not None
    return Binomial(nf[0], nf[1])


def initial_ideal(G: GroebnerBasis) -> tuple[tuple[int, ...], ...]:
    """Minimal monomial generators of in(I): the leading exponents of G."""
    return G.leading_exponents


def ideal_equal(I: BinomialIdeal, J: BinomialIdeal, order: MonomialOrder) -> bool:
    """True iff the reduced Groebner bases coincide."""
    if I.num_vars != J.num_vars:
        raise DimensionError("ideals live in different rings")
    return buchberger(I, order).elements == buchberger(J, order).elements


def _canonical_order(I: BinomialIdeal) -> MonomialOrder:
    return MonomialOrder.grevlex(I.grading or standard_grading(I.num_vars))


def saturate_variable(I: BinomialIdeal, i: int) -> BinomialIdeal:
    """(I : t_i^infty) for a graded ideal; i is a 0-based variable index.

    Iterates: compute the reduced basis under weighted grevlex with t_i
    cheapest, divide every element by the largest t_i power dividing it,
    repeat until no division happens.
    """
    if I.grading is None:
        raise InvalidArgumentError("saturation requires a graded ideal")
    if not 0 <= i < I.num_vars:
        raise InvalidArgumentError("variable index out of range")
    order = MonomialOrder.grevlex(I.grading, last=i)
    gens = I.gens
    while True:
        elems = _buchberger_elems(_to_elems(gens, order), order)
        _assert_pure(elems)
        changed = False
        stripped = []
        for lead, tail in elems:
            k = min(lead[i], tail[i])
            if k > 0:
                changed = True
                lead = lead[:i] + (lead[i] - k,) + lead[i + 1 :]
                tail = tail[:i] + (tail[i] - k,) + tail[i + 1 :]
            stripped.append(Binomial(lead, tail))
        gens = tuple(stripped)
        if not changed:
            return BinomialIdeal(I.num_vars, gens, I.grading)


def saturate_all(I: BinomialIdeal) -> BinomialIdeal:
    """(I : (t_1 ... t_s)^infty), by chaining variable saturations to a fixpoint."""
    if I.grading is None:
        raise InvalidArgumentError("saturation requires a graded ideal")
    order = _canonical_order(I)
    current = I
    snapshot = buchberger(current, order).elements
    while True:
        for i in range(I.num_vars):
            current = saturate_variable(current, i)
        after = buchberger(current, order).elements
        if after == snapshot:
            return BinomialIdeal(I.num_vars, after, I.grading)
        snapshot = after


def is_lattice_ideal(I: BinomialIdeal) -> bool:
    """Computable restatement of the non-zero-divisor criterion: I is a
    lattice ideal iff it equals its saturation by all the variables."""
    if I.grading is None:
        raise InvalidArgumentError("lattice-ideal test requires a graded ideal")
    return ideal_equal(I, saturate_all(I), _canonical_order(I))


def lattice_ideal_generators(L: Lattice, grading: Grading) -> BinomialIdeal:
    """Generators of the lattice ideal I(L) for a homogeneous lattice.

    Starts from the binomials of a lattice basis and saturates by all the
    variables.
    """
    if not is_homogeneous(L, grading):
        raise UnsupportedInputError("lattice is not homogeneous for the grading")
    gens = []
    for row in L.basis:
        plus, minus = split_parts(row)
        gens.append(Binomial(plus, minus))
    return saturate_all(BinomialIdeal(L.ambient_dim, tuple(gens), grading))


def homogenize_binomials(bins, d: Grading) -> list[Binomial]:
    """Exponent scaling a |-> (d_i a_i) sending each d-homogeneous binomial to
    a standard-homogeneous one."""
    out = []
    for b in bins:
        if not b.is_homogeneous(d):
            raise InvalidArgumentError("binomial is not homogeneous for the grading")
        out.append(
            Binomial(
                tuple(x * w for x, w in zip(b.plus, d.weights)),
                tuple(x * w for x, w in zip(b.minus, d.weights)),
            )
        )
    return out


def is_complete_intersection(L: Lattice, bins, grading: Grading) -> bool:
    """True iff the candidate set generates I(L) and has rank(L) elements.

    Height of I(L) equals rank(L), so the count plus the ideal equality is
    exactly the complete-intersection certificate.
    """
    bins = tuple(b for b in bins if not b.is_zero())
    if len(bins) != L.rank:
        return False
    candidate = BinomialIdeal(L.ambient_dim, bins, grading)
    target = lattice_ideal_generators(L, grading)
    return ideal_equal(candidate, target, MonomialOrder.grevlex(grading))


def eliminate(G: GroebnerBasis, keep) -> BinomialIdeal:
    """Project a Groebner basis under an elimination order to K[keep].

    ``keep`` must be exactly the non-eliminated block of the order.
    """
    keep = sorted(keep)
    if G.order.kind != "elim" or keep != list(range(G.order.block, G.num_vars)):
        raise InvalidArgumentError("order does not eliminate the complement of keep")
    k = G.order.block
    gens = []
    for g in G.elements:
        if all(x == 0 for x in g.plus[:k]) and all(x == 0 for x in g.minus[:k]):
            gens.append(Binomial(g.plus[k:], g.minus[k:]))
    return BinomialIdeal(G.num_vars - k, tuple(gens))


def toric_ideal_monomial_map(vs, homogenize_with_z: bool) -> BinomialIdeal:
    """Toric ideal of t_i |-> y^{v_i} (times z when homogenize_with_z).

    Computed as the lattice ideal of ker_Z(A) where A's columns are the v_i,
    with a row of ones appended for z.  The grading is standard with z and
    the total degrees |v_i| otherwise.
    """
    vs = [tuple(int(x) for x in v) for v in vs]
    if not vs or len({len(v) for v in vs}) != 1:
        raise InvalidArgumentError("need exponent vectors of one common length")
    if any(x < 0 for v in vs for x in v):
        raise InvalidArgumentError("exponent vectors must be nonnegative")
    s = len(vs)
    n = len(vs[0])
    rows = [tuple(v[j] for v in vs) for j in range(n)]
    if homogenize_with_z:
        rows.append((1,) * s)
        grading = standard_grading(s)
    else:
        if any(sum(v) == 0 for v in vs):
            raise InvalidArgumentError(
                "zero exponent vector has no positive degree; use homogenize_with_z"
            )
        grading = Grading(tuple(sum(v) for v in vs))
    return lattice_ideal_generators(kernel_lattice(rows), grading)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def vanishing_ideal_finite_field(vs, q: int) -> BinomialIdeal:
    """Vanishing ideal I(X) of the set parameterized by y^{v_1},...,y^{v_s}
    over the prime field F_q, by eliminating y and z from
    ({t_i - y^{v_i} z} U {y_j^{q-1} - 1}).

    All inputs are pure differences (y^{q-1} - 1 = y^{q-1} - y^0), so the
    elimination runs entirely on the binomial engine.  The result is a graded
    lattice ideal of dimension 1.
    """
    if not _is_prime(q):
        raise UnsupportedFieldError(f"{q} is not prime")
    vs = [tuple(int(x) for x in v) for v in vs]
    if not vs or len({len(v) for v in vs}) != 1:
        raise InvalidArgumentError("need exponent vectors of one common length")
    if any(x < 0 for v in vs for x in v) or any(all(x == 0 for x in v) for v in vs):
        raise InvalidArgumentError("exponent vectors must be nonzero and nonnegative")
    s = len(vs)
    n = len(vs[0])
    total = n + 1 + s  # variable layout: y_1..y_n, z, t_1..t_s
    gens = []
    for i, v in enumerate(vs):
        plus = tuple(1 if j == n + 1 + i else 0 for j in range(total))
        minus = tuple(v) + (1,) + (0,) * s
        gens.append(Binomial(plus, minus))
    zero = (0,) * total
    for j in range(n):
        plus = tuple(q - 1 if k == j else 0 for k in range(total))
        gens.append(Binomial(plus, zero))
    order = MonomialOrder.elimination(n + 1, standard_grading(total))
    G = buchberger(BinomialIdeal(total, tuple(gens)), order)
    J = eliminate(G, range(n + 1, total))
    # re-reduce in K[t] for a canonical generating set; the eliminated ideal
    # is standard-graded, which the constructor checks
    canonical = buchberger(J, MonomialOrder.grevlex(standard_grading(s)))
    return BinomialIdeal(s, canonical.elements, standard_grading(s))


def initial_ideal_with_monomials(
    binomials, monomials, order: MonomialOrder, num_vars: int
) -> tuple[tuple[int, ...], ...]:
    """Minimal generators of in(I + M) for binomial I and monomial gens M.

    The engine handles single monomials as tail-less elements; the basis of a
    binomial-plus-monomial ideal again consists of binomials and monomials.
    """
    elems = _to_elems(binomials, order)
    elems += [(tuple(m), None) for m in monomials]
    basis = _buchberger_elems(elems, order)
    return tuple(lead for lead, _ in basis)
