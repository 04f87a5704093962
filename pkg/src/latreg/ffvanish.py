"""Point sets over prime fields: enumeration of monomially parameterized
sets, Hilbert functions by evaluation rank, regularity oracles, and subgroup
classification.

Projective points are normalized so the last nonzero coordinate is 1, making
set semantics canonical.  Ranks are computed over F_p with vectorized
Gaussian elimination; instead of building the full (monomials x points)
matrix, the degree-d evaluation space is grown as V_d = sum_i x_i * V_{d-1},
which spans exactly the image of the degree-d forms and gives the same rank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .binomial_gb import BinomialIdeal
from .errors import (
    DimensionError,
    InvalidArgumentError,
    UnsupportedFieldError,
)
from .ring_core import standard_grading


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        q = self.p
        if q < 2 or any(q % k == 0 for k in range(2, int(q**0.5) + 1)):
            raise UnsupportedFieldError(f"{q} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


def normalize_point(field: PrimeField, coords) -> tuple[int, ...]:
    """Scale so the last nonzero coordinate is 1."""
    c = tuple(x % field.p for x in coords)
    last = next((i for i in range(len(c) - 1, -1, -1) if c[i] != 0), None)
    if last is None:
        raise InvalidArgumentError("projective point needs a nonzero coordinate")
    u = field.inv(c[last])
    return tuple((x * u) % field.p for x in c)


@dataclass(frozen=True)
class PointSet:
    """Deduplicated normalized points of P^{s-1} over a prime field."""

    field: PrimeField
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        pts = sorted(set(self.points))
        if not pts:
            raise InvalidArgumentError("empty point set")
        if len({len(p) for p in pts}) != 1:
            raise DimensionError("points have different coordinate counts")
        object.__setattr__(self, "points", tuple(pts))

    @property
    def num_coords(self) -> int:
        return len(self.points[0])

    def __len__(self):
        return len(self.points)


def point_set(field: PrimeField, coords_iterable) -> PointSet:
    return PointSet(field, tuple(normalize_point(field, c) for c in coords_iterable))


def enumerate_parameterized(field: PrimeField, vs) -> PointSet:
    """{[x^{v_1} : ... : x^{v_s}] : x in (F_p^*)^n}."""
    p = field.p
    if p < 3:
        raise UnsupportedFieldError("parameterized sets need p >= 3")
    vs = [tuple(int(e) for e in v) for v in vs]
    if not vs or len({len(v) for v in vs}) != 1:
        raise InvalidArgumentError("need exponent vectors of one common length")
    if any(e < 0 for v in vs for e in v) or any(all(e == 0 for e in v) for v in vs):
        raise InvalidArgumentError("exponent vectors must be nonzero and nonnegative")
    n = len(vs[0])
    # x^e for all units x and exponents appearing in vs
    pw = {x: {e: pow(x, e, p) for e in {e for v in vs for e in v}} for x in range(1, p)}
    pts = set()
    for x in itertools.product(range(1, p), repeat=n):
        coords = tuple(
            _prod_mod((pw[x[j]][v[j]] for j in range(n)), p) for v in vs
        )
        pts.add(normalize_point(field, coords))
    return PointSet(field, tuple(pts))


def _prod_mod(factors, p):
    out = 1
    for f in factors:
        out = out * f % p
    return out


def enumerate_degenerate_torus(field: PrimeField, v) -> PointSet:
    """{[x_1^{v_1} : ... : x_s^{v_s}]}: the parameterized set with each v_i on
    its own parameter."""
    v = tuple(int(x) for x in v)
    if any(x < 1 for x in v):
        raise InvalidArgumentError("torus type entries must be positive")
    s = len(v)
    vs = [tuple(v[i] if j == i else 0 for j in range(s)) for i in range(s)]
    return enumerate_parameterized(field, vs)


def _row_reduce(M: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon basis of the row space over F_p."""
    M = M % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivots = np.nonzero(M[r:, c])[0]
        if pivots.size == 0:
            continue
        i = r + int(pivots[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = M[r] * pow(int(M[r, c]), p - 2, p) % p
        others = np.nonzero(M[:, c])[0]
        others = others[others != r]
        if others.size:
            M[others] = (M[others] - np.outer(M[others, c], M[r])) % p
        r += 1
    return M[:r]


def _evaluation_chain(X: PointSet):
    """Yield (d, basis) where basis rows span the evaluations of degree-d
    forms on X, for d = 0, 1, 2, ..."""
    p = X.field.p
    coords = np.array(X.points, dtype=np.int64).T  # shape (s, |X|)
    basis = np.ones((1, len(X)), dtype=np.int64)
    d = 0
    while True:
        yield d, basis
        cand = np.vstack([basis * coords[i] % p for i in range(X.num_coords)])
        basis = _row_reduce(cand, p)
        d += 1


def hilbert_function_points(X: PointSet, d: int) -> int:
    """H_{I(X)}(d): the rank over F_p of the evaluation of degree-d monomials
    at the points.  Monotone nondecreasing in d and bounded by |X|."""
    if d < 0:
        raise InvalidArgumentError("degree must be nonnegative")
    for k, basis in _evaluation_chain(X):
        if k == d:
            return int(basis.shape[0])


def hilbert_table_points(X: PointSet, dmax: int) -> list[int]:
    out = []
    for k, basis in _evaluation_chain(X):
        if k > dmax:
            return out
        out.append(int(basis.shape[0]))


def regularity_points(X: PointSet) -> int:
    """Least d with H_X(d) = |X|; the regularity of the vanishing ideal
    (Cohen-Macaulay of dimension 1, so regularity = index of regularity)."""
    m = len(X)
    for d, basis in _evaluation_chain(X):
        if basis.shape[0] == m:
            return d
        # Hilbert functions of points strictly increase until |X|
        assert d <= m + 1, "evaluation rank failed to reach |X|"


def _mul_points(field, a, b):
    return normalize_point(field, tuple(x * y for x, y in zip(a, b)))


def is_subgroup_of_torus(X: PointSet) -> bool:
    """True iff all coordinates are nonzero and X is closed under
    componentwise products and inverses (on normalized representatives)."""
    if any(x == 0 for pt in X.points for x in pt):
        return False
    pts = set(X.points)
    f = X.field
    for a in pts:
        if normalize_point(f, tuple(f.inv(x) for x in a)) not in pts:
            return False
        for b in pts:
            if _mul_points(f, a, b) not in pts:
                return False
    return True


def _primitive_root(p: int) -> int:
    order = p - 1
    factors = set()
    m = order
    k = 2
    while k * k <= m:
        while m % k == 0:
            factors.add(k)
            m //= k
        k += 1
    if m > 1:
        factors.add(m)
    for b in range(2, p):
        if all(pow(b, order // f, p) != 1 for f in factors):
            return b
    return 1  # p = 2


def subgroup_to_monomials(X: PointSet) -> list[tuple[int, ...]]:
    """Exponent vectors parameterizing the subgroup X.

    Greedy generator search, then discrete logs base a fixed primitive root;
    the only promise is the round trip: enumerate_parameterized over the
    result reproduces X exactly.  Zero logs are encoded as p-1 (same value,
    keeps every vector nonzero).
    """
    if not is_subgroup_of_torus(X):
        raise InvalidArgumentError("point set is not a subgroup of the torus")
    f = X.field
    p = f.p
    beta = _primitive_root(p)
    log = {pow(beta, k, p): k for k in range(p - 1)}
    identity = normalize_point(f, (1,) * X.num_coords)
    closure = {identity}
    gens: list[tuple[int, ...]] = []
    for alpha in X.points:
        if alpha in closure:
            continue
        gens.append(alpha)
        frontier = set(closure)
        cur = alpha
        while cur not in closure:
            frontier.update(_mul_points(f, cur, h) for h in closure)
            cur = _mul_points(f, cur, alpha)
        closure = frontier
    if not gens:
        gens = [identity]
    return [
        tuple(log[g[i]] if log[g[i]] != 0 else p - 1 for g in gens)
        for i in range(X.num_coords)
    ]


def check_vanishing(I: BinomialIdeal, X: PointSet) -> bool:
    """True iff every generator vanishes at every point.

    Generators must be homogeneous under the standard grading so the zero
    test does not depend on the chosen representatives.
    """
    if I.num_vars != X.num_coords:
        raise DimensionError("ideal and point set have different variable counts")
    std = standard_grading(I.num_vars)
    for g in I.gens:
        if not g.is_homogeneous(std):
            raise InvalidArgumentError("generator is not homogeneous")
    p = X.field.p
    for pt in X.points:
        for g in I.gens:
            lhs = _prod_mod((pow(x, e, p) for x, e in zip(pt, g.plus) if e), p)
            rhs = _prod_mod((pow(x, e, p) for x, e in zip(pt, g.minus) if e), p)
            if (lhs - rhs) % p != 0:
                return False
    return True
