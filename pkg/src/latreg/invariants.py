"""Closed-form regularity and degree formulas: monomial curves, degree
transfer for dimension-1 lattice ideals, degenerate tori over prime fields,
prescribed-regularity construction, and block additivity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm, prod
from typing import NamedTuple

from .errors import InvalidArgumentError, NotFoundError
from .intlat import Lattice, is_homogeneous, torsion_order
from .numsgp import NumericalSemigroup, frobenius_number
from .ring_core import Grading

_PRIME_SCAN_CAP = 10**6


@dataclass(frozen=True)
class CurveSpec:
    """The monomial curve t_i |-> y^{d_i}: exponents, their gcd r, and the
    numerical semigroup generated by d_i / r."""

    weights: Grading

    @property
    def r(self) -> int:
        return self.weights.r

    @property
    def reduced_semigroup(self) -> NumericalSemigroup:
        r = self.r
        return NumericalSemigroup(tuple(d // r for d in self.weights.weights))


def curve_spec(exponents) -> CurveSpec:
    return CurveSpec(Grading(tuple(int(d) for d in exponents)))


def mcurve_regularity(spec: CurveSpec) -> int:
    """reg of the homogenized monomial-curve ideal:
    r * g(S) + 1 + sum (d_i - 1)."""
    d = spec.weights
    if d.num_vars < 2:
        raise InvalidArgumentError("monomial curve needs at least two exponents")
    g = frobenius_number(spec.reduced_semigroup)
    return spec.r * g + 1 + sum(w - 1 for w in d.weights)


def mcurve_degree(spec: CurveSpec) -> int:
    """deg of the homogenized monomial-curve ideal: d_1 ... d_s / r."""
    d = spec.weights
    if d.num_vars < 2:
        raise InvalidArgumentError("monomial curve needs at least two exponents")
    return prod(d.weights) // spec.r


def degree_transfer(d: Grading, deg_weighted: int) -> int:
    """Degree of the homogenized ideal from the weighted degree:
    (d_1 ... d_s / max d_i) * deg(S/I), for dimension-1 graded lattice ideals."""
    if deg_weighted < 1:
        raise InvalidArgumentError("degree must be positive")
    return (prod(d.weights) // max(d.weights)) * deg_weighted


def lattice_degree_dim1(L: Lattice, d: Grading) -> int:
    """deg(S/I(L)) = (max d_i / r) * |T(Z^s/L)| for homogeneous L of rank s-1."""
    if not is_homogeneous(L, d):
        raise InvalidArgumentError("lattice is not homogeneous for the grading")
    if L.rank != L.ambient_dim - 1:
        raise InvalidArgumentError("degree formula needs rank s-1")
    return (max(d.weights) // d.r) * torsion_order(L)


class TorusInvariants(NamedTuple):
    reg: int
    deg: int


@dataclass(frozen=True)
class TorusSpec:
    """A degenerate projective torus of type v over F_q (q prime)."""

    q: int
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if any(x < 1 for x in self.v):
            raise InvalidArgumentError("torus type entries must be positive")
        if not _is_prime(self.q):
            raise InvalidArgumentError(f"{self.q} is not prime")

    @property
    def derived_weights(self) -> Grading:
        """d_i = (q-1) / gcd(v_i, q-1); each divides q-1."""
        return Grading(tuple((self.q - 1) // gcd(x, self.q - 1) for x in self.v))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    k = 2
    while k * k <= q:
        if q % k == 0:
            return False
        k += 1
    return True


def degenerate_torus_invariants(spec: TorusSpec) -> TorusInvariants:
    """Regularity and degree of the vanishing ideal of a degenerate torus,
    via the monomial-curve formulas on the derived exponents."""
    curve = CurveSpec(spec.derived_weights)
    return TorusInvariants(mcurve_regularity(curve), mcurve_degree(curve))


def prescribe_regularity(d: Grading) -> TorusSpec:
    """Smallest prime q = 1 (mod lcm(d_i)), q >= 3, and v_i = (q-1)/d_i, so the
    degenerate torus over F_q realizes exactly the invariants of d."""
    m = reduce(lcm, d.weights)
    q = m + 1
    while q <= _PRIME_SCAN_CAP:
        if q >= 3 and _is_prime(q):
            spec = TorusSpec(q, tuple((q - 1) // w for w in d.weights))
            assert spec.derived_weights == d, "prescribed type failed to round-trip"
            return spec
        q += m
    raise NotFoundError(f"no admissible prime below {_PRIME_SCAN_CAP}")


def additive_regularity(reg_parts, ell: int) -> int:
    """Sum of block regularities plus the cross-term (c-1)(ell-1)."""
    parts = list(reg_parts)
    if not parts:
        raise InvalidArgumentError("need at least one part")
    if ell < 1:
        raise InvalidArgumentError("ell must be a positive integer")
    return sum(parts) + (len(parts) - 1) * (ell - 1)
