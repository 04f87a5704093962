"""Shared test fixtures: random homogeneous lattices and brute-force oracles
kept independent of the code paths they check."""

import itertools
import random

from latreg.intlat import Lattice, det, kernel_lattice
from latreg.ring_core import Grading


def random_homogeneous_lattice(rng: random.Random, s=None, max_weight=4, max_mix=2):
    """A random rank-(s-1) lattice homogeneous for a random grading.

    Start from the full orthogonal complement of the weight vector and mix its
    basis with a random invertible integer matrix, which varies the torsion.
    """
    if s is None:
        s = rng.randint(2, 4)
    d = tuple(rng.randint(1, max_weight) for _ in range(s))
    full = kernel_lattice([d])
    k = full.rank
    while True:
        T = [[rng.randint(-max_mix, max_mix) for _ in range(k)] for _ in range(k)]
        if det(T) != 0:
            break
    rows = [
        tuple(sum(T[i][j] * full.basis[j][c] for j in range(k)) for c in range(s))
        for i in range(k)
    ]
    return Lattice(s, rows), Grading(d)


def frobenius_oracle(gens):
    """Largest non-representable integer by boolean DP (Schur bound)."""
    gens = sorted(gens)
    bound = (gens[0] - 1) * (gens[-1] - 1) + gens[-1] + 1
    reach = [False] * (bound + 1)
    reach[0] = True
    for i in range(1, bound + 1):
        reach[i] = any(i >= g and reach[i - g] for g in gens)
    return max((i for i in range(bound + 1) if not reach[i]), default=-1)


def monomials_of_degree(s, deg):
    """All exponent vectors in s variables of total degree exactly deg."""
    if s == 1:
        yield (deg,)
        return
    for first in range(deg + 1):
        for rest in monomials_of_degree(s - 1, deg - first):
            yield (first,) + rest


def monomials_up_to(s, deg):
    for k in range(deg + 1):
        yield from monomials_of_degree(s, k)


def in_kernel(matrix_rows, vec):
    """Independent membership test for ker_Z: literally multiply."""
    return all(sum(a * x for a, x in zip(row, vec)) == 0 for row in matrix_rows)


def naive_point_rank(points, p, d):
    """Rank over F_p of the (monomials of degree d) x (points) matrix, by
    plain fraction-free elimination on small ints; the textbook definition."""
    s = len(points[0])
    rows = []
    for mono in monomials_of_degree(s, d):
        row = []
        for pt in points:
            val = 1
            for x, e in zip(pt, mono):
                if e:
                    val = val * pow(x, e, p) % p
            row.append(val)
        rows.append(row)
    rank = 0
    cols = len(points)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def product_grid(*ranges):
    return itertools.product(*ranges)
