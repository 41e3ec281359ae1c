"""Shared oracles and generators for the test suite.

Everything here is deliberately independent of the code paths under test:
determinants come from fraction-free Bareiss elimination, Smith diagonals
from determinantal divisors (gcds of k x k minors), Lyndon words from the
brute-force rotation predicate, and random chain complexes are assembled
from elementary pieces with known homology and then conjugated by random
unimodular basis changes.
"""

from __future__ import annotations

import random
from itertools import combinations, product, zip_longest
from math import gcd, prod

import pytest

from towercalc.chains import ChainComplex
from towercalc.matrix import Matrix


# ---- exact determinants and the minors oracle -----------------------------


def det_bareiss(rows) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def snf_diagonal_via_minors(rows, nrows: int, ncols: int) -> tuple[int, ...]:
    """Invariant factors from determinantal divisors: d_k = g_k / g_{k-1}
    with g_k the gcd of all k x k minors."""
    rmax = min(nrows, ncols)
    diag = []
    g_prev = 1
    for k in range(1, rmax + 1):
        g = 0
        for rs in combinations(range(nrows), k):
            for cs in combinations(range(ncols), k):
                sub = [[rows[i][j] for j in cs] for i in rs]
                g = gcd(g, abs(det_bareiss(sub)))
        if g == 0:
            break
        diag.append(g // g_prev)
        g_prev = g
    diag += [0] * (rmax - len(diag))
    return tuple(diag)


def is_unimodular(mat: Matrix) -> bool:
    return mat.rows == mat.cols and abs(det_bareiss(mat.to_lists())) == 1


# ---- brute-force word combinatorics ----------------------------------------


def brute_lyndon_words(g: int, length: int) -> list[tuple[int, ...]]:
    """Aperiodic rotation-minimal words by exhaustive enumeration."""
    out = []
    for w in product(range(g), repeat=length):
        if all(w < w[i:] + w[:i] for i in range(1, length)):
            out.append(w)
    return out


def brute_wedge_table(dims, q_max: int) -> dict[int, int]:
    """Rational homotopy ranks of a sphere wedge by enumerating all basic
    products and applying the classical single-sphere pattern inline."""
    dims = tuple(dims)
    entries: dict[int, int] = {}
    min_step = min(d - 1 for d in dims)
    max_weight = max(0, (q_max - 1) // min_step)
    for ell in range(1, max_weight + 1):
        for word in brute_lyndon_words(len(dims), ell):
            dim = 1 + sum(dims[c] - 1 for c in word)
            hits = [dim] if dim % 2 else [dim, 2 * dim - 1]
            for q in hits:
                if q <= q_max:
                    entries[q] = entries.get(q, 0) + 1
    return dict(sorted(entries.items()))


# ---- abelian-group bookkeeping ---------------------------------------------


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors_from_orders(orders) -> tuple[int, ...]:
    """Collapse a multiset of cyclic orders into the invariant-factor chain."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        for p, e in _factorint(n).items():
            by_prime.setdefault(p, []).append(e)
    columns = [
        sorted(exps, reverse=True) for exps in by_prime.values()
    ]
    primes = list(by_prime)
    chain = []
    for exps in zip_longest(*columns, fillvalue=0):
        chain.append(prod(p ** e for p, e in zip(primes, exps)))
    chain = [c for c in chain if c > 1]
    return tuple(sorted(chain))


# ---- random complexes with known homology ----------------------------------


def random_unimodular(rng: random.Random, n: int) -> Matrix:
    m = Matrix.identity(n)
    if n < 2:
        return m
    for _ in range(2 * n + 2):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-2, -1, 1, 2])
        shear = [[int(a == b) for b in range(n)] for a in range(n)]
        shear[i][j] = k
        m = m @ Matrix.from_rows(shear)
        if rng.random() < 0.25:
            flip = [[int(a == b) for b in range(n)] for a in range(n)]
            r = rng.randrange(n)
            flip[r][r] = -1
            m = m @ Matrix.from_rows(flip)
    return m


def random_pieces(rng: random.Random, min_degree: int = 0, max_degree: int = 4,
                  count: int = 5) -> list[tuple]:
    pieces = []
    for _ in range(count):
        if rng.random() < 0.5:
            pieces.append(("free", rng.randint(min_degree, max_degree)))
        else:
            d = rng.randint(min_degree, max_degree - 1)
            pieces.append(("torsion", d, rng.randint(2, 6)))
    return pieces


def complex_from_pieces(pieces, rng: random.Random | None = None):
    """Build a direct sum of elementary complexes and optionally scramble it.

    Pieces: ("free", d) adds Z to H_d; ("torsion", d, k) adds Z/k to H_d via
    a two-term complex in degrees d+1, d. Returns (complex, expected) where
    expected maps degree -> (betti, invariant factor tuple).
    """
    ranks: dict[int, int] = {}

    def alloc(d: int) -> int:
        idx = ranks.get(d, 0)
        ranks[d] = idx + 1
        return idx

    entries = []  # (degree, row index in d-1, col index in d, value)
    expected_betti: dict[int, int] = {}
    expected_orders: dict[int, list[int]] = {}
    for piece in pieces:
        if piece[0] == "free":
            _, d = piece
            alloc(d)
            expected_betti[d] = expected_betti.get(d, 0) + 1
        else:
            _, d, k = piece
            col = alloc(d + 1)
            row = alloc(d)
            entries.append((d + 1, row, col, k))
            if k > 1:
                expected_orders.setdefault(d, []).append(k)
    boundaries = {}
    for d, row, col, k in entries:
        mat = boundaries.setdefault(
            d, [[0] * ranks.get(d, 0) for _ in range(ranks.get(d - 1, 0))]
        )
        mat[row][col] = k
    c = ChainComplex(ranks, {d: Matrix.from_rows(m, cols=ranks.get(d, 0))
                             for d, m in boundaries.items()})
    if rng is not None:
        basis = {d: random_unimodular(rng, r) for d, r in c.ranks.items()}
        scrambled = {}
        for d in range(c.min_degree + 1, c.max_degree + 1):
            p_out = basis.get(d - 1, Matrix.identity(c.rank(d - 1)))
            p_in = basis.get(d, Matrix.identity(c.rank(d)))
            scrambled[d] = p_out @ c.boundary(d) @ p_in.unimodular_inverse()
        c = ChainComplex(dict(c.ranks), scrambled)
    expected = {}
    degrees = set(expected_betti) | set(expected_orders)
    for d in degrees:
        expected[d] = (
            expected_betti.get(d, 0),
            invariant_factors_from_orders(expected_orders.get(d, [])),
        )
    return c, expected


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20250810)
