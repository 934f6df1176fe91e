"""Ring automorphisms of integral quandle rings given as integer matrices.

Matrix convention: column x holds the coordinates of the image of e_x, so
``M[y][x]`` is the coefficient of e_y in psi(e_x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from quandlering.errors import DimensionMismatch, NotAutomorphism, NotBlockStructured
from quandlering.idempotents import enumerate_idempotents
from quandlering.quandle import Quandle, x6

Matrix = tuple[tuple[int, ...], ...]

X6_BLOCKS = ((0, 1), (2, 3), (4, 5))


def _square(m: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    if len(m) != n or any(len(r) != n for r in m):
        raise DimensionMismatch(f"expected a {n}x{n} matrix")
    return [[int(a) for a in r] for r in m]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def _image(m: list[list[int]], x: int) -> tuple[int, ...]:
    return tuple(row[x] for row in m)


def _product(q: Quandle, u: Sequence[int], v: Sequence[int]) -> list[int]:
    out = [0] * q.n
    for x, a in enumerate(u):
        if a:
            row = q.table[x]
            for y, b in enumerate(v):
                if b:
                    out[row[y]] += a * b
    return out


def multiplicativity_failures(q: Quandle, m: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Basis pairs (i, j) with psi(e_i e_j) != psi(e_i) psi(e_j)."""
    m = _square(m, q.n)
    cols = [_image(m, x) for x in range(q.n)]
    bad = []
    for i in range(q.n):
        for j in range(q.n):
            if _product(q, cols[i], cols[j]) != list(cols[q.table[i][j]]):
                bad.append((i, j))
    return bad


def verify_ring_morphism(q: Quandle, m: Sequence[Sequence[int]]) -> bool:
    """True iff ``m`` is in GL(n, Z) and multiplicative on all basis pairs."""
    m = _square(m, q.n)
    if abs(determinant(m)) != 1:
        return False
    return not multiplicativity_failures(q, m)


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    n = len(perm)
    return tuple(tuple(int(perm[x] == y) for x in range(n)) for y in range(n))


def identity_matrix(n: int) -> Matrix:
    return permutation_matrix(range(n))


def block_matrix(blocks: Sequence[Sequence[Sequence[int]]]) -> Matrix:
    """Block-diagonal matrix from 2x2 blocks."""
    n = 2 * len(blocks)
    m = [[0] * n for _ in range(n)]
    for b, blk in enumerate(blocks):
        for r in range(2):
            for c in range(2):
                m[2 * b + r][2 * b + c] = blk[r][c]
    return tuple(tuple(r) for r in m)


# automorphisms of Z[T_2]


def atq_block(alpha: int, eps: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """2x2 matrix of t_1 -> a t_1 + (1-a) t_2, t_2 -> (a+e) t_1 + (1-a-e) t_2."""
    if eps not in (1, -1):
        raise NotBlockStructured(f"eps must be +1 or -1, got {eps}")
    return ((alpha, alpha + eps), (1 - alpha, 1 - alpha - eps))


def atq_decode(block: Sequence[Sequence[int]]) -> tuple[int, int]:
    """(alpha, eps) of a 2x2 block; alpha = B[0][0], eps = B[0][1] - B[0][0]."""
    alpha = block[0][0]
    eps = block[0][1] - block[0][0]
    if eps not in (1, -1) or tuple(map(tuple, block)) != atq_block(alpha, eps):
        raise NotBlockStructured(f"block {block} is not of the two-parameter form")
    return alpha, eps


@dataclass(frozen=True)
class AutDecomposition:
    """psi = (block automorphisms) composed with a permutation of blocks.

    ``block_permutation[b]`` is the target block of source block b and
    ``params[b]`` the (alpha, eps) of the 2x2 block sitting there.
    """

    block_permutation: tuple[int, int, int]
    params: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    def reassemble(self) -> Matrix:
        m = [[0] * 6 for _ in range(6)]
        for b, (alpha, eps) in enumerate(self.params):
            blk = atq_block(alpha, eps)
            t = self.block_permutation[b]
            for r in range(2):
                for c in range(2):
                    m[2 * t + r][2 * b + c] = blk[r][c]
        return tuple(tuple(r) for r in m)

    def as_dict(self) -> dict:
        return {
            "block_permutation": list(self.block_permutation),
            "params": [{"alpha": a, "eps": e} for a, e in self.params],
        }


def decompose_x6_automorphism(m: Sequence[Sequence[int]]) -> AutDecomposition:
    q = x6()
    m = _square(m, 6)
    if not verify_ring_morphism(q, m):
        raise NotAutomorphism("matrix is not a ring automorphism of Z[X]")
    perm, params = [], []
    for b, cols in enumerate(X6_BLOCKS):
        targets = {y // 2 for x in cols for y in range(6) if m[y][x]}
        if len(targets) != 1:
            raise NotBlockStructured(f"block {b} spreads over target blocks {sorted(targets)}")
        t = targets.pop()
        blk = [[m[2 * t + r][cols[c]] for c in range(2)] for r in range(2)]
        perm.append(t)
        params.append(atq_decode(blk))
    if sorted(perm) != [0, 1, 2]:
        raise NotBlockStructured("blocks are not permuted bijectively")
    return AutDecomposition(tuple(perm), tuple(params))


def ring_automorphisms(q: Quandle, bound: int) -> list[Matrix]:
    """Ring automorphisms whose basis images are idempotents found in the
    E-box of radius ``bound``.  Box-level evidence only."""
    idem = enumerate_idempotents(q, bound)
    cands = sorted(idem.vectors())
    n = q.n
    t = q.table
    found = []
    img: list[tuple[int, ...]] = []

    def consistent(k: int) -> bool:
        for i in range(k + 1):
            for j in range(k + 1):
                if i != k and j != k:
                    continue
                z = t[i][j]
                if z <= k and _product(q, img[i], img[j]) != list(img[z]):
                    return False
        return True

    def search(k: int) -> None:
        if k == n:
            m = tuple(tuple(img[x][y] for x in range(n)) for y in range(n))
            if abs(determinant(m)) == 1:
                found.append(m)
            return
        for c in cands:
            img.append(c)
            if consistent(k):
                search(k + 1)
            img.pop()

    search(0)
    return sorted(found)
