"""Integer lattices in canonical row Hermite normal form.

A ``Lattice`` stores the HNF basis of a subgroup of Z^d: nonzero rows,
pivots strictly moving right, positive pivots, and entries above each
pivot reduced into ``[0, pivot)``.  Because the form is unique, two
lattices are equal as subgroups exactly when their bases are identical.
All arithmetic uses Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from quandlering.errors import DimensionMismatch, InvalidParam

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    ambient_rank: int
    basis: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, v in enumerate(row) if v) for row in self.basis]

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: Lattice) -> bool:
        return is_sublattice(self, other)

    def scaled(self, c: int) -> Lattice:
        return hnf([[c * a for a in row] for row in self.basis], self.ambient_rank)

    def determinant(self) -> int:
        """Index of the lattice in Z^d; 0 if the rank is not full."""
        if self.rank < self.ambient_rank:
            return 0
        det = 1
        for row, p in zip(self.basis, self.pivots):
            det *= row[p]
        return det

    @classmethod
    def full(cls, d: int) -> Lattice:
        return cls(d, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def zero(cls, d: int) -> Lattice:
        return cls(d, ())


def _check(rows: Sequence[Sequence[int]], d: int) -> list[list[int]]:
    out = []
    for r in rows:
        if len(r) != d:
            raise DimensionMismatch(f"vector of length {len(r)} in ambient rank {d}")
        out.append([int(a) for a in r])
    return out


def hnf(rows: Iterable[Sequence[int]], d: int) -> Lattice:
    """Canonical row HNF of the Z-span of ``rows``."""
    m = _check(list(rows), d)
    m = [r for r in m if any(r)]
    top = 0
    for col in range(d):
        if top == len(m):
            break
        # Euclid on column `col` among rows top.. until one nonzero remains
        while True:
            live = [i for i in range(top, len(m)) if m[i][col]]
            if not live:
                break
            piv = min(live, key=lambda i: abs(m[i][col]))
            m[top], m[piv] = m[piv], m[top]
            prow = m[top]
            a = prow[col]
            done = True
            for i in range(top + 1, len(m)):
                b = m[i][col]
                if b:
                    q = b // a
                    m[i] = [x - q * y for x, y in zip(m[i], prow)]
                    if m[i][col]:
                        done = False
            if done:
                break
        if top < len(m) and m[top][col]:
            if m[top][col] < 0:
                m[top] = [-x for x in m[top]]
            p = m[top][col]
            for i in range(top):
                q = m[i][col] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[top])]
            top += 1
    basis = tuple(tuple(r) for r in m[:top] if any(r))
    return Lattice(d, basis)


def span(lattices: Iterable[Lattice]) -> Lattice:
    lattices = list(lattices)
    if not lattices:
        raise InvalidParam("span of an empty family needs an ambient rank")
    d = lattices[0].ambient_rank
    return hnf([row for L in lattices for row in L.basis], d)


def coordinates(lat: Lattice, v: Sequence[int]) -> tuple[int, ...] | None:
    """Integer c with sum c_i * basis_i == v, or None when v is not in ``lat``."""
    if len(v) != lat.ambient_rank:
        raise DimensionMismatch(
            f"vector of length {len(v)} in ambient rank {lat.ambient_rank}"
        )
    r = [int(a) for a in v]
    coeffs = []
    for row, p in zip(lat.basis, lat.pivots):
        if any(r[:p]):
            return None
        q, rem = divmod(r[p], row[p])
        if rem:
            return None
        coeffs.append(q)
        if q:
            r = [x - q * y for x, y in zip(r, row)]
    if any(r):
        return None
    return tuple(coeffs)


def contains(lat: Lattice, v: Sequence[int]) -> bool:
    return coordinates(lat, v) is not None


def is_sublattice(a: Lattice, b: Lattice) -> bool:
    if a.ambient_rank != b.ambient_rank:
        raise DimensionMismatch("lattices live in different ambient ranks")
    return all(contains(b, row) for row in a.basis)


def relative_lattice(sub: Lattice, sup: Lattice) -> Lattice:
    """Express ``sub`` in the basis coordinates of ``sup`` (requires sub <= sup)."""
    rows = []
    for row in sub.basis:
        c = coordinates(sup, row)
        if c is None:
            raise InvalidParam(f"{row} is not in the containing lattice")
        rows.append(c)
    return hnf(rows, sup.rank)


def kernel(rows: Sequence[Sequence[int]], d: int) -> Lattice:
    """Left kernel {c in Z^m : sum c_i rows_i = 0} of an m x d integer matrix."""
    m = _check(rows, d)
    k = len(m)
    aug = [r + [int(i == j) for j in range(k)] for i, r in enumerate(m)]
    h = hnf(aug, d + k)
    ker = [row[d:] for row in h.basis if not any(row[:d])]
    return hnf(ker, k)


def _smith_diagonal(mat: list[list[int]]) -> list[int]:
    """Diagonal of the Smith form by alternating row/column reduction."""
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if clean:
                # pivot must divide the whole remaining block
                bad = next(
                    (
                        (i, j)
                        for i in range(t + 1, rows)
                        for j in range(t + 1, cols)
                        if a[i][j] % p
                    ),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            nz = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            nz += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(nz)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def smith_invariants(lat: Lattice) -> tuple[int, list[int]]:
    """Free rank and torsion invariant factors of Z^d / lat."""
    diag = _smith_diagonal([list(r) for r in lat.basis]) if lat.basis else []
    return lat.ambient_rank - lat.rank, [x for x in diag if x > 1]


def quotient_invariants(sub: Lattice, sup: Lattice) -> tuple[int, list[int]]:
    """Invariants of sup / sub for lattices sub <= sup."""
    return smith_invariants(relative_lattice(sub, sup))
