"""Finite groups given by Cayley tables.

Only what the quandle constructions need: validation, cyclic groups and
direct products, and a check that an element permutation is an
automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from quandlering.errors import InvalidParam, NotAutomorphism


@dataclass(frozen=True)
class FiniteGroup:
    n: int
    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        cayley = tuple(tuple(int(c) for c in row) for row in self.cayley)
        object.__setattr__(self, "cayley", cayley)
        object.__setattr__(self, "inverse", tuple(int(i) for i in self.inverse))
        _validate_group(self)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = self.cayley[r][a]
        return r

    def exponent_divides(self, k: int) -> bool:
        return all(self.power(a, k) == self.identity for a in range(self.n))

    def is_abelian(self) -> bool:
        c = self.cayley
        return all(c[a][b] == c[b][a] for a in range(self.n) for b in range(a))

    @classmethod
    def from_cayley(cls, cayley, label: str = "") -> FiniteGroup:
        """Build a group from its table alone, deriving identity and inverses."""
        n = len(cayley)
        ident = None
        for e in range(n):
            if all(cayley[e][x] == x and cayley[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise InvalidParam("Cayley table has no identity element")
        inverse = []
        for a in range(n):
            inv = [b for b in range(n) if cayley[a][b] == ident]
            if len(inv) != 1:
                raise InvalidParam(f"element {a} has no unique inverse")
            inverse.append(inv[0])
        return cls(n, cayley, ident, tuple(inverse), label)


def _validate_group(g: FiniteGroup) -> None:
    n, c = g.n, g.cayley
    if n < 1 or len(c) != n or any(len(row) != n for row in c):
        raise InvalidParam("Cayley table must be n x n with n >= 1")
    if any(not 0 <= v < n for row in c for v in row):
        raise InvalidParam("Cayley entries out of range")
    e = g.identity
    if not 0 <= e < n or any(c[e][x] != x or c[x][e] != x for x in range(n)):
        raise InvalidParam("identity is not two-sided")
    if len(g.inverse) != n or any(c[a][g.inverse[a]] != e for a in range(n)):
        raise InvalidParam("inverse array inconsistent with Cayley table")
    for a, b, d in product(range(n), repeat=3):
        if c[c[a][b]][d] != c[a][c[b][d]]:
            raise InvalidParam(f"Cayley table not associative at {(a, b, d)}")


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParam("cyclic group order must be positive")
    cayley = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inverse = tuple((-a) % n for a in range(n))
    return FiniteGroup(n, cayley, 0, inverse, f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G x H with element (a, b) stored at index a * |H| + b."""
    m = h.n
    n = g.n * m
    cayley = tuple(
        tuple(
            g.cayley[x // m][y // m] * m + h.cayley[x % m][y % m]
            for y in range(n)
        )
        for x in range(n)
    )
    inverse = tuple(g.inverse[x // m] * m + h.inverse[x % m] for x in range(n))
    label = f"{g.label}x{h.label}" if g.label and h.label else ""
    return FiniteGroup(n, cayley, g.identity * m + h.identity, inverse, label)


def check_automorphism(g: FiniteGroup, f) -> tuple[int, ...]:
    """Return ``f`` as a tuple after checking it is an automorphism of ``g``."""
    f = tuple(int(v) for v in f)
    if sorted(f) != list(range(g.n)):
        raise NotAutomorphism("map is not a permutation of the group elements")
    for a, b in product(range(g.n), repeat=2):
        if f[g.cayley[a][b]] != g.cayley[f[a]][f[b]]:
            raise NotAutomorphism(f"f(ab) != f(a)f(b) at {(a, b)}")
    return f
