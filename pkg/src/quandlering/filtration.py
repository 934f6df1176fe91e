"""Powers of the augmentation ideal as integer lattices in E-coordinates.

Powers are right-normed, ``D^{k+1} = D^k D``.  Because the ring product is
bilinear, the products of the HNF basis rows of ``D^k`` with the E_j span
``D^{k+1}``, so each step is one batch of at most (n-1)^2 products
followed by a single ``hnf`` call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from quandlering import config
from quandlering.errors import InvalidParam, SizeLimit
from quandlering.quandle import Quandle
from quandlering.ring import (
    RingElement,
    ZZ,
    augment,
    delta_multiply,
    from_delta,
    multiply,
    to_delta,
)
from quandlering.zlattice import Lattice, hnf, is_sublattice, quotient_invariants


def _unit(d: int, i: int) -> list[int]:
    v = [0] * d
    v[i] = 1
    return v


def next_power(q: Quandle, lat: Lattice, left_normed: bool = False) -> Lattice:
    """D^k D from D^k (or D D^k when ``left_normed``)."""
    d = q.n - 1
    gens = []
    for row in lat.basis:
        for j in range(d):
            e = _unit(d, j)
            gens.append(delta_multiply(q, e, row) if left_normed else delta_multiply(q, row, e))
    return hnf(gens, d)


@lru_cache(maxsize=32)
def _powers(q: Quandle, k: int, left_normed: bool) -> tuple[Lattice, ...]:
    lat = Lattice.full(q.n - 1)
    out = [lat]
    for _ in range(k - 1):
        lat = next_power(q, lat, left_normed)
        out.append(lat)
    return tuple(out)


def delta_powers(q: Quandle, max_k: int, left_normed: bool = False) -> list[Lattice]:
    """[D^1, ..., D^max_k]."""
    if max_k < 1:
        raise InvalidParam("powers start at k = 1")
    return list(_powers(q, max_k, left_normed))


def delta_power(q: Quandle, k: int, left_normed: bool = False) -> Lattice:
    return delta_powers(q, k, left_normed)[-1]


@dataclass(frozen=True)
class Filtration:
    quandle: Quandle
    powers: list[Lattice]
    quotients: list[tuple[int, list[int]]] = field(default_factory=list)

    def power(self, k: int) -> Lattice:
        return self.powers[k - 1]

    def quotient(self, k: int) -> tuple[int, list[int]]:
        """Invariants of D^k / D^{k+1}."""
        return self.quotients[k - 1]

    def is_descending(self) -> bool:
        return all(is_sublattice(b, a) for a, b in zip(self.powers, self.powers[1:]))


def filtration(q: Quandle, max_k: int, left_normed: bool = False) -> Filtration:
    if max_k < 2:
        raise InvalidParam("a filtration needs max_k >= 2")
    powers = delta_powers(q, max_k, left_normed)
    quotients = [quotient_invariants(b, a) for a, b in zip(powers, powers[1:])]
    return Filtration(q, powers, quotients)


def format_quotient(inv: tuple[int, list[int]]) -> str:
    free, torsion = inv
    parts = ["Z"] * free + [f"Z{t}" for t in torsion]
    return " + ".join(parts) if parts else "0"


def subalgebra_closure(q: Quandle, generators: Sequence[RingElement]) -> Lattice:
    """Smallest additive subgroup containing ``generators`` and closed under
    the ring product.

    Works in E-coordinates when every generator has augmentation zero and in
    full e-coordinates otherwise.
    """
    gens = list(generators)
    for g in gens:
        if g.quandle != q or g.domain != ZZ:
            raise InvalidParam("generators must be integral elements of Z[q]")
    use_delta = all(augment(g) == 0 for g in gens)
    d = q.n - 1 if use_delta else q.n

    def coords(u: RingElement):
        return to_delta(u) if use_delta else u.to_vector()

    def element(v) -> RingElement:
        if use_delta:
            return from_delta(q, v)
        return RingElement.from_vector(q, v)

    lat = hnf([coords(g) for g in gens], d)
    passes = 0
    cap = config.size_cap(config.CLOSURE_CAP)
    while True:
        elems = [element(r) for r in lat.basis]
        prods = [coords(multiply(a, b)) for a in elems for b in elems]
        grown = hnf(list(lat.basis) + prods, d)
        passes += 1
        if grown == lat:
            return lat
        if passes * len(elems) ** 2 > cap:
            raise SizeLimit("subalgebra closure did not stabilise within the cap")
        lat = grown
