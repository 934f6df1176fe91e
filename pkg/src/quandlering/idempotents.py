"""Idempotents of integral quandle rings.

Every u in Z[Q] is ``s e_0 + d`` with ``s = eps(u)`` and ``d`` in the
augmentation ideal.  u^2 = u forces s in {0, 1} and then

    d^2 + s (e_0 d + d e_0) = d,

a quadratic condition on the E-coordinates of d.  The box searches here
scan d over ``[-bound, bound]^(n-1)``; results never say more than
"none in box".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterator

import numpy as np

from quandlering import config
from quandlering.errors import InvalidParam, SizeLimit, UnknownFamily
from quandlering.filtration import delta_power
from quandlering.quandle import Quandle, dihedral, commutative, trivial, x6
from quandlering.ring import (
    QQ,
    RingElement,
    all_ones,
    anchor_action,
    e_structure,
    from_delta,
)


@dataclass(frozen=True)
class IdempotentSet:
    quandle: Quandle
    bound: int
    aug0: list[tuple[int, ...]]
    aug1: list[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.aug0) + len(self.aug1)

    def elements(self) -> list[RingElement]:
        """Ring elements, aug-0 first; an aug-1 vector v means e_0 + v."""
        q = self.quandle
        e0 = RingElement.basis(q, 0)
        out = [from_delta(q, v) for v in self.aug0]
        out += [e0 + from_delta(q, v) for v in self.aug1]
        return out

    def vectors(self) -> set[tuple[int, ...]]:
        """All members as full e-coordinate vectors."""
        return {u.to_vector() for u in self.elements()}


def _structure_arrays(q: Quandle):
    d = q.n - 1
    s = np.array(e_structure(q), dtype=np.int64).reshape(d * d, d)
    left, right = anchor_action(q)
    a = np.array(left, dtype=np.int64) + np.array(right, dtype=np.int64)
    return s, a


def _box_chunks(d: int, bound: int) -> Iterator[np.ndarray]:
    """The box [-bound, bound]^d in lexicographic order, one chunk per
    value of the first coordinate."""
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    if d == 1:
        yield vals.reshape(-1, 1)
        return
    rest = np.array(list(iproduct(vals.tolist(), repeat=d - 1)), dtype=np.int64)
    for v in vals:
        first = np.full((rest.shape[0], 1), v, dtype=np.int64)
        yield np.hstack([first, rest])


def _check_box(d: int, bound: int, factor: int = 1) -> None:
    if bound < 0:
        raise InvalidParam("bound must be nonnegative")
    cap = config.size_cap(config.BOX_CAP)
    size = factor * (2 * bound + 1) ** d
    if size > cap:
        raise SizeLimit(f"box of {size} points exceeds cap {cap}")
    # int64 headroom for d^2 quadratic terms with structure constants <= 4
    if 4 * d * d * bound * bound + 4 * d * bound >= 2**62:
        raise SizeLimit("box bound too large for exact 64-bit evaluation")


def enumerate_idempotents(q: Quandle, bound: int) -> IdempotentSet:
    """Every idempotent ``s e_0 + d`` (s in {0,1}) with E-coordinates of d
    in ``[-bound, bound]``; the zero element is left out of ``aug0``."""
    d = q.n - 1
    if d == 0:
        return IdempotentSet(q, bound, [], [()])
    _check_box(d, bound, factor=2)
    s, a = _structure_arrays(q)
    aug0, aug1 = [], []
    for delta in _box_chunks(d, bound):
        outer = (delta[:, :, None] * delta[:, None, :]).reshape(len(delta), d * d)
        sq = outer @ s
        lin = delta @ a
        hit0 = np.all(sq == delta, axis=1) & np.any(delta != 0, axis=1)
        hit1 = np.all(sq + lin == delta, axis=1)
        aug0.extend(tuple(int(x) for x in r) for r in delta[hit0])
        aug1.extend(tuple(int(x) for x in r) for r in delta[hit1])
    return IdempotentSet(q, bound, sorted(aug0), sorted(aug1))


# closed-form families


def _rng(r) -> range:
    lo, hi = r
    return range(lo, hi + 1)


def closed_form_family(tag: str, **params) -> list[RingElement]:
    """Instantiate a known idempotent family over a finite parameter box.

    Tags and parameters:

    ``trivial``   m, base, alpha_range=(lo, hi): e_base + sum_j a_j (e_j - e_base)
    ``x6``        family in {1, 2, 3}, param_range: a e_{2f-2} + (1 - a) e_{2f-1}
    ``r4``        family 1 with beta_range: e_0 - 2b E_1 + b E_2 - 2b E_3;
                  family 2 with beta_range: e_0 + b1 E_1 + b2 E_2 + (1 - b1) E_3
    ``latin-center``       quandle (latin): w / n over QQ
    ``commutative-field``  order (odd): -(f_1 + ... + f_{order-1}) / order over QQ
    """
    if tag == "trivial":
        m, base = params["m"], params.get("base", 0)
        q = trivial(m)
        others = [j for j in range(m) if j != base]
        out = []
        for alphas in iproduct(_rng(params["alpha_range"]), repeat=len(others)):
            coeffs = {base: 1 - sum(alphas)}
            coeffs.update(zip(others, alphas))
            out.append(RingElement(q, coeffs))
        return out
    if tag == "x6":
        f = params["family"]
        if f not in (1, 2, 3):
            raise InvalidParam("x6 families are numbered 1, 2, 3")
        q = x6()
        i, j = 2 * f - 2, 2 * f - 1
        return [RingElement(q, {i: a, j: 1 - a}) for a in _rng(params["param_range"])]
    if tag == "r4":
        q = dihedral(4)
        e0 = RingElement.basis(q, 0)
        f = params["family"]
        if f == 1:
            return [e0 + from_delta(q, (-2 * b, b, -2 * b)) for b in _rng(params["beta_range"])]
        if f == 2:
            return [
                e0 + from_delta(q, (b1, b2, 1 - b1))
                for b1, b2 in iproduct(_rng(params["beta_range"]), repeat=2)
            ]
        raise InvalidParam("r4 families are numbered 1, 2")
    if tag == "latin-center":
        q = params["quandle"]
        return [Fraction(1, q.n) * all_ones(q, QQ)]
    if tag == "commutative-field":
        order = params["order"]
        q = commutative(order)
        return [from_delta(q, [Fraction(-1, order)] * (order - 1), QQ)]
    raise UnknownFamily(tag)


def x6_families_in_box(bound: int) -> set[tuple[int, ...]]:
    """Members of the three X6 families whose E-coordinates lie in the box."""
    out = set()
    for f in (1, 2, 3):
        for u in closed_form_family("x6", family=f, param_range=(-bound - 1, bound + 1)):
            v = u.to_vector()
            if all(-bound <= c <= bound for c in v[1:]):
                out.add(v)
    return out


def r4_families_in_box(bound: int) -> set[tuple[int, ...]]:
    out = set()
    for u in closed_form_family("r4", family=1, beta_range=(-bound, bound)):
        out.add(u.to_vector())
    for u in closed_form_family("r4", family=2, beta_range=(-bound - 1, bound + 1)):
        out.add(u.to_vector())
    return {v for v in out if all(-bound <= c <= bound for c in v[1:])}


# divisibility probe


def conjecture_probe(n: int) -> dict:
    """Check whether D^{2n+1}(R_{2n+1}) lies in (2n+1) D(R_{2n+1}).

    This is one reading of a stated conjecture (the literal statement is
    vacuous since eps vanishes on D); the report carries that flag.
    """
    order = 2 * n + 1
    if n < 1 or order > 9:
        raise InvalidParam("probe defined for 1 <= n with 2n+1 <= 9")
    q = dihedral(order)
    lat = delta_power(q, order)
    divisible = all(c % order == 0 for row in lat.basis for c in row)
    return {
        "quandle": f"R{order}",
        "power": order,
        "basis": [list(r) for r in lat.basis],
        "divisible": divisible,
        "interpretation": f"D^{order}(R{order}) is contained in {order}*D(R{order})",
        "status": "evidence-only",
    }


def idempotents_are_trivial(s: IdempotentSet) -> bool:
    """True when the set holds exactly e_0, ..., e_{n-1}."""
    n = s.quandle.n
    units = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    return s.vectors() == units

