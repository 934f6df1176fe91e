"""Quadratic integer systems whose solutions are idempotents, and an
exhaustive box search for their integer solutions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from quandlering.errors import InvalidParam
from quandlering.idempotents import _box_chunks, _check_box
from quandlering.quandle import Quandle
from quandlering.ring import anchor_action, e_structure

Monomial = tuple[int, ...]  # exponent vector
Polynomial = dict[Monomial, int]


@dataclass(frozen=True)
class PolySystem:
    """Equations ``P_c(x) = 0``, one per E-coordinate c, where
    P_c = (u^2 - u)_c for u = aug_value e_0 + sum_i x_i E_{i+1}."""

    num_vars: int
    equations: list[Polynomial]
    aug_value: int

    def evaluate(self, x) -> list[int]:
        out = []
        for poly in self.equations:
            total = 0
            for mono, c in poly.items():
                term = c
                for xi, e in zip(x, mono):
                    if e:
                        term *= xi**e
                total += term
            out.append(total)
        return out

    def is_solution(self, x) -> bool:
        return not any(self.evaluate(x))

    def format(self, symbol: str = "x") -> list[str]:
        return [format_polynomial(p, symbol) + " = 0" for p in self.equations]


def _mono(d: int, *idx: int) -> Monomial:
    e = [0] * d
    for i in idx:
        e[i] += 1
    return tuple(e)


def format_polynomial(poly: Polynomial, symbol: str = "x") -> str:
    def key(item):
        mono, _ = item
        return (-sum(mono), [-e for e in mono])

    terms = []
    for mono, c in sorted(poly.items(), key=key):
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(f"{symbol}{i + 1}")
            elif e > 1:
                factors.append(f"{symbol}{i + 1}^{e}")
        body = "*".join(factors)
        if not body:
            terms.append((c < 0, str(abs(c))))
        else:
            terms.append((c < 0, body if abs(c) == 1 else f"{abs(c)}*{body}"))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, t in terms[1:]:
        s += f" {'-' if neg else '+'} {t}"
    return s


def build_system(q: Quandle, aug_value: int) -> PolySystem:
    if aug_value not in (0, 1):
        raise InvalidParam("aug_value must be 0 or 1")
    d = q.n - 1
    s = e_structure(q)
    left, right = anchor_action(q)
    eqs = []
    for c in range(d):
        poly: Polynomial = {}

        def add(mono, v):
            if v:
                poly[mono] = poly.get(mono, 0) + v
                if poly[mono] == 0:
                    del poly[mono]

        for i in range(d):
            for j in range(d):
                add(_mono(d, i, j), s[i][j][c])
        if aug_value:
            for j in range(d):
                add(_mono(d, j), left[j][c] + right[j][c])
        add(_mono(d, c), -1)
        eqs.append(poly)
    return PolySystem(d, eqs, aug_value)


def search_system(system: PolySystem, box: int) -> list[tuple[int, ...]]:
    """All integer solutions with every variable in ``[-box, box]``, sorted."""
    d = system.num_vars
    _check_box(d, box)
    found = []
    for x in _box_chunks(d, box):
        ok = np.ones(len(x), dtype=bool)
        for poly in system.equations:
            val = np.zeros(len(x), dtype=np.int64)
            for mono, c in poly.items():
                term = np.full(len(x), c, dtype=np.int64)
                for i, e in enumerate(mono):
                    if e:
                        term = term * x[:, i] ** e
                val += term
            ok &= val == 0
            if not ok.any():
                break
        found.extend(tuple(int(v) for v in row) for row in x[ok])
    return sorted(found)


def count_nonzero(sol) -> int:
    return sum(1 for v in sol if v)


def parse_polynomial(text: str, num_vars: int, symbol: str = "x") -> Polynomial:
    """Parse sums of terms like ``-2*x1*x3``, ``x2^2`` or ``3`` (1-based
    variable indices)."""
    poly: Polynomial = {}
    src = text.replace(" ", "").replace("-", "+-")
    for term in filter(None, src.split("+")):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("-")
        coef = sign
        mono = [0] * num_vars
        for factor in term.split("*"):
            if factor.startswith(symbol):
                name, _, power = factor.partition("^")
                idx = int(name[len(symbol):]) - 1
                if not 0 <= idx < num_vars:
                    raise InvalidParam(f"variable {name} out of range")
                mono[idx] += int(power) if power else 1
            elif factor:
                coef *= int(factor)
            else:
                raise InvalidParam(f"malformed term in {text!r}")
        key = tuple(mono)
        poly[key] = poly.get(key, 0) + coef
    return {k: v for k, v in poly.items() if v}


def parse_equation(text: str, num_vars: int, symbol: str = "x") -> Polynomial:
    """``lhs = rhs`` as the single polynomial rhs - lhs."""
    lhs, sep, rhs = text.partition("=")
    if not sep:
        raise InvalidParam(f"no '=' in {text!r}")
    left = parse_polynomial(lhs, num_vars, symbol)
    out = parse_polynomial(rhs, num_vars, symbol)
    for k, v in left.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def same_up_to_sign(a: Polynomial, b: Polynomial) -> bool:
    return a == b or a == {k: -v for k, v in b.items()}
