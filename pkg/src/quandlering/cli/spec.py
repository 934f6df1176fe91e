"""Text specifiers for quandles, such as ``R:5``, ``core:Z3xZ3`` or
``prod:(R:3,T:2)``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

from quandlering.errors import InvalidParam
from quandlering.groups import cyclic_group, direct_product
from quandlering.quandle import (
    Quandle,
    alexander_cyclic,
    commutative,
    conj,
    core,
    dihedral,
    parse_table_text,
    product,
    trivial,
    x6,
)

_GROUP = re.compile(r"Z(\d+)(?:xZ(\d+))*$")


@dataclass(frozen=True)
class QuandleSpec:
    kind: str
    args: tuple = ()

    def __str__(self) -> str:
        return format_spec(self)

    def build(self) -> Quandle:
        return build(self)


def _int(text: str, what: str) -> int:
    if not re.fullmatch(r"\d+", text):
        raise InvalidParam(f"{what} must be a positive integer, got {text!r}")
    return int(text)


def _group_orders(text: str) -> tuple[int, ...]:
    if not _GROUP.match(text):
        raise InvalidParam(f"group must look like Z<n> or Z<a>xZ<b>, got {text!r}")
    orders = tuple(int(p[1:]) for p in text.split("x"))
    if any(o < 1 for o in orders):
        raise InvalidParam("cyclic factors need order >= 1")
    return orders


def _split_pair(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1:]
    raise InvalidParam(f"prod needs two comma-separated factors: {body!r}")


def parse_spec(text: str) -> QuandleSpec:
    text = text.strip()
    if text == "X6":
        return QuandleSpec("X6")
    kind, sep, rest = text.partition(":")
    if not sep:
        raise InvalidParam(f"cannot parse quandle specifier {text!r}")
    if kind in ("R", "C", "T"):
        return QuandleSpec(kind, (_int(rest, f"{kind} order"),))
    if kind in ("core", "conj"):
        return QuandleSpec(kind, _group_orders(rest))
    if kind == "alex":
        grp, sep2, unit = rest.partition(":")
        orders = _group_orders(grp)
        if not sep2 or len(orders) != 1:
            raise InvalidParam("alex needs the form alex:Z<n>:<u>")
        return QuandleSpec("alex", (orders[0], _int(unit, "unit")))
    if kind == "prod":
        if not (rest.startswith("(") and rest.endswith(")")):
            raise InvalidParam("prod needs the form prod:(<spec>,<spec>)")
        a, b = _split_pair(rest[1:-1])
        return QuandleSpec("prod", (parse_spec(a), parse_spec(b)))
    if kind == "file":
        if not rest:
            raise InvalidParam("file: needs a path")
        return QuandleSpec("file", (rest,))
    raise InvalidParam(f"unknown quandle kind {kind!r}")


def format_spec(s: QuandleSpec) -> str:
    if s.kind == "X6":
        return "X6"
    if s.kind in ("R", "C", "T"):
        return f"{s.kind}:{s.args[0]}"
    if s.kind in ("core", "conj"):
        return f"{s.kind}:" + "x".join(f"Z{o}" for o in s.args)
    if s.kind == "alex":
        return f"alex:Z{s.args[0]}:{s.args[1]}"
    if s.kind == "prod":
        return f"prod:({format_spec(s.args[0])},{format_spec(s.args[1])})"
    return f"file:{s.args[0]}"


def build(s: QuandleSpec) -> Quandle:
    label = format_spec(s)
    if s.kind == "X6":
        return x6()
    if s.kind == "R":
        return dihedral(s.args[0])
    if s.kind == "C":
        return commutative(s.args[0])
    if s.kind == "T":
        return trivial(s.args[0])
    if s.kind in ("core", "conj"):
        g = reduce(direct_product, [cyclic_group(o) for o in s.args])
        return (core if s.kind == "core" else conj)(g).with_label(label)
    if s.kind == "alex":
        return alexander_cyclic(*s.args)
    if s.kind == "prod":
        return product(build(s.args[0]), build(s.args[1])).with_label(label)
    path = Path(s.args[0])
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidParam(f"cannot read {path}: {exc}") from None
    return parse_table_text(text, label=label)


def quandle_from_spec(text: str) -> Quandle:
    return build(parse_spec(text))
