"""The ``qr`` command.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on bad
input (including exceeded size caps).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from quandlering import config
from quandlering.cli.claims import CLAIMS, EVIDENCE, FAIL, PASS, run_claim
from quandlering.cli.spec import parse_spec
from quandlering.corez import (
    cz_commutator_identity,
    cz_is_idempotent,
    cz_order_probe,
    dyadic_probe,
    extremal_sweep,
    random_element,
)
from quandlering.errors import QuandleError
from quandlering.filtration import filtration
from quandlering.idempotents import enumerate_idempotents
from quandlering.morphisms import automorphisms, homomorphisms
from quandlering.quandle import properties
from quandlering.ring import format_element
from quandlering.ringaut import decompose_x6_automorphism, ring_automorphisms
from quandlering.systems import build_system, format_polynomial, search_system

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _symbol(spec) -> str:
    return "f" if spec.kind == "C" else "E"


def format_combination(v, symbol: str) -> str:
    terms = []
    for i, c in enumerate(v, start=1):
        if not c:
            continue
        body = f"{symbol}{i}" if abs(c) == 1 else f"{abs(c)}{symbol}{i}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


# commands: each returns (ok, result dict)


def cmd_props(args):
    spec = parse_spec(args.quandle)
    q = spec.build()
    return True, {"quandle": str(spec), "order": q.n, **properties(q).as_dict()}


def cmd_delta(args):
    spec = parse_spec(args.quandle)
    q = spec.build()
    if args.max_power < 1:
        raise UsageError("--max-power must be at least 1")
    sym = _symbol(spec)
    filt = filtration(q, max(args.max_power + 1, 2), left_normed=args.left_normed)
    rows = []
    for k in range(1, args.max_power + 1):
        lat = filt.power(k)
        free, torsion = filt.quotient(k)
        rows.append(
            {
                "k": k,
                "basis": [list(r) for r in lat.basis],
                "generators": [format_combination(r, sym) for r in lat.basis],
                "quotient": {"free_rank": free, "torsion": list(torsion)},
            }
        )
    return True, {
        "quandle": str(spec),
        "symbol": sym,
        "left_normed": args.left_normed,
        "powers": rows,
    }


def cmd_idem(args):
    spec = parse_spec(args.quandle)
    q = spec.build()
    s = enumerate_idempotents(q, args.bound)
    out = {"quandle": str(spec), "bound": args.bound}
    elems = s.elements()
    n0 = len(s.aug0)
    if args.aug in ("0", "both"):
        out["aug0"] = [list(v) for v in s.aug0]
        out["aug0_elements"] = [format_element(u) for u in elems[:n0]]
    if args.aug in ("1", "both"):
        out["aug1"] = [list(v) for v in s.aug1]
        out["aug1_elements"] = [format_element(u) for u in elems[n0:]]
    out["count"] = sum(len(out.get(k, [])) for k in ("aug0", "aug1"))
    return True, out


def cmd_system(args):
    spec = parse_spec(args.quandle)
    q = spec.build()
    sys_ = build_system(q, int(args.aug))
    out = {
        "quandle": str(spec),
        "aug": int(args.aug),
        "num_vars": sys_.num_vars,
        "equations": [format_polynomial(p) + " = 0" for p in sys_.equations],
    }
    if args.search_box is not None:
        sols = search_system(sys_, args.search_box)
        out["search_box"] = args.search_box
        out["solutions"] = [list(v) for v in sols]
    return True, out


def cmd_aut(args):
    spec = parse_spec(args.quandle)
    q = spec.build()
    auts = automorphisms(q)
    out = {"quandle": str(spec), "count": len(auts), "automorphisms": [list(a) for a in auts]}
    if args.ring:
        if args.bound is None:
            raise UsageError("--ring needs --bound")
        mats = ring_automorphisms(q, args.bound)
        out["ring"] = {
            "bound": args.bound,
            "count": len(mats),
            "matrices": [[list(r) for r in m] for m in mats],
        }
        if spec.kind == "X6":
            out["ring"]["decompositions"] = [decompose_x6_automorphism(m).as_dict() for m in mats]
    return True, out


def cmd_hom(args):
    src, dst = parse_spec(args.source), parse_spec(args.target)
    homs = homomorphisms(src.build(), dst.build())
    return True, {"from": str(src), "to": str(dst), "count": len(homs), "homomorphisms": [list(h) for h in homs]}


def cmd_corez(args):
    import random

    check = args.check
    if check == "extremal":
        rep = extremal_sweep(args.samples, args.seed)
        return rep["passed"], {"check": check, **rep}
    if check == "idempotent":
        rng = random.Random(args.seed)
        hits = 0
        for _ in range(args.samples):
            if cz_is_idempotent(random_element(rng))[0]:
                hits += 1
        return hits == 0, {"check": check, "samples": args.samples, "seed": args.seed, "idempotents_found": hits}
    if check == "commutator":
        values = list(range(-30, 31, 3))
        bad = [a for a in values if not cz_commutator_identity(a)]
        return not bad, {"check": check, "values": len(values), "failures": bad}
    if check == "order":
        rep = cz_order_probe(args.window)
        return rep["passed"], {"check": check, **rep}
    rep = dyadic_probe(args.depth)
    return rep["commutative"] and rep["all_dyadic"], {"check": check, **rep}


def cmd_reproduce(args):
    ids = list(CLAIMS) if args.claim == "all" else [args.claim]
    if any(c not in CLAIMS for c in ids):
        raise UsageError(f"unknown claim {args.claim!r}; choose from: all, " + ", ".join(CLAIMS))
    if args.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_claim, ids))
    else:
        results = [run_claim(c) for c in ids]
    counts = {s: sum(r.status == s for r in results) for s in (PASS, FAIL, EVIDENCE)}
    return counts[FAIL] == 0, {
        "claims": [r.as_dict() for r in results],
        "passed": counts[PASS],
        "failed": counts[FAIL],
        "evidence_only": counts[EVIDENCE],
    }


# text rendering


def _render_value(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def render_text(command: str, ok: bool, result: dict) -> str:
    lines = []
    if command == "delta":
        sym = result["symbol"]
        lines.append(f"quandle {result['quandle']} (basis {sym}1.., left_normed={result['left_normed']})")
        for row in result["powers"]:
            quot = row["quotient"]
            parts = ["Z"] * quot["free_rank"] + [f"Z{t}" for t in quot["torsion"]]
            lines.append(
                f"k={row['k']}: <{', '.join(row['generators'])}>   quotient: {' + '.join(parts) or '0'}"
            )
    elif command == "reproduce":
        for c in result["claims"]:
            lines.append(f"{c['status'].upper():14s} {c['claim_id']:22s} {c['summary']}")
        lines.append(
            f"passed {result['passed']}, failed {result['failed']}, evidence-only {result['evidence_only']}"
        )
    else:
        for key, v in result.items():
            lines.append(f"{key}: {_render_value(v)}")
    if command != "reproduce":
        lines.append(f"status: {'ok' if ok else 'FAILED'}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qr", description="Exact computations in quandle rings.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("props", cmd_props, "structural properties")
    sp.add_argument("--quandle", required=True)

    sp = add("delta", cmd_delta, "powers of the augmentation ideal")
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--max-power", type=int, required=True)
    sp.add_argument("--left-normed", action="store_true")

    sp = add("idem", cmd_idem, "idempotents in an E-coordinate box")
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--aug", choices=["0", "1", "both"], default="both")

    sp = add("system", cmd_system, "quadratic system for idempotents")
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--aug", choices=["0", "1"], required=True)
    sp.add_argument("--search-box", type=int)

    sp = add("aut", cmd_aut, "quandle and ring automorphisms")
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--ring", action="store_true")
    sp.add_argument("--bound", type=int)

    sp = add("hom", cmd_hom, "quandle homomorphisms")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)

    sp = add("corez", cmd_corez, "checks in the quandle ring of Core(Z)")
    sp.add_argument("--check", choices=["extremal", "idempotent", "commutator", "order", "dyadic"], required=True)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    sp.add_argument("--window", type=int, default=20)
    sp.add_argument("--depth", type=int, default=3)

    sp = add("reproduce", cmd_reproduce, "re-derive published claims")
    sp.add_argument("claim", help="claim id or 'all'")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        ok, result = args.fn(args)
    except (QuandleError, UsageError) as exc:
        print(f"qr: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps({"command": args.command, "ok": ok, "result": result}, indent=2))
    else:
        print(render_text(args.command, ok, result))
    return EXIT_OK if ok else EXIT_FAIL


def run() -> None:
    sys.exit(main())
