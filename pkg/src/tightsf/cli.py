"""Command line front end.  All arithmetic happens in the library modules."""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

# let arguments like "-7/5" and "-2;1/2,2/3,11/13" parse as values, not flags
_VALUE_PATTERN = re.compile(r"^-\d[\d;/,.]*$")

from . import report
from .classify import EXACT, INFINITE, UNKNOWN, classify
from .contfrac import convergents, expand, ncf_eval, reverse_shift, tight_count
from .convex import measured_slope, slope_coeffs, v3_slope, v3_slope_limit
from .farey import BACK, FRONT, bypass_attach, bypass_oracle
from .floer import ContactIndex, expansion, index_set, laurent_image, pairwise_distinct, stein_obstructed
from .seifert import detect_family, h1_order, linking_matrix, parse_manifold
from .selftest import run_all
from .slopes import Slope
from .theta import SurgeryDiagram, c1_squared, signature, theta


def _cmd_cf(args) -> int:
    x = Slope.parse(args.slope)
    entries = expand(x)
    p, q, u, v = convergents(x)
    shifted = reverse_shift(entries)
    t = tight_count(Fraction(p, q))
    if args.json:
        print(report.report("cf", {
            "slope": report.rat(x),
            "entries": list(entries),
            "p": p, "q": q, "u": u, "v": v,
            "t": t,
            "reverse_shift": list(shifted),
            "reverse_shift_value": report.rat(ncf_eval(shifted)),
        }))
    else:
        print(f"{x} = {list(entries)}")
        print(f"convergents: p={p} q={q} u={u} v={v}")
        print(f"tight count T({p}/{q}) = {t}")
        print(f"reverse shift: {list(shifted)} = {ncf_eval(shifted)}")
    return 0


def _cmd_bypass(args) -> int:
    dividing = Slope.parse(args.dividing)
    ruling = Slope.parse(args.ruling)
    result = bypass_attach(dividing, ruling, args.side)
    oracle = None
    if args.oracle:
        oracle = bypass_oracle(dividing, ruling, args.side)
        if oracle != result:
            raise AssertionError("oracle disagrees with the fast path")
    if args.json:
        body = {"dividing": report.rat(dividing), "ruling": report.rat(ruling),
                "side": args.side, "result": report.rat(result)}
        if oracle is not None:
            body["oracle"] = report.rat(oracle)
        print(report.report("bypass", body))
    else:
        print(result if oracle is None else f"{result} (oracle agrees)")
    return 0


def _cmd_seifert(args) -> int:
    sd = parse_manifold(args.manifold)
    family = detect_family(sd)
    h1 = h1_order(sd)
    matrix = linking_matrix(sd)
    if args.json:
        body = report.manifold_json(sd)
        body["family"] = str(family)
        body["h1"] = h1
        body["matrix"] = [list(row) for row in matrix]
        print(report.report("seifert", body))
    else:
        print(sd)
        print(f"family: {family}")
        print(f"|H_1| = {h1}" + ("  (degenerate: surface bundle)" if h1 == 0 else ""))
        print("linking matrix:")
        for row in matrix:
            print("  " + " ".join(f"{x:3d}" for x in row))
    return 0


def _cmd_slopes(args) -> int:
    sd = parse_manifold(args.manifold)
    n1 = args.n1
    if n1 >= 0:
        raise ValueError("twisting --n1 must be negative")
    coeffs = slope_coeffs(sd)
    measured = [measured_slope(i, sd, n1) for i in (1, 2, 3)]
    closed = v3_slope(sd, n1, coeffs)
    limit = None
    if coeffs.A >= Fraction(1, 4) or coeffs.A < 0:
        limit = v3_slope_limit(sd, coeffs)
    if args.json:
        body = {
            "manifold": report.manifold_json(sd),
            "n1": n1,
            "measured": [report.rat(s) for s in measured],
            "coeffs": report.encode(coeffs),
            "v3_slope": report.rat(closed),
        }
        if limit is not None:
            body["limit"] = report.encode(limit)
        print(report.report("slopes", body))
    else:
        print(sd)
        for i, s in enumerate(measured, start=1):
            print(f"s_{i}(n={n1}) = {s}")
        print(f"coeffs: A={coeffs.A} C={coeffs.C} F={coeffs.F} D={coeffs.D}")
        print(f"v3 slope at n1={n1}: {closed}")
        if limit is not None:
            print(f"limit: {limit.limit}  increasing={limit.increasing}  "
                  f"threshold_ok={limit.threshold_ok}")
        else:
            print("limit: gap region (0 <= A < 1/4)")
    return 0


def _cmd_floer(args) -> int:
    n = args.n
    indices = index_set(n)
    if args.index:
        i, j = (int(x) for x in args.index.split(","))
        indices = [ContactIndex(n, i, j)]
    rows = []
    for idx in indices:
        vec = expansion(idx)
        rows.append({
            "i": idx.i, "j": idx.j,
            "coeffs": list(vec.coeffs),
            "laurent": str(laurent_image(idx)),
            "stein_obstructed": stein_obstructed(idx),
        })
    if args.json:
        body = {
            "n": n,
            "grid": list(range(-n + 1, n, 2)),
            "classes": rows,
            "pairwise_distinct": pairwise_distinct(n),
            "obstructed_count": sum(r["stein_obstructed"] for r in rows),
        }
        print(report.report("floer", body))
    else:
        print(f"n = {n}, basis positions {list(range(-n + 1, n, 2))}")
        for r in rows:
            flag = "  [not Stein fillable]" if r["stein_obstructed"] else ""
            print(f"(i={r['i']}, j={r['j']}): {r['coeffs']}  {r['laurent']}{flag}")
        print(f"pairwise distinct: {pairwise_distinct(n)}")
        print(f"obstructed: {sum(r['stein_obstructed'] for r in rows)}")
    return 0


def _cmd_theta(args) -> int:
    with open(args.diagram, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    diagram = SurgeryDiagram.from_lists(data["L"], data["rot"])
    c1sq = c1_squared(diagram)
    sigma = signature(diagram.linking)
    chi = 1 + len(diagram.linking)
    value = theta(diagram)
    if args.json:
        print(report.report("theta", {
            "c1sq": report.rat(c1sq),
            "sigma": sigma,
            "chi": chi,
            "theta": report.rat(value),
        }))
    else:
        print(f"c1^2 = {c1sq}")
        print(f"sigma = {sigma}")
        print(f"chi = {chi}")
        print(f"theta = {value}")
    return 0


def _cmd_classify(args) -> int:
    sd = parse_manifold(args.manifold)
    res = classify(sd)
    if args.json:
        print(report.report("classify", report.classification_json(res)))
    else:
        print(res.manifold)
        if res.status == EXACT:
            print(f"exactly {res.count} tight contact structures")
        elif res.status == INFINITE:
            print("infinitely many tight contact structures")
        else:
            print(f"unknown: {res.reason}")
        fill = res.fillability
        bits = [fill.kind]
        if fill.stein_lower is not None:
            bits.append(f"stein_lower={fill.stein_lower}")
        if fill.non_stein_lower is not None:
            bits.append(f"non_stein_lower={fill.non_stein_lower}")
        if fill.all_strong is not None:
            bits.append(f"all_strong={fill.all_strong}")
        print("fillability: " + "  ".join(bits))
        print(f"certificate: {res.certificate.case}")
    if res.status == UNKNOWN:
        return 2
    return 0


def _cmd_selftest(args) -> int:
    results = run_all()
    width = max(len(name) for name, _, _ in results)
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name:<{width}}  {detail}")
        failed += not ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tightsf",
        description="Exact slope calculus and tight contact structure counts "
                    "for Seifert fibered spaces over S^2 with three singular fibers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p._negative_number_matcher = _VALUE_PATTERN
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.set_defaults(fn=fn)
        return p

    p = add("cf", _cmd_cf, "negative continued fraction data of a slope < -1")
    p.add_argument("slope")

    p = add("bypass", _cmd_bypass, "dividing slope after a bypass attachment")
    p.add_argument("--dividing", required=True)
    p.add_argument("--ruling", required=True)
    p.add_argument("--side", choices=(FRONT, BACK), default=FRONT)
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")

    p = add("seifert", _cmd_seifert, "normalized invariants, homology, family, linking matrix")
    p.add_argument("manifold", help="'e0;r1,r2,r3' or 'r1,r2,r3'")

    p = add("slopes", _cmd_slopes, "measured slopes, rounding coefficients, closed form")
    p.add_argument("manifold")
    p.add_argument("--n1", type=int, required=True, help="negative twisting")

    p = add("floer", _cmd_floer, "contact class expansions on a sphere family member")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--index", help="single class 'i,j'")

    p = add("theta", _cmd_theta, "plane field invariant from a framed link file")
    p.add_argument("--diagram", required=True, help="JSON file with keys L and rot")

    p = add("classify", _cmd_classify, "count tight contact structures with certificate")
    p.add_argument("manifold")

    add("selftest", _cmd_selftest, "run the built-in consistency suites")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
