"""Command-line interface.

All verification verbs print a JSON report to stdout (or a human summary
with --pretty) and exit 0 on success, 1 on verification failure, 2 on bad
input.  Randomness sits behind a single 64-bit seed; reports embed their
generation parameters.  The environment variable CHROMALG_CACHE_DIR, when
set, persists the deletion-contraction cache between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import pickle
import sys
from fractions import Fraction

from .chromatic import (chromatic_dc, chromatic_statesum, global_cache,
                        trace_poly_of_closed, tutte_estimate_check)
from .chromalgebra import (ChromElement, Relation, beraha_relation,
                           check_phi_trace_commutes, contexts_for, phi,
                           relation_check, tutte_phi1_relation,
                           wrong_q_relation)
from .errors import ChromalgError
from .golden import GoldenNum, PHI, golden_eval
from .planar import PlanarMap, dual
from .poly import IntPoly, RatFun, minpoly_two_cos, ratfun_reduce_mod
from .rect import RectGraph, closure
from .reports import VerifyReport, run_items
from .tl import (TLElement, jones_wenzl, tl_generator, tl_mul, tl_pretty,
                 tl_trace)
from .triangulate import (Triangulation, catalog, enumerate_triangulations,
                          generate_triangulations)

CACHE_FILE = "chromatic_cache.pkl"


def _load_cache():
    path = os.environ.get("CHROMALG_CACHE_DIR")
    if not path:
        return
    f = os.path.join(path, CACHE_FILE)
    if os.path.exists(f):
        with open(f, "rb") as fh:
            global_cache().load(pickle.load(fh))


def _save_cache():
    path = os.environ.get("CHROMALG_CACHE_DIR")
    if not path:
        return
    os.makedirs(path, exist_ok=True)
    data = dict(global_cache().items())
    with open(os.path.join(path, CACHE_FILE), "wb") as fh:
        pickle.dump(data, fh)


def _read_graph(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SystemExit(_parse_error(f"cannot read graph: {exc}"))
    try:
        if obj.get("boundary_bottom") or obj.get("boundary_top"):
            return RectGraph.from_json(obj)
        return PlanarMap.from_json(obj)
    except ChromalgError as exc:
        raise SystemExit(_parse_error(f"invalid graph: {exc}"))


def _parse_error(msg):
    print(json.dumps({"error": msg}), file=sys.stderr)
    return 2


def _emit(report, pretty):
    print(report.render(pretty))
    return 0 if report.aggregate_pass else 1


def _corpus_from_args(args, default_k=10, default_count=20):
    """Triangulations from --corpus dir or --generate k,count,seed."""
    if getattr(args, "corpus", None):
        items = []
        for name in sorted(os.listdir(args.corpus)):
            if name.endswith(".json"):
                with open(os.path.join(args.corpus, name)) as fh:
                    items.append((name, Triangulation(
                        PlanarMap.from_json(json.load(fh)))))
        desc = f"directory {args.corpus} ({len(items)} triangulations)"
        return items, desc
    spec = getattr(args, "generate", None)
    if spec:
        k, count, seed = (int(x) for x in spec.split(","))
    else:
        k, count, seed = default_k, default_count, 2024
    named = list(catalog().items())
    gen = generate_triangulations(k, count, seed)
    items = named + [(f"random_{k}v_{i}", t) for i, t in enumerate(gen)]
    desc = f"catalog + {count} random {k}-vertex triangulations (seed {seed})"
    return items, desc


# ---------------------------------------------------------------------------
# Verbs.
# ---------------------------------------------------------------------------


def cmd_chromatic(args):
    g = _read_graph(args.graph)
    report = VerifyReport("chromatic", {"graph": args.graph,
                                        "method": args.method,
                                        "eval": args.eval})
    polys = {}
    if args.method in ("dc", "both"):
        res = chromatic_dc(g)
        polys["dc"] = res.poly
        report.add("dc", True, poly=res.poly.to_json(), stats=res.stats)
    if args.method in ("statesum", "both"):
        p = chromatic_statesum(g)
        polys["statesum"] = p
        report.add("statesum", True, poly=p.to_json())
    if args.method == "both":
        report.add("cross-check", polys["dc"] == polys["statesum"])
    poly = polys.get("dc", polys.get("statesum"))
    if args.eval != "poly":
        if args.eval == "golden1":
            val = golden_eval(poly, "phi_plus_1")
            report.add("eval@phi+1", True, value=val.to_json())
        elif args.eval == "golden2":
            val = golden_eval(poly, "phi_plus_2")
            report.add("eval@phi+2", True, value=val.to_json())
        elif args.eval.startswith("Q="):
            q = Fraction(args.eval[2:])
            report.add(f"eval@{q}", True, value=str(poly.eval_fraction(q)))
        else:
            return _parse_error(f"unknown eval mode {args.eval!r}")
    return _emit(report, args.pretty)


def cmd_dual(args):
    m = _read_graph(args.graph)
    if isinstance(m, RectGraph):
        m = m.map
    print(json.dumps(dual(m).to_json()))
    return 0


def cmd_closure(args):
    g = _read_graph(args.graph)
    if not isinstance(g, RectGraph):
        return _parse_error("closure needs a rectangle graph with boundary")
    print(json.dumps(closure(g).to_json()))
    return 0


def cmd_jw(args):
    if args.n > 12:
        return _parse_error("jw supports n <= 12")
    el = jones_wenzl(args.n)
    if args.at_special:
        j, m = (int(x) for x in args.at_special.split(","))
        modulus = minpoly_two_cos(j, 2 * (m + 1)).rename("d")
        reduced = {d: ratfun_reduce_mod(c, modulus)
                   for d, c in el.terms.items()}
        obj = {"n": args.n, "modulus": modulus.to_json(),
               "terms": [{"pairing": list(d.match), "residue": r.to_json()}
                         for d, r in sorted(reduced.items(),
                                            key=lambda x: x[0].match)]}
        print(json.dumps(obj) if not args.pretty else
              json.dumps(obj, indent=2))
        return 0
    if args.pretty:
        print(tl_pretty(el))
    else:
        print(json.dumps(el.to_json()))
    return 0


def cmd_phi(args):
    g = _read_graph(args.graph)
    if isinstance(g, PlanarMap):
        g = RectGraph(g, (), (), check=False)
    el = phi(g)
    if args.pretty:
        print(tl_pretty(el))
    else:
        print(json.dumps(el.to_json()))
    return 0


def cmd_tl(args):
    try:
        el = _eval_tl_expression(args.expression, args.n)
    except (ChromalgError, ValueError, SyntaxError) as exc:
        return _parse_error(f"bad expression: {exc}")
    if isinstance(el, RatFun):
        print(json.dumps({"scalar": el.to_json()}))
        return 0
    if args.pretty:
        print(tl_pretty(el))
    else:
        print(json.dumps(el.to_json()))
    return 0


def cmd_generate(args):
    ts = generate_triangulations(args.vertices, args.count, args.seed)
    out = []
    for i, t in enumerate(ts):
        obj = t.map.to_json()
        obj["generator"] = {"vertices": args.vertices, "count": args.count,
                            "seed": args.seed, "index": i}
        out.append(obj)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, obj in enumerate(out):
            with open(os.path.join(args.out, f"tri_{args.vertices}_{i:04d}.json"),
                      "w") as fh:
                json.dump(obj, fh)
        print(json.dumps({"written": len(out), "dir": args.out}))
    else:
        print(json.dumps(out))
    return 0


def _golden_identity_holds(m):
    chi = chromatic_dc(m).poly
    v1 = golden_eval(chi, "phi_plus_1")
    v2 = golden_eval(chi, "phi_plus_2")
    rhs = GoldenNum.of(2, 1) * PHI ** (3 * m.n_vertices - 10) * v1 * v1
    return v2 == rhs, {"chi_phi1": v1.to_json(), "chi_phi2": v2.to_json()}


def cmd_verify_golden(args):
    items, desc = _corpus_from_args(args, default_k=12, default_count=200)
    report = VerifyReport("verify-golden", _param_dict(args), desc)
    tasks = [(name, (lambda t=t: _golden_identity_holds(t.map)))
             for name, t in items]
    run_items(report, args.jobs, tasks)
    return _emit(report, args.pretty)


def cmd_verify_estimate(args):
    items, desc = _corpus_from_args(args, default_k=12, default_count=200)
    report = VerifyReport("verify-estimate", _param_dict(args), desc)

    def one(t):
        res = tutte_estimate_check(t)
        return res["holds"], {"lhs": res["lhs"].to_json(),
                              "bound_exponent": res["bound_exponent"]}

    run_items(report, args.jobs, [(name, (lambda t=t: one(t)))
                                  for name, t in items])
    return _emit(report, args.pretty)


def cmd_verify_tutte(args):
    rel = tutte_phi1_relation()
    return _run_relation(args, rel, "verify-tutte")


def cmd_verify_beraha(args):
    if not (0 < args.j < args.n):
        return _parse_error("need 0 < j < n")
    if args.n > args.max_n:
        return _parse_error(f"n exceeds bound {args.max_n}")
    rel = beraha_relation(args.j, args.n)
    return _run_relation(args, rel, "verify-beraha")


def _run_relation(args, rel, command):
    ctxs = contexts_for(rel, args.contexts, args.seed)
    report = VerifyReport(command, _param_dict(args),
                          f"{len(ctxs)} contexts (seed {args.seed})")
    result = relation_check(rel, ctxs)
    for item in result["contexts"]:
        detail = {}
        if item.get("pole"):
            detail["pole"] = True
        report.add(f"context_{item['context']}", item["zero"], **detail)
    if getattr(args, "negative_control", None):
        bad = wrong_q_relation(rel, args.negative_control)
        neg = relation_check(bad, ctxs)
        report.add(f"negative_control_Q={args.negative_control}",
                   not neg["passed"])
    return _emit(report, args.pretty)


def cmd_verify_phi_commutes(args):
    report = VerifyReport("verify-phi-commutes", _param_dict(args))
    count = 0
    max_tri = (args.max_vertices + 4) // 2
    all_t = enumerate_triangulations(max_tri)
    tasks = []
    for v in sorted(all_t):
        for i, t in enumerate(all_t[v]):
            g = dual(t.map)
            if g.n_vertices > args.max_vertices:
                continue
            tasks.append((f"trivalent_{g.n_vertices}v_{i}",
                          (lambda g=g: (check_phi_trace_commutes(g), {}))))
            count += 1
    report.corpus = f"all closed trivalent maps with <= {args.max_vertices} vertices ({count})"
    run_items(report, args.jobs, tasks)
    return _emit(report, args.pretty)


def _param_dict(args):
    skip = {"func", "pretty"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


# ---------------------------------------------------------------------------
# Tiny expression parser for the tl verb.
# ---------------------------------------------------------------------------


def _eval_tl_expression(text, n):
    import re

    tokens = re.findall(r"E\d+|d|\d+|[-+*/^()]", text.replace(" ", ""))
    if "".join(tokens) != text.replace(" ", ""):
        raise ValueError("unrecognized characters in expression")
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        tok = peek()
        pos[0] += 1
        return tok

    def parse_expr():
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = _tl_add(node, rhs) if op == "+" else _tl_add(node, _tl_neg(rhs))
        return node

    def parse_term():
        node = parse_power()
        while True:
            if peek() == "*":
                take()
                node = _tl_mul_any(node, parse_power())
            elif peek() == "/":
                take()
                rhs = parse_power()
                if not isinstance(rhs, RatFun):
                    raise ValueError("can only divide by scalars")
                node = _tl_mul_any(node, rhs.inverse())
            elif peek() and (peek().startswith("E") or peek() == "("):
                node = _tl_mul_any(node, parse_power())
            else:
                return node

    def parse_power():
        node = parse_atom()
        if peek() == "^":
            take()
            k = int(take())
            out = node
            for _ in range(k - 1):
                out = _tl_mul_any(out, node)
            return out
        return node

    def parse_atom():
        tok = take()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok == "(":
            node = parse_expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return node
        if tok == "d":
            return RatFun.from_poly(IntPoly.x("d"))
        if tok.startswith("E"):
            return tl_generator(n, int(tok[1:]))
        if tok.isdigit():
            return RatFun.const(int(tok), "d")
        if tok == "-":
            return _tl_neg(parse_atom())
        raise ValueError(f"unexpected token {tok!r}")

    out = parse_expr()
    if pos[0] != len(tokens):
        raise ValueError("trailing tokens")
    return out


def _scalar_to_element(r, n):
    return TLElement.identity(n).scale(r)


def _tl_neg(x):
    if isinstance(x, RatFun):
        return -x
    return x.scale(-1)


def _tl_add(a, b):
    if isinstance(a, RatFun) and isinstance(b, RatFun):
        return a + b
    if isinstance(a, RatFun):
        a = _scalar_to_element(a, b.n)
    if isinstance(b, RatFun):
        b = _scalar_to_element(b, a.n)
    return a + b


def _tl_mul_any(a, b):
    if isinstance(a, RatFun) and isinstance(b, RatFun):
        return a * b
    if isinstance(a, RatFun):
        return b.scale(a)
    if isinstance(b, RatFun):
        return a.scale(b)
    return tl_mul(a, b)


# ---------------------------------------------------------------------------
# Entry point.
# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="chromalg",
        description="Exact chromatic-algebra and Temperley-Lieb verification")
    ap.add_argument("--pretty", action="store_true",
                    help="human-readable report instead of JSON")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, jobs=True):
        p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(pretty=False)

    p = sub.add_parser("chromatic", help="chromatic polynomial of a graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=("dc", "statesum", "both"), default="dc")
    p.add_argument("--eval", default="poly",
                   help="poly | golden1 | golden2 | Q=<rational>")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("dual", help="dual map of a closed planar map")
    p.add_argument("graph")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("closure", help="Markov closure of a rectangle graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("jw", help="Jones-Wenzl projector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at-special", default=None, metavar="j,m",
                   help="reduce coefficients mod minpoly of 2cos(pi j/(m+1))")
    p.set_defaults(func=cmd_jw)

    p = sub.add_parser("phi", help="image of a graph in Temperley-Lieb")
    p.add_argument("graph")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("tl", help="evaluate a Temperley-Lieb expression")
    p.add_argument("expression")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_tl)

    p = sub.add_parser("generate", help="random triangulations")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-golden", help="Tutte's golden identity")
    p.add_argument("--corpus", default=None)
    p.add_argument("--generate", default=None, metavar="k,count,seed")
    common(p)
    p.set_defaults(func=cmd_verify_golden)

    p = sub.add_parser("verify-estimate", help="Tutte's estimate at phi+1")
    p.add_argument("--corpus", default=None)
    p.add_argument("--generate", default=None, metavar="k,count,seed")
    common(p)
    p.set_defaults(func=cmd_verify_estimate)

    p = sub.add_parser("verify-tutte", help="Tutte's phi+1 linear relation")
    p.add_argument("--contexts", type=int, default=50)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--negative-control", type=int, default=None, metavar="Q")
    common(p)
    p.set_defaults(func=cmd_verify_tutte)

    p = sub.add_parser("verify-beraha", help="generalized relation at (j, n)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--contexts", type=int, default=30)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--negative-control", type=int, default=None, metavar="Q")
    common(p)
    p.set_defaults(func=cmd_verify_beraha)

    p = sub.add_parser("verify-phi-commutes",
                       help="trace commutation Q^-1 chi(dual) = phi image")
    p.add_argument("--max-vertices", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_verify_phi_commutes)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    _load_cache()
    try:
        code = args.func(args)
    except ChromalgError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    finally:
        _save_cache()
    return code


if __name__ == "__main__":
    sys.exit(main())
