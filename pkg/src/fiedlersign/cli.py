"""Command-line entry point: analyze, generate, verify, oracle.

Exit codes: 0 success, 1 verification failures, 2 bad input or
parameters, 3 internal inconsistency between two computation routes.
"""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema
import numpy as np

from . import graphcore
from .corpus import load_corpus
from .errors import Graph6Error, InconsistencyError, NoWitnessError
from .graphcore import Graph, is_connected
from .graphio import parse_graph, to_graph6
from .join_theory import decide_i01, extremal_kjoin, kjoin_recognize, am_alpha
from .regular2 import decide_i2_regular
from .sign_oracle import bisection_report, enumerate_sign_cells, min_imbalance
from .spectra import GROUP_GAP, SIGN_TOL, adjacency_spectrum, algebraic_connectivity
from .three_eigs import ThreeEigsForm, classify
from .threshold import build_threshold, is_threshold
from .verify import SUITES, run_suite

_num = {"type": ["number", "null"]}
REPORT_SCHEMA = {
    "type": "object",
    "required": ["graph6", "n", "delta", "alpha", "am", "i", "tolerance"],
    "properties": {
        "graph6": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "delta": {"type": "integer"},
        "alpha": _num,
        "am": {"type": ["integer", "null"]},
        "tolerance": {
            "type": "object",
            "required": ["decision", "sign", "group_gap"],
            "properties": {"decision": {"type": "number"}, "sign": {"type": "number"}, "group_gap": {"type": "number"}},
        },
        "i": {
            "type": "object",
            "required": ["verdict", "checks"],
            "properties": {"verdict": {"type": "string"}, "checks": {"type": "object"}},
        },
        "decomposition": {"type": ["object", "null"]},
        "regular_i2": {"type": ["object", "null"]},
        "bisection": {"type": ["object", "null"]},
        "spectral_class": {"type": ["string", "null"]},
    },
}

DECISION_TOL = 1e-7


class UsageError(Exception):
    pass


def _read_input(path: str | None) -> Graph:
    text = open(path).read() if path else sys.stdin.read()
    if not text.strip():
        raise UsageError("no graph given on stdin or --file")
    return parse_graph(text)


def build_report(g: Graph, sign_tol: float = SIGN_TOL) -> dict:
    rep: dict = {
        "graph6": to_graph6(g),
        "n": g.n,
        "delta": g.min_degree,
        "alpha": None,
        "am": None,
        "tolerance": {"decision": DECISION_TOL, "sign": sign_tol, "group_gap": GROUP_GAP},
        "i": {"verdict": "n/a", "checks": {}},
        "decomposition": None,
        "regular_i2": None,
        "bisection": None,
        "spectral_class": None,
    }
    if g.n < 2:
        return rep
    space = algebraic_connectivity(g)
    rep["alpha"] = float(space.alpha)
    rep["am"] = int(space.multiplicity)
    cert = decide_i01(g)
    checks = cert.validate()
    if not all(checks.values()):
        raise InconsistencyError(f"certificate failed re-validation: {checks}")
    verdict = cert.verdict
    connected = is_connected(g)
    if connected and g.regularity() is not None and verdict == "i>=2":
        reg = decide_i2_regular(g)
        rep["regular_i2"] = {
            "verdict": reg.verdict,
            "branch": reg.branch,
            "component": list(reg.component) if reg.component else None,
            "mu_min": reg.mu_min,
        }
        verdict = "i=2" if reg.verdict else "i>=3"
    rep["i"] = {"verdict": verdict, "checks": checks}
    if connected and not g.is_complete:
        d = kjoin_recognize(g)
        if d is not None:
            rep["decomposition"] = {
                "k": d.k,
                "ell": d.ell,
                "c": d.c,
                "p": d.p,
                "combined": d.is_combined,
                "elementary_vertices": [list(s) for s in d.elementary_vertices],
                "combined_vertices": list(d.combined_vertices),
                "am_structural": am_alpha(d),
            }
        rep["spectral_class"] = classify(g)
    if connected:
        try:
            b = bisection_report(g, space, tol=sign_tol)
            rep["bisection"] = {
                "sizes": {"negative": len(b.negative), "zero": len(b.zero), "positive": len(b.positive)},
                "edge_cut": b.edge_cut,
                "balance": b.balance,
            }
        except NoWitnessError as exc:
            rep["bisection"] = {"error": str(exc)}
    jsonschema.validate(rep, REPORT_SCHEMA)
    return rep


def _print_report(rep: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rep, indent=2, sort_keys=True))
        return
    for key in ("graph6", "n", "delta", "alpha", "am"):
        print(f"{key}: {rep[key]}")
    print(f"i: {rep['i']['verdict']}")
    for key in ("decomposition", "regular_i2", "bisection", "spectral_class"):
        if rep[key] is not None:
            print(f"{key}: {json.dumps(rep[key], sort_keys=True)}")


def cmd_analyze(args) -> int:
    g = _read_input(args.file)
    _print_report(build_report(g, args.tol), args.json)
    return 0


def _int_params(params, count):
    if len(params) != count:
        raise UsageError(f"expected {count} integer parameters")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"parameters must be integers: {params}") from None


def cmd_generate(args) -> int:
    kind, params = args.kind, args.params
    try:
        if kind == "kjoin":
            ell, k = _int_params(params, 2)
            g = extremal_kjoin(ell, k)
            d = kjoin_recognize(g)
            if d is None or (d.ell, d.k) != (ell, k):
                raise InconsistencyError("generated k-join failed recognition")
        elif kind == "threshold":
            if len(params) != 1 or set(params[0].lower()) - set("id"):
                raise UsageError("threshold needs one creation sequence over {i,d}")
            g = build_threshold(params[0])
            if is_threshold(g) is None:
                raise InconsistencyError("generated threshold graph failed recognition")
        elif kind == "three-eigs":
            p, q, r = _int_params(params, 3)
            form = ThreeEigsForm(p, q, r)
            g = form.build()
            if classify(g) != "three-eigenvalue join":
                raise InconsistencyError("generated graph lacks three Laplacian eigenvalues")
        elif kind == "named":
            if not params:
                raise UsageError("named needs a family name")
            if params[0] == "petersen":
                g = graphcore.petersen()
            else:
                (param,) = _int_params(params[1:], 1)
                g = graphcore.build_named(params[0], param)
        else:
            raise UsageError(f"unknown kind {kind!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(to_graph6(g))
    return 0


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    corpus = load_corpus(args.corpus) if args.corpus else None
    results = run_suite(args.suite, corpus, args.seed)
    if args.json:
        print(json.dumps([{"suite": r.name, "checked": r.checked, "failures": r.failures} for r in results], indent=2))
    else:
        for r in results:
            print(r.summary())
            for f in r.failures:
                print(f"  {f}")
    return 0 if all(r.ok for r in results) else 1


def cmd_oracle(args) -> int:
    g = _read_input(args.file)
    if g.n < 2:
        raise UsageError("oracle needs at least 2 vertices")
    if args.adjacency:
        basis = adjacency_spectrum(g).groups[-1].basis
    else:
        basis = algebraic_connectivity(g).basis
    value, witness, exact = min_imbalance(basis, tol=args.tol, seed=args.seed)
    out = {"graph6": to_graph6(g), "dimension": int(basis.shape[1]), "min_imbalance": value, "exact": exact,
           "witness": [float(x) for x in np.round(witness, 12)], "tolerance": args.tol}
    if basis.shape[1] <= 3:
        out["imbalances"] = sorted(enumerate_sign_cells(basis, tol=args.tol, seed=args.seed).imbalances())
    print(json.dumps(out, indent=2) if args.json else
          "\n".join(f"{k}: {v}" for k, v in out.items()))
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fiedlersign", description="Sign patterns of Fiedler vectors.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=SIGN_TOL, help="relative tolerance for zero entries")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="report spectra, i(G), k-join structure")
    a.add_argument("--file")
    a.set_defaults(func=cmd_analyze)

    gen = sub.add_parser("generate", parents=[common], help="emit a graph6 line")
    gen.add_argument("kind", help="kjoin | threshold | three-eigs | named")
    gen.add_argument("params", nargs="*")
    gen.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", help="suite name or 'all'")
    v.add_argument("--corpus", help="graph6 file replacing the internal n <= 6 corpus")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", parents=[common], help="brute-force minimum sign imbalance")
    o.add_argument("--file")
    o.add_argument("--adjacency", action="store_true", help="use the least adjacency eigenspace")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
