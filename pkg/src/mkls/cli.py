"""Command-line front end: ``mkls compute|formula|verify|relax|explore``.

Exit codes: 0 when everything passes, 1 for a theorem or conjecture failure
(with witnesses), 2 for usage and spec errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import formulas as F
from .kls import KLSConsistencyError, all_invariants
from .matroid import Matroid, MatroidError, elements_of, mask_of, matroid_from_json, popcount, relax_all, stressed_hyperplanes
from .matroid import relax as relax_one
from .poly import IntPolynomial, is_strongly_logconcave, is_unimodal
from .reports import (
    THEOREM_IDS,
    format_table,
    freeze_fixtures,
    random_sparse_paving,
    run_suites,
    serialize,
)
from .repring import GradedRep, dimension_poly

HARD_CAP = 16
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def canonical(obj) -> str:
    return json.dumps(serialize(obj), sort_keys=True, indent=2) + "\n"


def _emit(args, payload, text: Optional[str] = None) -> None:
    body = canonical(payload) if args.json or text is None else text.rstrip("\n") + "\n"
    if args.out:
        Path(args.out).write_text(body)
    else:
        sys.stdout.write(body)


# -- argument helpers ---------------------------------------------------------

def parse_ranges(text: Optional[str]) -> dict:
    """``k=1..4,n=..9,count=50`` -> {"k": (1, 4), "n": (None, 9), "count": 50}."""
    out: dict = {}
    if not text:
        return out
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise UsageError(f"bad range item {item!r}; expected name=lo..hi")
        try:
            if ".." in value:
                lo, hi = value.split("..", 1)
                rng = (int(lo) if lo else None, int(hi) if hi else None)
                if None not in rng and rng[0] > rng[1]:
                    raise UsageError(f"empty range {item!r}")
                out[key] = rng
            else:
                v = int(value)
                out[key] = v if key in ("count", "seed") else (v, v)
        except ValueError:
            raise UsageError(f"bad range item {item!r}; bounds must be integers") from None
    return out


def _check_cap(ranges: dict, unsafe: bool) -> None:
    if unsafe:
        return
    for key in ("n", "h", "q1_n", "mkh_h", "oracle_h"):
        hi = ranges.get(key, (None, None))[1]
        if hi is not None and hi > HARD_CAP:
            raise UsageError(f"{key} <= {HARD_CAP} is the desk-scale cap; pass --unsafe-large to exceed it")


def load_matroid(spec: str, unsafe: bool = False) -> Matroid:
    """Matroid from a JSON file path or inline JSON text."""
    text = spec
    if not spec.lstrip().startswith("{"):
        try:
            text = Path(spec).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read matroid spec {spec!r}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"matroid spec is not valid JSON: {exc}") from None
    M = matroid_from_json(data)
    if M.n > HARD_CAP and not unsafe:
        raise UsageError(f"ground set of {M.n} elements exceeds the cap {HARD_CAP}; pass --unsafe-large")
    return M


def _matroid_hash(M: Matroid) -> str:
    return hashlib.sha256(json.dumps(M.to_json(), sort_keys=True).encode()).hexdigest()


def invariants_cached(M: Matroid) -> dict:
    """all_invariants as JSON lists, persisted under $MKLS_CACHE_DIR when set."""
    cache_dir = os.environ.get("MKLS_CACHE_DIR")
    path = Path(cache_dir) / f"{_matroid_hash(M)}.json" if cache_dir else None
    if path is not None and path.exists():
        return json.loads(path.read_text())
    inv = {key: p.to_json() for key, p in all_invariants(M).items()}
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(inv, sort_keys=True))
    return inv


# -- subcommands --------------------------------------------------------------

def cmd_compute(args) -> int:
    M = load_matroid(args.spec, args.unsafe_large)
    inv = invariants_cached(M)
    Y = inv["Y"]
    payload = {
        "matroid": M.to_json(),
        "n": M.n,
        "k": M.k,
        **inv,
        "predicates": {
            "Y_palindromic": IntPolynomial(Y).is_palindromic(M.k) or not Y,
            "Y_unimodal": is_unimodal(Y),
            "Y_strongly_logconcave": is_strongly_logconcave(Y),
        },
    }
    lines = [f"matroid    n={M.n} k={M.k} ({M.to_json()['backend']})"]
    lines += [f"{key:<11}{IntPolynomial(inv[key])}" for key in ("char_poly", "P", "Q", "Z", "Y")]
    lines += [f"{key:<22}{value}" for key, value in payload["predicates"].items()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


FORMULAS = {
    "equiv_Y_uniform": (F.equiv_Y_uniform, ("k", "n")),
    "equiv_Y_uniform_irreducible": (F.equiv_Y_uniform_irreducible, ("k", "n")),
    "equiv_Y_uniform_via_definition": (F.equiv_Y_uniform_via_definition, ("k", "n")),
    "equiv_Q_uniform": (F.equiv_Q_uniform, ("k", "n")),
    "equiv_mobius_uniform": (F.equiv_mobius_uniform, ("k", "n")),
    "equiv_Y_qniform": (F.equiv_Y_qniform, ("k", "n")),
    "equiv_char_qniform": (F.equiv_char_qniform, ("k", "n")),
    "ordinary_Y_uniform": (F.ordinary_Y_uniform, ("k", "n")),
    "ordinary_Y_qniform": (F.ordinary_Y_qniform, ("k", "n", "q")),
    "ordinary_Y_qniform_induced": (F.ordinary_Y_qniform_induced, ("k", "n", "q")),
    "paving_delta": (F.paving_delta, ("k", "h")),
    "m_kh_equiv_Y": (F.m_kh_equiv_Y, ("k", "h")),
    "correction_dimension": (F.correction_dimension, ("k", "h")),
    "sparse_paving_Y": (F.sparse_paving_Y, ("k", "n", "lambda")),
}


def cmd_formula(args) -> int:
    if args.formula_id not in FORMULAS:
        raise UsageError(f"unknown formula {args.formula_id!r}; known: {', '.join(sorted(FORMULAS))}")
    fn, names = FORMULAS[args.formula_id]
    given = {}
    for item in args.params:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        try:
            given[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer, got {value!r}") from None
    missing = [x for x in names if x not in given]
    extra = sorted(set(given) - set(names))
    if missing or extra:
        raise UsageError(f"{args.formula_id} takes {', '.join(names)}; missing {missing}, unexpected {extra}")
    for key in ("n", "h"):
        if key in given and given[key] > HARD_CAP and not args.unsafe_large:
            raise UsageError(f"{key}={given[key]} exceeds the cap {HARD_CAP}; pass --unsafe-large")
    try:
        value = fn(*(given[x] for x in names))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"formula": args.formula_id, "params": given, "value": value}
    if isinstance(value, GradedRep):
        pretty = value.pretty()
        if value.flavor == "sym":
            payload["dimension"] = dimension_poly(value)
    elif hasattr(value, "pretty"):
        pretty = value.pretty()
    else:
        pretty = str(value)
    payload["pretty"] = pretty
    _emit(args, payload, pretty)
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = args.theorem_ids or list(THEOREM_IDS)
    unknown = [t for t in ids if t not in THEOREM_IDS]
    if unknown:
        raise UsageError(f"unknown theorem ids {unknown}; known: {', '.join(THEOREM_IDS)}")
    if args.freeze:
        Path(args.freeze).write_text(canonical(freeze_fixtures()))
        return EXIT_OK
    overrides = parse_ranges(args.range)
    _check_cap(overrides, args.unsafe_large)
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.count is not None:
        overrides["count"] = args.count
    reports = run_suites(ids, overrides, max(args.jobs, 1))
    payload = {"reports": [r.to_json() for r in reports], "status": "pass" if all(r.passed for r in reports) else "fail"}
    text = format_table(reports)
    for r in reports:
        for w in r.witnesses[:3]:
            text += f"\n  {r.theorem_id} witness: {json.dumps(serialize(w), sort_keys=True)}"
    _emit(args, payload, text)
    return EXIT_OK if payload["status"] == "pass" else EXIT_FAIL


def cmd_relax(args) -> int:
    M = load_matroid(args.spec, args.unsafe_large)
    k = M.k
    if args.hyperplane is not None:
        try:
            H = mask_of(int(x) for x in args.hyperplane.split(",") if x.strip())
        except ValueError:
            raise UsageError(f"bad hyperplane {args.hyperplane!r}; expected comma-separated elements") from None
        try:
            N = relax_one(M, H, validate=False)
        except MatroidError as exc:
            raise UsageError(str(exc)) from None
        relaxed = [H]
    else:
        relaxed = stressed_hyperplanes(M, k) if k >= 1 else []
        N = relax_all(M) if relaxed else M
    before = IntPolynomial(invariants_cached(M)["Y"])
    after = IntPolynomial(invariants_cached(N)["Y"]) if relaxed else before
    predicted = IntPolynomial()
    for H in relaxed:
        predicted = predicted + dimension_poly(F.paving_delta(k, popcount(H)))
    diff = after - before
    payload = {
        "matroid": M.to_json(),
        "relaxed": [elements_of(H) for H in relaxed],
        "Y_before": before,
        "Y_after": after,
        "difference": diff,
        "predicted": predicted,
        "match": diff == predicted,
    }
    text = "\n".join([
        f"relaxed    {[elements_of(H) for H in relaxed]}",
        f"Y before   {before}",
        f"Y after    {after}",
        f"difference {diff}",
        f"predicted  {predicted}",
        f"match      {payload['match']}",
    ])
    _emit(args, payload, text)
    return EXIT_OK if payload["match"] else EXIT_FAIL


def cmd_explore(args) -> int:
    ranges = parse_ranges(args.range)
    _check_cap(ranges, args.unsafe_large)
    n_lo, n_hi = ranges.get("n", (4, 9))
    n_lo, n_hi = n_lo or 4, n_hi or 9
    if n_lo < 3:
        raise UsageError("sparse-paving exploration needs n >= 3")
    seed = 0 if args.seed is None else args.seed
    count = 100 if args.count is None else args.count
    findings = []
    for i in range(count):
        M = random_sparse_paving(seed, i, n_lo, n_hi)
        Y = list(IntPolynomial(invariants_cached(M)["Y"]))
        bad = []
        if not is_unimodal(Y):
            bad.append("unimodal")
        if not is_strongly_logconcave(Y):
            bad.append("strongly_logconcave")
        if bad:
            findings.append({"index": i, "failed": bad, "matroid": M.to_json(), "Y": Y})
    payload = {"seed": seed, "count": count, "n": [n_lo, n_hi], "findings": findings}
    lines = [f"seed={seed} instances={count} n={n_lo}..{n_hi} counterexamples={len(findings)}"]
    lines += [json.dumps(f, sort_keys=True) for f in findings]
    _emit(args, payload, "\n".join(lines))
    return EXIT_FAIL if findings else EXIT_OK


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="canonical JSON output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    common.add_argument("--seed", type=int, default=None, metavar="S", help="seed for random families")
    common.add_argument("--range", default=None, metavar="SPEC", help="parameter ranges, e.g. k=1..4,n=..9")
    common.add_argument("--unsafe-large", action="store_true", help=f"allow ground sets above {HARD_CAP}")

    parser = argparse.ArgumentParser(prog="mkls", description="Kazhdan-Lusztig-Stanley invariants of matroids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="invariants of one matroid")
    p.add_argument("spec", help="matroid JSON file or inline JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form")
    p.add_argument("formula_id")
    p.add_argument("params", nargs="*", help="name=value pairs")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="run theorem verification suites")
    p.add_argument("theorem_ids", nargs="*", help=f"subset of: {', '.join(THEOREM_IDS)}")
    p.add_argument("--count", type=int, default=None, help="instances for random suites")
    p.add_argument("--freeze", metavar="FILE", help="write oracle golden fixtures to FILE and exit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("relax", parents=[common], help="relax stressed hyperplanes and compare Y")
    p.add_argument("spec", help="matroid JSON file or inline JSON")
    p.add_argument("--hyperplane", default=None, help="comma-separated elements; default relaxes all stressed")
    p.set_defaults(func=cmd_relax)

    p = sub.add_parser("explore", parents=[common], help="search random sparse paving matroids for counterexamples")
    p.add_argument("--count", type=int, default=None, help="number of instances (default 100)")
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, MatroidError) as exc:
        print(f"mkls: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KLSConsistencyError as exc:
        print(f"mkls: consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
