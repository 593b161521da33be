"""Theorem-level verification sweeps and their reports.

Each theorem id maps to a suite: a generator of parameter tuples plus a
checker that returns ``None`` on success or a witness dict on failure. Suites
run case by case, optionally in a process pool, and results are merged in the
order the cases were generated so reports do not depend on scheduling.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import formulas as F
from .kls import inv_z_Y
from .matroid import (
    Matroid,
    make_paving,
    make_qniform,
    make_sparse_paving,
    m_kh,
    mask_of,
    paving_profile,
    relax,
    uniform,
)
from .partitions import dim_syt, multinomial, normalize_shape
from .poly import IntPolynomial, is_strongly_logconcave, is_unimodal
from .repring import (
    GradedRep,
    dimension_poly,
    is_equivariantly_unimodal,
    is_honest,
    is_palindromic,
    logconcavity_witnesses,
    qdimension_poly,
    restrict_one,
    unimodal_pivots,
)
from .symfunc import SchurVector, lr_product, s, schur_geq

PASS = "pass"
FAIL = "fail"


def serialize(x):
    """JSON-ready form of the library's value types."""
    if isinstance(x, (IntPolynomial, SchurVector, GradedRep, Matroid)):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): serialize(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [serialize(v) for v in x]
    return x


@dataclass
class TheoremReport:
    theorem_id: str
    params: dict
    status: str = PASS
    checked: int = 0
    witnesses: list = field(default_factory=list)
    note: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"status must be {PASS!r} or {FAIL!r}")
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "params": serialize(self.params),
            "status": self.status,
            "checked": self.checked,
            "witnesses": serialize(self.witnesses),
        }
        if self.note:
            out["note"] = self.note
        return out

    def row(self) -> str:
        params = " ".join(f"{k}={_fmt_range(v)}" for k, v in sorted(self.params.items()))
        return f"{self.theorem_id:<16} {self.status:<5} {self.checked:>6}  {len(self.witnesses):>3}  {params}"


def _fmt_range(v) -> str:
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(x, int) for x in v):
        return f"{v[0]}..{v[1]}"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def format_table(reports: Iterable[TheoremReport]) -> str:
    lines = [f"{'theorem':<16} {'status':<5} {'cases':>6}  {'bad':>3}  params"]
    lines += [r.row() for r in reports]
    return "\n".join(lines)


def _report(theorem_id: str, params: dict, witnesses: list, checked: int = 1, note: str = "") -> TheoremReport:
    return TheoremReport(theorem_id, params, FAIL if witnesses else PASS, checked, witnesses, note)


# -- single checks ------------------------------------------------------------

RELAXATION_READING = "V_(1) read as the trivial factor, so the B_1 summand contributes the scalar (1+t)"


def relaxation_identity_check(k: int, h: int) -> TheoremReport:
    """Res Y_{U_{k,h+1}} - (1+t) Y_{U_{k-1,h}} against the closed-form paving delta."""
    if not h >= k >= 2:
        raise ValueError(f"need h >= k >= 2, got k={k}, h={h}")
    lhs = restrict_one(F.equiv_Y_uniform(k, h + 1)) - F.m_kh_equiv_Y(k, h)
    rhs = F.paving_delta(k, h)
    bad = [] if lhs == rhs else [{"k": k, "h": h, "lhs": lhs, "rhs": rhs, "reading": RELAXATION_READING}]
    return _report("thm1.5", {"k": k, "h": h}, bad, note=RELAXATION_READING)


def hook_dim_identity_check(k: int, h: int) -> TheoremReport:
    """dim of s_(h-k+2, 2^(k/2-1)) against the multinomial closed form."""
    if k % 2 or not h >= k >= 2:
        raise ValueError(f"need even k and h >= k >= 2, got k={k}, h={h}")
    lhs = dim_syt(normalize_shape(h - k + 2, k // 2 - 1, 0))
    num = 4 * h * multinomial(h - 1, k // 2, k // 2 - 1, h - k)
    den = (2 * h - k) * (2 * h - k + 2)
    ok = num % den == 0 and lhs == num // den
    bad = [] if ok else [{"k": k, "h": h, "lhs": lhs, "rhs": f"{num}/{den}"}]
    return _report("thm1.6", {"k": k, "h": h}, bad)


def uniform_dominance_check(k: int, h: int) -> TheoremReport:
    """Relaxing never increases Y: the paving delta is an honest representation."""
    delta = F.paving_delta(k, h)
    bad = [] if is_honest(delta) else [{"k": k, "h": h, "delta": delta}]
    return _report("thm1.7", {"k": k, "h": h}, bad)


# -- matroid families ---------------------------------------------------------

def greedy_circuit_hyperplanes(n: int, k: int, target: int, rng: Optional[random.Random] = None) -> list[int]:
    """Pack k-subsets pairwise meeting in at most k-2 elements, up to ``target`` of them.

    Candidates are scanned in lexicographic order, or shuffled by ``rng``.
    """
    cands = [mask_of(c) for c in itertools.combinations(range(n), k)]
    if rng is not None:
        rng.shuffle(cands)
    chosen: list[int] = []
    for c in cands:
        if len(chosen) >= target:
            break
        if all(bin(c & d).count("1") <= k - 2 for d in chosen):
            chosen.append(c)
    return chosen


def random_sparse_paving(seed: int, index: int, n_lo: int = 4, n_hi: int = 9, max_lambda: int = 8):
    """The index-th member of the seeded random sparse-paving stream."""
    rng = random.Random(f"mkls:{seed}:{index}")
    n = rng.randint(n_lo, n_hi)
    k = rng.randint(2, n - 1)
    target = rng.randint(1, max_lambda)
    return make_sparse_paving(n, k, greedy_circuit_hyperplanes(n, k, target, rng))


def constructed_matroids(n_max: int = 9) -> list[tuple[str, Matroid]]:
    """Named catalog used by the honesty and palindromicity suites."""
    return list(_catalog(n_max))


@lru_cache(maxsize=None)
def _catalog(n_max: int) -> tuple:
    out: list[tuple[str, Matroid]] = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            out.append((f"U({k},{n})", uniform(k, n)))
    for h in range(1, n_max):
        for k in range(1, h + 1):
            out.append((f"M({k},{h})", m_kh(k, h)))
    for n in range(4, n_max + 1):
        for k in range(2, n):
            for lam in (1, 2, 3):
                hs = greedy_circuit_hyperplanes(n, k, lam)
                if len(hs) == lam:  # small ground sets cannot hold every requested packing
                    out.append((f"SP({k},{n},{lam})", make_sparse_paving(n, k, hs)))
    for dim, q in ((2, 2), (3, 2), (2, 3)):
        for k in range(1, dim + 1):
            M = make_qniform(k, dim, q)
            if M.n <= n_max:
                out.append((f"Uq({k},{dim},{q})", M))
    return tuple(out)


# -- suite checkers -----------------------------------------------------------

def _check_thm11(case):
    k, n = case
    a = F.equiv_Y_uniform(k, n)
    b = F.equiv_Y_uniform_irreducible(k, n)
    c = F.equiv_Y_uniform_via_definition(k, n)
    if a == b == c:
        return None
    return {"k": k, "n": n, "induced": a, "irreducible": b, "definition": c}


def _check_prop32(case):
    k, n = case
    Y = F.equiv_Y_uniform(k, n)
    if Y != F.equiv_Y_uniform_irreducible(k, n):
        return {"k": k, "n": n, "induced": Y, "irreducible": F.equiv_Y_uniform_irreducible(k, n)}
    for i in range(1, k // 2 + 1):
        diff = Y[i] - Y[i - 1]
        want = F.shape(n - k + 1, i, k - 2 * i - 1) + F.shape(n - k + 2, i - 1, k - 2 * i)
        if diff != want:
            return {"k": k, "n": n, "i": i, "difference": diff, "expected": want}
    return None


def _check_thm13(case):
    k, n = case
    Y = F.equiv_Y_uniform(k, n)
    return None if is_equivariantly_unimodal(Y) else {"k": k, "n": n, "Y": Y}


def _check_thm14(case):
    k, n = case
    Y = F.equiv_Y_uniform(k, n)
    bad = logconcavity_witnesses(Y)
    return None if not bad else {"k": k, "n": n, "pairs": bad, "Y": Y}


def _check_thm15(case):
    kind, k, h = case
    if kind == "identity":
        rep = relaxation_identity_check(k, h)
        return rep.witnesses[0] if rep.witnesses else None
    M = m_kh(k, h)
    H = (1 << h) - 1
    diff = inv_z_Y(relax(M, H, validate=False)) - inv_z_Y(M)
    want = dimension_poly(F.paving_delta(k, h))
    return None if diff == want else {"k": k, "h": h, "oracle_diff": diff, "predicted": want}


def _check_thm16(case):
    kind = case[0]
    if kind == "hookdim":
        rep = hook_dim_identity_check(case[1], case[2])
        return rep.witnesses[0] if rep.witnesses else None
    if kind == "catalan":
        _, k, n, lam = case
        hs = greedy_circuit_hyperplanes(n, k, lam)
        prof = paving_profile(make_sparse_paving(n, k, hs))
        a, b = F.ordinary_paving_Y(prof), F.sparse_paving_Y(k, n, len(hs))
        return None if a == b else {"k": k, "n": n, "lambda": len(hs), "profile_form": a, "catalan_form": b}
    if kind == "sparse":
        _, k, n, lam, order = case
        rng = None if order == "lex" else random.Random(f"mkls:thm1.6:{k}:{n}:{lam}")
        M = make_sparse_paving(n, k, greedy_circuit_hyperplanes(n, k, lam, rng))
    elif kind == "mkh":
        _, k, h = case
        M = m_kh(k, h)
    else:  # one large stressed hyperplane inside a larger ground set
        _, k, n, h = case
        M = make_paving(n, k, [tuple(range(h))])
    prof = paving_profile(M)
    a, b = F.ordinary_paving_Y(prof), inv_z_Y(M)
    return None if a == b else {"case": list(case), "matroid": M, "formula": a, "oracle": b}


def _check_thm17(case):
    k, h = case
    rep = uniform_dominance_check(k, h)
    return rep.witnesses[0] if rep.witnesses else None


def _equivariant_family(case):
    kind, k, n = case
    return F.equiv_Y_uniform(k, n) if kind == "uniform" else F.paving_delta(k, n)


def _ordinary_catalog_entry(name: str) -> Matroid:
    return dict(_catalog(9))[name]


def _check_prop21(case):
    if case[0] == "ordinary":
        M = _ordinary_catalog_entry(case[1])
        Y = inv_z_Y(M)
        return None if all(c >= 0 for c in Y) else {"matroid": case[1], "Y": Y}
    f = _equivariant_family(case)
    return None if is_honest(f) else {"case": list(case), "Y": f}


def _check_prop22(case):
    if case[0] == "ordinary":
        M = _ordinary_catalog_entry(case[1])
        Y = inv_z_Y(M)
        ok = Y.is_palindromic(M.k) if Y else True  # matroids with loops have Y = 0
        return None if ok else {"matroid": case[1], "Y": Y}
    f = _equivariant_family(case)
    return None if is_palindromic(f, case[1]) else {"case": list(case), "Y": f}


def _hook(m: int, u: int) -> SchurVector:
    return s(m, *([1] * u))


def _check_lem34(case):
    m, j, u, v = case
    left = lr_product(_hook(m, u), _hook(j, v))
    if u < v:
        right = lr_product(_hook(m, v - 1), _hook(j, u + 1))
    else:
        right = lr_product(_hook(m, v), _hook(j, u))
    return None if schur_geq(right, left) else {"m": m, "j": j, "u": u, "v": v, "small": left, "large": right}


def _check_lem35(case):
    if case[0] == 1:
        _, k, n, i = case
        big, small = F.induced_coefficient(k, n, i), F.induced_coefficient(k, n, i - 1)
        return None if schur_geq(big, small) else {"part": 1, "k": k, "n": n, "i": i}
    _, k, n, i, j = case
    big = lr_product(F.induced_coefficient(k, n, i), F.induced_coefficient(k, n, j))
    small = lr_product(F.induced_coefficient(k, n, i - 1), F.induced_coefficient(k, n, j + 1))
    return None if schur_geq(big, small) else {"part": 2, "k": k, "n": n, "i": i, "j": j}


def _check_thm38(case):
    k, n = case
    hc = F._mirror([F.induced_coefficient(k, n, i) for i in range(k // 2 + 1)], k, n)
    Yq = F.equiv_Y_qniform(k, n)
    if hc.coeffs != Yq.coeffs:
        return {"k": k, "n": n, "induction_side": hc, "theorem_side": Yq}
    mob = F.equiv_char_qniform(k, n)[0]
    if mob != F.equiv_mobius_uniform(k, n):
        return {"k": k, "n": n, "char_constant_term": mob}
    for q in (2, 3):
        qd = qdimension_poly(Yq, q)
        if qd != F.ordinary_Y_qniform(k, n, q):
            return {"k": k, "n": n, "q": q, "qdimension": qd, "gaussian_form": F.ordinary_Y_qniform(k, n, q)}
    return None


def _check_propqY(case):
    kind = case[0]
    if kind == "oracle":
        _, k, n, q = case
        M = make_qniform(k, n, q)
        a, b = F.ordinary_Y_qniform(k, n, q), inv_z_Y(M)
        if a != b:
            return {"k": k, "n": n, "q": q, "formula": a, "oracle": b}
        c = qdimension_poly(F.equiv_char_qniform(k, n), q)
        return None if c == M.char_poly() else {"k": k, "n": n, "q": q, "char_formula": c, "char_oracle": M.char_poly()}
    if kind == "induced":
        _, k, n, q = case
        a, b = F.ordinary_Y_qniform(k, n, q), F.ordinary_Y_qniform_induced(k, n, q)
        return None if a == b else {"k": k, "n": n, "q": q, "gaussian_form": a, "induced_form": b}
    _, k, n = case  # q -> 1
    a, b = F.ordinary_Y_qniform(k, n, 1), dimension_poly(F.equiv_Y_uniform(k, n))
    return None if a == b == F.ordinary_Y_uniform(k, n) else {"k": k, "n": n, "q1": a, "uniform": b}


def _check_cor311(case):
    k, n, q = case
    Y = F.ordinary_Y_qniform(k, n, q)
    return None if is_strongly_logconcave(list(Y)) else {"k": k, "n": n, "q": q, "Y": Y}


def _check_conj12(case):
    seed, index, n_lo, n_hi = case
    M = random_sparse_paving(seed, index, n_lo, n_hi)
    Y = inv_z_Y(M)
    return None if is_unimodal(list(Y)) else {"seed": seed, "index": index, "matroid": M, "Y": Y}


def _check_conj14(case):
    seed, index, n_lo, n_hi = case
    M = random_sparse_paving(seed, index, n_lo, n_hi)
    Y = inv_z_Y(M)
    return None if is_strongly_logconcave(list(Y)) else {"seed": seed, "index": index, "matroid": M, "Y": Y}


# -- suite case generators ----------------------------------------------------

def _kn(r, k_min: int = 1):
    n_lo, n_hi = r["n"]
    k_lo, k_hi = r.get("k", (k_min, n_hi))
    return [(k, n) for n in range(max(n_lo, 1), n_hi + 1) for k in range(max(k_lo, k_min), min(k_hi, n) + 1)]


def _kh(r, k_min: int = 1):
    h_lo, h_hi = r["h"]
    k_lo, k_hi = r.get("k", (k_min, h_hi))
    return [(k, h) for h in range(max(h_lo, 1), h_hi + 1) for k in range(max(k_lo, k_min), min(k_hi, h) + 1)]


def _cases_thm15(r):
    out = [("identity", k, h) for k, h in _kh({"h": r["h"], "k": r.get("k", (2, 99))}, 2)]
    o_lo, o_hi = r["oracle_h"]
    out += [("oracle", k, h) for k, h in _kh({"h": (o_lo, o_hi), "k": r.get("k", (1, 99))})]
    return out


def _cases_thm16(r):
    n_lo, n_hi = r["n"]
    out = []
    for n in range(max(n_lo, 3), n_hi + 1):
        for k in range(2, n):
            for lam in range(1, r["lambda"][1] + 1):
                out.append(("sparse", k, n, lam, "lex"))
                out.append(("sparse", k, n, lam, "shuffled"))
    for k, h in _kh({"h": r["mkh_h"]}):
        out.append(("mkh", k, h))
    for n in range(max(n_lo, 3), n_hi + 1):
        for k in range(2, n):
            for h in range(k + 1, n):
                out.append(("large", k, n, h))
    for n in range(max(n_lo, 3), n_hi + 1):
        for k in range(2, min(r["catalan_k"][1], n - 1) + 1):
            out.append(("catalan", k, n, r["lambda"][1]))
    for k in r["hookdim_k"]:
        for h in range(k, r["hookdim_h"][1] + 1):
            out.append(("hookdim", k, h))
    return out


def _cases_equivariant(r):
    out = [("uniform", k, n) for k, n in _kn(r)]
    out += [("delta", k, h) for k, h in _kh({"h": r["h"]})]
    out += [("ordinary", name) for name, _ in constructed_matroids(r["n"][1])]
    return out


def _cases_lem34(r):
    lo, hi = r["j"]
    u_lo, u_hi = r["u"]
    return [
        (m, j, u, v)
        for j in range(max(lo, 1), hi + 1)
        for m in range(1, j + 1)
        for u in range(u_lo, u_hi + 1)
        for v in range(u_lo, u_hi + 1)
    ]


def _cases_lem35(r):
    out = []
    for k, n in _kn(r):
        out += [(1, k, n, i) for i in range(1, k // 2 + 1)]
        out += [(2, k, n, i, j) for i in range(1, k // 2) for j in range(i, k // 2)]
    return out


def _cases_propqY(r):
    qs = range(r["q"][0], r["q"][1] + 1)
    out = []
    for q in qs:
        hi = r["n"][1] if q == 2 else min(r["n"][1], 3)
        out += [("oracle", k, n, q) for k, n in _kn({"n": (1, hi)})]
    out += [("induced", k, n, q) for q in qs for k, n in _kn({"n": (1, r["q1_n"][1])})]
    out += [("q1", k, n) for k, n in _kn({"n": (1, r["q1_n"][1])})]
    return out


def _cases_random(r):
    n_lo, n_hi = r["n"]
    return [(r["seed"], i, n_lo, n_hi) for i in range(r["count"])]


@dataclass(frozen=True)
class Suite:
    theorem_id: str
    title: str
    defaults: dict
    cases: Callable
    check: Callable


SUITES: dict[str, Suite] = {
    s_.theorem_id: s_
    for s_ in [
        Suite("thm1.1", "induced = irreducible = definitional expansion", {"n": (1, 9)}, _kn, _check_thm11),
        Suite("prop3.2", "irreducible decomposition and consecutive differences", {"n": (1, 9)}, _kn, _check_prop32),
        Suite("thm1.3", "equivariant unimodality of uniform Y", {"n": (1, 12)}, _kn, _check_thm13),
        Suite("thm1.4", "strongly induced log-concavity of uniform Y", {"n": (1, 7)}, _kn, _check_thm14),
        Suite("thm1.5", "relaxation identity and oracle difference", {"h": (2, 8), "oracle_h": (1, 7)}, _cases_thm15, _check_thm15),
        Suite(
            "thm1.6",
            "paving profile formula against the lattice oracle",
            {"n": (3, 9), "lambda": (1, 3), "mkh_h": (1, 7), "catalan_k": (2, 6), "hookdim_k": (2, 4, 6), "hookdim_h": (2, 10)},
            _cases_thm16,
            _check_thm16,
        ),
        Suite("thm1.7", "paving deltas are honest", {"h": (1, 9)}, lambda r: _kh(r), _check_thm17),
        Suite("prop2.1", "honesty and nonnegativity", {"n": (1, 9), "h": (1, 9)}, _cases_equivariant, _check_prop21),
        Suite("prop2.2", "palindromicity", {"n": (1, 9), "h": (1, 9)}, _cases_equivariant, _check_prop22),
        Suite("lem3.4", "hook-product Schur inequalities", {"j": (1, 5), "u": (0, 5)}, _cases_lem34, _check_lem34),
        Suite("lem3.5", "induced-coefficient Schur inequalities", {"n": (1, 9)}, _cases_lem35, _check_lem35),
        Suite("thm3.8", "q-niform multiplicities via the Comparison Theorem", {"n": (1, 7)}, _kn, _check_thm38),
        Suite("prop-qY", "Gaussian-binomial Y against oracle, induction and q=1", {"n": (1, 4), "q": (2, 3), "q1_n": (1, 7)}, _cases_propqY, _check_propqY),
        Suite("cor3.11", "strong log-concavity of q-niform Y", {"n": (1, 6), "q": (2, 3)}, lambda r: [(k, n, q) for q in range(r["q"][0], r["q"][1] + 1) for k, n in _kn(r)], _check_cor311),
        Suite("conj1.2-dim", "unimodality of oracle Y on random sparse paving", {"n": (4, 9), "count": 200, "seed": 0}, _cases_random, _check_conj12),
        Suite("conj1.4-induced", "strong log-concavity of oracle Y on random sparse paving", {"n": (4, 9), "count": 200, "seed": 0}, _cases_random, _check_conj14),
    ]
}

THEOREM_IDS = tuple(SUITES)


def _run_case(args):
    theorem_id, case = args
    return SUITES[theorem_id].check(case)


def run_suite(theorem_id: str, overrides: Optional[dict] = None, jobs: int = 1) -> TheoremReport:
    """Run one suite; ``overrides`` replace default ranges key by key."""
    if theorem_id not in SUITES:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    suite = SUITES[theorem_id]
    params = dict(suite.defaults)
    for key, value in (overrides or {}).items():
        if key not in params:
            continue
        if isinstance(value, tuple) and isinstance(params[key], tuple) and len(value) == 2:
            lo, hi = value
            value = (params[key][0] if lo is None else lo, params[key][-1] if hi is None else hi)
        params[key] = value
    cases = list(suite.cases(params))
    work = [(theorem_id, c) for c in cases]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, work, chunksize=1))
    else:
        results = [_run_case(w) for w in work]
    witnesses = [w for w in results if w is not None]
    note = RELAXATION_READING if theorem_id == "thm1.5" else ""
    return _report(theorem_id, params, witnesses, checked=len(cases), note=note)


def run_suites(theorem_ids: Iterable[str], overrides: Optional[dict] = None, jobs: int = 1) -> list[TheoremReport]:
    return [run_suite(t, overrides, jobs) for t in sorted(set(theorem_ids), key=THEOREM_IDS.index)]


def equivariant_unimodality_control() -> bool:
    """The sequence [s_(5), s_(3,2)] must not be equivariantly unimodal."""
    f = GradedRep([s(5), s(3, 2)], 5)
    return not unimodal_pivots(f)


def freeze_fixtures(n_max: int = 9) -> dict:
    """Oracle invariants for the constructed catalog, for golden-fixture files."""
    from .kls import all_invariants

    out = {}
    entries = list(_catalog(n_max)) + [(f"Uq({k},4,2)", make_qniform(k, 4, 2)) for k in range(1, 5)]
    for name, M in entries:
        inv = all_invariants(M)
        out[name] = {"matroid": M.to_json(), **{key: p.to_json() for key, p in inv.items()}}
    return out
