"""Named verification suites behind the `verify` CLI command.

Each suite is a pure function of its parameters: same id and params give
the same report dict (and hence byte-identical JSON).  A report carries one
entry per case, an overall pass flag, and, on failure, the first
counterexample as a replayable spec dict.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from . import serialize
from .code import extend_g
from .covering import (
    covering_radius,
    is_deep_hole,
    is_deep_hole_via_mds,
    syndrome_criterion,
)
from .constructions import (
    GrsSpec,
    cu_extension_facts,
    cyclic_cu,
    egrs,
    egrs_dual_code,
    grs,
    grs_dual_weights,
    nk_delta_set_check,
    prs,
    roth_lempel,
    subset_sums,
    subset_sums_bruteforce,
    t_set,
    t_set_bruteforce,
    thm12_u,
    thm14_vector,
    thm7_u,
)
from .errors import UnknownSuite
from .field import field_new
from .kernels import DEFAULT_BUDGET
from .matrix import egrs_generator, grs_generator

_FIELD_BY_Q = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1),
               8: (2, 3), 9: (3, 2), 11: (11, 1), 13: (13, 1), 16: (2, 4)}


def _ctx_for_q(q: int):
    if q not in _FIELD_BY_Q:
        raise UnknownSuite(f"no field catalogued for q = {q}")
    return field_new(*_FIELD_BY_Q[q])


def _grs_spec_dict(ctx, nodes, mult, k, u=None, extended=False):
    d = {
        "field": serialize.field_to_dict(ctx),
        "code": {"type": "egrs" if extended else "grs",
                 "nodes": list(nodes), "multipliers": list(mult), "k": k},
    }
    if u is not None:
        d = {"field": d["field"],
             "code": {"type": "extend", "inner": d["code"],
                      "u": [int(x) for x in u]}}
    return d


# ---------------------------------------------------------------------------
# thm6-exhaustive: extension of a GRS code is MDS iff the dual has full
# covering radius and u is one of its deep holes, for every single u.
# ---------------------------------------------------------------------------

def suite_thm6_exhaustive(params):
    qs = params.get("qs", [3, 4, 5])
    max_n = params.get("max_n", 5)
    seed = params.get("seed", 7)
    budget = params.get("budget", DEFAULT_BUDGET)
    rng = random.Random(seed)
    cases = []
    counterexample = None
    for q in qs:
        ctx = _ctx_for_q(q)
        for n in range(2, min(q, max_n) + 1):
            checked_codes = 0
            checked_u = 0
            ok = True
            for nodes in combinations(range(q), n):
                mults = [[1] * n,
                         [rng.randrange(1, q) for _ in range(n)]]
                for mult in mults:
                    for k in range(1, n):
                        code = grs(GrsSpec.make(ctx, nodes, mult, k))
                        dual = code.dual()
                        rep = covering_radius(dual, budget)
                        rho_is_k = rep.rho == k
                        checked_codes += 1
                        for uvals in product(range(q), repeat=n):
                            u = ctx.vector(uvals)
                            lhs = code.extend_u(u).is_mds(budget)
                            rhs = (rho_is_k
                                   and rep.leader_weight(u) == rep.rho)
                            checked_u += 1
                            if lhs != rhs and counterexample is None:
                                ok = False
                                counterexample = _grs_spec_dict(
                                    ctx, nodes, mult, k, u=uvals)
                if counterexample is not None:
                    break
            cases.append({"q": q, "n": n, "codes": checked_codes,
                          "u_checked": checked_u, "ok": ok})
    return cases, counterexample


# ---------------------------------------------------------------------------
# thm7-identity: the closed-form u turns an evaluation code into its
# coefficient-extended form, and is a deep hole of the dual (full radius k).
# ---------------------------------------------------------------------------

def suite_thm7_identity(params):
    qs = params.get("qs", [2, 3, 4, 5, 7, 8, 9])
    samples = params.get("samples", 20)
    seed = params.get("seed", 7)
    budget = params.get("budget", 8192)
    rng = random.Random(seed)
    cases = []
    counterexample = None
    for q in qs:
        ctx = _ctx_for_q(q)
        checked = 0
        covered = 0
        ok = True
        for s in range(samples):
            n = rng.randint(2, q) if q > 2 else 2
            nodes = rng.sample(range(q), n)
            mult = [1] * n if s % 2 == 0 \
                else [rng.randrange(1, q) for _ in range(n)]
            a = ctx.vector(nodes)
            v = ctx.vector(mult)
            for k in range(1, n):
                u = thm7_u(a, v, k)
                gk = grs_generator(a, v, k)
                col = gk.mat_vec(u)
                ident = [e.value for e in col] == [0] * (k - 1) + [1]
                code = grs(GrsSpec.make(ctx, nodes, mult, k))
                ext_ok = code.extend_u(u).same_code(
                    egrs(GrsSpec.make(ctx, nodes, mult, k)))
                case_ok = ident and ext_ok
                if case_ok and q ** k <= budget:
                    dual = code.dual()
                    rep = covering_radius(dual, budget)
                    case_ok = (rep.rho == k
                               and rep.leader_weight(u) == rep.rho)
                    covered += 1
                checked += 1
                if not case_ok:
                    ok = False
                    if counterexample is None:
                        counterexample = _grs_spec_dict(
                            ctx, nodes, mult, k,
                            u=[e.value for e in u])
        cases.append({"q": q, "checked": checked,
                      "covering_checked": covered, "ok": ok})
    return cases, counterexample


# ---------------------------------------------------------------------------
# thm12-identity: the closed-form u turns the coefficient-extended code into
# the Roth-Lempel code, across all delta; plus the node-power sum identity.
# ---------------------------------------------------------------------------

def suite_thm12_identity(params):
    qs = params.get("qs", [4, 5, 7, 8])
    seed = params.get("seed", 7)
    rng = random.Random(seed)
    cases = []
    counterexample = None
    for q in qs:
        ctx = _ctx_for_q(q)
        node_sets = []
        for n in range(4, q + 1):
            node_sets.append(list(range(n)))
            if n < q:
                node_sets.append(sorted(rng.sample(range(q), n)))
        for nodes in node_sets:
            n = len(nodes)
            a = ctx.vector(nodes)
            w = grs_dual_weights(a, 1)
            node_sum = sum(a, ctx.zero)
            power_sum = sum((wi * ai ** n for wi, ai in zip(w, a)), ctx.zero)
            sum_ok = power_sum == node_sum
            checked = 0
            ok = sum_ok
            for k in range(3, n):
                e_code = egrs(GrsSpec.make(ctx, nodes, 1, k))
                gki = egrs_generator(a, 1, k)
                for dv in range(q):
                    u = thm12_u(a, k, dv)
                    col = gki.mat_vec(u)
                    ident = ([e.value for e in col]
                             == [0] * (k - 2) + [1, dv])
                    rl = roth_lempel(a, k, dv)
                    match = e_code.extend_u(u).same_code(rl)
                    checked += 1
                    if not (ident and match):
                        ok = False
                        if counterexample is None:
                            counterexample = {
                                "field": serialize.field_to_dict(ctx),
                                "code": {"type": "roth-lempel",
                                         "nodes": list(nodes), "k": k,
                                         "delta": dv}}
            cases.append({"q": q, "nodes": list(nodes), "checked": checked,
                          "sum_identity": sum_ok, "ok": ok})
    return cases, counterexample


# ---------------------------------------------------------------------------
# thm14-consistency: subset-sum / pole-product verdicts versus brute-force
# deep-hole checks on the dual of the coefficient-extended code.
# ---------------------------------------------------------------------------

def suite_thm14_consistency(params):
    qs = params.get("qs", [4, 5])
    budget = params.get("budget", DEFAULT_BUDGET)
    cases = []
    counterexample = None
    for q in qs:
        ctx = _ctx_for_q(q)
        for n in range(3, q + 1):
            nodes = list(range(n))
            a = ctx.vector(nodes)
            for k in range(2, n + 1):
                if n + 1 - k < 1:
                    continue
                target = egrs_dual_code(a, k)
                rep = covering_radius(target, budget)
                if rep.rho != k:
                    cases.append({"q": q, "n": n, "k": k, "rho": rep.rho,
                                  "assumption_holds": False, "checked": 0,
                                  "ok": True})
                    continue
                checked = 0
                ok = True
                for dv in range(q):
                    cands = [thm14_vector("monomial", a, k, dv)]
                    for pv in range(q):
                        if pv in nodes:
                            continue
                        cands.append(thm14_vector("pole", a, k, dv, pi=pv))
                    for cand in cands:
                        brute = is_deep_hole(target, cand.vector, budget)
                        checked += 1
                        if cand.valid != brute:
                            ok = False
                            if counterexample is None:
                                counterexample = {
                                    "field": serialize.field_to_dict(ctx),
                                    "kind": cand.kind,
                                    "nodes": nodes, "k": k, "delta": dv,
                                    "pi": None if cand.pi is None
                                    else cand.pi.value,
                                    "set_verdict": cand.valid,
                                    "brute_force": brute}
                cases.append({"q": q, "n": n, "k": k, "rho": rep.rho,
                              "assumption_holds": True, "checked": checked,
                              "ok": ok})
    return cases, counterexample


# ---------------------------------------------------------------------------
# examples-1-2-3: the three worked covering-radius instances.
# ---------------------------------------------------------------------------

def suite_examples_1_2_3(params):
    budget = params.get("budget", DEFAULT_BUDGET)
    cases = []
    counterexample = None

    def run_example(name, q, k, want_params, want_rho):
        nonlocal counterexample
        ctx = _ctx_for_q(q)
        a = ctx.vector(range(q))
        dual = egrs_dual_code(a, k)
        rep = covering_radius(dual, budget)
        got = (dual.n, dual.k, dual.min_distance(budget))
        ok = got == want_params and rep.rho == want_rho
        if not ok and counterexample is None:
            counterexample = {
                "field": serialize.field_to_dict(ctx),
                "code": {"type": "dual",
                         "inner": {"type": "egrs",
                                   "nodes": list(range(q)),
                                   "multipliers": [1] * q, "k": k}},
                "got_params": list(got), "got_rho": rep.rho}
        cases.append({"example": name, "q": q, "k": k,
                      "params": list(got), "rho": rep.rho, "ok": ok})

    run_example("1", 4, 3, (5, 2, 4), 3)
    run_example("2", 8, 3, (9, 6, 4), 3)
    run_example("3", 8, 4, (9, 5, 5), 3)

    ctx8 = _ctx_for_q(8)
    all8 = ctx8.vector(range(8))
    no_delta = all(not nk_delta_set_check(all8, 3, d) for d in range(8))
    pair_sets = (nk_delta_set_check(all8, 2, 0)
                 and nk_delta_set_check(_ctx_for_q(4).vector(range(4)), 2, 0))
    cases.append({"example": "3-set-scan", "no_(8,3,delta)-set": no_delta,
                  "pair-zero-sets": pair_sets,
                  "ok": no_delta and pair_sets})
    if not (no_delta and pair_sets) and counterexample is None:
        counterexample = {"set_scan_failed": True}
    return cases, counterexample


# ---------------------------------------------------------------------------
# prs-conjecture: projective evaluation codes at k in {2, q-2} have full
# radius + 1 exactly in even characteristic.
# ---------------------------------------------------------------------------

def suite_prs_conjecture(params):
    qs = params.get("qs", [4, 5, 7, 8])
    budget = params.get("budget", DEFAULT_BUDGET)
    cases = []
    counterexample = None
    pairs = []
    for q in qs:
        pairs.append((q, 2))
    for q in (4, 5):
        if q in qs and q - 2 != 2:
            pairs.append((q, q - 2))
    for q, k in pairs:
        ctx = _ctx_for_q(q)
        want = q - k + 1 if q % 2 == 0 else q - k
        rep = covering_radius(prs(ctx, k), budget)
        ok = rep.rho == want
        if not ok and counterexample is None:
            counterexample = {"field": serialize.field_to_dict(ctx),
                              "code": {"type": "prs", "k": k},
                              "got_rho": rep.rho, "want_rho": want}
        cases.append({"q": q, "k": k, "rho": rep.rho, "want": want,
                      "ok": ok})
    return cases, counterexample


# ---------------------------------------------------------------------------
# cyclic-cu: parameters and MDS status of the cyclic family, the all-ones
# extension facts, and the dual covering radii.
# ---------------------------------------------------------------------------

def suite_cyclic_cu(params):
    ms = params.get("ms", [2, 3])
    budget = params.get("budget", DEFAULT_BUDGET)
    cases = []
    counterexample = None
    for m in ms:
        q = 2 ** m
        for u in range(1, q // 2 + 1):
            code = cyclic_cu(m, u)
            d = code.min_distance(budget)
            ok = ((code.n, code.k, d) == (q + 1, 2 * u - 1, q - 2 * u + 3)
                  and code.is_mds(budget))
            case = {"q": q, "u": u, "params": [code.n, code.k, d], "ok": ok}
            if u in (2, q // 2):
                facts = cu_extension_facts(m, u, budget)
                want_rho = 3 if u == 2 else q - 1
                want_ext = (q + 2, 3, q) if u == 2 else (q + 2, q - 1, 4)
                fact_ok = (facts.ext_params == want_ext and facts.ext_mds
                           and facts.rho_dual == want_rho
                           and facts.one_is_deep_hole)
                if u == 2:
                    fact_ok = fact_ok and facts.weight_formula_ok
                    case["weight_counts"] = {
                        "A0": facts.weight_counts[0],
                        f"A{q}": facts.weight_counts[q],
                        f"A{q + 2}": facts.weight_counts[q + 2]}
                case["ext_params"] = list(facts.ext_params)
                case["rho_dual"] = facts.rho_dual
                case["one_is_deep_hole"] = facts.one_is_deep_hole
                ok = ok and fact_ok
                case["ok"] = ok
            if not ok and counterexample is None:
                counterexample = {
                    "field": serialize.field_to_dict(field_new(2, m)),
                    "code": {"type": "cyclic", "u": u}, "case": case}
            cases.append(case)
    return cases, counterexample


# ---------------------------------------------------------------------------
# dp-vs-bruteforce: DP set operations against explicit enumeration, the
# all-sums corollary, the three deep-hole criteria against each other, and
# the inner-product / appended-column extension correspondence.
# ---------------------------------------------------------------------------

def _criteria_agreement_cases(budget):
    cases = []
    first_bad = None
    for q in (2, 3, 4):
        ctx = _ctx_for_q(q)
        codes = []
        for n in range(2, q + 1):
            nodes = list(range(n))
            for k in range(1, n):
                codes.append((f"eval[{n},{k}]",
                              grs(GrsSpec.make(ctx, nodes, 1, k))))
            for k in range(1, n + 1):
                if n + 1 <= 5:
                    codes.append((f"ext-eval[{n + 1},{k}]",
                                  egrs(GrsSpec.make(ctx, nodes, 1, k))))
        for name, code in codes:
            rep = covering_radius(code, budget)
            full = rep.rho == code.n - code.k
            mds = code.is_mds(budget)
            checked = 0
            agree = True
            for uvals in product(range(q), repeat=code.n):
                u = ctx.vector(uvals)
                dh = rep.leader_weight(u) == rep.rho
                sc = syndrome_criterion(code.parity, u, rep.rho)
                ok = dh == sc
                if ok and mds and full and code.k < code.n:
                    ok = dh == is_deep_hole_via_mds(code, u, budget)
                checked += 1
                if not ok:
                    agree = False
                    if first_bad is None:
                        first_bad = {"q": q, "code": name,
                                     "u": list(uvals)}
                    break
            cases.append({"q": q, "code": name, "rho": rep.rho,
                          "minor_test_applicable": bool(mds and full
                                                        and code.k < code.n),
                          "checked": checked, "ok": agree})
    return cases, first_bad


def _extension_kind_cases():
    cases = []
    first_bad = None
    for q in (2, 3, 4):
        ctx = _ctx_for_q(q)
        codes = []
        for n in range(2, q + 1):
            nodes = list(range(n))
            for k in range(1, n):
                codes.append((f"eval[{n},{k}]",
                              grs(GrsSpec.make(ctx, nodes, 1, k))))
            if n + 1 <= 5:
                codes.append((f"ext-eval[{n + 1},{n}]",
                              egrs(GrsSpec.make(ctx, nodes, 1, n))))
        for name, code in codes:
            n, k = code.n, code.k
            fibers = {}
            for uvals in product(range(q), repeat=n):
                u = ctx.vector(uvals)
                g = tuple(e.value for e in code.generator.mat_vec(u))
                fibers.setdefault(g, []).append(u)
            sizes_ok = all(len(v) == q ** (n - k) for v in fibers.values())
            match_ok = True
            for g, us in sorted(fibers.items()):
                target = extend_g(code.generator, g)
                if not all(code.extend_u(u).same_code(target) for u in us):
                    match_ok = False
                    if first_bad is None:
                        first_bad = {"q": q, "code": name, "g": list(g)}
                    break
            ok = sizes_ok and match_ok
            if not ok and first_bad is None:
                first_bad = {"q": q, "code": name, "fibers": "size"}
            cases.append({"q": q, "code": name, "fibers": len(fibers),
                          "fiber_size": q ** (n - k), "ok": ok})
    return cases, first_bad


def suite_dp_vs_bruteforce(params):
    seed = params.get("seed", 7)
    budget = params.get("budget", DEFAULT_BUDGET)
    rng = random.Random(seed)
    cases = []
    counterexample = None

    # DP set ops == explicit enumeration
    for q in (4, 5, 7, 8, 9, 11):
        ctx = _ctx_for_q(q)
        sets = [list(range(q))]
        if q > 4:
            sets.append(sorted(rng.sample(range(q), q - 2)))
        ok = True
        checked = 0
        for vals in sets:
            s = ctx.vector(vals)
            for m in range(len(vals) + 1):
                dp = {e.value for e in subset_sums(s, m)}
                bf = {e.value for e in subset_sums_bruteforce(s, m)}
                checked += 1
                if dp != bf:
                    ok = False
            outside = [x for x in range(q) if x not in vals]
            for pv in outside[:2]:
                for m in range(len(vals) + 1):
                    dp = {e.value for e in t_set(s, pv, m)}
                    bf = {e.value for e in t_set_bruteforce(s, pv, m)}
                    checked += 1
                    if dp != bf:
                        ok = False
            for dv in range(q):
                for m in range(1, min(4, len(vals))):
                    lhs = nk_delta_set_check(s, m, dv)
                    rhs = (ctx.elem(dv)
                           not in subset_sums_bruteforce(s, m))
                    checked += 1
                    if lhs != rhs:
                        ok = False
        if not ok and counterexample is None:
            counterexample = {"dp_mismatch_q": q}
        cases.append({"part": "dp-vs-enumeration", "q": q,
                      "checked": checked, "ok": ok})

    # every element is a k-fold distinct sum in the stated k range
    for q in (5, 7, 8, 9, 11):
        ctx = _ctx_for_q(q)
        s = ctx.vector(range(q))
        ok = True
        ks = list(range((q - 1) // 2, q - 2))
        for k in ks:
            got = {e.value for e in subset_sums(s, k)}
            if got != set(range(q)):
                ok = False
                if counterexample is None:
                    counterexample = {"all-sums_failed": {"q": q, "k": k}}
        cases.append({"part": "all-sums", "q": q, "ks": ks, "ok": ok})

    agree_cases, bad = _criteria_agreement_cases(budget)
    cases.extend({"part": "criteria-agreement", **c} for c in agree_cases)
    if bad is not None and counterexample is None:
        counterexample = {"criteria_disagreement": bad}

    ext_cases, bad = _extension_kind_cases()
    cases.extend({"part": "extension-kinds", **c} for c in ext_cases)
    if bad is not None and counterexample is None:
        counterexample = {"extension_kind_mismatch": bad}

    return cases, counterexample


SUITES = {
    "thm6-exhaustive": suite_thm6_exhaustive,
    "thm7-identity": suite_thm7_identity,
    "thm12-identity": suite_thm12_identity,
    "thm14-consistency": suite_thm14_consistency,
    "examples-1-2-3": suite_examples_1_2_3,
    "prs-conjecture": suite_prs_conjecture,
    "cyclic-cu": suite_cyclic_cu,
    "dp-vs-bruteforce": suite_dp_vs_bruteforce,
}


def run_suite(suite_id: str, params=None) -> dict:
    if suite_id not in SUITES:
        raise UnknownSuite(
            f"unknown suite {suite_id!r}; expected one of "
            f"{', '.join(sorted(SUITES))}")
    params = dict(params or {})
    cases, counterexample = SUITES[suite_id](params)
    passed = all(c.get("ok", False) for c in cases)
    return {
        "suite": suite_id,
        "params": {k: params[k] for k in sorted(params)},
        "cases": cases,
        "passed": passed,
        "counterexample": counterexample,
    }
