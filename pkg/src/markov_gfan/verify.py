"""Verification suites: each returns a :class:`CheckReport`.

The individual checks are importable on their own; :func:`run_suites`
bundles them per configuration and runs suites concurrently.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from math import gcd
from typing import Callable, Optional

from . import kernels
from ._parallel import thread_count
from .config import RunConfig
from .cw import (
    c_params,
    coeff_step,
    enumerate_coprime,
    g_from_coprime,
    g_params,
    valid_c_params,
    valid_g_params,
    walk_for_g_params,
)
from .exchange import ExchangeMatrix, SignPattern, c_column_signs, raw_initial, raw_step, to_modified
from .fractal import (
    branch_generator,
    kst_basis,
    map_between,
    phi_il,
    psi_branch_generator,
    psi_il,
    raw_basis,
    sample_admissible_pairs,
    verify_fractal,
    verify_relations,
)
from .gfan import (
    CheckReport,
    complements_agree,
    disjointness_check,
    f_ray,
    fan_property_check,
    g_uniqueness_check,
    region_d_check,
    upper_bound_check,
)
from .pattern import (
    branch_root_closed_form,
    eigen_basis,
    eval_walk,
    fixed_g,
    iter_states,
    seed,
    step,
    trunk_closed_form,
)
from .vectors import FIXED_C, ModVec
from .walk import Walk, initial_kst, signs_from_scratch

CW_CHAIN = ((1, 1), (2, 1), (1, 3), (3, 4), (7, 4), (11, 4))
EXAMPLE_PSI_S = ((1, 0, 0), (-2, 0, -1), (2, 1, 2))
EXAMPLE_PSI_T = ((0, -1, 0), (-2, 0, -1), (3, 2, 2))


# ---- exchange-level checks ----

def _lockstep(matrix: ExchangeMatrix, depth: int):
    """Yield (raw state, pattern state) pairs for all nonempty reduced sequences."""
    pattern = matrix.pattern
    stack = [(raw_initial(matrix), None)]
    while stack:
        raw, fast = stack.pop()
        if fast is not None:
            yield raw, fast
        if len(raw.seq) >= depth:
            continue
        for k in (3, 2, 1):
            if raw.seq and raw.seq[-1] == k:
                continue
            nxt = seed(pattern, k) if fast is None else step(fast, fast.walk.letter_for(k))
            stack.append((raw_step(raw, k), nxt))


def oracle_equivalence(matrix: ExchangeMatrix, depth: int) -> CheckReport:
    """Raw mutation triples, rescaled, equal the matrix-free triples."""
    report = CheckReport(True)
    for raw, fast in _lockstep(matrix, depth):
        report.checked += 1
        c, g = to_modified(raw)
        if c != fast.c_triple() or g != fast.g_triple():
            return report.fail(seq=list(raw.seq), oracle=[list(map(list, c)), list(map(list, g))])
    return report


def tropical_sign_check(matrix: ExchangeMatrix, depth: int) -> CheckReport:
    """Replayed signs equal oracle c-column signs and the uniqueness rule."""
    report = CheckReport(True)
    for raw, fast in _lockstep(matrix, depth):
        report.checked += 1
        w = fast.walk
        if c_column_signs(raw) != w.eps:
            return report.fail(seq=list(raw.seq), reason="c-column signs")
        eps, s_index = signs_from_scratch(matrix.pattern, raw.seq)
        if eps != w.eps or s_index != w.kst[1]:
            return report.fail(seq=list(raw.seq), reason="uniqueness rule")
    return report


# ---- pattern-level checks ----

def invariant_check(pattern: SignPattern, depth: int, backend: Optional[str] = None) -> CheckReport:
    """c_K+c_S+c_T = (1,1,1) everywhere; g_S+g_T-g_K = g_fixed_i on branches."""
    report = CheckReport(True)
    if depth < 1:
        return report
    for i in (1, 2, 3):
        st = seed(pattern, i)
        c0 = tuple(x for v in st.c_roles for x in v)
        g0 = tuple(x for v in st.g_roles for x in v)
        C, G, _, TR = kernels.expand_tree(c0, g0, initial_kst(pattern, i), True, depth - 1, backend)
        gf = tuple(fixed_g(pattern, i))
        for q, (c, g, trunk) in enumerate(zip(C, G, TR)):
            report.checked += 1
            if tuple(c[j] + c[3 + j] + c[6 + j] for j in range(3)) != FIXED_C:
                return report.fail(subtree=i, node=q, reason="c fixed vector")
            if not trunk and tuple(g[3 + j] + g[6 + j] - g[j] for j in range(3)) != gf:
                return report.fail(subtree=i, node=q, reason="g fixed vector")
    return report


def closed_form_check(pattern: SignPattern, n_max: int = 20) -> CheckReport:
    report = CheckReport(True)
    for i in (1, 2, 3):
        for n in range(n_max + 1):
            report.checked += 2
            if eigen_basis(eval_walk(Walk.from_word(pattern, i, "S" * n))) != trunk_closed_form(pattern, i, n):
                return report.fail(subtree=i, n=n, reason="trunk")
            if eigen_basis(eval_walk(Walk.from_word(pattern, i, "S" * n + "T"))) != branch_root_closed_form(
                pattern, i, n
            ):
                return report.fail(subtree=i, n=n, reason="branch root")
    return report


def representation_check(pattern: SignPattern, n_max: int = 5, l_max: int = 5) -> CheckReport:
    """Closed-form maps equal the triple-solve maps."""
    report = CheckReport(True)
    for i in (1, 2, 3):
        basis = kst_basis(pattern, i)
        for m in range(n_max + 1):
            w = Walk.from_word(pattern, i, "S" * m)
            for l in range(1, l_max + 1):
                u = Walk.from_word(pattern, i, "S" * (m + l))
                report.checked += 2
                if map_between(w, u, "G").to(basis) != psi_il(pattern, i, l):
                    return report.fail(subtree=i, m=m, l=l, side="G")
                if map_between(w, u, "C").to(basis) != phi_il(pattern, i, l):
                    return report.fail(subtree=i, m=m, l=l, side="C")
        for n in range(n_max + 1):
            for letter in "ST":
                report.checked += 1
                if branch_generator(pattern, i, n, letter).to(basis) != psi_branch_generator(pattern, i, n, letter):
                    return report.fail(subtree=i, n=n, letter=letter)
    return report


def example_matrices_check(matrix: ExchangeMatrix) -> CheckReport:
    """The two branch generators at [1]T for the sign +1 Markov matrix, standard basis."""
    report = CheckReport(True, 2)
    pattern = matrix.pattern
    for letter, want in (("S", EXAMPLE_PSI_S), ("T", EXAMPLE_PSI_T)):
        got = branch_generator(pattern, 1, 0, letter).to(raw_basis(matrix)).rows()
        if tuple(map(tuple, got)) != want:
            return report.fail(letter=letter, got=got)
    return report


def fractal_check(pattern: SignPattern, samples: int, max_len: int = 10, x_depth: int = 6, seed: int = 0) -> CheckReport:
    report = CheckReport(True)
    for w, u in sample_admissible_pairs(pattern, samples, max_len, seed):
        r = verify_fractal(w, u, x_depth)
        report.checked += r.checked
        if not r.ok:
            return report.fail(**r.counterexample)
    return report


def relations_check(pattern: SignPattern, samples: int, seed: int = 0) -> CheckReport:
    report = CheckReport(True)
    for name, r in sorted(verify_relations(pattern, 8, samples, seed).items()):
        report.checked += r.checked
        if not r.ok:
            return report.fail(family=name, **r.counterexample)
    return report


# ---- Calkin-Wilf and parameter checks ----

def cw_chain_check() -> CheckReport:
    report = CheckReport(True, len(CW_CHAIN) - 1)
    for (a, b), nxt in zip(CW_CHAIN, CW_CHAIN[1:]):
        if nxt not in (coeff_step((a, b), "S"), coeff_step((a, b), "T")):
            return report.fail(pair=[a, b], next=list(nxt))
    return report


def cw_coverage_check(limit: int = 30) -> CheckReport:
    """Pairs reached from (1, 1) are exactly the coprime pairs with a + b <= limit."""
    got = set(enumerate_coprime(limit))
    want = {(a, s - a) for s in range(2, limit + 1) for a in range(1, s) if gcd(a, s - a) == 1}
    report = CheckReport(True, len(want))
    if got != want:
        report.fail(missing=sorted(want - got)[:5], extra=sorted(got - want)[:5])
    return report


def worked_g_formula_check(pattern: SignPattern, n_max: int = 3) -> CheckReport:
    """g_K at [i]S^nTS^2T^2S is (-15n+3, 15n+12, -14) in role order (k0, s0, t0)."""
    report = CheckReport(True)
    for i in (1, 2, 3):
        k, s, t = initial_kst(pattern, i)
        for n in range(n_max + 1):
            report.checked += 1
            g = eval_walk(Walk.from_word(pattern, i, "S" * n + "TSSTTS")).gK
            if (g[k - 1], g[s - 1], g[t - 1]) != (-15 * n + 3, 15 * n + 12, -14):
                return report.fail(subtree=i, n=n, got=list(g))
    return report


def g_param_check(pattern: SignPattern, depth: int) -> CheckReport:
    """Enumerated g_K set equals the coprime-pair set, per subtree.

    Two exact comparisons: against pairs whose Calkin-Wilf walk has length
    <= depth, and against all pairs with a + b <= depth + 1 (every such walk
    is short enough).  Pairs are searched up to the largest a + b seen.
    """
    report = CheckReport(True)
    for i in (1, 2, 3):
        got = {st.gK for st in iter_states(pattern, depth, i)}
        if not got:
            continue
        top = max(sum(g_params(pattern, i, v) or (0, 0)) for v in got)
        pairs = {(a, s - a) for s in range(2, top + 1) for a in range(1, s) if gcd(a, s - a) == 1}
        by_walk = {g_from_coprime(pattern, i, a, b) for a, b in pairs if len(walk_for_g_params(pattern, i, a, b)) <= depth}
        small = {g_from_coprime(pattern, i, a, b) for a, b in pairs if a + b <= depth + 1}
        report.checked += len(got)
        for v in got:
            ab = g_params(pattern, i, v)
            if ab is None or not valid_g_params(*ab) or ab[0] < 1 or ab[1] < 1:
                return report.fail(subtree=i, vector=list(v), reason="not a coprime g-parameter")
        if got != by_walk:
            return report.fail(subtree=i, reason="walk-length set differs")
        truncated = {v for v in got if sum(g_params(pattern, i, v)) <= depth + 1}
        if truncated != small:
            return report.fail(subtree=i, reason="a+b truncation differs")
    return report


def c_param_check(pattern: SignPattern, depth: int) -> CheckReport:
    """Every c-vector below [i] has valid parameters; the set agrees for |a|+|b| <= depth-2."""
    report = CheckReport(True)
    cap = depth - 2
    want = {
        (e, a, b)
        for e in (1, -1)
        for a in range(-cap, cap + 1)
        for b in range(-cap, cap + 1)
        if abs(a) + abs(b) <= cap and valid_c_params(e, a, b)
    }
    for i in (1, 2, 3):
        got = set()
        for st in iter_states(pattern, depth, i):
            for v in st.c_roles:
                p = c_params(pattern, i, v)
                report.checked += 1
                if p is None or not valid_c_params(*p):
                    return report.fail(subtree=i, walk=str(st.walk), vector=list(v))
                got.add(p)
        if {p for p in got if abs(p[1]) + abs(p[2]) <= cap} != want:
            return report.fail(subtree=i, reason="truncated c-parameter set differs")
    return report


# ---- complements ----

def f1_check(pattern: SignPattern) -> CheckReport:
    """F_1 = C°(e~3, e~1 - e~2) for the sign +1 pattern."""
    report = CheckReport(True, 1)
    ray = f_ray(pattern, 1)
    if pattern is SignPattern.CYCLIC_A and ray.key != (ModVec(0, 0, 1), ModVec(1, -1, 0)):
        report.fail(got=[list(ray.base), list(ray.dir)])
    return report


# ---- suites ----

def _merge(*reports: CheckReport) -> CheckReport:
    out = CheckReport(True)
    for r in reports:
        out = out.merge(r)
    return out


def _suite_oracle(cfg: RunConfig) -> CheckReport:
    return oracle_equivalence(cfg.matrix, cfg.depth)


def _suite_signs(cfg: RunConfig) -> CheckReport:
    return tropical_sign_check(cfg.matrix, cfg.depth)


def _suite_invariants(cfg: RunConfig) -> CheckReport:
    return _merge(invariant_check(cfg.pattern, cfg.depth, cfg.backend), closed_form_check(cfg.pattern, 20))


def _suite_fractal(cfg: RunConfig) -> CheckReport:
    checks = [
        fractal_check(cfg.pattern, cfg.samples, 10, min(6, cfg.depth), cfg.seed),
        relations_check(cfg.pattern, max(1, cfg.samples // 2), cfg.seed),
        representation_check(cfg.pattern),
    ]
    if cfg.matrix.params == (2, 2, 2, 2, 2, 2) and cfg.matrix.sign == 1:
        checks.append(example_matrices_check(cfg.matrix))
    return _merge(*checks)


def _suite_cw(cfg: RunConfig) -> CheckReport:
    return _merge(cw_chain_check(), cw_coverage_check(30), worked_g_formula_check(cfg.pattern))


def _suite_params(cfg: RunConfig) -> CheckReport:
    return _merge(g_param_check(cfg.pattern, cfg.depth), c_param_check(cfg.pattern, cfg.depth))


def _suite_fan(cfg: RunConfig) -> CheckReport:
    walks = ["[1]T", "[2]ST", "[3]TS", "[1]SSTT"]
    ubs = [upper_bound_check(Walk.parse(cfg.pattern, w), min(cfg.depth, 6), seed=cfg.seed) for w in walks]
    return _merge(
        fan_property_check(cfg.depth, cfg.pattern, cfg.backend),
        g_uniqueness_check(cfg.pattern, cfg.depth, cfg.backend),
        region_d_check(cfg.pattern, cfg.depth, cfg.backend),
        *ubs,
    )


def _suite_complements(cfg: RunConfig) -> CheckReport:
    return _merge(
        *(complements_agree(cfg.pattern, i, cfg.depth, cfg.bound) for i in (1, 2, 3)),
        disjointness_check(cfg.depth, cfg.bound, cfg.pattern, cfg.backend),
        f1_check(cfg.pattern),
    )


SUITE_FUNCS: dict[str, Callable[[RunConfig], CheckReport]] = {
    "cw": _suite_cw,
    "complements": _suite_complements,
    "fan": _suite_fan,
    "fractal": _suite_fractal,
    "invariants": _suite_invariants,
    "oracle": _suite_oracle,
    "params": _suite_params,
    "signs": _suite_signs,
}


def _run_one(name: str, cfg: RunConfig) -> CheckReport:
    try:
        return SUITE_FUNCS[name](cfg)
    except Exception as exc:  # a crashing suite is a failing suite
        return CheckReport(False, 0, {"error": f"{type(exc).__name__}: {exc}"})


def run_suites(cfg: RunConfig) -> dict:
    """Run the configured suites; the report is sorted by suite name."""
    names = sorted(set(cfg.suites))
    workers = min(thread_count(), len(names)) or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = dict(zip(names, pool.map(lambda n: _run_one(n, cfg), names)))
    return {
        "matrix": cfg.matrix.to_json(),
        "depth": cfg.depth,
        "bound": cfg.bound,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "ok": all(r.ok for r in results.values()),
        "suites": {name: results[name].to_json() for name in names},
    }
