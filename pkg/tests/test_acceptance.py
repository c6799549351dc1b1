"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s`.  The heavy criteria (the
7-vertex oracle sweep and the exhaustive word enumeration) print their
measured wall time next to the stated budget.
"""

import itertools
import multiprocessing
import time
from fractions import Fraction
from random import Random

from graph_enum import all_classes_up_to, as_simplicial
from kn_oracle import KnOracle
from test_graphs import brute_force_has_p4

from raagdyn.actions import (
    build_separating_action,
    evaluate_word_at,
    materialize_plan,
    plan_apply_word,
    plan_separating_action,
)
from raagdyn.checks import check_commutator_support, check_phi_support
from raagdyn.cotree import NotCograph, classify, decompose, hierarchy_level
from raagdyn.graphs import (
    complete_graph,
    disjoint_union,
    edgeless_graph,
    find_full_p4,
    path_graph,
    single_vertex,
)
from raagdyn.lamplighter import certified_pair_disjointness, lamplighter_certificate
from raagdyn.plmaps import (
    PLMapCircle,
    PLMapInterval,
    commutator,
    compose,
    invert,
    power,
    rotation_number,
)
from raagdyn.randmaps import (
    random_bump,
    random_circle_map,
    random_pair,
    random_phi_triple,
    random_rotation_conjugate,
)
from raagdyn.words import AB, T, FreeProductWord

F = Fraction


def report(num: int, ok: bool, elapsed: float, budget: str, detail: str):
    status = "PASS" if ok else "FAIL"
    print(f"CRITERION {num}: {status} ({elapsed:.2f}s, budget {budget}) - {detail}")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_p4_verdict():
    t0 = time.monotonic()
    v = classify(path_graph("abcd")).verdict
    ok = (
        v.c1
        and not v.c1bv
        and not v.c_infinity
        and not v.c_omega
        and v.circle_class == "NoFaithfulC1bv"
    )
    elapsed = time.monotonic() - t0
    report(1, ok and elapsed < 1.0, elapsed, "<1s", "classify(P4) exact verdict")


def test_criterion_2_p3_plus_point():
    t0 = time.monotonic()
    g = disjoint_union(path_graph("xyz"), single_vertex("w"))
    v = classify(g).verdict
    ok = v.c1 and not v.c_infinity and not v.c1bv
    elapsed = time.monotonic() - t0
    report(2, ok and elapsed < 1.0, elapsed, "<1s", "classify(P3 + pt) exact verdict")


def test_criterion_3_complete_and_edgeless():
    t0 = time.monotonic()
    ok = True
    for n in range(1, 9):
        names = [str(i) for i in range(n)]
        for g in (complete_graph(names), edgeless_graph(names)):
            v = classify(g).verdict
            ok = ok and v.c_omega and v.circle_class == "UncountableProjective"
    elapsed = time.monotonic() - t0
    report(3, ok, elapsed, "exact", "complete/edgeless graphs to size 8 analytic")


def test_criterion_4_oracle_equivalence():
    t0 = time.monotonic()
    mismatches = 0
    checked = 0
    for n, edges in all_classes_up_to(7):
        g = as_simplicial(n, edges)
        res = decompose(g)
        level = None if isinstance(res, NotCograph) else hierarchy_level(res)
        oracle_level = KnOracle(g).min_level()
        has_p4_brute = brute_force_has_p4(g)
        ok_here = (
            level == oracle_level
            and isinstance(res, NotCograph) == has_p4_brute
            and (find_full_p4(g) is not None) == has_p4_brute
        )
        mismatches += 0 if ok_here else 1
        checked += 1
    elapsed = time.monotonic() - t0
    report(
        4,
        mismatches == 0 and checked == 1252 and elapsed < 300,
        elapsed,
        "<5min",
        f"{checked} isomorphism classes (through 7 vertices), {mismatches} mismatches",
    )


def test_criterion_5_rotation_remark():
    t0 = time.monotonic()
    a = PLMapCircle.rotation(F(1, 2))
    b = PLMapCircle.rotation(F(1, 4))
    c = PLMapCircle.from_points(
        [(0, 0), (F(1, 8), F(1, 4)), (F(1, 4), F(3, 8)), (F(1, 2), F(1, 2)),
         (F(5, 8), F(3, 4)), (F(3, 4), F(7, 8)), (1, 1)]
    )
    ok = commutator(a, b).is_identity() and commutator(a, c).is_identity()
    for m, want in ((b, F(1, 4)), (c, F(0)), (compose(b, c), F(1, 3))):
        res = rotation_number(m)
        ok = ok and res.is_exact() and res.value == want
    elapsed = time.monotonic() - t0
    report(5, ok and elapsed < 1.0, elapsed, "<1s",
           "a commutes with b, c; rot(b)=1/4, rot(c)=0, rot(bc)=1/3")


# --- criterion 6: exhaustive separating actions ---------------------------

_AB_OPTS = tuple((AB, m, n) for m in range(-2, 3) for n in range(-2, 3) if (m, n) != (0, 0))
_T_OPTS = tuple((T, r) for r in range(-2, 3) if r)
_C6_SAMPLE_STRIDE = 5000  # every k-th word re-checked through the full PL path


def _c6_patterns():
    for length in range(1, 7):
        for start in (AB, T):
            yield tuple(
                AB if (i % 2 == 0) == (start == AB) else T for i in range(length)
            )


def _c6_tasks():
    # split long patterns two syllables deep to balance worker load
    for pattern in _c6_patterns():
        depth = 2 if len(pattern) >= 5 else 1
        prefix_opts = [_AB_OPTS if k == AB else _T_OPTS for k in pattern[:depth]]
        for prefix in itertools.product(*prefix_opts):
            yield (pattern, prefix)


def _c6_exact_ab_check(plan) -> bool:
    asg = materialize_plan(plan)
    return (
        commutator(asg.a, asg.b).is_identity()
        and asg.a.support().intersection(asg.b.support()).is_empty()
    )


def _c6_full_path_check(word) -> bool:
    asg = build_separating_action(word)
    asg.validate()  # exact commutator and support disjointness
    return evaluate_word_at(asg, word, asg.basepoint) != asg.basepoint


_C6_AB_CACHE: dict = {}  # worker-global: persists across tasks in each process


def _c6_run_task(task):
    pattern, prefix = task
    opts = [_AB_OPTS if k == AB else _T_OPTS for k in pattern[len(prefix):]]
    ab_cache = _C6_AB_CACHE
    count = 0
    failures = []
    for tail in itertools.product(*opts):
        word = FreeProductWord(prefix + tail)
        plan = plan_separating_action(word)
        key = tuple(s for s in plan.standard.syllables if s[0] == AB)
        passed = ab_cache.get(key)
        if passed is None:
            passed = _c6_exact_ab_check(plan)
            ab_cache[key] = passed
        num, den = plan_apply_word(plan, word, plan.base_num, plan.base_den)
        moved = num * plan.base_den != plan.base_num * den
        if not (passed and moved):
            failures.append(word.syllables)
        if count % _C6_SAMPLE_STRIDE == 0 and not _c6_full_path_check(word):
            failures.append(("full-path", word.syllables))
        count += 1
    return count, failures


def test_criterion_6_separating_actions_exhaustive():
    t0 = time.monotonic()
    tasks = list(_c6_tasks())
    total = 0
    failures = []
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(2) as pool:
        for count, fails in pool.imap_unordered(_c6_run_task, tasks, chunksize=1):
            total += count
            failures.extend(fails)
    elapsed = time.monotonic() - t0
    ok = not failures and total == 2048860 and elapsed < 120
    report(
        6,
        ok,
        elapsed,
        "<2min",
        f"{total} reduced words (syllable length <= 6, exponents in [-2,2]), "
        f"{len(failures)} failures",
    )


def test_criterion_7_support_containment_property_suite():
    t0 = time.monotonic()
    rng = Random(20240)
    comm_failures = 0
    for i in range(1000):
        domain = "S1" if i % 4 == 3 else "I"
        f, g = random_pair(rng, domain)
        if not check_commutator_support(f, g):
            comm_failures += 1
    phi_failures = 0
    for i in range(1000):
        domain = "S1" if i % 4 == 3 else "I"
        b, c, d = random_phi_triple(rng, domain)
        if not check_phi_support(b, c, d):
            phi_failures += 1
    elapsed = time.monotonic() - t0
    ok = comm_failures == 0 and phi_failures == 0 and elapsed < 120
    report(
        7,
        ok,
        elapsed,
        "<2min",
        f"1000 commutator-support pairs and 1000 phi-support triples, "
        f"{comm_failures + phi_failures} violations",
    )


def _certified_pair(rng: Random):
    lo = F(rng.randint(2, 6), 32)
    hi = lo + F(rng.randint(1, 4), 32)
    g = random_bump(rng, lo, hi)
    v = hi + (1 - hi) * F(rng.randint(2, 7), 8)
    pts = [(F(0), F(0)), (lo, v)]
    if rng.random() < 0.5:
        m = (lo + 1) / 2
        w = (max(v, m) + 1) / 2
        if v < w < 1:
            pts.append((m, w))
    pts.append((F(1), F(1)))
    u = PLMapInterval.from_points(pts)
    return g, u


def test_criterion_8_lamplighter_soundness():
    t0 = time.monotonic()
    rng = Random(808)
    failures = 0
    for _ in range(50):
        g, u = _certified_pair(rng)
        cert = lamplighter_certificate(g, u, j_checked=1)
        if cert is None:
            failures += 1
            continue
        for j in range(1, 21):
            uj = power(u, j)
            conj = compose(compose(uj, g), invert(uj))
            if not commutator(g, conj).is_identity():
                failures += 1
            if not certified_pair_disjointness(cert, j):
                failures += 1
    elapsed = time.monotonic() - t0
    report(
        8,
        failures == 0,
        elapsed,
        "exact",
        f"50 certified pairs, relations and hull disjointness for j=1..20, "
        f"{failures} failures",
    )


def test_criterion_9_rotation_number_laws():
    t0 = time.monotonic()
    rng = Random(909)
    failures = 0
    maps_checked = 0
    while maps_checked < 200:
        if maps_checked % 5 == 4:
            f = random_circle_map(rng, grounded=True)
        else:
            f, _ = random_rotation_conjugate(rng, max_q=6)
        res = rotation_number(f, q_max=12)
        if not res.is_exact():
            continue  # only maps with detected rational rotation number count
        maps_checked += 1
        rot = res.value
        h = random_circle_map(rng, max_breaks=3, grounded=rng.random() < 0.5)
        conj = compose(compose(h, f), invert(h))
        res_conj = rotation_number(conj, q_max=12)
        if not (res_conj.is_exact() and res_conj.value == rot):
            failures += 1
        fn = f
        for n in range(2, 6):
            fn = compose(fn, f)
            res_n = rotation_number(fn, q_max=12)
            want = n * rot - int(n * rot)
            if not (res_n.is_exact() and res_n.value == want):
                failures += 1
    elapsed = time.monotonic() - t0
    report(
        9,
        failures == 0,
        elapsed,
        "exact",
        f"200 circle maps with rational rotation number, conjugation and "
        f"power laws, {failures} failures",
    )
