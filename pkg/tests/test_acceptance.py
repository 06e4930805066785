"""Acceptance gate: every criterion exact, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  All comparisons are exact (rational arithmetic); the only
tolerances are the two stated wall-clock budgets.
"""

import random
import time

from schurq.compositions import (
    append_zero,
    iter_partitions,
    iter_strict_partitions,
    length,
    prepend,
    remove_at,
    staircase,
    swap_adjacent,
)
from schurq.decomp import (
    a_coeff,
    alternating_skew_sum,
    alternating_two_part_closed,
    alternating_two_part_sum,
    enumerate_decompositions,
    expand_p_head,
    r_coeff,
    r_coeff_closed,
    remove_part_via_skew,
    skew_by_row,
    vertex_rhs,
)
from schurq.gamma import (
    GammaPoly,
    gamma_equal,
    gamma_normal_form,
    gen,
    macdonald_sum,
)
from schurq.oracle import evaluate, identity_holds_in_gamma, random_context
from schurq.pfaffian import determinant, pfaffian
from schurq.qcore import (
    neg_head_value,
    schur_q,
    skew_schur_q,
    swap_adjacent_value,
)
from schurq.suites import random_skew_matrix


def _report(number: int, label: str, checks: int, failures: int, seconds: float):
    status = "PASS" if failures == 0 else "FAIL"
    print(
        f"criterion {number:2d} {status}: {label} "
        f"({checks} checks, {failures} failures, {seconds:.1f}s)"
    )
    assert failures == 0, f"criterion {number}: {failures} of {checks} checks failed"


def test_criterion_1_pfaffian_kernel():
    start = time.time()
    rng = random.Random(20240)
    checks = failures = 0
    for size in (2, 4, 6, 8):
        for _ in range(50):
            matrix = random_skew_matrix(rng, size)
            pf = pfaffian(matrix)
            checks += 1
            if pf * pf != determinant(matrix):
                failures += 1
    elapsed = time.time() - start
    _report(1, "Pf(M)^2 = det(M) on 200 random skew matrices", checks, failures, elapsed)
    assert elapsed < 60.0, f"runtime budget exceeded: {elapsed:.1f}s"


def test_criterion_2_zero_padding():
    start = time.time()
    rng = random.Random(20241)
    checks = failures = 0
    for _ in range(2000):
        n = rng.randint(0, 5)
        lam = tuple(rng.randint(-3, 5) for _ in range(n))
        base = schur_q(lam)
        checks += 2
        if schur_q(append_zero(lam)) != base:
            failures += 1
        if skew_schur_q(lam, (0,)) != base:
            failures += 1
    _report(2, "zero padding and zero skew leave Q unchanged (free ring)",
            checks, failures, time.time() - start)


def test_criterion_3_swap_and_negative_head():
    start = time.time()
    checks = failures = 0
    for lam in iter_strict_partitions(4, 6):
        for i in range(1, len(lam)):
            checks += 1
            if not gamma_equal(swap_adjacent_value(lam, i), schur_q(swap_adjacent(lam, i))):
                failures += 1
        for p in range(1, 7):
            checks += 1
            if not gamma_equal(neg_head_value(p, lam), schur_q(prepend(-p, lam))):
                failures += 1
    _report(3, "swap and negative-head closed forms match the Pfaffian (quotient)",
            checks, failures, time.time() - start)


def test_criterion_4_vertex_expansion():
    start = time.time()
    checks = failures = 0
    for lam in iter_partitions(3, 6):
        for p in range(-6, 7):
            checks += 1
            if vertex_rhs(p, lam) != schur_q(prepend(p, lam)):
                failures += 1
    elapsed = time.time() - start
    _report(4, "vertex-operator expansion exact in the free ring", checks, failures, elapsed)
    assert elapsed < 300.0, f"runtime budget exceeded: {elapsed:.1f}s"


def test_criterion_5_removed_part_lemmas_and_skew_sum():
    start = time.time()
    checks = failures = 0
    for lam in iter_partitions(3, 6):
        for p in range(-6, 7):
            checks += 1
            if expand_p_head(p, lam) != schur_q(prepend(p, lam)):
                failures += 1
        for r in range(1, (lam[0] if lam else 0) + 3):
            checks += 1
            if skew_by_row(lam, r) != skew_schur_q(lam, (r,)):
                failures += 1
        # parity dichotomy of the skew alternating sum; quotient-level only,
        # the free-ring version fails already for lambda = (2)
        ell = length(lam)
        expect_no_zero = schur_q(lam) if ell % 2 == 1 else GammaPoly.zero()
        expect_zero = schur_q(lam) if ell % 2 == 0 else GammaPoly.zero()
        checks += 2
        if not gamma_equal(alternating_skew_sum(lam, False), expect_no_zero):
            failures += 1
        if not gamma_equal(alternating_skew_sum(lam, True), expect_zero):
            failures += 1
    _report(5, "removed-part lemmas exact; skew alternating sum dichotomy (quotient)",
            checks, failures, time.time() - start)


def test_criterion_6_connection_coefficients():
    start = time.time()
    checks = failures = 0
    for lam in iter_partitions(6, 8):
        ell = length(lam)
        for i in range(1, ell + 1):
            for k in range(i, ell + 1):
                checks += 2
                if r_coeff(lam, i, k) != r_coeff_closed(lam, i, k):
                    failures += 1
                expected = 1 if i == k else 2 ** (k - i - 1)
                if len(enumerate_decompositions(i, k)) != expected:
                    failures += 1
    for lam in iter_strict_partitions(5, 8):
        for k in range(1, length(lam) + 1):
            checks += 1
            if remove_part_via_skew(lam, k) != schur_q(remove_at(lam, k)):
                failures += 1
    _report(6, "recursive = closed-form r-coefficients; removals via skews exact",
            checks, failures, time.time() - start)


def test_criterion_7_staircase_specializations():
    start = time.time()
    rng = random.Random(20247)
    checks = failures = 0
    for n in range(1, 9):
        delta = staircase(n)
        sign = 1 if n % 2 == 0 else -1
        for i in range(1, n):
            for k in range(i, n):
                checks += 2
                if gamma_normal_form(r_coeff(delta, i, k)) != gamma_normal_form(gen(k - i)):
                    failures += 1
                if not identity_holds_in_gamma(
                    r_coeff(delta, i, k), gen(k - i), trials=5,
                    max_degree=max(k - i, 1), rng=rng,
                ):
                    failures += 1
        for k in range(1, n):
            target = sign * gen(n - k)
            checks += 2
            if gamma_normal_form(a_coeff(delta, k)) != gamma_normal_form(target):
                failures += 1
            if not identity_holds_in_gamma(
                a_coeff(delta, k), target, trials=5, max_degree=max(n - k, 1), rng=rng
            ):
                failures += 1
    _report(7, "staircase r- and a-coefficients collapse to single generators",
            checks, failures, time.time() - start)


def test_criterion_8_skew_stability():
    start = time.time()
    checks = failures = 0
    for lam in iter_partitions(3, 5):
        top = lam[0] if lam else 0
        for k in range(0, 5):
            for p in range(top + k + 1, top + k + 4):
                checks += 1
                lhs = skew_schur_q(prepend(p, lam), (p - k,))
                if lhs != gen(k) * schur_q(lam):
                    failures += 1
    _report(8, "skewing a dominant head by its excess is multiplication by q_k",
            checks, failures, time.time() - start)


def test_criterion_9_alternating_two_part():
    start = time.time()
    rng = random.Random(20249)
    checks = failures = 0
    for p in range(-4, 7):
        for n in range(-4, 9):
            for side in ("left", "right"):
                lhs = alternating_two_part_sum(p, n, side)
                rhs = alternating_two_part_closed(p, n, side)
                checks += 2
                if gamma_normal_form(lhs) != gamma_normal_form(rhs):
                    failures += 1
                degree = max(lhs.degree(), rhs.degree(), 1)
                if not identity_holds_in_gamma(lhs, rhs, trials=3, max_degree=degree, rng=rng):
                    failures += 1
    _report(9, "two-sided alternating two-part sums match their closed forms",
            checks, failures, time.time() - start)


def test_criterion_10_macdonald_relation():
    start = time.time()
    rng = random.Random(202410)
    checks = failures = 0
    for n in range(0, 13):
        relation = macdonald_sum(n)
        expected = GammaPoly.one() if n == 0 else GammaPoly.zero()
        checks += 2
        if gamma_normal_form(relation) != expected:
            failures += 1
        if not identity_holds_in_gamma(
            relation, expected, trials=10, max_degree=max(n, 1), rng=rng
        ):
            failures += 1
    _report(10, "defining alternating relation normalizes to 0 (or 1 at degree 0)",
            checks, failures, time.time() - start)


def _random_weighted_poly(rng, max_weight=10, max_terms=6):
    from fractions import Fraction

    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = []
        budget = rng.randint(1, max_weight)
        while budget > 0:
            g = rng.randint(1, budget)
            mono.append(g)
            budget -= g
            if rng.random() < 0.4:
                break
        counted = {}
        for g in mono:
            counted[g] = counted.get(g, 0) + 1
        key = tuple(sorted(counted.items()))
        terms[key] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return GammaPoly(terms)


def test_criterion_11_oracle_cross_validation():
    start = time.time()
    rng = random.Random(202411)
    checks = failures = 0
    for _ in range(100):
        poly = _random_weighted_poly(rng)
        normal = gamma_normal_form(poly)
        top = max(poly.max_generator(), normal.max_generator(), 1)
        for _ in range(3):
            ctx = random_context(rng, num_values=max(poly.degree(), 1), truncation=top)
            checks += 1
            if evaluate(ctx, poly) != evaluate(ctx, normal):
                failures += 1
    _report(11, "oracle evaluation invariant under normal-form rewriting",
            checks, failures, time.time() - start)
