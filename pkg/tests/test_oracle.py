"""Specialization oracle: series coefficients and exact evaluation."""

import random
from fractions import Fraction

import pytest

from schurq.gamma import GammaPoly, gen, macdonald_sum
from schurq.oracle import (
    SpecializationContext,
    evaluate,
    identity_holds_in_gamma,
    random_context,
    series_coefficients,
)
from schurq.qcore import schur_q


def test_series_one_variable():
    ctx = SpecializationContext([1], truncation=2)
    assert series_coefficients(ctx) == (1, 2, 2)
    ctx = SpecializationContext([1], truncation=5)
    # (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
    assert series_coefficients(ctx) == (1, 2, 2, 2, 2, 2)


def test_series_two_variables():
    ctx = SpecializationContext([1, 1], truncation=1)
    assert series_coefficients(ctx)[1] == 4


def test_series_leading_coefficient_is_one():
    rng = random.Random(1)
    for _ in range(10):
        ctx = random_context(rng, rng.randint(1, 5), rng.randint(0, 6))
        assert ctx.coefficients[0] == 1


def test_context_validation():
    with pytest.raises(ValueError):
        SpecializationContext([], truncation=3)
    with pytest.raises(ValueError):
        SpecializationContext([1], truncation=-1)


def test_evaluate_examples():
    rng = random.Random(2)
    for _ in range(10):
        ctx = random_context(rng, 3, 4)
        assert evaluate(ctx, GammaPoly.one()) == 1
        assert evaluate(ctx, gen(1) ** 2 - 2 * gen(2)) == 0
    ctx = SpecializationContext([1], truncation=3)
    assert evaluate(ctx, gen(3)) == 2


def test_evaluate_truncation_error():
    ctx = SpecializationContext([1], truncation=2)
    with pytest.raises(ValueError):
        evaluate(ctx, gen(5))


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(3)
    for _ in range(15):
        a = gen(rng.randint(1, 4)) * rng.randint(-3, 3) + gen(rng.randint(1, 4))
        b = gen(rng.randint(1, 4)) - Fraction(rng.randint(1, 5), 2)
        ctx = random_context(rng, 4, 8)
        assert evaluate(ctx, a * b) == evaluate(ctx, a) * evaluate(ctx, b)
        assert evaluate(ctx, a + b) == evaluate(ctx, a) + evaluate(ctx, b)


def test_macdonald_relations_hold_identically():
    rng = random.Random(4)
    for n in range(1, 13):
        rel = macdonald_sum(n)
        for _ in range(3):
            ctx = random_context(rng, n, n)
            assert evaluate(ctx, rel) == 0, n
    ctx = random_context(rng, 2, 2)
    assert evaluate(ctx, macdonald_sum(0)) == 1


def test_identity_holds_in_gamma():
    rng = random.Random(5)
    assert identity_holds_in_gamma(gen(1) ** 2, 2 * gen(2), trials=4, max_degree=2, rng=rng)
    assert not identity_holds_in_gamma(gen(1), gen(2), trials=4, max_degree=2, rng=rng)
    assert identity_holds_in_gamma(
        schur_q((1, 1)), GammaPoly.zero(), trials=4, max_degree=2, rng=rng
    )
    with pytest.raises(ValueError):
        identity_holds_in_gamma(gen(1), gen(1), trials=0, max_degree=1)
