"""Specialization oracle: evaluate generators as concrete symmetric polynomials.

Substituting q_n -> q_n(x_1, ..., x_m), the coefficient of z^n in
prod_i (1 + z x_i) / (1 - z x_i), gives a ring homomorphism from the
free ring to exact rationals under which every defining relation holds
identically.  Any identity of the quotient can therefore be confirmed
without trusting the normal-form rewriter, and with exact arithmetic a
single nonzero evaluation is a definitive counterexample.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .gamma import GammaPoly, Rat


class SpecializationContext:
    """m exact variable values plus a series truncation order.

    The coefficients of z^0 .. z^truncation of the generating product are
    computed once at construction.
    """

    __slots__ = ("values", "truncation", "coefficients")

    def __init__(self, values: Sequence[Rat | int], truncation: int):
        vals = tuple(Fraction(v) for v in values)
        if len(vals) < 1:
            raise ValueError("at least one variable value is required")
        if truncation < 0:
            raise ValueError("truncation order must be >= 0")
        self.values = vals
        self.truncation = truncation
        coeffs = [Fraction(0)] * (truncation + 1)
        coeffs[0] = Fraction(1)
        for x in vals:
            # multiply by (1 + x z), truncated
            for k in range(truncation, 0, -1):
                coeffs[k] = coeffs[k] + x * coeffs[k - 1]
            # divide by (1 - x z): b_k = a_k + x b_{k-1}
            for k in range(1, truncation + 1):
                coeffs[k] = coeffs[k] + x * coeffs[k - 1]
        self.coefficients = tuple(coeffs)


def series_coefficients(ctx: SpecializationContext) -> tuple[Rat, ...]:
    """Coefficients of z^0 .. z^truncation; position 0 is always 1."""
    return ctx.coefficients


def evaluate(ctx: SpecializationContext, a: GammaPoly) -> Rat:
    """Substitute each generator by its series coefficient, exactly."""
    top = a.max_generator()
    if top > ctx.truncation:
        raise ValueError(
            f"truncation {ctx.truncation} too small for generator q{top}"
        )
    total = Fraction(0)
    coeffs = ctx.coefficients
    for mono, c in a.terms.items():
        value = c
        for g, e in mono:
            value *= coeffs[g] ** e
        total += value
    return total


def random_context(
    rng: random.Random, num_values: int, truncation: int
) -> SpecializationContext:
    """Context with small random rationals (numerators, denominators in 1..20)."""
    values = [
        Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(num_values)
    ]
    return SpecializationContext(values, truncation)


def identity_holds_in_gamma(
    lhs: GammaPoly,
    rhs: GammaPoly,
    trials: int,
    max_degree: int,
    rng: random.Random | None = None,
) -> bool:
    """Evaluate lhs - rhs at random rational points in max_degree variables.

    Returns False on any nonzero value (a disproof); True if every trial
    vanishes.  A degree-d symmetric-function identity holds iff it holds
    in d variables, so max_degree should be at least the total degree of
    the difference for the trials to be meaningful.
    """
    if trials < 1:
        raise ValueError("at least one trial is required")
    diff = lhs - rhs
    if diff.is_zero():
        return True
    if rng is None:
        rng = random.Random(0)
    num_values = max(1, max_degree)
    truncation = diff.max_generator()
    for _ in range(trials):
        ctx = random_context(rng, num_values, truncation)
        if evaluate(ctx, diff) != 0:
            return False
    return True
