"""Pfaffian construction of the Q-functions for arbitrary compositions.

The two-part function is, for any integers r and s,

    Q_(r,s) = q_r q_s + 2 sum_{i=1..s} (-1)^i q_{r+i} q_{s-i},

the sum being empty for s < 1.  Q_lambda is the Pfaffian of the matrix
with upper-triangle entries Q_(lambda_i, lambda_j); odd-length index
sequences are padded with one trailing zero.  The skew function pairs
that matrix with the one-row blocks q_{lambda_i - mu_j}.

The upper-triangle orientation (entry (i, j) = Q_(lambda_i, lambda_j)
for i < j) is the one consistent with the special values
Q_(-r,r) = (-1)^r 2 and Q_(r,-r) = 0.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .compositions import (
    ind,
    is_strict_partition,
    remove_at,
    remove_at2,
    swap_adjacent,
)
from .gamma import GammaPoly, gen
from .pfaffian import SkewMatrix, pfaffian

_ZERO = GammaPoly.zero()


@lru_cache(maxsize=None)
def q2(r: int, s: int) -> GammaPoly:
    """The two-part function Q_(r,s); defined for all integer r, s."""
    acc = gen(r) * gen(s)
    for i in range(1, s + 1):
        term = gen(r + i) * gen(s - i) * 2
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


def matrix_M(nu: Sequence[int]) -> SkewMatrix:
    """Skew matrix with upper entries Q_(nu_i, nu_j).

    The length of nu must be even; callers pad odd compositions with a
    trailing zero first.
    """
    nu = tuple(nu)
    if len(nu) % 2 != 0:
        raise ValueError("matrix_M needs an even number of parts; append a zero first")
    n = len(nu)
    return SkewMatrix(
        n, {(i, j): q2(nu[i], nu[j]) for i in range(n) for j in range(i + 1, n)}
    )


def matrix_N(lam: Sequence[int], mu: Sequence[int]) -> list[list[GammaPoly]]:
    """n x m block with entry (i, c) = q_{lambda_i - mu_{m+1-c}} (1-based c);
    the columns run through mu in reverse."""
    lam, mu = tuple(lam), tuple(mu)
    m = len(mu)
    return [[gen(part - mu[m - 1 - c]) for c in range(m)] for part in lam]


def skew_matrix(lam: Sequence[int], mu: Sequence[int], pad: str = "lambda") -> SkewMatrix:
    """Block matrix [[M(lam), N(lam, mu)], [-N^t, 0]], padded to even size.

    When the total size is odd the extra zero part is appended to lam
    (pad="lambda", the definition) or to mu (pad="mu", the classical
    variant, equivalent when every part of mu is positive).
    """
    lam, mu = tuple(lam), tuple(mu)
    if (len(lam) + len(mu)) % 2 != 0:
        if pad == "lambda":
            lam = lam + (0,)
        elif pad == "mu":
            mu = mu + (0,)
        else:
            raise ValueError(f"unknown padding side {pad!r}")
    n, m = len(lam), len(mu)
    block = matrix_N(lam, mu)
    upper: dict[tuple[int, int], GammaPoly] = {}
    for i in range(n):
        for j in range(i + 1, n):
            upper[(i, j)] = q2(lam[i], lam[j])
        for c in range(m):
            upper[(i, n + c)] = block[i][c]
    return SkewMatrix(n + m, upper)


def schur_q(lam: Sequence[int]) -> GammaPoly:
    """Q_lambda for any composition; the empty composition gives 1."""
    lam = tuple(lam)
    if len(lam) % 2 != 0:
        lam = lam + (0,)
    return pfaffian(matrix_M(lam))


def skew_schur_q(lam: Sequence[int], mu: Sequence[int]) -> GammaPoly:
    """Q_{lambda/mu} for any compositions."""
    return pfaffian(skew_matrix(lam, mu))


def skew_schur_q_mu_padded(lam: Sequence[int], mu: Sequence[int]) -> GammaPoly:
    """The classical variant that pads mu instead of lam when the size is
    odd.  Agrees with skew_schur_q whenever mu has all-positive parts."""
    return pfaffian(skew_matrix(lam, mu, pad="mu"))


def alternating_removed_sum(lam: Sequence[int]) -> GammaPoly:
    """-sum_i (-1)^i q_{lambda_i} Q_{lambda minus part i}; equals Q_lambda
    when the sequence length is odd and 0 when it is even, for any
    composition."""
    lam = tuple(lam)
    acc = _ZERO
    for i in range(1, len(lam) + 1):
        coeff = gen(lam[i - 1])
        if not coeff:
            continue
        term = coeff * schur_q(remove_at(lam, i))
        acc = acc + (term if i % 2 == 1 else -term)
    return acc


def swap_adjacent_value(lam: Sequence[int], i: int) -> GammaPoly:
    """Q of the composition with parts i, i+1 exchanged (1-based), from the
    closed-form case split rather than a fresh Pfaffian:

        Q_lambda                      if lambda_i = lambda_{i+1},
        -Q_lambda                     if lambda_i + lambda_{i+1} != 0,
        (-1)^{lambda_i} 2 Q_{lambda with both parts dropped}
                                      if the parts cancel and lambda_i > 0,
        0                             if the parts cancel and lambda_i < 0.

    The cancellation cases assume |lambda_i| does not recur among the
    parts after position i+1; with a recurrence the closed form and the
    Pfaffian genuinely differ (Q_(3,-1,1,1) = 0, not -2 Q_(3,1)).
    """
    lam = tuple(lam)
    if not 1 <= i < len(lam):
        raise IndexError(f"swap position {i} out of range")
    a, b = lam[i - 1], lam[i]
    if a == b:
        return schur_q(lam)
    if a + b != 0:
        return -schur_q(lam)
    if a > 0:
        sign = 1 if a % 2 == 0 else -1
        return schur_q(remove_at2(lam, i, i + 1)) * (2 * sign)
    return _ZERO


def neg_head_value(p: int, lam: Sequence[int]) -> GammaPoly:
    """Q_{(-p) lambda} for p > 0 and a strict partition lambda, via
    (-1)^(p + ind(lambda, p) + 1) 2 Q_{lambda minus the part p};
    zero when p is not a part."""
    lam = tuple(lam)
    if p <= 0:
        raise ValueError("p must be positive")
    if not is_strict_partition(lam):
        raise ValueError(f"{lam} is not a strict partition")
    position = ind(lam, p)
    if position == 0:
        return _ZERO
    sign = 1 if (p + position + 1) % 2 == 0 else -1
    return schur_q(remove_at(lam, position)) * (2 * sign)
