"""Decompositions of Q-functions through removed-part sums.

Everything here re-expresses Q_{p lambda}, Q_{lambda/(r)} and
Q_{lambda minus a part} as explicit polynomial combinations of smaller
Q-functions, so each formula can be pitted against the direct Pfaffian:

  * expand_p_head:  Q_{p lambda} as a sum of Q_(p, lambda_i) times
    removed-part functions (with the q_p Q_lambda term present exactly
    when the part count is even);
  * skew_by_row:    Q_{lambda/(r)} as an alternating q-weighted sum of
    removed-part functions;
  * vertex_rhs:     the coefficientwise vertex-operator expansion
    q_p Q_lambda + 2 sum_{r>=1} (-1)^r q_{p+r} Q_{lambda/(r)};
  * r_coeff / r_coeff_closed:  the connection coefficients between
    removed-part functions and one-row skews, recursively and as a signed
    sum over chain decompositions of a positive root;
  * a_coeff, remove_part_via_skew, expand_p_head_skew:  the resulting
    expansions over skew functions Q_{lambda/(lambda_k)}.

Part positions (i, k) are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .compositions import (
    Composition,
    is_partition,
    length,
    prepend,
    remove_at,
    strip_trailing_zeros,
)
from .gamma import GammaPoly, gamma_equal, gen
from .qcore import q2, schur_q, skew_schur_q
from .report import FREE_RING, GAMMA, IdentityReport

_ZERO = GammaPoly.zero()
_ONE = GammaPoly.one()


def _require_partition(lam: Sequence[int]) -> Composition:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


def expand_p_head(p: int, lam: Sequence[int]) -> GammaPoly:
    """Q_{p lambda} expanded along the prepended part:

        -sum_i (-1)^i Q_(p, lambda_i) Q_{lambda minus part i},

    plus q_p Q_lambda when the sequence length is even.
    """
    lam = _require_partition(lam)
    n = len(lam)
    acc = _ZERO
    for i in range(1, n + 1):
        term = q2(p, lam[i - 1]) * schur_q(remove_at(lam, i))
        acc = acc + (term if i % 2 == 1 else -term)
    if n % 2 == 0:
        acc = acc + gen(p) * schur_q(lam)
    return acc


def skew_by_row(lam: Sequence[int], r: int) -> GammaPoly:
    """Q_{lambda/(r)} = -sum_i (-1)^i q_{lambda_i - r} Q_{lambda minus part i}
    for r >= 1."""
    lam = _require_partition(lam)
    if r < 1:
        raise ValueError("row length r must be >= 1")
    acc = _ZERO
    for i in range(1, len(lam) + 1):
        coeff = gen(lam[i - 1] - r)
        if not coeff:
            continue
        term = coeff * schur_q(remove_at(lam, i))
        acc = acc + (term if i % 2 == 1 else -term)
    return acc


def vertex_rhs(p: int, lam: Sequence[int]) -> GammaPoly:
    """q_p Q_lambda + 2 sum_{r>=1} (-1)^r q_{p+r} Q_{lambda/(r)}.

    The sum stops at r = lambda_1: beyond it every one-row skew vanishes
    identically, and the r = lambda_1 + 1 term is recomputed as a guard.
    """
    lam = _require_partition(lam)
    top = lam[0] if lam else 0
    acc = gen(p) * schur_q(lam)
    for r in range(1, top + 1):
        coeff = gen(p + r)
        if not coeff:
            continue
        term = coeff * skew_schur_q(lam, (r,)) * 2
        acc = acc + (term if r % 2 == 0 else -term)
    if not skew_schur_q(lam, (top + 1,)).is_zero():
        raise AssertionError(f"one-row skew of {lam} by {top + 1} did not vanish")
    return acc


def r_coeff(lam: Sequence[int], i: int, k: int) -> GammaPoly:
    """The recursive connection coefficient: r_{i,i} = 1 and

        r_{i,k} = -sum_{j=i}^{k-1} (-1)^{j-k} q_{lambda_j - lambda_k} r_{i,j}.
    """
    lam = _require_partition(lam)
    if not 1 <= i <= k <= length(lam):
        raise IndexError(f"need 1 <= i <= k <= {length(lam)}, got ({i}, {k})")
    table: dict[int, GammaPoly] = {i: _ONE}
    for j in range(i + 1, k + 1):
        acc = _ZERO
        for t in range(i, j):
            term = gen(lam[t - 1] - lam[j - 1]) * table[t]
            # -(-1)^{t-j} factor
            acc = acc + (term if (t - j) % 2 == 1 else -term)
        table[j] = acc
    return table[k]


@dataclass(frozen=True)
class RootDecomposition:
    """A set of positive roots e_r - e_s (stored as pairs r < s) summing to
    some e_i - e_k; the pairs always form a chain i = c_0 < c_1 < ... < c_l = k."""

    roots: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.roots)

    def chain(self) -> list[tuple[int, int]]:
        return sorted(self.roots)


def enumerate_decompositions(i: int, k: int) -> list[RootDecomposition]:
    """All decompositions of e_i - e_k: chains through subsets of the
    intermediate indices.  There are 2^(k-i-1) of them for i < k, and only
    the empty one for i = k."""
    if i > k:
        raise IndexError(f"need i <= k, got ({i}, {k})")
    if i == k:
        return [RootDecomposition(frozenset())]
    middle = range(i + 1, k)
    out = []
    for size in range(0, k - i):
        for chosen in combinations(middle, size):
            nodes = (i,) + chosen + (k,)
            roots = frozenset(
                (nodes[t], nodes[t + 1]) for t in range(len(nodes) - 1)
            )
            out.append(RootDecomposition(roots))
    return out


def r_coeff_closed(lam: Sequence[int], i: int, k: int) -> GammaPoly:
    """Closed form of r_{i,k}: (-1)^(i-k) sum over decompositions D of
    e_i - e_k of (-1)^|D| prod_{(r,s) in D} q_{lambda_r - lambda_s}."""
    lam = _require_partition(lam)
    if not 1 <= i <= k <= length(lam):
        raise IndexError(f"need 1 <= i <= k <= {length(lam)}, got ({i}, {k})")
    acc = _ZERO
    for decomposition in enumerate_decompositions(i, k):
        term = _ONE
        for r, s in decomposition.chain():
            term = term * gen(lam[r - 1] - lam[s - 1])
        acc = acc + (term if len(decomposition) % 2 == 0 else -term)
    return acc if (i - k) % 2 == 0 else -acc


def remove_part_via_skew(lam: Sequence[int], k: int) -> GammaPoly:
    """Q_{lambda minus part k} = -sum_{i=1}^k (-1)^i r_{i,k} Q_{lambda/(lambda_i)}.

    Exact in the free ring when lambda_1 > ... > lambda_k > lambda_{k+1}
    (in particular for every k when lambda is strict).  With the removed
    part repeated the sum no longer telescopes, e.g. lambda = (4, 4), k = 1
    yields 0 against Q_(4) = q4.
    """
    lam = _require_partition(lam)
    if not 1 <= k <= length(lam):
        raise IndexError(f"part position {k} out of range")
    acc = _ZERO
    for i in range(1, k + 1):
        term = r_coeff(lam, i, k) * skew_schur_q(lam, (lam[i - 1],))
        acc = acc + (term if i % 2 == 1 else -term)
    return acc


def a_coeff(lam: Sequence[int], k: int) -> GammaPoly:
    """a_0 = 1 and a_k = -sum_{i=k}^{l} (-1)^i q_{lambda_i} r_{k,i} for
    1 <= k <= l = number of nonzero parts."""
    lam = _require_partition(lam)
    ell = length(lam)
    if not 0 <= k <= ell:
        raise IndexError(f"need 0 <= k <= {ell}, got {k}")
    if k == 0:
        return _ONE
    acc = _ZERO
    for i in range(k, ell + 1):
        term = gen(lam[i - 1]) * r_coeff(lam, k, i)
        acc = acc + (term if i % 2 == 1 else -term)
    return acc


def expand_p_head_skew(p: int, lam: Sequence[int]) -> GammaPoly:
    """Q_{p lambda} as a sum over one-row skews by the parts themselves:

        sum_{k=1}^{l} ( sum_{i=k}^{l} (-1)^{i+k} Q_(p, lambda_i) r_{k,i} )
            Q_{lambda/(lambda_k)},

    plus q_p Q_lambda when l (the number of nonzero parts) is even."""
    lam = strip_trailing_zeros(_require_partition(lam))
    ell = len(lam)
    acc = _ZERO
    for k in range(1, ell + 1):
        inner = _ZERO
        for i in range(k, ell + 1):
            term = q2(p, lam[i - 1]) * r_coeff(lam, k, i)
            inner = inner + (term if (i + k) % 2 == 0 else -term)
        if inner:
            acc = acc + inner * skew_schur_q(lam, (lam[k - 1],))
    if ell % 2 == 0:
        acc = acc + gen(p) * schur_q(lam)
    return acc


def alternating_skew_sum(lam: Sequence[int], include_row_zero: bool) -> GammaPoly:
    """sum over one-row skews: -sum_{r>=1} (-1)^r q_r Q_{lambda/(r)}, or the
    same sum started at r = 0 (which flips the parity dichotomy)."""
    lam = strip_trailing_zeros(_require_partition(lam))
    top = lam[0] if lam else 0
    acc = _ZERO
    for r in range(1, top + 1):
        term = gen(r) * skew_schur_q(lam, (r,))
        acc = acc + (term if r % 2 == 1 else -term)
    if include_row_zero:
        # the r = 0 term is q_0 Q_{lambda/(0)} = Q_lambda, entering with -(+1)
        return -acc + skew_schur_q(lam, (0,))
    return acc


def a_coeff_skew_sum(lam: Sequence[int], include_k_zero: bool) -> GammaPoly:
    """sum_{k}(-1)^k a_k Q_{lambda/(lambda_k)} with lambda_0 = 0, either over
    k = 0..l or negated over k = 1..l."""
    lam = strip_trailing_zeros(_require_partition(lam))
    ell = len(lam)
    acc = _ZERO
    for k in range(1, ell + 1):
        term = a_coeff(lam, k) * skew_schur_q(lam, (lam[k - 1],))
        acc = acc + (term if k % 2 == 0 else -term)
    if include_k_zero:
        return acc + skew_schur_q(lam, (0,))
    return -acc


def check_skew_stability(p: int, k: int, lam: Sequence[int]) -> IdentityReport:
    """Q_{p lambda / (p - k)} = q_k Q_lambda whenever k >= 0 and
    p > lambda_1 + k; exact in the free ring."""
    lam = _require_partition(lam)
    top = lam[0] if lam else 0
    if k < 0:
        raise ValueError("k must be >= 0")
    if p <= top + k:
        raise ValueError(f"need p > lambda_1 + k = {top + k}, got p = {p}")
    lhs = skew_schur_q(prepend(p, lam), (p - k,))
    rhs = gen(k) * schur_q(lam)
    return IdentityReport(
        identity="skew-stability",
        params={"p": p, "k": k, "lambda": list(lam)},
        mode=FREE_RING,
        lhs=lhs.text(),
        rhs=rhs.text(),
        equal=lhs == rhs,
    )


def alternating_two_part_sum(p: int, n: int, side: str) -> GammaPoly:
    """sum_{r+s=n} (-1)^r q_r Q_(p,s) (side="left") or with Q_(s,p)
    (side="right"); r runs over the nonnegative integers and s = n - r may
    be negative, only finitely many terms being nonzero."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    acc = _ZERO
    for r in range(0, max(n, n + p, 0) + 1):
        s = n - r
        value = q2(p, s) if side == "left" else q2(s, p)
        if not value:
            continue
        term = gen(r) * value
        acc = acc + (term if r % 2 == 0 else -term)
    return acc


def alternating_two_part_closed(p: int, n: int, side: str) -> GammaPoly:
    """The matching closed forms: (-1)^n 2 q_{p+n} on the positive-n side,
    q_p at n = 0, zero elsewhere."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if n == 0:
        return gen(p)
    doubled = (n > 0) if side == "left" else (n < 0)
    if not doubled:
        return _ZERO
    sign = 1 if n % 2 == 0 else -1
    return gen(p + n) * (2 * sign)


def check_alternating_two_part(p: int, n: int, side: str) -> IdentityReport:
    """Compare the alternating two-part sum with its closed form in the
    quotient (the proof runs through the defining relations)."""
    lhs = alternating_two_part_sum(p, n, side)
    rhs = alternating_two_part_closed(p, n, side)
    return IdentityReport(
        identity="alt-two-part",
        params={"p": p, "n": n, "side": side},
        mode=GAMMA,
        lhs=lhs.text(),
        rhs=rhs.text(),
        equal=gamma_equal(lhs, rhs),
    )
