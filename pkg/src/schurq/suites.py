"""The executable identity catalog.

Each suite sweeps one identity over a parameter grid and yields one
IdentityReport per comparison.  A suite declares the strongest ring in
which its identity actually holds:

  * "free-ring" suites are exact equalities of raw polynomials (the
    identity is pure Pfaffian algebra);
  * "gamma" suites hold only in the quotient by the defining relations,
    so the two sides are compared in normal form.

Under mode "all" (the default) every check runs at its declared level
and is additionally confirmed by the specialization oracle, so a bug in
the normal-form rewriter cannot silently pass.  Forcing mode "free" on a
gamma-level suite honestly reports the free-ring mismatches.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from . import qcore
from .compositions import (
    append_zero,
    iter_partitions,
    iter_strict_partitions,
    length,
    prepend,
    remove_at,
    staircase,
    swap_adjacent,
)
from .decomp import (
    a_coeff,
    a_coeff_skew_sum,
    alternating_skew_sum,
    alternating_two_part_closed,
    alternating_two_part_sum,
    enumerate_decompositions,
    expand_p_head,
    expand_p_head_skew,
    r_coeff,
    r_coeff_closed,
    remove_part_via_skew,
    skew_by_row,
    vertex_rhs,
)
from .gamma import GammaPoly, gamma_normal_form, gen, macdonald_sum
from .oracle import identity_holds_in_gamma
from .pfaffian import SkewMatrix, determinant, pfaffian
from .report import FREE_RING, GAMMA, ORACLE, IdentityReport

MODES = ("free", "gamma", "oracle", "all")


@dataclass
class SuiteParams:
    """Grid bounds and verification mode for one suite run."""

    mode: str = "all"
    max_len: int = 4
    max_part: int = 6
    min_part: int = -3
    p_lo: int = -4
    p_hi: int = 5
    n_lo: int = -3
    n_hi: int = 6
    trials: int = 5
    seed: int = 0
    size: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.max_len < 0 or self.max_part < 0:
            raise ValueError("grid bounds must be nonnegative")
        if self.p_lo > self.p_hi or self.n_lo > self.n_hi:
            raise ValueError("empty parameter range")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.size is not None and (self.size < 0 or self.size % 2):
            raise ValueError("size must be a nonnegative even integer")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _verdicts(
    identity: str,
    params: dict,
    lhs: GammaPoly,
    rhs: GammaPoly,
    level: str,
    sp: SuiteParams,
    rng: random.Random,
) -> Iterator[IdentityReport]:
    """Reports for one comparison, honoring the requested mode."""
    if sp.mode == "all":
        chosen = (level, ORACLE)
    elif sp.mode == "free":
        chosen = (FREE_RING,)
    elif sp.mode == "gamma":
        chosen = (GAMMA,)
    else:
        chosen = (ORACLE,)
    for mode in chosen:
        if mode == FREE_RING:
            yield IdentityReport(identity, params, FREE_RING, lhs.text(), rhs.text(), lhs == rhs)
        elif mode == GAMMA:
            nl, nr = gamma_normal_form(lhs), gamma_normal_form(rhs)
            yield IdentityReport(identity, params, GAMMA, nl.text(), nr.text(), nl == nr)
        else:
            degree = max(lhs.degree(), rhs.degree(), 1)
            ok = identity_holds_in_gamma(lhs, rhs, trials=sp.trials, max_degree=degree, rng=rng)
            yield IdentityReport(identity, params, ORACLE, lhs.text(), rhs.text(), ok)


def _random_compositions(
    rng: random.Random, count: int, max_len: int, lo: int, hi: int
) -> list[tuple[int, ...]]:
    out = []
    for _ in range(count):
        n = rng.randint(0, max_len)
        out.append(tuple(rng.randint(lo, hi) for _ in range(n)))
    return out


def _composition_family(sp: SuiteParams, rng: random.Random, count: int = 60):
    """Exhaustive short compositions plus a seeded random sample."""
    family: list[tuple[int, ...]] = [()]
    small_lo, small_hi = max(sp.min_part, -2), min(sp.max_part, 3)
    for n in (1, 2):
        family.extend(product(range(small_lo, small_hi + 1), repeat=n))
    family.extend(_random_compositions(rng, count, sp.max_len, sp.min_part, sp.max_part))
    return family


def suite_pad_zero(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in _composition_family(sp, rng):
        yield from _verdicts(
            "pad-zero",
            {"lambda": list(lam)},
            qcore.schur_q(append_zero(lam)),
            qcore.schur_q(lam),
            FREE_RING,
            sp,
            rng,
        )


def suite_skew_zero(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in _composition_family(sp, rng):
        yield from _verdicts(
            "skew-zero",
            {"lambda": list(lam)},
            qcore.skew_schur_q(lam, (0,)),
            qcore.schur_q(lam),
            FREE_RING,
            sp,
            rng,
        )


def suite_alt_sum(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in _composition_family(sp, rng):
        expect = qcore.schur_q(lam) if len(lam) % 2 == 1 else GammaPoly.zero()
        yield from _verdicts(
            "alt-sum",
            {"lambda": list(lam)},
            qcore.alternating_removed_sum(lam),
            expect,
            FREE_RING,
            sp,
            rng,
        )


def _swap_in_domain(lam: tuple[int, ...], i: int) -> bool:
    # The cancellation cases need the cancelled value absent from the
    # later parts, else the closed form breaks (e.g. (3,1,-1,1) at i=2).
    a, b = lam[i - 1], lam[i]
    if a + b != 0 or a == b:
        return True
    return abs(a) not in {abs(part) for part in lam[i + 1 :]}


def suite_swap(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    family: list[tuple[tuple[int, ...], int]] = []
    for lam in iter_strict_partitions(min(sp.max_len, 4), min(sp.max_part, 6)):
        for i in range(1, len(lam)):
            family.append((lam, i))
    for a in range(1, 4):
        family.append(((a, -a), 1))
        family.append(((-a, a), 1))
        family.append(((a, -a, a + 1), 1))
        family.append(((5, a, -a, a + 1), 2))
        family.append(((0, 0), 1))
    for lam in _random_compositions(rng, 40, max(sp.max_len, 2), sp.min_part, sp.max_part):
        if len(lam) >= 2:
            family.append((lam, rng.randint(1, len(lam) - 1)))
    for lam, i in family:
        if not _swap_in_domain(lam, i):
            continue
        yield from _verdicts(
            "swap",
            {"lambda": list(lam), "i": i},
            qcore.swap_adjacent_value(lam, i),
            qcore.schur_q(swap_adjacent(lam, i)),
            GAMMA,
            sp,
            rng,
        )


def suite_neg_head(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_strict_partitions(sp.max_len, sp.max_part):
        for p in range(1, sp.max_part + 1):
            yield from _verdicts(
                "neg-head",
                {"p": p, "lambda": list(lam)},
                qcore.neg_head_value(p, lam),
                qcore.schur_q(prepend(-p, lam)),
                GAMMA,
                sp,
                rng,
            )


def suite_p_head(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_partitions(sp.max_len, sp.max_part):
        for p in range(sp.p_lo, sp.p_hi + 1):
            direct = qcore.schur_q(prepend(p, lam))
            yield from _verdicts(
                "p-head",
                {"p": p, "lambda": list(lam), "form": "removed-part"},
                expand_p_head(p, lam),
                direct,
                FREE_RING,
                sp,
                rng,
            )
            yield from _verdicts(
                "p-head",
                {"p": p, "lambda": list(lam), "form": "skew"},
                expand_p_head_skew(p, lam),
                direct,
                FREE_RING,
                sp,
                rng,
            )
        for r in range(1, (lam[0] if lam else 0) + 3):
            yield from _verdicts(
                "p-head",
                {"lambda": list(lam), "r": r, "form": "row"},
                skew_by_row(lam, r),
                qcore.skew_schur_q(lam, (r,)),
                FREE_RING,
                sp,
                rng,
            )


def suite_jp_skew(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    mus = [mu for mu in iter_strict_partitions(2, 3) if mu]
    lams = _composition_family(sp, rng, count=25)
    for lam in lams:
        for mu in mus:
            if (len(lam) + len(mu)) % 2 == 0:
                continue
            yield from _verdicts(
                "jp-skew",
                {"lambda": list(lam), "mu": list(mu)},
                qcore.skew_schur_q(lam, mu),
                qcore.skew_schur_q_mu_padded(lam, mu),
                FREE_RING,
                sp,
                rng,
            )


def suite_vertex(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_partitions(sp.max_len, sp.max_part):
        for p in range(sp.p_lo, sp.p_hi + 1):
            yield from _verdicts(
                "vertex",
                {"p": p, "lambda": list(lam)},
                vertex_rhs(p, lam),
                qcore.schur_q(prepend(p, lam)),
                FREE_RING,
                sp,
                rng,
            )


def suite_alt_skew_sum(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_partitions(sp.max_len, sp.max_part):
        ell = length(lam)
        for include_zero in (False, True):
            odd_gives_q = not include_zero
            expect = (
                qcore.schur_q(lam)
                if (ell % 2 == 1) == odd_gives_q
                else GammaPoly.zero()
            )
            yield from _verdicts(
                "alt-skew-sum",
                {"lambda": list(lam), "from_row": 0 if include_zero else 1},
                alternating_skew_sum(lam, include_row_zero=include_zero),
                expect,
                GAMMA,
                sp,
                rng,
            )


def suite_remove_via_skew(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_strict_partitions(sp.max_len, sp.max_part):
        for k in range(1, length(lam) + 1):
            yield from _verdicts(
                "remove-via-skew",
                {"lambda": list(lam), "k": k},
                remove_part_via_skew(lam, k),
                qcore.schur_q(remove_at(lam, k)),
                FREE_RING,
                sp,
                rng,
            )


def suite_r_closed(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_partitions(sp.max_len, sp.max_part):
        ell = length(lam)
        for i in range(1, ell + 1):
            for k in range(i, ell + 1):
                yield from _verdicts(
                    "r-closed",
                    {"lambda": list(lam), "i": i, "k": k},
                    r_coeff(lam, i, k),
                    r_coeff_closed(lam, i, k),
                    FREE_RING,
                    sp,
                    rng,
                )
                expected = 1 if i == k else 2 ** (k - i - 1)
                count = len(enumerate_decompositions(i, k))
                yield IdentityReport(
                    "r-closed",
                    {"lambda": list(lam), "i": i, "k": k, "form": "count"},
                    FREE_RING,
                    str(count),
                    str(expected),
                    count == expected,
                )


def suite_staircase_r(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for n in range(1, 9):
        delta = staircase(n)
        for i in range(1, n):
            for k in range(i, n):
                yield from _verdicts(
                    "staircase-r",
                    {"n": n, "i": i, "k": k},
                    r_coeff(delta, i, k),
                    gen(k - i),
                    GAMMA,
                    sp,
                    rng,
                )


def suite_staircase_a(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for n in range(2, 9):
        delta = staircase(n)
        sign = 1 if n % 2 == 0 else -1
        for k in range(0, n):
            expect = GammaPoly.one() if k == 0 else gen(n - k) * sign
            yield from _verdicts(
                "staircase-a",
                {"n": n, "k": k},
                a_coeff(delta, k),
                expect,
                GAMMA,
                sp,
                rng,
            )


def suite_a_sum(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_partitions(sp.max_len, sp.max_part):
        ell = length(lam)
        for include_zero in (False, True):
            odd_gives_q = not include_zero
            expect = (
                qcore.schur_q(lam)
                if (ell % 2 == 1) == odd_gives_q
                else GammaPoly.zero()
            )
            yield from _verdicts(
                "a-sum",
                {"lambda": list(lam), "from_k": 0 if include_zero else 1},
                a_coeff_skew_sum(lam, include_k_zero=include_zero),
                expect,
                FREE_RING,
                sp,
                rng,
            )


def suite_skew_stability(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for lam in iter_partitions(min(sp.max_len, 3), min(sp.max_part, 5)):
        top = lam[0] if lam else 0
        for k in range(0, 5):
            for p in range(top + k + 1, top + k + 4):
                yield from _verdicts(
                    "skew-stability",
                    {"p": p, "k": k, "lambda": list(lam)},
                    qcore.skew_schur_q(prepend(p, lam), (p - k,)),
                    gen(k) * qcore.schur_q(lam),
                    FREE_RING,
                    sp,
                    rng,
                )


def suite_alt_two_part(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for p in range(sp.p_lo, sp.p_hi + 1):
        for n in range(sp.n_lo, sp.n_hi + 1):
            for side in ("left", "right"):
                yield from _verdicts(
                    "alt-two-part",
                    {"p": p, "n": n, "side": side},
                    alternating_two_part_sum(p, n, side),
                    alternating_two_part_closed(p, n, side),
                    GAMMA,
                    sp,
                    rng,
                )


def suite_macdonald(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    for n in range(0, 13):
        expect = GammaPoly.one() if n == 0 else GammaPoly.zero()
        yield from _verdicts(
            "macdonald-relation",
            {"n": n},
            macdonald_sum(n),
            expect,
            GAMMA,
            sp,
            rng,
        )


_ENTRY_MONOS: tuple[GammaPoly, ...] = (
    GammaPoly.one(),
    gen(1),
    gen(2),
    gen(1) * gen(1),
)


def random_skew_matrix(rng: random.Random, size: int) -> SkewMatrix:
    """Seeded random skew matrix with entries of weighted degree <= 2.

    Larger sizes draw sparser, single-term entries to keep the exact
    determinant cross-check fast.
    """

    def entry(i: int, j: int) -> GammaPoly:
        if size >= 6 and rng.random() < 0.25:
            return GammaPoly.zero()
        terms = 1 if size >= 8 else rng.randint(1, 2)
        acc = GammaPoly.zero()
        for _ in range(terms):
            coeff = rng.choice((-3, -2, -1, 1, 2, 3))
            acc = acc + rng.choice(_ENTRY_MONOS) * coeff
        return acc

    return SkewMatrix.from_entry_fn(size, entry)


def suite_pf_det(sp: SuiteParams) -> Iterator[IdentityReport]:
    rng = sp.rng()
    sizes = (sp.size,) if sp.size is not None else (2, 4, 6, 8)
    for size in sizes:
        for trial in range(sp.trials):
            matrix = random_skew_matrix(rng, size)
            pf = pfaffian(matrix)
            yield from _verdicts(
                "pf-det",
                {"size": size, "trial": trial},
                pf * pf,
                determinant(matrix),
                FREE_RING,
                sp,
                rng,
            )


@dataclass(frozen=True)
class SuiteDef:
    name: str
    runner: Callable[[SuiteParams], Iterator[IdentityReport]]
    level: str
    description: str


CATALOG: dict[str, SuiteDef] = {
    s.name: s
    for s in (
        SuiteDef("pad-zero", suite_pad_zero, FREE_RING,
                 "appending a zero part leaves Q unchanged"),
        SuiteDef("skew-zero", suite_skew_zero, FREE_RING,
                 "skewing by the zero one-part composition leaves Q unchanged"),
        SuiteDef("alt-sum", suite_alt_sum, FREE_RING,
                 "alternating removed-part sum gives Q (odd length) or 0 (even)"),
        SuiteDef("swap", suite_swap, GAMMA,
                 "closed form for exchanging two adjacent parts"),
        SuiteDef("neg-head", suite_neg_head, GAMMA,
                 "closed form for a prepended negative part on a strict partition"),
        SuiteDef("p-head", suite_p_head, FREE_RING,
                 "prepended-part and one-row-skew expansions over removed-part sums"),
        SuiteDef("jp-skew", suite_jp_skew, FREE_RING,
                 "padding the inner instead of the outer composition (positive inner parts)"),
        SuiteDef("vertex", suite_vertex, FREE_RING,
                 "coefficientwise vertex-operator expansion of Q with a prepended part"),
        SuiteDef("alt-skew-sum", suite_alt_skew_sum, GAMMA,
                 "alternating one-row-skew sums give Q or 0 by length parity"),
        SuiteDef("remove-via-skew", suite_remove_via_skew, FREE_RING,
                 "removed-part Q as an r-weighted sum of one-row skews (strict partitions)"),
        SuiteDef("r-closed", suite_r_closed, FREE_RING,
                 "recursive r-coefficients equal the root-decomposition closed form"),
        SuiteDef("staircase-r", suite_staircase_r, GAMMA,
                 "staircase r-coefficients collapse to single generators"),
        SuiteDef("staircase-a", suite_staircase_a, GAMMA,
                 "staircase a-coefficients collapse to signed single generators"),
        SuiteDef("a-sum", suite_a_sum, FREE_RING,
                 "a-weighted skew sums give Q or 0 by length parity"),
        SuiteDef("skew-stability", suite_skew_stability, FREE_RING,
                 "skewing a large prepended part by its excess is multiplication by q_k"),
        SuiteDef("alt-two-part", suite_alt_two_part, GAMMA,
                 "alternating q-weighted sums of two-part Q against both slots"),
        SuiteDef("macdonald-relation", suite_macdonald, GAMMA,
                 "the defining alternating relation among the generators"),
        SuiteDef("pf-det", suite_pf_det, FREE_RING,
                 "Pfaffian squared equals the determinant on random skew matrices"),
    )
}


def run_suite(name: str, params: SuiteParams) -> list[IdentityReport]:
    """Run one catalog suite to completion, in deterministic order."""
    if name not in CATALOG:
        raise KeyError(f"unknown identity {name!r}; catalog: {sorted(CATALOG)}")
    return list(CATALOG[name].runner(params))
