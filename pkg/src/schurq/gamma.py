"""Exact sparse polynomial ring on the generators q1, q2, q3, ...

A polynomial is a dictionary mapping monomials to rational coefficients
(Fraction).  A monomial is a sorted tuple of (generator index, exponent)
pairs with all exponents >= 1; the empty tuple is the monomial 1.  The
zero polynomial has no terms.  All arithmetic is exact.

Every value of the ambient theory lives here: the free ring carries the
raw Pfaffian identities, and `gamma_normal_form` applies the quotient by
the relations

    sum_{r+s=n, r,s>=0} (-1)^r q_r q_s  =  0     (n >= 1),

which for even n = 2m solve to q_{2m} = -(1/2) sum_{r=1}^{2m-1} (-1)^r
q_r q_{2m-r}.  The normal form rewrites every even-index generator away,
leaving the unique representative in the odd generators q1, q3, q5, ...
with rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

# Monomial: sorted tuple of (generator index, exponent), exponents >= 1.
Mono = tuple[tuple[int, int], ...]

Rat = Fraction

_ZERO_FRAC = Fraction(0)


def _mono_mul(a: Mono, b: Mono) -> Mono:
    """Merge two sorted exponent tuples."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ga, ea = a[i]
        gb, eb = b[j]
        if ga == gb:
            out.append((ga, ea + eb))
            i += 1
            j += 1
        elif ga < gb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_degree(m: Mono) -> int:
    """Weighted degree: generator q_n counts n."""
    return sum(g * e for g, e in m)


def _mono_sort_key(m: Mono):
    # Graded order: higher degree first, then lexicographically larger
    # exponent vector (e1, e2, ...) first.  Deterministic printing only.
    if not m:
        return (0, ())
    top = m[-1][0]
    vec = [0] * top
    for g, e in m:
        vec[g - 1] = -e
    return (-_mono_degree(m), tuple(vec))


def _mono_text(m: Mono) -> str:
    return "*".join(
        f"q{g}^{e}" if e > 1 else f"q{g}" for g, e in reversed(m)
    )


class GammaPoly:
    """Immutable sparse polynomial in the generators q1, q2, ...

    Do not mutate the term mapping; every operation returns a fresh value.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Mono, Rat] | None = None):
        data: dict[Mono, Rat] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    data[m] = c
        self._terms = data

    # -- construction -------------------------------------------------

    @staticmethod
    def zero() -> "GammaPoly":
        return _ZERO

    @staticmethod
    def one() -> "GammaPoly":
        return _ONE

    @staticmethod
    def constant(c: int | Rat) -> "GammaPoly":
        c = Fraction(c)
        if not c:
            return _ZERO
        p = GammaPoly.__new__(GammaPoly)
        p._terms = {(): c}
        return p

    @staticmethod
    def _raw(terms: dict[Mono, Rat]) -> "GammaPoly":
        # Internal: terms must already be normalized (no zero coefficients).
        p = GammaPoly.__new__(GammaPoly)
        p._terms = terms
        return p

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> Mapping[Mono, Rat]:
        """Read-only view of the term map."""
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest weighted monomial degree; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(_mono_degree(m) for m in self._terms)

    def max_generator(self) -> int:
        """Largest generator index appearing; 0 if none."""
        top = 0
        for m in self._terms:
            if m and m[-1][0] > top:
                top = m[-1][0]
        return top

    def constant_term(self) -> Rat:
        return self._terms.get((), _ZERO_FRAC)

    def sorted_terms(self) -> list[tuple[Mono, Rat]]:
        """Terms in the canonical printing order."""
        return sorted(self._terms.items(), key=lambda t: _mono_sort_key(t[0]))

    # -- arithmetic ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GammaPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == GammaPoly.constant(other)._terms
        return NotImplemented

    __hash__ = None  # mutable-dict backed; identity tests use ==

    def __add__(self, other: "GammaPoly | int | Rat") -> "GammaPoly":
        other = _coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc = acc + c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
        return GammaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "GammaPoly":
        return GammaPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "GammaPoly | int | Rat") -> "GammaPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "GammaPoly | int | Rat") -> "GammaPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "GammaPoly | int | Rat") -> "GammaPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return _ZERO
            return GammaPoly._raw({m: cc * c for m, cc in self._terms.items()})
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[Mono, Rat] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                acc = out.get(m)
                if acc is None:
                    out[m] = ca * cb
                else:
                    acc = acc + ca * cb
                    if acc:
                        out[m] = acc
                    else:
                        del out[m]
        return GammaPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GammaPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- rendering -----------------------------------------------------

    def text(self) -> str:
        """Canonical text form, e.g. ``q2*q1 - 2*q3`` or ``1/2*q1^2``."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if not m:
                body = str(mag)
            elif mag == 1:
                body = _mono_text(m)
            else:
                body = f"{mag}*{_mono_text(m)}"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"GammaPoly({self.text()})"

    def to_json_dict(self) -> dict:
        """JSON form: ``{"terms": [{"coeff": "-2", "mono": {"3": 1}}, ...]}``."""
        return {
            "terms": [
                {"coeff": str(c), "mono": {str(g): e for g, e in m}}
                for m, c in self.sorted_terms()
            ]
        }

    @staticmethod
    def from_json_dict(data: Mapping) -> "GammaPoly":
        terms: dict[Mono, Rat] = {}
        for entry in data["terms"]:
            mono = tuple(sorted((int(g), int(e)) for g, e in entry["mono"].items()))
            for g, e in mono:
                if g < 1 or e < 1:
                    raise ValueError(f"invalid monomial entry q{g}^{e}")
            coeff = Fraction(entry["coeff"])
            if coeff:
                terms[mono] = terms.get(mono, _ZERO_FRAC) + coeff
        return GammaPoly({m: c for m, c in terms.items() if c})


_ZERO = GammaPoly._raw({})
_ONE = GammaPoly._raw({(): Fraction(1)})


def _coerce(value: GammaPoly | int | Rat) -> GammaPoly:
    if isinstance(value, GammaPoly):
        return value
    return GammaPoly.constant(value)


def gen(n: int) -> GammaPoly:
    """The generator q_n: q_0 = 1 and q_n = 0 for n < 0."""
    if n < 0:
        return _ZERO
    if n == 0:
        return _ONE
    return GammaPoly._raw({((n, 1),): Fraction(1)})


def add(a: GammaPoly, b: GammaPoly) -> GammaPoly:
    return a + b


def mul(a: GammaPoly, b: GammaPoly) -> GammaPoly:
    return a * b


def scale(a: GammaPoly, c: int | Rat) -> GammaPoly:
    return a * c


def neg(a: GammaPoly) -> GammaPoly:
    return -a


def macdonald_sum(n: int) -> GammaPoly:
    """sum_{r+s=n, r,s>=0} (-1)^r q_r q_s; zero in the quotient for n >= 1."""
    acc = _ZERO
    for r in range(0, n + 1):
        term = gen(r) * gen(n - r)
        acc = acc + (term if r % 2 == 0 else -term)
    return acc


@lru_cache(maxsize=None)
def _generator_nf(n: int) -> GammaPoly:
    # Normal form of the single generator q_n, n >= 1.
    if n % 2 == 1:
        return gen(n)
    acc = _ZERO
    for r in range(1, n):
        term = _generator_nf(r) * _generator_nf(n - r)
        acc = acc + (term if r % 2 == 0 else -term)
    return acc * Fraction(-1, 2)


@lru_cache(maxsize=None)
def _generator_nf_pow(n: int, e: int) -> GammaPoly:
    return _generator_nf(n) ** e


def gamma_normal_form(a: GammaPoly) -> GammaPoly:
    """Rewrite into the odd generators only (the quotient's normal form).

    Even-index generators are eliminated from the smallest index upward via
    q_{2m} = -(1/2) sum_{r=1}^{2m-1} (-1)^r q_r q_{2m-r}; the result is the
    unique representative of a's class written in q1, q3, q5, ...
    """
    out: dict[Mono, Rat] = {}
    for m, c in a._terms.items():
        evens = [(g, e) for g, e in m if g % 2 == 0]
        if not evens:
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc = acc + c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
            continue
        odd_part: Mono = tuple((g, e) for g, e in m if g % 2 == 1)
        rewritten = _ONE
        for g, e in evens:
            rewritten = rewritten * _generator_nf_pow(g, e)
        for mm, cc in rewritten._terms.items():
            key = _mono_mul(odd_part, mm)
            val = cc * c
            acc = out.get(key)
            if acc is None:
                out[key] = val
            else:
                acc = acc + val
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    return GammaPoly._raw(out)


def is_gamma_zero(a: GammaPoly) -> bool:
    """True iff a lies in the ideal generated by the defining relations."""
    if not a._terms:
        return True
    return gamma_normal_form(a).is_zero()


def gamma_equal(a: GammaPoly, b: GammaPoly) -> bool:
    """Equality in the quotient ring."""
    return is_gamma_zero(a - b)
