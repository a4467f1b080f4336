"""Sparse symmetric functions in the power-sum and elementary bases.

Coefficients are :class:`fractions.Fraction` throughout. The power-to-
elementary transition uses Newton's formula written directly in the
elementary basis::

    p_i = sum over mu |- i of (-1)^(i - l(mu)) * i * (l(mu)-1)! / prod_j m_j! * e_mu
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .errors import ContractError, DomainError
from .partition import (
    Partition,
    enumerate_partitions,
    format_partition,
    is_submultiset,
    make_partition,
    multiplicities,
    parse_partition,
)

POWER = "p"
ELEMENTARY = "e"
BASES = (POWER, ELEMENTARY)


class SymExpr:
    """Immutable linear combination of ``p_lam`` or ``e_lam`` of fixed degree."""

    __slots__ = ("basis", "degree", "_terms", "_hash")

    def __init__(self, basis: str, degree: int, terms: Mapping[Partition, object] = ()):
        if basis not in BASES:
            raise DomainError(f"unknown basis {basis!r}")
        clean: dict[Partition, Fraction] = {}
        for lam, c in dict(terms).items():
            lam = make_partition(lam)
            if sum(lam) != degree:
                raise DomainError(f"{format_partition(lam)} has weight {sum(lam)}, expected {degree}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
                if not clean[lam]:
                    del clean[lam]
        self.basis = basis
        self.degree = degree
        self._terms = clean
        self._hash = None

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int], coeff=1) -> "SymExpr":
        lam = make_partition(lam)
        return cls(basis, sum(lam), {lam: coeff})

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self):
        """(partition, coefficient) pairs, descending lexicographic."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        return (self.basis, self.degree, self._terms) == (other.basis, other.degree, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.basis, self.degree, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "SymExpr") -> "SymExpr":
        _same_space(self, other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymExpr(self.basis, self.degree, out)

    def __neg__(self) -> "SymExpr":
        return self.scale(-1)

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "SymExpr":
        c = Fraction(c)
        return SymExpr(self.basis, self.degree, {lam: v * c for lam, v in self._terms.items()})

    def __repr__(self) -> str:
        return f"SymExpr({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _same_space(a: SymExpr, b: SymExpr) -> None:
    if a.basis != b.basis:
        raise ContractError(f"basis mismatch: {a.basis} vs {b.basis}")
    if a.degree != b.degree:
        raise ContractError(f"degree mismatch: {a.degree} vs {b.degree}")


def multiply(a: SymExpr, b: SymExpr) -> SymExpr:
    """Product of two expressions in the same multiplicative basis."""
    if a.basis != b.basis:
        raise ContractError(f"cannot multiply {a.basis}-basis by {b.basis}-basis")
    out: dict[Partition, Fraction] = {}
    for la, ca in a._terms.items():
        for lb, cb in b._terms.items():
            lam = make_partition(la + lb)
            out[lam] = out.get(lam, 0) + ca * cb
    return SymExpr(a.basis, a.degree + b.degree, out)


def _newton_scalar(mu: Partition) -> Fraction:
    i, length = sum(mu), len(mu)
    denom = 1
    for m in multiplicities(mu).values():
        denom *= factorial(m)
    sign = -1 if (i - length) % 2 else 1
    return Fraction(sign * i * factorial(length - 1), denom)


@lru_cache(maxsize=None)
def _power_in_e_terms(i: int) -> tuple[tuple[Partition, Fraction], ...]:
    return tuple((mu, _newton_scalar(mu)) for mu in enumerate_partitions(i))


def power_in_e(i: int) -> SymExpr:
    """The single power sum ``p_i`` written in the elementary basis."""
    if not isinstance(i, int) or i < 1:
        raise DomainError(f"p_i needs i >= 1, got {i!r}")
    return SymExpr(ELEMENTARY, i, dict(_power_in_e_terms(i)))


@lru_cache(maxsize=4096)
def _power_partition_in_e(lam: Partition) -> SymExpr:
    if not lam:
        return SymExpr(ELEMENTARY, 0, {(): 1})
    head = power_in_e(lam[0])
    if len(lam) == 1:
        return head
    return multiply(_power_partition_in_e(lam[1:]), head)


def expand_to_e(x: SymExpr) -> SymExpr:
    """Rewrite a power-basis expression in the elementary basis."""
    if x.basis != POWER:
        raise ContractError(f"expand_to_e expects the power basis, got {x.basis!r}")
    acc: dict[Partition, Fraction] = {}
    for lam, c in x._terms.items():
        for mu, d in _power_partition_in_e(lam)._terms.items():
            acc[mu] = acc.get(mu, 0) + c * d
    return SymExpr(ELEMENTARY, x.degree, acc)


@lru_cache(maxsize=1 << 16)
def transition_coefficient(lam: Partition, mu: Partition) -> Fraction:
    """``[e_mu] p_lam`` without expanding the full product.

    Each factor ``p_{lam_i}`` only contributes ``e_nu`` with ``nu`` a
    sub-multiset of ``mu``, so partial products are truncated to those.
    """
    lam, mu = make_partition(lam), make_partition(mu)
    if sum(lam) != sum(mu):
        raise DomainError("transition coefficient needs equal weights")
    partial: dict[Partition, Fraction] = {(): Fraction(1)}
    for part in lam:
        nxt: dict[Partition, Fraction] = {}
        for nu, c in partial.items():
            for rho, d in _power_in_e_terms(part):
                merged = make_partition(nu + rho)
                if is_submultiset(merged, mu):
                    nxt[merged] = nxt.get(merged, 0) + c * d
        partial = nxt
    return partial.get(mu, Fraction(0))


def coefficient_of(x: SymExpr, lam: Iterable[int]) -> Fraction:
    lam = make_partition(lam)
    if sum(lam) != x.degree:
        raise DomainError(f"{format_partition(lam)} has weight {sum(lam)}, expression has degree {x.degree}")
    return x._terms.get(lam, Fraction(0))


def is_e_positive(x: SymExpr) -> tuple[bool, Partition | None]:
    """(True, None), or (False, first negative partition in descending lex order)."""
    if x.basis != ELEMENTARY:
        raise ContractError("e-positivity is decided on elementary-basis expressions")
    for lam, c in x.items():
        if c < 0:
            return False, lam
    return True, None


def specialize_power(x: SymExpr, m: int) -> Fraction:
    """Value of a power-basis expression at x_1 = ... = x_m = 1, other variables 0."""
    if x.basis != POWER:
        raise ContractError("specialization is defined here for the power basis")
    return sum((c * m ** len(lam) for lam, c in x._terms.items()), Fraction(0))


# -- text rendering ----------------------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(x: SymExpr) -> str:
    """Canonical text, e.g. ``2e_(2,2,2) - 6e_(3,3) + 102e_(6)``.

    Terms run in ascending lexicographic order of their partitions.
    """
    if not x._terms:
        return "0"
    out = []
    for k, (lam, c) in enumerate(sorted(x._terms.items())):
        mag = abs(c)
        body = ("" if mag == 1 else _fmt_coeff(mag)) + f"{x.basis}_{format_partition(lam)}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*([pe])_(\([^)]*\))")


def parse(text: str) -> SymExpr:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        raise DomainError("cannot infer basis and degree of the zero expression")
    pos, terms, basis, degree = 0, Counter(), None, None
    for m in _TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise DomainError(f"unparseable text near {text[pos:m.start()]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        lam = parse_partition(m.group(4))
        if basis is None:
            basis, degree = m.group(3), sum(lam)
        elif m.group(3) != basis:
            raise DomainError("mixed bases in one expression")
        terms[lam] += sign * coeff
    if basis is None or text[pos:].strip():
        raise DomainError(f"unparseable expression {text!r}")
    return SymExpr(basis, degree, terms)


def to_json(x: SymExpr) -> dict:
    return {
        "basis": x.basis,
        "degree": x.degree,
        "terms": [
            {"partition": list(lam), "num": c.numerator, "den": c.denominator}
            for lam, c in x.items()
        ],
    }


def from_json(obj: Mapping) -> SymExpr:
    terms = {tuple(t["partition"]): Fraction(t["num"], t["den"]) for t in obj["terms"]}
    return SymExpr(obj["basis"], obj["degree"], terms)
