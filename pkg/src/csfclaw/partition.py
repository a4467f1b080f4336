"""Integer partitions as weakly decreasing tuples.

A partition is stored as a plain ``tuple`` of positive ints in weakly
decreasing order; :func:`make_partition` canonicalises arbitrary input.
Every listing produced here is in descending lexicographic order.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from typing import Iterable

from .errors import DomainError

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted(parts, reverse=True))
    if parts and parts[-1] < 1:
        raise DomainError(f"partition parts must be positive: {parts}")
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


def is_partition(obj) -> bool:
    return (
        isinstance(obj, tuple)
        and all(isinstance(x, int) and x >= 1 for x in obj)
        and all(obj[i] >= obj[i + 1] for i in range(len(obj) - 1))
    )


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise DomainError(f"cannot partition a negative integer: {n}")
    return list(_partitions(n, n))


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map each part value to the number of times it occurs."""
    return dict(Counter(lam))


def _fits(residuals: tuple[int, ...], pieces: tuple[int, ...]) -> bool:
    # residuals: what each target part still needs; pieces: decreasing.
    return _fits_cached(tuple(sorted(residuals, reverse=True)), pieces)


@lru_cache(maxsize=1 << 16)
def _fits_cached(residuals: tuple[int, ...], pieces: tuple[int, ...]) -> bool:
    if not pieces:
        return all(r == 0 for r in residuals)
    piece, rest = pieces[0], pieces[1:]
    tried = set()
    for i, r in enumerate(residuals):
        if r < piece or r in tried:
            continue
        tried.add(r)
        nxt = residuals[:i] + (r - piece,) + residuals[i + 1:]
        if _fits(nxt, rest):
            return True
    return False


def is_coarsening(lam: Partition, mu: Partition) -> bool:
    """True iff the parts of ``lam`` arise by summing disjoint groups of parts of ``mu``."""
    if sum(lam) != sum(mu) or len(lam) > len(mu):
        return False
    return _fits(tuple(lam), tuple(sorted(mu, reverse=True)))


def coarsenings_of(mu: Partition) -> list[Partition]:
    """Every ``lam`` with ``is_coarsening(lam, mu)``, descending lexicographic."""
    return [lam for lam in enumerate_partitions(sum(mu)) if is_coarsening(lam, mu)]


def subset_sums(mu: Partition) -> frozenset[int]:
    """Sums of all non-empty sub-multisets of ``mu``."""
    sums = {0}
    for part in mu:
        sums |= {s + part for s in sums}
    sums.discard(0)
    return frozenset(sums)


def is_submultiset(small: Partition, big: Partition) -> bool:
    have = Counter(big)
    have.subtract(Counter(small))
    return all(v >= 0 for v in have.values())


# -- text forms --------------------------------------------------------------

def format_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def format_exponent(lam: Partition) -> str:
    """Compact form such as ``(1^2,2,3^2)``, ascending part values."""
    mult = multiplicities(lam)
    chunks = [str(i) if mult[i] == 1 else f"{i}^{mult[i]}" for i in sorted(mult)]
    return "(" + ",".join(chunks) + ")"


_CHUNK = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse either ``(3,3,1)`` or ``(1,3^2)``; the result is canonical."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise DomainError(f"partition must be parenthesised: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return ()
    parts: list[int] = []
    for chunk in body.split(","):
        m = _CHUNK.match(chunk)
        if not m:
            raise DomainError(f"bad partition chunk {chunk!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if value < 1:
            raise DomainError(f"partition parts must be positive: {text!r}")
        parts.extend([value] * count)
    return make_partition(parts)
