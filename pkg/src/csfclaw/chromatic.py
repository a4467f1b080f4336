"""Chromatic symmetric functions from the signed edge-subset expansion.

``X_G = sum over S subset of E of (-1)^|S| p_lambda(S)`` where ``lambda(S)``
lists the component orders of the spanning subgraph ``(V, S)``.

The subset walk visits edges in index order and keeps a union-find that
supports undo, so each leaf costs one pass over the roots. A component is
*finalized* once no later edge touches it; in targeted mode a branch is
abandoned as soon as a finalized component has an order that is not a
sub-sum of the target partition.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError, DomainError
from .graph import Graph, canonical_form, to_graph6
from .partition import Partition, coarsenings_of, make_partition, subset_sums
from .symfunc import ELEMENTARY, POWER, SymExpr, expand_to_e, transition_coefficient

DEFAULT_EDGE_CAP = 30
DEFAULT_COLOURING_BUDGET = 10**8


@dataclass(frozen=True)
class CsfResult:
    fingerprint: str
    power_expansion: SymExpr
    e_expansion: SymExpr | None
    subset_count_evaluated: int


def _check_cap(g: Graph, cap: int) -> None:
    if g.m > cap:
        raise CapacityError(f"graph has {g.m} edges, above the edge cap of {cap}")


def _walk(g: Graph, prefix: tuple[int, ...] = (), mu: Partition | None = None):
    """Signed counts ``{lambda(S): sum of (-1)^|S|}`` plus the number of leaves reached.

    ``prefix`` fixes include (1) / exclude (0) for the first edges. With a
    target ``mu`` only coarsenings of ``mu`` are accumulated and
    hopeless branches are cut early.
    """
    n, edges = g.n, g.edges
    m = len(edges)
    parent = list(range(n))
    size = [1] * n
    # last[r]: largest edge index touching the component rooted at r
    last = [-1] * n
    for i, (u, v) in enumerate(edges):
        last[u] = last[v] = i

    allowed_sizes = subset_sums(mu) if mu is not None else None
    allowed_shapes = frozenset(coarsenings_of(mu)) if mu is not None else None
    counts: dict[Partition, int] = {}
    leaves = 0

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def dead(r: int, i: int) -> bool:
        return last[r] <= i and size[r] not in allowed_sizes

    if allowed_sizes is not None and any(last[v] < 0 and 1 not in allowed_sizes for v in range(n)):
        return counts, 0

    def step(i: int, odd: int) -> None:
        nonlocal leaves
        if i == m:
            leaves += 1
            lam = tuple(sorted((size[r] for r in range(n) if parent[r] == r), reverse=True))
            if allowed_shapes is None or lam in allowed_shapes:
                counts[lam] = counts.get(lam, 0) + (-1 if odd else 1)
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        choices = (prefix[i],) if i < len(prefix) else (0, 1)
        for take in choices:
            if not take:
                if allowed_sizes is not None and (dead(ru, i) or dead(rv, i)):
                    continue
                step(i + 1, odd)
            elif ru == rv:
                step(i + 1, odd ^ 1)
            else:
                big, small = (ru, rv) if size[ru] >= size[rv] else (rv, ru)
                old_last = last[big]
                parent[small] = big
                size[big] += size[small]
                last[big] = max(old_last, last[small])
                if allowed_sizes is None or not dead(big, i):
                    step(i + 1, odd ^ 1)
                last[big] = old_last
                size[big] -= size[small]
                parent[small] = small

    step(0, 0)
    return counts, leaves


def _walk_job(args):
    g6, prefix, mu = args
    from .graph import from_graph6

    return _walk(from_graph6(g6), prefix, mu)


def _run_walk(g: Graph, mu: Partition | None, workers: int):
    if workers <= 1 or g.m < 8:
        return _walk(g, (), mu)
    k = min(g.m, max(1, (workers * 4 - 1).bit_length()))
    jobs = [(to_graph6(g), bits, mu) for bits in itertools.product((0, 1), repeat=k)]
    counts: dict[Partition, int] = {}
    leaves = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part, n_leaves in pool.map(_walk_job, jobs):
            leaves += n_leaves
            for lam, c in part.items():
                counts[lam] = counts.get(lam, 0) + c
    return counts, leaves


def csf_power(g: Graph, cap: int = DEFAULT_EDGE_CAP, workers: int = 1) -> SymExpr:
    """``X_G`` in the power-sum basis."""
    return compute_csf(g, cap=cap, with_e=False, workers=workers).power_expansion


def csf_elementary(g: Graph, cap: int = DEFAULT_EDGE_CAP, workers: int = 1) -> SymExpr:
    """``X_G`` in the elementary basis; coefficients are checked to be integers."""
    return compute_csf(g, cap=cap, with_e=True, workers=workers).e_expansion


def compute_csf(
    g: Graph, cap: int = DEFAULT_EDGE_CAP, with_e: bool = True, workers: int = 1
) -> CsfResult:
    _check_cap(g, cap)
    counts, leaves = _run_walk(g, None, workers)
    power = SymExpr(POWER, g.n, counts)
    e = None
    if with_e:
        e = expand_to_e(power)
        bad = [lam for lam, c in e.items() if c.denominator != 1]
        if bad:
            raise ArithmeticError(f"non-integral e-coefficients at {bad}")
    fp = canonical_form(g).decode() if g.n <= 10 else to_graph6(g)
    return CsfResult(fp, power, e, leaves)


def power_coefficients_targeted(
    g: Graph, mu, cap: int = DEFAULT_EDGE_CAP, workers: int = 1
) -> tuple[dict[Partition, int], int]:
    """``[p_lam] X_G`` for every coarsening ``lam`` of ``mu``, and the leaf count."""
    mu = make_partition(mu)
    if sum(mu) != g.n:
        raise DomainError(f"target {mu} has weight {sum(mu)}, graph has {g.n} vertices")
    _check_cap(g, cap)
    counts, leaves = _run_walk(g, mu, workers)
    return {lam: counts.get(lam, 0) for lam in coarsenings_of(mu)}, leaves


def e_coefficient_targeted(g: Graph, mu, cap: int = DEFAULT_EDGE_CAP, workers: int = 1) -> Fraction:
    """``[e_mu] X_G`` computed only from the power coefficients that can contribute."""
    mu = make_partition(mu)
    power, _ = power_coefficients_targeted(g, mu, cap=cap, workers=workers)
    return sum(
        (transition_coefficient(lam, mu) * c for lam, c in power.items() if c),
        Fraction(0),
    )


def count_proper_colourings(g: Graph, m: int, budget: int = DEFAULT_COLOURING_BUDGET) -> int:
    """Maps ``V -> {1..m}`` with no monochromatic edge, by exhaustive assignment."""
    if m < 0:
        raise DomainError(f"colour count must be non-negative, got {m}")
    if m**g.n > budget:
        raise CapacityError(f"{m}^{g.n} colourings exceed the budget of {budget}")
    if g.n == 0:
        return 1
    colour = [0] * g.n
    earlier = [[u for u in g.neighbours(v) if u < v] for v in range(g.n)]

    def extend(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c in range(m):
            if all(colour[u] != c for u in earlier[v]):
                colour[v] = c
                total += extend(v + 1)
        return total

    return extend(0)
