"""Pointwise checks of the closed-form coefficient formulas for the saltire,
augmented saltire and triangular tower families.

Each formula is evaluated exactly at a given ``n`` and compared with a value
obtained from first principles (subset expansion and Newton transition),
never from the formula itself.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .chromatic import DEFAULT_EDGE_CAP, csf_elementary, e_coefficient_targeted, power_coefficients_targeted
from .clawtest import is_ccf_bv, is_claw_free
from .errors import DomainError
from .graph import Graph, make_augmented_saltire, make_saltire, make_triangular_tower
from .partition import Partition, format_partition
from .symfunc import POWER, SymExpr, coefficient_of, expand_to_e, is_e_positive


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class _Lemma:
    kind: str  # "power": [p_lam] X_G; "transition": [e_mu] p_lam; "elementary": [e_mu] X_G
    min_n: int
    target: Callable[[int], Partition]
    graph: Callable[[int], Graph] | None
    graph_name: Callable[[int], str] | None
    formula: Callable[[int], list[tuple[Partition, int]]]


def _sa(n):
    return make_saltire(n, n)


def _as_even(n):
    return make_augmented_saltire(n, n)


def _as_odd(n):
    return make_augmented_saltire(n, n + 1)


def _tt(n):
    return make_triangular_tower(n, n, n)


LEMMAS: dict[str, _Lemma] = {
    "3.3": _Lemma(
        "power", 3, lambda n: (n, n), _sa, lambda n: f"SA_{{{n},{n}}}",
        lambda n: [((2 * n,), -3 * n * n + 4 * n - 2), ((n, n), 2 * n - 1)],
    ),
    "3.4": _Lemma(
        "transition", 1, lambda n: (n, n), None, None,
        lambda n: [((2 * n,), n), ((n, n), n * n)],
    ),
    "3.5": _Lemma(
        "elementary", 3, lambda n: (n, n), _sa, lambda n: f"SA_{{{n},{n}}}",
        lambda n: [((n, n), -n * (n - 1) * (n - 2))],
    ),
    "3.8a": _Lemma(
        "power", 3, lambda n: (n, n), _as_even, lambda n: f"AS_{{{n},{n}}}",
        lambda n: [((2 * n,), -4 * n * n + 6 * n - 2), ((n, n), 3 * n - 3)],
    ),
    "3.8b": _Lemma(
        "power", 3, lambda n: (n + 1, n), _as_odd, lambda n: f"AS_{{{n},{n + 1}}}",
        lambda n: [((2 * n + 1,), 4 * n * n - 2 * n), ((n + 1, n), -7 * n + 4)],
    ),
    "3.9": _Lemma(
        "transition", 1, lambda n: (n + 1, n), None, None,
        lambda n: [((2 * n + 1,), -(2 * n + 1)), ((n + 1, n), -n * (n + 1))],
    ),
    "3.10a": _Lemma(
        "elementary", 3, lambda n: (n, n), _as_even, lambda n: f"AS_{{{n},{n}}}",
        lambda n: [((n, n), -n * (n - 1) * (n - 2))],
    ),
    "3.10b": _Lemma(
        "elementary", 3, lambda n: (n + 1, n), _as_odd, lambda n: f"AS_{{{n},{n + 1}}}",
        lambda n: [((n + 1, n), -n * (n - 1) * (n - 2))],
    ),
    "4.3": _Lemma(
        "power", 3, lambda n: (n, n, n), _tt, lambda n: f"TT_{{{n},{n},{n}}}",
        lambda n: [
            ((3 * n,), _sign(3 * n + 3) * (12 * n * n - 12 * n + 2)),
            ((2 * n, n), _sign(3 * n) * (4 * n * n + 6 * n - 7)),
            ((n, n, n), _sign(3 * n - 3) * (3 * n - 2)),
        ],
    ),
    "4.4": _Lemma(
        "transition", 1, lambda n: (n, n, n), None, None,
        lambda n: [
            ((3 * n,), _sign(3 * n - 3) * n),
            ((2 * n, n), _sign(3 * n - 3) * n**2),
            ((n, n, n), _sign(3 * n - 3) * n**3),
        ],
    ),
    "4.5": _Lemma(
        "elementary", 3, lambda n: (n, n, n), _tt, lambda n: f"TT_{{{n},{n},{n}}}",
        lambda n: [((n, n, n), -n * (n - 1) ** 2 * (n - 2))],
    ),
}

GROUPS = {"3.8": ("3.8a", "3.8b"), "3.10": ("3.10a", "3.10b")}
ALL_LEMMAS = tuple(LEMMAS)


def expand_selector(selectors: Iterable[str]) -> list[str]:
    out: list[str] = []
    for sel in selectors:
        if sel == "all":
            ids = ALL_LEMMAS
        elif sel in GROUPS:
            ids = GROUPS[sel]
        elif sel in LEMMAS:
            ids = (sel,)
        else:
            raise DomainError(f"unknown lemma id {sel!r}; known: {', '.join(ALL_LEMMAS)}")
        out += [i for i in ids if i not in out]
    return out


def _lookup(lemma_id: str, n: int) -> _Lemma:
    if lemma_id not in LEMMAS:
        raise DomainError(f"unknown lemma id {lemma_id!r}")
    lemma = LEMMAS[lemma_id]
    if n < lemma.min_n:
        raise DomainError(f"lemma {lemma_id} needs n >= {lemma.min_n}, got {n}")
    return lemma


def closed_form(lemma_id: str, n: int) -> list[tuple[Partition, Fraction]]:
    """The formula side at ``n``: ``(index partition, coefficient)`` pairs."""
    lemma = _lookup(lemma_id, n)
    return [(lam, Fraction(v)) for lam, v in lemma.formula(n)]


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    n: int
    quantity: str
    partition: Partition
    expected: Fraction
    computed: Fraction

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "n": self.n,
            "quantity": self.quantity,
            "partition": list(self.partition),
            "expected": str(self.expected),
            "computed": str(self.computed),
            "pass": self.passed,
        }


def brute_force_check(lemma_id: str, n: int, cap: int = DEFAULT_EDGE_CAP) -> list[LemmaCheck]:
    """One row per formula item, computed without consulting the formula."""
    lemma = _lookup(lemma_id, n)
    mu = lemma.target(n)
    rows = []
    if lemma.kind == "power":
        power, _ = power_coefficients_targeted(lemma.graph(n), mu, cap=cap)
    for lam, expected in closed_form(lemma_id, n):
        if lemma.kind == "transition":
            p_lam = SymExpr.basis_element(POWER, lam)
            computed = coefficient_of(expand_to_e(p_lam), mu)
            label = f"[e_{format_partition(mu)}]p_{format_partition(lam)}"
        elif lemma.kind == "power":
            computed = Fraction(power[lam])
            label = f"[p_{format_partition(lam)}]X_{lemma.graph_name(n)}"
        else:
            computed = e_coefficient_targeted(lemma.graph(n), lam, cap=cap)
            label = f"[e_{format_partition(lam)}]X_{lemma.graph_name(n)}"
        rows.append(LemmaCheck(lemma_id, n, label, lam, expected, computed))
    return rows


def _check_job(args):
    return brute_force_check(*args)


def run_checks(
    lemma_ids: Iterable[str], ns: Iterable[int], cap: int = DEFAULT_EDGE_CAP, workers: int = 1
) -> list[LemmaCheck]:
    """Every (lemma, n) cell whose n is in range for that lemma, in a fixed order."""
    ns = list(ns)
    cells = [(lid, n, cap) for lid in lemma_ids for n in ns if n >= LEMMAS[lid].min_n]
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_check_job, cells))
    else:
        batches = [brute_force_check(*c) for c in cells]
    return [row for batch in batches for row in batch]


# -- theorem-level checks ----------------------------------------------------

FAMILIES = {
    "SA": (_sa, lambda n: (n, n)),
    "AS": (_as_odd, lambda n: (n + 1, n)),
    "TT": (_tt, lambda n: (n, n, n)),
}


@dataclass(frozen=True)
class TheoremCheck:
    family: str
    n: int
    ccf: bool
    claw_free: bool
    e_positive: bool
    witness: Partition | None
    cited: Partition
    cited_coefficient: Fraction


def theorem_check(family: str, n: int, cap: int = DEFAULT_EDGE_CAP) -> TheoremCheck:
    """Full expansion of a family member: claw status, e-positivity, first negative term."""
    make, target = FAMILIES[family]
    g = make(n)
    e = csf_elementary(g, cap=cap)
    positive, witness = is_e_positive(e)
    cited = target(n)
    return TheoremCheck(
        family, n, is_ccf_bv(g)[0], is_claw_free(g)[0], positive, witness,
        cited, coefficient_of(e, cited),
    )


def format_table(rows: list[LemmaCheck]) -> str:
    header = ("lemma", "n", "quantity", "expected", "computed", "pass")
    body = [
        (r.lemma, str(r.n), r.quantity, str(r.expected), str(r.computed), "PASS" if r.passed else "FAIL")
        for r in rows
    ]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in [header, *body]]
    return "\n".join(lines)
