import itertools
import random
from fractions import Fraction

import pytest

from csfclaw import graph as gr
from csfclaw.chromatic import (
    compute_csf,
    count_proper_colourings,
    csf_elementary,
    csf_power,
    e_coefficient_targeted,
    power_coefficients_targeted,
)
from csfclaw.errors import CapacityError, DomainError
from csfclaw.partition import enumerate_partitions
from csfclaw.symfunc import (
    POWER,
    SymExpr,
    coefficient_of,
    expand_to_e,
    multiply,
    parse,
    specialize_power,
)


def colouring_polynomial_value(g, xs):
    """Sum over proper colourings kappa: V -> range(len(xs)) of prod x_kappa(v)."""
    total = 0
    for kappa in itertools.product(range(len(xs)), repeat=g.n):
        if all(kappa[u] != kappa[v] for u, v in g.edges):
            term = 1
            for c in kappa:
                term *= xs[c]
            total += term
    return total


def power_value(expr, xs):
    total = Fraction(0)
    for lam, c in expr.items():
        term = 1
        for part in lam:
            term *= sum(x**part for x in xs)
        total += c * term
    return total


def chromatic_polynomial(g, m):
    """Deletion-contraction, as an oracle independent of both other routes."""
    if g.m == 0:
        return m**g.n
    u, v = g.edges[0]
    deleted = gr.Graph(g.n, g.edges[1:])
    return chromatic_polynomial(deleted, m) - chromatic_polynomial(gr.contract_simplify(g, 1), m)


def random_graph(rng, n, p=0.5):
    return gr.Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_small_power_expansions():
    assert csf_power(gr.make_claw()) == parse("p_(1,1,1,1) - 3p_(2,1,1) + 3p_(3,1) - p_(4)")
    assert csf_power(gr.make_complete(1)) == SymExpr.basis_element(POWER, (1,))
    assert csf_power(gr.make_complete(2)) == parse("p_(1,1) - p_(2)")
    assert csf_power(gr.make_complete(3)) == parse("p_(1,1,1) - 3p_(2,1) + 2p_(3)")


def test_six_vertex_expansions(six_vertex_graphs):
    expected = {
        "SA33": "2e_(2,2,2) - 6e_(3,3) + 26e_(4,2) + 28e_(5,1) + 102e_(6)",
        "AS33": "2e_(3,2,1) - 6e_(3,3) + 24e_(4,2) + 40e_(5,1) + 120e_(6)",
        "K33": "2e_(2,2,2) - 12e_(3,3) + 30e_(4,2) + 24e_(5,1) + 186e_(6)",
        "AK33": "2e_(3,2,1) - 6e_(3,3) + 20e_(4,2) + 32e_(5,1) + 228e_(6)",
    }
    for name, g in six_vertex_graphs.items():
        assert csf_elementary(g) == parse(expected[name]), name


def test_targeted_examples():
    assert e_coefficient_targeted(gr.make_saltire(3, 3), (3, 3)) == -6
    assert e_coefficient_targeted(gr.make_augmented_saltire(3, 4), (4, 3)) == -6
    assert e_coefficient_targeted(gr.make_triangular_tower(3, 3, 3), (3, 3, 3)) == -12
    with pytest.raises(DomainError):
        e_coefficient_targeted(gr.make_claw(), (3, 3))


def test_targeted_power_coefficients_cover_every_coarsening():
    coeffs, leaves = power_coefficients_targeted(gr.make_saltire(3, 3), (3, 3))
    assert set(coeffs) == {(6,), (3, 3)}
    assert coeffs == {(6,): -17, (3, 3): 5}
    assert 0 < leaves < 2 ** 8


def test_pruning_cuts_the_walk():
    g = gr.make_triangular_tower(4, 4, 4)
    _, leaves = power_coefficients_targeted(g, (4, 4, 4))
    full = compute_csf(g, with_e=False)
    assert full.subset_count_evaluated == 2 ** g.m
    assert leaves < full.subset_count_evaluated // 10


def test_colouring_counts():
    assert count_proper_colourings(gr.make_claw(), 2) == 2
    assert count_proper_colourings(gr.make_complete(3), 3) == 6
    assert count_proper_colourings(gr.make_path(3), 0) == 0
    assert count_proper_colourings(gr.Graph(0), 0) == 1
    with pytest.raises(CapacityError):
        count_proper_colourings(gr.make_path(9), 10, budget=10**8)
    with pytest.raises(DomainError):
        count_proper_colourings(gr.make_path(2), -1)


def test_colouring_count_matches_deletion_contraction():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 6))
        for m in range(4):
            assert count_proper_colourings(g, m) == chromatic_polynomial(g, m)


def test_specialization_matches_colourings(connected_upto_6):
    for g in connected_upto_6:
        x = csf_power(g)
        for m in (1, 2, 3):
            assert specialize_power(x, m) == count_proper_colourings(g, m)


def test_power_expansion_matches_colouring_definition():
    rng = random.Random(1)
    graphs = [g for n in range(1, 6) for g in gr.enumerate_connected(n)]
    graphs += [random_graph(rng, 6) for _ in range(5)]
    for g in graphs:
        x = csf_power(g)
        for _ in range(2):
            xs = [rng.randint(-3, 3) for _ in range(4)]
            assert power_value(x, xs) == colouring_polynomial_value(g, xs)


def test_multiplicative_over_disjoint_union():
    rng = random.Random(23)
    for _ in range(25):
        a = rng.randint(1, 5)
        b = rng.randint(1, 9 - a)
        g, h = random_graph(rng, a), random_graph(rng, b)
        assert csf_power(gr.disjoint_union(g, h)) == multiply(csf_power(g), csf_power(h))


def test_all_singletons_coefficient_is_one(connected_upto_6):
    for g in connected_upto_6:
        assert coefficient_of(csf_power(g), (1,) * g.n) == 1


def test_elementary_is_integral_and_consistent(connected_upto_6):
    for g in connected_upto_6:
        r = compute_csf(g)
        assert r.power_expansion.degree == g.n
        assert r.e_expansion == expand_to_e(r.power_expansion)
        assert all(c.denominator == 1 for _, c in r.e_expansion.items())


def test_targeted_equals_full(connected_upto_6):
    for g in connected_upto_6:
        e = csf_elementary(g)
        for mu in enumerate_partitions(g.n):
            assert e_coefficient_targeted(g, mu) == coefficient_of(e, mu), (g, mu)


def test_targeted_equals_full_on_random_graphs():
    rng = random.Random(99)
    for _ in range(15):
        g = random_graph(rng, rng.randint(7, 8), 0.35)
        e = csf_elementary(g)
        for mu in rng.sample(enumerate_partitions(g.n), 6):
            assert e_coefficient_targeted(g, mu) == coefficient_of(e, mu)


def test_disconnected_and_isolated_vertices():
    g = gr.disjoint_union(gr.make_claw(), gr.make_complete(1))
    e = csf_elementary(g)
    assert e == multiply(csf_elementary(gr.make_claw()), csf_elementary(gr.make_complete(1)))
    assert e_coefficient_targeted(g, (4, 1)) == coefficient_of(e, (4, 1))
    assert e_coefficient_targeted(g, (5,)) == coefficient_of(e, (5,))


def test_edge_cap():
    with pytest.raises(CapacityError, match="cap of 5"):
        csf_power(gr.make_complete(4), cap=5)
    with pytest.raises(CapacityError):
        e_coefficient_targeted(gr.make_complete(4), (2, 2), cap=5)


def test_parallel_split_matches_serial():
    g = gr.make_triangular_tower(3, 3, 3)
    assert csf_power(g, workers=3) == csf_power(g)
    r = compute_csf(g, workers=2, with_e=False)
    assert r.subset_count_evaluated == 2 ** g.m
    assert e_coefficient_targeted(g, (3, 3, 3), workers=2) == -12
