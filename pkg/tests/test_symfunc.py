import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from csfclaw.errors import ContractError, DomainError
from csfclaw.partition import enumerate_partitions, is_coarsening
from csfclaw.symfunc import (
    ELEMENTARY,
    POWER,
    SymExpr,
    coefficient_of,
    expand_to_e,
    from_json,
    is_e_positive,
    multiply,
    parse,
    power_in_e,
    render,
    to_json,
    transition_coefficient,
)


def E(*lam, c=1):
    return SymExpr.basis_element(ELEMENTARY, lam, c)


def P(*lam, c=1):
    return SymExpr.basis_element(POWER, lam, c)


def newton_recursion(k, memo={}):
    """p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k, built independently."""
    if k not in memo:
        acc = E(k, c=(-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + multiply(E(i, c=(-1) ** (i - 1)), newton_recursion(k - i))
        memo[k] = acc
    return memo[k]


def e_values(xs, top):
    """e_0..e_top evaluated at the integer point xs."""
    coeffs = [1] + [0] * top
    for x in xs:
        for k in range(top, 0, -1):
            coeffs[k] += coeffs[k - 1] * x
    return coeffs


def evaluate(expr, xs):
    if expr.basis == POWER:
        val = lambda lam: _prod(sum(x**part for x in xs) for part in lam)
    else:
        es = e_values(xs, expr.degree)
        val = lambda lam: _prod(es[part] for part in lam)
    return sum(c * val(lam) for lam, c in expr.items())


def _prod(it):
    out = 1
    for v in it:
        out *= v
    return out


def test_power_in_e_small():
    assert power_in_e(1) == E(1)
    assert power_in_e(2) == E(1, 1) - E(2, c=2)


@pytest.mark.parametrize("i", range(1, 11))
def test_power_in_e_matches_newton_recursion(i):
    assert power_in_e(i) == newton_recursion(i)


@pytest.mark.parametrize("bad", [0, -3])
def test_power_in_e_domain(bad):
    with pytest.raises(DomainError):
        power_in_e(bad)


def test_multiply_examples():
    assert multiply(E(2), E(2)) == E(2, 2)
    assert multiply(P(3), P(3)) == P(3, 3)
    assert multiply(E(1, 1) - E(2, c=2), E(1)) == E(1, 1, 1) - E(2, 1, c=2)
    with pytest.raises(ContractError):
        multiply(E(1), P(1))


def test_expand_to_e_examples():
    claw_p = P(1, 1, 1, 1) - P(2, 1, 1, c=3) + P(3, 1, c=3) - P(4)
    assert expand_to_e(claw_p) == E(2, 1, 1) - E(2, 2, c=2) + E(3, 1, c=5) + E(4, c=4)
    assert expand_to_e(P(1)) == E(1)
    assert expand_to_e(P(2, 1)) == E(1, 1, 1) - E(2, 1, c=2)
    with pytest.raises(ContractError):
        expand_to_e(E(1))


def test_coefficient_examples():
    claw_e = E(2, 1, 1) - E(2, 2, c=2) + E(3, 1, c=5) + E(4, c=4)
    assert coefficient_of(claw_e, (2, 2)) == -2
    assert coefficient_of(P(6), (3, 3)) == 0
    assert coefficient_of(expand_to_e(P(6, 3)), (3, 3, 3)) == 9
    assert coefficient_of(expand_to_e(P(6)), (3, 3)) == 3
    with pytest.raises(DomainError):
        coefficient_of(P(6), (3, 2))


def test_is_e_positive_examples():
    claw_e = E(2, 1, 1) - E(2, 2, c=2) + E(3, 1, c=5) + E(4, c=4)
    assert is_e_positive(claw_e) == (False, (2, 2))
    assert is_e_positive(E(2, c=2)) == (True, None)
    sa33 = parse("2e_(2,2,2) - 6e_(3,3) + 26e_(4,2) + 28e_(5,1) + 102e_(6)")
    assert is_e_positive(sa33) == (False, (3, 3))
    with pytest.raises(ContractError):
        is_e_positive(P(1))


def test_witness_is_descending_lex_first():
    x = E(3, 3, c=-1) + E(4, 2, c=-1) + E(6)
    assert is_e_positive(x) == (False, (4, 2))


@pytest.mark.parametrize("n", range(1, 13))
def test_expansion_is_integral(n):
    for lam in enumerate_partitions(n):
        for _, c in expand_to_e(P(*lam)).items():
            assert c.denominator == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_expansion_agrees_numerically(n):
    rng = random.Random(n)
    for lam in enumerate_partitions(n):
        xs = [rng.randint(-4, 4) for _ in range(n + 2)]
        assert evaluate(P(*lam), xs) == evaluate(expand_to_e(P(*lam)), xs)


@pytest.mark.parametrize("n", range(1, 7))
def test_transition_closed_forms(n):
    s3 = (-1) ** (3 * n - 3)
    pe = lambda lam, mu: coefficient_of(expand_to_e(P(*lam)), mu)
    assert pe((2 * n,), (n, n)) == n
    assert pe((n, n), (n, n)) == n * n
    assert pe((2 * n + 1,), (n + 1, n)) == -(2 * n + 1)
    assert pe((n + 1, n), (n + 1, n)) == -n * (n + 1)
    assert pe((3 * n,), (n, n, n)) == s3 * n
    assert pe((2 * n, n), (n, n, n)) == s3 * n**2
    assert pe((n, n, n), (n, n, n)) == s3 * n**3


@pytest.mark.parametrize("n", range(1, 10))
def test_only_coarsenings_contribute(n):
    parts = enumerate_partitions(n)
    for lam in parts:
        full = expand_to_e(P(*lam))
        for mu in parts:
            if not is_coarsening(lam, mu):
                assert coefficient_of(full, mu) == 0, (lam, mu)


@pytest.mark.parametrize("n", range(1, 10))
def test_truncated_transition_matches_full(n):
    for lam in enumerate_partitions(n):
        full = expand_to_e(P(*lam))
        for mu in enumerate_partitions(n):
            assert transition_coefficient(lam, mu) == coefficient_of(full, mu)


@st.composite
def exprs(draw, basis):
    degree = draw(st.integers(1, 3))
    parts = enumerate_partitions(degree)
    terms = draw(st.dictionaries(st.sampled_from(parts), st.integers(-5, 5), min_size=1, max_size=3))
    return SymExpr(basis, degree, terms)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([POWER, ELEMENTARY]).flatmap(lambda b: st.tuples(exprs(b), exprs(b), exprs(b))))
def test_multiply_commutative_associative(triple):
    a, b, c = triple
    assert multiply(a, b) == multiply(b, a)
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_zero_terms_dropped():
    x = E(2, 1) + E(2, 1, c=-1)
    assert len(x) == 0
    assert render(x) == "0"
    assert SymExpr(ELEMENTARY, 2, {(2,): 0}).terms == {}


def test_render_and_parse_round_trip():
    text = "2e_(2,2,2) - 6e_(3,3) + 26e_(4,2) + 28e_(5,1) + 102e_(6)"
    x = parse(text)
    assert render(x) == text
    assert coefficient_of(x, (6,)) == 102
    y = P(2, 1, c=Fraction(-1, 3)) + P(3)
    assert parse(render(y)) == y
    assert render(y) == "-1/3p_(2,1) + p_(3)"
    assert from_json(to_json(y)) == y


@pytest.mark.parametrize("bad", ["2e_(2) + p_(2)", "2x_(1)", "e_(2) junk", "0"])
def test_parse_rejects(bad):
    with pytest.raises(DomainError):
        parse(bad)


def test_terms_must_match_degree():
    with pytest.raises(DomainError):
        SymExpr(POWER, 3, {(2,): 1})
