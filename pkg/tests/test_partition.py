import itertools

import pytest
from hypothesis import given, strategies as st

from csfclaw.errors import DomainError
from csfclaw.partition import (
    coarsenings_of,
    enumerate_partitions,
    format_exponent,
    format_partition,
    is_coarsening,
    make_partition,
    multiplicities,
    parse_partition,
)


def brute_partitions(n):
    """Sort every composition of n; compositions are the 2^(n-1) cut patterns."""
    if n == 0:
        return {()}
    out = set()
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def brute_coarsening(lam, mu):
    return any(
        tuple(sorted((sum(b) for b in blocks), reverse=True)) == tuple(lam)
        for blocks in set_partitions(list(mu))
    )


def test_small_enumerations():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(1) == [(1,)]
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(13))
def test_enumeration_matches_composition_oracle(n):
    got = enumerate_partitions(n)
    assert len(got) == len(set(got))
    assert set(got) == brute_partitions(n)
    assert got == sorted(got, reverse=True)


def test_negative_rejected():
    with pytest.raises(DomainError):
        enumerate_partitions(-1)


@pytest.mark.parametrize(
    "lam, expected",
    [((2, 2, 2), {2: 3}), ((3, 3, 2, 2, 1), {3: 2, 2: 2, 1: 1}), ((), {})],
)
def test_multiplicities(lam, expected):
    assert multiplicities(lam) == expected
    assert sum(i * m for i, m in multiplicities(lam).items()) == sum(lam)


@pytest.mark.parametrize(
    "lam, mu, expected",
    [
        ((5, 4, 2), (3, 3, 2, 2, 1), True),
        ((6,), (3, 3), True),
        ((4, 2), (3, 3), False),
    ],
)
def test_is_coarsening_examples(lam, mu, expected):
    assert is_coarsening(lam, mu) is expected


@pytest.mark.parametrize(
    "mu, expected",
    [((3, 3), [(6,), (3, 3)]), ((3, 3, 3), [(9,), (6, 3), (3, 3, 3)]), ((1,), [(1,)])],
)
def test_coarsenings_of_examples(mu, expected):
    assert coarsenings_of(mu) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_is_coarsening_matches_set_partition_oracle(n):
    parts = enumerate_partitions(n)
    for mu in parts:
        for lam in parts:
            assert is_coarsening(lam, mu) == brute_coarsening(lam, mu), (lam, mu)


@pytest.mark.parametrize("n", range(1, 11))
def test_order_properties(n):
    parts = enumerate_partitions(n)
    for mu in parts:
        assert is_coarsening(mu, mu)
        assert is_coarsening((n,), mu)
        assert is_coarsening(mu, (1,) * n)
        coarse = coarsenings_of(mu)
        assert set(coarse) <= set(parts)
        assert coarse == sorted(coarse, reverse=True)
        for lam in coarse:
            if lam != mu:
                assert not is_coarsening(mu, lam)


def test_weight_mismatch_is_false():
    assert not is_coarsening((3,), (1, 1))


partitions = st.lists(st.integers(1, 6), max_size=7).map(make_partition)


@given(partitions)
def test_text_forms_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam
    assert parse_partition(format_exponent(lam)) == lam


def test_exponent_form():
    assert format_exponent((3, 3, 2, 2, 1)) == "(1,2^2,3^2)"
    assert parse_partition("(1^4)") == (1, 1, 1, 1)
    assert parse_partition("()") == ()


@pytest.mark.parametrize("bad", ["3,3", "(0,1)", "(a)", "(2^)"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(DomainError):
        parse_partition(bad)
