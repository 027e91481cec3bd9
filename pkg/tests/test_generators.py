import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedyext import (
    LimitExceeded,
    PosetSyntaxError,
    SizeError,
    ProbabilityRange,
    enumerate_labeled_posets,
    eval_sp,
    parse_sp,
    random_nfree,
    random_poset,
    random_sp,
    random_sp_expression,
)
from greedyext.generators import SpExpression


def test_eval_sp_examples():
    p = eval_sp(parse_sp("dis(chain(1), chain(2))"))
    assert p.n == 3 and p.covers == {(1, 2)}
    q = eval_sp(parse_sp("lin(antichain(2), antichain(2))"))
    assert q.is_n_free()
    assert eval_sp(parse_sp("chain(5)")).is_chain()


def test_parse_sp_whitespace_and_errors():
    assert parse_sp(" lin( chain(2) ,  dis(chain(1),chain(1)) ) ").element_count() == 4
    with pytest.raises(PosetSyntaxError):
        parse_sp("lin(chain(2))")
    with pytest.raises(PosetSyntaxError):
        parse_sp("loop(3)")
    with pytest.raises(PosetSyntaxError):
        parse_sp("chain(2) extra")


def test_sp_round_trip_str():
    expr = random_sp_expression(9, 3)
    assert parse_sp(str(expr)) == expr


@given(n=st.integers(1, 10), seed=st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_random_sp_is_nfree_and_deterministic(n, seed):
    p = random_sp(n, seed)
    assert p.n == n
    assert p.is_n_free()
    assert random_sp(n, seed) == p


def test_random_sp_single_point():
    assert random_sp(1, 99).n == 1


def test_eval_sp_always_nfree_bulk():
    for seed in range(300):
        assert random_sp(1 + seed % 9, seed).is_n_free()


def test_random_poset_extremes():
    assert random_poset(5, 0.0, 1).is_antichain()
    assert random_poset(5, 1.0, 1).is_chain()
    assert random_poset(6, 0.3, 42) == random_poset(6, 0.3, 42)
    with pytest.raises(SizeError):
        random_poset(0, 0.5, 1)
    with pytest.raises(ProbabilityRange):
        random_poset(3, 1.5, 1)


def test_random_nfree():
    for seed in range(30):
        p = random_nfree(5, seed)
        assert p.is_n_free()
    assert random_nfree(4, 0) == random_nfree(4, 0)
    with pytest.raises(SizeError):
        random_nfree(0, 1)


def test_labeled_counts():
    assert sum(1 for _ in enumerate_labeled_posets(1)) == 1
    assert sum(1 for _ in enumerate_labeled_posets(2)) == 3
    assert sum(1 for _ in enumerate_labeled_posets(3)) == 19


def test_labeled_matches_brute_force():
    # independent oracle: filter all strict relations for transitivity
    for n in (2, 3):
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        count = 0
        for picks in itertools.product([0, 1], repeat=len(pairs)):
            rel = {p for p, take in zip(pairs, picks) if take}
            if any((b, a) in rel for (a, b) in rel):
                continue
            if any(
                (a, d) not in rel
                for (a, b) in rel
                for (c, d) in rel
                if b == c
            ):
                continue
            count += 1
        assert count == sum(1 for _ in enumerate_labeled_posets(n))


def test_labeled_no_duplicates():
    seen = set()
    for p in enumerate_labeled_posets(4):
        key = p.up
        assert key not in seen
        seen.add(key)
    assert len(seen) == 219


def test_labeled_predicate_and_limit():
    assert all(p.width() == 2 for p in enumerate_labeled_posets(3, lambda q: q.width() == 2))
    with pytest.raises(LimitExceeded):
        next(enumerate_labeled_posets(9))


def test_sp_expression_element_count():
    expr = SpExpression("lin", parts=(
        SpExpression("chain", size=2),
        SpExpression("antichain", size=3),
    ))
    assert expr.element_count() == 5
    assert eval_sp(expr).n == 5
