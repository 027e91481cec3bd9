import random
from fractions import Fraction

import pytest

from greedyext import (
    IsChain,
    LinearExtension,
    NotNFree,
    PreconditionViolated,
    antichain,
    autonomous_minimal_pair,
    build_poset,
    chain,
    count_by_components,
    count_chain_sum,
    count_disjoint_sum,
    count_linear_sum,
    disjoint_sum,
    gp_ratio,
    greedy_count,
    greedy_extensions,
    half_balanced_witness,
    jump_profile,
    lift_extension,
    linear_sum,
    multinomial,
    project_extension,
    removable_minimals,
)
from greedyext.generators import random_nfree, random_poset, random_sp


def test_multinomial():
    assert multinomial([3, 1]) == 4
    assert multinomial([1, 1, 1]) == 6
    assert multinomial([2, 2]) == 6
    assert multinomial([]) == 1
    assert multinomial([0, 5]) == 1


def test_jump_profile_fig3_component():
    comp = build_poset(4, [(0, 2), (0, 3), (1, 3)])
    assert dict(jump_profile(comp)) == {1: 1, 2: 2}
    assert dict(jump_profile(chain(3))) == {0: 1}
    assert dict(jump_profile(antichain(3))) == {2: 6}


def test_count_disjoint_sum_fig3():
    comp = build_poset(4, [(0, 2), (0, 3), (1, 3)])
    assert count_disjoint_sum([comp, antichain(1)]) == 11


def test_count_disjoint_sum_antichains():
    assert count_disjoint_sum([antichain(2), antichain(2)]) == 24
    assert count_disjoint_sum([chain(1)] * 4) == 24


def test_count_disjoint_sum_degenerate(n_poset):
    assert count_disjoint_sum([n_poset]) == 3


def test_count_disjoint_sum_random_oracle():
    rng = random.Random(11)
    for _ in range(60):
        comps = [
            random_poset(rng.randint(1, 4), rng.uniform(0.1, 0.7), rng.getrandbits(32))
            for _ in range(rng.randint(2, 3))
        ]
        assert count_disjoint_sum(comps) == greedy_count(disjoint_sum(comps))


def test_count_linear_sum(n_poset):
    assert count_linear_sum([n_poset, n_poset]) == 9
    assert greedy_count(linear_sum([n_poset, n_poset])) == 9
    assert count_linear_sum([chain(3), chain(2)]) == 1
    assert count_linear_sum([antichain(2), antichain(3)]) == 12


def test_count_chain_sum():
    assert count_chain_sum(3) == 6
    assert count_chain_sum(1) == 1
    assert count_chain_sum(6) == 720
    for m in range(1, 6):
        assert greedy_count(disjoint_sum([chain(1)] * m)) == count_chain_sum(m)


def test_count_by_components(fig3):
    assert count_by_components(fig3) == 11


def test_removable_minimals():
    p = build_poset(3, [(0, 1)])  # 2-chain plus isolated point
    assert removable_minimals(p) == [0]
    v = build_poset(3, [(0, 2), (1, 2)])
    assert removable_minimals(v) == []
    assert removable_minimals(antichain(4)) == []


def test_removal_preserves_count_and_pairs():
    rng = random.Random(5)
    for _ in range(40):
        p = random_poset(rng.randint(2, 7), rng.uniform(0.1, 0.6), rng.getrandbits(32))
        for a in removable_minimals(p):
            q, m = p.delete_element(a)
            assert greedy_count(p) == greedy_count(q)
            for (x, y) in p.incomparable_pairs():
                if a in (x, y):
                    continue
                assert gp_ratio(p, x, y).as_fraction() == gp_ratio(q, m[x], m[y]).as_fraction()


def test_project_and_lift():
    p = build_poset(3, [(0, 1)])
    # oracle-frozen greedy sets of the 2-chain-plus-point instance
    assert {e.order for e in greedy_extensions(p)} == {(0, 1, 2), (2, 0, 1)}
    down = project_extension(p, 0, LinearExtension((0, 1, 2)))
    assert down.order == (0, 1)  # reindexed remainder {1, 2} -> {0, 1}
    down2 = project_extension(p, 0, LinearExtension((2, 0, 1)))
    assert down2.order == (1, 0)
    assert lift_extension(p, 0, down).order == (0, 1, 2)
    assert lift_extension(p, 0, down2).order == (2, 0, 1)


def test_project_lift_bijection_random():
    rng = random.Random(6)
    for _ in range(30):
        p = random_poset(rng.randint(2, 7), rng.uniform(0.1, 0.6), rng.getrandbits(32))
        for a in removable_minimals(p):
            q, _ = p.delete_element(a)
            full = list(greedy_extensions(p))
            down = [project_extension(p, a, e) for e in full]
            assert sorted(e.order for e in down) == sorted(
                e.order for e in greedy_extensions(q)
            )
            assert [lift_extension(p, a, e) for e in down] == full


def test_project_precondition(chain3):
    with pytest.raises(PreconditionViolated):
        project_extension(chain3, 2, LinearExtension((0, 1, 2)))


def test_autonomous_minimal_pair():
    assert autonomous_minimal_pair(antichain(2)) == (0, 1)
    v = build_poset(3, [(0, 2), (1, 2)])
    assert autonomous_minimal_pair(v) == (0, 1)
    p = build_poset(3, [(0, 1)])  # minimals {0, 2}, not autonomous
    assert autonomous_minimal_pair(p) is None


def test_half_balanced_witness_small():
    w = half_balanced_witness(antichain(2))
    assert (w.x, w.y) == (0, 1)
    p = build_poset(3, [(0, 1)])
    w = half_balanced_witness(p)
    assert {w.x, w.y} == {1, 2}
    assert gp_ratio(p, w.x, w.y).as_fraction() == Fraction(1, 2)
    v = build_poset(3, [(0, 2), (1, 2)])
    w = half_balanced_witness(v)
    assert (w.x, w.y) == (0, 1)


def test_half_balanced_witness_preconditions(chain3, n_poset):
    with pytest.raises(IsChain):
        half_balanced_witness(chain3)
    with pytest.raises(NotNFree):
        half_balanced_witness(n_poset)


def test_half_balanced_witness_random():
    rng = random.Random(7)
    done = 0
    while done < 80:
        n = rng.randint(2, 8)
        p = random_sp(n, rng.getrandbits(32)) if done % 2 else random_nfree(n, rng.getrandbits(32))
        if p.is_chain():
            continue
        done += 1
        w = half_balanced_witness(p)
        assert not p.comparable(w.x, w.y)
        assert gp_ratio(p, w.x, w.y).as_fraction() == Fraction(1, 2)
        assert greedy_count(p) % 2 == 0


def test_witness_trace_mentions_steps():
    p = build_poset(3, [(0, 1)])
    w = half_balanced_witness(p)
    assert any("removed minimal 0" in step for step in w.trace)
    assert any("autonomous" in step for step in w.trace)
