"""Counting formulas, removal lemmas, and the balanced-pair witness search.

The disjoint-sum count interleaves the blocks of per-component greedy
extensions; since the interleaving count depends only on the jump counts,
it is evaluated by convolving jump-count histograms.  The witness search
peels removable minimal elements until an autonomous pair of minimals
appears, tracking the index maps back to the original poset.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import IsChain, NotNFree, PreconditionViolated
from .greedy import (
    DEFAULT_CAP,
    LinearExtension,
    greedy_count,
    is_greedy,
)
from .poset import Poset, _bits, disjoint_sum
from .greedy import _allowed_mask


@dataclass(frozen=True)
class WitnessPair:
    """An incomparable pair with exact greedy ratio 1/2, plus the recursion
    trace that produced it."""

    x: int
    y: int
    trace: tuple[str, ...]


def multinomial(parts) -> int:
    """(sum parts)! / product of part factorials."""
    parts = list(parts)
    total = sum(parts)
    out = math.factorial(total)
    for a in parts:
        out //= math.factorial(a)
    return out


def jump_profile(p: Poset, cap: int = DEFAULT_CAP) -> Counter:
    """Histogram jump count -> number of greedy extensions with that count."""
    cache: dict[tuple[int, int], Counter] = {}

    def rec(remaining: int, last: int) -> Counter:
        if not remaining:
            return Counter({0: 1})
        key = (remaining, last)
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc: Counter = Counter()
        for v in _bits(_allowed_mask(p, remaining, None if last < 0 else last, True)):
            jump = 1 if (last >= 0 and not p.lt(last, v)) else 0
            for s, c in rec(remaining & ~(1 << v), v).items():
                acc[s + jump] += c
        cache[key] = acc
        return acc

    profile = rec((1 << p.n) - 1, -1)
    if sum(profile.values()) > cap:
        from .errors import CapExceeded

        raise CapExceeded(cap)
    return profile


def count_disjoint_sum(components: list[Poset], cap: int = DEFAULT_CAP) -> int:
    """Greedy count of a side-by-side sum via the block-interleaving formula.

    Each tuple of per-component extensions with jump counts (s_1..s_m)
    contributes multinomial(sum(s_i + 1); s_1 + 1, ..., s_m + 1)
    interleavings; collapsing over the histograms gives a polynomial
    convolution with exact rational coefficients.
    """
    if not components:
        raise PreconditionViolated("empty component list")
    if len(components) == 1:
        return greedy_count(components[0], cap)
    # poly maps total block count w -> sum over tuples of
    # (product of histogram multiplicities) / product (s_i + 1)!
    poly: dict[int, Fraction] = {0: Fraction(1)}
    for comp in components:
        profile = jump_profile(comp, cap)
        new: dict[int, Fraction] = {}
        for w, coeff in poly.items():
            for s, count in profile.items():
                key = w + s + 1
                new[key] = new.get(key, Fraction(0)) + coeff * count / math.factorial(s + 1)
        poly = new
    total = sum(coeff * math.factorial(w) for w, coeff in poly.items())
    assert total.denominator == 1
    return total.numerator


def count_linear_sum(components: list[Poset], cap: int = DEFAULT_CAP) -> int:
    """Greedy count of a stacked sum: the product of component counts."""
    if not components:
        raise PreconditionViolated("empty component list")
    out = 1
    for comp in components:
        out *= greedy_count(comp, cap)
    return out


def count_chain_sum(m: int) -> int:
    """Greedy count of a disjoint sum of m chains: m!."""
    if m < 0:
        raise PreconditionViolated("negative chain count")
    return math.factorial(m)


def count_by_components(p: Poset, cap: int = DEFAULT_CAP) -> int:
    """Greedy count via the connected components and the disjoint-sum
    formula; agrees with direct enumeration."""
    comps = p.connected_components()
    return count_disjoint_sum([p.restrict(c) for c in comps], cap)


def removable_minimals(p: Poset) -> list[int]:
    """Minimal, non-maximal elements whose every upper cover has no other
    lower cover; removing one preserves the greedy count."""
    out = []
    for a in sorted(p.minimals()):
        ups = p.upper_covers(a)
        if not ups:
            continue  # maximal
        if all(p.lower_covers(u) == {a} for u in ups):
            out.append(a)
    return out


def project_extension(p: Poset, a: int, ext: LinearExtension) -> LinearExtension:
    """Drop a removable minimal from a greedy extension; the result is a
    greedy extension of the smaller poset (in its dense reindexing)."""
    if a not in removable_minimals(p):
        raise PreconditionViolated(f"{a} is not a removable minimal")
    if not is_greedy(p, ext):
        raise PreconditionViolated(f"{ext.order} is not greedy")
    _, index_map = p.delete_element(a)
    return LinearExtension(tuple(index_map[v] for v in ext.order if v != a))


def lift_extension(p: Poset, a: int, ext: LinearExtension) -> LinearExtension:
    """Insert a removable minimal immediately before its earliest upper
    cover; inverse of project_extension."""
    if a not in removable_minimals(p):
        raise PreconditionViolated(f"{a} is not a removable minimal")
    rest, index_map = p.delete_element(a)
    if not is_greedy(rest, ext):
        raise PreconditionViolated(f"{ext.order} is not greedy in the remainder")
    inverse = {new: old for old, new in index_map.items()}
    order = [inverse[v] for v in ext.order]
    ups = p.upper_covers(a)
    spot = min(i for i, v in enumerate(order) if v in ups)
    order.insert(spot, a)
    return LinearExtension(tuple(order))


def autonomous_minimal_pair(p: Poset) -> tuple[int, int] | None:
    """First (lexicographic) pair of distinct minimal elements forming an
    autonomous antichain, or None."""
    mins = sorted(p.minimals())
    for i, m in enumerate(mins):
        for m2 in mins[i + 1:]:
            if p.is_autonomous({m, m2}):
                return (m, m2)
    return None


def half_balanced_witness(p: Poset) -> WitnessPair:
    """Constructive search for an incomparable pair with greedy ratio 1/2.

    Requires an N-free poset that is not totally ordered.  Peels the least
    removable minimal while one exists (the greedy count and all other
    before-counts are unchanged); once none remains, an autonomous pair of
    minimals is guaranteed and any such pair balances exactly.
    """
    if not p.is_n_free():
        raise NotNFree(f"contains an N at {p.find_n().as_tuple()}")
    if p.is_chain():
        raise IsChain("a chain has no incomparable pair")
    q = p
    to_orig = {v: v for v in range(p.n)}
    trace: list[str] = []
    while True:
        rm = removable_minimals(q)
        if not rm:
            pair = autonomous_minimal_pair(q)
            assert pair is not None, "autonomous minimal pair must exist here"
            x, y = pair
            trace.append(
                f"autonomous minimal pair ({to_orig[x]}, {to_orig[y]}) found"
            )
            return WitnessPair(to_orig[x], to_orig[y], tuple(trace))
        a = rm[0]
        trace.append(f"removed minimal {to_orig[a]}")
        q, index_map = q.delete_element(a)
        to_orig = {new: to_orig[old] for old, new in index_map.items()}
        assert q.is_n_free() and not q.is_chain(), "peeling broke the invariant"


def verify_disjoint_sum(components: list[Poset], cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """(formula count, enumerated count of the actual sum) for cross-checks."""
    formula = count_disjoint_sum(components, cap)
    direct = greedy_count(disjoint_sum(components), cap)
    return formula, direct
