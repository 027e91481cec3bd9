"""Finite strict partial orders with exact order-theoretic predicates.

Elements are the integers 0..n-1.  The strict relation is stored as a full
transitive closure in per-element bitmasks (``up[x]`` holds the set
``{v : x < v}``), with the cover relation derived from it.  Everything here
is pure and immutable; posets are safe to share freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    ArityMismatch,
    CycleDetected,
    IndexOutOfRange,
    SizeMismatch,
    Underflow,
)


def _bits(mask: int):
    """Iterate the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class NWitness:
    """A 4-tuple (a, b, c, d) with covers a<b, c<b, c<d and a incomparable to d."""

    a: int
    b: int
    c: int
    d: int

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class GoodTriple:
    """A triple (x, y, z) with x < z, y incomparable to both, and {x, y}
    autonomous once z is removed."""

    x: int
    y: int
    z: int


@dataclass(frozen=True)
class Poset:
    """An immutable finite strict order on elements 0..n-1.

    ``up[x]`` / ``down[x]`` are bitmasks of the strict upper / lower sets.
    ``covers`` is the Hasse relation recomputed from the closure.
    """

    n: int
    up: tuple[int, ...]
    down: tuple[int, ...]
    covers: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    # -- basic predicates ---------------------------------------------------

    def _check(self, *xs):
        for x in xs:
            if not (0 <= x < self.n):
                raise IndexOutOfRange(f"element {x} not in [0, {self.n})")

    def lt(self, x: int, y: int) -> bool:
        """Strict comparison x < y."""
        self._check(x, y)
        return bool(self.up[x] >> y & 1)

    def leq(self, x: int, y: int) -> bool:
        """Non-strict comparison x <= y."""
        self._check(x, y)
        return x == y or bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        self._check(x, y)
        return x == y or bool((self.up[x] | self.down[x]) >> y & 1)

    def upper_set(self, x: int) -> set[int]:
        """All v with x < v (excludes x)."""
        self._check(x)
        return set(_bits(self.up[x]))

    def lower_set(self, x: int) -> set[int]:
        self._check(x)
        return set(_bits(self.down[x]))

    def minimals(self) -> set[int]:
        return {v for v in range(self.n) if not self.down[v]}

    def maximals(self) -> set[int]:
        return {v for v in range(self.n) if not self.up[v]}

    def upper_covers(self, x: int) -> set[int]:
        self._check(x)
        return {b for (a, b) in self.covers if a == x}

    def lower_covers(self, x: int) -> set[int]:
        self._check(x)
        return {a for (a, b) in self.covers if b == x}

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        """All pairs (x, y) with x < y as indices and x incomparable to y."""
        return [
            (x, y)
            for x in range(self.n)
            for y in range(x + 1, self.n)
            if not (self.up[x] | self.down[x]) >> y & 1
        ]

    def label(self, x: int) -> str:
        if self.labels is not None and self.labels[x]:
            return self.labels[x]
        return str(x)

    # -- structure ----------------------------------------------------------

    def dual(self) -> "Poset":
        """Order with all comparisons reversed; an involution."""
        return Poset(
            n=self.n,
            up=self.down,
            down=self.up,
            covers=frozenset((b, a) for (a, b) in self.covers),
            labels=self.labels,
        )

    def delete_element(self, a: int) -> tuple["Poset", dict[int, int]]:
        """Induced order on the remaining elements, densely reindexed.

        Returns the new poset and the old->new index map.  Deleting a
        minimal element never changes the cover relation among survivors.
        """
        self._check(a)
        if self.n == 1:
            raise Underflow("cannot delete from a 1-element poset")
        keep = [v for v in range(self.n) if v != a]
        index_map = {old: new for new, old in enumerate(keep)}
        pairs = [
            (index_map[x], index_map[y])
            for x in keep
            for y in _bits(self.up[x])
            if y != a
        ]
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in keep)
        q = build_poset(self.n - 1, pairs)
        if labels is not None:
            q = q.with_labels(labels)
        return q, index_map

    def with_labels(self, labels) -> "Poset":
        labels = tuple(labels)
        if len(labels) != self.n:
            raise SizeMismatch(f"{len(labels)} labels for {self.n} elements")
        return Poset(self.n, self.up, self.down, self.covers, labels)

    def is_chain(self) -> bool:
        return all(
            self.comparable(x, y)
            for x in range(self.n)
            for y in range(x + 1, self.n)
        )

    def is_antichain(self) -> bool:
        return not self.covers and all(not m for m in self.up)

    @cached_property
    def _width(self) -> int:
        # Exhaustive max-antichain search over bitmasks; fine at desk scale.
        incomp = [
            ((1 << self.n) - 1) & ~(self.up[v] | self.down[v] | (1 << v))
            for v in range(self.n)
        ]
        best = 0

        def grow(candidates: int, size: int):
            nonlocal best
            if size + candidates.bit_count() <= best:
                return
            if not candidates:
                best = max(best, size)
                return
            v = (candidates & -candidates).bit_length() - 1
            grow(candidates & incomp[v] & ~(1 << v), size + 1)  # take v
            grow(candidates & ~(1 << v), size)  # skip v
        grow((1 << self.n) - 1, 0)
        return best

    def width(self) -> int:
        """Maximum antichain cardinality."""
        return self._width

    def is_autonomous(self, members) -> bool:
        """True iff every outside element relates identically to all members."""
        amask = 0
        for x in members:
            self._check(x)
            amask |= 1 << x
        for v in range(self.n):
            if amask >> v & 1:
                continue
            above = self.up[v] & amask  # members above v
            below = self.down[v] & amask
            if above not in (0, amask) or below not in (0, amask):
                return False
        return True

    def find_n(self) -> NWitness | None:
        """Lexicographically least (a, b, c, d) with covers a<b, c<b, c<d and
        a incomparable to d, or None."""
        cov = self.covers
        for a, b, c, d in itertools.product(range(self.n), repeat=4):
            if len({a, b, c, d}) != 4:
                continue
            if (a, b) in cov and (c, b) in cov and (c, d) in cov:
                if not self.comparable(a, d):
                    return NWitness(a, b, c, d)
        return None

    def is_n_free(self) -> bool:
        return self.find_n() is None

    def connected_components(self) -> list[list[int]]:
        """Components of the comparability graph, each sorted, ordered by
        least element."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            comp = []
            stack = [start]
            seen[start] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in _bits(self.up[v] | self.down[v]):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def restrict(self, members: list[int]) -> "Poset":
        """Induced suborder on the given elements, reindexed in list order."""
        index = {old: new for new, old in enumerate(members)}
        pairs = [
            (index[x], index[y])
            for x in members
            for y in _bits(self.up[x])
            if y in index
        ]
        return build_poset(len(members), pairs)

    def good_triples(self) -> list[GoodTriple]:
        """All (x, y, z) with x < z, y incomparable to x and z, and {x, y}
        autonomous after removing z; lexicographic order."""
        out = []
        for x, y, z in itertools.product(range(self.n), repeat=3):
            if len({x, y, z}) != 3:
                continue
            if not self.lt(x, z):
                continue
            if self.comparable(z, y) or self.comparable(y, x):
                continue
            rest, index_map = self.delete_element(z)
            if rest.is_autonomous({index_map[x], index_map[y]}):
                out.append(GoodTriple(x, y, z))
        return out


def build_poset(n: int, cover_pairs, labels=None) -> Poset:
    """Build a poset from arbitrary strict-relation pairs.

    Input pairs need not be covers; the transitive closure is taken and the
    cover relation recomputed, so redundant pairs are absorbed.
    """
    if n < 0:
        raise IndexOutOfRange(f"negative element count {n}")
    succ = [0] * n
    for x, y in cover_pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise IndexOutOfRange(f"pair ({x}, {y}) not in [0, {n})")
        if x == y:
            raise CycleDetected(f"self-loop at {x}")
        succ[x] |= 1 << y

    # Topological order via Kahn; any leftover means a cycle.
    indeg = [0] * n
    for x in range(n):
        for y in _bits(succ[x]):
            indeg[y] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    order = []
    while queue:
        v = queue.pop()
        order.append(v)
        for w in _bits(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != n:
        raise CycleDetected("relation pairs contain a directed cycle")

    up = [0] * n
    for v in reversed(order):
        acc = 0
        for w in _bits(succ[v]):
            acc |= (1 << w) | up[w]
        up[v] = acc
    down = [0] * n
    for x in range(n):
        for y in _bits(up[x]):
            down[y] |= 1 << x

    covers = frozenset(
        (x, y)
        for x in range(n)
        for y in _bits(up[x])
        if not (up[x] & down[y])
    )
    p = Poset(n, tuple(up), tuple(down), covers)
    if labels is not None:
        p = p.with_labels(labels)
    return p


def chain(k: int) -> Poset:
    return build_poset(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return build_poset(k, [])


def lex_sum(index: Poset, components: list[Poset]) -> Poset:
    """Replace each element of the index poset by a component poset.

    Cross-component comparisons follow the index order; the index poset
    must have at least two elements.
    """
    if index.n < 2:
        raise ArityMismatch("lexicographical sum needs an index of size >= 2")
    return _sum(index, components)


def _sum(index: Poset, components: list[Poset]) -> Poset:
    if not components:
        raise ArityMismatch("empty component list")
    if len(components) != index.n:
        raise ArityMismatch(
            f"{len(components)} components for index of size {index.n}"
        )
    offsets = []
    total = 0
    for comp in components:
        offsets.append(total)
        total += comp.n
    pairs = []
    for i, comp in enumerate(components):
        pairs.extend(
            (offsets[i] + a, offsets[i] + b) for (a, b) in comp.covers
        )
    for i in range(index.n):
        for j in range(index.n):
            if index.lt(i, j):
                pairs.extend(
                    (offsets[i] + a, offsets[j] + b)
                    for a in range(components[i].n)
                    for b in range(components[j].n)
                )
    return build_poset(total, pairs)


def disjoint_sum(components: list[Poset]) -> Poset:
    """Side-by-side sum: no comparisons between components."""
    if len(components) == 1:
        return components[0]
    return _sum(antichain(len(components)), components)


def linear_sum(components: list[Poset]) -> Poset:
    """Stacked sum: everything in an earlier component lies below everything
    in a later one."""
    if len(components) == 1:
        return components[0]
    return _sum(chain(len(components)), components)


def is_automorphism(p: Poset, image) -> bool:
    """True iff the permutation preserves comparisons in both directions."""
    image = list(image)
    if len(image) != p.n:
        raise SizeMismatch(f"permutation of size {len(image)} on {p.n} elements")
    if sorted(image) != list(range(p.n)):
        return False
    return all(
        p.lt(x, y) == p.lt(image[x], image[y])
        for x in range(p.n)
        for y in range(p.n)
        if x != y
    )


def automorphisms(p: Poset):
    """Brute-force list of all automorphism images; small posets only."""
    return [
        list(perm)
        for perm in itertools.permutations(range(p.n))
        if is_automorphism(p, perm)
    ]
