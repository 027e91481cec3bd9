"""Test-poset generators: series-parallel expressions, seeded random orders,
and exhaustive labeled enumeration for small sweeps.

Series-parallel expressions use the concrete syntax ``chain(k)``,
``antichain(k)``, ``lin(e1,e2,...)``, ``dis(e1,e2,...)``; whitespace is
ignored.  Every evaluation is N-free, since linear and disjoint sums of
N-free posets are N-free.  All generators are deterministic per seed.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import ArityMismatch, LimitExceeded, PosetSyntaxError, ProbabilityRange, SizeError
from .poset import Poset, antichain, build_poset, chain, disjoint_sum, linear_sum

LABELED_ENUM_LIMIT = 6


@dataclass(frozen=True)
class SpExpression:
    """Tree with leaves chain(k)/antichain(k) and sum nodes of arity >= 2."""

    kind: str  # "chain" | "antichain" | "lin" | "dis"
    size: int = 0
    parts: tuple["SpExpression", ...] = ()

    def element_count(self) -> int:
        if self.kind in ("chain", "antichain"):
            return self.size
        return sum(part.element_count() for part in self.parts)

    def __str__(self) -> str:
        if self.kind in ("chain", "antichain"):
            return f"{self.kind}({self.size})"
        return f"{self.kind}({','.join(str(p) for p in self.parts)})"


def eval_sp(expr: SpExpression) -> Poset:
    """Evaluate a series-parallel expression; the result is always N-free."""
    if expr.kind == "chain":
        if expr.size < 1:
            raise SizeError(f"chain size {expr.size} < 1")
        return chain(expr.size)
    if expr.kind == "antichain":
        if expr.size < 1:
            raise SizeError(f"antichain size {expr.size} < 1")
        return antichain(expr.size)
    if len(expr.parts) < 2:
        raise ArityMismatch(f"{expr.kind} node needs arity >= 2")
    components = [eval_sp(part) for part in expr.parts]
    if expr.kind == "lin":
        return linear_sum(components)
    if expr.kind == "dis":
        return disjoint_sum(components)
    raise ArityMismatch(f"unknown node kind {expr.kind!r}")


_TOKEN = re.compile(r"\s*([a-z]+|\d+|[(),])")


def parse_sp(text: str) -> SpExpression:
    """Parse the concrete series-parallel syntax."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise PosetSyntaxError(1, f"bad character {text[pos]!r} in expression")
            break
        tokens.append(m.group(1))
        pos = m.end()
    cursor = 0

    def expect(tok):
        nonlocal cursor
        if cursor >= len(tokens) or tokens[cursor] != tok:
            got = tokens[cursor] if cursor < len(tokens) else "end of input"
            raise PosetSyntaxError(1, f"expected {tok!r}, got {got!r}")
        cursor += 1

    def parse_expr() -> SpExpression:
        nonlocal cursor
        if cursor >= len(tokens):
            raise PosetSyntaxError(1, "unexpected end of expression")
        head = tokens[cursor]
        cursor += 1
        if head in ("chain", "antichain"):
            expect("(")
            if cursor >= len(tokens) or not tokens[cursor].isdigit():
                raise PosetSyntaxError(1, f"{head} needs a numeric size")
            size = int(tokens[cursor])
            cursor += 1
            expect(")")
            return SpExpression(head, size=size)
        if head in ("lin", "dis"):
            expect("(")
            parts = [parse_expr()]
            while cursor < len(tokens) and tokens[cursor] == ",":
                cursor += 1
                parts.append(parse_expr())
            expect(")")
            if len(parts) < 2:
                raise PosetSyntaxError(1, f"{head} needs at least two arguments")
            return SpExpression(head, parts=tuple(parts))
        raise PosetSyntaxError(1, f"unknown head {head!r}")

    expr = parse_expr()
    if cursor != len(tokens):
        raise PosetSyntaxError(1, f"trailing input after expression: {tokens[cursor]!r}")
    return expr


def random_sp_expression(n: int, seed: int) -> SpExpression:
    """Random series-parallel expression on exactly n elements."""
    if n < 1:
        raise SizeError(f"size {n} < 1")
    rng = random.Random(seed)

    def build(k: int) -> SpExpression:
        if k == 1:
            return SpExpression("chain", size=1)
        if k <= 3 and rng.random() < 0.4:
            return SpExpression(rng.choice(["chain", "antichain"]), size=k)
        # arity biased toward 2 for diverse jump profiles
        arity = 2 if k == 2 or rng.random() < 0.75 else min(k, rng.randint(3, 4))
        cuts = sorted(rng.sample(range(1, k), arity - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [k])]
        kind = rng.choice(["lin", "dis"])
        return SpExpression(kind, parts=tuple(build(s) for s in sizes))

    return build(n)


def random_sp(n: int, seed: int) -> Poset:
    """Random N-free poset from a random series-parallel expression."""
    return eval_sp(random_sp_expression(n, seed))


def random_poset(n: int, edge_probability: float, seed: int) -> Poset:
    """Random order: coin-flip edges along a fixed topological order, then
    close transitively."""
    if n < 1:
        raise SizeError(f"size {n} < 1")
    if not 0 <= edge_probability <= 1:
        raise ProbabilityRange(f"probability {edge_probability} outside [0, 1]")
    rng = random.Random(seed)
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    return build_poset(n, pairs)


def random_nfree(n: int, seed: int, max_attempts: int = 1000) -> Poset:
    """Rejection-sample random posets until N-free; fall back to a random
    series-parallel poset so the generator is total."""
    if n < 1:
        raise SizeError(f"size {n} < 1")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        p = random_poset(n, rng.uniform(0.1, 0.5), rng.getrandbits(62))
        if p.is_n_free():
            return p
    return random_sp(n, rng.getrandbits(62))


def enumerate_labeled_posets(
    n: int,
    predicate: Optional[Callable[[Poset], bool]] = None,
    limit: int = LABELED_ENUM_LIMIT,
) -> Iterator[Poset]:
    """Every labeled poset on n elements exactly once, optionally filtered.

    Grows element by element: each new element picks a down-set D and an
    up-set U of the current order with D x U already related, which is
    exactly the condition for the extension to stay transitive.
    """
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the configured limit {limit}")
    if n < 0:
        raise SizeError(f"size {n} < 0")

    def extend(k: int, up: list[int], down: list[int]) -> Iterator[Poset]:
        if k == n:
            pairs = [
                (x, y) for x in range(n) for y in range(n) if up[x] >> y & 1
            ]
            yield build_poset(n, pairs)
            return
        all_prev = (1 << k) - 1
        for dmask in range(all_prev + 1):
            # D must be a down-set of the current order
            if any(down[d] & ~dmask for d in range(k) if dmask >> d & 1):
                continue
            common = all_prev & ~dmask
            for d in range(k):
                if dmask >> d & 1:
                    common &= up[d]
            for umask in _subsets(common):
                if umask & dmask:
                    continue
                if any(up[u] & ~umask for u in range(k) if umask >> u & 1):
                    continue  # U must be an up-set
                new_up = list(up)
                new_down = list(down)
                for d in range(k):
                    if dmask >> d & 1:
                        new_up[d] |= 1 << k
                new_up.append(umask)
                for u in range(k):
                    if umask >> u & 1:
                        new_down[u] |= 1 << k
                new_down.append(dmask)
                yield from extend(k + 1, new_up, new_down)

    for p in extend(0, [], []):
        if predicate is None or predicate(p):
            yield p


def _subsets(mask: int) -> Iterator[int]:
    """All submasks of a bitmask, including 0 and the mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
