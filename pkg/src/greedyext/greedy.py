"""Greedy linear extension enumeration, membership, blocks, and exact ratios.

A linear extension is greedy when it always keeps climbing: after placing x,
if some element above x is currently minimal in what remains, the next
element must be one of those.  Enumeration branches in ascending element
index so output order is canonical; counting never materializes the list.
All ratios are exact reduced rationals; no floats appear in any verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .errors import (
    CapExceeded,
    NotALinearExtension,
    NotAutomorphism,
    NotGreedy,
    PreconditionViolated,
    SizeMismatch,
)
from .poset import Poset, _bits, is_automorphism

DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class LinearExtension:
    """A permutation of the elements consistent with the order."""

    order: tuple[int, ...]

    @property
    def position(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.order)}

    def index_of(self, x: int) -> int:
        return self.order.index(x)

    def before(self, x: int, y: int) -> bool:
        return self.order.index(x) < self.order.index(y)

    def reversed(self) -> "LinearExtension":
        return LinearExtension(tuple(reversed(self.order)))


@dataclass(frozen=True)
class BlockDecomposition:
    """Chain blocks of an extension, split at the jumps."""

    blocks: tuple[tuple[int, ...], ...]
    jump_positions: tuple[int, ...]

    @property
    def jump_count(self) -> int:
        return len(self.blocks) - 1


@dataclass(frozen=True)
class Ratio:
    """Exact reduced rational with the unreduced enumeration total kept."""

    numerator: int
    denominator: int
    raw_total: int

    @classmethod
    def of(cls, hits: int, total: int) -> "Ratio":
        f = Fraction(hits, total)
        return cls(f.numerator, f.denominator, total)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class BalanceReport:
    """Per-incomparable-pair greedy ratios plus the best-balanced pair."""

    pairs: tuple[tuple[int, int, int, int, Ratio], ...]  # x, y, before, total, ratio
    best_pair: Optional[tuple[int, int]]
    best_level: Optional[Ratio]
    alpha: Optional[Fraction] = None
    meets_alpha: Optional[bool] = field(default=None, compare=False)


# -- internal choice machinery ----------------------------------------------


def _min_mask(p: Poset, remaining: int) -> int:
    mask = 0
    for v in _bits(remaining):
        if not (p.down[v] & remaining):
            mask |= 1 << v
    return mask


def _allowed_mask(p: Poset, remaining: int, last: int | None, greedy: bool) -> int:
    mins = _min_mask(p, remaining)
    if greedy and last is not None:
        climb = p.up[last] & mins
        if climb:
            return climb
    return mins


def _enumerate(p: Poset, greedy: bool, cap: int) -> Iterator[LinearExtension]:
    if p.n == 0:
        yield LinearExtension(())
        return
    full = (1 << p.n) - 1
    prefix: list[int] = []
    produced = 0

    def walk(remaining: int, last: int | None):
        nonlocal produced
        if not remaining:
            produced += 1
            if produced > cap:
                raise CapExceeded(cap)
            yield LinearExtension(tuple(prefix))
            return
        for v in _bits(_allowed_mask(p, remaining, last, greedy)):
            prefix.append(v)
            yield from walk(remaining & ~(1 << v), v)
            prefix.pop()

    yield from walk(full, None)


def greedy_extensions(p: Poset, cap: int = DEFAULT_CAP) -> Iterator[LinearExtension]:
    """All greedy linear extensions in canonical (branch-ascending) order."""
    return _enumerate(p, greedy=True, cap=cap)


def all_linear_extensions(p: Poset, cap: int = DEFAULT_CAP) -> Iterator[LinearExtension]:
    """All linear extensions, the non-greedy baseline."""
    return _enumerate(p, greedy=False, cap=cap)


def _count(p: Poset, greedy: bool, cap: int) -> int:
    # Memoized on (remaining, last); exact big integers throughout.
    cache: dict[tuple[int, int], int] = {}

    def rec(remaining: int, last: int) -> int:
        if not remaining:
            return 1
        key = (remaining, last if greedy else -1)
        hit = cache.get(key)
        if hit is not None:
            return hit
        total = 0
        for v in _bits(_allowed_mask(p, remaining, None if last < 0 else last, greedy)):
            total += rec(remaining & ~(1 << v), v)
        cache[key] = total
        return total

    result = rec((1 << p.n) - 1, -1)
    if result > cap:
        raise CapExceeded(cap)
    return result


def greedy_count(p: Poset, cap: int = DEFAULT_CAP) -> int:
    """Number of greedy linear extensions, counted without materializing."""
    return _count(p, greedy=True, cap=cap)


def linear_extension_count(p: Poset, cap: int = DEFAULT_CAP) -> int:
    return _count(p, greedy=False, cap=cap)


def check_linear_extension(p: Poset, ext: LinearExtension) -> None:
    order = ext.order
    if sorted(order) != list(range(p.n)):
        raise NotALinearExtension(f"{order} is not a permutation of 0..{p.n - 1}")
    pos = {x: i for i, x in enumerate(order)}
    for (a, b) in p.covers:
        if pos[a] > pos[b]:
            raise NotALinearExtension(f"{order} puts {b} before {a}")


def is_greedy(p: Poset, ext: LinearExtension) -> bool:
    """Membership test straight from the definition: at every step, climb
    into the upper set of the previous element whenever possible."""
    check_linear_extension(p, ext)
    remaining = (1 << p.n) - 1
    last = None
    for v in ext.order:
        allowed = _allowed_mask(p, remaining, last, greedy=True)
        if not allowed >> v & 1:
            return False
        remaining &= ~(1 << v)
        last = v
    return True


def blocks(p: Poset, ext: LinearExtension) -> BlockDecomposition:
    """Split the extension at its jumps (consecutive incomparable pairs)."""
    check_linear_extension(p, ext)
    out: list[tuple[int, ...]] = []
    jumps: list[int] = []
    current: list[int] = []
    for i, v in enumerate(ext.order):
        if current and not p.lt(current[-1], v):
            out.append(tuple(current))
            jumps.append(i - 1)
            current = [v]
        else:
            current.append(v)
    if current:
        out.append(tuple(current))
    return BlockDecomposition(tuple(out), tuple(jumps))


def _count_before(p: Poset, x: int, y: int, cap: int) -> tuple[int, int]:
    """(greedy extensions with x before y, total greedy extensions)."""
    total_cache: dict[tuple[int, int], int] = {}

    def total(remaining: int, last: int) -> int:
        if not remaining:
            return 1
        key = (remaining, last)
        hit = total_cache.get(key)
        if hit is not None:
            return hit
        acc = 0
        for v in _bits(_allowed_mask(p, remaining, None if last < 0 else last, True)):
            acc += total(remaining & ~(1 << v), v)
        total_cache[key] = acc
        return acc

    xbit, ybit = 1 << x, 1 << y

    def before(remaining: int, last: int) -> int:
        # Branch until one of x, y is placed; then every completion is decided.
        if not remaining & xbit:
            return total(remaining, last)
        if not remaining & ybit:
            return 0
        acc = 0
        for v in _bits(_allowed_mask(p, remaining, None if last < 0 else last, True)):
            acc += before(remaining & ~(1 << v), v)
        return acc

    full = (1 << p.n) - 1
    n_total = total(full, -1)
    if n_total > cap:
        raise CapExceeded(cap)
    return before(full, -1), n_total


def gp_ratio(p: Poset, x: int, y: int, cap: int = DEFAULT_CAP) -> Ratio:
    """Fraction of greedy linear extensions that put x before y."""
    p._check(x, y)
    if x == y:
        raise PreconditionViolated("gp_ratio needs two distinct elements")
    hits, total = _count_before(p, x, y, cap)
    return Ratio.of(hits, total)


def p_ratio(p: Poset, x: int, y: int, cap: int = DEFAULT_CAP) -> Ratio:
    """Same ratio over all linear extensions (the classical baseline)."""
    p._check(x, y)
    if x == y:
        raise PreconditionViolated("p_ratio needs two distinct elements")
    hits = 0
    total = 0
    for ext in all_linear_extensions(p, cap=cap):
        total += 1
        if ext.before(x, y):
            hits += 1
    return Ratio.of(hits, total)


def balance_report(
    p: Poset,
    alpha: Fraction | None = None,
    cap: int = DEFAULT_CAP,
    use_all_extensions: bool = False,
) -> BalanceReport:
    """Tabulate ratios for every incomparable pair in one streaming pass."""
    pairs = p.incomparable_pairs()
    counts = {pair: 0 for pair in pairs}
    total = 0
    source = all_linear_extensions(p, cap) if use_all_extensions else greedy_extensions(p, cap)
    for ext in source:
        total += 1
        pos = ext.position
        for (x, y) in pairs:
            if pos[x] < pos[y]:
                counts[(x, y)] += 1
    rows = tuple(
        (x, y, counts[(x, y)], total, Ratio.of(counts[(x, y)], total))
        for (x, y) in pairs
    )
    best_pair = None
    best_level = None
    best_value = Fraction(-1)
    for (x, y, hits, tot, _ratio) in rows:
        level_hits = min(hits, tot - hits)
        if Fraction(level_hits, tot) > best_value:
            best_value = Fraction(level_hits, tot)
            best_pair = (x, y)
            best_level = Ratio.of(level_hits, tot)
    meets = None
    if alpha is not None and best_level is not None:
        meets = best_level.as_fraction() >= alpha
    return BalanceReport(rows, best_pair, best_level, alpha, meets)


def apply_automorphism(p: Poset, image, ext: LinearExtension) -> LinearExtension:
    """Map a greedy extension through an automorphism; the image is greedy."""
    image = list(image)
    if len(image) != p.n:
        raise SizeMismatch(f"permutation of size {len(image)} on {p.n} elements")
    if not is_automorphism(p, image):
        raise NotAutomorphism(f"{image} is not an automorphism")
    if not is_greedy(p, ext):
        raise NotGreedy(f"{ext.order} is not greedy")
    return LinearExtension(tuple(image[v] for v in ext.order))


def dual_extension(ext: LinearExtension) -> LinearExtension:
    """The reversed sequence, a linear extension of the dual order."""
    return ext.reversed()


def is_reversible(p: Poset, cap: int = DEFAULT_CAP) -> bool:
    """True iff every greedy extension reverses to a greedy extension of the
    dual order."""
    dual = p.dual()
    dual_set = {ext.order for ext in greedy_extensions(dual, cap)}
    return all(
        tuple(reversed(ext.order)) in dual_set for ext in greedy_extensions(p, cap)
    )


def exists_greedy_before(p: Poset, x: int, y: int, cap: int = DEFAULT_CAP) -> LinearExtension:
    """Some greedy extension placing x before y; exists whenever y is not
    below-or-equal x."""
    p._check(x, y)
    if p.leq(y, x):
        raise PreconditionViolated(f"{y} <= {x}, so {x} can never precede {y}")
    xbit, ybit = 1 << x, 1 << y
    prefix: list[int] = []

    def walk(remaining: int, last: int | None):
        if not remaining:
            return LinearExtension(tuple(prefix))
        if remaining & xbit and not remaining & ybit:
            return None  # y already placed, x not: dead branch
        for v in _bits(_allowed_mask(p, remaining, last, True)):
            prefix.append(v)
            found = walk(remaining & ~(1 << v), v)
            if found is not None:
                return found
            prefix.pop()
        return None

    found = walk((1 << p.n) - 1, None)
    if found is None:
        raise PreconditionViolated(
            f"no greedy extension puts {x} before {y}"
        )  # unreachable when y is not <= x
    return found
