"""Named invariant suites: each runs a batch of checks and reports pass/fail.

These back the CLI ``verify`` subcommand and the acceptance test module.
Every check is exact: integer equality or reduced-rational equality, never
floating point.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import counting, generators, greedy
from .greedy import (
    all_linear_extensions,
    balance_report,
    exists_greedy_before,
    gp_ratio,
    greedy_count,
    greedy_extensions,
    is_greedy,
    is_reversible,
    LinearExtension,
)
from .poset import Poset, build_poset, chain, disjoint_sum, linear_sum

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

FIG3_LABELS = ("a", "b", "c", "d", "e")


def fig3_poset() -> Poset:
    """The disconnected 5-element example: an N (a<c, a<d, b<d) plus an
    isolated point."""
    return build_poset(5, [(0, 2), (0, 3), (1, 3)], labels=FIG3_LABELS)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _brute_greedy_set(p: Poset) -> set[tuple[int, ...]]:
    """Filter every permutation through the membership test."""
    out = set()
    for perm in itertools.permutations(range(p.n)):
        ext = LinearExtension(perm)
        try:
            if is_greedy(p, ext):
                out.add(perm)
        except greedy.NotALinearExtension:
            continue
    return out


def _random_components(rng: random.Random, total_max: int) -> list[Poset]:
    m = rng.randint(2, 3)
    budget = rng.randint(m, total_max)
    sizes = []
    left = budget
    for i in range(m):
        hi = left - (m - 1 - i)
        size = rng.randint(1, max(1, hi)) if i < m - 1 else left
        sizes.append(size)
        left -= size
    comps = []
    for size in sizes:
        if rng.random() < 0.5:
            comps.append(generators.random_sp(size, rng.getrandbits(62)))
        else:
            comps.append(
                generators.random_poset(size, rng.uniform(0.1, 0.7), rng.getrandbits(62))
            )
    return comps


# -- suites ------------------------------------------------------------------


def suite_fig3(seed: int = 0, instances: int = 0, max_n: int = 0) -> list[CheckResult]:
    p = fig3_poset()
    results = []
    count = greedy_count(p)
    results.append(CheckResult("fig3 greedy count is 11", count == 11, f"got {count}"))
    r_ba = gp_ratio(p, 1, 0)
    results.append(
        CheckResult(
            "fig3 ratio b before a is 8/11",
            (r_ba.numerator, r_ba.denominator) == (8, 11),
            f"got {r_ba}",
        )
    )
    r_bc = gp_ratio(p, 1, 2)
    results.append(
        CheckResult(
            "fig3 ratio b before c is 8/11",
            (r_bc.numerator, r_bc.denominator) == (8, 11),
            f"got {r_bc}",
        )
    )
    # (c, d): report the brute-force value and record whether it matches the
    # published 8/11 claim; the oracle is authoritative either way.
    oracle = _brute_greedy_set(p)
    hits = sum(1 for perm in oracle if perm.index(2) < perm.index(3))
    r_cd = gp_ratio(p, 2, 3)
    results.append(
        CheckResult(
            "fig3 ratio c before d matches brute-force oracle",
            (r_cd.numerator, r_cd.denominator)
            == (Fraction(hits, len(oracle)).numerator, Fraction(hits, len(oracle)).denominator),
            f"oracle {hits}/{len(oracle)}, engine {r_cd}, "
            f"published-8/11 match: {Fraction(hits, len(oracle)) == Fraction(8, 11)}",
        )
    )
    return results


def suite_chain_corollary(seed: int = 0, instances: int = 0, max_n: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for m in range(1, 7):
        chains = [chain(rng.randint(1, 3)) for _ in range(m)]
        formula = counting.count_chain_sum(m)
        direct = greedy_count(disjoint_sum(chains))
        results.append(
            CheckResult(
                f"disjoint sum of {m} chains has m! greedy extensions",
                formula == direct,
                f"m! = {formula}, enumerated {direct}",
            )
        )
    return results


def suite_disjoint_sum(seed: int = 1, instances: int = 200, max_n: int = 10) -> list[CheckResult]:
    rng = random.Random(seed)
    failures = 0
    detail = ""
    for i in range(instances):
        comps = _random_components(rng, max_n)
        formula, direct = counting.verify_disjoint_sum(comps)
        if formula != direct:
            failures += 1
            if not detail:
                detail = f"first mismatch at instance {i}: {formula} vs {direct}"
    return [
        CheckResult(
            f"disjoint-sum formula matches enumeration on {instances} random lists",
            failures == 0,
            detail or f"{instances} exact matches",
        )
    ]


def suite_linear_sum(seed: int = 2, instances: int = 100, max_n: int = 10) -> list[CheckResult]:
    rng = random.Random(seed)
    failures = 0
    detail = ""
    for i in range(instances):
        comps = _random_components(rng, max_n)
        formula = counting.count_linear_sum(comps)
        direct = greedy_count(linear_sum(comps))
        if formula != direct:
            failures += 1
            if not detail:
                detail = f"first mismatch at instance {i}: {formula} vs {direct}"
    return [
        CheckResult(
            f"linear-sum product matches enumeration on {instances} random lists",
            failures == 0,
            detail or f"{instances} exact matches",
        )
    ]


def _random_nfree_nonchain(rng: random.Random, max_n: int) -> Poset:
    while True:
        n = rng.randint(2, max_n)
        if rng.random() < 0.5:
            p = generators.random_sp(n, rng.getrandbits(62))
        else:
            p = generators.random_nfree(n, rng.getrandbits(62))
        if not p.is_chain():
            return p


def suite_main_theorem(seed: int = 3, instances: int = 500, max_n: int = 9) -> list[CheckResult]:
    rng = random.Random(seed)
    bad_witness = bad_ratio = bad_parity = 0
    detail = ""
    for i in range(instances):
        p = _random_nfree_nonchain(rng, max_n)
        try:
            witness = counting.half_balanced_witness(p)
        except Exception as exc:  # any failure to produce a witness counts
            bad_witness += 1
            detail = detail or f"instance {i}: {exc}"
            continue
        ratio = gp_ratio(p, witness.x, witness.y)
        if ratio.as_fraction() != HALF:
            bad_ratio += 1
            detail = detail or f"instance {i}: ratio {ratio}"
        if greedy_count(p) % 2 != 0:
            bad_parity += 1
            detail = detail or f"instance {i}: odd greedy count"
    ok = bad_witness == bad_ratio == bad_parity == 0
    return [
        CheckResult(
            f"balanced-pair witness is exact 1/2 on {instances} N-free non-chains",
            ok,
            detail or f"{instances} witnesses, all ratios 1/2, all counts even",
        )
    ]


def suite_removal(seed: int = 4, instances: int = 120, max_n: int = 8) -> list[CheckResult]:
    rng = random.Random(seed)
    checked = 0
    count_fail = pair_fail = bijection_fail = 0
    detail = ""
    for i in range(instances):
        n = rng.randint(2, max_n)
        p = generators.random_poset(n, rng.uniform(0.1, 0.6), rng.getrandbits(62))
        for a in counting.removable_minimals(p):
            checked += 1
            q, index_map = p.delete_element(a)
            if greedy_count(p) != greedy_count(q):
                count_fail += 1
                detail = detail or f"instance {i}: count changed after removing {a}"
            for (x, y) in p.incomparable_pairs():
                if a in (x, y):
                    continue
                rp = gp_ratio(p, x, y)
                rq = gp_ratio(q, index_map[x], index_map[y])
                if (rp.numerator * rq.raw_total != rq.numerator * rp.raw_total
                        or rp.as_fraction() != rq.as_fraction()):
                    pair_fail += 1
                    detail = detail or f"instance {i}: pair ({x},{y}) count changed"
            full = list(greedy_extensions(p))
            down = [counting.project_extension(p, a, ext) for ext in full]
            if sorted(e.order for e in down) != sorted(
                e.order for e in greedy_extensions(q)
            ):
                bijection_fail += 1
                detail = detail or f"instance {i}: projection not onto"
            for ext in full:
                if counting.lift_extension(p, a, counting.project_extension(p, a, ext)) != ext:
                    bijection_fail += 1
                    detail = detail or f"instance {i}: round trip broke on {ext.order}"
                    break
    ok = count_fail == pair_fail == bijection_fail == 0
    return [
        CheckResult(
            "removable-minimal deletion preserves counts and is a bijection",
            ok,
            detail or f"{checked} removable minimals checked across {instances} posets",
        )
    ]


def suite_reversibility(seed: int = 5, instances: int = 200, max_n: int = 8) -> list[CheckResult]:
    rng = random.Random(seed)
    failures = 0
    detail = ""
    for i in range(instances):
        n = rng.randint(2, max_n)
        p = _random_nfree_nonchain(rng, n) if n > 1 else chain(1)
        dual_set = {e.order for e in greedy_extensions(p.dual())}
        rev_set = {tuple(reversed(e.order)) for e in greedy_extensions(p)}
        if rev_set != dual_set:
            failures += 1
            detail = detail or f"instance {i}: dualized set differs"
    results = [
        CheckResult(
            f"N-free posets are reversible ({instances} random instances)",
            failures == 0,
            detail or "dualized greedy sets always equal the dual's greedy sets",
        )
    ]
    found = None
    for n in range(2, 6):
        for p in generators.enumerate_labeled_posets(n):
            if not is_reversible(p):
                found = p
                break
        if found:
            break
    results.append(
        CheckResult(
            "a non-reversible poset exists among labeled posets with n <= 5",
            found is not None,
            f"example covers {sorted(found.covers)}" if found else "none found",
        )
    )
    return results


def suite_soundness(seed: int = 6, instances: int = 60, max_n: int = 6) -> list[CheckResult]:
    rng = random.Random(seed)
    posets = []
    for n in range(1, 5):
        posets.extend(generators.enumerate_labeled_posets(n))
    for _ in range(instances):
        n = rng.randint(1, max_n)
        posets.append(generators.random_poset(n, rng.uniform(0.0, 0.8), rng.getrandbits(62)))
    enum_fail = before_fail = 0
    detail = ""
    for p in posets:
        enumerated = {e.order for e in greedy_extensions(p)}
        brute = _brute_greedy_set(p)
        if enumerated != brute:
            enum_fail += 1
            detail = detail or f"mismatch on covers {sorted(p.covers)}"
        for x in range(p.n):
            for y in range(p.n):
                if x == y or p.leq(y, x):
                    continue
                witness = exists_greedy_before(p, x, y)
                if not (is_greedy(p, witness) and witness.before(x, y)):
                    before_fail += 1
                    detail = detail or f"bad witness for ({x},{y})"
    ok = enum_fail == 0 and before_fail == 0
    return [
        CheckResult(
            f"enumeration equals brute-force filter on {len(posets)} posets, "
            "with greedy before-witnesses for every admissible pair",
            ok,
            detail or "exact set equality everywhere",
        )
    ]


def sweep_width2(max_n: int = 6):
    """Exhaustive width-2 balance sweep over labeled posets.

    Returns (instances, min_level, min_example_covers, below_third) where
    below_third lists any instance whose best balance level drops under 1/3.
    """
    total = 0
    min_level = None
    min_example = None
    below_third = []
    for n in range(2, max_n + 1):
        for p in generators.enumerate_labeled_posets(
            n, predicate=lambda q: q.width() == 2 and not q.is_chain(), limit=max_n
        ):
            total += 1
            report = balance_report(p)
            level = report.best_level.as_fraction()
            if min_level is None or level < min_level:
                min_level = level
                min_example = sorted(p.covers)
            if level < THIRD:
                below_third.append((sorted(p.covers), report.best_level))
    return total, min_level, min_example, below_third


def suite_width2(seed: int = 0, instances: int = 0, max_n: int = 6) -> list[CheckResult]:
    total, min_level, min_example, below_third = sweep_width2(max_n)
    results = [
        CheckResult(
            f"width-2 sweep ran over {total} labeled posets (n <= {max_n})",
            total > 0 and min_level is not None,
            f"minimum balance level {min_level} at covers {min_example}",
        )
    ]
    n_poset = build_poset(4, [(0, 1), (2, 1), (2, 3)])
    n_level = balance_report(n_poset).best_level.as_fraction()
    results.append(
        CheckResult(
            "the N achieves balance level exactly 1/3",
            n_level == THIRD,
            f"got {n_level}",
        )
    )
    # Instances under 1/3 are findings, not failures.
    results.append(
        CheckResult(
            "width-2 instances below 1/3 (reportable findings)",
            True,
            f"{len(below_third)} found" + (f": {below_third[:3]}" if below_third else ""),
        )
    )
    return results


def suite_autonomous_pairs(seed: int = 7, instances: int = 100, max_n: int = 6) -> list[CheckResult]:
    rng = random.Random(seed)
    failures = 0
    detail = ""
    for i in range(instances):
        n = rng.randint(1, max_n)
        base = generators.random_poset(n, rng.uniform(0.0, 0.8), rng.getrandbits(62))
        v = rng.randrange(n)
        # duplicate v as element n: an autonomous 2-element antichain {v, n}
        pairs = [(x, y) for x in range(n) for y in base.upper_set(x)]
        pairs += [(n, w) for w in base.upper_set(v)]
        pairs += [(w, n) for w in base.lower_set(v)]
        p = build_poset(n + 1, pairs)
        assert p.is_autonomous({v, n})
        ratio = gp_ratio(p, v, n)
        if ratio.as_fraction() != HALF:
            failures += 1
            detail = detail or f"instance {i}: ratio {ratio}"
    return [
        CheckResult(
            f"autonomous antichain pairs balance exactly 1/2 ({instances} instances)",
            failures == 0,
            detail or "all ratios exactly 1/2",
        )
    ]


SUITES = {
    "fig3": suite_fig3,
    "chains": suite_chain_corollary,
    "disjoint-sum": suite_disjoint_sum,
    "linear-sum": suite_linear_sum,
    "main-theorem": suite_main_theorem,
    "removal": suite_removal,
    "reversibility": suite_reversibility,
    "soundness": suite_soundness,
    "width2": suite_width2,
    "autonomous": suite_autonomous_pairs,
}


def run_suite(name: str, seed=None, instances=None, max_n=None) -> list[CheckResult]:
    fn = SUITES[name]
    kwargs = {}
    if seed is not None:
        kwargs["seed"] = seed
    if instances is not None:
        kwargs["instances"] = instances
    if max_n is not None:
        kwargs["max_n"] = max_n
    return fn(**kwargs)
