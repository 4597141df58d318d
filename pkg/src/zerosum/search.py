"""Closed-form constants, exhaustive multiset searches, and theorem checks.

The brute-force determination scans sequence lengths upward. For each length
it must decide whether every zero-sum multiset of that size contains a
zero-sum subsequence of the target length. That universal verdict is computed
by a depth-first search over multiplicity vectors which maintains the packed
reachability mask of the prefix: as soon as the prefix itself contains a
witness, every completion does too, so the whole subtree is resolved without
being enumerated. Only witness-free prefixes are ever expanded, which keeps
the search tree tiny compared to the raw multiset count. Failures are
reported in colex order of the multiplicity vector, so results do not depend
on how the work is partitioned across workers.
"""

from __future__ import annotations

import math
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence as Seq

from ._bitdp import get_pack
from .engine import count_zero_sum_subseqs, find_zero_sum_subseq, has_zero_sum_of_length
from .extractors import extract_square_3n
from .groups import Element, Group, make_group, min_nondivisor
from .sequences import Sequence, canonicalize, serialize_sequence


# ---------------------------------------------------------------------------
# Closed-form values


def formula_modified_cyclic(n: int, t: int) -> int:
    """(t+1)n - l + 1 with l the least non-divisor of n."""
    if n < 1 or t < 1:
        raise ValueError(f"need n >= 1 and t >= 1, got n={n}, t={t}")
    return (t + 1) * n - min_nondivisor(n, 1) + 1


def formula_modified_square(n: int) -> int:
    """4n - l + 1 with l the least non-divisor of n that is >= 4."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return 4 * n - min_nondivisor(n, 4) + 1


def harborth_bounds(n: int, r: int) -> tuple[int, int]:
    """((n-1) 2^r + 1, (n-1) n^r + 1): bounds for the unrestricted constant."""
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    return (n - 1) * 2**r + 1, (n - 1) * n**r + 1


def conjecture_value(n: int, r: int) -> int:
    """2^r n - l + 1 with l the least non-divisor of n that is >= 2^r.

    Only defined for n a power of two.
    """
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    if n & (n - 1):
        raise ValueError(f"n must be a power of 2, got {n}")
    return 2**r * n - min_nondivisor(n, 2**r) + 1


# ---------------------------------------------------------------------------
# Budgets and stats


@dataclass
class SearchBudget:
    """Abort limits for exhaustive work; whichever trips first wins."""

    max_nodes: int = 10**8
    max_seconds: float = 900.0


class BudgetExceeded(RuntimeError):
    """Raised when a search runs out of its node or wall-clock budget."""


@dataclass
class SearchStats:
    nodes_visited: int = 0
    sequences_checked: int = 0
    wall_ms: int = 0

    def to_jsonable(self) -> dict:
        return {
            "nodes_visited": self.nodes_visited,
            "sequences_checked": self.sequences_checked,
            "wall_ms": self.wall_ms,
        }


@dataclass
class EnumerationStats:
    visited: int = 0
    nodes: int = 0
    wall_ms: int = 0


@dataclass(frozen=True)
class EnumerationTask:
    """One partition of a multiset enumeration: a range of outermost
    multiplicities (inclusive), in colex order of multiplicity vectors."""

    moduli: tuple[int, ...]
    length: int
    zero_sum_only: bool = True
    symmetry: bool = False
    outer_range: tuple[int, int] | None = None


# ---------------------------------------------------------------------------
# Plain enumeration with a visitor (no pruning)


def _group_elements(moduli: tuple[int, ...]) -> list[Element]:
    pack = get_pack(moduli, 0)
    return [pack.coords_of(i) for i in range(pack.order)]


def enumerate_multisets(
    group: Group,
    length: int,
    visitor: Callable[[Sequence], None],
    *,
    zero_sum_only: bool = True,
    symmetry: bool = False,
    outer_range: tuple[int, int] | None = None,
    budget: SearchBudget | None = None,
) -> EnumerationStats:
    """Invoke the visitor once per multiset of the given size, in colex order
    of multiplicity vectors (identity element varying fastest is implied by
    the colex convention: the outermost loop is the last element).

    With zero_sum_only, only zero-sum multisets are visited; with symmetry,
    only canonical orbit representatives.
    """
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.max_seconds
    start = time.monotonic()
    moduli = group.moduli
    elems = _group_elements(moduli)
    order = len(elems)
    rank = len(moduli)
    stats = EnumerationStats()
    sys.setrecursionlimit(max(sys.getrecursionlimit(), order + 200))
    mults = [0] * order

    def emit(budget_left: int, scoords: tuple[int, ...]) -> None:
        if zero_sum_only and any(scoords):
            return
        mults[0] = budget_left
        seq = Sequence(group, {elems[i]: m for i, m in enumerate(mults) if m})
        if symmetry and canonicalize(seq) != seq:
            return
        stats.visited += 1
        visitor(seq)

    def rec(i: int, budget_left: int, scoords: tuple[int, ...]) -> None:
        stats.nodes += 1
        if stats.nodes > budget.max_nodes or time.monotonic() > deadline:
            raise BudgetExceeded(
                f"enumeration aborted after {stats.nodes} nodes, {stats.visited} visited"
            )
        if i == 0:
            emit(budget_left, scoords)
            return
        lo, hi = 0, budget_left
        if i == order - 1 and outer_range is not None:
            lo, hi = outer_range
            hi = min(hi, budget_left)
        ec = elems[i]
        for j in range(lo, hi + 1):
            mults[i] = j
            sc = tuple((c + j * e) % m for c, e, m in zip(scoords, ec, moduli))
            rec(i - 1, budget_left - j, sc)
        mults[i] = 0

    if order == 1:
        stats.nodes += 1
        lo, hi = outer_range if outer_range is not None else (0, length)
        if lo <= length <= hi:
            emit(length, (0,) * rank)
    else:
        rec(order - 1, length, (0,) * rank)
    stats.wall_ms = int((time.monotonic() - start) * 1000)
    return stats


def enumerate_zero_sum_multisets(
    group: Group,
    length: int,
    visitor: Callable[[Sequence], None],
    *,
    symmetry: bool = False,
    outer_range: tuple[int, int] | None = None,
    budget: SearchBudget | None = None,
) -> EnumerationStats:
    """Visit every zero-sum multiset of the given size (or one canonical
    representative per orbit when symmetry is set)."""
    return enumerate_multisets(
        group,
        length,
        visitor,
        zero_sum_only=True,
        symmetry=symmetry,
        outer_range=outer_range,
        budget=budget,
    )


def make_enumeration_tasks(
    group: Group,
    length: int,
    parts: int,
    *,
    zero_sum_only: bool = True,
    symmetry: bool = False,
) -> list[EnumerationTask]:
    """Disjoint covering partition of the enumeration by outermost multiplicity."""
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    if group.order == 1:
        return [EnumerationTask(group.moduli, length, zero_sum_only, symmetry, None)]
    values = length + 1
    parts = min(parts, values)
    bounds = [round(i * values / parts) for i in range(parts + 1)]
    tasks = []
    for lo, hi in zip(bounds, bounds[1:]):
        if lo < hi:
            tasks.append(
                EnumerationTask(
                    group.moduli, length, zero_sum_only, symmetry, (lo, hi - 1)
                )
            )
    return tasks


def run_enumeration_task(
    task: EnumerationTask,
    visitor: Callable[[Sequence], None],
    budget: SearchBudget | None = None,
) -> EnumerationStats:
    group = make_group(task.moduli)
    return enumerate_multisets(
        group,
        task.length,
        visitor,
        zero_sum_only=task.zero_sum_only,
        symmetry=task.symmetry,
        outer_range=task.outer_range,
        budget=budget,
    )


# ---------------------------------------------------------------------------
# Pruned universal-verdict scan (the brute-force core)


def _probe_chunk(args: tuple) -> tuple[tuple[int, ...] | None, int, int]:
    """Search one outer-multiplicity branch for a multiset of the given size
    with no witness of the target length (and, optionally, zero total sum).

    Returns (first failing multiplicity vector in colex order or None,
    nodes expanded, complete multisets examined). Pure function of its
    arguments, so results are independent of scheduling.
    """
    moduli, target, length, zero_sum_only, outer_value, max_nodes, deadline = args
    pack = get_pack(moduli, target)
    order = pack.order
    rank = pack.rank
    elems = [pack.coords_of(i) for i in range(order)]
    parts = [pack.element_parts(e) for e in elems]
    full = pack.full
    probe_top = 1 << (target * order)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), order + 200))

    nodes = 0
    leaves = 0
    fail: tuple[int, ...] | None = None
    mults = [0] * order

    def leaf(budget_left: int, scoords: tuple[int, ...], mask: int) -> None:
        nonlocal leaves, fail
        leaves += 1
        if zero_sum_only and any(scoords):
            return
        for j in range(min(budget_left, target) + 1):
            if (mask >> ((target - j) * order)) & 1:
                return
        mults[0] = budget_left
        fail = tuple(mults)

    def grow(mask: int, i: int) -> int:
        """One more copy of element i folded into the packed reachability."""
        moved = (mask << order) & full
        for lo, up, down, lod in parts[i]:
            moved = ((moved & lo) << up) | ((moved >> down) & lod)
        return mask | moved

    def dfs(i: int, budget_left: int, scoords: tuple[int, ...], mask: int) -> None:
        nonlocal nodes
        if i == 0:
            leaf(budget_left, scoords, mask)
            return
        mults[i] = 0
        dfs(i - 1, budget_left, scoords, mask)
        if fail is not None:
            return
        ec = elems[i]
        sc = list(scoords)
        cur = mask
        for j in range(1, budget_left + 1):
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceeded(f"node budget exhausted at {nodes} nodes")
            if not nodes & 0x3FF and time.monotonic() > deadline:
                raise BudgetExceeded("wall-clock budget exhausted")
            cur = grow(cur, i)
            if cur & probe_top:
                break  # prefix already has a witness: subtree has no failures
            for a in range(rank):
                sc[a] = (sc[a] + ec[a]) % moduli[a]
            mults[i] = j
            dfs(i - 1, budget_left - j, tuple(sc), cur)
            if fail is not None:
                return
        mults[i] = 0

    if order == 1:
        leaf(length, (0,) * rank, pack.initial)
        return fail, nodes, leaves

    top = order - 1
    mask = pack.initial
    pruned = False
    for j in range(outer_value):
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(f"node budget exhausted at {nodes} nodes")
        mask = grow(mask, top)
        if mask & probe_top:
            pruned = True
            break
    if not pruned:
        mults[top] = outer_value
        sc = tuple(
            (outer_value * e) % m for e, m in zip(elems[top], moduli)
        )
        dfs(top - 1, length - outer_value, sc, mask)
    return fail, nodes, leaves


def _probe_length(
    moduli: tuple[int, ...],
    target: int,
    length: int,
    zero_sum_only: bool,
    pool: ProcessPoolExecutor | None,
    max_nodes: int,
    deadline: float,
) -> tuple[tuple[int, ...] | None, int, int]:
    """Universal verdict for one length, partitioned by outer multiplicity.

    The partition is the same regardless of worker count, and each branch is
    searched exhaustively up to its own first failure, so the aggregated
    verdict, failing vector, and node counts are scheduling-independent.
    """
    order = math.prod(moduli)
    if order == 1:
        tasks = [(moduli, target, length, zero_sum_only, 0, max_nodes, deadline)]
    else:
        tasks = [
            (moduli, target, length, zero_sum_only, v, max_nodes, deadline)
            for v in range(length + 1)
        ]
    if pool is None:
        results = [_probe_chunk(t) for t in tasks]
    else:
        results = list(pool.map(_probe_chunk, tasks))
    nodes = sum(r[1] for r in results)
    leaves = sum(r[2] for r in results)
    fail = next((r[0] for r in results if r[0] is not None), None)
    return fail, nodes, leaves


def _mults_to_sequence(group: Group, mults: tuple[int, ...]) -> Sequence:
    elems = _group_elements(group.moduli)
    return Sequence(group, {elems[i]: m for i, m in enumerate(mults) if m})


# ---------------------------------------------------------------------------
# Reports


TAIL_NOTE = (
    "all-lengths-at-least-v quantifier verified only on the finite window; "
    "larger lengths rest on the closed-form theorems"
)


@dataclass
class ConstantReport:
    """Outcome of one brute-force constant determination."""

    group: str
    target: int
    claimed_value: int | None
    computed_value: int
    extremal_witness: str
    window: tuple[int, int]
    stats: SearchStats
    note: str = TAIL_NOTE

    @property
    def discrepancy(self) -> bool:
        return self.claimed_value is not None and self.claimed_value != self.computed_value

    @property
    def ok(self) -> bool:
        return not self.discrepancy

    def to_jsonable(self) -> dict:
        return {
            "type": "constant",
            "group": self.group,
            "target": self.target,
            "claimed_value": self.claimed_value,
            "computed_value": self.computed_value,
            "status": "DISCREPANCY" if self.discrepancy else "OK",
            "extremal_witness": self.extremal_witness,
            "window_lo": self.window[0],
            "window_hi": self.window[1],
            "stats": self.stats.to_jsonable(),
            "note": self.note,
        }


@dataclass
class PropertyReport:
    """Outcome of one property-style check (exhaustive or sampled)."""

    name: str
    params: dict
    passed: bool
    checked: int
    violations: int
    vacuous: int | None = None
    counterexample: str | None = None
    wall_ms: int = 0
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.passed

    def to_jsonable(self) -> dict:
        return {
            "type": "property",
            "name": self.name,
            "params": dict(sorted(self.params.items())),
            "passed": self.passed,
            "checked": self.checked,
            "violations": self.violations,
            "vacuous": self.vacuous,
            "counterexample": self.counterexample,
            "wall_ms": self.wall_ms,
            "note": self.note,
        }


def reports_to_csv(reports: Iterable[ConstantReport | PropertyReport]) -> str:
    """CSV summary; constant reports use the stable canonical columns."""
    import csv
    import io

    out = io.StringIO()
    reports = list(reports)
    if all(isinstance(r, ConstantReport) for r in reports):
        writer = csv.writer(out)
        writer.writerow(
            [
                "group",
                "t",
                "claimed",
                "computed",
                "window_lo",
                "window_hi",
                "witness",
                "wall_ms",
                "sequences_checked",
            ]
        )
        for r in reports:
            writer.writerow(
                [
                    r.group,
                    r.target,
                    "" if r.claimed_value is None else r.claimed_value,
                    r.computed_value,
                    r.window[0],
                    r.window[1],
                    r.extremal_witness,
                    r.stats.wall_ms,
                    r.stats.sequences_checked,
                ]
            )
    else:
        writer = csv.writer(out)
        writer.writerow(["name", "params", "passed", "checked", "violations", "wall_ms"])
        for r in reports:
            if isinstance(r, ConstantReport):
                writer.writerow([r.group, f"t={r.target}", r.ok, "", "", r.stats.wall_ms])
            else:
                params = ";".join(f"{k}={v}" for k, v in sorted(r.params.items()))
                writer.writerow([r.name, params, r.passed, r.checked, r.violations, r.wall_ms])
    return out.getvalue()


# ---------------------------------------------------------------------------
# Brute-force constant determination


def brute_force_modified_constant(
    group: Group,
    t: int,
    window: int = 2,
    budget: SearchBudget | None = None,
    workers: int = 1,
    claimed_value: int | None = None,
    pool: ProcessPoolExecutor | None = None,
) -> ConstantReport:
    """Smallest v such that every zero-sum multiset of each length in
    [v, v + window] has a zero-sum subsequence of length t, while some
    zero-sum multiset of length v - 1 has none (recorded as the extremal
    witness). The infinite tail beyond the window is not searched; the
    report says so.
    """
    if t < 1:
        raise ValueError(f"target length must be >= 1, got {t}")
    if window < 0:
        raise ValueError(f"window must be >= 0, got {window}")
    budget = budget or SearchBudget()
    start = time.monotonic()
    deadline = start + budget.max_seconds
    stats = SearchStats()
    own_pool = pool is None and workers > 1
    if own_pool:
        pool = ProcessPoolExecutor(max_workers=workers)
    # Length 0 always fails for t >= 1: the empty sequence is zero-sum and has
    # no length-t subsequence.
    last_fail = 0
    last_fail_vec: tuple[int, ...] | None = None
    try:
        length = 1
        while True:
            remaining = budget.max_nodes - stats.nodes_visited
            if remaining <= 0 or time.monotonic() > deadline:
                raise BudgetExceeded(
                    f"budget exhausted before determination "
                    f"(scanned lengths 1..{length - 1} of {group}, t={t})"
                )
            fail_vec, nodes, leaves = _probe_length(
                group.moduli, t, length, True, pool, remaining, deadline
            )
            stats.nodes_visited += nodes
            stats.sequences_checked += leaves
            if fail_vec is not None:
                last_fail = length
                last_fail_vec = fail_vec
            elif length - last_fail == window + 1:
                break
            length += 1
    finally:
        if own_pool:
            pool.shutdown()
    computed = last_fail + 1
    if last_fail_vec is None:
        witness = Sequence(group, {})
    else:
        witness = _mults_to_sequence(group, last_fail_vec)
    stats.wall_ms = int((time.monotonic() - start) * 1000)
    return ConstantReport(
        group=str(group),
        target=t,
        claimed_value=claimed_value,
        computed_value=computed,
        extremal_witness=serialize_sequence(witness),
        window=(computed, computed + window),
        stats=stats,
    )


# ---------------------------------------------------------------------------
# Universal-witness checks (whole-length properties)


def check_all_have_witness(
    group: Group,
    size: int,
    target: int,
    *,
    zero_sum_only: bool,
    name: str,
    budget: SearchBudget | None = None,
    pool: ProcessPoolExecutor | None = None,
) -> PropertyReport:
    """Every multiset of the given size (zero-sum ones only, if asked) over
    the group must contain a zero-sum subsequence of the target length."""
    budget = budget or SearchBudget()
    start = time.monotonic()
    fail_vec, nodes, leaves = _probe_length(
        group.moduli,
        target,
        size,
        zero_sum_only,
        pool,
        budget.max_nodes,
        start + budget.max_seconds,
    )
    counterexample = None
    if fail_vec is not None:
        counterexample = serialize_sequence(_mults_to_sequence(group, fail_vec))
    return PropertyReport(
        name=name,
        params={"group": str(group), "size": size, "target": target},
        passed=fail_vec is None,
        checked=leaves,
        violations=0 if fail_vec is None else 1,
        counterexample=counterexample,
        wall_ms=int((time.monotonic() - start) * 1000),
        note="exhaustive over multisets" if zero_sum_only is False else "exhaustive over zero-sum multisets",
    )


# ---------------------------------------------------------------------------
# Congruence lemma check


def _random_multiset(rng: random.Random, order: int, size: int) -> list[int]:
    """Uniform multiplicity vector of the given total via stars and bars."""
    if order == 1:
        return [size]
    bars = sorted(rng.sample(range(size + order - 1), order - 1))
    mults = []
    prev = -1
    for b in bars:
        mults.append(b - prev - 1)
        prev = b
    mults.append(size + order - 2 - prev)
    return mults


def check_lemma_por2p(
    p: int,
    mode: str = "exhaustive",
    count: int = 10000,
    seed: int = 0,
    budget: SearchBudget | None = None,
) -> PropertyReport:
    """Over (Z/p)^2 at sizes 3p-2 and 3p-1: when no p-subset sums to zero,
    the number of 2p-subsets summing to zero is p - 1 mod p.

    Exhaustive mode enumerates every multiset of both sizes (p = 2 only);
    sample mode draws uniform multisets until `count` of them satisfy the
    hypothesis at each size.
    """
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"mode must be 'exhaustive' or 'sample', got {mode!r}")
    if mode == "exhaustive" and p != 2:
        raise ValueError("exhaustive mode is only supported for p = 2")
    budget = budget or SearchBudget()
    start = time.monotonic()
    group = make_group([p, p])
    sizes = (3 * p - 2, 3 * p - 1)
    tested = 0
    vacuous = 0
    violations = 0
    counterexample = None

    def check_one(seq: Sequence) -> None:
        nonlocal tested, vacuous, violations, counterexample
        tested += 1
        if max(seq.counts.values(), default=0) >= p or has_zero_sum_of_length(seq, p):
            vacuous += 1
            return
        residue = count_zero_sum_subseqs(seq, 2 * p, modulus=p)
        if residue != p - 1:
            violations += 1
            if counterexample is None:
                counterexample = serialize_sequence(seq)

    if mode == "exhaustive":
        for size in sizes:
            enumerate_multisets(
                group, size, check_one, zero_sum_only=False, budget=budget
            )
    else:
        rng = random.Random(seed)
        elems = _group_elements(group.moduli)
        deadline = start + budget.max_seconds
        for size in sizes:
            accepted = 0
            attempts = 0
            while accepted < count:
                attempts += 1
                if attempts > budget.max_nodes or time.monotonic() > deadline:
                    raise BudgetExceeded(
                        f"sampling budget exhausted at size {size}: "
                        f"{accepted}/{count} hypothesis cases after {attempts} draws"
                    )
                mults = _random_multiset(rng, group.order, size)
                tested += 1
                if max(mults) >= p:
                    vacuous += 1  # p equal elements already sum to zero
                    continue
                seq = Sequence(group, {elems[i]: m for i, m in enumerate(mults) if m})
                if has_zero_sum_of_length(seq, p):
                    vacuous += 1
                    continue
                accepted += 1
                residue = count_zero_sum_subseqs(seq, 2 * p, modulus=p)
                if residue != p - 1:
                    violations += 1
                    if counterexample is None:
                        counterexample = serialize_sequence(seq)

    return PropertyReport(
        name="por2p",
        params={"p": p, "mode": mode, "sizes": list(sizes), "count": count if mode == "sample" else None},
        passed=violations == 0,
        checked=tested - vacuous,
        violations=violations,
        vacuous=vacuous,
        counterexample=counterexample,
        wall_ms=int((time.monotonic() - start) * 1000),
        note="hypothesis cases counted; vacuous = some p-subset sums to zero",
    )


# ---------------------------------------------------------------------------
# Recursive-lemma check at length 3n


def _check_3n_sequence(seq: Sequence, n: int) -> str | None:
    """Engine and proof-following extractor must both produce valid witnesses."""
    w_engine = find_zero_sum_subseq(seq, n)
    if w_engine is None:
        return f"engine found no witness in {serialize_sequence(seq)}"
    w_engine.validate_against(seq, size=n)
    w_proof = extract_square_3n(seq)
    w_proof.validate_against(seq, size=n)
    return None


def check_lemma_3n(
    n: int,
    samples: int = 1000,
    seed: int = 0,
    budget: SearchBudget | None = None,
) -> PropertyReport:
    """Zero-sum multisets of size 3n over (Z/n)^2 always yield a length-n
    witness, and the block-recursive extractor succeeds on each of them.

    Exhaustive when the instance space is desk-sized (n <= 3), sampled
    otherwise.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    budget = budget or SearchBudget()
    start = time.monotonic()
    group = make_group([n, n])
    checked = 0
    violations = 0
    counterexample = None
    exhaustive = n <= 3

    def run_one(seq: Sequence) -> None:
        nonlocal checked, violations, counterexample
        checked += 1
        problem = _check_3n_sequence(seq, n)
        if problem is not None:
            violations += 1
            if counterexample is None:
                counterexample = problem

    if exhaustive:
        enumerate_zero_sum_multisets(group, 3 * n, run_one, budget=budget)
    else:
        rng = random.Random(seed)
        elems = _group_elements(group.moduli)
        deadline = start + budget.max_seconds
        attempts = 0
        while checked < samples:
            attempts += 1
            if attempts > budget.max_nodes or time.monotonic() > deadline:
                raise BudgetExceeded(f"sampling budget exhausted after {attempts} draws")
            mults = _random_multiset(rng, group.order, 3 * n)
            seq = Sequence(group, {elems[i]: m for i, m in enumerate(mults) if m})
            if not seq.is_zero_sum():
                continue
            run_one(seq)

    return PropertyReport(
        name="lemma3n",
        params={"n": n, "mode": "exhaustive" if exhaustive else "sample", "samples": None if exhaustive else samples},
        passed=violations == 0,
        checked=checked,
        violations=violations,
        counterexample=counterexample,
        wall_ms=int((time.monotonic() - start) * 1000),
        note="engine witness and block-recursive extractor both validated",
    )


# ---------------------------------------------------------------------------
# Theorem suites


def verify_theorem(
    suite: str,
    *,
    n_values: Seq[int] | None = None,
    t_values: Seq[int] | None = None,
    window: int = 2,
    budget: SearchBudget | None = None,
    workers: int = 1,
    seed: int = 0,
    samples: int | None = None,
) -> list[ConstantReport | PropertyReport]:
    """Run one named verification suite and return its reports.

    cyclic      brute-force s' over Z/n at target n*t versus the closed form
    square      brute-force s' over (Z/n)^2 at target n versus the closed form
    egz         every multiset of size 2n-1 over Z/n has a length-n witness
    reiher      every multiset of size 4n-3 over (Z/n)^2 has a length-n witness
    lemma3n     zero-sum multisets of size 3n over (Z/n)^2, engine + extractor
    por2p       the mod-p congruence between p- and 2p-subset counts
    conjecture  brute-force s' over (Z/2)^r at target 2 versus the conjecture value
    """
    budget = budget or SearchBudget()
    pool: ProcessPoolExecutor | None = None
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
    try:
        if suite == "cyclic":
            ns = list(n_values) if n_values is not None else list(range(2, 7))
            ts = list(t_values) if t_values is not None else [1]
            return [
                brute_force_modified_constant(
                    make_group([n]),
                    n * t,
                    window=window,
                    budget=budget,
                    claimed_value=formula_modified_cyclic(n, t),
                    pool=pool,
                )
                for t in ts
                for n in ns
            ]
        if suite == "square":
            ns = list(n_values) if n_values is not None else [2, 3]
            return [
                brute_force_modified_constant(
                    make_group([n, n]),
                    n,
                    window=window,
                    budget=budget,
                    claimed_value=formula_modified_square(n),
                    pool=pool,
                )
                for n in ns
            ]
        if suite == "egz":
            ns = list(n_values) if n_values is not None else list(range(2, 11))
            return [
                check_all_have_witness(
                    make_group([n]),
                    2 * n - 1,
                    n,
                    zero_sum_only=False,
                    name="egz",
                    budget=budget,
                    pool=pool,
                )
                for n in ns
            ]
        if suite == "reiher":
            ns = list(n_values) if n_values is not None else [2, 3]
            return [
                check_all_have_witness(
                    make_group([n, n]),
                    4 * n - 3,
                    n,
                    zero_sum_only=False,
                    name="reiher",
                    budget=budget,
                    pool=pool,
                )
                for n in ns
            ]
        if suite == "lemma3n":
            ns = list(n_values) if n_values is not None else [2, 3, 4, 6]
            return [
                check_lemma_3n(n, samples=samples or 1000, seed=seed, budget=budget)
                for n in ns
            ]
        if suite == "por2p":
            ps = list(n_values) if n_values is not None else [2, 3]
            reports = []
            for p in ps:
                mode = "exhaustive" if p == 2 else "sample"
                reports.append(
                    check_lemma_por2p(
                        p, mode=mode, count=samples or 10000, seed=seed, budget=budget
                    )
                )
            return reports
        if suite == "conjecture":
            rs = list(n_values) if n_values is not None else [1, 2, 3]
            return [
                brute_force_modified_constant(
                    make_group([2] * r),
                    2,
                    window=window,
                    budget=budget,
                    claimed_value=conjecture_value(2, r),
                    pool=pool,
                )
                for r in rs
            ]
        raise ValueError(f"unknown suite {suite!r}")
    finally:
        if pool is not None:
            pool.shutdown()
