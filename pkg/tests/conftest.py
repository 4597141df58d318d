"""Shared brute-force oracles and random-sequence helpers.

The oracles enumerate index subsets explicitly and never touch the DP code
paths they are used to check.
"""

from __future__ import annotations

import itertools
import random

from zerosum import Group, Sequence


def flatten(seq: Sequence) -> list:
    out = []
    for el, m in seq.items():
        out.extend([el] * m)
    return out


def oracle_count(seq: Sequence, k: int) -> int:
    """Number of size-k index subsets summing to the identity, by enumeration."""
    els = flatten(seq)
    g = seq.group
    hits = 0
    for combo in itertools.combinations(range(len(els)), k):
        total = g.identity()
        for i in combo:
            total = g.add(total, els[i])
        if total == g.identity():
            hits += 1
    return hits


def oracle_exists(seq: Sequence, k: int) -> bool:
    els = flatten(seq)
    g = seq.group
    for combo in itertools.combinations(range(len(els)), k):
        total = g.identity()
        for i in combo:
            total = g.add(total, els[i])
        if total == g.identity():
            return True
    return False


def random_multiset(rng: random.Random, group: Group, length: int) -> Sequence:
    els = list(group.elements())
    counts: dict = {}
    for _ in range(length):
        e = rng.choice(els)
        counts[e] = counts.get(e, 0) + 1
    return Sequence(group, counts)


def random_zero_sum(rng: random.Random, group: Group, length: int) -> Sequence:
    """i.i.d. uniform elements with one completing element appended."""
    if length < 1:
        return Sequence(group, {})
    els = list(group.elements())
    counts: dict = {}
    total = group.identity()
    for _ in range(length - 1):
        e = rng.choice(els)
        counts[e] = counts.get(e, 0) + 1
        total = group.add(total, e)
    last = group.neg(total)
    counts[last] = counts.get(last, 0) + 1
    return Sequence(group, counts)
