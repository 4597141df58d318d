"""Zero-sum subsequence engine: existence, witnesses, and exact counts.

Detection runs a bounded-knapsack reachability DP over packed bitmasks; the
exact counter convolves per-element generating functions sum_j C(m,j) z^j
placed at j*e, with arbitrary-precision (or modular) coefficients.
"""

from __future__ import annotations

import math
from typing import Iterable

from ._bitdp import get_pack
from .groups import Element
from .sequences import Sequence, Witness


def _check_k(seq: Sequence, k: int) -> None:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k > seq.length:
        raise ValueError(f"k = {k} exceeds the sequence length {seq.length}")


def find_zero_sum_subseq(seq: Sequence, k: int) -> Witness | None:
    """A witness of exactly k elements summing to the identity, or None.

    Deterministic: elements are scanned in ascending order and each takes the
    smallest multiplicity that keeps the remainder solvable, so the witness is
    the lexicographically least viable multiplicity vector.
    """
    _check_k(seq, k)
    if k == 0:
        return Witness(seq.group, {})
    pack = get_pack(seq.group.moduli, k)
    items = seq.items()
    # Suffix reachability: suffix[i] covers items[i:].
    suffix = [pack.initial] * (len(items) + 1)
    for i in range(len(items) - 1, -1, -1):
        el, mult = items[i]
        suffix[i] = pack.add_copies(suffix[i + 1], el, mult)
    if not pack.has(suffix[0], k):
        return None
    counts: dict[Element, int] = {}
    need_count = k
    need_sum = 0  # index of the sum still required from the remaining items
    for i, (el, mult) in enumerate(items):
        for j in range(min(mult, need_count) + 1):
            rest_sum = pack.add_index(need_sum, el, times=-j)
            if pack.has(suffix[i + 1], need_count - j, rest_sum):
                if j:
                    counts[el] = j
                need_count -= j
                need_sum = rest_sum
                break
        if need_count == 0 and need_sum == 0:
            break
    assert need_count == 0 and need_sum == 0
    witness = Witness(seq.group, counts)
    witness.validate_against(seq, size=k)
    return witness


def has_zero_sum_of_length(seq: Sequence, k: int) -> bool:
    """Existence only; skips witness reconstruction."""
    _check_k(seq, k)
    if k == 0:
        return True
    pack = get_pack(seq.group.moduli, k)
    mask = pack.initial
    for el, mult in seq.items():
        mask = pack.add_copies(mask, el, mult)
    return pack.has(mask, k)


def has_zero_sum_in_lengths(seq: Sequence, lengths: Iterable[int] | int) -> bool:
    """True when some k in the target set admits a zero-sum subsequence.

    Accepts a single target or any iterable of them. Lengths beyond the
    sequence length cannot occur and are skipped. One DP pass covers every
    target at once.
    """
    if isinstance(lengths, int):
        lengths = (lengths,)
    targets = sorted(set(lengths))
    if any(k < 0 for k in targets):
        raise ValueError(f"target lengths must be >= 0: {targets}")
    targets = [k for k in targets if k <= seq.length]
    if not targets:
        return False
    if targets[0] == 0:
        return True
    pack = get_pack(seq.group.moduli, targets[-1])
    mask = pack.initial
    for el, mult in seq.items():
        mask = pack.add_copies(mask, el, mult)
    return any(pack.has(mask, k) for k in targets)


def count_zero_sum_subseqs(seq: Sequence, k: int, modulus: int | None = None) -> int:
    """The number of size-k index subsets summing to the identity.

    Multiplicities contribute binomial factors, so this counts subsets of
    positions, not distinct sub-multisets. With `modulus` every coefficient is
    reduced, which is enough for congruence checks and keeps integers small.
    """
    _check_k(seq, k)
    if modulus is not None and modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    pack = get_pack(seq.group.moduli, k)
    order = pack.order
    if (k + 1) * order > 5 * 10**7:
        raise ValueError(
            f"counting table of {(k + 1) * order} cells (|G| = {order}, k = {k}) "
            "exceeds the supported size"
        )
    table = [[0] * order for _ in range(k + 1)]
    table[0][0] = 1
    for el, mult in seq.items():
        jmax = min(mult, k)
        binom = [math.comb(mult, j) for j in range(jmax + 1)]
        if modulus is not None:
            binom = [b % modulus for b in binom]
        # perm[j][g] = index of g + j*el
        perm = [
            [pack.add_index(g, el, times=j) for g in range(order)]
            for j in range(jmax + 1)
        ]
        new = [[0] * order for _ in range(k + 1)]
        for c in range(k + 1):
            row = table[c]
            top = min(jmax, k - c)
            for g in range(order):
                v = row[g]
                if v:
                    for j in range(top + 1):
                        new[c + j][perm[j][g]] += binom[j] * v
        if modulus is not None:
            for c in range(k + 1):
                new[c] = [v % modulus for v in new[c]]
        table = new
    return table[k][0]
