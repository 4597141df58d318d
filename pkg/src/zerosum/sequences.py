"""Multiset sequences of group elements, their serialization, and symmetry tools."""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Mapping

from .groups import Element, Group, GroupParseError, parse_group

_TOKEN_RE = re.compile(r"(\([^()]*\)|[+-]?\d+)(?:\s*\^\s*([+-]?\d+))?")


class SequenceParseError(GroupParseError):
    """Raised for malformed sequence text or JSON."""


class Sequence:
    """A finite multiset of group elements, stored as element -> multiplicity.

    Sequences are immutable values: every operation returns a new instance.
    Length and total sum are computed once and cached.
    """

    __slots__ = ("group", "counts", "length", "total_sum")

    def __init__(self, group: Group, counts: Mapping[Element, int], lenient: bool = False):
        clean: dict[Element, int] = {}
        for el, mult in counts.items():
            el = tuple(el)
            if lenient:
                el = group.reduce(el)
            elif not group.contains(el):
                raise ValueError(f"{el!r} is not an element of {group}")
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise ValueError(f"multiplicity for {el!r} must be >= 1, got {mult!r}")
            clean[el] = clean.get(el, 0) + mult
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "counts", dict(sorted(clean.items())))
        object.__setattr__(self, "length", sum(clean.values()))
        total = group.identity()
        for el, mult in clean.items():
            total = group.add(total, group.scale(el, mult))
        object.__setattr__(self, "total_sum", total)

    def __setattr__(self, name, value):
        raise AttributeError("Sequence is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Sequence)
            and self.group == other.group
            and self.counts == other.counts
        )

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return f"Sequence({serialize_sequence(self)!r})"

    def items(self) -> list[tuple[Element, int]]:
        """(element, multiplicity) pairs in ascending element order."""
        return list(self.counts.items())

    def is_zero_sum(self) -> bool:
        return self.total_sum == self.group.identity()

    def shift_all(self, c: Element) -> "Sequence":
        """Add c to every term, keeping multiplicities."""
        g = self.group
        g._check(c)
        return Sequence(g, {g.add(el, c): m for el, m in self.counts.items()})

    def contains_multiset(self, other: Mapping[Element, int]) -> bool:
        return all(self.counts.get(el, 0) >= m for el, m in other.items())

    def remove_witness(self, w: "Witness") -> "Sequence":
        """Remove a contained sub-multiset; drops zero-multiplicity keys."""
        if w.group != self.group:
            raise ValueError("witness group does not match sequence group")
        if not self.contains_multiset(w.counts):
            raise ValueError("witness is not contained in the sequence")
        counts = dict(self.counts)
        for el, m in w.counts.items():
            counts[el] -= m
            if counts[el] == 0:
                del counts[el]
        return Sequence(self.group, counts)


class Witness(Sequence):
    """A sub-multiset certifying a zero-sum subsequence; always sums to identity."""

    __slots__ = ()

    def __init__(self, group: Group, counts: Mapping[Element, int]):
        super().__init__(group, counts)
        if not self.is_zero_sum():
            raise ValueError(f"witness does not sum to the identity: {self.counts}")

    def validate_against(self, parent: Sequence, size: int | None = None) -> None:
        """Check containment in the parent and, optionally, the exact size."""
        if parent.group != self.group:
            raise ValueError("witness group does not match parent group")
        if not parent.contains_multiset(self.counts):
            raise ValueError("witness exceeds parent multiplicities")
        if size is not None and self.length != size:
            raise ValueError(f"witness has length {self.length}, expected {size}")


def _format_element(el: Element) -> str:
    if len(el) == 1:
        return str(el[0])
    return "(" + ",".join(str(c) for c in el) + ")"


def serialize_sequence(seq: Sequence) -> str:
    """Canonical text form: "<group>: <elem>^<mult> ..." with ^1 omitted."""
    body = " ".join(
        _format_element(el) + (f"^{m}" if m > 1 else "")
        for el, m in seq.counts.items()
    )
    return f"{seq.group}: {body}" if body else f"{seq.group}:"


def parse_elements(group: Group, text: str, lenient: bool = False) -> Sequence:
    """Parse the element body of a sequence ("1^4 2^4" or "(0,1) (1,0)^2")."""
    counts: dict[Element, int] = {}
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise SequenceParseError(f"unexpected text {text[pos:m.start()]!r}")
        pos = m.end()
        token, mult_text = m.group(1), m.group(2)
        mult = int(mult_text) if mult_text is not None else 1
        if mult < 1:
            raise SequenceParseError(f"multiplicity must be >= 1, got {mult}")
        if token.startswith("("):
            inner = token[1:-1].strip()
            if not inner:
                raise SequenceParseError(f"empty element tuple in {token!r}")
            coords = tuple(int(p) for p in inner.split(","))
        else:
            coords = (int(token),)
        if len(coords) != group.rank:
            raise SequenceParseError(
                f"element {token!r} has {len(coords)} coordinates, group {group} has rank {group.rank}"
            )
        if lenient:
            coords = group.reduce(coords)
        elif not group.contains(coords):
            raise SequenceParseError(f"element {token!r} out of range for {group}")
        counts[coords] = counts.get(coords, 0) + mult
    if text[pos:].strip():
        raise SequenceParseError(f"unexpected trailing text {text[pos:]!r}")
    return Sequence(group, counts)


def parse_sequence(text: str, lenient: bool = False) -> Sequence:
    """Parse the full text form "<group>: <elements>". Round-trips serialize."""
    if ":" not in text:
        raise SequenceParseError("expected '<group>: <elements>'")
    group_text, body = text.split(":", 1)
    group = parse_group(group_text)
    return parse_elements(group, body, lenient=lenient)


def sequence_to_jsonable(seq: Sequence) -> dict:
    """JSON form: moduli plus [coords, mult] pairs sorted by coords."""
    return {
        "group": {"moduli": list(seq.group.moduli)},
        "counts": [[list(el), m] for el, m in seq.counts.items()],
    }


def sequence_from_jsonable(data: dict, lenient: bool = False) -> Sequence:
    from .groups import make_group

    try:
        moduli = data["group"]["moduli"]
        pairs = data["counts"]
    except (KeyError, TypeError) as exc:
        raise SequenceParseError(f"malformed sequence JSON: {exc}") from exc
    group = make_group(moduli)
    counts: dict[Element, int] = {}
    for coords, mult in pairs:
        counts[tuple(coords)] = counts.get(tuple(coords), 0) + int(mult)
    return Sequence(group, counts, lenient=lenient)


def _units(m: int) -> tuple[int, ...]:
    if m == 1:
        return (1,)
    return tuple(u for u in range(1, m) if math.gcd(u, m) == 1)


def group_automorphisms(group: Group) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The implemented automorphism subgroup: per-coordinate unit scalings
    composed with permutations of coordinates that share a modulus.

    Returned as (units, perm) pairs; the image of x has coordinate j equal to
    units[perm[j]] * x[perm[j]] mod moduli[j].
    """
    by_modulus: dict[int, list[int]] = {}
    for i, m in enumerate(group.moduli):
        by_modulus.setdefault(m, []).append(i)
    perm_groups = []
    for positions in by_modulus.values():
        perm_groups.append(list(itertools.permutations(positions)))
    perms: list[tuple[int, ...]] = []
    for combo in itertools.product(*perm_groups):
        perm = [0] * group.rank
        for positions, permuted in zip(by_modulus.values(), combo):
            for slot, src in zip(positions, permuted):
                perm[slot] = src
        perms.append(tuple(perm))
    unit_choices = [_units(m) for m in group.moduli]
    return [
        (units, perm)
        for units in itertools.product(*unit_choices)
        for perm in perms
    ]


def apply_automorphism(
    group: Group, aut: tuple[tuple[int, ...], tuple[int, ...]], el: Element
) -> Element:
    units, perm = aut
    return tuple(
        (units[perm[j]] * el[perm[j]]) % group.moduli[j] for j in range(group.rank)
    )


def canonicalize(seq: Sequence) -> Sequence:
    """Representative of the orbit under unit scalings and equal-modulus
    coordinate permutations: the lexicographically least serialized form."""
    best = seq
    best_key = serialize_sequence(seq)
    for aut in group_automorphisms(seq.group):
        mapped = Sequence(
            seq.group,
            _merge(
                (apply_automorphism(seq.group, aut, el), m)
                for el, m in seq.counts.items()
            ),
        )
        key = serialize_sequence(mapped)
        if key < best_key:
            best, best_key = mapped, key
    return best


def _merge(pairs: Iterable[tuple[Element, int]]) -> dict[Element, int]:
    out: dict[Element, int] = {}
    for el, m in pairs:
        out[el] = out.get(el, 0) + m
    return out
