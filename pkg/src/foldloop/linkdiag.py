"""
Link diagrams of closed braids.

Closure arcs run off to the side and add no crossings, so every crossing of
the diagram is one letter of the word. Strands are identified by their start
position at the top of the braid.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Mapping

from .braid import BraidWord, permutation_of
from .errors import SameComponent, UnknownComponent


@dataclasses.dataclass(frozen=True)
class Crossing:
    level: int
    left_position: int
    sign: int
    strand_a: int  # enters at left_position
    strand_b: int  # enters at left_position + 1


@dataclasses.dataclass(frozen=True)
class ComponentLabeling:
    component_of: Mapping[int, int]

    @property
    def count(self) -> int:
        return len(set(self.component_of.values()))

    def strands_of(self, comp: int) -> list[int]:
        return sorted(s for s, c in self.component_of.items() if c == comp)


@dataclasses.dataclass(frozen=True)
class OrientationAssignment:
    """+1 runs the component downward through the braid, -1 reverses it."""

    direction_of: Mapping[int, int]

    def __post_init__(self) -> None:
        for comp, d in self.direction_of.items():
            if d not in (1, -1):
                raise ValueError(f"direction of component {comp} must be +1 or -1, got {d!r}")

    @classmethod
    def default(cls, labeling: ComponentLabeling) -> OrientationAssignment:
        return cls({c: 1 for c in sorted(set(labeling.component_of.values()))})

    def flipped(self, *comps: int) -> OrientationAssignment:
        return OrientationAssignment(
            {c: -d if c in comps else d for c, d in self.direction_of.items()}
        )


@functools.lru_cache(maxsize=1024)
def _component_ids(word: BraidWord) -> tuple[int, ...]:
    ids = [0] * word.strands
    for cid, cycle in enumerate(permutation_of(word).cycles(), start=1):
        for s in cycle:
            ids[s - 1] = cid
    return tuple(ids)


def strand_components(word: BraidWord) -> ComponentLabeling:
    """Label strands by closure component; ids are 1.. in order of each cycle's smallest strand."""
    return ComponentLabeling({s: c for s, c in enumerate(_component_ids(word), start=1)})


@functools.lru_cache(maxsize=1024)
def _crossings(word: BraidWord) -> tuple[Crossing, ...]:
    occupant = list(range(1, word.strands + 1))
    out = []
    for level, g in enumerate(word.letters):
        i = g.index
        a, b = occupant[i - 1], occupant[i]
        out.append(Crossing(level, i, g.sign, a, b))
        occupant[i - 1], occupant[i] = b, a
    return tuple(out)


def crossings(word: BraidWord) -> list[Crossing]:
    return list(_crossings(word))


def _check_component(labeling: ComponentLabeling, comp: int) -> None:
    if comp not in labeling.component_of.values():
        raise UnknownComponent(f"no component {comp!r}; have 1..{labeling.count}")


def inter_sign_sum(
    word: BraidWord,
    comp_a: int,
    comp_b: int,
    orient: OrientationAssignment | None = None,
) -> int:
    """Signed count of crossings between two components, before halving."""
    labeling = strand_components(word)
    _check_component(labeling, comp_a)
    _check_component(labeling, comp_b)
    if comp_a == comp_b:
        raise SameComponent(f"linking number needs two distinct components, got {comp_a} twice")
    if orient is None:
        orient = OrientationAssignment.default(labeling)
    for comp in (comp_a, comp_b):
        if comp not in orient.direction_of:
            raise UnknownComponent(f"orientation does not assign component {comp}")
    comp_of = labeling.component_of
    pair = {comp_a, comp_b}
    total = 0
    for c in _crossings(word):
        ca, cb = comp_of[c.strand_a], comp_of[c.strand_b]
        if ca != cb and {ca, cb} == pair:
            total += c.sign
    return total * orient.direction_of[comp_a] * orient.direction_of[comp_b]


def linking_number(
    word: BraidWord,
    comp_a: int,
    comp_b: int,
    orient: OrientationAssignment | None = None,
) -> int:
    """
    Linking number of two closure components: half the signed count of the
    crossings between them. Self-crossings do not contribute. ``orient``
    defaults to every component running downward.
    """
    total = inter_sign_sum(word, comp_a, comp_b, orient)
    if total % 2:
        # two closed curves always cross an even number of times
        raise ArithmeticError(f"odd inter-component crossing sum {total} in {word!r}")
    return total // 2


def self_writhe(word: BraidWord, comp: int) -> int:
    labeling = strand_components(word)
    _check_component(labeling, comp)
    comp_of = labeling.component_of
    return sum(
        c.sign
        for c in _crossings(word)
        if comp_of[c.strand_a] == comp and comp_of[c.strand_b] == comp
    )
