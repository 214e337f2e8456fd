"""
The flat-band model of a sunshade frame.

The frame is an annulus whose core is a one-component closed braid. Its two
edges (boundary circles) are obtained by 2-cabling the core: core strand i
becomes the parallel pair at positions 2i-1 (left edge) and 2i (right edge).
Full twists of the band are appended as extra crossings between the two edges
of core strand 1.
"""

from __future__ import annotations

import dataclasses

from .braid import BraidWord, Generator, component_count, exponent_sum, permutation_of
from .errors import MultiComponentCore
from .linkdiag import linking_number, strand_components


@dataclasses.dataclass(frozen=True)
class FlatBand:
    core: BraidWord
    full_twists: int = 0

    def __post_init__(self) -> None:
        if component_count(self.core) != 1:
            raise MultiComponentCore(
                f"band core must close into one loop; {self.core!r} has "
                f"{component_count(self.core)} components"
            )


@dataclasses.dataclass(frozen=True)
class DoubledDiagram:
    word: BraidWord
    left_component: int
    right_component: int

    def __post_init__(self) -> None:
        perm = permutation_of(self.word)
        if any((p - perm(p)) % 2 for p in range(1, self.word.strands + 1)):
            raise ValueError("doubled word must map odd positions to odd positions")
        labeling = strand_components(self.word)
        if labeling.count != 2:
            raise ValueError(f"doubled word has {labeling.count} components, expected 2")


def _cable_letter(g: Generator) -> list[Generator]:
    i, s = g.index, g.sign
    if s > 0:
        block = [2 * i, 2 * i + 1, 2 * i - 1, 2 * i]
    else:
        block = [2 * i, 2 * i - 1, 2 * i + 1, 2 * i]
    return [Generator(k, s) for k in block]


def double(band: FlatBand) -> DoubledDiagram:
    """
    2-cable the core and append the band's twists.

    Each core crossing becomes four crossings of the same sign that carry both
    edges of one strand across both edges of the other, preserving the
    left/right order inside each pair. Two of the four are between distinct
    edges. The result has 4n + 2|t| letters on 2m strands.
    """
    letters: list[Generator] = []
    for g in band.core.letters:
        letters.extend(_cable_letter(g))
    t = band.full_twists
    if t:
        letters.extend([Generator(1, 1 if t > 0 else -1)] * (2 * abs(t)))
    word = BraidWord(2 * band.core.strands, tuple(letters))
    # component ids follow the smallest strand: left edges contain 1, right edges 2
    return DoubledDiagram(word, left_component=1, right_component=2)


def boundary_linking_number(band: FlatBand) -> int:
    """Linking number of the two boundary circles, computed on the doubled diagram."""
    d = double(band)
    return linking_number(d.word, d.left_component, d.right_component)


def boundary_linking_number_fast(band: FlatBand) -> int:
    return exponent_sum(band.core) + band.full_twists


def required_twists(core: BraidWord) -> int:
    """Full twists that make the boundary circles unlinked for this core."""
    band = FlatBand(core)
    return -boundary_linking_number_fast(band)


def is_valid_fold(core: BraidWord) -> bool:
    """A fold is valid when its core is one loop and no twist is needed."""
    return component_count(core) == 1 and exponent_sum(core) == 0


@dataclasses.dataclass(frozen=True)
class TheoremVerdict:
    valid_fold: bool
    m: int
    theorem_holds: bool


def check_theorem(core: BraidWord) -> TheoremVerdict:
    valid = is_valid_fold(core)
    m = core.strands
    return TheoremVerdict(valid, m, (not valid) or m % 2 == 1)
