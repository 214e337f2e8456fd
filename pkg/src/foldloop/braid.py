"""
Braid words on m strands, the permutations they induce, and closure components.

A word is read left to right, top to bottom: letter k is the crossing in the
k-th horizontal slab of the diagram. The generator sigma_i (index i, 1-based)
crosses the strands currently at positions i and i+1. A positive letter is a
right-handed crossing when every strand is oriented downward.

Permutations are 1-based and map a strand's start position (top) to its end
position (bottom). Earlier letters act first, so the permutation of a
concatenation w1 w2 is "apply w1, then w2".
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Literal, Sequence

from .errors import BoundsError, PatternMismatch

Parity = Literal["even", "odd"]


def parity_of(k: int) -> Parity:
    return "odd" if k % 2 else "even"


@dataclasses.dataclass(frozen=True, order=True)
class Generator:
    """One signed Artin generator sigma_index^sign."""

    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.index, int) or self.index < 1:
            raise BoundsError(f"generator index must be >= 1, got {self.index!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"generator sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def from_int(cls, k: int) -> Generator:
        if k == 0:
            raise ValueError("0 does not name a generator")
        return cls(abs(k), 1 if k > 0 else -1)

    def to_int(self) -> int:
        return self.index * self.sign

    def sort_key(self) -> tuple[int, int]:
        # index ascending, then + before -
        return (self.index, 0 if self.sign > 0 else 1)

    def shifted(self, offset: int) -> Generator:
        return Generator(self.index + offset, self.sign)

    def __repr__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.index}"


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """
    A braid word: ``strands`` vertical strands and an ordered tuple of letters.

    ``len(word)`` is the crossing count n.
    """

    strands: int
    letters: tuple[Generator, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BoundsError(f"strand count must be >= 1, got {self.strands!r}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for g in letters:
            if not isinstance(g, Generator):
                raise TypeError(f"letters must be Generator instances, got {g!r}")
            if g.index > self.strands - 1:
                raise BoundsError(
                    f"sigma_{g.index} needs at least {g.index + 1} strands, word has {self.strands}"
                )

    @classmethod
    def from_ints(cls, strands: int, ints: Iterable[int]) -> BraidWord:
        """Build a word from signed integers: ``k > 0`` is sigma_k, ``k < 0`` its inverse."""
        return cls(strands, tuple(Generator.from_int(k) for k in ints))

    def to_ints(self) -> list[int]:
        return [g.to_int() for g in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def concat(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(g.sort_key() for g in self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {self.to_ints()})"


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1..m}; ``images[p-1]`` is where position p goes."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(tuple(range(1, m + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other(self(p)) for p in range(1, self.degree + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, ordered by that element."""
        seen = [False] * (self.degree + 1)
        out = []
        for start in range(1, self.degree + 1):
            if seen[start]:
                continue
            cycle = []
            p = start
            while not seen[p]:
                seen[p] = True
                cycle.append(p)
                p = self(p)
            out.append(tuple(cycle))
        return out


def _track(word: BraidWord) -> list[int]:
    """Return ``occupant`` where occupant[pos-1] is the start strand at ``pos`` after the word."""
    occupant = list(range(1, word.strands + 1))
    for g in word.letters:
        i = g.index
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    return occupant


def permutation_of(word: BraidWord) -> Permutation:
    occupant = _track(word)
    images = [0] * word.strands
    for pos, strand in enumerate(occupant, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def component_count(word: BraidWord) -> int:
    """Number of closure components, i.e. cycles of the induced permutation."""
    return len(permutation_of(word).cycles())


def exponent_sum(word: BraidWord) -> int:
    return sum(g.sign for g in word.letters)


def permutation_parity(p: Permutation) -> Parity:
    return parity_of(p.degree - len(p.cycles()))


@dataclasses.dataclass(frozen=True)
class ParityVerdict:
    single_component: bool
    m_parity: Parity
    n_parity: Parity
    consistent: bool


def check_statement2(word: BraidWord) -> ParityVerdict:
    """
    Check the loop/crossing parity law on one word.

    A single-component closure on m strands with n crossings must have m + n
    odd. Multi-component closures are not constrained and report consistent.
    """
    m, n = word.strands, len(word)
    single = component_count(word) == 1
    consistent = (m + n) % 2 == 1 if single else True
    return ParityVerdict(single, parity_of(m), parity_of(n), consistent)


def cyclic_shift(word: BraidWord, k: int) -> BraidWord:
    """Move the first ``k`` letters to the bottom (conjugation; the closure is unchanged)."""
    n = len(word)
    if n == 0:
        return word
    k %= n
    return BraidWord(word.strands, word.letters[k:] + word.letters[:k])


RelationKind = Literal["commute", "yang_baxter"]


def relation_applies(word: BraidWord, position: int, kind: RelationKind) -> bool:
    """Whether :func:`apply_braid_relation` would succeed; ``position`` is 1-based."""
    letters = word.letters
    k = position - 1
    if kind == "commute":
        if k < 0 or k + 2 > len(letters):
            return False
        a, b = letters[k], letters[k + 1]
        return abs(a.index - b.index) >= 2
    if kind == "yang_baxter":
        if k < 0 or k + 3 > len(letters):
            return False
        a, b, c = letters[k : k + 3]
        if not (a.sign == b.sign == c.sign and a.index == c.index):
            return False
        return abs(a.index - b.index) == 1
    raise ValueError(f"unknown relation kind {kind!r}")


def apply_braid_relation(word: BraidWord, position: int, kind: RelationKind) -> BraidWord:
    """
    Rewrite ``word`` with one Artin relation starting at 1-based ``position``.

    ``commute`` swaps two adjacent letters whose indices differ by at least 2.
    ``yang_baxter`` rewrites s_i s_j s_i -> s_j s_i s_j for |i - j| = 1 and a
    common sign (this covers both s_i s_{i+1} s_i and its mirror).
    """
    if not relation_applies(word, position, kind):
        raise PatternMismatch(f"{kind} does not apply at position {position} of {word!r}")
    letters = list(word.letters)
    k = position - 1
    if kind == "commute":
        letters[k], letters[k + 1] = letters[k + 1], letters[k]
    else:
        a, b = letters[k], letters[k + 1]
        letters[k : k + 3] = [b, a, b]
    return BraidWord(word.strands, tuple(letters))


def applicable_relations(word: BraidWord) -> list[tuple[int, RelationKind]]:
    return [
        (pos, kind)
        for kind in ("commute", "yang_baxter")
        for pos in range(1, len(word) + 1)
        if relation_applies(word, pos, kind)
    ]


def from_cycles(m: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    """Build a permutation of {1..m} from disjoint cycles (1-based)."""
    images = list(range(1, m + 1))
    for cycle in cycles:
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            images[a - 1] = b
    return Permutation(tuple(images))
