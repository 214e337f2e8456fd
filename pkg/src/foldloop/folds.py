"""
Fold constructors and the exhaustive fold search.

The search is a depth-first walk over braid words of a fixed length in
fold order: lexicographic, letters ranked by index and then by sign, with the
alternating sign (+ on odd generators, - on even ones) first. The alternating
fold built by :func:`make_fold` is therefore the canonical witness whenever it
is minimal. The walk keeps the strand occupancy and the running exponent sum
along the current prefix and drops a prefix as soon as its exponent sum can no
longer return to zero. The first leaf that closes into one loop is the least
witness.

Practical ceiling: the walk visits at most (2(m-1))^n leaves per (m, n); one
core handles roughly 10^6 leaves per second or two, so m_max = 6, n_max = 8
is about the limit of desk-scale use. Work for a single (m, n) is split by
leading letter across worker processes; the answer does not depend on the
number of workers.
"""

from __future__ import annotations

import dataclasses
import itertools
import os
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Iterator

from .band import is_valid_fold
from .braid import BraidWord, Generator, component_count, exponent_sum
from .errors import EvenLoopCount, InvalidFold

THREADS_ENV = "FOLDLOOP_THREADS"

# below this many leaves a (m, n) slice is searched inline
PARALLEL_THRESHOLD = 200_000


def make_fold(m: int) -> BraidWord:
    """The alternating m-loop fold s1 s2^-1 s3 s4^-1 ... s_{m-1}^-1 (m odd)."""
    if m < 1:
        raise ValueError(f"loop count must be >= 1, got {m}")
    if m % 2 == 0:
        raise EvenLoopCount(f"no untwisted fold has an even number of loops ({m})")
    return BraidWord(m, tuple(Generator(i, 1 if i % 2 else -1) for i in range(1, m)))


def nest(outer: BraidWord, inner: BraidWord) -> BraidWord:
    """
    Shrink ``inner`` and thread it through the last strand of ``outer``.

    The inner fold's strand 1 is identified with the outer fold's last strand,
    so the result has m_outer + m_inner - 1 loops.
    """
    for name, w in (("outer", outer), ("inner", inner)):
        if not is_valid_fold(w):
            raise InvalidFold(f"{name} word {w!r} is not a valid fold")
    shift = outer.strands - 1
    m = outer.strands + inner.strands - 1
    return BraidWord(m, outer.letters + tuple(g.shifted(shift) for g in inner.letters))


def alphabet(m: int) -> list[Generator]:
    """Letters available on m strands, index ascending and + before -."""
    return [Generator(i, s) for i in range(1, m) for s in (1, -1)]


def _preferred_sign(index: int) -> int:
    return 1 if index % 2 else -1


def fold_letter_key(g: Generator) -> tuple[int, int]:
    return (g.index, 0 if g.sign == _preferred_sign(g.index) else 1)


def fold_order_key(word: BraidWord) -> tuple[tuple[int, int], ...]:
    """Sort key ranking witnesses of equal length; see the module docstring."""
    return tuple(fold_letter_key(g) for g in word.letters)


def enumerate_words(m: int, n: int) -> Iterator[BraidWord]:
    """Every word of length n on m strands, once each, in lexicographic order."""
    if m < 1 or n < 0:
        raise ValueError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    for letters in itertools.product(alphabet(m), repeat=n):
        yield BraidWord(m, letters)


@dataclasses.dataclass(frozen=True)
class FoldReport:
    m: int
    n: int
    writhe: int
    components: int
    valid: bool
    word: BraidWord


def fold_report(word: BraidWord) -> FoldReport:
    return FoldReport(
        m=word.strands,
        n=len(word),
        writhe=exponent_sum(word),
        components=component_count(word),
        valid=is_valid_fold(word),
        word=word,
    )


@dataclasses.dataclass(frozen=True)
class LoopResult:
    fold_found: bool
    minimal_n: int | None
    witness: BraidWord | None


@dataclasses.dataclass(frozen=True)
class SearchSummary:
    per_m: dict[int, LoopResult]
    bounds: tuple[int, int]


def _single_cycle(occupant: list[int]) -> bool:
    # occupant[pos-1] = start strand ending at pos; one cycle iff orbit of 1 covers all
    m = len(occupant)
    p, steps = 1, 0
    while True:
        p = occupant[p - 1]
        steps += 1
        if p == 1:
            return steps == m


def _first_fold(m: int, n: int, prefix: tuple[int, ...] = ()) -> tuple[int, ...] | None:
    """Least valid fold of length n in fold order starting with ``prefix`` (signed ints)."""
    letters = _signed_letters(m)
    occupant = list(range(1, m + 1))
    writhe = 0
    for k in prefix:
        i = abs(k)
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
        writhe += 1 if k > 0 else -1
    word = list(prefix)

    def walk(depth: int, writhe: int) -> bool:
        if depth == n:
            return writhe == 0 and _single_cycle(occupant)
        remaining = n - depth - 1
        for k in letters:
            w = writhe + (1 if k > 0 else -1)
            if abs(w) > remaining:
                continue
            i = abs(k)
            occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
            word.append(k)
            if walk(depth + 1, w):
                return True
            word.pop()
            occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
        return False

    if abs(writhe) > n - len(prefix):
        return None
    return tuple(word) if walk(len(prefix), writhe) else None


def _signed_letters(m: int) -> list[int]:
    return [k for i in range(1, m) for k in (i * _preferred_sign(i), -i * _preferred_sign(i))]


def _search_length(m: int, n: int, executor: Executor | None) -> tuple[int, ...] | None:
    if n == 0 or executor is None or (2 * (m - 1)) ** n < PARALLEL_THRESHOLD:
        return _first_fold(m, n)
    heads = [(k,) for k in _signed_letters(m)]
    futures = [executor.submit(_first_fold, m, n, h) for h in heads]
    # heads are in fold order, so the first hit is the least witness
    for fut in futures:
        hit = fut.result()
        if hit is not None:
            for rest in futures:
                rest.cancel()
            return hit
    return None


def default_workers() -> int:
    workers = os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            workers = min(workers, max(1, int(cap)))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {cap!r}") from None
    return workers


def search_folds(m_max: int, n_max: int, workers: int | None = None) -> SearchSummary:
    """
    For each loop count m <= m_max find the fewest crossings n <= n_max that
    admit a valid fold, with the least witness word in fold order.
    """
    if m_max < 1 or n_max < 0:
        raise ValueError(f"need m_max >= 1 and n_max >= 0, got {m_max}, {n_max}")
    if workers is None:
        workers = default_workers()
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    per_m: dict[int, LoopResult] = {}
    try:
        for m in range(1, m_max + 1):
            result = LoopResult(False, None, None)
            for n in range(n_max + 1):
                hit = _search_length(m, n, executor)
                if hit is not None:
                    result = LoopResult(True, n, BraidWord.from_ints(m, hit))
                    break
            per_m[m] = result
    finally:
        if executor is not None:
            executor.shutdown(cancel_futures=True)
    return SearchSummary(per_m, (m_max, n_max))
