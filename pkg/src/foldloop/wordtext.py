"""
Text encoding of braid words.

    [m=<strands>] k1 k2 ...

Each k is a nonzero integer: k > 0 is sigma_k, k < 0 is sigma_|k|^-1. Tokens
are separated by any whitespace. Without ``m=`` the strand count is the
smallest one that admits every letter. The canonical form always carries
``m=`` and single spaces, e.g. ``m=3 1 -2`` or ``m=1``.
"""

from __future__ import annotations

import re

from .braid import BraidWord
from .errors import BoundsError, WordSyntaxError

_INT = re.compile(r"[+-]?\d+\Z")


def _parse_int(token: str, what: str) -> int:
    if not _INT.match(token):
        raise WordSyntaxError(f"{what} must be an integer, got {token!r}")
    return int(token)


def parse_word(text: str) -> BraidWord:
    tokens = text.split()
    strands = None
    if tokens and tokens[0].startswith("m="):
        strands = _parse_int(tokens[0][2:], "strand count")
        tokens = tokens[1:]
        if strands < 1:
            raise BoundsError(f"strand count must be >= 1, got {strands}")
    ints = []
    for tok in tokens:
        k = _parse_int(tok, "letter")
        if k == 0:
            raise WordSyntaxError("0 is not a generator")
        ints.append(k)
    needed = 1 + max((abs(k) for k in ints), default=0)
    if strands is None:
        strands = needed
    elif needed > strands:
        raise BoundsError(f"letter sigma_{needed - 1} does not fit on m={strands} strands")
    return BraidWord.from_ints(strands, ints)


def format_word(word: BraidWord) -> str:
    return " ".join([f"m={word.strands}", *(str(k) for k in word.to_ints())])
