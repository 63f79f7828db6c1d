"""Schensted row insertion for words and its inverse.

A word is a finite sequence of letters from {0, ..., r}.  ``rsk_insert``
produces the insertion tableau P (semistandard, rows weakly increasing) and
the recording tableau Q (standard, entry t marks the box created by the t-th
letter).  Words of length n over {0..r} correspond exactly to pairs (P, Q) of
the same shape with at most r+1 rows.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections.abc import Sequence
from typing import NamedTuple

from .errors import ParameterError, ValidationError
from .fillings import Filling, is_ssyt, is_syt


class RskPair(NamedTuple):
    p: Filling
    q: Filling


def rsk_insert(letters: Sequence[int], r: int | None = None) -> RskPair:
    """Insert a word letter by letter; returns the pair (P, Q)."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for t, x in enumerate(letters, start=1):
        x = int(x)
        if x < 0 or (r is not None and x > r):
            raise ParameterError(f"letter {x} at position {t} is outside 0..{r}")
        i = 0
        while True:
            if i == len(p_rows):
                p_rows.append([x])
                q_rows.append([t])
                break
            row = p_rows[i]
            j = bisect_right(row, x)  # leftmost entry strictly greater than x
            if j == len(row):
                row.append(x)
                q_rows[i].append(t)
                break
            x, row[j] = row[j], x
            i += 1
    return RskPair(Filling.from_rows(p_rows), Filling.from_rows(q_rows))


def rsk_inverse(p: Filling, q: Filling, r: int | None = None) -> tuple[int, ...]:
    """Recover the unique word with insertion tableau p and recording tableau q."""
    if p.outer != q.outer or p.inner or q.inner:
        raise ValidationError("rsk-shape-mismatch",
                              f"P shape {p.outer!r} differs from Q shape {q.outer!r}")
    if not is_syt(q):
        raise ValidationError("rsk-q-not-standard", "recording tableau is not standard")
    if not is_ssyt(p):
        raise ValidationError("rsk-p-not-semistandard",
                              "insertion tableau is not semistandard")
    if r is not None and any(v > r for v in p.entries()):
        raise ValidationError("alphabet", f"an entry of P exceeds the alphabet bound {r}")
    n = p.size
    p_rows = [list(row) for row in p.rows]
    position = {}
    for i, row in enumerate(q.rows):
        for t in row:
            position[t] = i
    letters: list[int] = []
    for t in range(n, 0, -1):
        i = position[t]
        x = p_rows[i].pop()
        for lvl in range(i - 1, -1, -1):
            row = p_rows[lvl]
            j = bisect_left(row, x) - 1  # rightmost entry strictly below x
            x, row[j] = row[j], x
        letters.append(x)
    letters.reverse()
    return tuple(letters)
