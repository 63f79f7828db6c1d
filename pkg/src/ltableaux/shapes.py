"""Integer partitions, skew shapes, and strip predicates/enumerators.

Partitions are plain tuples of weakly decreasing positive ints (French
convention: row 1 is the bottom row and is the longest).  A skew shape is an
ordered pair (outer, inner) with inner contained in outer.  Horizontal and
vertical strips are the shapes added by one Pieri factor, and the two
``extensions_by_*`` enumerators below are the single kernel that both the
filling enumeration and the Schur-expansion multiplication consume.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import ParameterError

Partition = tuple[int, ...]
Box = tuple[int, int]  # (max_rows, max_cols)


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize to a weakly decreasing tuple, trailing zeros removed."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ParameterError(f"negative part in {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ParameterError(f"parts {p!r} are not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def part(p: Sequence[int], i: int) -> int:
    """The i-th part (1-based), zero beyond the last row."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def size(p: Sequence[int]) -> int:
    return sum(p)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True when inner fits inside outer row by row."""
    return all(part(outer, i) >= part(inner, i) for i in range(1, len(inner) + 1))


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the diagram: column lengths become row lengths."""
    if not p:
        return ()
    return tuple(sum(1 for row in p if row >= c) for c in range(1, p[0] + 1))


def skew_cells(outer: Sequence[int], inner: Sequence[int]) -> list[tuple[int, int]]:
    """1-based (row, col) cells of outer/inner, bottom row first."""
    if not contains(outer, inner):
        raise ParameterError(f"{inner!r} is not contained in {outer!r}")
    return [
        (i, j)
        for i in range(1, len(outer) + 1)
        for j in range(part(inner, i) + 1, part(outer, i) + 1)
    ]


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True when outer/inner has at most one cell in every column."""
    if not contains(outer, inner):
        raise ParameterError(f"{inner!r} is not contained in {outer!r}")
    # cells of rows i and i+1 share a column iff outer_{i+1} > inner_i
    return all(part(outer, i + 1) <= part(inner, i) for i in range(1, len(outer)))


def is_vertical_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True when outer/inner has at most one cell in every row."""
    if not contains(outer, inner):
        raise ParameterError(f"{inner!r} is not contained in {outer!r}")
    return all(part(outer, i) - part(inner, i) <= 1 for i in range(1, len(outer) + 1))


def row_strip_extensions(lam: Sequence[int], k: int, cap: Sequence[int]) -> list[Partition]:
    """All nu contained in the cap partition with nu/lam a horizontal strip of size k.

    Returned in descending lexicographic order.
    """
    lam = partition(lam)
    cap = partition(cap)
    if k < 0:
        raise ParameterError("strip size must be nonnegative")
    if not contains(cap, lam):
        return []
    results: list[Partition] = []
    n_rows = len(cap)

    def rec(i: int, remaining: int, acc: list[int]) -> None:
        if i > n_rows:
            if remaining == 0:
                results.append(partition(acc))
            return
        lo = part(lam, i)
        hi = min(part(cap, i), remaining + lo)
        if i > 1:
            hi = min(hi, part(lam, i - 1))  # horizontal strip: nu_i <= lam_{i-1}
        if hi < lo:
            return
        for v in range(lo, hi + 1):
            if v == 0:
                # all further rows are forced to zero
                if remaining == 0:
                    results.append(partition(acc))
                return
            acc.append(v)
            rec(i + 1, remaining - (v - lo), acc)
            acc.pop()

    rec(1, k, [])
    results.sort(reverse=True)
    return results


def col_strip_extensions(lam: Sequence[int], k: int, cap: Sequence[int]) -> list[Partition]:
    """All nu contained in the cap partition with nu/lam a vertical strip of size k.

    Returned in descending lexicographic order.
    """
    lam = partition(lam)
    cap = partition(cap)
    if k < 0:
        raise ParameterError("strip size must be nonnegative")
    if not contains(cap, lam):
        return []
    results: list[Partition] = []
    n_rows = len(cap)

    def rec(i: int, remaining: int, prev: int, acc: list[int]) -> None:
        if i > n_rows:
            if remaining == 0:
                results.append(partition(acc))
            return
        base = part(lam, i)
        for add in (0, 1):
            if add > remaining:
                continue
            v = base + add
            if v > part(cap, i) or v > prev:
                continue
            if v == 0:
                if remaining - add == 0:
                    results.append(partition(acc))
                continue
            acc.append(v)
            rec(i + 1, remaining - add, v, acc)
            acc.pop()

    rec(1, k, cap[0] if cap else 0, [])
    results.sort(reverse=True)
    return results


def _box_cap(box: Box) -> Partition:
    rows, cols = box
    if rows < 0 or cols < 0:
        raise ParameterError(f"bounding box {box!r} has negative side")
    return partition((cols,) * rows)


def extensions_by_row_strip(lam: Sequence[int], k: int, box: Box) -> list[Partition]:
    """Horizontal-strip extensions of lam by k boxes inside a (rows, cols) box."""
    return row_strip_extensions(lam, k, _box_cap(box))


def extensions_by_col_strip(lam: Sequence[int], k: int, box: Box) -> list[Partition]:
    """Vertical-strip extensions of lam by k boxes inside a (rows, cols) box."""
    return col_strip_extensions(lam, k, _box_cap(box))


def complement_in_box(lam: Sequence[int], box: Box) -> Partition:
    """The 180-degree rotation of the complement of lam inside a (rows, cols) box."""
    rows, cols = box
    lam = partition(lam)
    if len(lam) > rows or (lam and lam[0] > cols):
        raise ParameterError(f"{lam!r} does not fit in box {box!r}")
    return partition(cols - part(lam, rows + 1 - i) for i in range(1, rows + 1))
