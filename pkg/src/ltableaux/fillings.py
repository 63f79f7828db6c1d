"""Fillings of (skew) Young diagrams and their validity predicates.

A :class:`Filling` stores its standard-orientation reading: ``rows[i]`` holds
the entries of row i+1 (bottom row first), left to right, covering columns
``inner[i]+1 .. outer[i]``.  Rotated objects (placed upside down in the
top-right corner of an anchoring box) keep the same stored reading plus an
``orientation`` flag and the box; :func:`rotate180` therefore only does
bookkeeping, while :meth:`Filling.placed_cells` yields the actual grid
coordinates.  All validity predicates are defined on the standard reading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from collections.abc import Iterable, Sequence

from .errors import DimensionError, ParameterError, ValidationError
from . import shapes
from .shapes import Box, Partition, part

STANDARD = "standard"
ROTATED = "rotated180"


@dataclass(frozen=True)
class Filling:
    outer: Partition
    rows: tuple[tuple[int, ...], ...]
    inner: Partition = ()
    orientation: str = STANDARD
    box: Box | None = None

    def __post_init__(self):
        outer = shapes.partition(self.outer)
        inner = shapes.partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))
        if not shapes.contains(outer, inner):
            raise ValidationError("skew-containment", f"{inner!r} not contained in {outer!r}")
        if len(self.rows) != len(outer):
            raise ValidationError("row-count", f"expected {len(outer)} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, start=1):
            want = part(outer, i) - part(inner, i)
            if len(row) != want:
                raise ValidationError("row-length", f"row {i} has {len(row)} entries, expected {want}")
            if any(v < 0 for v in row):
                raise ValidationError("entry-negative", f"row {i} contains a negative entry")
        if self.orientation not in (STANDARD, ROTATED):
            raise ParameterError(f"unknown orientation {self.orientation!r}")
        if self.orientation == ROTATED:
            if self.box is None:
                raise ParameterError("rotated fillings require an anchoring box")
            h, w = self.box
            if len(outer) > h or (outer and outer[0] > w):
                raise DimensionError(f"shape {outer!r} does not fit in box {self.box!r}")
            object.__setattr__(self, "box", (int(h), int(w)))
        elif self.box is not None:
            raise ParameterError("standard fillings carry no anchoring box")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], orientation: str = STANDARD,
                  box: Box | None = None, inner: Iterable[int] = ()) -> "Filling":
        rows = tuple(tuple(r) for r in rows)
        inner = shapes.partition(inner)
        outer = tuple(len(r) + part(inner, i) for i, r in enumerate(rows, start=1))
        return cls(outer=outer, rows=rows, inner=inner, orientation=orientation, box=box)

    @property
    def size(self) -> int:
        return shapes.size(self.outer) - shapes.size(self.inner)

    def std_cells(self) -> dict[tuple[int, int], int]:
        """Standard-reading entries keyed by 1-based (row, col)."""
        out: dict[tuple[int, int], int] = {}
        for i, row in enumerate(self.rows, start=1):
            lo = part(self.inner, i)
            for off, v in enumerate(row, start=1):
                out[(i, lo + off)] = v
        return out

    def placed_cells(self) -> dict[tuple[int, int], int]:
        """Entries keyed by their actual grid position (mirrored when rotated)."""
        cells = self.std_cells()
        if self.orientation == STANDARD:
            return cells
        h, w = self.box  # type: ignore[misc]
        return {(h + 1 - i, w + 1 - j): v for (i, j), v in cells.items()}

    def entries(self) -> list[int]:
        return [v for row in self.rows for v in row]


EMPTY_FILLING = Filling(outer=(), rows=())


def is_ssyt(f: Filling) -> bool:
    """Rows weakly increase left to right, columns strictly increase bottom to top."""
    cells = f.std_cells()
    for (i, j), v in cells.items():
        right = cells.get((i, j + 1))
        if right is not None and right < v:
            return False
        above = cells.get((i + 1, j))
        if above is not None and above <= v:
            return False
    return True


def is_transposed_ssyt(f: Filling) -> bool:
    """Rows strictly increase left to right, columns weakly increase bottom to top."""
    cells = f.std_cells()
    for (i, j), v in cells.items():
        right = cells.get((i, j + 1))
        if right is not None and right <= v:
            return False
        above = cells.get((i + 1, j))
        if above is not None and above < v:
            return False
    return True


def content(f: Filling) -> tuple[int, ...]:
    """Multiplicities (m_1, m_2, ..., m_max) of the entries >= 1."""
    top = 0
    for v in f.entries():
        top = max(top, v)
    counts = [0] * top
    for v in f.entries():
        if v >= 1:
            counts[v - 1] += 1
    return tuple(counts)


def letter_counts(f: Filling, max_letter: int) -> tuple[int, ...]:
    """Multiplicities (m_0, ..., m_max_letter), zero entries included."""
    counts = [0] * (max_letter + 1)
    for v in f.entries():
        if v > max_letter:
            raise ValidationError("alphabet", f"entry {v} exceeds alphabet bound {max_letter}")
        counts[v] += 1
    return tuple(counts)


def is_syt(f: Filling) -> bool:
    """A standard tableau: semistandard with entries exactly 1..n, each once."""
    n = f.size
    return is_ssyt(f) and content(f) == (1,) * n and all(v >= 1 for v in f.entries())


def rotate180(f: Filling, target_box: Box) -> Filling:
    """Toggle between the standard placement and the rotated placement in a box."""
    h, w = int(target_box[0]), int(target_box[1])
    if f.orientation == STANDARD:
        if len(f.outer) > h or (f.outer and f.outer[0] > w):
            raise DimensionError(f"shape {f.outer!r} does not fit in box {(h, w)!r}")
        return replace(f, orientation=ROTATED, box=(h, w))
    if f.box != (h, w):
        raise DimensionError(f"filling is anchored in box {f.box!r}, not {(h, w)!r}")
    return replace(f, orientation=STANDARD, box=None)


def invert_alphabet(f: Filling, r: int) -> Filling:
    """Replace every entry e by r - e; shape and orientation are unchanged."""
    if any(v > r for v in f.entries()):
        raise ValidationError("alphabet", f"an entry exceeds the alphabet bound {r}")
    return replace(f, rows=tuple(tuple(r - v for v in row) for row in f.rows))


def count_syt_hook_length(shape: Sequence[int]) -> int:
    """Number of standard tableaux of a straight shape, by the hook length formula."""
    lam = shapes.partition(shape)
    conj = shapes.conjugate(lam)
    hooks = 1
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            hooks *= lam[i - 1] - j + conj[j - 1] - i + 1
    return math.factorial(shapes.size(lam)) // hooks


def _strip_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    return shapes.skew_cells(outer, inner)


def enumerate_fillings(shape: Sequence[int], kind, alphabet: Iterable[int],
                       content: Sequence[int] | None = None,
                       inner: Sequence[int] = ()) -> list[Filling]:
    """All fillings of outer/inner built letter by letter from strips.

    ``kind`` is ``"ssyt"`` (every letter adds a horizontal strip),
    ``"transposed"`` (vertical strips), or an explicit per-letter sequence of
    ``"row"`` / ``"column"`` markers.  ``alphabet`` lists the allowed letters
    in increasing order; ``content`` (aligned with the alphabet) pins the
    multiplicity of each letter, otherwise all multiplicities are enumerated.
    Results are standard-orientation fillings in a deterministic order.
    """
    outer = shapes.partition(shape)
    inner = shapes.partition(inner)
    letters = [int(a) for a in alphabet]
    if letters != sorted(letters) or len(set(letters)) != len(letters):
        raise ParameterError("alphabet must be strictly increasing")
    if kind == "ssyt":
        kinds = ["row"] * len(letters)
    elif kind == "transposed":
        kinds = ["column"] * len(letters)
    else:
        kinds = [str(k) for k in kind]
        if len(kinds) != len(letters):
            raise ParameterError("one strip kind per letter is required")
        if any(k not in ("row", "column") for k in kinds):
            raise ParameterError("strip kinds are 'row' or 'column'")
    if content is not None:
        content = tuple(int(c) for c in content)
        if len(content) != len(letters):
            raise ParameterError("content must align with the alphabet")
        if any(c < 0 for c in content):
            raise ParameterError("content entries must be nonnegative")
        if sum(content) != shapes.size(outer) - shapes.size(inner):
            return []

    total = shapes.size(outer) - shapes.size(inner)
    results: list[Filling] = []

    def rec(idx: int, shape_now: Partition, used: int, strips: list[Partition]) -> None:
        if idx == len(letters):
            if shape_now == outer:
                results.append(_materialize(outer, inner, letters, strips))
            return
        if content is not None:
            sizes: Iterable[int] = (content[idx],)
        else:
            sizes = range(total - used + 1)
        extend = (shapes.row_strip_extensions if kinds[idx] == "row"
                  else shapes.col_strip_extensions)
        for s in sizes:
            for nxt in extend(shape_now, s, outer):
                strips.append(nxt)
                rec(idx + 1, nxt, used + s, strips)
                strips.pop()

    rec(0, inner, 0, [])
    results.sort(key=lambda f: f.rows)
    return results


def _materialize(outer: Partition, inner: Partition, letters: list[int],
                 strips: list[Partition]) -> Filling:
    grid: dict[tuple[int, int], int] = {}
    prev = inner
    for letter, nxt in zip(letters, strips):
        for cell in _strip_cells(nxt, prev):
            grid[cell] = letter
        prev = nxt
    rows = tuple(
        tuple(grid[(i, j)] for j in range(part(inner, i) + 1, part(outer, i) + 1))
        for i in range(1, len(outer) + 1)
    )
    return Filling(outer=outer, rows=rows, inner=inner)
