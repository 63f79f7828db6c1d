"""Two-colored grid tableaux on an (r+1) x (d-r) grid and their bijections.

A grid tableau with parameters (g, r, d) colors every cell of the grid red or
blue.  The red cells form a bottom-left justified diagram filled as a
transposed semistandard tableau with content (r^g) (each of 1..g appears r
times); the blue cells are the complementary region, placed upside down, with
entries from {0..r} weakly increasing along rows and strictly increasing up
columns.  At the threshold d = g + r these objects are in bijection with words
of length g over {0..r}; the bijection factors through Schensted insertion via
the companion map ``phi`` from red tableaux to rotated standard tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence
from typing import NamedTuple

from .errors import ParameterError, ValidationError
from . import shapes
from .fillings import (Filling, ROTATED, STANDARD, content, enumerate_fillings,
                       invert_alphabet, is_syt, is_transposed_ssyt, rotate180)
from .rsk import rsk_insert, rsk_inverse
from .shapes import Partition, part

RED = "red"
BLUE = "blue"
GRAY = "gray"


class Cell(NamedTuple):
    kind: str
    value: int | None


@dataclass(frozen=True)
class LTableau:
    """An (r+1) x (d-r) grid of red/blue cells, bottom row first."""

    g: int
    r: int
    d: int
    grid: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "grid",
            tuple(tuple(Cell(c[0], None if c[1] is None else int(c[1])) for c in row)
                  for row in self.grid))
        self.validate()

    def validate(self) -> None:
        g, r, d = self.g, self.r, self.d
        if g < 0 or r < 0 or d < r:
            raise ParameterError(f"invalid parameters {(g, r, d)}")
        rows, cols = r + 1, d - r
        if len(self.grid) != rows or any(len(row) != cols for row in self.grid):
            raise ValidationError("grid-dimensions",
                                  f"expected a {rows} x {cols} grid")
        red_len = []
        for i, row in enumerate(self.grid, start=1):
            seen_blue = False
            n_red = 0
            for j, cell in enumerate(row, start=1):
                if cell.kind == RED:
                    if seen_blue:
                        raise ValidationError("red-justified",
                                              "red cell right of a blue cell", (i, j))
                    if cell.value is None or not (1 <= cell.value <= g):
                        raise ValidationError("red-alphabet",
                                              f"red entry {cell.value!r} outside 1..{g}", (i, j))
                    n_red += 1
                elif cell.kind == BLUE:
                    seen_blue = True
                    if cell.value is None or not (0 <= cell.value <= r):
                        raise ValidationError("blue-alphabet",
                                              f"blue entry {cell.value!r} outside 0..{r}", (i, j))
                else:
                    raise ValidationError("cell-kind",
                                          f"unexpected cell kind {cell.kind!r}", (i, j))
            red_len.append(n_red)
        for i in range(1, rows):
            if red_len[i] > red_len[i - 1]:
                raise ValidationError("red-shape",
                                      "red row lengths must weakly decrease upward",
                                      (i + 1, red_len[i]))
        counts = [0] * (g + 1)
        for i, row in enumerate(self.grid, start=1):
            for j, cell in enumerate(row, start=1):
                if cell.kind == RED:
                    if j > 1 and row[j - 2].kind == RED and row[j - 2].value >= cell.value:
                        raise ValidationError("red-rows-strict",
                                              "red rows must strictly increase", (i, j))
                    below = self.grid[i - 2][j - 1] if i > 1 else None
                    if below is not None and below.kind == RED and below.value > cell.value:
                        raise ValidationError("red-cols-weak",
                                              "red columns must weakly increase upward", (i, j))
                    counts[cell.value] += 1
                else:
                    if j > 1 and row[j - 2].kind == BLUE and row[j - 2].value > cell.value:
                        raise ValidationError("blue-rows-weak",
                                              "blue rows must weakly increase", (i, j))
                    below = self.grid[i - 2][j - 1] if i > 1 else None
                    if below is not None and below.kind == BLUE and below.value >= cell.value:
                        raise ValidationError("blue-cols-strict",
                                              "blue columns must strictly increase upward", (i, j))
        if counts[1:] != [self.r] * self.g:
            raise ValidationError("red-content",
                                  f"red content must be ({self.r}^{self.g})")

    @property
    def red_shape(self) -> Partition:
        return shapes.partition(sum(1 for c in row if c.kind == RED) for row in self.grid)

    def red_filling(self) -> Filling:
        rows = tuple(tuple(c.value for c in row if c.kind == RED) for row in self.grid)
        rows = rows[:len(self.red_shape)]
        return Filling.from_rows(rows)

    def blue_filling(self) -> Filling:
        """The blue region as a rotated filling anchored in the full grid box."""
        nrows, ncols = self.r + 1, self.d - self.r
        comp = shapes.complement_in_box(self.red_shape, (nrows, ncols))
        rows = tuple(
            tuple(self.grid[nrows - i][ncols - j].value for j in range(1, comp[i - 1] + 1))
            for i in range(1, len(comp) + 1)
        )
        return Filling.from_rows(rows, orientation=ROTATED, box=(nrows, ncols))


def _assemble(g: int, r: int, d: int, red: Filling, blue_std_rows: Sequence[Sequence[int]]) -> LTableau:
    """Build a grid from a red filling and the standard reading of the blue region."""
    nrows, ncols = r + 1, d - r
    grid: list[list[Cell | None]] = [[None] * ncols for _ in range(nrows)]
    for (i, j), v in red.std_cells().items():
        grid[i - 1][j - 1] = Cell(RED, v)
    for i, row in enumerate(blue_std_rows, start=1):
        for j, v in enumerate(row, start=1):
            grid[nrows - i][ncols - j] = Cell(BLUE, v)
    if any(c is None for row in grid for c in row):
        raise ValidationError("grid-cover", "red and blue regions do not tile the grid")
    return LTableau(g, r, d, tuple(tuple(row) for row in grid))


def enumerate_red_tableaux(g: int, r: int, i: int | None = None,
                           box: shapes.Box | None = None) -> list[Filling]:
    """Transposed semistandard tableaux with content (i^g) and at most r+1 rows."""
    if i is None:
        i = r
    if g < 0 or r < 0 or not (0 <= i <= r):
        raise ParameterError(f"invalid red-tableau parameters {(g, r, i)}")
    if box is None:
        box = (r + 1, g)
    cap = shapes.partition((min(box[1], g),) * min(box[0], r + 1))
    results: list[Filling] = []

    def rec(letter: int, shape_now: Partition, strips: list[Partition]) -> None:
        if letter > g:
            grid: dict[tuple[int, int], int] = {}
            prev: Partition = ()
            for m, nxt in enumerate(strips, start=1):
                for cell in shapes.skew_cells(nxt, prev):
                    grid[cell] = m
                prev = nxt
            rows = tuple(
                tuple(grid[(a, b)] for b in range(1, part(shape_now, a) + 1))
                for a in range(1, len(shape_now) + 1)
            )
            results.append(Filling.from_rows(rows))
            return
        for nxt in shapes.col_strip_extensions(shape_now, i, cap):
            strips.append(nxt)
            rec(letter + 1, nxt, strips)
            strips.pop()

    rec(1, (), [])
    results.sort(key=lambda f: f.rows)
    return results


def enumerate_L(g: int, r: int, d: int, max_blue: int | None = None) -> list[LTableau]:
    """All grid tableaux with parameters (g, r, d), in a deterministic order.

    ``max_blue`` restricts the blue alphabet to {0..max_blue} (default r).
    """
    if g < 0 or r < 0 or d < r:
        raise ParameterError(f"enumerate_L requires g >= 0, r >= 0, d >= r, got {(g, r, d)}")
    if max_blue is None:
        max_blue = r
    if not (0 <= max_blue <= r):
        raise ParameterError(f"blue alphabet bound {max_blue} outside 0..{r}")
    nrows, ncols = r + 1, d - r
    out: list[LTableau] = []
    for red in enumerate_red_tableaux(g, r, box=(nrows, ncols)):
        comp = shapes.complement_in_box(red.outer, (nrows, ncols))
        for s in enumerate_fillings(comp, "ssyt", range(max_blue + 1)):
            # placed blue value = max_blue - s read upside down
            blue_rows = tuple(tuple(max_blue - v for v in row) for row in s.rows)
            out.append(_assemble(g, r, d, red, blue_rows))
    out.sort(key=lambda t: t.grid)
    return out


def enumerate_restricted_L(g: int, r: int, i: int) -> list[LTableau]:
    """Threshold tableaux (d = g + r) whose blue entries stay at or below r - i."""
    if not (0 <= i <= r):
        raise ParameterError(f"restriction index {i} outside 0..{r}")
    return enumerate_L(g, r, g + r, max_blue=r - i)


def truncate(t: LTableau) -> LTableau:
    """Drop the forced full-blue columns beyond the threshold width g."""
    g, r, d = t.g, t.r, t.d
    if d < g + r:
        raise ParameterError(f"truncate requires d >= g + r, got {(g, r, d)}")
    for j in range(g + 1, d - r + 1):
        for i in range(1, r + 2):
            cell = t.grid[i - 1][j - 1]
            if cell != Cell(BLUE, i - 1):
                raise ValidationError("truncate-forced-column",
                                      f"expected blue {i - 1}, found {cell!r}", (i, j))
    grid = tuple(row[:g] for row in t.grid)
    return LTableau(g, r, g + r, grid)


def _require_red(red: Filling, r: int | None, i: int | None = None) -> tuple[int, int, int]:
    """Validate a red tableau and return (g, r, i) with i the content value."""
    if red.orientation != STANDARD or red.inner:
        raise ValidationError("red-orientation",
                              "red tableaux are standard-orientation straight fillings")
    if not is_transposed_ssyt(red):
        raise ValidationError("red-not-transposed",
                              "rows must strictly increase, columns weakly increase")
    cont = content(red)
    g = len(cont)
    if any(v < 1 for v in red.entries()):
        raise ValidationError("red-alphabet", "red entries start at 1")
    if g and len(set(cont)) != 1:
        raise ValidationError("red-content", f"content {cont!r} is not rectangular")
    got_i = cont[0] if cont else 0
    if i is not None and g and got_i != i:
        raise ValidationError("red-content", f"content is ({got_i}^{g}), expected ({i}^{g})")
    if r is None:
        if not cont:
            raise ParameterError("r cannot be inferred from an empty filling")
        if i is None:
            r = got_i
        else:
            raise ParameterError("r must be given explicitly")
    if len(red.outer) > r + 1:
        raise ValidationError("red-height", f"more than {r + 1} rows")
    if i is None and g and got_i != r:
        raise ValidationError("red-content", f"content is ({got_i}^{g}), expected ({r}^{g})")
    return g, r, (got_i if g else (i if i is not None else r))


def phi(red: Filling, r: int | None = None) -> Filling:
    """Companion map: a red tableau with content (r^g) becomes a rotated
    standard tableau of size g, complementary to it in the (r+1) x g box.

    Box m goes as far right as possible into the unique grid row whose red row
    does not contain the letter m.
    """
    g, r, _ = _require_red(red, r, None)
    placed: list[list[int]] = [[] for _ in range(r + 2)]  # 1-based grid rows
    for m in range(1, g + 1):
        target = 0
        for row in range(1, r + 2):
            row_entries = red.rows[row - 1] if row <= len(red.rows) else ()
            if m not in row_entries:
                if target:
                    raise ValidationError("red-content",
                                          f"letter {m} misses more than one row")
                target = row
        placed[target].append(m)
    std_rows = [placed[row] for row in range(r + 1, 0, -1)]
    while std_rows and not std_rows[-1]:
        std_rows.pop()
    out = Filling.from_rows(std_rows, orientation=ROTATED, box=(r + 1, g))
    if not is_syt(rotate180(out, out.box)):
        raise ValidationError("companion-not-standard",
                              "constructed companion tableau is not standard")
    return out


def phi_inverse(purple: Filling, r: int) -> Filling:
    """Inverse companion map: rebuild the red tableau row by row; letter m
    lands in every grid row except the one holding box m."""
    if purple.orientation != ROTATED or purple.inner:
        raise ValidationError("companion-orientation",
                              "expected a rotated straight filling")
    if not is_syt(rotate180(purple, purple.box)):
        raise ValidationError("companion-not-standard", "filling is not standard")
    if len(purple.outer) > r + 1:
        raise ValidationError("companion-height", f"more than {r + 1} rows")
    g = purple.size
    holder = {}
    for i, row in enumerate(purple.rows, start=1):
        for m in row:
            holder[m] = r + 2 - i  # std row i sits in grid row r+2-i
    red_rows = [[m for m in range(1, g + 1) if holder[m] != row]
                for row in range(1, r + 2)]
    while red_rows and not red_rows[-1]:
        red_rows.pop()
    red = Filling.from_rows(red_rows)
    _require_red(red, r, None)
    return red


def phi_i(red: Filling, r: int, i: int | None = None) -> Filling:
    """Content-flipping companion map: content (i^g) becomes ((r+1-i)^g).

    Letter m is written, as far right as possible, into every grid row whose
    red row does not contain m; the result is read back in standard
    orientation.
    """
    g, r, i = _require_red(red, r, i)
    placed: list[list[int]] = [[] for _ in range(r + 2)]
    for m in range(1, g + 1):
        for row in range(1, r + 2):
            row_entries = red.rows[row - 1] if row <= len(red.rows) else ()
            if m not in row_entries:
                placed[row].append(m)
    std_rows = [placed[row] for row in range(r + 1, 0, -1)]
    while std_rows and not std_rows[-1]:
        std_rows.pop()
    out = Filling.from_rows(std_rows)
    _require_red(out, r, r + 1 - i if g else None)
    return out


def l_to_word(t: LTableau) -> tuple[int, ...]:
    """Threshold grid tableaux to words: companion map plus reverse insertion."""
    g, r, d = t.g, t.r, t.d
    if d != g + r:
        raise ParameterError(f"l_to_word requires d = g + r, got {(g, r, d)}")
    red = t.red_filling()
    blue = t.blue_filling()
    purple = phi(red, r) if g else Filling.from_rows((), orientation=ROTATED, box=(r + 1, 0))
    if purple.outer != blue.outer:
        raise ValidationError("companion-complement-mismatch",
                              "companion shape differs from the blue shape")
    q = rotate180(purple, (r + 1, g))
    p = rotate180(invert_alphabet(blue, r), (r + 1, g))
    return rsk_inverse(p, q, r=r)


def word_to_l(letters: Sequence[int], r: int) -> LTableau:
    """Words of length g over {0..r} to threshold grid tableaux."""
    g = len(letters)
    p, q = rsk_insert(letters, r)
    if len(p.outer) > r + 1:
        raise ValidationError("word-height", "insertion tableau exceeds r + 1 rows")
    purple = rotate180(q, (r + 1, g))
    red = phi_inverse(purple, r) if g else Filling.from_rows(())
    blue_std_rows = invert_alphabet(p, r).rows
    return _assemble(g, r, g + r, red, blue_std_rows)


def strip_bottom_rows(t: LTableau, i: int) -> LTableau:
    """Remove the i forced bottom rows of a blue-restricted threshold tableau,
    producing a tableau with parameters (g, r - i, g + r - i)."""
    g, r = t.g, t.r
    if not (0 <= i <= r):
        raise ParameterError(f"strip index {i} outside 0..{r}")
    if t.d != g + r:
        raise ParameterError(f"strip_bottom_rows requires d = g + r, got {(g, r, t.d)}")
    for row in t.grid:
        for j, cell in enumerate(row, start=1):
            if cell.kind == BLUE and cell.value > r - i:
                raise ValidationError("blue-restricted",
                                      f"blue entry {cell.value} exceeds {r - i}")
    full_row = tuple(Cell(RED, v) for v in range(1, g + 1))
    for idx in range(i):
        if t.grid[idx] != full_row:
            raise ValidationError("strip-forced-row",
                                  f"bottom row {idx + 1} is not the full red row 1..{g}")
    return LTableau(g, r - i, g + (r - i), t.grid[i:])
