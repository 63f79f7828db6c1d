"""Schur-polynomial expansions under the Pieri rules, and integral oracles.

An expansion is a finite integer combination of Schur classes indexed by
partitions, optionally confined to a bounding box (the ambient rectangle of a
Grassmannian).  Multiplying by a single-row class adds horizontal strips;
multiplying by a single-column class adds vertical strips.  Integrals over a
Grassmannian are read off as the coefficient of the full-rectangle class,
which is the point class in this normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import ParameterError
from . import shapes
from .shapes import Box, Partition

ROW = "row"
COLUMN = "column"


class PieriFactor(NamedTuple):
    kind: str  # "row" for s_(a), "column" for s_(1^a)
    size: int


class SchurExpansion:
    """A finite sum of Schur classes with integer coefficients."""

    __slots__ = ("terms", "box")

    def __init__(self, terms: dict[Partition, int] | None = None, box: Box | None = None):
        self.terms: dict[Partition, int] = {}
        self.box = box
        for shape, coeff in (terms or {}).items():
            shape = shapes.partition(shape)
            if coeff:
                self._check_box(shape)
                self.terms[shape] = self.terms.get(shape, 0) + int(coeff)

    def _check_box(self, shape: Partition) -> None:
        if self.box is not None:
            rows, cols = self.box
            if len(shape) > rows or (shape and shape[0] > cols):
                raise ParameterError(f"shape {shape!r} exceeds box {self.box!r}")

    def coefficient(self, shape) -> int:
        return self.terms.get(shapes.partition(shape), 0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SchurExpansion)
                and self.terms == other.terms and self.box == other.box)

    def __repr__(self) -> str:
        inside = ", ".join(f"{s}: {c}" for s, c in sorted(self.terms.items(), reverse=True))
        return f"SchurExpansion({{{inside}}}, box={self.box})"


def unit_expansion(box: Box | None = None) -> SchurExpansion:
    return SchurExpansion({(): 1}, box=box)


def multiply_pieri(e: SchurExpansion, factor: PieriFactor) -> SchurExpansion:
    """Multiply an expansion by one single-row or single-column Schur class."""
    kind, k = factor
    if kind not in (ROW, COLUMN):
        raise ParameterError(f"unknown Pieri factor kind {kind!r}")
    if k < 0:
        raise ParameterError("Pieri factor size must be nonnegative")
    out: dict[Partition, int] = {}
    for lam, coeff in e.terms.items():
        if e.box is not None:
            cap = shapes.partition((e.box[1],) * e.box[0])
        elif kind == ROW:
            cap = shapes.partition(((lam[0] if lam else 0) + k,) * (len(lam) + 1))
        else:
            cap = shapes.partition(((lam[0] if lam else 0) + 1,) * (len(lam) + k))
        extend = shapes.row_strip_extensions if kind == ROW else shapes.col_strip_extensions
        for nu in extend(lam, k, cap):
            out[nu] = out.get(nu, 0) + coeff
    return SchurExpansion(out, box=e.box)


@dataclass(frozen=True)
class GrassmannianCtx:
    """Gr(k, n): k-planes in an n-dimensional space."""

    k: int
    n: int

    def __post_init__(self):
        if not (0 < self.k <= self.n):
            raise ParameterError(f"Gr({self.k}, {self.n}) is not a valid Grassmannian")

    @property
    def box(self) -> Box:
        return (self.k, self.n - self.k)

    @property
    def point_class(self) -> Partition:
        rows, cols = self.box
        return shapes.partition((cols,) * rows)


def integral_L(g: int, r: int, d: int) -> int:
    """Coefficient of the point class of Gr(r+1, d+1) in s_(1^r)^g times the
    sum, over all weak compositions (a_0, ..., a_r) of (r+1)(d-r) - rg, of
    the product s_(a_0) ... s_(a_r).

    Computed by a layered sweep: after the g column factors, each of the r+1
    row factors is summed over every strip size at once; only the chains whose
    sizes total the full rectangle can reach the point class, so the
    composition constraint is implicit.  Returns 0 when (r+1)(d-r) < rg.
    """
    if g < 0 or r < 1 or d < r:
        raise ParameterError(f"integral_L requires g >= 0, r >= 1, d >= r, got {(g, r, d)}")
    ctx = GrassmannianCtx(r + 1, d + 1)
    rows, cols = ctx.box
    if (r + 1) * (d - r) - r * g < 0:
        return 0
    e = unit_expansion(ctx.box)
    for _ in range(g):
        e = multiply_pieri(e, PieriFactor(COLUMN, r))
    for _ in range(rows):
        acc: dict[Partition, int] = {}
        for a in range(cols + 1):
            for shape, coeff in multiply_pieri(e, PieriFactor(ROW, a)).terms.items():
                acc[shape] = acc.get(shape, 0) + coeff
        e = SchurExpansion(acc, box=ctx.box)
    return e.coefficient(ctx.point_class)


def weak_compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for c in cuts:
            comp.append(c - prev - 1)
            prev = c
        comp.append(total + parts - 2 - prev)
        yield tuple(comp)


def integral_L_by_compositions(g: int, r: int, d: int) -> int:
    """Slow cross-check of :func:`integral_L`: one explicit composition loop."""
    if g < 0 or r < 1 or d < r:
        raise ParameterError(f"integral_L requires g >= 0, r >= 1, d >= r, got {(g, r, d)}")
    ctx = GrassmannianCtx(r + 1, d + 1)
    budget = (r + 1) * (d - r) - r * g
    if budget < 0:
        return 0
    base = unit_expansion(ctx.box)
    for _ in range(g):
        base = multiply_pieri(base, PieriFactor(COLUMN, r))
    total = 0
    for comp in weak_compositions(budget, r + 1):
        e = base
        for a in comp:
            e = multiply_pieri(e, PieriFactor(ROW, a))
        total += e.coefficient(ctx.point_class)
    return total


def _two_plane_term(ambient: int, g: int, fixed_row: int, strip_total: int) -> int:
    """Point-class coefficient of s_1^g * s_(fixed_row) * sum_{i+j=strip_total}
    s_i * s_j over Gr(2, ambient)."""
    ctx = GrassmannianCtx(2, ambient)
    cols = ctx.box[1]
    if strip_total < 0:
        return 0
    base = unit_expansion(ctx.box)
    for _ in range(g):
        base = multiply_pieri(base, PieriFactor(COLUMN, 1))
    if fixed_row > cols:
        return 0
    base = multiply_pieri(base, PieriFactor(ROW, fixed_row))
    total = 0
    for i in range(strip_total + 1):
        j = strip_total - i
        if i > cols or j > cols:
            continue
        e = multiply_pieri(base, PieriFactor(ROW, i))
        e = multiply_pieri(e, PieriFactor(ROW, j))
        total += e.coefficient(ctx.point_class)
    return total


def integral_Lprime(g: int, d: int, k: int) -> int:
    """Difference of the two Gr(2, *) point-class coefficients attached to the
    parameters (g, d, k); the count that the signed tableau families realize."""
    if g < 0 or not (2 <= k <= d):
        raise ParameterError(f"integral_Lprime requires g >= 0 and 2 <= k <= d, got {(g, d, k)}")
    if k + g > 2 * d + 1:
        raise ParameterError(f"integral_Lprime requires k + g <= 2d + 1, got {(g, d, k)}")
    first = _two_plane_term(d + 1, g, k - 1, 2 * d - g - k - 1)
    second = _two_plane_term(d, g, k - 2, 2 * d - g - k - 2)
    return first - second


def castelnuovo_number(g: int, r: int) -> int:
    """g! * (1! 2! ... r!) / (s! (s+1)! ... (s+r)!) with s = g / (r+1).

    Defined only when r + 1 divides g; equals the number of standard tableaux
    of the (r+1) x s rectangle.
    """
    if r < 1 or g < 0:
        raise ParameterError(f"castelnuovo_number requires g >= 0, r >= 1, got {(g, r)}")
    if g % (r + 1) != 0:
        raise ParameterError(f"castelnuovo_number requires (r+1) | g, got {(g, r)}")
    s = g // (r + 1)
    num = math.factorial(g)
    for i in range(1, r + 1):
        num *= math.factorial(i)
    den = 1
    for i in range(r + 1):
        den *= math.factorial(s + i)
    return num // den
