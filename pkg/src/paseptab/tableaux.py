"""Permutation tableaux and their three statistics.

A permutation tableau is a 0/1 filling of a Young diagram (zero rows
allowed) such that every column contains at least one 1, and no 0 has both
a 1 somewhere above it in its column and a 1 somewhere to its left in its
row.  Equivalently: once a 0 sits below a 1, everything to its left in that
row must be 0.

Statistics: wt is the number of superfluous 1s (total 1s minus columns,
since each column needs one); f is the number of 1s in the top row; a row
is restricted when one of its 0s lies below a 1 of the same column, and u
is the number of unrestricted rows minus one (the top row never counts).

Direct enumeration of all fillings of a shape is deliberately brute force:
it is the oracle every transfer-matrix computation is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly
from .shapes import Diagram, parse_diagram, shapes_of_expanse


class ShapeMismatchError(ValueError):
    """Filling dimensions do not match the shape."""


class InvalidTableauError(ValueError):
    """Filling breaks a tableau rule."""


@dataclass(frozen=True)
class PermutationTableau:
    shape: Diagram
    rows: tuple[tuple[int, ...], ...]

    def to_text(self):
        """Shape line, then one 0/1 line per row (blank for empty rows)."""
        lines = [str(self.shape)]
        for row in self.rows:
            lines.append("".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


def tableau_from_text(text):
    """Inverse of PermutationTableau.to_text."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty tableau text")
    shape = parse_diagram(lines[0])
    body = lines[1:]
    if len(body) != shape.rows:
        raise ShapeMismatchError(
            f"shape {shape} has {shape.rows} rows, got {len(body)} lines"
        )
    rows = []
    for line, p in zip(body, shape.parts):
        if any(ch not in "01" for ch in line):
            raise ValueError(f"bad filling line {line!r}")
        if len(line) != p:
            raise ShapeMismatchError(f"line {line!r} does not fit part {p}")
        rows.append(tuple(int(ch) for ch in line))
    return PermutationTableau(shape, tuple(rows))


@dataclass(frozen=True)
class TableauStats:
    wt: int
    f: int
    u: int


def is_valid(shape, filling):
    """Check the two tableau rules; dimension mismatch is an error, a rule
    violation just returns False."""
    rows = tuple(tuple(int(v) for v in row) for row in filling)
    if len(rows) != shape.rows:
        raise ShapeMismatchError(
            f"shape {shape} has {shape.rows} rows, filling has {len(rows)}"
        )
    for row, p in zip(rows, shape.parts):
        if len(row) != p:
            raise ShapeMismatchError(
                f"row of length {len(row)} does not fit part {p} of {shape}"
            )
        if any(v not in (0, 1) for v in row):
            raise ValueError("filling entries must be 0 or 1")
    col_has_one = [False] * shape.cols
    for row in rows:
        one_to_left = False
        for c, v in enumerate(row):
            if v:
                one_to_left = True
                col_has_one[c] = True
            elif col_has_one[c] and one_to_left:
                return False
    return all(col_has_one)


def stats(t):
    """The (wt, f, u) statistics of a valid tableau."""
    if not is_valid(t.shape, t.rows):
        raise InvalidTableauError(f"not a permutation tableau:\n{t.to_text()}")
    ones = sum(sum(row) for row in t.rows)
    wt = ones - t.shape.cols
    f = sum(t.rows[0])
    restricted = [False] * t.shape.rows
    for c in range(t.shape.cols):
        seen_one = False
        for r, row in enumerate(t.rows):
            if len(row) <= c:
                break
            if row[c]:
                seen_one = True
            elif seen_one:
                restricted[r] = True
    u = restricted.count(False) - 1
    return TableauStats(wt, f, u)


def enumerate_tableaux(shape):
    """Yield every permutation tableau of the shape, fillings generated
    row-major with 0 tried before 1."""
    parts = shape.parts
    nrows = len(parts)
    ncols = shape.cols
    # last row each column reaches; a column with no 1 by then is dead
    last_row = [max(r for r in range(nrows) if parts[r] > c) for c in range(ncols)]
    cells = [(r, c) for r in range(nrows) for c in range(parts[r])]
    grid = [[0] * parts[r] for r in range(nrows)]
    col_one = [False] * ncols
    row_one = [False] * nrows

    def fill(idx):
        if idx == len(cells):
            yield PermutationTableau(shape, tuple(tuple(row) for row in grid))
            return
        r, c = cells[idx]
        if col_one[c]:
            zero_ok = not row_one[r]
        else:
            zero_ok = last_row[c] != r
        if zero_ok:
            grid[r][c] = 0
            yield from fill(idx + 1)
        grid[r][c] = 1
        saved_col, saved_row = col_one[c], row_one[r]
        col_one[c] = True
        row_one[r] = True
        yield from fill(idx + 1)
        col_one[c] = saved_col
        row_one[r] = saved_row
        grid[r][c] = 0

    yield from fill(0)


def genfun_shape(shape):
    """Sum of q^wt a^f b^u over all tableaux of the shape."""
    total = Poly.zero()
    for t in enumerate_tableaux(shape):
        s = stats(t)
        total = total + Poly.monomial(1, s.wt, s.f, s.u)
    return total


def genfun_by_unrestricted(shape):
    """Entry i-1 of the result collects the tableaux of the shape with
    exactly i unrestricted rows (so carrying b^(i-1))."""
    out = [Poly.zero()] * shape.rows
    for t in enumerate_tableaux(shape):
        s = stats(t)
        out[s.u] = out[s.u] + Poly.monomial(1, s.wt, s.f, s.u)
    return out


def genfun_expanse(n):
    """Sum of genfun_shape over every shape of expanse n >= 1."""
    if n < 1:
        raise ValueError("expanse must be at least 1")
    total = Poly.zero()
    for shape in shapes_of_expanse(n):
        total = total + genfun_shape(shape)
    return total
