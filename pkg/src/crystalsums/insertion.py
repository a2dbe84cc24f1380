"""Skew tableaux and insertion algorithms.

A tableau is stored as an inner shape together with the entries outside it:
row r (1-indexed) occupies the columns inner[r-1]+1 .. inner[r-1]+len(row).
Entries are plain ints.  Callers working over alphabets that sort the other
way around (position letters counted from the far end) store those letters
as negated ints, so the usual integer order is always the letter order.

Rows weakly increase, columns strictly increase.  Every operation returns a
new tableau; nothing mutates in place.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .shapes_words import Partition, add_cell, as_partition, remove_cell

Cell = tuple[int, int]


@dataclass(frozen=True)
class Tableau:
    inner: Partition = ()
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        inner = as_partition(self.inner)
        rows = [tuple(int(x) for x in row) for row in self.rows]
        while len(rows) < len(inner):
            rows.append(())
        while rows and not rows[-1] and len(rows) > len(inner):
            rows.pop()
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", tuple(rows))
        self._validate()

    def _validate(self) -> None:
        outer = [self.inner_len(r) + len(row) for r, row in enumerate(self.rows)]
        for r in range(1, len(outer)):
            if outer[r] > outer[r - 1]:
                raise ValueError(f"outer shape not a partition: {outer}")
        for row in self.rows:
            for j in range(len(row) - 1):
                if row[j] > row[j + 1]:
                    raise ValueError(f"row not weakly increasing: {row}")
        for r in range(1, len(self.rows)):
            lo = self.inner_len(r)
            up = self.inner_len(r - 1)
            for j, x in enumerate(self.rows[r]):
                c = lo + j
                if c < up:
                    continue  # inner shape sits above this cell
                above = self.rows[r - 1][c - up]
                if above >= x:
                    raise ValueError(
                        f"column not strictly increasing at row {r + 1}, column {c + 1}"
                    )

    def inner_len(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    @property
    def outer(self) -> Partition:
        return as_partition(
            self.inner_len(r) + len(row) for r, row in enumerate(self.rows)
        )

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row, column, value) over all entries, 1-indexed."""
        for r, row in enumerate(self.rows):
            lo = self.inner_len(r)
            for j, x in enumerate(row):
                yield (r + 1, lo + j + 1, x)

    def value_at(self, row: int, col: int) -> int | None:
        if not 1 <= row <= len(self.rows):
            return None
        j = col - 1 - self.inner_len(row - 1)
        line = self.rows[row - 1]
        return line[j] if 0 <= j < len(line) else None

    def find(self, value: int) -> Cell | None:
        for r, c, x in self.cells():
            if x == value:
                return (r, c)
        return None

    def values(self) -> tuple[int, ...]:
        return tuple(sorted(x for row in self.rows for x in row))

    def row_word(self) -> tuple[int, ...]:
        """Reading word: rows bottom to top, each row left to right."""
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def restriction_outer(self, cutoff: int) -> Partition:
        """Outer shape of the subtableau with values at most cutoff."""
        return as_partition(
            self.inner_len(r) + bisect_right(row, cutoff)
            for r, row in enumerate(self.rows)
        )

    def __str__(self) -> str:
        if not self.rows:
            return "-"
        parts = []
        for r, row in enumerate(self.rows):
            toks = ["."] * self.inner_len(r) + [str(x) for x in row]
            parts.append(" ".join(toks) if toks else ".")
        return " / ".join(parts)


def tableau(rows: Iterable[Iterable[int]], inner: Iterable[int] = ()) -> Tableau:
    return Tableau(tuple(inner), tuple(tuple(row) for row in rows))


def _bump(
    rows: list[list[int]], inner_of: Callable[[int], int], start: int, cur: int
) -> Cell:
    # Standard row bumping: displace the leftmost entry larger than cur.
    r = start
    while r < len(rows):
        row = rows[r]
        j = bisect_right(row, cur)
        if j == len(row):
            row.append(cur)
            return (r + 1, inner_of(r) + len(row))
        cur, row[j] = row[j], cur
        r += 1
    rows.append([cur])
    return (len(rows), 1)


def row_insert(t: Tableau, x: int) -> tuple[Tableau, Cell]:
    """Insert x into the first row and propagate; return tableau and new cell."""
    rows = [list(row) for row in t.rows]
    cell = _bump(rows, t.inner_len, 0, int(x))
    return Tableau(t.inner, tuple(map(tuple, rows))), cell


def reverse_row_insert(t: Tableau, row: int) -> tuple[Tableau, int]:
    """Undo a row insertion ending at the corner of the given row.

    Removes the last entry of that row and bumps it upward, each step
    displacing the rightmost smaller entry; the value pushed out of the
    first row is returned alongside the shrunken tableau.
    """
    r0 = row - 1
    if not 1 <= row <= len(t.rows) or not t.rows[r0]:
        raise ValueError(f"row {row} has no removable cell")
    outer = [t.inner_len(r) + len(line) for r, line in enumerate(t.rows)]
    if r0 + 1 < len(outer) and outer[r0 + 1] >= outer[r0]:
        raise ValueError(f"row {row} corner is not removable")
    rows = [list(line) for line in t.rows]
    cur = rows[r0].pop()
    for r in range(r0 - 1, -1, -1):
        line = rows[r]
        j = bisect_left(line, cur) - 1
        if j < 0:
            raise ValueError(f"no entry below {cur} in row {r + 1}")
        cur, line[j] = line[j], cur
    return Tableau(t.inner, tuple(map(tuple, rows))), cur


def internal_row_insert(t: Tableau, row: int) -> tuple[Tableau, Cell]:
    """Grow the inner shape at the addable corner of the given row.

    The entry sitting on that corner, if any, is displaced into the next
    row and the bumping proceeds as usual.  With no entry there the shapes
    simply gain the corner cell.  Returns the tableau and the new outer cell.
    """
    new_inner = add_cell(t.inner, row)
    r0 = row - 1
    col = t.inner_len(r0) + 1
    if r0 >= len(t.rows) or not t.rows[r0]:
        return Tableau(new_inner, t.rows), (row, col)
    rows = [list(line) for line in t.rows]
    cur = rows[r0].pop(0)
    cell = _bump(rows, t.inner_len, r0 + 1, cur)
    return Tableau(new_inner, tuple(map(tuple, rows))), cell


def inner_fill(t: Tableau, row: int, x: int) -> Tableau:
    """Shrink the inner shape at its corner in the given row, writing x there."""
    new_inner = remove_cell(t.inner, row)
    rows = [list(line) for line in t.rows]
    rows[row - 1] = [int(x)] + rows[row - 1]
    return Tableau(new_inner, tuple(map(tuple, rows)))


def column_insert(t: Tableau, x: int) -> tuple[Tableau, Cell]:
    """Insert x into the first column and propagate bumps to the right.

    Each step displaces the smallest entry of the column that is >= the
    moving value.  Requires a straight shape.
    """
    if t.inner:
        raise ValueError("column insertion needs a straight shape")
    rows = [list(line) for line in t.rows]
    cur = int(x)
    c = 0
    while True:
        r = 0
        bumped = False
        while r < len(rows) and len(rows[r]) > c:
            if rows[r][c] >= cur:
                cur, rows[r][c] = rows[r][c], cur
                bumped = True
                break
            r += 1
        if bumped:
            c += 1
            continue
        if r == len(rows):
            rows.append([])
        if len(rows[r]) != c:
            raise ValueError(f"cannot append at row {r + 1}, column {c + 1}")
        rows[r].append(cur)
        return Tableau((), tuple(map(tuple, rows))), (r + 1, c + 1)


def reverse_column_insert(t: Tableau, col: int) -> tuple[Tableau, int]:
    """Undo a column insertion whose bumping path ended in the given column.

    Removes the bottom entry of that column and walks it back leftward,
    each step displacing the largest smaller entry of the column; returns
    the value pushed out of the first column.
    """
    if t.inner:
        raise ValueError("column operations need a straight shape")
    c0 = col - 1
    rows = [list(line) for line in t.rows]
    heights = [r for r in range(len(rows)) if len(rows[r]) > c0]
    if not heights:
        raise ValueError(f"column {col} is empty")
    r_bot = heights[-1]
    if len(rows[r_bot]) != c0 + 1:
        raise ValueError(f"column {col} bottom cell is not removable")
    cur = rows[r_bot].pop()
    for c in range(c0 - 1, -1, -1):
        r = max(r for r in range(len(rows)) if len(rows[r]) > c)
        while r >= 0 and rows[r][c] >= cur:
            r -= 1
        if r < 0:
            raise ValueError(f"no entry below {cur} in column {c + 1}")
        cur, rows[r][c] = rows[r][c], cur
    return Tableau((), tuple(map(tuple, rows))), cur


def bottom_adjoin(t: Tableau, col: int, x: int) -> tuple[Tableau, Cell]:
    """Append x at the bottom of the given column of a straight tableau."""
    if t.inner:
        raise ValueError("column operations need a straight shape")
    rows = [list(line) for line in t.rows]
    r = 0
    while r < len(rows) and len(rows[r]) >= col:
        r += 1
    if r == len(rows):
        rows.append([])
    if len(rows[r]) != col - 1:
        raise ValueError(f"column {col} has no addable cell")
    rows[r].append(int(x))
    return Tableau((), tuple(map(tuple, rows))), (r + 1, col)


def insert_word(
    letters: Iterable[int], start: Tableau | None = None
) -> tuple[Tableau, list[Cell]]:
    t = start if start is not None else Tableau()
    cells: list[Cell] = []
    for x in letters:
        t, cell = row_insert(t, x)
        cells.append(cell)
    return t, cells


def tableau_product(a: Tableau, b: Tableau) -> Tableau:
    """Row insert the reading word of b into a."""
    if a.inner:
        raise ValueError("left factor must have a straight shape")
    t = a
    for x in b.row_word():
        t, _ = row_insert(t, x)
    return t


def rs_pair(word: Iterable[int]) -> tuple[Tableau, Tableau]:
    """Row insertion of a word read left to right, with standard recording."""
    p = Tableau()
    q_rows: list[list[int]] = []
    for i, x in enumerate(word, start=1):
        p, (r, c) = row_insert(p, x)
        if r > len(q_rows):
            q_rows.append([])
        if len(q_rows[r - 1]) != c - 1:
            raise AssertionError("recording cell out of step")
        q_rows[r - 1].append(i)
    return p, Tableau((), tuple(map(tuple, q_rows)))


def skew_rs(t: Tableau, pairs: Iterable[tuple[int, int]]) -> tuple[Tableau, Tableau]:
    """Insert a biword into t, recording positions on a skew tableau.

    Pairs are (value, label) with distinct labels; they are processed in
    increasing label order.  Values row insert into t; each label lands in
    the recording tableau at the cell its value created.  The recording
    tableau has inner shape equal to the outer shape of t.
    """
    lam = t.outer
    p = t
    q_rows: list[list[int]] = [[] for _ in lam]
    for value, label in sorted(pairs, key=lambda vb: vb[1]):
        p, (r, c) = row_insert(p, value)
        while r > len(q_rows):
            q_rows.append([])
        lam_r = lam[r - 1] if r - 1 < len(lam) else 0
        if lam_r + len(q_rows[r - 1]) != c - 1:
            raise AssertionError("recording cell out of step")
        q_rows[r - 1].append(label)
    return p, Tableau(lam, tuple(map(tuple, q_rows)))


def yamanouchi_word(p: Tableau) -> tuple[int, ...]:
    """Row indices of the letters 1..size, largest letter first."""
    if p.inner:
        raise ValueError("need a straight shape")
    size = p.size
    row_of: dict[int, int] = {}
    for r, _, x in p.cells():
        row_of[x] = r
    if sorted(row_of) != list(range(1, size + 1)):
        raise ValueError("entries must be exactly 1..size")
    return tuple(row_of[i] for i in range(size, 0, -1))


def standard_from_yamanouchi(word: Iterable[int]) -> Tableau:
    """Rebuild the standard tableau whose letters sit in the given rows.

    The word lists row indices with the largest letter first, matching the
    display order of words.
    """
    seq = [int(r) for r in word]
    rows: list[list[int]] = []
    for i, r in enumerate(reversed(seq), start=1):
        if r == len(rows) + 1:
            rows.append([])
        elif not 1 <= r <= len(rows):
            raise ValueError(f"letter {i} lands in a detached row {r}")
        rows[r - 1].append(i)
    return Tableau((), tuple(map(tuple, rows)))


def render_tableau(t: Tableau, render: Callable[[int], str] = str) -> str:
    """Multiline picture, inner cells drawn as dots."""
    if not t.rows:
        return "(empty)"
    grid: list[list[str]] = []
    for r, row in enumerate(t.rows):
        grid.append(["."] * t.inner_len(r) + [render(x) for x in row])
    width = max((len(s) for line in grid for s in line), default=1)
    return "\n".join(" ".join(s.rjust(width) for s in line) for line in grid)


def to_lists(t: Tableau) -> dict:
    return {"inner": list(t.inner), "rows": [list(row) for row in t.rows]}
