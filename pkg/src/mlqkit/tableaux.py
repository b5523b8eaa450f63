"""Semistandard Young tableaux, the charge statistic, and composition fillings.

Tableaux are tuples of row tuples listed bottom-up (French convention).
Composition fillings (SSAF and SSQT) are stored column-wise: columns[j] is
the tuple of entries of column j+1 read from row 1 upward.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combinat import Partition, is_partition
from .errors import ContentError, FillingError, NotNonwrappingError, SizeError
from .mlq import MLQ, fm_label, is_nonwrapping, mlq_type

SSYT = tuple[tuple[int, ...], ...]


def is_ssyt(rows: SSYT) -> bool:
    """Rows weakly increase left to right; columns strictly increase upward."""
    for row in rows:
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
        if any(x < 1 for x in row):
            return False
    for r in range(len(rows) - 1):
        upper, lower = rows[r + 1], rows[r]
        if len(upper) > len(lower):
            return False
        if any(upper[c] <= lower[c] for c in range(len(upper))):
            return False
    return True


def content(rows: SSYT) -> tuple[int, ...]:
    """Vector counting each entry value."""
    top = max((x for row in rows for x in row), default=0)
    counts = [0] * top
    for row in rows:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def shape_of(rows: SSYT) -> tuple[int, ...]:
    return tuple(len(r) for r in rows)


def superstandard(shape: Partition) -> SSYT:
    """Row j filled with the entry j; the unique charge-0 recording tableau."""
    return tuple(tuple([j + 1] * p) for j, p in enumerate(shape))


def enumerate_ssyt(shape: Partition, cont) -> "itertools.chain[SSYT]":
    """All SSYT of the given shape and content, exactly once.

    Cells are filled row by row from the bottom; at each cell the candidate
    entries are pruned by the row and column constraints.
    """
    shape = tuple(shape)
    cont = tuple(cont)
    if sum(shape) != sum(cont):
        raise SizeError(f"|shape|={sum(shape)} but |content|={sum(cont)}")

    def fill(rows: list[list[int]], r: int, c: int, remaining: list[int]):
        if r == len(shape):
            yield tuple(tuple(row) for row in rows)
            return
        if c == shape[r]:
            yield from fill(rows, r + 1, 0, remaining)
            return
        lo = rows[r][c - 1] if c > 0 else 1
        below = rows[r - 1][c] + 1 if r > 0 else 1
        lo = max(lo, below)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] <= 0:
                continue
            remaining[v - 1] -= 1
            rows[r].append(v)
            yield from fill(rows, r, c + 1, remaining)
            rows[r].pop()
            remaining[v - 1] += 1

    if not shape:
        if not any(cont):
            yield ()
        return
    yield from fill([[] for _ in shape], 0, 0, list(cont))


def reading_word(rows: SSYT) -> tuple[int, ...]:
    """Rows concatenated left to right, scanning from the top row down."""
    out = []
    for row in reversed(rows):
        out.extend(row)
    return tuple(out)


def _standard_subwords(word: tuple[int, ...]) -> list[list[int]]:
    """Cyclic right-to-left decomposition into standard subwords (positions)."""
    remaining = sorted(range(len(word)), key=lambda p: p)
    subwords = []
    while remaining:
        positions = []
        target = 1
        # rightmost `target` scanning right-to-left, wrapping cyclically
        cursor = len(word)  # scan strictly left of cursor first
        avail = list(remaining)
        while True:
            found = None
            for p in reversed(avail):
                if p < cursor and word[p] == target:
                    found = p
                    break
            if found is None:
                for p in reversed(avail):
                    if word[p] == target:
                        found = p
                        break
            if found is None:
                break
            positions.append(found)
            avail.remove(found)
            cursor = found
            target += 1
        subwords.append(sorted(positions))
        remaining = [p for p in remaining if p not in set(positions)]
    return subwords


def _charge_of_standard(word: tuple[int, ...], positions: list[int]) -> int:
    """Charge of the standard subword at the given (sorted) positions."""
    where = {word[p]: idx for idx, p in enumerate(positions)}
    total = 0
    index = 0
    for r in range(2, len(positions) + 1):
        if where[r] > where[r - 1]:
            index += 1
        total += index
    return total


def charge(rows: SSYT) -> int:
    """Lascoux–Schutzenberger charge; requires partition content."""
    cont = content(rows)
    if not is_partition(tuple(c for c in cont)):
        raise ContentError(f"content {cont} is not a partition")
    word = reading_word(rows)
    total = 0
    for positions in _standard_subwords(word):
        total += _charge_of_standard(word, positions)
    return total


# ---------------------------------------------------------------------------
# composition fillings


@dataclass(frozen=True)
class CompositionFilling:
    """Filling of the diagram with shape[j] cells in column j+1, kind SSAF or SSQT."""

    shape: tuple[int, ...]
    columns: tuple[tuple[int, ...], ...]
    kind: str

    def entry(self, r: int, j: int) -> int:
        """Entry at row r of column j (1-indexed); 0 outside the diagram."""
        if 1 <= j <= len(self.columns) and 1 <= r <= len(self.columns[j - 1]):
            return self.columns[j - 1][r - 1]
        return 0

    def row_entries(self, r: int) -> tuple[int, ...]:
        """Entries of row r read column by column, left to right."""
        return tuple(
            col[r - 1] for col in self.columns if len(col) >= r
        )

    @property
    def height(self) -> int:
        return max(self.shape, default=0)

    def row_contents(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(self.row_entries(r)) for r in range(1, self.height + 1)
        )


def filling_to_mlq(t: CompositionFilling, n: int | None = None) -> MLQ:
    """Row-content map eta: row j of the queue is the set of row-j entries."""
    rows = []
    for r in range(1, t.height + 1):
        entries = t.row_entries(r)
        if len(set(entries)) != len(entries):
            raise FillingError(f"row {r} has repeated entries: {entries}")
        rows.append(frozenset(entries))
    if n is None:
        n = max(
            (x for row in rows for x in row), default=0
        )
        n = max(n, len(t.shape))
    return MLQ(n, tuple(rows))


def _ssaf_triple_ok(entry_grid, r: int, k: int, ncols: int) -> bool:
    """Def A.1 (iii) at row r, column k: for all j < k with T(r,j) <= T(r,k),
    require T(r-1,j) < T(r,k)."""
    a = entry_grid.get((r, k), 0)
    if a == 0:
        return True
    for j in range(1, k):
        if entry_grid.get((r, j), 0) <= a and entry_grid.get((r - 1, j), 0) >= a:
            return False
    return True


def mlq_to_ssaf(m: MLQ) -> CompositionFilling:
    """The unique semistandard augmented filling with m's row contents.

    The shape is type(m); entries of each row are assigned to columns by
    backtracking under the column-decrease and triple conditions, and the
    search must find exactly one filling.
    """
    if not is_nonwrapping(m):
        raise NotNonwrappingError("eta to SSAF is defined for nonwrapping queues")
    alpha = mlq_type(m)
    heights = {j: alpha[j - 1] for j in range(1, len(alpha) + 1)}
    L = m.height
    solutions = []
    grid: dict[tuple[int, int], int] = {}

    # row 1 is forced: T(1, j) = j on the support
    support = sorted(j for j in heights if heights[j] > 0)
    if frozenset(support) != (m.rows[0] if m.rows else frozenset()):
        raise AssertionError(f"type support {support} differs from bottom row")
    for j in support:
        grid[(1, j)] = j

    def place(r: int, entries: list[int], cols: list[int]):
        if not cols:
            search(r + 1)
            return
        j = cols[0]
        for idx, v in enumerate(entries):
            if v > grid.get((r - 1, j), 0):
                continue  # columns weakly decrease upward
            grid[(r, j)] = v
            if _ssaf_triple_ok(grid, r, j, len(alpha)):
                place(r, entries[:idx] + entries[idx + 1 :], cols[1:])
            del grid[(r, j)]

    def search(r: int):
        if r > L:
            cols = tuple(
                tuple(grid[(rr, j)] for rr in range(1, heights.get(j, 0) + 1))
                for j in range(1, len(alpha) + 1)
            )
            solutions.append(cols)
            return
        cols = sorted(j for j in heights if heights[j] >= r)
        entries = sorted(m.rows[r - 1])
        assert len(cols) == len(entries)
        place(r, entries, cols)

    search(2)
    assert len(solutions) == 1, (
        f"expected a unique augmented filling for {m}, found {len(solutions)}"
    )
    return CompositionFilling(alpha, solutions[0], "SSAF")


def _quinv_triple_ok(grid, lam, r: int, i: int) -> bool:
    """Maximal-quinv condition for triples whose newest cell is (r, i).

    Non-degenerate triples read (r,i) above (r-1,i) with (r-1,j) to the right;
    degenerate triples (upper cell outside the diagram) force the top entries
    of equal-height columns to increase left to right.
    """
    a = grid.get((r, i), 0)
    if a == 0:
        return True
    if r >= 2:
        b = grid.get((r - 1, i), 0)
        for j in range(i + 1, len(lam) + 1):
            if lam[j - 1] < r - 1:
                break
            c = grid.get((r - 1, j), 0)
            if b == 0 or c == 0:
                continue
            if not (a <= b < c or b < c < a or c < a <= b):
                return False
    if lam[i - 1] == r:  # top of column i: degenerate triples to the left
        for j in range(1, i):
            if lam[j - 1] == r and grid.get((r, j), 0) >= a:
                return False
    return True


def mlq_to_ssqt(m: MLQ) -> CompositionFilling:
    """The unique maximal-quinv filling of the partition diagram with m's rows."""
    lam = m.shape()
    L = m.height
    solutions = []
    grid: dict[tuple[int, int], int] = {}

    def place(r: int, entries: list[int], cols: list[int]):
        if not cols:
            search(r + 1)
            return
        i = cols[0]
        for idx, v in enumerate(entries):
            grid[(r, i)] = v
            if _quinv_triple_ok(grid, lam, r, i):
                place(r, entries[:idx] + entries[idx + 1 :], cols[1:])
            del grid[(r, i)]

    def search(r: int):
        if r > L:
            cols = tuple(
                tuple(grid[(rr, i)] for rr in range(1, lam[i - 1] + 1))
                for i in range(1, len(lam) + 1)
            )
            solutions.append(cols)
            return
        cols = [i for i in range(1, len(lam) + 1) if lam[i - 1] >= r]
        entries = sorted(m.rows[r - 1])
        assert len(cols) == len(entries)
        place(r, entries, cols)

    search(1)
    assert len(solutions) == 1, (
        f"expected a unique maximal-quinv filling for {m}, found {len(solutions)}"
    )
    return CompositionFilling(lam, solutions[0], "SSQT")


def ssqt_maj(t: CompositionFilling) -> int:
    """Haglund–Haiman–Loehr major index: sum of leg(u)+1 over descents."""
    total = 0
    for i, h in enumerate(t.shape, start=1):
        for r in range(2, h + 1):
            if t.entry(r, i) > t.entry(r - 1, i):
                total += (h - r) + 1
    return total


def ssqt_type(t: CompositionFilling) -> tuple[int, ...]:
    """Type of an SSQT: entry j in the bottom row of a height-k column gives w_j = k."""
    n = max((x for col in t.columns for x in col), default=0)
    n = max(n, len(t.shape))
    w = [0] * n
    for i, h in enumerate(t.shape, start=1):
        if h >= 1:
            w[t.entry(1, i) - 1] = h
    return tuple(w)
