"""Multiline queues and the Ferrari–Martin labeling.

A multiline queue is an L x n ball configuration stored bottom-up as a tuple
of frozensets of occupied columns (1-indexed).  The same container doubles as
a generalized configuration: shape validity (weakly decreasing row sizes) is
only enforced by the operations that need the labeling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .combinat import Composition, Partition, compress, conjugate
from .errors import ShapeError, TooFewColumnsError


@dataclass(frozen=True)
class MLQ:
    """Ball configuration on an L x n cylinder; rows[0] is the bottom row."""

    n: int
    rows: tuple[frozenset[int], ...]

    def __post_init__(self):
        for row in self.rows:
            for c in row:
                if not 1 <= c <= self.n:
                    raise ValueError(f"ball column {c} outside 1..{self.n}")

    @staticmethod
    def make(n: int, rows) -> "MLQ":
        return MLQ(n, tuple(frozenset(r) for r in rows))

    @property
    def height(self) -> int:
        return len(self.rows)

    def row(self, r: int) -> frozenset[int]:
        """1-indexed row access; rows above the top are empty."""
        return self.rows[r - 1] if 1 <= r <= len(self.rows) else frozenset()

    def has_ball(self, r: int, c: int) -> bool:
        return c in self.row(r)

    def row_sizes(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def shape_valid(self) -> bool:
        sizes = self.row_sizes()
        return all(sizes[i] >= sizes[i + 1] for i in range(len(sizes) - 1))

    def shape(self) -> Partition:
        """Partition lambda with lambda'_j = |row j|; requires a valid shape."""
        if not self.shape_valid():
            raise ShapeError(f"row sizes {self.row_sizes()} not weakly decreasing")
        sizes = tuple(s for s in self.row_sizes() if s > 0)
        return conjugate(sizes)

    def trim(self) -> "MLQ":
        """Drop trailing empty rows (used before serialization)."""
        rows = list(self.rows)
        while rows and not rows[-1]:
            rows.pop()
        return MLQ(self.n, tuple(rows))

    def sorted_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(r)) for r in self.rows)

    def move_ball(self, r: int, c: int, r2: int, c2: int) -> "MLQ":
        """Return the configuration with the ball at (r,c) moved to (r2,c2)."""
        rows = list(self.rows)
        while len(rows) < max(r, r2):
            rows.append(frozenset())
        assert c in rows[r - 1] and c2 not in rows[r2 - 1]
        rows[r - 1] = rows[r - 1] - {c}
        rows[r2 - 1] = rows[r2 - 1] | {c2}
        return MLQ(self.n, tuple(rows))

    def __repr__(self):
        return f"MLQ(n={self.n}, rows={[sorted(r) for r in self.rows]})"


@dataclass(frozen=True)
class LabelArray:
    """Output of the FM algorithm on a valid multiline queue.

    labels[r-1][c-1] is the strand label at site (r, c), 0 on empty sites.
    pairings maps each ball site (r, c) with r >= 2 to the site (r-1, c') it
    pairs to; wrap_counts[(label, r)] counts pairings from row r that wrap.
    """

    labels: tuple[tuple[int, ...], ...]
    pairings: dict[tuple[int, int], tuple[int, int]]
    wrap_counts: dict[tuple[int, int], int]

    def label(self, r: int, c: int) -> int:
        if 1 <= r <= len(self.labels):
            return self.labels[r - 1][c - 1]
        return 0


def fm_label(m: MLQ, tie_break: str = "ltr") -> LabelArray:
    """Run the FM labeling on m.

    Rows are processed top-down; in each row the balls pair to the first
    unpaired ball weakly to the right (cyclically) in the row below, largest
    labels first.  tie_break picks the scan order among equal labels; the
    resulting labels are independent of it (the pairings are not).
    """
    if not m.shape_valid():
        raise ShapeError(f"row sizes {m.row_sizes()} not weakly decreasing")
    if tie_break not in ("ltr", "rtl"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    return _fm_label_cached(m, tie_break)


@lru_cache(maxsize=1 << 17)
def _fm_label_cached(m: MLQ, tie_break: str) -> LabelArray:
    n, L = m.n, m.height
    labels = {}
    pairings = {}
    wrap_counts = {}
    unpaired = [set(row) for row in m.rows]
    for r in range(L, 1, -1):
        for c in m.rows[r - 1]:
            labels.setdefault((r, c), r)
        sign = 1 if tie_break == "ltr" else -1
        order = sorted(m.rows[r - 1], key=lambda c: (-labels[(r, c)], sign * c))
        for c in order:
            lab = labels[(r, c)]
            target = None
            wrapped = False
            for cc in range(c, n + 1):
                if cc in unpaired[r - 2]:
                    target = cc
                    break
            if target is None:
                wrapped = True
                for cc in range(1, c):
                    if cc in unpaired[r - 2]:
                        target = cc
                        break
            if target is None:
                raise ShapeError("pairing failed; row sizes must weakly decrease")
            unpaired[r - 2].discard(target)
            labels[(r - 1, target)] = lab
            pairings[(r, c)] = (r - 1, target)
            if wrapped:
                wrap_counts[(lab, r)] = wrap_counts.get((lab, r), 0) + 1
    for c in m.rows[0] if m.rows else ():
        labels.setdefault((1, c), 1)
    grid = tuple(
        tuple(labels.get((r, c), 0) for c in range(1, n + 1)) for r in range(1, L + 1)
    )
    return LabelArray(grid, pairings, wrap_counts)


def mlq_type(m: MLQ) -> Composition:
    """Length-n composition of bottom-row labels (0 at empty sites)."""
    la = fm_label(m)
    if not m.rows:
        return (0,) * m.n
    return la.labels[0]


def mlq_strtype(m: MLQ) -> Composition:
    """type(m) with zero entries removed."""
    return compress(mlq_type(m))


def maj(m: MLQ) -> int:
    """Wrap-weighted major index: sum of m_{l,r} * (l - r + 1)."""
    la = fm_label(m)
    return sum(count * (lab - r + 1) for (lab, r), count in la.wrap_counts.items())


def is_nonwrapping(m: MLQ) -> bool:
    return not fm_label(m).wrap_counts


@dataclass(frozen=True)
class Word:
    """A word over {1..n} together with segment boundaries for display."""

    letters: tuple[int, ...]
    segments: tuple[int, ...]
    sites: tuple[tuple[int, int], ...]  # ball site (r, c) per letter

    def __str__(self):
        parts = []
        pos = 0
        for seg in self.segments:
            chunk = self.letters[pos : pos + seg]
            sep = "" if all(x <= 9 for x in self.letters) else " "
            parts.append(sep.join(str(x) for x in chunk))
            pos += seg
        return ".".join(p for p in parts if p)


def row_word(m: MLQ) -> Word:
    """Column numbers of balls, rows scanned top to bottom, each right to left."""
    letters, segments, sites = [], [], []
    for r in range(m.height, 0, -1):
        row = sorted(m.rows[r - 1], reverse=True)
        letters.extend(row)
        segments.append(len(row))
        sites.extend((r, c) for c in row)
    return Word(tuple(letters), tuple(segments), tuple(sites))


def column_word(m: MLQ) -> Word:
    """Row numbers of balls, columns scanned left to right, each top to bottom."""
    letters, segments, sites = [], [], []
    for c in range(1, m.n + 1):
        col = [r for r in range(m.height, 0, -1) if c in m.rows[r - 1]]
        letters.extend(col)
        segments.append(len(col))
        sites.extend((r, c) for r in col)
    return Word(tuple(letters), tuple(segments), tuple(sites))


def content_monomial(m: MLQ) -> tuple[int, ...]:
    """Length-n vector counting balls per column."""
    counts = [0] * m.n
    for row in m.rows:
        for c in row:
            counts[c - 1] += 1
    return tuple(counts)


def straight_mlq(alpha, n: int | None = None) -> MLQ:
    """The unique multiline queue with column content alpha; all strands vertical."""
    alpha = tuple(alpha)
    if n is None:
        n = len(alpha)
    if n < len(alpha):
        raise TooFewColumnsError(f"need {len(alpha)} columns, got {n}")
    L = max(alpha, default=0)
    rows = tuple(
        frozenset(i + 1 for i, a in enumerate(alpha) if a >= r) for r in range(1, L + 1)
    )
    return MLQ(n, rows)


def _colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(1, n + 1), k), key=lambda t: t[::-1])


def enumerate_mlq(lam: Partition, n: int):
    """Every multiline queue of shape lam on n columns, exactly once.

    Deterministic order: row subsets chosen top row first, each row running
    through its subsets colexicographically.
    """
    lam = tuple(lam)
    lamc = conjugate(lam)
    if lamc and n < lamc[0]:
        raise TooFewColumnsError(f"need {lamc[0]} columns for the bottom row, got {n}")
    if not lam:
        yield MLQ(n, ())
        return
    per_row = [_colex_subsets(n, k) for k in lamc]  # index 0 = bottom row
    for combo in itertools.product(*reversed(per_row)):
        yield MLQ(n, tuple(frozenset(s) for s in reversed(combo)))


def count_mlq(lam: Partition, n: int) -> int:
    out = 1
    for k in conjugate(tuple(lam)):
        out *= len(list(itertools.combinations(range(n), k)))
    return out


@dataclass(frozen=True)
class Strand:
    """A maximal pairing chain; balls are listed bottom-up."""

    balls: tuple[tuple[int, int], ...]
    anchor: int

    @property
    def length(self) -> int:
        return len(self.balls)


def strands(m: MLQ) -> frozenset[Strand]:
    """Partition of the balls of m into strands under the canonical pairing."""
    la = fm_label(m)
    up = {}  # site in row r-1  ->  site in row r pairing down to it
    for src, dst in la.pairings.items():
        up[dst] = src
    out = []
    for c in sorted(m.rows[0]) if m.rows else ():
        chain = [(1, c)]
        while chain[-1] in up:
            chain.append(up[chain[-1]])
        out.append(Strand(tuple(chain), c))
    assert sum(s.length for s in out) == sum(len(r) for r in m.rows)
    return frozenset(out)
