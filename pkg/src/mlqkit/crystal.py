"""Crystal operators via the bracketing rule.

Word-level raising/lowering, row dropping/lifting and column operators on
ball configurations, fullness, active regions, and the cylindrical (R) and
classical (theta) matchings between rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import Composition
from .errors import NoActiveRegionError
from .mlq import MLQ, Word, column_word, fm_label, mlq_type, row_word


@dataclass(frozen=True)
class BracketMatching:
    """Matching of i's (closers) and i+1's (openers) in a word.

    status[p] is one of 'matched-open', 'matched-close', 'unmatched-open',
    'unmatched-close', 'inert'; partner[p] gives the matched position.
    """

    status: tuple[str, ...]
    partner: dict[int, int]

    def unmatched_opens(self) -> list[int]:
        return [p for p, s in enumerate(self.status) if s == "unmatched-open"]

    def unmatched_closes(self) -> list[int]:
        return [p for p, s in enumerate(self.status) if s == "unmatched-close"]


def bracket_match(letters, i: int) -> BracketMatching:
    """Classical bracketing: i+1 -> '(' and i -> ')', matched left to right."""
    status = ["inert"] * len(letters)
    partner = {}
    stack = []
    for p, x in enumerate(letters):
        if x == i + 1:
            stack.append(p)
            status[p] = "unmatched-open"
        elif x == i:
            if stack:
                q = stack.pop()
                status[q] = "matched-open"
                status[p] = "matched-close"
                partner[p] = q
                partner[q] = p
            else:
                status[p] = "unmatched-close"
    return BracketMatching(tuple(status), partner)


def cyclic_bracket_match(letters, i: int) -> BracketMatching:
    """Cylindrical bracketing: classical matching, then the leftover ')...('
    pattern is matched around the cylinder (rightmost open to leftmost close).
    """
    base = bracket_match(letters, i)
    status = list(base.status)
    partner = dict(base.partner)
    opens = base.unmatched_opens()
    closes = base.unmatched_closes()
    for k in range(min(len(opens), len(closes))):
        o = opens[len(opens) - 1 - k]
        c = closes[k]
        status[o] = "matched-open"
        status[c] = "matched-close"
        partner[o] = c
        partner[c] = o
    return BracketMatching(tuple(status), partner)


def cyclic_bracket_match_naive(letters, i: int) -> BracketMatching:
    """Direct stack-on-circle matching; equivalence oracle for the fold rule."""
    kinds = {}
    for p, x in enumerate(letters):
        if x == i + 1:
            kinds[p] = "("
        elif x == i:
            kinds[p] = ")"
    status = ["inert"] * len(letters)
    partner = {}
    unmatched = sorted(kinds)
    changed = True
    while changed:
        changed = False
        k = len(unmatched)
        for a in range(k):
            p, q = unmatched[a], unmatched[(a + 1) % k]
            if p != q and kinds[p] == "(" and kinds[q] == ")":
                partner[p] = q
                partner[q] = p
                status[p] = "matched-open"
                status[q] = "matched-close"
                unmatched = [u for u in unmatched if u not in (p, q)]
                changed = True
                break
    for p in unmatched:
        status[p] = "unmatched-open" if kinds[p] == "(" else "unmatched-close"
    return BracketMatching(tuple(status), partner)


# ---------------------------------------------------------------------------
# word operators


def _check_index(i: int, n: int):
    if not 1 <= i < n:
        raise IndexError(f"operator index {i} outside 1..{n - 1}")


def word_raise(letters, i: int, n: int | None = None) -> tuple[tuple[int, ...], bool]:
    """E_i: change the leftmost unmatched i+1 to i; acted=False if none."""
    letters = tuple(letters)
    _check_index(i, n if n is not None else max(letters, default=i + 1))
    opens = bracket_match(letters, i).unmatched_opens()
    if not opens:
        return letters, False
    p = opens[0]
    return letters[:p] + (i,) + letters[p + 1 :], True


def word_lower(letters, i: int, n: int | None = None) -> tuple[tuple[int, ...], bool]:
    """F_i: change the rightmost unmatched i to i+1; acted=False if none."""
    letters = tuple(letters)
    _check_index(i, n if n is not None else max(letters, default=i) + 1)
    closes = bracket_match(letters, i).unmatched_closes()
    if not closes:
        return letters, False
    p = closes[-1]
    return letters[:p] + (i + 1,) + letters[p + 1 :], True


def word_raise_star(letters, i: int, n: int | None = None) -> tuple[int, ...]:
    """E_i^*: change every unmatched i+1 to i."""
    letters = tuple(letters)
    _check_index(i, n if n is not None else max(letters, default=i + 1))
    out = list(letters)
    for p in bracket_match(letters, i).unmatched_opens():
        out[p] = i
    return tuple(out)


# ---------------------------------------------------------------------------
# row operators (act through the column word)


def row_drop(m: MLQ, i: int) -> tuple[MLQ, bool]:
    """e_down_i: move the leftmost unmatched i+1 ball from row i+1 to row i."""
    if i < 1:
        raise IndexError(f"operator index {i} must be positive")
    cw = column_word(m)
    opens = bracket_match(cw.letters, i).unmatched_opens()
    if not opens:
        return m, False
    r, c = cw.sites[opens[0]]
    return m.move_ball(r, c, r - 1, c), True


def row_drop_star(m: MLQ, i: int) -> MLQ:
    """Drop every unmatched ball in row i+1 to row i."""
    if i < 1:
        raise IndexError(f"operator index {i} must be positive")
    cw = column_word(m)
    opens = bracket_match(cw.letters, i).unmatched_opens()
    out = m
    for p in opens:
        r, c = cw.sites[p]
        out = out.move_ball(r, c, r - 1, c)
    return out


def row_lift(m: MLQ, i: int) -> tuple[MLQ, bool]:
    """f_up_i: move the rightmost unmatched i ball from row i to row i+1.

    The configuration grows a new empty row on demand when i is the top row.
    """
    if i < 1:
        raise IndexError(f"operator index {i} must be positive")
    work = m
    if work.height < i + 1:
        work = MLQ(m.n, m.rows + (frozenset(),) * (i + 1 - m.height))
    cw = column_word(work)
    closes = bracket_match(cw.letters, i).unmatched_closes()
    if not closes:
        return m, False
    r, c = cw.sites[closes[-1]]
    return work.move_ball(r, c, r + 1, c), True


# ---------------------------------------------------------------------------
# column operators (act through the row word)


def col_raise(m: MLQ, i: int) -> tuple[MLQ, bool]:
    """e_left_i: move the leftmost unmatched i+1 ball from column i+1 to column i."""
    _check_index(i, m.n)
    rw = row_word(m)
    opens = bracket_match(rw.letters, i).unmatched_opens()
    if not opens:
        return m, False
    r, c = rw.sites[opens[0]]
    return m.move_ball(r, c, r, c - 1), True


def col_lower(m: MLQ, i: int) -> tuple[MLQ, bool]:
    """f_right_i: move the rightmost unmatched i ball from column i to column i+1."""
    _check_index(i, m.n)
    rw = row_word(m)
    closes = bracket_match(rw.letters, i).unmatched_closes()
    if not closes:
        return m, False
    r, c = rw.sites[closes[-1]]
    return m.move_ball(r, c, r, c + 1), True


def col_raise_star(m: MLQ, i: int) -> MLQ:
    out, acted = col_raise(m, i)
    while acted:
        out, acted = col_raise(out, i)
    return out


def col_lower_star(m: MLQ, i: int) -> MLQ:
    out, acted = col_lower(m, i)
    while acted:
        out, acted = col_lower(out, i)
    return out


def is_full(m: MLQ, i: int, direction: str) -> bool:
    """Whether the column operator in the given direction changes type by s_i.

    raise-case: type ascends at i and exactly one i+1 is unmatched in the row
    word; lower-case: f_right_i acts nontrivially and its image is raise-full.
    """
    _check_index(i, m.n)
    if direction == "raise":
        t = mlq_type(m)
        if t[i - 1] >= t[i]:
            return False
        opens = bracket_match(row_word(m).letters, i).unmatched_opens()
        return len(opens) == 1
    if direction == "lower":
        image, acted = col_lower(m, i)
        return acted and is_full(image, i, "raise")
    raise ValueError(f"unknown direction {direction!r}")


def active_region(m: MLQ, i: int) -> frozenset[tuple[int, int]]:
    """Sites {(s, j) : p <= s <= r, j in {i, i+1}} affected by e_left_i.

    r is the row of the moved ball with label l; p is the maximal row <= r
    whose site (p-1, i) is empty or labeled >= l, defaulting to 1.
    """
    rw = row_word(m)
    opens = bracket_match(rw.letters, i).unmatched_opens()
    if not opens:
        raise NoActiveRegionError(f"e_left_{i} acts trivially")
    r, _ = rw.sites[opens[0]]
    la = fm_label(m)
    ell = la.label(r, i + 1)
    p = 1
    for cand in range(r, 1, -1):
        below = la.label(cand - 1, i)
        if below == 0 or below >= ell:
            p = cand
            break
    return frozenset((s, j) for s in range(p, r + 1) for j in (i, i + 1))


# ---------------------------------------------------------------------------
# two-row matchings R and theta, and label sets


def _two_row_word(a, b, n: int):
    """Letters of theta_1(cw((a, b))) with b above a; returns (letters, owners).

    owners[p] is ('a', col) or ('b', col) for the ball the letter came from.
    """
    letters, owners = [], []
    for c in range(1, n + 1):
        if c in b:
            letters.append(2)
            owners.append(("b", c))
        if c in a:
            letters.append(1)
            owners.append(("a", c))
    return letters, owners


def _match_two_rows(a, b, n: int, cyclic: bool) -> frozenset[int]:
    letters, owners = _two_row_word(a, b, n)
    matching = (cyclic_bracket_match if cyclic else bracket_match)(letters, 1)
    return frozenset(
        owners[p][1]
        for p, s in enumerate(matching.status)
        if s == "matched-close" and owners[p][0] == "a"
    )


def cylindrical_match(rows, n: int) -> frozenset[int]:
    """R(b_1, ..., b_L) by the recursive cylinder rule; R(b) = b."""
    rows = [frozenset(r) for r in rows]
    if not rows:
        raise ValueError("need at least one row")
    acc = rows[-1]
    for row in reversed(rows[:-1]):
        acc = _match_two_rows(row, acc, n, cyclic=True)
    return acc


def classical_match(rows, n: int) -> frozenset[int]:
    """theta(b_1 x ... x b_L), evaluated recursively from the top."""
    rows = [frozenset(r) for r in rows]
    if not rows:
        raise ValueError("need at least one row")
    acc = rows[-1]
    for row in reversed(rows[:-1]):
        acc = _match_two_rows(row, acc, n, cyclic=False)
    return acc


def label_sets(m: MLQ) -> dict[int, frozenset[int]]:
    """I_k(m) = positions of label k, for every k present; checked against R."""
    t = mlq_type(m)
    out: dict[int, set[int]] = {}
    for pos, k in enumerate(t, start=1):
        if k > 0:
            out.setdefault(k, set()).add(pos)
    result = {k: frozenset(v) for k, v in out.items()}
    if m.rows:
        # eq. R2 cross-check: I_{>=k} must agree with the cylindrical matching
        for k in range(1, m.height + 1):
            from_r = cylindrical_match(m.rows[:k], m.n)
            from_labels = frozenset(p for p, lab in enumerate(t, start=1) if lab >= k)
            assert from_r == from_labels, (m, k, from_r, from_labels)
    return result


def apply_ops(m: MLQ, ops) -> tuple[MLQ, bool]:
    """Apply a sequence of (kind, i) operators; kinds as in parse_op_token."""
    acted_any = False
    table = {
        "e<": col_raise,
        "f>": col_lower,
        "ed": row_drop,
        "fu": row_lift,
    }
    for kind, i in ops:
        if kind in table:
            m, acted = table[kind](m, i)
            acted_any = acted_any or acted
        elif kind == "ed*":
            before = m
            m = row_drop_star(m, i)
            acted_any = acted_any or m != before
        elif kind == "e<*":
            before = m
            m = col_raise_star(m, i)
            acted_any = acted_any or m != before
        elif kind == "f>*":
            before = m
            m = col_lower_star(m, i)
            acted_any = acted_any or m != before
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
    return m, acted_any


def parse_op_token(token: str) -> tuple[str, int]:
    """Parse one operator token: e<2, f>1, ed3, fu1, ed*2, e<*1, f>*4."""
    for kind in ("e<*", "f>*", "ed*", "e<", "f>", "ed", "fu"):
        if token.startswith(kind):
            rest = token[len(kind):]
            if rest.isdigit() and int(rest) >= 1:
                return kind, int(rest)
    from .errors import UsageError

    raise UsageError(f"bad operator token {token!r}")


def type_after(m: MLQ) -> Composition:
    return mlq_type(m)
