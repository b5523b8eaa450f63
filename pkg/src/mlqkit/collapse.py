"""The collapsing map rho = (rho_N, rho_Q), partial collapses, and its inverse.

Collapsing stage i pushes the unmatched balls of row i+1 all the way down
(e_down_star at levels i, i-1, ..., 1) while the recording tableau logs how
many balls settled in each row.  The inverse replays the recorded counts with
row lifts in the opposite order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import Partition, conjugate
from .errors import InvalidPairError
from .mlq import MLQ, is_nonwrapping, maj
from .crystal import row_drop_star, row_lift
from .tableaux import SSYT, content, is_ssyt


@dataclass(frozen=True)
class CollapsePair:
    nonwrap: MLQ
    record: SSYT


def collapse(m: MLQ) -> CollapsePair:
    """Collapse m to a nonwrapping queue plus its recording tableau."""
    m.shape()  # raises ShapeError on invalid input
    L = m.height
    current = m
    q_rows: list[list[int]] = []
    if L >= 1:
        q_rows.append([1] * len(current.rows[0]))
    for i in range(1, L):
        before = current.row_sizes()
        for k in range(i, 0, -1):
            current = row_drop_star(current, k)
        after = current.row_sizes()
        for j in range(i):  # rows 1..i gained after[j] - before[j] balls
            q_rows[j].extend([i + 1] * (after[j] - before[j]))
        q_rows.append([i + 1] * after[i])
    record = tuple(tuple(r) for r in q_rows if r)
    nonwrap = current.trim()
    assert is_nonwrapping(nonwrap), "collapse output must be nonwrapping"
    assert is_ssyt(record), "recording tableau must be semistandard"
    return CollapsePair(nonwrap, record)


def partial_collapse(m: MLQ, k: int) -> MLQ:
    """rho applied to the truncation of m to rows 1..k."""
    if not 1 <= k <= m.height:
        raise IndexError(f"truncation level {k} outside 1..{m.height}")
    truncated = MLQ(m.n, m.rows[:k])
    return collapse(truncated).nonwrap


def _record_shape_content(record: SSYT) -> tuple[Partition, Partition]:
    """(mu, lam) with record in SSYT(mu', lam'); raises on malformed input."""
    if not is_ssyt(record):
        raise InvalidPairError("record is not a semistandard tableau")
    mu_conj = tuple(len(r) for r in record)
    if any(mu_conj[i] < mu_conj[i + 1] for i in range(len(mu_conj) - 1)):
        raise InvalidPairError("record shape is not a partition")
    lam_conj = content(record)
    if any(lam_conj[i] < lam_conj[i + 1] for i in range(len(lam_conj) - 1)):
        raise InvalidPairError("record content is not conjugate-partition shaped")
    return conjugate(mu_conj), conjugate(tuple(c for c in lam_conj if c))


def uncollapse(pair: CollapsePair) -> MLQ:
    """The unique m with collapse(m) == pair.

    Stages are inverted from the top: undoing stage i applies f_up_k exactly
    c_{i,k} times at each level k = 1..i, where c_{i,k} is the number of boxes
    labeled i+1 in rows 1..k of the record.
    """
    nonwrap, record = pair.nonwrap, pair.record
    mu, lam = _record_shape_content(record)
    if not is_nonwrapping(nonwrap):
        raise InvalidPairError("first component must be nonwrapping")
    if nonwrap.trim().row_sizes() != tuple(len(r) for r in record):
        raise InvalidPairError(
            f"record shape {tuple(len(r) for r in record)} does not match "
            f"row sizes {nonwrap.trim().row_sizes()}"
        )
    L = lam[0] if lam else 0
    current = nonwrap
    for i in range(L - 1, 0, -1):
        boxes = [sum(1 for x in row if x == i + 1) for row in record]
        for k in range(1, i + 1):
            lifts = sum(boxes[j] for j in range(min(k, len(boxes))))
            for _ in range(lifts):
                current, acted = row_lift(current, k)
                if not acted:
                    raise InvalidPairError(
                        f"stage {i}: row lift at level {k} has no ball to move"
                    )
    result = current.trim()
    if collapse(result).record != record:
        raise InvalidPairError("pair is not in the image of the collapsing map")
    return result


def charge_equals_maj(m: MLQ) -> bool:
    """Theorem check helper: maj(m) == charge of the recording tableau."""
    from .tableaux import charge

    return maj(m) == charge(collapse(m).record)
