import pytest

from mlqkit.collapse import CollapsePair, collapse, partial_collapse, uncollapse
from mlqkit.combinat import compress, conjugate, dominates, partitions_of
from mlqkit.crystal import col_lower, col_raise
from mlqkit.errors import InvalidPairError, ShapeError
from mlqkit.mlq import (
    MLQ,
    content_monomial,
    enumerate_mlq,
    is_nonwrapping,
    maj,
    mlq_type,
    straight_mlq,
)
from mlqkit.tableaux import charge, superstandard

RECORD = ((1, 1, 1, 1, 2, 4), (2, 2, 2, 3), (3, 3, 3, 5), (4, 4), (5,))


def test_collapse_paper_example(collapsing_example):
    pair = collapse(collapsing_example)
    assert pair.nonwrap.shape() == (5, 4, 3, 3, 1, 1)
    assert pair.nonwrap.sorted_rows() == (
        (1, 2, 3, 4, 5, 6),
        (3, 4, 5, 6),
        (2, 3, 4, 5),
        (1, 4),
        (3,),
    )
    assert pair.record == RECORD
    assert maj(pair.nonwrap) == 0
    assert charge(pair.record) == 4 == maj(collapsing_example)
    assert mlq_type(pair.nonwrap) == (1, 1, 4, 5, 3, 3)


def test_collapse_nonwrapping_gives_superstandard():
    for lam in [(2, 1), (3, 1), (2, 2)]:
        for m in enumerate_mlq(lam, 4):
            if is_nonwrapping(m):
                pair = collapse(m)
                assert pair.nonwrap == m
                assert pair.record == superstandard(conjugate(lam))


def test_collapse_preserves_content(fm_example):
    pair = collapse(fm_example)
    assert maj(pair.nonwrap) == 0
    assert content_monomial(pair.nonwrap) == (1, 1, 3, 2, 2)


def test_collapse_rejects_bad_shape():
    with pytest.raises(ShapeError):
        collapse(MLQ.make(3, [{1}, {1, 2}]))


def test_partial_collapse(collapsing_example):
    full = collapse(collapsing_example).nonwrap
    assert partial_collapse(collapsing_example, 5) == full
    k1 = partial_collapse(collapsing_example, 1)
    assert k1.rows[0] == collapsing_example.rows[0]
    assert mlq_type(partial_collapse(collapsing_example, 4)) == (1, 1, 4, 4, 3, 2)
    with pytest.raises(IndexError):
        partial_collapse(collapsing_example, 6)


def test_uncollapse_roundtrip_exhaustive():
    for k in range(1, 6):
        for lam in partitions_of(k):
            if conjugate(lam)[0] > 4:
                continue
            for m in enumerate_mlq(lam, 4):
                assert uncollapse(collapse(m)) == m


def test_uncollapse_against_lookup_oracle():
    # build the lookup table by exhausting the forward map, then demand that
    # the staged-count inversion reproduces it on every pair
    lam, n = (3, 2), 4
    table = {}
    for m in enumerate_mlq(lam, n):
        pair = collapse(m)
        table[(pair.nonwrap, pair.record)] = m
    assert len(table) == len(list(enumerate_mlq(lam, n)))
    for (nonwrap, record), m in table.items():
        assert uncollapse(CollapsePair(nonwrap, record)) == m


def test_uncollapse_superstandard():
    for lam in [(2, 2), (3, 1)]:
        for m in enumerate_mlq(lam, 4):
            if is_nonwrapping(m):
                assert uncollapse(CollapsePair(m, superstandard(conjugate(lam)))) == m


def test_uncollapse_straight_with_paper_record():
    m_mu = straight_mlq((5, 4, 3, 3, 1, 1), 6)
    preimage = uncollapse(CollapsePair(m_mu, RECORD))
    assert maj(preimage) == 4


def test_uncollapse_rejects_wrapping_first_component():
    wrapping = MLQ.make(2, [{1}, {2}])
    assert maj(wrapping) == 1
    with pytest.raises(InvalidPairError):
        uncollapse(CollapsePair(wrapping, ((1, 2),)))


def test_uncollapse_rejects_shape_mismatch():
    with pytest.raises(InvalidPairError):
        uncollapse(CollapsePair(straight_mlq((1, 1)), ((1,),)))


def test_uncollapse_rejects_non_ssyt():
    with pytest.raises(InvalidPairError):
        uncollapse(CollapsePair(straight_mlq((1, 1)), ((2, 1),)))


def test_uncollapse_rejects_row_size_mismatch():
    # record shape (3,1) against a single-row queue
    n = straight_mlq((1, 1, 1))
    bad = ((1, 2, 2), (2,))
    with pytest.raises(InvalidPairError):
        uncollapse(CollapsePair(n, bad))


def test_uncollapse_rejects_bad_content():
    # record content (1,2) is not conjugate to any partition
    n = straight_mlq((2, 1))
    with pytest.raises(InvalidPairError):
        uncollapse(CollapsePair(n, ((2, 2), (3,))))


def test_every_valid_pair_has_a_preimage():
    # the image is the full disjoint union over dominated shapes
    from mlqkit.tableaux import enumerate_ssyt

    lam = (2, 2)
    for mu in partitions_of(4):
        if conjugate(mu) and conjugate(mu)[0] > 4:
            continue
        records = list(enumerate_ssyt(conjugate(mu), conjugate(lam)))
        assert bool(records) == dominates(lam, mu) if sum(mu) == 4 else True
        for nonwrap in enumerate_mlq(mu, 4):
            if not is_nonwrapping(nonwrap):
                continue
            for record in records:
                m = uncollapse(CollapsePair(nonwrap, record))
                assert collapse(m) == CollapsePair(nonwrap, record)


def test_collapse_commutes_with_column_ops():
    for lam in [(2, 1), (2, 2)]:
        for m in enumerate_mlq(lam, 3):
            pair = collapse(m)
            for i in range(1, 3):
                for op in (col_raise, col_lower):
                    image, acted = op(m, i)
                    if acted:
                        image_pair = collapse(image)
                        assert image_pair.nonwrap == op(pair.nonwrap, i)[0]
                        assert image_pair.record == pair.record


def test_one_row_collapse_deltas():
    for lam in [(2, 2), (3, 2), (2, 2, 1)]:
        for m in enumerate_mlq(lam, 4):
            alpha = mlq_type(collapse(m).nonwrap)
            beta = mlq_type(partial_collapse(m, m.height - 1))
            for a, b in zip(alpha, beta):
                assert a - b in (0, 1)
            # ascents persist from the partial collapse to the full one
            for i in range(len(alpha)):
                for j in range(i + 1, len(alpha)):
                    if beta[i] < beta[j]:
                        assert alpha[i] < alpha[j]


def test_coinversions_preserved():
    for lam in [(2, 2), (3, 1), (3, 2)]:
        for m in enumerate_mlq(lam, 4):
            alpha = mlq_type(m)
            beta = mlq_type(collapse(m).nonwrap)
            for i in range(len(alpha)):
                for j in range(i + 1, len(alpha)):
                    if alpha[i] < alpha[j]:
                        assert beta[i] < beta[j]


def test_fullness_preserved_by_collapse():
    from mlqkit.crystal import is_full

    for lam in [(2, 1), (2, 2), (3, 1)]:
        for m in enumerate_mlq(lam, 4):
            rho = collapse(m).nonwrap
            for i in range(1, 4):
                for direction in ("raise", "lower"):
                    if is_full(m, i, direction):
                        assert is_full(rho, i, direction)


def test_weaktype_and_sameq_small():
    for lam in [(2, 1), (2, 2), (3, 1)]:
        for n in (3, 4):
            fibers = {}
            for m in enumerate_mlq(lam, n):
                pair = collapse(m)
                fiber = fibers.setdefault(pair.record, {})
                key = mlq_type(pair.nonwrap)
                assert fiber.setdefault(key, mlq_type(m)) == mlq_type(m)
                skey = ("s",) + compress(key)
                assert fiber.setdefault(skey, compress(mlq_type(m))) == compress(
                    mlq_type(m)
                )


def test_collapsed_shape_dominated():
    for lam in [(2, 2), (3, 1), (2, 1, 1)]:
        for m in enumerate_mlq(lam, 4):
            assert dominates(lam, collapse(m).nonwrap.shape())
