import pytest

from mlqkit.collapse import CollapsePair, collapse, uncollapse
from mlqkit.combinat import conjugate, partitions_of, weak_compositions_of
from mlqkit.errors import ContentError, FillingError, NotNonwrappingError, SizeError
from mlqkit.mlq import (
    MLQ,
    content_monomial,
    enumerate_mlq,
    is_nonwrapping,
    maj,
    mlq_type,
    straight_mlq,
)
from mlqkit.tableaux import (
    CompositionFilling,
    charge,
    content,
    enumerate_ssyt,
    filling_to_mlq,
    is_ssyt,
    mlq_to_ssaf,
    mlq_to_ssqt,
    reading_word,
    ssqt_maj,
    ssqt_type,
    superstandard,
)

SSAF_TABLE = [
    # (queue rows, filling columns) for the eight fillings of shape (1,0,3,2)
    (((1, 3, 4), (2, 3), (3,)), ((1,), (), (3, 3, 3), (4, 2))),
    (((1, 3, 4), (3, 4), (3,)), ((1,), (), (3, 3, 3), (4, 4))),
    (((1, 3, 4), (2, 3), (2,)), ((1,), (), (3, 3, 2), (4, 2))),
    (((1, 3, 4), (2, 3), (1,)), ((1,), (), (3, 3, 1), (4, 2))),
    (((1, 3, 4), (3, 4), (2,)), ((1,), (), (3, 3, 2), (4, 4))),
    (((1, 3, 4), (3, 4), (1,)), ((1,), (), (3, 3, 1), (4, 4))),
    (((1, 3, 4), (2, 4), (2,)), ((1,), (), (3, 2, 2), (4, 4))),
    (((1, 3, 4), (2, 4), (1,)), ((1,), (), (3, 2, 1), (4, 4))),
]


def test_enumerate_ssyt_small():
    assert list(enumerate_ssyt((2,), (1, 1))) == [((1, 2),)]
    assert list(enumerate_ssyt((1, 1), (1, 1))) == [((1,), (2,))]
    assert len(list(enumerate_ssyt((2, 1), (1, 1, 1)))) == 2


def test_enumerate_ssyt_validates():
    for shape, cont in [((2, 1), (1, 1, 1)), ((3, 2), (2, 2, 1)), ((2, 2), (1, 1, 1, 1))]:
        for t in enumerate_ssyt(shape, cont):
            assert is_ssyt(t)
            assert content(t)[: len(cont)] == cont
    with pytest.raises(SizeError):
        list(enumerate_ssyt((2, 1), (1, 1)))


def test_enumerate_ssyt_distinct():
    out = list(enumerate_ssyt((2, 2), (1, 1, 1, 1)))
    assert len(out) == len(set(out))


def test_superstandard():
    t = superstandard((3, 2))
    assert t == ((1, 1, 1), (2, 2))
    assert is_ssyt(t)
    assert charge(t) == 0


def test_reading_word_top_down():
    assert reading_word(((1, 1, 1, 1, 2, 4), (2, 2, 2, 3))) == (
        2, 2, 2, 3, 1, 1, 1, 1, 2, 4,
    )


def test_charge_examples(collapsing_example):
    assert charge(((1, 2),)) == 1
    assert charge(((1,), (2,))) == 0
    record = collapse(collapsing_example).record
    assert charge(record) == 4


def test_charge_against_mlq_preimage_oracle():
    # the straight two-ball queue has a unique collapse preimage in the
    # two-row shape, and it wraps once: this pins charge([1,2]) = 1
    preimages = [
        m
        for m in enumerate_mlq((2,), 2)
        if collapse(m).nonwrap == straight_mlq((1, 1)).trim()
    ]
    assert len(preimages) == 1
    assert maj(preimages[0]) == 1
    assert collapse(preimages[0]).record == ((1, 2),)


def test_charge_standard_word_count():
    # charge distributes the Kostka number q-analog on standard content
    polys = {}
    for t in enumerate_ssyt((2, 1), (1, 1, 1)):
        polys[t] = charge(t)
    assert sorted(polys.values()) == [1, 2]


def test_charge_needs_partition_content():
    with pytest.raises(ContentError):
        charge(((2, 2), (3,)))


def test_charge_matches_maj_through_uncollapse():
    # charge(Q) = maj(uncollapse(M_mu, Q)) for every recording tableau
    lam = (2, 2)
    for mu in partitions_of(4):
        if len(mu) > 4:
            continue
        m_mu = straight_mlq(mu, 4)
        for q in enumerate_ssyt(conjugate(mu), conjugate(lam)):
            assert charge(q) == maj(uncollapse(CollapsePair(m_mu, q)))


def test_ssaf_example_table():
    for rows, cols in SSAF_TABLE:
        m = MLQ.make(4, rows)
        assert is_nonwrapping(m)
        assert mlq_type(m) == (1, 0, 3, 2)
        f = mlq_to_ssaf(m)
        assert f.shape == (1, 0, 3, 2)
        assert f.kind == "SSAF"
        assert f.columns == cols
        back = filling_to_mlq(f, 4)
        assert back.rows == m.rows


def test_ssaf_straight():
    f = mlq_to_ssaf(straight_mlq((2, 0, 1)))
    assert f.columns == ((1, 1), (), (3,))


def test_ssaf_rejects_wrapping():
    with pytest.raises(NotNonwrappingError):
        mlq_to_ssaf(MLQ.make(2, [{1}, {2}]))


def test_ssaf_bijection_small():
    # eta is a content-preserving bijection SSAF(alpha) <-> NMLQ[alpha]
    for k in range(1, 6):
        for ell in range(1, 5):
            for alpha in weak_compositions_of(k, ell):
                queues = [
                    m
                    for m in enumerate_mlq(
                        tuple(sorted((a for a in alpha if a), reverse=True)), ell
                    )
                    if is_nonwrapping(m) and mlq_type(m) == alpha
                ]
                fillings = set()
                for m in queues:
                    f = mlq_to_ssaf(m)
                    assert f.shape == alpha
                    fillings.add(f.columns)
                    entries = [x for col in f.columns for x in col]
                    counts = tuple(entries.count(i) for i in range(1, ell + 1))
                    assert counts == content_monomial(m)
                assert len(fillings) == len(queues)


def test_ssqt_example(quinv_example):
    f = mlq_to_ssqt(quinv_example)
    assert f.kind == "SSQT"
    assert f.shape == (4, 4, 3, 2)
    assert f.row_entries(1) == (4, 5, 6, 1)
    assert ssqt_maj(f) == 3 == maj(quinv_example)
    assert ssqt_type(f) == (2, 0, 0, 4, 4, 3) == mlq_type(quinv_example)


def test_ssqt_straight():
    f = mlq_to_ssqt(straight_mlq((2, 3)))
    assert f.shape == (3, 2)
    assert ssqt_maj(f) == 0
    assert ssqt_type(f) == (2, 3)


def test_ssqt_roundtrip_and_stats():
    for lam in [(2, 1), (2, 2), (3, 1), (3, 2, 1)]:
        for m in enumerate_mlq(lam, 4):
            f = mlq_to_ssqt(m)
            assert filling_to_mlq(f, 4).rows == m.rows
            assert ssqt_maj(f) == maj(m)
            t = ssqt_type(f)
            assert t + (0,) * (4 - len(t)) == mlq_type(m)


def test_filling_to_mlq_rejects_repeats():
    bad = CompositionFilling((2, 1), ((1, 1), (1,)), "SSQT")
    with pytest.raises(FillingError):
        filling_to_mlq(bad)


def test_single_cell_filling():
    f = CompositionFilling((0, 1), ((), (2,)), "SSAF")
    m = filling_to_mlq(f)
    assert m.rows == (frozenset({2}),)
