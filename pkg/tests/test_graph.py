import pytest

from mlqkit.combinat import conjugate, partitions_of
from mlqkit.errors import TooFewColumnsError, UsageError
from mlqkit.graph import build_graph, trace_path
from mlqkit.mlq import MLQ, enumerate_mlq
from mlqkit.tableaux import enumerate_ssyt


def test_single_ball_path():
    g = build_graph((1,), 2)
    assert len(g.vertices) == 2
    assert len(g.edges) == 1
    (u, v, i) = g.edges[0]
    assert i == 1
    assert g.vertices[u].type == (1, 0)
    assert g.vertices[v].type == (0, 1)
    assert len(g.components()) == 1


def test_requires_enough_columns():
    with pytest.raises(TooFewColumnsError):
        build_graph((1, 1, 1), 2)


def test_unknown_filter():
    with pytest.raises(UsageError):
        build_graph((1,), 2, "bogus")


def test_nonwrapping_crystal_connected():
    # the nonwrapping component of a shape crystal is connected
    for lam, n in [((2, 1), 3), ((2, 2), 4), ((3, 1), 4)]:
        g = build_graph(lam, n, "nonwrapping")
        assert len(g.components()) == 1


def test_components_are_record_fibers():
    for lam, n in [((2, 1), 3), ((2, 2), 3)]:
        g = build_graph(lam, n, "all")
        comps = g.components()
        records = {v.record for v in g.vertices}
        assert len(comps) == len(records)
        for comp in comps:
            assert len({g.vertices[v].record for v in comp}) == 1


def test_component_count_matches_record_count():
    for lam, n in [((2, 1), 3), ((3, 1), 4)]:
        g = build_graph(lam, n, "all")
        expected = 0
        for mu in partitions_of(sum(lam)):
            if conjugate(mu) and conjugate(mu)[0] > n:
                continue
            expected += sum(1 for _ in enumerate_ssyt(conjugate(mu), conjugate(lam)))
        assert len(g.components()) == expected


def test_fig1_small_side():
    g = build_graph((3, 3, 1, 1), 4, "nonwrapping")
    assert len(g.vertices) == 20
    assert len(g.components()) == 1
    sub = g.induced(lambda v: v.type == (1, 3, 1, 3))
    assert len(sub.vertices) == 5
    assert len(sub.components()) >= 2


def test_type_filter_induced_edges():
    g = build_graph((2, 1), 3, "type=2,1,0")
    for u, v, _ in g.edges:
        assert g.vertices[u].type == (2, 1, 0)
        assert g.vertices[v].type == (2, 1, 0)


def test_dot_output():
    g = build_graph((1,), 2)
    dot = g.to_dot()
    assert dot.startswith("digraph crystal {")
    assert 'v0 [label="[[1]]", type="(1,0)", maj=0' in dot
    assert "v0 -> v1 [label=1];" in dot
    assert dot.endswith("}\n")


def test_trace_path_paper_example():
    # the path passing through types (0,5,3,2) -> (0,3,5,2) -> (0,5,3,2)
    m = MLQ.make(4, [{2, 3, 4}, {1, 2, 3}, {2, 4}, {1}, {2}])
    ops = [("f>", 2), ("f>", 2), ("f>", 1), ("e<", 2)]
    steps = trace_path(m, ops)
    assert all(s["acted"] for s in steps)
    types = [s["type"] for s in steps]
    assert types[0] == (0, 5, 3, 2)
    assert types == [
        (0, 5, 3, 2),
        (0, 3, 5, 2),
        (0, 3, 5, 2),
        (0, 3, 5, 2),
        (0, 5, 3, 2),
    ]
    # the collapsed queues trace the parallel component types
    from mlqkit.collapse import collapse
    from mlqkit.mlq import mlq_type

    rho_types = [mlq_type(collapse(s["mlq"]).nonwrap) for s in steps]
    assert rho_types == [
        (1, 4, 3, 2),
        (1, 3, 4, 2),
        (1, 3, 4, 2),
        (1, 3, 4, 2),
        (1, 4, 3, 2),
    ]


def test_trace_path_trivial_and_stop():
    m = MLQ.make(2, [{1}])
    steps = trace_path(m, [])
    assert len(steps) == 1
    steps = trace_path(m, [("e<", 1), ("e<", 1)])
    assert not steps[-1]["acted"]
    assert len(steps) == 2  # stops at the first trivial action


def test_trace_preserves_maj():
    from mlqkit.mlq import maj

    m = MLQ.make(4, [{2, 3, 4}, {1, 2, 3}, {2, 4}, {1}, {2}])
    steps = trace_path(m, [("f>", 2), ("e<", 2)])
    assert len({maj(s["mlq"]) for s in steps}) == 1
