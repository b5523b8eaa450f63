import json

from click.testing import CliRunner

from mlqkit.cli import main

FM_EXAMPLE = json.dumps({"n": 5, "rows": [[1, 3, 4, 5], [2, 3, 4], [3, 5]]})
COLLAPSING_EXAMPLE = json.dumps(
    {"n": 6, "rows": [[1, 3, 4, 5], [2, 3, 4, 6], [2, 3, 4, 5], [1, 4, 6], [3, 5]]}
)


def run(args, stdin=None):
    return CliRunner().invoke(main, args, input=stdin, catch_exceptions=False)


def test_collapse_command():
    res = run(["collapse"], stdin=COLLAPSING_EXAMPLE)
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert body["maj"] == 4 and body["charge"] == 4
    assert body["record"]["rows"][0] == [1, 1, 1, 1, 2, 4]


def test_collapse_uncollapse_pipe():
    collapsed = json.loads(run(["collapse"], stdin=COLLAPSING_EXAMPLE).output)
    payload = json.dumps({"nonwrap": collapsed["nonwrap"], "record": collapsed["record"]})
    res = run(["uncollapse"], stdin=payload)
    assert res.exit_code == 0
    assert json.loads(res.output)["mlq"] == json.loads(COLLAPSING_EXAMPLE)


def test_op_command_trivial():
    res = run(["op", "e<4"], stdin=FM_EXAMPLE)
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert body["acted"] is False
    assert body["after"]["type"] == [1, 0, 3, 3, 2]


def test_op_command_sequence():
    res = run(["op", "e<2 f>1 f>2 f>2"], stdin=FM_EXAMPLE)
    assert res.exit_code == 0
    assert json.loads(res.output)["acted"] is True


def test_genfun_command():
    res = run(["genfun", "f", "--index", "1,0"])
    assert res.exit_code == 0
    assert json.loads(res.output) == {"n": 2, "terms": [{"exp": [1, 0], "q": [1]}]}


def test_expand_command():
    res = run(["expand", "atoms", "--index", "2,0"])
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert {tuple(c["index"]): c["q"] for c in body["coefficients"]} == {
        (2, 0): [1],
        (1, 1): [0, 1],
    }


def test_kostka_command():
    res = run(["kostka", "--lam", "2", "--mu", "1,1"])
    assert res.exit_code == 0
    assert json.loads(res.output)["q"] == [0, 1]


def test_graph_command(tmp_path):
    dot_file = tmp_path / "crystal.dot"
    res = run(
        [
            "graph",
            "--shape",
            "3,3,1,1",
            "--cols",
            "4",
            "--filter",
            "nonwrapping",
            "--components",
            "--dot-out",
            str(dot_file),
        ]
    )
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert body["vertex_count"] == 20
    assert len(body["components"]) == 1
    assert dot_file.read_text().startswith("digraph crystal {")


def test_enumerate_command():
    res = run(["enumerate", "--shape", "1", "--cols", "2"])
    assert res.exit_code == 0
    assert json.loads(res.output)["count"] == 2


def test_trace_command():
    mlq = json.dumps({"n": 4, "rows": [[2, 3, 4], [1, 2, 3], [2, 4], [1], [2]]})
    res = run(["trace", "f>2 f>2 f>1 e<2"], stdin=mlq)
    assert res.exit_code == 0
    types = [s["type"] for s in json.loads(res.output)["steps"]]
    assert types[0] == [0, 5, 3, 2] and types[-1] == [0, 5, 3, 2]
    assert [0, 3, 5, 2] in types


def test_verify_command_pass_and_exit_codes():
    res = run(["verify", "worked-examples"])
    assert res.exit_code == 0
    assert json.loads(res.output)["ok"] is True

    res = run(["verify", "no-such-suite"])
    assert res.exit_code == 2


def test_malformed_json_is_parse_error():
    res = run(["collapse"], stdin="{not json")
    assert res.exit_code == 2
    assert "ParseError" in res.output
    assert "line 1" in res.output


def test_semantic_error_exit_code():
    res = run(["collapse"], stdin=json.dumps({"n": 3, "rows": [[1], [1, 2]]}))
    assert res.exit_code == 2
    assert "ShapeError" in res.output


def test_kostka_size_error():
    res = run(["kostka", "--lam", "2", "--mu", "1,1,1"])
    assert res.exit_code == 2
    assert "SizeError" in res.output


def test_deterministic_output():
    a = run(["collapse"], stdin=COLLAPSING_EXAMPLE).output
    b = run(["collapse"], stdin=COLLAPSING_EXAMPLE).output
    assert a == b


def test_pretty_flag():
    res = run(["--pretty", "genfun", "f", "--index", "1,0"])
    assert res.exit_code == 0
    assert "\n  " in res.output
    assert json.loads(res.output)["n"] == 2


def test_emitted_json_roundtrips_through_consumers():
    # enumerate -> collapse -> uncollapse chain accepts each other's output
    res = run(["enumerate", "--shape", "2,1", "--cols", "3", "--limit", "3"])
    for entry in json.loads(res.output)["mlqs"]:
        collapsed = json.loads(run(["collapse"], stdin=json.dumps(entry)).output)
        payload = json.dumps(
            {"nonwrap": collapsed["nonwrap"], "record": collapsed["record"]}
        )
        back = json.loads(run(["uncollapse"], stdin=payload).output)
        assert back["mlq"] == entry
