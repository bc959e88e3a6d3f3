import pytest

import _apal


M1 = """
{
  "worlds": ["w", "v"],
  "agents": ["a"],
  "relations": {"a": [["w", "v"]]},
  "valuation": {"p": ["w"]}
}
"""


def test_parse_render_round_trip():
    f = _apal.parse("K a (p | ~q)")
    assert str(f) == "K a (p | ~q)"
    assert _apal.parse(str(f)) == f


def test_parse_error_has_message():
    with pytest.raises(_apal.FormulaParseError):
        _apal.parse("K a (p")


def test_measures_and_order():
    f = _apal.parse("[p] box q")
    assert f.size == 1 + 3 * 2
    assert f.box_depth == 1
    assert not f.is_box_free
    assert _apal.precedes(_apal.parse("p"), f)
    assert not _apal.precedes(f, f)


def test_model_checking():
    m = _apal.load_model(M1)
    assert m.worlds == ["w", "v"]
    assert _apal.truth_set(m, _apal.parse("dia K a p")) == ["w"]
    assert _apal.truth_set(m, _apal.parse("box (K a p | K a ~p)")) == []
    assert _apal.satisfies(m, "w", _apal.parse("<p> K a p"))
    assert _apal.valid_on(m, _apal.parse("K a p -> p"))
    assert _apal.box_oracle(m, "v", _apal.parse("~K a p"))
    assert not _apal.box_oracle(m, "w", _apal.parse("~K a p"))
    assert _apal.bisim_classes(m) == [["w"], ["v"]]
    assert _apal.load_model(m.to_json()).to_json() == m.to_json()


def test_reduction():
    result, steps = _apal.reduce(_apal.parse("[p] K a q"))
    assert result.is_epistemic
    assert steps
    assert _apal.weight(_apal.parse("[p] q")) < _apal.weight(
        _apal.parse("[p] [p] q")
    )


def test_axioms_and_derivations():
    assert _apal.match_axiom(_apal.parse("[q] false <-> ~q")) == "A8"
    assert _apal.match_axiom(_apal.parse("p & ~p")) is None
    accepted, step, reason = _apal.check_derivation(
        "1. p -> p ; A0\n2. box (p -> p) ; R3 1\n"
    )
    assert accepted, reason
    accepted, step, _ = _apal.check_derivation("1. p ; A0\n")
    assert not accepted and step == 1


def test_selftest_suites():
    for suite in _apal.selftest(seed=7, cases=60):
        assert suite["failures"] == 0, suite
