import os
from pathlib import Path

import pytest

import loctest

DATA = Path(os.environ.get("LOCTEST_TEST_DATA", Path(__file__).resolve().parent.parent / "data"))

TWO_CYCLE = "dfa\nstates: 2\nletters: 1\n0 0 1\n1 0 0\n"


def test_parse_and_apply():
    d = loctest.parse_dfa(TWO_CYCLE)
    assert d.state_count == 2
    assert d.transitions == [1, 0]
    assert d.apply(0, [0, 0]) == 0
    assert loctest.parse_dfa(d.serialize()) == d
    with pytest.raises(ValueError):
        loctest.parse_dfa("dfa\nstates: 2\nletters: 1\n0 0 1\n0 0 1\n")


def test_two_cycle_fails_everywhere():
    d = loctest.parse_dfa(TWO_CYCLE)
    for prop in loctest.PROPERTIES:
        for route in loctest.ROUTES:
            v = loctest.decide(d, prop, route)
            assert v["holds"] is False
            assert loctest.verify_witness(d, v)
    v = loctest.decide(d, "loc-idem", "graph")
    assert v["witness"]["kind"] == "graph-condition-1"
    assert (v["witness"]["p"], v["witness"]["q"]) == (0, 1)


def test_m3_semigroup():
    s = loctest.parse((DATA / "m3.sgp").read_text())
    assert isinstance(s, loctest.FiniteSemigroup)
    assert loctest.decide(s, "loc-idem", "oracle")["holds"]
    assert loctest.decide(s, "left-lt", "semigroup")["holds"]
    v = loctest.decide(s, "right-lt", "semigroup")
    assert not v["holds"]
    assert v["witness"]["kind"] == "unit-sharing"
    assert v["witness"]["f"] == 0
    assert loctest.verify_witness(s, v)
    with pytest.raises(ValueError):
        loctest.decide(s, "right-lt", "graph")


def test_transition_semigroup_and_cap():
    d = loctest.parse_dfa(TWO_CYCLE)
    s = loctest.transition_semigroup(d)
    assert s.order == 2
    assert s.table() == [1, 0, 0, 1]
    assert s.word(1) == [0, 0]
    assert s.opposite().table() == s.table()
    with pytest.raises(loctest.CapExceeded):
        loctest.transition_semigroup(d, cap=1)
    with pytest.raises(loctest.CapExceeded):
        loctest.decide(d, "loc-idem", "oracle", cap=1)


def test_generators():
    assert len(loctest.enumerate_dfas(2, 2)) == 16
    assert len(loctest.enumerate_dfas(2, 2, complete_only=False)) == 81
    a = loctest.random_dfas(4, 2, completeness=0.8, seed=5, count=10)
    assert a == loctest.random_dfas(4, 2, completeness=0.8, seed=5, count=10)
    complete = loctest.random_dfas(3, 2, completeness=1.0, seed=5, count=10)
    assert all(-1 not in d.transitions for d in complete)
    empty = loctest.random_dfas(3, 2, completeness=0.0, seed=5, count=1)[0]
    assert empty.transitions == [-1] * 6


def test_cross_validate():
    records, summary = loctest.cross_validate(loctest.enumerate_dfas(2, 2), jobs=2)
    assert len(records) == 16
    assert summary["disagreements"] == 0
    assert summary["witness_failures"] == 0
    assert summary["instances"] == 16
