"""Decide local testability and local idempotency of automata and semigroups."""

import json

from ._loctest import (
    DEFAULT_CAP,
    DEFAULT_PRODUCT_CAP,
    CapExceeded,
    Dfa,
    FiniteSemigroup,
    enumerate_dfas,
    parse_cayley,
    parse_dfa,
    random_dfas,
    transition_semigroup,
)
from . import _loctest

PROPERTIES = ("loc-idem", "right-lt", "left-lt")
ROUTES = ("graph", "semigroup", "oracle")

__all__ = [
    "CapExceeded",
    "Dfa",
    "FiniteSemigroup",
    "PROPERTIES",
    "ROUTES",
    "cross_validate",
    "decide",
    "enumerate_dfas",
    "parse",
    "parse_cayley",
    "parse_dfa",
    "random_dfas",
    "transition_semigroup",
    "verify_witness",
]


def parse(text):
    """Parse a `dfa` or `semigroup` document, chosen by its header token."""
    for line in text.splitlines():
        head = line.split("#", 1)[0].split()
        if head:
            return parse_cayley(text) if head[0] == "semigroup" else parse_dfa(text)
    raise ValueError("empty input")


def decide(instance, prop, route="graph", cap=DEFAULT_CAP, product_cap=DEFAULT_PRODUCT_CAP):
    """Verdict as a dict with keys property, holds, route, witness, stats."""
    return json.loads(_loctest._decide_json(instance, prop, route, cap, product_cap))


def verify_witness(instance, verdict):
    """Re-check the witness of a verdict dict against the instance."""
    return _loctest._verify_witness_json(instance, json.dumps(verdict))


def cross_validate(instances, cap=DEFAULT_CAP, jobs=1, keep_going=False):
    """Run every route on each automaton; returns (records, summary)."""
    text = _loctest._cross_validate(list(instances), cap, jobs, keep_going, "json")
    lines = [json.loads(line) for line in text.splitlines() if line.strip()]
    summary = lines[-1]["summary"]
    return lines[1:-1], summary
