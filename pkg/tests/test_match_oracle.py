"""Hand-suite verdicts plus implementation/oracle agreement on them."""

from __future__ import annotations

import pytest

import spider_oracle as oracle
from handsuite import HAND_PAIRS, HAND_TABLES_ENTRY

from babelsql.schema import schema_from_spider_entry
from babelsql.sql import canonicalize, exact_match, parse_sql


@pytest.fixture(scope="module")
def hand_schema():
    return schema_from_spider_entry(HAND_TABLES_ENTRY)


@pytest.fixture(scope="module")
def oracle_side():
    return (
        oracle.schema_from_tables_entry(HAND_TABLES_ENTRY),
        oracle.build_foreign_key_map(HAND_TABLES_ENTRY),
    )


def test_suite_is_large_enough():
    assert len(HAND_PAIRS) >= 50


@pytest.mark.parametrize("gold,pred,expected", HAND_PAIRS, ids=range(len(HAND_PAIRS)))
def test_hand_pair_verdict(hand_schema, gold, pred, expected):
    g = canonicalize(parse_sql(gold, hand_schema), hand_schema)
    p = canonicalize(parse_sql(pred, hand_schema), hand_schema)
    assert exact_match(p, g).matched is expected


@pytest.mark.parametrize("gold,pred,expected", HAND_PAIRS, ids=range(len(HAND_PAIRS)))
def test_oracle_agrees_on_hand_pair(oracle_side, gold, pred, expected):
    oschema, kmap = oracle_side
    hardness, exact, gold_ok, pred_ok = oracle.evaluate_pair(oschema, kmap, gold, pred)
    assert gold_ok and pred_ok
    assert exact is expected


@pytest.mark.parametrize("gold,pred,expected", HAND_PAIRS, ids=range(len(HAND_PAIRS)))
def test_hardness_agrees_on_hand_pair(hand_schema, oracle_side, gold, pred, expected):
    oschema, kmap = oracle_side
    for sql in (gold, pred):
        mine = canonicalize(parse_sql(sql, hand_schema), hand_schema).hardness.value
        theirs, _, ok, _ = oracle.evaluate_pair(oschema, kmap, sql, sql)
        assert ok
        assert mine == theirs


def test_exact_match_is_symmetric_and_reflexive(hand_schema):
    for gold, pred, _ in HAND_PAIRS:
        g = canonicalize(parse_sql(gold, hand_schema), hand_schema)
        p = canonicalize(parse_sql(pred, hand_schema), hand_schema)
        assert exact_match(g, g).matched and exact_match(p, p).matched
        assert exact_match(p, g).matched == exact_match(g, p).matched


def test_transitivity_on_suite_closure(hand_schema):
    forms = []
    for gold, pred, _ in HAND_PAIRS:
        forms.append(canonicalize(parse_sql(gold, hand_schema), hand_schema))
        forms.append(canonicalize(parse_sql(pred, hand_schema), hand_schema))
    for a in forms:
        for b in forms:
            for c in forms:
                if exact_match(a, b).matched and exact_match(b, c).matched:
                    assert exact_match(a, c).matched


def test_mismatched_abstraction_flags_rejected(hand_schema):
    tree = parse_sql("SELECT name FROM singer", hand_schema)
    abstract = canonicalize(tree, hand_schema, abstract_values=True)
    concrete = canonicalize(tree, hand_schema, abstract_values=False)
    with pytest.raises(ValueError):
        exact_match(abstract, concrete)


def test_value_sensitive_mode_distinguishes(hand_schema):
    def canon(sql):
        return canonicalize(parse_sql(sql, hand_schema), hand_schema, abstract_values=False)

    assert not exact_match(
        canon("SELECT name FROM singer WHERE age > 30"),
        canon("SELECT name FROM singer WHERE age > 50"),
    ).matched
    assert not exact_match(
        canon("SELECT city FROM stadium"), canon("SELECT DISTINCT city FROM stadium")
    ).matched
    assert not exact_match(
        canon("SELECT name FROM stadium ORDER BY capacity DESC LIMIT 1"),
        canon("SELECT name FROM stadium ORDER BY capacity DESC LIMIT 3"),
    ).matched
    assert exact_match(
        canon("SELECT name FROM stadium WHERE city = 'Tokyo'"),
        canon("SELECT name  FROM stadium WHERE city = 'Tokyo'"),
    ).matched
    # string comparison is case-sensitive in value mode
    assert not exact_match(
        canon("SELECT name FROM stadium WHERE city = 'Tokyo'"),
        canon("SELECT name FROM stadium WHERE city = 'tokyo'"),
    ).matched


def test_per_clause_flags_for_missing_limit(hand_schema):
    gold = canonicalize(
        parse_sql("SELECT name FROM stadium ORDER BY capacity DESC LIMIT 1", hand_schema),
        hand_schema,
    )
    pred = canonicalize(
        parse_sql("SELECT name FROM stadium ORDER BY capacity DESC", hand_schema), hand_schema
    )
    outcome = exact_match(pred, gold)
    assert not outcome.matched
    assert outcome.per_clause["order"] is False
    assert outcome.per_clause["keywords"] is False
    assert outcome.per_clause["select"] is True
    assert outcome.per_clause["from(tables)"] is True
