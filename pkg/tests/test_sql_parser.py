from __future__ import annotations

import pytest

from babelsql.sql import (
    AggOp,
    CmpOp,
    ColumnName,
    ColUnit,
    Condition,
    ConditionList,
    NumberValue,
    SelectItem,
    SelectStmt,
    SqlParseError,
    SqlResolutionError,
    TableSource,
    ValUnit,
    parse_sql,
    print_sql,
)


def test_hand_built_tree(toy_schema):
    tree = parse_sql("SELECT count(*) FROM head WHERE age > 56", toy_schema)
    star = ColUnit(AggOp.NONE, ColumnName(None, "*"))
    age = ColUnit(AggOp.NONE, ColumnName("head", "age"))
    expected = SelectStmt(
        items=(SelectItem(AggOp.COUNT, ValUnit(star)),),
        sources=(TableSource(table="head"),),
        where=ConditionList(
            (Condition(False, CmpOp.GT, ValUnit(age), NumberValue(56.0, "56")),), ()
        ),
    )
    assert tree == expected


def test_star_select(toy_schema):
    tree = parse_sql("SELECT * FROM head", toy_schema)
    assert tree.items[0].val.left.col.is_star
    assert tree.sources[0].table == "head"


def test_syntax_error_has_position(toy_schema):
    with pytest.raises(SqlParseError) as err:
        parse_sql("SELECT FROM", toy_schema)
    assert not isinstance(err.value, SqlResolutionError)


def test_unknown_identifier_names_token(toy_schema):
    with pytest.raises(SqlResolutionError) as err:
        parse_sql("SELECT chief FROM department", toy_schema)
    assert err.value.token == "chief"
    assert err.value.kind == "column"


def test_unknown_table(toy_schema):
    with pytest.raises(SqlResolutionError) as err:
        parse_sql("SELECT name FROM ministry", toy_schema)
    assert err.value.kind == "table"


def test_empty_text_rejected(toy_schema):
    with pytest.raises(SqlParseError):
        parse_sql("   ", toy_schema)


def test_alias_resolution_flattens(toy_schema):
    direct = parse_sql(
        "SELECT head.name FROM head JOIN department ON head.department_id = department.department_id",
        toy_schema,
    )
    aliased = parse_sql(
        "SELECT T1.name FROM head AS T1 JOIN department AS T2 ON T1.department_id = T2.department_id",
        toy_schema,
    )
    assert direct == aliased


def test_case_insensitive_keywords_and_identifiers(toy_schema):
    a = parse_sql("select NAME from HEAD where AGE > 10", toy_schema)
    b = parse_sql("SELECT name FROM head WHERE age > 10", toy_schema)
    assert a == b


def test_string_literal_case_preserved(toy_schema):
    tree = parse_sql("SELECT name FROM department WHERE city = 'Tokyo'", toy_schema)
    assert tree.where.conditions[0].value.value == "Tokyo"


@pytest.mark.parametrize(
    "sql",
    [
        "SELECT name FROM head",
        "SELECT count(*) FROM head WHERE age > 56",
        "SELECT name , budget FROM department WHERE city = 'Tokyo'",
        "SELECT name FROM department ORDER BY budget DESC LIMIT 1",
        "SELECT city , count(*) FROM department GROUP BY city HAVING count(*) > 2",
        "SELECT budget - department_id FROM department",
        "SELECT name FROM department ORDER BY max(budget) - min(budget) DESC",
        "SELECT T1.name FROM head AS T1 JOIN department AS T2 ON T1.department_id = T2.department_id WHERE T2.budget > 100",
        "SELECT name FROM department WHERE department_id NOT IN ( SELECT department_id FROM head )",
        "SELECT name FROM department WHERE budget BETWEEN 10 AND 20",
        "SELECT name FROM department WHERE city = 'Tokyo' UNION SELECT name FROM head WHERE age < 30",
        "SELECT avg(age) FROM head WHERE name LIKE 'M%'",
        "SELECT name FROM department WHERE budget > ( SELECT avg(budget) FROM department )",
        "SELECT count(*) FROM ( SELECT name FROM department WHERE budget > 3 )",
        "SELECT DISTINCT city FROM department",
        "SELECT count(DISTINCT city) FROM department",
    ],
)
def test_print_parse_fixpoint(toy_schema, sql):
    tree = parse_sql(sql, toy_schema)
    assert parse_sql(print_sql(tree), toy_schema) == tree


def test_trailing_garbage_rejected(toy_schema):
    with pytest.raises(SqlParseError):
        parse_sql("SELECT name FROM head extra", toy_schema)


def test_unterminated_string(toy_schema):
    with pytest.raises(SqlParseError, match="unterminated"):
        parse_sql("SELECT name FROM department WHERE city = 'Tok", toy_schema)
