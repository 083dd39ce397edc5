from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpusgen import SynthCorpus, generate_corpus  # noqa: E402

from babelsql import Language, Split, load_examples, load_schemas  # noqa: E402

TOY_TABLES = [
    {
        "db_id": "department_management",
        "table_names": ["department", "head"],
        "table_names_original": ["department", "head"],
        "column_names": [
            [-1, "*"],
            [0, "department id"], [0, "name"], [0, "budget"], [0, "city"],
            [1, "head id"], [1, "name"], [1, "age"], [1, "department id"],
        ],
        "column_names_original": [
            [-1, "*"],
            [0, "department_id"], [0, "name"], [0, "budget"], [0, "city"],
            [1, "head_id"], [1, "name"], [1, "age"], [1, "department_id"],
        ],
        "column_types": [
            "text", "number", "text", "number", "text", "number", "text", "number", "number",
        ],
        "primary_keys": [1, 5],
        "foreign_keys": [[8, 1]],
    }
]

TOY_EXAMPLES = [
    {
        "db_id": "department_management",
        "question": "How many heads are older than 56?",
        "query": "SELECT count(*) FROM head WHERE age > 56",
    },
    {
        "db_id": "department_management",
        "question": "List the name of every department in Tokyo.",
        "query": "SELECT name FROM department WHERE city = 'Tokyo'",
    },
    {
        "db_id": "department_management",
        "question": "What are the names of heads of departments with the largest budget?",
        "query": (
            "SELECT T2.name FROM department AS T1 JOIN head AS T2 "
            "ON T1.department_id = T2.department_id ORDER BY T1.budget DESC LIMIT 1"
        ),
    },
]


@pytest.fixture(scope="session")
def toy_tables_file(tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("toy") / "tables.json"
    path.write_text(json.dumps(TOY_TABLES, ensure_ascii=False, indent=1), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def toy_examples_file(toy_tables_file) -> Path:
    path = toy_tables_file.parent / "dev.json"
    path.write_text(json.dumps(TOY_EXAMPLES, ensure_ascii=False, indent=1), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def toy_schemas(toy_tables_file):
    return load_schemas(toy_tables_file)


@pytest.fixture(scope="session")
def toy_schema(toy_schemas):
    return toy_schemas["department_management"]


@pytest.fixture(scope="session")
def toy_dataset(toy_examples_file, toy_schemas):
    return load_examples(toy_examples_file, toy_schemas, Split.DEV, Language.EN)


@pytest.fixture(scope="session")
def corpus(tmp_path_factory) -> SynthCorpus:
    """Full-scale synthetic Spider-format corpus (166 dbs, 9691 questions)."""
    root = tmp_path_factory.mktemp("corpus")
    return generate_corpus(root)


@pytest.fixture(scope="session")
def en_schemas(corpus):
    return load_schemas(corpus.tables_path("en"))


@pytest.fixture(scope="session")
def en_dev(corpus, en_schemas):
    return load_examples(corpus.examples_path("en", "dev"), en_schemas, Split.DEV, Language.EN)
