"""babelsql: a multilingual text-to-SQL dataset toolkit.

Loads Spider-format datasets in seven languages, checks their consistency,
scores predictions with clause-level exact match and difficulty buckets,
measures question/schema lexical overlap, augments schemas through verified
back-translation, synthesizes expanded training data, and prepares zero-shot
transfer datasets.
"""

__version__ = "0.1.0"

from .dataset import Dataset, DatasetStats, Example, Split, dataset_stats, emit_examples, load_examples
from .languages import Language, entailment_threshold
from .qa import FindingCode, QaFinding, Severity, validate_dataset, validate_example
from .schema import ColumnDef, ColumnRef, ColumnType, DatabaseSchema, TableDef, emit_schemas, load_schemas

__all__ = [
    "ColumnDef",
    "ColumnRef",
    "ColumnType",
    "DatabaseSchema",
    "Dataset",
    "DatasetStats",
    "Example",
    "FindingCode",
    "Language",
    "QaFinding",
    "Severity",
    "Split",
    "TableDef",
    "dataset_stats",
    "emit_examples",
    "emit_schemas",
    "entailment_threshold",
    "load_examples",
    "load_schemas",
    "validate_dataset",
    "validate_example",
    "__version__",
]
