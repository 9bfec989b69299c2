"""Database files, the query language and the ``qdb`` command line."""
from .database import Database, load_database, parse_database, parse_relation
from .evaluate import Result, evaluate
from .query import Apply, QueryExpr, Ref, parse_query

__all__ = ["Apply", "Database", "QueryExpr", "Ref", "Result", "evaluate", "load_database", "parse_database", "parse_relation", "parse_query"]
