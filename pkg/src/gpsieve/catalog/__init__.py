"""Group catalog: Appendix-style subgroup records and their exact orders."""

from .catalog import (
    CatalogError,
    GroupSpec,
    PrintedValues,
    default_catalog,
    default_catalog_path,
    default_values_path,
    index_of,
    load_catalog,
    load_printed_values,
    parent_order,
)
from .expr import EvaluationError, ParseError, evaluate, parse_order_expr, to_source

__all__ = [
    "CatalogError",
    "EvaluationError",
    "GroupSpec",
    "PrintedValues",
    "ParseError",
    "default_catalog",
    "default_catalog_path",
    "default_values_path",
    "evaluate",
    "index_of",
    "load_catalog",
    "load_printed_values",
    "parent_order",
    "parse_order_expr",
    "to_source",
]
