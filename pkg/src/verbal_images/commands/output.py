"""
Report output: JSON documents for machines, pandas tables for people.

Reports go to stdout; errors and logs go to stderr.
"""

import argparse
import json
import sys
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from ..constants import SCHEMA_VERSION
from ..exceptions import VerbalImagesError


def _json_default(value: Any) -> Any:
    # numpy scalars and Fractions
    if hasattr(value, 'item'):
        return value.item()
    return str(value)


def to_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, default=_json_default)


def emit(args: argparse.Namespace, report: Dict[str, Any],
         table: Optional[pd.DataFrame] = None, summary: Iterable[str] = ()) -> None:
    """Print the report as JSON with --json, otherwise a summary and an optional table."""
    if getattr(args, 'json', False):
        print(to_json(report))
        return
    for line in summary:
        print(line)
    if table is not None and not table.empty:
        print()
        print(table.to_string(index=False))


def key_values(report: Dict[str, Any], keys: List[str]) -> List[str]:
    """`key: value` lines for the scalar fields of a report."""
    width = max((len(k) for k in keys), default=0)
    return [f"{k.ljust(width)} : {report[k]}" for k in keys if k in report]


def emit_error(args: Optional[argparse.Namespace], error: VerbalImagesError) -> None:
    if args is not None and getattr(args, 'json', False):
        payload = {'schema': SCHEMA_VERSION, **error.to_dict()}
        print(to_json(payload), file=sys.stderr)
    else:
        print(f"error: {error}", file=sys.stderr)
