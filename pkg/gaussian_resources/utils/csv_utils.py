"""
CSV Utility Module

Writes sweep rows as CSV preceded by ``# key=value`` header comment lines, so
plotting scripts can check the column version before parsing.

Functions:
    - format_value: Full-precision text for a cell.
    - write_csv_with_header: Writes the header comments, column names and rows.
"""

import csv
import io
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

__all__ = ['format_value', 'write_csv_with_header']


def format_value(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def write_csv_with_header(header_kv: Dict[str, Any], columns: Sequence[str],
                          rows: List[Sequence[Any]], file_path: Optional[str] = None) -> str:
    """
    Args:
        header_kv (Dict[str, Any]): Written as ``# key=value`` lines.
        columns (Sequence[str]): Column names.
        rows (List[Sequence[Any]]): Cells, formatted with ``format_value``.
        file_path (str, optional): Destination; stdout when omitted.

    Returns:
        str: The text written.
    """
    buffer = io.StringIO()
    for k, v in header_kv.items():
        buffer.write(f"# {k}={v}\n")
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(cell) for cell in row])
    text = buffer.getvalue()
    if file_path is None:
        sys.stdout.write(text)
    else:
        with open(os.path.expanduser(file_path), 'w', newline='', encoding='utf-8') as f:
            f.write(text)
    return text
