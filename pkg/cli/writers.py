# cli/writers.py - Deterministic CSV and JSON artifacts
"""
Artifact writers for the batch commands.

- CSV: fixed '.17g' floats, '.' decimal, '\n' line ends, so identical
  inputs give byte-identical files
- JSON: sorted keys, numpy and complex values converted to plain types,
  non-finite floats written as null
"""

import csv
import json
import logging
import math
from pathlib import Path

import numpy as np

from core.conf import r11_setting

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '.17g'


def resolve_output(path):
    """Absolute output path; relative paths go under OUTPUT_DIR. Parents are created."""
    path = Path(path)
    if not path.is_absolute():
        path = Path(r11_setting('OUTPUT_DIR')) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def format_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), FLOAT_FORMAT)
    if isinstance(value, (list, tuple)):
        return '; '.join(str(item) for item in value)
    return str(value)


def write_csv(path, header, rows):
    """
    Write one CSV artifact

    Args:
        path: output path (relative to OUTPUT_DIR unless absolute)
        header: column names
        rows: iterable of row sequences

    Returns:
        Path: the file written
    """
    path = resolve_output(path)
    count = 0
    with path.open('w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])
            count += 1
    logger.info(f"Wrote {count} row(s) to {path}")
    return path


def make_json_safe(obj):
    """Nested numpy / complex values as plain JSON types"""
    if isinstance(obj, dict):
        return {str(key): make_json_safe(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [make_json_safe(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return make_json_safe(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return [make_json_safe(float(obj.real)), make_json_safe(float(obj.imag))]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return value if math.isfinite(value) else None
    if isinstance(obj, Path):
        return str(obj)
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def write_report(path, report):
    path = resolve_output(path)
    with path.open('w', encoding='utf-8') as handle:
        json.dump(make_json_safe(report), handle, indent=2, sort_keys=True)
        handle.write('\n')
    logger.info(f"Wrote report to {path}")
    return path
