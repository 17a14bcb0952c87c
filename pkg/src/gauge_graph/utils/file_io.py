"""
file I/O
"""

import io
import csv
import json

from .shared_const import CSV_DIGITS

__all__ = ['read', 'write', 'dumps_json', 'format_number', 'write_csv_rows']


def read(filename):
    with open(filename, 'r', encoding='utf-8') as f:
        return f.read()

def write(filename, string):
    with open(filename, 'w', encoding='utf-8', newline='') as f:
        f.write(string)

def dumps_json(data):
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True) + '\n'

def format_number(value, digits=CSV_DIGITS):
    return '{:.{}g}'.format(float(value), digits)

def write_csv_rows(header, rows, stream=None, digits=CSV_DIGITS):
    """Write numeric rows as RFC-4180 CSV; returns the text when no stream is given.
    """
    out = stream if stream is not None else io.StringIO()
    writer = csv.writer(out, lineterminator='\r\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v, digits) for v in row])
    if stream is None:
        return out.getvalue()
    return None
