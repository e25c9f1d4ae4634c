"""CSV and JSON writers for command results"""

import csv
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence


def write_rows(header: Sequence[str], rows: Iterable[Sequence], fmt: str = "csv", stream=None) -> None:
    """Write a table as CSV or as a JSON list of objects"""
    stream = stream or sys.stdout
    rows = [list(row) for row in rows]
    if fmt == "json":
        write_json([dict(zip(header, row)) for row in rows], stream)
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_json(payload, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def jump_columns(value) -> list:
    """A rational as [numerator, denominator] in lowest terms"""
    value = Fraction(value)
    return [value.numerator, value.denominator]


def status(message: str) -> None:
    """Human-readable progress line; never mixed into the payload"""
    print(message, file=sys.stderr)
