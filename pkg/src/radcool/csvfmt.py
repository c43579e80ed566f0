"""CSV number formatting shared by the CLI and the oracle dump.

Floats are written with 9 significant digits.  Temperature-like columns
keep a decimal point even when the value is integral (``45.0``), so they
always read back as floats; time columns print a bare ``0`` at the origin.
"""

import csv

import numpy as np


def fmt(x):
    if isinstance(x, str):
        return x
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    return "%.9g" % float(x)


def fmt_decimal(x):
    s = fmt(x)
    if s and s.lstrip("-").isdigit():
        s += ".0"
    return s


def write_table(stream, header, columns, decimal_columns=None):
    """Write ``columns`` (equal-length sequences) under ``header``.

    ``decimal_columns`` holds the indices formatted with :func:`fmt_decimal`;
    by default every column but the first.
    """
    if decimal_columns is None:
        decimal_columns = set(range(1, len(header)))
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    formatters = [fmt_decimal if i in decimal_columns else fmt for i in range(len(header))]
    for row in zip(*columns):
        writer.writerow([f(v) for f, v in zip(formatters, row)])
