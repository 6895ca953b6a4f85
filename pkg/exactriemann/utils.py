import csv
import io
import json
import math

from texttable import Texttable

from .exceptions import ConfigurationError

FORMATS = ('text', 'md', 'csv', 'json')

# columns whose values change between identical runs
NONDETERMINISTIC_COLUMNS = ('time_s',)


def formatValue(value):
    """
    Render one table cell. Floats keep six significant digits, non-finite floats print as nan/inf.

    :param value: Cell value
    :return: string
    """
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return f'{value:.6g}'
    if value is None:
        return '-'
    return str(value)


def _header(column, fmt):
    if fmt in ('text', 'md') and column in NONDETERMINISTIC_COLUMNS:
        return column + '*'
    return column


def renderTable(columns, rows, fmt='text', mask_timing=False):
    """
    Render rows as an ASCII table, a markdown table, CSV or JSON.
    Columns listed in NONDETERMINISTIC_COLUMNS get a trailing * in text and markdown headers.

    :param columns: Column names
    :param rows: Sequence of dicts keyed by column name
    :param fmt: One of FORMATS
    :param mask_timing: Replace nondeterministic columns by '-' so outputs can be diffed
    :return: string
    """
    if fmt not in FORMATS:
        raise ConfigurationError(f'Output format {fmt} not supported, use one of {", ".join(FORMATS)}')
    rows = [dict(row) for row in rows]
    if mask_timing:
        for row in rows:
            for column in NONDETERMINISTIC_COLUMNS:
                if column in row:
                    row[column] = None
    if fmt == 'json':
        return json.dumps([{column: row.get(column) for column in columns} for row in rows], indent=2)
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([formatValue(row.get(column)) for column in columns])
        return buffer.getvalue()

    table = Texttable(max_width=0)
    table.set_cols_dtype(['t'] * len(columns))
    if fmt == 'md':
        table.set_deco(Texttable.HEADER | Texttable.VLINES)
        table.set_chars(['-', '|', '|', '-'])
    table.header([_header(column, fmt) for column in columns])
    for row in rows:
        table.add_row([formatValue(row.get(column)) for column in columns])
    return table.draw() + '\n'


def writeOutput(text, path=None, stream=None):
    """
    Write rendered output to a file, or to stream when no path is given.
    """
    if path:
        with open(path, 'w', encoding='utf-8', newline='') as fh:
            fh.write(text)
    elif stream is not None:
        stream.write(text)
