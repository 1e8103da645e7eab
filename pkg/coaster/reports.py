# -*- coding: utf-8 -*-
#
# Copyright 2026 The coaster authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rendering records as JSON, aligned text or CSV.

Reports hold no wall-clock values, so the same inputs always render to
the same bytes. Log2 figures are printed with two decimals.

"""

import csv
import io
import os

from coaster import errors, fields, inspection

FORMATS = ('json', 'text', 'csv')


def render(record, fmt='json'):
    if fmt == 'json':
        return to_json(record)
    if fmt == 'text':
        return to_text(record)
    if fmt == 'csv':
        return to_csv(record)

    raise errors.ValidationError('format should be in {}'.format(FORMATS))


def to_json(record):
    return record.to_json(indent=2, sort_keys=True) + '\n'


def to_text(record):
    """Scalar fields as a two-column table, then one table per
    collection field.

    """

    scalars = []
    tables = []

    for name, field in inspection.encoded_fields(record):
        value = getattr(record, name)

        if isinstance(field, fields.Collection):
            tables.append((name, field.model, value))
        elif isinstance(field, fields.Embedded) and value is not None:
            for inner, inner_value in _flatten(value):
                scalars.append(['{}.{}'.format(name, inner), inner_value])
        elif isinstance(field, fields.List) and value and \
                isinstance(value[0], (list, tuple)):
            continue
        else:
            scalars.append([name, _format(name, field.encode(value))])

    blocks = [_align(scalars)]

    for name, model, items in tables:
        if not items:
            continue
        header = inspection.field_names(model)
        rows = [_row(item) for item in items]
        blocks.append('{}:\n{}'.format(name, _align([header] + rows)))

    return '\n\n'.join(block for block in blocks if block) + '\n'


def to_csv(record):
    """The first collection field of `record` as CSV rows, or the record
    itself as a single row.

    """

    for name, field in inspection.encoded_fields(record):
        if isinstance(field, fields.Collection):
            header = inspection.field_names(field.model)
            return _csv([header] + [_row(item)
                                    for item in getattr(record, name)])

    header = inspection.field_names(record)
    return _csv([header, _row(record)])


def bias_curve_csv(curve):
    return _csv([['t', 'bias']] + [[t, '{:.6f}'.format(bias)]
                                   for t, bias in curve])


def write(directory, name, text):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)

    with open(path, 'w') as f:
        f.write(text)

    return path


def _flatten(record):
    for name, field in inspection.encoded_fields(record):
        if isinstance(field, (fields.Collection, fields.Embedded)):
            continue
        yield name, _format(name, field.encode(getattr(record, name)))


def _row(record):
    row = []

    for name, field in inspection.encoded_fields(record):
        value = getattr(record, name)
        if isinstance(field, fields.Collection):
            row.append(str(len(value)))
        elif isinstance(field, fields.Embedded):
            row.append('' if value is None else type(value).__name__)
        else:
            row.append(_format(name, field.encode(value)))

    return row


def _format(name, value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, float):
        if name.startswith('log2'):
            return '{:.2f}'.format(value)
        return '{:.4g}'.format(value)
    if isinstance(value, dict):
        return ' '.join('{}:{}'.format(k, v) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ' '.join(str(item) for item in value)

    return str(value)


def _align(rows):
    if not rows:
        return ''

    widths = [max(len(row[i]) for row in rows if i < len(row))
              for i in range(max(len(row) for row in rows))]

    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append('  '.join(cells).rstrip())

    return '\n'.join(lines)


def _csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerows(rows)

    return buffer.getvalue()
