import csv
import io
import json

from rest_framework.renderers import JSONRenderer

FORMATS = ('json', 'csv')


def render_json(command, rows):
    return JSONRenderer().render({'command': command, 'rows': rows}).decode('utf-8')


def csv_cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, separators=(',', ':'), sort_keys=False)
    return str(value)


def render_csv(fields, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, csv.excel, lineterminator='\n')
    writer.writerow(fields)
    for row in rows:
        writer.writerow([csv_cell(row.get(field)) for field in fields])
    return buffer.getvalue()
