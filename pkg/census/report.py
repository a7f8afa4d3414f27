"""
Rendering of census reports: table, CSV and JSON lines.
"""
import csv
import io
import json

from .enumeration import ROW_LABELS

EMPTY_CELL = '·'


def render_table(report):
    """Geometry by complexity counts, caveats listed underneath."""
    complexities = list(report.complexities)
    width = max(len(ROW_LABELS[g]) for g in report.geometries) + 2
    lines = ['complexity'.ljust(width) + ''.join(f'{c:>6}' for c in complexities)]
    for geometry in report.geometries:
        cells = ''.join(f'{report.count(c, geometry) or EMPTY_CELL:>6}' for c in complexities)
        lines.append(ROW_LABELS[geometry].ljust(width) + cells)
    if len(report.geometries) > 1:
        lines.append('total'.ljust(width) + ''.join(f'{report.total(c):>6}' for c in complexities))
    for caveat in report.caveats:
        lines.append(f'* {caveat}')
    return '\n'.join(lines) + '\n'


def render_csv(report):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['complexity', 'geometry', 'count'])
    for row in report.rows:
        writer.writerow([row.complexity, row.geometry.value, row.count])
    return buffer.getvalue()


def render_jsonl(report):
    return ''.join(json.dumps(item.as_dict()) + '\n' for item in report.items())


RENDERERS = {
    'table': render_table,
    'csv': render_csv,
    'jsonl': render_jsonl,
}


def render(report, fmt):
    return RENDERERS[fmt](report)
