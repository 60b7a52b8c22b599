import csv
import io
import json

from boxball.automata import PBBSState, render_cells


def row_label(t):
    return f"t={t}:".ljust(7)


def _cells(row, start, stop):
    return render_cells(tuple(row.value(n) for n in range(start, stop)))


def ascii_rows(rows, start, stop):
    """'t=0:   ..111...11...1' style rows over the cells [start, stop)."""
    return [row_label(t) + _cells(row, start, stop) for t, row in enumerate(rows)]


def csv_rows(rows, start, stop):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "n", "U"])
    for t, row in enumerate(rows):
        for n in range(start, stop):
            writer.writerow([t, n, row.value(n)])
    return buf.getvalue().splitlines()


def json_rows(rows, start, stop):
    return json.dumps({"window": [start, stop], "rows": [_cells(row, start, stop) for row in rows]}, indent=2)


def trajectory_extent(rows):
    """Smallest window [start, stop) holding the first row's cells and every ball."""
    if isinstance(rows[0], PBBSState):
        return 0, rows[0].L
    start = rows[0].offset
    stop = rows[0].offset + len(rows[0].cells)
    for row in rows:
        positions = row.ball_positions()
        if positions:
            start = min(start, positions[0])
            stop = max(stop, positions[-1] + 1)
    return start, stop
