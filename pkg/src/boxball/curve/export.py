"""Curve export: a JSON document and an SVG drawing of Γ⁰."""
import io
import json
import logging

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from boxball.curve.periods import mu_omega, period_matrix, riemann_constant  # noqa: E402
from boxball.curve.tropical import curve_locus  # noqa: E402

logger = logging.getLogger("curve")

RAY_LENGTH = 2


def rational(x):
    """Exact rational as a 'p/q' string."""
    return f"{x.numerator}/{x.denominator}"


def _point(p):
    return [rational(p[0]), rational(p[1])]


def curve_document(curve):
    locus = curve_locus(curve)
    doc = {
        "L": curve.L,
        "solitons": list(curve.solitons),
        "A": list(curve.A),
        "vertices": [_point(v) for v in sorted(locus.vertices)],
        "edges": [
            {
                "start": _point(e.start),
                "end": None if e.end is None else _point(e.end),
                "direction": list(e.direction),
                "weight": e.weight,
            }
            for e in locus.edges
        ],
    }
    if curve.genus:
        mu, omega = mu_omega(curve)
        doc["B"] = [[rational(x) for x in row] for row in period_matrix(curve)]
        doc["mu"] = [rational(x) for x in mu]
        doc["omega"] = [rational(x) for x in omega]
        doc["kappa"] = [rational(x) for x in riemann_constant(curve)]
    else:
        doc.update(B=[], mu=[], omega=[], kappa=[])
    return doc


def curve_json(curve, indent=2):
    return json.dumps(curve_document(curve), indent=indent)


def curve_svg(curve, points=()):
    """Γ⁰ with Y horizontal and X vertical; divisor points marked if given."""
    locus = curve_locus(curve)
    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        for e in locus.edges:
            start = e.start
            end = e.end
            if end is None:
                end = (start[0] + RAY_LENGTH * e.direction[0], start[1] + RAY_LENGTH * e.direction[1])
                style = "--"
            else:
                style = "-"
            ax.plot([float(start[1]), float(end[1])], [float(start[0]), float(end[0])], style,
                    color="black", linewidth=1 + 0.5 * (e.weight - 1))
        for v in locus.vertices:
            ax.plot(float(v[1]), float(v[0]), "o", color="black", markersize=3)
        for p in points:
            ax.plot(float(p.Y), float(p.X), "o", color="tab:red", markersize=6)
        ax.set_xlabel("Y")
        ax.set_ylabel("X")
        ax.set_title(f"L={curve.L}, S={list(curve.solitons)}")
        buf = io.StringIO()
        fig.savefig(buf, format="svg")
    finally:
        plt.close(fig)
    return buf.getvalue()
