"""Deterministic CSV / JSON / SVG emission for traces, clouds and reports.

Exact fractions are the primary payload everywhere; decimal columns are
correctly-rounded 12-significant-digit conveniences derived from them.
Identical inputs produce identical bytes: fixed column order, fixed key
order, "\n" line endings, no timestamps.
"""

from __future__ import annotations

import csv
import decimal
import io
from fractions import Fraction

from .constraints import ConstraintReport, SlackPolicy, positivity_flags
from .geography import (
    REFERENCE_SEGMENT,
    SEGMENT_END,
    SEGMENT_START,
    FamilyTrace,
    RatioCloud,
    segment_distance,
)
from .invariants import InvariantTuple

CSV_COLUMNS = ("t", "d", "h2k", "hk2", "k3", "chi", "s",
               "x_num", "x_den", "y_num", "y_den", "x_dec", "y_dec", "dist_sq")


def decimal12(value: Fraction) -> str:
    """value correctly rounded to 12 significant digits, as a string."""
    with decimal.localcontext() as ctx:
        ctx.prec = 12
        out = decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator)
    return str(out)


def _point_row(t, inv: InvariantTuple, r, dist_sq) -> list[str]:
    row = [
        "" if t is None else str(t),
        str(inv.d), str(inv.h2k), str(inv.hk2), str(inv.k3), str(inv.chi),
        "" if inv.s is None else str(inv.s),
    ]
    if r is None:
        row.extend([""] * 7)
    else:
        row.extend([
            str(r.x.numerator), str(r.x.denominator),
            str(r.y.numerator), str(r.y.denominator),
            decimal12(r.x), decimal12(r.y), str(dist_sq),
        ])
    return row


def trace_rows(trace: FamilyTrace) -> list[list[str]]:
    return [_point_row(p.t, p.invariants, p.ratios, p.dist_sq)
            for p in trace.points]


def cloud_rows(cloud: RatioCloud) -> list[list[str]]:
    rows = []
    for e in cloud.entries:
        dist = segment_distance(e.ratios.x, e.ratios.y) if e.ratios else None
        rows.append(_point_row(None, e.invariants, e.ratios, dist))
    return rows


def csv_document(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def policy_json(policy: SlackPolicy) -> dict:
    return {"mode": policy.mode, "coefficient": str(policy.coefficient),
            "exponent": str(policy.exponent)}


def _ratio_fields(r, dist_sq) -> dict:
    if r is None:
        return {"x": None, "y": None, "x_dec": None, "y_dec": None, "dist_sq": None}
    return {"x": str(r.x), "y": str(r.y), "x_dec": decimal12(r.x),
            "y_dec": decimal12(r.y), "dist_sq": str(dist_sq)}


def trace_json(trace: FamilyTrace) -> dict:
    points = []
    for p in trace.points:
        rec = {"t": p.t, **p.invariants.to_record()}
        rec.update(_ratio_fields(p.ratios, p.dist_sq))
        points.append(rec)
    return {"family": trace.spec.describe(), "points": points}


def cloud_json(cloud: RatioCloud) -> dict:
    m = cloud.metadata
    entries = []
    for e in cloud.entries:
        rec = dict(e.invariants.to_record())
        dist = segment_distance(e.ratios.x, e.ratios.y) if e.ratios else None
        rec.update(_ratio_fields(e.ratios, dist))
        entries.append(rec)
    return {
        "metadata": {"d": m.d, "s": m.s, "positivity": m.positivity,
                     "boss": m.asymptotic_included,
                     "policy": policy_json(m.policy), "count": m.count},
        "entries": entries,
    }


def report_json(t: InvariantTuple, s, policy: SlackPolicy,
                report: ConstraintReport) -> dict:
    return {
        "tuple": t.to_record(),
        "s": s,
        "policy": policy_json(policy),
        "entries": [
            {"constraint_id": e.constraint_id, "satisfied": e.satisfied,
             "margin": str(e.margin), "note": e.note}
            for e in report.entries
        ],
        "notes": list(report.notes),
        "positivity": positivity_flags(t),
        "all_satisfied": report.all_satisfied,
    }


def report_table(report: ConstraintReport) -> str:
    lines = [f"{'constraint':<12} {'status':<9} {'margin':<24} note"]
    for cid, status, margin, note in report.to_rows():
        lines.append(f"{cid:<12} {status:<9} {margin:<24} {note}".rstrip())
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append("summary: " + ("all satisfied" if report.all_satisfied else
                                f"{len(report.violated())} violated"))
    return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    return f"{float(value):.6f}"


def _svg_line(x1, y1, x2, y2, style: str) -> str:
    # SVG y grows downward; plot (x, y) at (x, -y).
    return (f'<line x1="{_fmt(x1)}" y1="{_fmt(-y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(-y2)}" {style}/>')


def svg_scatter(points) -> str:
    """Scatter of ratio points with the target and reference segments.

    Fixed viewBox covering x in [0, 3], y in [-2, 3]; output depends only
    on the input sequence.
    """
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="540" height="900" '
        'viewBox="0 -3 3 5">',
        '<rect x="0" y="-3" width="3" height="5" fill="white"/>',
        _svg_line(0, 0, 3, 0, 'stroke="#bbbbbb" stroke-width="0.008"'),
        _svg_line(0, -2, 0, 3, 'stroke="#bbbbbb" stroke-width="0.008"'),
        _svg_line(*SEGMENT_START, *SEGMENT_END,
                  'stroke="#d62728" stroke-width="0.02"'),
        _svg_line(*REFERENCE_SEGMENT[0], *REFERENCE_SEGMENT[1],
                  'stroke="#2ca02c" stroke-width="0.015" '
                  'stroke-dasharray="0.05,0.03"'),
    ]
    for x, y in points:
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(-float(y))}" r="0.02" '
                     'fill="#1f77b4" fill-opacity="0.6"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def trace_svg(trace: FamilyTrace) -> str:
    pts = [(float(p.ratios.x), float(p.ratios.y))
           for p in trace.points if p.ratios is not None]
    return svg_scatter(pts)


def cloud_svg(clouds) -> str:
    pts = []
    for cloud in clouds:
        pts.extend((float(e.ratios.x), float(e.ratios.y))
                   for e in cloud.entries if e.ratios is not None)
    return svg_scatter(pts)
