"""SVG rendering of original and merged curves (2-D only).

Originals are drawn as solid blue polylines, merged curves as dashed red ones;
the y axis is flipped so the picture matches the usual mathematical
orientation. No plotting dependencies: plain SVG text is emitted.
"""

import numpy as np

from .curves import BezierSegment, eval_segment_many

SAMPLES_PER_CURVE = 256
ORIGINAL_STYLE = 'fill="none" stroke="#1f4fd8" stroke-width="{w}"'
MERGED_STYLE = 'fill="none" stroke="#d82f1f" stroke-width="{w}" stroke-dasharray="{d}"'
CONTROL_STYLE = 'fill="none" stroke="#999999" stroke-width="{w}" stroke-dasharray="{d}"'


def _sample_segments(segments, per_curve=SAMPLES_PER_CURVE):
    us = np.linspace(0.0, 1.0, per_curve)
    return [eval_segment_many(seg, us) for seg in segments]


def _polyline(points, style, scale, ox, oy):
    coords = " ".join(
        f"{(x - ox) * scale:.4f},{(oy - y) * scale:.4f}" for x, y in points)
    return f'<polyline points="{coords}" {style}/>'


def render_svg(layers, width=640) -> str:
    """Assemble an SVG string from (points-array, kind) layers.

    kind is 'original', 'merged' or 'control'. The viewport fits the joint
    bounding box with a 5% margin.
    """
    all_pts = np.vstack([pts for pts, _ in layers])
    lo = all_pts.min(axis=0)
    hi = all_pts.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    margin = 0.05 * float(span.max())
    lo = lo - margin
    hi = hi + margin
    scale = width / float(hi[0] - lo[0])
    height = float(hi[1] - lo[1]) * scale
    stroke = max(hi[0] - lo[0], hi[1] - lo[1]) * scale / 320.0
    styles = {
        "original": ORIGINAL_STYLE.format(w=f"{stroke:.3f}"),
        "merged": MERGED_STYLE.format(w=f"{stroke:.3f}", d=f"{4 * stroke:.3f}"),
        "control": CONTROL_STYLE.format(w=f"{0.5 * stroke:.3f}", d=f"{2 * stroke:.3f}"),
    }
    body = [
        _polyline(pts, styles[kind], scale, float(lo[0]), float(hi[1]))
        for pts, kind in layers
    ]
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )


def curve_layers(segments, merged: BezierSegment | None, show_controls: bool = False):
    """Layers for one original (list of segments) and its optional merged curve."""
    for seg in segments:
        if seg.dim != 2:
            raise ValueError(f"SVG output needs 2-D curves, got dimension {seg.dim}")
    layers = [(pts, "original") for pts in _sample_segments(segments)]
    if show_controls:
        layers += [(np.asarray(seg.points), "control") for seg in segments]
    if merged is not None:
        if merged.dim != 2:
            raise ValueError(f"SVG output needs 2-D curves, got dimension {merged.dim}")
        layers += [(pts, "merged") for pts in _sample_segments([merged])]
        if show_controls:
            layers.append((np.asarray(merged.points), "control"))
    return layers


def emit_svg(doc, merged: BezierSegment | None, path, show_controls: bool = False) -> None:
    """Write an overlay SVG of a curve document and its merged curve."""
    if doc.dimension != 2:
        raise ValueError(f"SVG output needs 2-D curves, got dimension {doc.dimension}")
    layers = curve_layers(doc.segments, merged, show_controls)
    with open(path, "w") as f:
        f.write(render_svg(layers))


def emit_svg_overlays(items, path) -> None:
    """Write one SVG with several (segments, merged-or-None) overlays."""
    layers = []
    for segments, merged in items:
        layers += curve_layers(segments, merged)
    with open(path, "w") as f:
        f.write(render_svg(layers))
