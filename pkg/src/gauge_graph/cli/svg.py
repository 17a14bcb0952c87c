"""Plain SVG rendering of a 2-d unit level set."""
import numpy as np

from ..utils import format_number

__all__ = ['render_level_set_svg']

SVG_HEADER = '<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">'


def _frame(points, laplace):
    extent = max(float(np.max(np.abs(points))), 1.)
    return (-extent, extent) if laplace else (0., extent)

def render_level_set_svg(points, contact=None, laplace=False, size=400, pad=20):
    """Level-set polyline with optional contact point marker.

    Parameters
    ----------
    points : ndarray
        shape (n, 2), in drawing order
    contact : pair of float, optional
        marked with a red dot
    laplace : bool
        draw the full square [-r, r]^2 instead of [0, r]^2

    Returns
    -------
    str
    """
    points = np.asarray(points, dtype=float)
    lo, hi = _frame(points, laplace)
    scale = (size - 2 * pad) / (hi - lo)

    def to_canvas(p):
        return pad + (p[0] - lo) * scale, size - pad - (p[1] - lo) * scale

    def xy(p):
        u, v = to_canvas(p)
        return '{},{}'.format(format_number(u, 6), format_number(v, 6))

    lines = [SVG_HEADER.format(size=size)]
    x0, y0 = to_canvas((lo, 0. if laplace else lo))
    x1, _ = to_canvas((hi, 0.))
    lines.append('<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"/>'.format(
        *[format_number(c, 6) for c in (x0, y0, x1, y0)]))
    ax, ay0 = to_canvas((0. if laplace else lo, lo))
    _, ay1 = to_canvas((0., hi))
    lines.append('<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"/>'.format(
        *[format_number(c, 6) for c in (ax, ay0, ax, ay1)]))
    closed = list(points) + ([points[0]] if laplace else [])
    lines.append('<polyline fill="none" stroke="black" stroke-width="1.5" points="{}"/>'.format(
        ' '.join(xy(p) for p in closed)))
    if contact is not None:
        cx, cy = to_canvas(contact)
        lines.append('<circle cx="{}" cy="{}" r="4" fill="red"/>'.format(format_number(cx, 6), format_number(cy, 6)))
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'
