"""Four-quadrant SVG diagrams of a pair (g, psi).

Quadrant orientation: the x axis points left, psi up, g down and y
right.  psi is drawn in the upper-left (x*psi) and lower-right (g*y)
quadrants, g in the lower-left (x*g) and upper-right (psi*y) ones.  This
is not standard plotting orientation; in the upper-right quadrant, for
instance, a point ``(p, g(p))`` of the graph of g sits ``g(p)`` to the
right and ``p`` up.

Coordinates are printed with six decimals.  Rendering is for display
only; all exact work happens before this module.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .lattice import SAT, Lattice, abcd_points, determinating_lattice, kink_pairs, sat
from .plmap import PLMap, format_fraction

PRECISION = 6

# Position of the origin relative to a labelled point, per quadrant:
# in x*psi it lies lower-right of every point, and so on.
CORNER_TAGS = {"x_psi": "lr", "x_g": "ur", "psi_y": "ll", "g_y": "ul"}


@dataclass(frozen=True)
class PointLabelConvention:
    """Corner-tagged coordinate text such as ``(1/4, 3/4)_lr``."""

    tag: str

    def __post_init__(self):
        if self.tag not in ("lr", "ll", "ur", "ul"):
            raise ValueError(f"unknown corner tag {self.tag!r}")

    def format(self, a: Fraction, b: Fraction) -> str:
        return f"({format_fraction(a)}, {format_fraction(b)})_{self.tag}"


@dataclass(frozen=True)
class QuadrantScene:
    g: PLMap
    psi: PLMap
    lattice: Optional[Lattice] = None
    highlighted_sats: Tuple[SAT, ...] = ()
    labels: bool = False
    width: int = 400
    height: int = 400


def _num(q) -> str:
    """Fixed six-decimal rendering, rounding half away from zero."""
    q = Fraction(q)
    scaled = abs(q) * 10 ** PRECISION
    n = int(scaled + Fraction(1, 2))
    sign = "-" if q < 0 and n else ""
    whole, frac = divmod(n, 10 ** PRECISION)
    return f"{sign}{whole}.{frac:0{PRECISION}d}"


class _Canvas:
    def __init__(self, width, height):
        self.width = width
        self.height = height
        self.cx = Fraction(width, 2)
        self.cy = Fraction(height, 2)
        self.unit = Fraction(min(width, height), 2) * Fraction(9, 10)

    # each quadrant maps (horizontal-axis value, vertical-axis value) of the
    # mathematical point to canvas coordinates
    def x_psi(self, x, p):
        return self.cx - x * self.unit, self.cy - p * self.unit

    def psi_y(self, p, y):
        return self.cx + y * self.unit, self.cy - p * self.unit

    def x_g(self, x, f):
        return self.cx - x * self.unit, self.cy + f * self.unit

    def g_y(self, f, y):
        return self.cx + y * self.unit, self.cy + f * self.unit


def _line(p, q, cls) -> str:
    return (f'<line class="{cls}" x1="{_num(p[0])}" y1="{_num(p[1])}" '
            f'x2="{_num(q[0])}" y2="{_num(q[1])}"/>')


def _polyline(points, cls) -> str:
    body = " ".join(f"{_num(x)},{_num(y)}" for x, y in points)
    return f'<polyline class="{cls}" points="{body}"/>'


def _lattice_lines(c: _Canvas, x_lines, psi_lines, g_lines, y_lines, cls) -> List[str]:
    out = []
    for x in x_lines:
        out.append(_line(c.x_psi(x, 1), c.x_g(x, 1), cls))
    for p in psi_lines:
        out.append(_line(c.x_psi(1, p), c.psi_y(p, 1), cls))
    for f in g_lines:
        out.append(_line(c.x_g(1, f), c.g_y(f, 1), cls))
    for y in y_lines:
        out.append(_line(c.psi_y(1, y), c.g_y(1, y), cls))
    return out


def _dot(pt, title) -> str:
    return (f'<circle class="dot" cx="{_num(pt[0])}" cy="{_num(pt[1])}" r="2">'
            f"<title>{title}</title></circle>")


def _label(pt, text) -> str:
    return (f'<text class="label" x="{_num(pt[0] + 3)}" y="{_num(pt[1] - 3)}">'
            f"{text}</text>")


def _graph_points(m: PLMap, place) -> List[Tuple[Fraction, Fraction]]:
    return [place(x, y) for x, y in m.points]


def render_quadrant_svg(scene: QuadrantScene) -> str:
    c = _Canvas(scene.width, scene.height)
    g, psi = scene.g, scene.psi
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{scene.width}" height="{scene.height}" '
        f'viewBox="0 0 {scene.width} {scene.height}">',
        "<style>"
        ".axis{stroke:#000;stroke-width:1}"
        ".lattice{stroke:#999;stroke-width:0.5}"
        ".sat{stroke:#c33;stroke-width:0.75;stroke-dasharray:3,2}"
        ".graph{fill:none;stroke-width:1.5}"
        ".g{stroke:#1f5fa8}.psi{stroke:#2a8a3a}"
        ".dot{fill:#000}.label{font-family:sans-serif;font-size:9px}"
        "</style>",
    ]
    # axes: x to the left, psi up, g down, y to the right
    axes = (("x", c.x_psi(1, 0)), ("psi", c.x_psi(0, 1)),
            ("g", c.x_g(0, 1)), ("y", c.psi_y(0, 1)))
    for name, end in axes:
        parts.append(_line((c.cx, c.cy), end, "axis"))
        parts.append(f'<text class="label" x="{_num(end[0])}" y="{_num(end[1])}">{name}</text>')

    lat = scene.lattice
    if lat is not None:
        pts = abcd_points(g, psi, lat)
        parts.extend(_lattice_lines(c, lat.x_lines, lat.psi_lines,
                                    lat.g_lines, lat.y_lines, "lattice"))
    for s in scene.highlighted_sats:
        ts = s.trajectories
        parts.extend(_lattice_lines(c, [t.x0 for t in ts], [t.xi_line for t in ts],
                                    [t.f_line for t in ts], [t.y_line for t in ts], "sat"))

    parts.append(_polyline(_graph_points(psi, c.x_psi), "graph psi"))
    parts.append(_polyline(_graph_points(psi, c.g_y), "graph psi"))
    parts.append(_polyline(_graph_points(g, c.x_g), "graph g"))
    parts.append(_polyline(_graph_points(g, c.psi_y), "graph g"))

    if lat is not None:
        quads = (("A", pts.A, c.psi_y, "psi_y"), ("B", pts.B, c.x_psi, "x_psi"),
                 ("C", pts.C, c.g_y, "g_y"), ("D", pts.D, c.x_g, "x_g"))
        for name, seq, place, quad in quads:
            conv = PointLabelConvention(CORNER_TAGS[quad])
            for i, (u, w) in enumerate(seq):
                parts.append(_dot(place(u, w), f"{name}{i} {conv.format(u, w)}"))
        if scene.labels:
            parts.extend(_labels(g, psi, lat, pts, c))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _labels(g, psi, lat, pts, c) -> Iterable[str]:
    """Interior A and C points, plus the B and D points paired by a kink."""
    out = []
    pairs = kink_pairs(g, psi, lat)
    for i in range(1, len(pts.A) - 1):
        out.append(_label(c.psi_y(*pts.A[i]), f"A{i}"))
    last_b = len(pts.B) - 1
    for i in sorted(i for i, _ in pairs.Q if 0 < i < last_b):
        out.append(_label(c.x_psi(*pts.B[i]), f"B{i}"))
    for j in range(1, len(pts.C) - 1):
        out.append(_label(c.g_y(*pts.C[j]), f"C{j}"))
    last_d = len(pts.D) - 1
    for j in sorted(j for _, j in pairs.P if 0 < j < last_d):
        out.append(_label(c.x_g(*pts.D[j]), f"D{j}"))
    return out


def scene_for(g: PLMap, psi: PLMap, with_lattice: bool = True, labels: bool = False,
              sat_points: Sequence = ()) -> QuadrantScene:
    lat = determinating_lattice(g, psi) if with_lattice else None
    sats = tuple(sat(g, psi, x) for x in sat_points)
    return QuadrantScene(g, psi, lat, sats, labels)
