"""Polyline curves on the plane, the flat torus, and the flat Klein bottle.

A curve is a closed polyline.  Plane-model curves list their vertices once;
the closing edge back to the first vertex is implicit.  Torus and Klein
curves are given in the universal-cover chart (coordinates unbounded): the
vertex list is the developed path, and the last vertex must be the image of
the first under a deck transformation.  The Klein deck group is generated by

    V(x, y) = (x, y + 1)            (orientation preserving, the ``g`` side)
    T(x, y) = (x + 1, 1 - y)        (glide reflection, the ``h`` side)

with T V T^-1 = V^-1; the torus uses the two unit translations.

Discrete regularity stands in for the immersion condition: no zero-length
edges and every exterior angle strictly inside (-pi, pi).  Crossings of the
integer grid are read off segment by segment; paths through grid corners or
along grid lines are rejected as degenerate.

The tangent lift is computed from the deck equation upstairs: the unit
tangent bundle of the chart is trivial, the deck group acts on (x, y, theta)
with T flipping theta, and the fiber exponent is whatever power of the fiber
class closes the lifted path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .surfaces import Regime, SurfaceSpec, regime
from .words import spell_klein, spell_torus, klein_product
from .stbundle import STWord, st_word

_TWO_PI = 2.0 * math.pi
_ANGLE_EPS = 1e-9
_INT_EPS = 1e-9
_TURN_TOL = 1e-6


class CurveError(ValueError):
    """Malformed, degenerate, or non-regular curve input."""


class Model(Enum):
    PLANE = "plane"
    TORUS = "torus"
    KLEIN = "klein"


@dataclass(frozen=True)
class Polyline:
    vertices: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class Crossing:
    """One transition of the developed path across a grid line."""

    edge: int
    axis: str  # "x" for vertical lines, "y" for horizontal lines
    line: int
    direction: int  # +1 rightward/upward


@dataclass(frozen=True)
class CurveOnSurface:
    model: Model
    polyline: Polyline
    crossings: tuple[Crossing, ...]


def _angle(u, v) -> float:
    cross = u[0] * v[1] - u[1] * v[0]
    dot = u[0] * v[0] + u[1] * v[1]
    return math.atan2(cross, dot)


def _edge(p, q, where: str):
    e = (q[0] - p[0], q[1] - p[1])
    if math.hypot(*e) < 1e-12:
        raise CurveError(f"zero-length edge {where}")
    return e


def _check_angle(a: float, where: str):
    if abs(a) > math.pi - _ANGLE_EPS:
        raise CurveError(f"cusp (exterior angle of +-pi) {where}")


def turning_number(p: Polyline) -> int:
    """Sum of signed exterior angles over two pi, for plane-model polylines."""
    verts = p.vertices
    if len(verts) < 3:
        raise CurveError("a closed polyline needs at least 3 vertices")
    n = len(verts)
    edges = [_edge(verts[i], verts[(i + 1) % n], f"at vertex {i}") for i in range(n)]
    total = 0.0
    for i in range(n):
        a = _angle(edges[i], edges[(i + 1) % n])
        _check_angle(a, f"at vertex {(i + 1) % n}")
        total += a
    turns = total / _TWO_PI
    if abs(turns - round(turns)) > _TURN_TOL:
        raise CurveError("exterior angles do not sum to a multiple of 2 pi")
    return round(turns)


# ---------------------------------------------------------------------------
# chart models


def _near_int(x: float) -> bool:
    return abs(x - round(x)) < _INT_EPS


def _cell(pt) -> tuple[int, int]:
    return math.floor(pt[0]), math.floor(pt[1])


def _normalize_start(verts, model: Model):
    """Pull the path back so its first vertex lies in the unit cell.

    This identifies the basepoint frame with the fundamental-domain frame,
    so crossing words and the endpoint deck transformation agree.
    """
    i, j = _cell(verts[0])
    if model is Model.TORUS or i % 2 == 0:
        return tuple((x - i, y - j) for x, y in verts)
    # odd Klein shift: T^-i reflects the vertical coordinate
    return tuple((x - i, 1.0 - (y - j)) for x, y in verts)


def _segment_crossings(p, q, edge_index: int) -> list[tuple[float, Crossing]]:
    out: list[tuple[float, Crossing]] = []
    for axis, (a0, a1) in (("x", (p[0], q[0])), ("y", (p[1], q[1]))):
        lo, hi = min(a0, a1), max(a0, a1)
        direction = 1 if a1 > a0 else -1
        n = math.floor(lo) + 1
        while n < hi:
            if n > lo:
                t = (n - a0) / (a1 - a0)
                out.append((t, Crossing(edge_index, axis, n, direction)))
            n += 1
    out.sort(key=lambda item: item[0])
    for (t1, c1), (t2, c2) in zip(out, out[1:]):
        if t2 - t1 < 1e-9:
            raise CurveError(
                f"edge {edge_index} passes through a grid corner; perturb the curve"
            )
    return out


def _chart_data(curve: CurveOnSurface):
    """(deck coordinates, fiber exponent) for a torus/Klein chart curve."""
    model = curve.model
    verts = _normalize_start(curve.polyline.vertices, model)
    if len(verts) < 3:
        raise CurveError("a chart curve needs at least 3 vertices (endpoint repeated)")
    for x, y in verts:
        if _near_int(x) or _near_int(y):
            raise CurveError("vertices may not lie on grid lines; perturb the curve")
    m = len(verts) - 1
    edges = [_edge(verts[i], verts[i + 1], f"at vertex {i}") for i in range(m)]

    # deck transformation solving endpoint = Delta(start)
    x0, y0 = verts[0]
    xe, ye = verts[-1]
    bx = xe - x0
    if not _near_int(bx):
        raise CurveError("endpoint does not close up horizontally")
    b = round(bx)
    if model is Model.TORUS or b % 2 == 0:
        ay = ye - y0
    else:
        ay = ye + y0 - 1.0
    if not _near_int(ay):
        raise CurveError("endpoint is not a deck image of the start point")
    a = round(ay)

    # turning: interior corners plus the closing corner against d(Delta)
    total = 0.0
    for i in range(m - 1):
        ang = _angle(edges[i], edges[i + 1])
        _check_angle(ang, f"at vertex {i + 1}")
        total += ang
    first = edges[0]
    if model is Model.KLEIN and b % 2 != 0:
        first = (first[0], -first[1])
    closing = _angle(edges[-1], first)
    _check_angle(closing, "at the basepoint")
    total += closing

    if model is Model.KLEIN and b % 2 != 0:
        theta0 = math.atan2(edges[0][1], edges[0][0])
        fiber = (2.0 * theta0 + total) / _TWO_PI
    else:
        fiber = total / _TWO_PI
    if abs(fiber - round(fiber)) > _TURN_TOL:
        raise CurveError("tangent lift does not close up to a fiber power")

    # crossing log, validated against the deck solution
    crossings: list[Crossing] = []
    for i in range(m):
        crossings += [c for _, c in _segment_crossings(verts[i], verts[i + 1], i)]
    cx, cy = _cell(verts[0])
    acc = (0, 0)
    if model is Model.TORUS:
        # torus coordinates: (rightward crossings, upward crossings)
        for c in crossings:
            if c.axis == "x":
                acc = (acc[0] + c.direction, acc[1])
                cx += c.direction
            else:
                acc = (acc[0], acc[1] + c.direction)
                cy += c.direction
        expected = (b, a)  # Delta x counts a1, Delta y counts b1
    else:
        # Klein coordinates (k, l): g-exponent (vertical), h-exponent (glide)
        for c in crossings:
            if c.axis == "x":
                acc = klein_product(acc, (0, c.direction))
                cx += c.direction
            else:
                sign = c.direction if cx % 2 == 0 else -c.direction
                acc = klein_product(acc, (sign, 0))
                cy += c.direction
        expected = (a, b)
    if (cx, cy) != _cell(verts[-1]) or acc != expected:
        raise CurveError("crossing log disagrees with the endpoint; degenerate input")
    return expected, round(fiber), tuple(crossings)


def lift(curve: CurveOnSurface, surface: SurfaceSpec) -> STWord:
    """Tangent lift of the curve as a tangent-bundle group element."""
    reg = regime(surface)
    if curve.model is Model.PLANE:
        return st_word(surface, (), turning_number(curve.polyline))
    if curve.model is Model.TORUS:
        if reg is not Regime.TORUS:
            raise CurveError("torus-model curves need the torus")
        (p, q), fiber, _ = _chart_data(curve)
        return st_word(surface, spell_torus(p, q), fiber)
    if reg is not Regime.KLEIN:
        raise CurveError("klein-model curves need the Klein bottle")
    (a, b), fiber, _ = _chart_data(curve)
    return st_word(surface, spell_klein(a, b), fiber)


def crossing_log(curve: CurveOnSurface) -> tuple[Crossing, ...]:
    if curve.model is Model.PLANE:
        return ()
    _, _, crossings = _chart_data(curve)
    return crossings


# ---------------------------------------------------------------------------
# file format


def load_curve(text: str) -> CurveOnSurface:
    """Parse the curve file format.

    Line 1: ``model=plane|torus|klein``; then one ``x,y`` pair per line.
    ``#`` starts a comment; blank lines are ignored.
    """
    model: Model | None = None
    points: list[tuple[float, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if model is None:
            if not line.startswith("model="):
                raise CurveError(f"line {lineno}: expected 'model=...' first")
            name = line[len("model=") :].strip()
            try:
                model = Model(name)
            except ValueError:
                raise CurveError(f"line {lineno}: unknown model {name!r}") from None
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise CurveError(f"line {lineno}: expected 'x,y'")
        try:
            points.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise CurveError(f"line {lineno}: bad coordinates {line!r}") from None
    if model is None:
        raise CurveError("empty curve file")
    poly = Polyline(tuple(points))
    curve = CurveOnSurface(model, poly, ())
    if model is not Model.PLANE:
        _, _, crossings = _chart_data(curve)
        curve = CurveOnSurface(model, poly, crossings)
    else:
        turning_number(poly)  # validate regularity eagerly
    return curve


def read_curve_file(path: str) -> CurveOnSurface:
    with open(path, "r", encoding="utf-8") as fh:
        return load_curve(fh.read())
