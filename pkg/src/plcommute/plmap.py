"""Continuous piecewise-linear self-maps of [0, 1] with exact rational breakpoints.

A map is stored as its canonical breakpoint list: abscissas strictly
increasing from 0 to 1 and no interior point collinear with its
neighbours.  Canonical form is unique, so two maps are equal as functions
exactly when their breakpoint tuples are equal.

The text format used everywhere (files, CLI) is a semicolon separated list
of ``x,y`` pairs, e.g. ``0,0; 1/2,1; 1,0``.
"""
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (
    DomainNotUnit,
    EmptyInput,
    InfinitePreimage,
    NonMonotoneX,
    OutOfDomain,
    OutOfRange,
    ParseError,
)

Point = Tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding into
    exact computations.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'p/q'")
    return Fraction(value)


def _collinear(a: Point, b: Point, c: Point) -> bool:
    return (b[1] - a[1]) * (c[0] - b[0]) == (c[1] - b[1]) * (b[0] - a[0])


def _canonical_points(points: Sequence[Point]) -> Tuple[Point, ...]:
    out = []
    for p in points:
        while len(out) >= 2 and _collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    return tuple(out)


class PLMap:
    """Canonical continuous piecewise-linear map [0, 1] -> [0, 1].

    Instances are immutable.  Build them with :func:`make_plmap` (which
    validates and canonicalises); the constructor itself trusts its input.
    """

    __slots__ = ("points", "_xs")

    def __init__(self, points: Tuple[Point, ...]):
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "_xs", tuple(p[0] for p in points))

    def __setattr__(self, name, value):
        raise AttributeError("PLMap is immutable")

    # -- basic accessors -------------------------------------------------
    @property
    def xs(self) -> Tuple[Fraction, ...]:
        return self._xs

    @property
    def ys(self) -> Tuple[Fraction, ...]:
        return tuple(p[1] for p in self.points)

    @property
    def kinks(self) -> Tuple[Point, ...]:
        """Interior breakpoints (genuine kinks, by canonicity)."""
        return self.points[1:-1]

    @property
    def slopes(self) -> Tuple[Fraction, ...]:
        pts = self.points
        return tuple(
            (pts[i + 1][1] - pts[i][1]) / (pts[i + 1][0] - pts[i][0])
            for i in range(len(pts) - 1)
        )

    def pieces(self):
        """Yield ``(x0, y0, x1, y1)`` for each linear piece."""
        pts = self.points
        for i in range(len(pts) - 1):
            yield pts[i][0], pts[i][1], pts[i + 1][0], pts[i + 1][1]

    def piece_index(self, x: Fraction, side: str = "right") -> int:
        """Index of the linear piece containing ``x``.

        At a breakpoint the piece to the right is chosen (``side='left'``
        picks the one to the left); the endpoints fall back to the only
        available piece.
        """
        xs = self.xs
        count = len(xs) - 1
        if side == "left":
            for i in range(count):
                if xs[i] < x <= xs[i + 1]:
                    return i
            return 0
        for i in range(count):
            if x < xs[i + 1]:
                return i
        return count - 1

    def slope_at(self, x, side: str = "right") -> Fraction:
        return self.slopes[self.piece_index(to_fraction(x), side)]

    # -- evaluation --------------------------------------------------------
    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    # -- value semantics ------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PLMap({format_plmap(self)!r})"

    def __str__(self):
        return " -> ".join(f"({x}, {y})" for x, y in self.points)

    def is_strictly_increasing(self) -> bool:
        return all(s > 0 for s in self.slopes)

    def inverse(self) -> "PLMap":
        """Inverse of a strictly increasing map fixing 0 and 1."""
        if not self.is_strictly_increasing() or self.points[0] != (ZERO, ZERO) \
                or self.points[-1] != (ONE, ONE):
            raise ValueError("only increasing homeomorphisms of [0,1] are invertible")
        return PLMap(tuple((y, x) for x, y in self.points))


def make_plmap(points: Iterable) -> PLMap:
    """Validate ``points`` and return the canonical map through them."""
    pts = [(to_fraction(x), to_fraction(y)) for x, y in points]
    if not pts:
        raise EmptyInput("a PL map needs at least two points")
    for x, y in pts:
        if not (ZERO <= x <= ONE and ZERO <= y <= ONE):
            raise OutOfRange(f"point ({x}, {y}) lies outside [0,1]^2")
    merged = []
    for p in pts:
        if merged and p[0] == merged[-1][0]:
            if p[1] != merged[-1][1]:
                raise NonMonotoneX(f"two values at x = {p[0]} (discontinuity)")
            continue
        if merged and p[0] < merged[-1][0]:
            raise NonMonotoneX(f"x decreases at {p[0]}")
        merged.append(p)
    if merged[0][0] != ZERO or merged[-1][0] != ONE:
        raise DomainNotUnit("breakpoints must start at x = 0 and end at x = 1")
    return PLMap(_canonical_points(merged))


def identity() -> PLMap:
    return PLMap(((ZERO, ZERO), (ONE, ONE)))


def evaluate(m: PLMap, x) -> Fraction:
    x = to_fraction(x)
    if not ZERO <= x <= ONE:
        raise OutOfDomain(f"x = {x} is outside [0, 1]")
    i = bisect_left(m.xs, x)
    pts = m.points
    if pts[i][0] == x:
        return pts[i][1]
    (x0, y0), (x1, y1) = pts[i - 1], pts[i]
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0)


def _piece_solutions(m: PLMap, y: Fraction, on_constant):
    sols = set()
    for x0, y0, x1, y1 in m.pieces():
        if y0 == y1:
            if y0 == y:
                on_constant(x0, x1)
                sols.update((x0, x1))
            continue
        if min(y0, y1) <= y <= max(y0, y1):
            sols.add(x0 + (y - y0) * (x1 - x0) / (y1 - y0))
    return sols


def preimages(m: PLMap, y) -> Tuple[Fraction, ...]:
    """All solutions of ``m(x) = y`` in increasing order."""
    y = to_fraction(y)
    if not ZERO <= y <= ONE:
        raise OutOfDomain(f"y = {y} is outside [0, 1]")

    def refuse(x0, x1):
        raise InfinitePreimage(f"map is constant {y} on [{x0}, {x1}]")

    return tuple(sorted(_piece_solutions(m, y, refuse)))


def compose(outer: PLMap, inner: PLMap) -> PLMap:
    """The canonical map ``x -> outer(inner(x))``."""
    xs = set(inner.xs)
    for c in outer.xs:
        # a constant inner piece sitting on c contributes nothing new
        xs.update(_piece_solutions(inner, c, lambda a, b: None))
    pts = [(x, evaluate(outer, evaluate(inner, x))) for x in sorted(xs)]
    return PLMap(_canonical_points(pts))


def equals(m1: PLMap, m2: PLMap) -> bool:
    return m1.points == m2.points


def iterate(m: PLMap, n: int) -> PLMap:
    result = identity()
    for _ in range(n):
        result = compose(m, result)
    return result


@dataclass(frozen=True)
class MapProfile:
    kinks: Tuple[Point, ...]
    slopes: Tuple[Fraction, ...]
    monotone_piece_count: int
    is_unimodal: bool
    is_surjective_each_piece: bool
    derivative_at_zero: Fraction
    fixed_points: Tuple[Fraction, ...]
    zero_at_endpoints: bool
    turning_point: Optional[Fraction] = None
    fixed_intervals: Tuple[Tuple[Fraction, Fraction], ...] = ()


def monotone_runs(m: PLMap):
    """Maximal monotone intervals as ``(start_index, end_index, sign)``.

    Indices refer to breakpoints; flat pieces are absorbed into the
    neighbouring run so that a constant map is a single run of sign 0.
    """
    signs = [(s > 0) - (s < 0) for s in m.slopes]
    runs = []
    start, sign = 0, 0
    for i, s in enumerate(signs):
        if s == 0 or sign == 0 or s == sign:
            sign = sign or s
            continue
        runs.append((start, i, sign))
        start, sign = i, s
    runs.append((start, len(signs), sign))
    return runs


def classify(m: PLMap) -> MapProfile:
    slopes = m.slopes
    runs = monotone_runs(m)
    pts = m.points
    surjective = all(
        {pts[a][1], pts[b][1]} == {ZERO, ONE} for a, b, _ in runs
    )
    zero_ends = pts[0][1] == ZERO and pts[-1][1] == ZERO
    unimodal = False
    turning = None
    if len(runs) == 2 and runs[0][2] > 0 and runs[1][2] < 0 and zero_ends:
        v_index = runs[0][1]
        turning = pts[v_index][0]
        strict = all(s != 0 for s in slopes)
        unimodal = strict and pts[v_index][1] == ONE
    fixed = set()
    intervals = []
    for x0, y0, x1, y1 in m.pieces():
        # solve y0 + s (x - x0) = x on [x0, x1]
        d0, d1 = y0 - x0, y1 - x1
        if d0 == 0 and d1 == 0:
            intervals.append((x0, x1))
            fixed.update((x0, x1))
        elif d0 == 0:
            fixed.add(x0)
        elif d1 == 0:
            fixed.add(x1)
        elif (d0 < 0) != (d1 < 0):
            fixed.add(x0 + d0 * (x1 - x0) / (d0 - d1))
    return MapProfile(
        kinks=m.kinks,
        slopes=slopes,
        monotone_piece_count=len(runs),
        is_unimodal=unimodal,
        is_surjective_each_piece=surjective,
        derivative_at_zero=slopes[0],
        fixed_points=tuple(sorted(fixed)),
        zero_at_endpoints=zero_ends,
        turning_point=turning,
        fixed_intervals=tuple(intervals),
    )


# -- text format --------------------------------------------------------------

def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_plmap(m: PLMap) -> str:
    return "; ".join(f"{format_fraction(x)},{format_fraction(y)}" for x, y in m.points)


def _locate(text: str, offset: int):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def parse_points(text: str):
    """Parse the ``x,y; x,y; ...`` format into a list of Fraction pairs."""
    points = []
    offset = 0
    for chunk in text.split(";"):
        stripped = chunk.strip()
        where = offset + (len(chunk) - len(chunk.lstrip()))
        offset += len(chunk) + 1
        if not stripped:
            if offset > len(text) and points:
                continue  # trailing separator
            raise ParseError("empty point", *_locate(text, where))
        parts = stripped.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected 'x,y' but got {stripped!r}", *_locate(text, where))
        try:
            x, y = (Fraction("".join(p.split())) for p in parts)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational in {stripped!r}", *_locate(text, where)) from None
        points.append((x, y))
    if not points:
        raise ParseError("no points given", 1, 1)
    return points


def parse_plmap(text: str) -> PLMap:
    return make_plmap(parse_points(text))
