"""PL topological conjugacy to the tent map.

Points are given symbolic coordinates by their itineraries relative to the
turning point.  A conjugacy preserves itineraries, so the tent-map point
carrying the itinerary of a kink of ``g`` is where the conjugacy must send
that kink.  Every candidate is checked exactly before it is returned.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .commutators import tent
from .errors import InvalidItinerary, NoCycleWithinCap, NotHomeomorphism
from .plmap import ONE, ZERO, PLMap, classify, compose, evaluate, make_plmap, to_fraction

DEFAULT_CAP = 10_000

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Itinerary:
    """Eventually periodic L/C/R word.

    A word reaching the turning point stops there: its preperiod ends with
    ``'C'`` and its period is empty, since the orbit from then on is fixed.
    """

    preperiod: Tuple[str, ...]
    period: Tuple[str, ...]

    def __str__(self):
        pre = "".join(self.preperiod)
        return f"{pre}({''.join(self.period)})" if self.period else pre


@dataclass(frozen=True)
class ConjugacyReport:
    """Outcome of a conjugacy check.

    ``is_conjugacy`` is None for reports carrying only the necessary
    condition flags.
    """

    is_conjugacy: Optional[bool]
    violations: Tuple[Tuple[Fraction, Fraction, Fraction], ...]
    derivative_at_zero_check: bool
    right_leg_check: bool


def _is_homeomorphism(h: PLMap) -> bool:
    return (h.is_strictly_increasing() and h.points[0] == (ZERO, ZERO)
            and h.points[-1] == (ONE, ONE))


def conjugate(g: PLMap, h: PLMap) -> PLMap:
    """Return ``h o g o h^-1``."""
    if not _is_homeomorphism(h):
        raise NotHomeomorphism("h must be strictly increasing with h(0)=0, h(1)=1")
    return compose(h, compose(g, h.inverse()))


def itinerary(g: PLMap, x, cap: int = DEFAULT_CAP) -> Itinerary:
    profile = classify(g)
    v = profile.turning_point
    if v is None:
        raise ValueError("itineraries need a unimodal map")
    x = to_fraction(x)
    seen = {}
    symbols = []
    for step in range(cap):
        if x in seen:
            start = seen[x]
            return Itinerary(tuple(symbols[:start]), tuple(symbols[start:]))
        if x == v:
            symbols.append("C")
            return Itinerary(tuple(symbols), ())
        seen[x] = step
        symbols.append("L" if x < v else "R")
        x = evaluate(g, x)
    raise NoCycleWithinCap(f"orbit did not close within {cap} steps")


def _branch(symbol: str, y: Fraction) -> Fraction:
    if symbol == "L":
        return y / 2
    if symbol == "R":
        return 1 - y / 2
    raise InvalidItinerary(f"symbol {symbol!r} has no inverse branch")


def tent_point(it: Itinerary) -> Fraction:
    """The point whose tent-map itinerary is ``it``."""
    pre = list(it.preperiod)
    if it.period:
        if any(s not in ("L", "R") for s in it.period):
            raise InvalidItinerary("the period may only contain L and R")
        # compose inverse branches around the cycle as y -> slope*y + shift
        slope, shift = ONE, ZERO
        for s in reversed(it.period):
            if s == "L":
                slope, shift = slope / 2, shift / 2
            else:
                slope, shift = -slope / 2, 1 - shift / 2
        point = shift / (1 - slope)
        if "C" in pre:
            raise InvalidItinerary("C may only end a preperiod")
    else:
        if not pre or pre[-1] != "C" or "C" in pre[:-1]:
            raise InvalidItinerary("an empty period needs a preperiod ending in C")
        pre.pop()
        point = _HALF
    for s in reversed(pre):
        point = _branch(s, point)
    return point


def find_tent_conjugacy(g: PLMap, cap: int = DEFAULT_CAP) -> Optional[PLMap]:
    """Increasing PL ``h`` with ``h o tent == g o h``, or None.

    Each kink ``a`` of g is sent back to the tent point ``alpha`` with the
    same itinerary; the candidate h passes through ``(alpha, a)`` and
    ``(tent(alpha), g(a))`` for every kink.  NoCycleWithinCap propagates.
    """
    profile = classify(g)
    if not profile.is_unimodal or profile.derivative_at_zero != 2:
        return None
    f = tent()
    wanted = {ZERO: ZERO, ONE: ONE}
    for a, ga in g.kinks:
        alpha = tent_point(itinerary(g, a, cap))
        for u, w in ((alpha, a), (evaluate(f, alpha), ga)):
            if wanted.setdefault(u, w) != w:
                return None
    pts = sorted(wanted.items())
    if any(p[1] >= q[1] for p, q in zip(pts, pts[1:])):
        return None
    h = make_plmap(pts)
    return h if verify_conjugacy(f, g, h).is_conjugacy else None


def _right_leg_check(g: PLMap, profile) -> bool:
    v = profile.turning_point
    if v is None:
        return False
    fixed = [x for x in profile.fixed_points if x > v]
    if len(fixed) != 1:
        return False
    x0 = fixed[0]
    left, right = g.slope_at(x0, "left"), g.slope_at(x0, "right")
    # near x0 the orbit alternates sides, so one-sided derivatives of g_r^2
    # both equal left*right; off a kink this is just the slope squared
    return left * right == 4


def tent_necessary_conditions(g: PLMap) -> ConjugacyReport:
    """Slope at zero equal to 2, and ``(g_r^2)'(x0) = 4`` at the right fixed point."""
    profile = classify(g)
    return ConjugacyReport(
        is_conjugacy=None,
        violations=(),
        derivative_at_zero_check=profile.derivative_at_zero == 2,
        right_leg_check=_right_leg_check(g, profile),
    )


def verify_conjugacy(f0: PLMap, g: PLMap, h: PLMap) -> ConjugacyReport:
    """Exact check of ``h o f0 == g o h``."""
    flags = tent_necessary_conditions(g)
    hf, gh = compose(h, f0), compose(g, h)
    violations = []
    if hf != gh:
        for x in sorted(set(hf.xs) | set(gh.xs)):
            lhs, rhs = evaluate(hf, x), evaluate(gh, x)
            if lhs != rhs:
                violations.append((x, lhs, rhs))
    return ConjugacyReport(
        is_conjugacy=not violations and _is_homeomorphism(h),
        violations=tuple(violations),
        derivative_at_zero_check=flags.derivative_at_zero_check,
        right_leg_check=flags.right_leg_check,
    )


def first_kink_prediction(g: PLMap, h: PLMap) -> Fraction:
    """Abscissa ``2*eps/k`` where the conjugacy h should first bend.

    ``eps`` is the abscissa of the first kink of g and ``k`` the slope of
    h at zero.  For h the identity this is 1, i.e. no kink at all.
    """
    return 2 * g.points[1][0] / h.slopes[0]

