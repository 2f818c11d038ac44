"""Parametrised commuting pairs conjugate to (tent, xi_3), and left completion.

Each generator writes g down from its closed form and then checks it
against ``conjugate(tent, h)``, so a wrong formula cannot slip through.
"""
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .commutators import tent, xi
from .conjugacy import conjugate, find_tent_conjugacy, verify_conjugacy
from .errors import (
    DegenerateShape,
    NotIncreasingLeg,
    NotTentConjugate,
    ParamOutOfRange,
    PLError,
    PositiveFixedPoint,
    SlopeAtZeroNotTwo,
    StepCapExceeded,
)
from .lattice import determinating_lattice, kink_pairs
from .plmap import ONE, ZERO, PLMap, classify, compose, evaluate, make_plmap, to_fraction

FAMILY_IDS = ("fig9", "fig11", "fig18")

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class FamilyInstance:
    g: PLMap
    psi: PLMap
    h: Optional[PLMap]
    params: Dict[str, Fraction]
    family_id: str


@dataclass(frozen=True)
class NamedRelation:
    """A named slope identity ``lhs == rhs`` evaluated on one instance."""

    name: str
    lhs: Fraction
    rhs: Fraction
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.lhs == self.rhs)


def _build(family_id, params, points, h) -> FamilyInstance:
    try:
        g = make_plmap(points)
    except PLError as exc:
        raise DegenerateShape(str(exc)) from None
    f = tent()
    if conjugate(f, h) != g:
        raise DegenerateShape(f"{family_id}: breakpoints do not form a tent conjugate")
    psi = conjugate(xi(3), h)
    # cheap insurance; both follow from the conjugacy above
    assert verify_conjugacy(f, g, h).is_conjugacy
    assert compose(g, psi) == compose(psi, g)
    return FamilyInstance(g, psi, h, dict(params), family_id)


def family_fig9(a) -> FamilyInstance:
    """Four-piece g with first kink at height ``a``; ``a = 1/2`` gives the tent map."""
    a = to_fraction(a)
    if not ZERO < a < ONE:
        raise ParamOutOfRange("fig9 needs 0 < a < 1")
    points = [(0, 0), (a / 2, a), (a, 1), ((a + 1) / 2, a), (1, 0)]
    h = make_plmap([(0, 0), (Fraction(1, 2), a), (1, 1)])
    return _build("fig9", {"a": a}, points, h)


def family_fig11(a, b) -> FamilyInstance:
    """Six-piece g whose kink ordinates ``a < b`` form a period-2 orbit."""
    a, b = to_fraction(a), to_fraction(b)
    if not ZERO < a < b < ONE:
        raise ParamOutOfRange("fig11 needs 0 < a < b < 1")
    points = [(0, 0), (a / 2, a), (a, b), ((3 * a + b) / 4, 1),
              ((a + b) / 2, b), (b, a), (1, 0)]
    xs = [p[0] for p in points]
    if any(u >= v for u, v in zip(xs, xs[1:])):
        raise DegenerateShape("fig11 abscissas collide")
    h = make_plmap([(0, 0), (Fraction(2, 5), a), (Fraction(4, 5), b), (1, 1)])
    return _build("fig11", {"a": a, "b": b}, points, h)


def fig18_valid(a, b) -> bool:
    a, b = to_fraction(a), to_fraction(b)
    return ZERO < a < b < 3 * a / 2 and a < Fraction(1, 2)


def family_fig18(a, b) -> FamilyInstance:
    """Five-piece g through ``(a, 2a)``, ``(b, 1)``, ``(2b-a, 2a)``, ``(2a, 4(b-a))``."""
    a, b = to_fraction(a), to_fraction(b)
    if not fig18_valid(a, b):
        raise ParamOutOfRange("fig18 needs 0 < a < b < 3a/2 and a < 1/2")
    points = [(0, 0), (a, 2 * a), (b, 1), (2 * b - a, 2 * a),
              (2 * a, 4 * (b - a)), (1, 0)]
    h = make_plmap([(0, 0), (a / b, 2 * a), (1, 1)])
    return _build("fig18", {"a": a, "b": b}, points, h)


def make_family(family_id: str, a, b=None) -> FamilyInstance:
    if family_id == "fig9":
        if b is not None:
            raise ParamOutOfRange("fig9 takes only a")
        return family_fig9(a)
    if family_id not in FAMILY_IDS:
        raise ParamOutOfRange(f"unknown family {family_id!r}")
    if b is None:
        raise ParamOutOfRange(f"{family_id} needs both a and b")
    return family_fig11(a, b) if family_id == "fig11" else family_fig18(a, b)


# -- slope relations ---------------------------------------------------------

def _rel(name, lhs, rhs) -> NamedRelation:
    return NamedRelation(name, Fraction(lhs), Fraction(rhs))


def slope_relations(inst: FamilyInstance) -> List[NamedRelation]:
    """Slope identities the family is known to satisfy.

    Relations on ``psi`` are only listed when psi has the generic piece
    count for its family; degenerate parameters (where g collapses to the
    tent map, say) drop them.
    """
    g_s, p_s = inst.g.slopes, inst.psi.slopes
    rels = []
    if inst.family_id == "fig9" and len(g_s) == 4:
        g1, g2, g3, g4 = g_s
        a = inst.params["a"]
        rels += [_rel("gamma1 = 2", g1, 2), _rel("gamma3 = -2", g3, -2),
                 _rel("gamma4 = -4/gamma2", g4, -4 / g2),
                 _rel("gamma2 = 2(1-a)/a", g2, 2 * (1 - a) / a)]
        if len(p_s) == 6:
            s1 = p_s[0]
            rels += [_rel("sigma1 = 3", s1, 3),
                     _rel("sigma2 = sigma1*gamma2/gamma1", p_s[1], s1 * g2 / g1),
                     _rel("sigma3 = -sigma1*gamma2/gamma1", p_s[2], -s1 * g2 / g1),
                     _rel("sigma4 = -sigma1*gamma1/gamma2", p_s[3], -s1 * g1 / g2),
                     _rel("sigma5 = sigma1*gamma1/gamma2", p_s[4], s1 * g1 / g2),
                     _rel("sigma6 = sigma1", p_s[5], s1)]
    elif inst.family_id == "fig11" and len(g_s) == 6:
        g1, g2, g3, g4, g5, g6 = g_s
        # y-lengths of the first two pieces
        la = inst.params["a"]
        lb = inst.params["b"] - inst.params["a"]
        den = 4 * g2 + g2 * g3 + 8
        rels += [_rel("gamma1 = 2", g1, 2), _rel("gamma4 = -gamma3", g4, -g3),
                 _rel("gamma5 = -2", g5, -2),
                 _rel("gamma6 = -8/(gamma2*gamma3)", g6, -8 / (g2 * g3)),
                 _rel("a = 8/(4 gamma2 + gamma2 gamma3 + 8)", la, 8 / den),
                 _rel("b = 4 gamma2/(4 gamma2 + gamma2 gamma3 + 8)", lb, 4 * g2 / den),
                 _rel("gamma2 = 2b/a", g2, 2 * lb / la),
                 _rel("gamma3 = 4(1-a-b)/b", g3, 4 * (1 - la - lb) / lb)]
        if len(p_s) == 9:
            expected = [3, 3 * g2 / 2, 3 * g2 * g3 / 4, -3 * g2 * g3 / 4, -3,
                        -6 / g2, 6 / g2, 6 / g3, 3]
            rels += [_rel(f"sigma{i + 1}", s, e) for i, (s, e) in enumerate(zip(p_s, expected))]
    elif inst.family_id == "fig18" and len(g_s) == 5:
        g1, g2, g3, g4, g5 = g_s
        a, b = inst.params["a"], inst.params["b"]
        last = 4 * (b - a)
        pre_last = 2 * a - last
        rels += [_rel("gamma1 = 2", g1, 2), _rel("gamma3 = -gamma2", g3, -g2),
                 _rel("gamma4 = -2", g4, -2), _rel("gamma5 = -4/gamma2", g5, -4 / g2),
                 _rel("b = 1 - a*gamma2/4 - a", pre_last, 1 - last * g2 / 4 - last)]
        if len(p_s) == 7:
            s1 = p_s[0]
            expected = [3, s1 * g2 / g1, -s1 * g2 / g1, -s1, s1, s1 * g1 / g2, s1]
            rels += [_rel(f"sigma{i + 1}", s, e) for i, (s, e) in enumerate(zip(p_s, expected))]
    return rels


# -- the lattice with an extra A_1 = D_2 coincidence -------------------------

_D2_COINCIDENCE_Q = frozenset({(0, 0), (2, 1), (4, 2), (6, 3), (8, 4), (10, 5)})


def matches_d2_coincidence_pattern(g: PLMap, psi: PLMap) -> bool:
    """True when the pair realises the kink pattern with an extra D2 coincidence.

    That lattice has n = 3, s = 1, the usual B/C coincidences and in
    addition the first g-kink A_1 sitting on D_2.
    """
    lat = determinating_lattice(g, psi)
    if (lat.n, lat.s) != (3, 1):
        return False
    pairs = kink_pairs(g, psi, lat)
    return _D2_COINCIDENCE_Q <= pairs.Q and (1, 2) in pairs.P


# -- left completion -----------------------------------------------------------

def _eval_points(pts: Sequence[Point], x: Fraction) -> Fraction:
    i = bisect_left([p[0] for p in pts], x)
    if pts[i][0] == x:
        return pts[i][1]
    (x0, y0), (x1, y1) = pts[i - 1], pts[i]
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0)


def _invert_points(pts: Sequence[Point], y: Fraction) -> Fraction:
    return _eval_points([(q, p) for p, q in pts], y)


def _validate_leg(points) -> List[Point]:
    pts = [(to_fraction(x), to_fraction(y)) for x, y in points]
    if len(pts) < 2 or pts[0] != (ZERO, ZERO) or pts[-1][1] != ONE:
        raise NotIncreasingLeg("the leg must run from (0,0) to (v,1)")
    v = pts[-1][0]
    if not ZERO < v < ONE:
        raise NotIncreasingLeg("the turning point v must lie in (0,1)")
    for p, q in zip(pts, pts[1:]):
        if not (p[0] < q[0] and p[1] < q[1]):
            raise NotIncreasingLeg(f"leg not strictly increasing near {p}")
    if (pts[1][1] - pts[0][1]) / (pts[1][0] - pts[0][0]) != 2:
        raise SlopeAtZeroNotTwo("the leg must have slope 2 at the origin")
    # g_l(x) - x is affine between breakpoints, so its sign at them decides
    for x, y in pts[1:]:
        if y <= x:
            raise PositiveFixedPoint(f"the leg meets the diagonal at or before x = {x}")
    return pts


def increasing_leg(g: PLMap) -> Tuple[Point, ...]:
    """Breakpoints of g from the origin up to its maximum."""
    v = classify(g).turning_point
    if v is None:
        raise NotIncreasingLeg("g is not unimodal")
    return tuple(p for p in g.points if p[0] <= v)


def left_conjugacy(points, cap: int = 10_000) -> PLMap:
    """The PL h with ``h o tent == g o h`` on the left half, built from g_l.

    On [0, 1/2] the functional equation reads ``h(2x) = g_l(h(x))``, so
    ``h(1/2^m)`` runs down the g_l-preimages of v.  Once that value is
    inside the slope-2 piece h is linear below it, and the equation then
    doubles the known interval until it covers [0, 1].
    """
    leg = _validate_leg(points)
    two_eps = 2 * leg[1][0]
    p, m = leg[-1][0], 1
    while p > two_eps:
        p = _invert_points(leg, p)
        m += 1
        if m > cap:
            raise StepCapExceeded("preimage chain of v did not reach the linear piece")
    length = Fraction(1, 2 ** m)
    h_pts = [(ZERO, ZERO), (length, p)]
    leg_xs = [x for x, _ in leg]
    while length < 1:
        top = h_pts[-1][1]
        xs = {2 * x for x, _ in h_pts}
        xs.update(2 * _invert_points(h_pts, y) for y in leg_xs if y <= top)
        h_pts = [(x, _eval_points(leg, _eval_points(h_pts, x / 2))) for x in sorted(xs)]
        length *= 2
    return make_plmap(h_pts)


def complete_from_left(points, cap: int = 10_000) -> PLMap:
    """The unique tent-conjugate unimodal map extending the increasing leg."""
    leg = _validate_leg(points)
    h = left_conjugacy(leg, cap)
    g = conjugate(tent(), h)
    v = leg[-1][0]
    checks = {x for x, _ in leg} | {x for x in g.xs if x <= v}
    if any(evaluate(g, x) != _eval_points(leg, x) for x in checks):
        raise AssertionError("completion does not extend the given leg")
    return g


def commutator_of(g: PLMap, t: int) -> PLMap:
    """``h o xi_t o h^-1`` for the tent conjugacy h of g."""
    h = find_tent_conjugacy(g)
    if h is None:
        raise NotTentConjugate("no PL conjugacy from the tent map to g was found")
    return conjugate(xi(t), h)


def random_parameters(family_id: str, rng, count: int, denominator: int = 997):
    """Yield ``count`` valid rational parameter tuples drawn with ``rng``."""
    produced = 0
    while produced < count:
        a = Fraction(rng.randrange(1, denominator), denominator)
        b = Fraction(rng.randrange(1, denominator), denominator)
        if family_id == "fig9":
            params: Iterable = (a,)
        elif family_id == "fig11":
            if not a < b:
                continue
            params = (a, b)
        else:
            if not fig18_valid(a, b):
                continue
            params = (a, b)
        produced += 1
        yield tuple(params)
