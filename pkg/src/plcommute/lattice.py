"""Single trajectories, SATs and the determinating lattice of a commuting pair.

Throughout, ``g`` is drawn in the quadrants x*g and psi*y and ``psi`` in the
quadrants x*psi and g*y.  A single trajectory through ``x0`` is the four
lines ``x = x0``, ``psi = psi(x0)``, ``g = g(x0)``, ``y = g(psi(x0))``; the
SAT of ``x`` collects the trajectories of every point sharing the value
``g(psi(x))``.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, NamedTuple, Sequence, Tuple

from .commutators import is_iterate
from .errors import (
    LatticeMismatch,
    NotCommuting,
    PreconditionViolated,
    TrivialPsi,
    UnmatchedKink,
)
from .plmap import (
    ONE,
    ZERO,
    PLMap,
    classify,
    compose,
    evaluate,
    make_plmap,
    preimages,
    to_fraction,
)

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SingleTrajectory:
    x0: Fraction
    xi_line: Fraction
    f_line: Fraction
    y_line: Fraction
    consistent: bool


@dataclass(frozen=True)
class SAT:
    seed: Fraction
    value: Fraction
    generators: Tuple[Fraction, ...]
    trajectories: Tuple[SingleTrajectory, ...]
    is_boundary: bool

    @property
    def consistent(self) -> bool:
        return all(t.consistent for t in self.trajectories)


@dataclass(frozen=True)
class Lattice:
    x_lines: Tuple[Fraction, ...]
    psi_lines: Tuple[Fraction, ...]
    g_lines: Tuple[Fraction, ...]
    y_lines: Tuple[Fraction, ...]
    seeds: Tuple[Fraction, ...]
    n: int
    s: int
    sats: Tuple[SAT, ...] = ()

    @property
    def counts(self) -> Tuple[int, int, int, int]:
        return (len(self.x_lines), len(self.psi_lines),
                len(self.g_lines), len(self.y_lines))

    @property
    def expected_counts(self) -> Tuple[int, int, int, int]:
        """Line counts predicted for a non-trivial commutator pair."""
        n, s = self.n, self.s
        return (2 * n * s + 2 * n - 1, 2 * s + 1, n * s + n - 1, s)

    @property
    def counts_match(self) -> bool:
        return self.counts == self.expected_counts


class ABCD(NamedTuple):
    A: Tuple[Point, ...]
    B: Tuple[Point, ...]
    C: Tuple[Point, ...]
    D: Tuple[Point, ...]


@dataclass(frozen=True)
class KinkPairSets:
    P: FrozenSet[Tuple[int, int]]
    Q: FrozenSet[Tuple[int, int]]


def single_trajectory(g: PLMap, psi: PLMap, x0) -> SingleTrajectory:
    x0 = to_fraction(x0)
    p = evaluate(psi, x0)
    f = evaluate(g, x0)
    y = evaluate(g, p)
    return SingleTrajectory(x0, p, f, y, y == evaluate(psi, f))


def check_sat_preconditions(g: PLMap, psi: PLMap) -> None:
    gp = classify(g)
    if not gp.is_unimodal:
        raise PreconditionViolated("g must be unimodal with g(0) = g(1) = 0 and max 1")
    pp = classify(psi)
    if not pp.is_surjective_each_piece or len(psi.points) < 2 \
            or all(y == psi.points[0][1] for y in psi.ys):
        raise PreconditionViolated("psi must map each monotone piece onto [0, 1]")


def _generators(g: PLMap, psi: PLMap, value: Fraction) -> Tuple[Fraction, ...]:
    xs = set()
    for u in preimages(g, value):
        xs.update(preimages(psi, u))
    return tuple(sorted(xs))


def _sat_for_value(g, psi, value, seed) -> SAT:
    gens = _generators(g, psi, value)
    trajectories = tuple(single_trajectory(g, psi, x) for x in gens)
    return SAT(seed, value, gens, trajectories, value in (ZERO, ONE))


def sat(g: PLMap, psi: PLMap, x) -> SAT:
    """All single trajectories generated by ``psi^-1(g^-1(g(psi(x))))``."""
    check_sat_preconditions(g, psi)
    x = to_fraction(x)
    return _sat_for_value(g, psi, evaluate(g, evaluate(psi, x)), x)


def _required_values(g: PLMap, psi: PLMap) -> Dict[Fraction, Fraction]:
    """SAT values whose lines put every kink on the lattice, with seeds.

    A kink of g must lie on an x-line and on a psi-line, a kink of psi on
    an x-line and on a g-line.  The values ``g(psi(x))`` at the points of
    ``g^-1(kinks of psi)`` are added too; for commuting pairs they repeat
    ``psi(kink)`` and change nothing, while for non-commuting pairs they
    guarantee that every kink of both composites is checked.
    """
    gpsi = compose(g, psi)
    kink_xs = sorted(set(g.xs) | set(psi.xs))
    seeds: Dict[Fraction, Fraction] = {}

    def want(value, x=None):
        if value not in seeds or (x is not None and seeds[value] is None):
            seeds[value] = x

    for x in kink_xs:
        want(evaluate(gpsi, x), x)
    for a in g.xs:
        want(evaluate(g, a))
    for b in psi.xs:
        want(evaluate(psi, b))
    for b in psi.xs:
        for x in preimages(g, b):
            want(evaluate(gpsi, x))
    for value, x in list(seeds.items()):
        if x is None:
            seeds[value] = _generators(g, psi, value)[0]
    return seeds


def _sats(g: PLMap, psi: PLMap) -> List[SAT]:
    seeds = _required_values(g, psi)
    return [_sat_for_value(g, psi, v, x) for v, x in sorted(seeds.items(), key=lambda kv: kv[1])]


def sat_commutes(g: PLMap, psi: PLMap):
    """Commutativity by trajectory consistency over the kink SATs.

    Returns ``(verdict, checked_points, first_bad_trajectory_or_None)``.
    """
    check_sat_preconditions(g, psi)
    checked = set()
    bad = None
    for s in _sats(g, psi):
        checked.update(s.generators)
        for t in s.trajectories:
            if not t.consistent and (bad is None or t.x0 < bad.x0):
                bad = t
    return bad is None, tuple(sorted(checked)), bad


def _interior(values) -> Tuple[Fraction, ...]:
    return tuple(sorted(v for v in set(values) if ZERO < v < ONE))


def determinating_lattice(g: PLMap, psi: PLMap) -> Lattice:
    """Union of the SAT lines needed to pass through every kink of g and psi.

    For a non-trivial commutator (psi not an iterate of g) the line counts
    must equal ``Lattice.expected_counts``; otherwise LatticeMismatch.
    """
    check_sat_preconditions(g, psi)
    if all(y == psi.points[0][1] for y in psi.ys):
        raise TrivialPsi("psi is constant")
    if compose(g, psi) != compose(psi, g):
        raise NotCommuting("g and psi do not commute")
    sats = _sats(g, psi)
    xs, ps, gs, ys = set(), set(), set(), set()
    for s in sats:
        for t in s.trajectories:
            xs.add(t.x0)
            ps.add(t.xi_line)
            gs.add(t.f_line)
            ys.add(t.y_line)
    n = classify(psi).monotone_piece_count
    nonboundary = sum(1 for s in sats if not s.is_boundary)
    lat = Lattice(
        x_lines=_interior(xs),
        psi_lines=_interior(ps),
        g_lines=_interior(gs),
        y_lines=_interior(ys),
        seeds=tuple(s.seed for s in sats),
        n=n,
        s=nonboundary,
        sats=tuple(sats),
    )
    if not lat.counts_match and is_iterate(psi, g) is None:
        raise LatticeMismatch(
            f"line counts {lat.counts} differ from {lat.expected_counts} for n={n}, s={nonboundary}")
    return lat


def _with_ends(values: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return (ZERO,) + tuple(values) + (ONE,)


def _check_consistent(g: PLMap, psi: PLMap, lat: Lattice) -> None:
    ends = {ZERO, ONE}
    checks = (
        (g, lat.x_lines, lat.g_lines, "g(X) not within G"),
        (psi, lat.x_lines, lat.psi_lines, "psi(X) not within Psi"),
        (g, lat.psi_lines, lat.y_lines, "g(Psi) not within Y"),
        (psi, lat.g_lines, lat.y_lines, "psi(G) not within Y"),
    )
    for m, src, dst, message in checks:
        allowed = set(dst) | ends
        if any(evaluate(m, u) not in allowed for u in src):
            raise LatticeMismatch(message)


def abcd_points(g: PLMap, psi: PLMap, lat: Lattice) -> ABCD:
    """Ordered graph/lattice intersections in the four quadrants.

    Index 0 is the origin-anchored point; the last index is the point
    over 1, so e.g. ``B[-1] == (1, psi(1))``.
    """
    _check_consistent(g, psi, lat)
    A = tuple((p, evaluate(g, p)) for p in _with_ends(lat.psi_lines))
    B = tuple((x, evaluate(psi, x)) for x in _with_ends(lat.x_lines))
    C = tuple((c, evaluate(psi, c)) for c in _with_ends(lat.g_lines))
    D = tuple((x, evaluate(g, x)) for x in _with_ends(lat.x_lines))
    return ABCD(A, B, C, D)


def _pairs(first, second, breakpoints, label) -> FrozenSet[Tuple[int, int]]:
    index = {pt: j for j, pt in enumerate(second)}
    found = set()
    matched = set()
    for i, pt in enumerate(first):
        if pt in breakpoints and pt in index:
            found.add((i, index[pt]))
            matched.add(pt)
    missing = set(breakpoints) - matched
    if missing:
        raise UnmatchedKink(f"{label} kinks without a partner: {sorted(missing)}")
    return frozenset(found)


def kink_pairs(g: PLMap, psi: PLMap, lat: Lattice) -> KinkPairSets:
    """Index pairs of coincident kinks: P on A x D, Q on B x C.

    The interval endpoints count as kinks.
    """
    pts = abcd_points(g, psi, lat)
    P = _pairs(pts.A, pts.D, set(g.points), "g")
    Q = _pairs(pts.B, pts.C, set(psi.points), "psi")
    return KinkPairSets(P, Q)


def zigzag(levels_at: Sequence[Fraction], levels: Sequence[Fraction]) -> PLMap:
    """Map visiting consecutive levels of ``{0} + levels + {1}``.

    Starting at the origin, each abscissa of ``levels_at`` (and finally 1)
    receives the next level up or down, turning only at 0 and 1, so every
    monotone piece covers [0, 1].
    """
    ladder = _with_ends(sorted(levels))
    top = len(ladder) - 1
    idx, step = 0, 1
    pts = [(ZERO, ZERO)]
    for x in list(sorted(levels_at)) + [ONE]:
        idx += step
        pts.append((x, ladder[idx]))
        if idx == top:
            step = -1
        elif idx == 0:
            step = 1
    return make_plmap(pts)


def reconstruct(lat: Lattice) -> Tuple[PLMap, PLMap]:
    """Rebuild ``(g, psi)`` from the lattice lines alone.

    Both quadrants of each map are rebuilt and must agree; a mismatch
    raises :class:`LatticeMismatch`.
    """
    g = zigzag(lat.x_lines, lat.g_lines)
    psi = zigzag(lat.x_lines, lat.psi_lines)
    if zigzag(lat.psi_lines, lat.y_lines) != g:
        raise LatticeMismatch("x*g and psi*y quadrants disagree")
    if zigzag(lat.g_lines, lat.y_lines) != psi:
        raise LatticeMismatch("x*psi and g*y quadrants disagree")
    return g, psi
