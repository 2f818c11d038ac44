"""The tent map, its sawtooth commutators and commutativity tests."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InvalidT, PreconditionViolated
from .plmap import PLMap, ONE, ZERO, compose, evaluate, identity, make_plmap


def tent() -> PLMap:
    return make_plmap([(0, 0), (Fraction(1, 2), 1), (1, 0)])


def xi(t: int) -> PLMap:
    """Sawtooth map with ``t`` full-range pieces of slope +-t.

    ``xi(t)`` commutes with the tent map for every ``t >= 1``; ``xi(1)`` is
    the identity and ``xi(2)`` the tent map itself.
    """
    if not isinstance(t, int) or t < 1:
        raise InvalidT(f"t must be a positive integer, got {t!r}")
    return make_plmap([(Fraction(k, t), k % 2) for k in range(t + 1)])


@dataclass(frozen=True)
class Witness:
    x: Fraction
    g_psi: Fraction
    psi_g: Fraction


@dataclass(frozen=True)
class CommuteReport:
    commutes: bool
    witness: Optional[Witness] = None
    checked_points: Tuple[Fraction, ...] = ()
    sat_commutes: Optional[bool] = None
    method: str = "both"


@dataclass(frozen=True)
class SlopeRelation:
    point: Fraction
    lhs: Fraction
    rhs: Fraction
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.lhs == self.rhs)


def _first_disagreement(g: PLMap, psi: PLMap, candidates) -> Optional[Witness]:
    for x in sorted(candidates):
        a = evaluate(g, evaluate(psi, x))
        b = evaluate(psi, evaluate(g, x))
        if a != b:
            return Witness(x, a, b)
    return None


def commutes(g: PLMap, psi: PLMap, method: str = "both") -> CommuteReport:
    """Decide ``g o psi == psi o g``.

    ``method='exact'`` compares the canonical composites, ``'sat'`` checks
    the single trajectories of the determinating lattice, ``'both'`` runs
    the two and raises ``AssertionError`` should they ever disagree.  The
    SAT route needs a unimodal ``g`` and a piecewise-surjective ``psi``;
    when those fail under ``'both'`` only the exact verdict is reported.
    """
    from . import lattice  # local import: lattice builds on this module

    if method not in ("exact", "sat", "both"):
        raise ValueError(f"unknown method {method!r}")
    exact = None
    witness = None
    if method in ("exact", "both"):
        gp, pg = compose(g, psi), compose(psi, g)
        exact = gp == pg
        if not exact:
            witness = _first_disagreement(g, psi, set(gp.xs) | set(pg.xs))

    sat_verdict = None
    checked: Tuple[Fraction, ...] = ()
    if method in ("sat", "both"):
        try:
            sat_verdict, checked, bad = lattice.sat_commutes(g, psi)
        except PreconditionViolated:
            if method == "sat":
                raise
        else:
            if witness is None and bad is not None:
                witness = Witness(bad.x0, bad.y_line, evaluate(psi, bad.f_line))

    if method == "sat":
        return CommuteReport(sat_verdict, witness, checked, sat_verdict, method)
    if sat_verdict is not None and sat_verdict != exact:
        raise AssertionError(
            f"exact verdict {exact} disagrees with SAT verdict {sat_verdict}")
    return CommuteReport(exact, witness, checked, sat_verdict, method)


def _cell_points(*maps: PLMap) -> List[Fraction]:
    xs = set()
    for m in maps:
        xs.update(m.xs)
    return sorted(xs)


def chain_rule_check(g: PLMap, psi: PLMap) -> List[SlopeRelation]:
    """Differentiated commutation identity on every common linearity cell.

    On each cell all of g, psi, g o psi and psi o g are affine, so the
    relation ``psi'(x) g'(psi(x)) == g'(x) psi'(g(x))`` is decided by the
    midpoint alone.
    """
    cuts = _cell_points(g, psi, compose(g, psi), compose(psi, g))
    relations = []
    for a, b in zip(cuts, cuts[1:]):
        m = (a + b) / 2
        lhs = psi.slope_at(m) * g.slope_at(evaluate(psi, m))
        rhs = g.slope_at(m) * psi.slope_at(evaluate(g, m))
        relations.append(SlopeRelation(m, lhs, rhs))
    return relations


def is_iterate(psi: PLMap, g: PLMap, max_n: int = 64) -> Optional[int]:
    """Least ``n >= 1`` with ``psi == g**n``, or None.

    The search stops once g**n has more pieces than psi, when the iterates
    start cycling, or after ``max_n`` steps.
    """
    pieces = len(psi.points) - 1
    power = identity()
    seen = set()
    for n in range(1, max_n + 1):
        power = compose(g, power)
        if power == psi:
            return n
        if len(power.points) - 1 > pieces or power in seen:
            return None
        seen.add(power)
    return None
