"""Exact commuting piecewise-linear interval maps and their tent-map conjugacies."""
from .commutators import CommuteReport, SlopeRelation, Witness, chain_rule_check, commutes, is_iterate, tent, xi
from .conjugacy import (
    ConjugacyReport,
    Itinerary,
    conjugate,
    find_tent_conjugacy,
    first_kink_prediction,
    itinerary,
    tent_necessary_conditions,
    tent_point,
    verify_conjugacy,
)
from .errors import *  # noqa: F401,F403
from .families import (
    FamilyInstance,
    commutator_of,
    complete_from_left,
    family_fig9,
    family_fig11,
    family_fig18,
    increasing_leg,
    make_family,
    matches_d2_coincidence_pattern,
    slope_relations,
)
from .lattice import (
    SAT,
    Lattice,
    SingleTrajectory,
    abcd_points,
    determinating_lattice,
    kink_pairs,
    reconstruct,
    sat,
    sat_commutes,
    single_trajectory,
    zigzag,
)
from .plmap import (
    MapProfile,
    PLMap,
    classify,
    compose,
    equals,
    evaluate,
    format_plmap,
    identity,
    iterate,
    make_plmap,
    parse_plmap,
    preimages,
)
from .render import QuadrantScene, render_quadrant_svg

__version__ = "0.1.0"
