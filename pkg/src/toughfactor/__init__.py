"""Toughness, Tutte's 2-factor criterion, forbidden induced paths and the G(l, m) family."""

from .errors import BudgetExceeded, Graph6ParseError, InputError, PreconditionError
from .families import FamilyWitness, build_family, family_formula, family_limit_check, family_witness_ratio
from .forbidden import (
    PathUnionWitness,
    find_induced_path,
    find_induced_path_union,
    is_pa_pb_free,
    is_split,
)
from .graph import (
    Graph,
    components,
    from_edge_list,
    induced,
    neighborhood,
    omega,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    write_edge_list,
)
from .matching import max_matching, perfect_matching
from .toughness import INFINITE, ToughnessResult, cut_ratio, is_t_tough, parse_rational, toughness_exact
from .twofactor import (
    GadgetGraph,
    Lemma5Report,
    OddComponentReport,
    TuttePair,
    TwoFactor,
    basic_u_path,
    build_gadget,
    check_lemma5,
    eta_of,
    find_tutte_pair_exhaustive,
    find_two_factor,
    odd_components,
    special_tutte_pair,
)

__version__ = "0.1.0"
