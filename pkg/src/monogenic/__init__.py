"""Exact arithmetic for monogenic orders over F_q[x] in characteristic p:
finite fields, the rational function field with its places and valuations,
extension towers with discriminants, order membership and equality, the
constructive x+y=1 solver for finitely generated groups, bounded power-pair
searches with Frobenius-pattern fitting, and scripted verification of the
worked families.
"""

from .gf import FqCtx, FqElem, fq_arith, fq_frobenius, fq_pth_root
from .funcfield import (
    MINUS_INF,
    Place,
    PlaceSet,
    Poly,
    RatFunc,
    is_T_integer,
    is_T_unit,
    product_formula_sum,
    support,
    unit_group_rank,
    valuation,
)
from .bivar import BivarPoly, BivarSym, pth_power_decompose_bivar
from .tower import (
    AlgElem,
    ConjugateSet,
    GaloisMap,
    Tower,
    apply_galois,
    conjugate_difference_unit,
    conjugates,
    discriminant,
    frobenius_power,
    minimal_polynomial,
)
from .monorder import (
    GeneratorRelation,
    MonOrder,
    OrdersEqual,
    POLY_RING,
    RingTag,
    disc_form_predicate,
    express_in_power_basis,
    fit_generator_relation,
    in_order,
    orders_equal,
    sym_in_order,
    sym_orders_equal,
)
from .unitgrp import (
    GroupCtx,
    GroupElem,
    SolutionFamily,
    brute_force_xy1,
    brute_force_xyz1,
    build_group,
    ess_bound_log10,
    four_term_delta_set,
    pth_power_decompose,
    solve_xy1,
    subsum_bound_violations,
    subsum_exponent_bound,
)
from .frobsearch import (
    AddendumReport,
    BoundReport,
    FrobPattern,
    MSearchResult,
    PeriodPair,
    StableExponent,
    SymPowerPair,
    TowerPowerPair,
    addendum_report,
    bound_calculator,
    compute_ef,
    enumerate_M,
    fit_patterns,
    sym_stable_exponent,
)
from .verify import (
    EtaSequence,
    VerificationReport,
    verify_quartic_twist_family,
    verify_shifted_generator_family,
    verify_symmetric_quadratic_powers,
)
