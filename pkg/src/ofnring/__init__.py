"""Commutative rings of typed ordered fuzzy numbers.

The core model: a typed OFN over a monotone base h is the pair of sides
slope * h(alpha) + offset, captured by four coefficients.  Arithmetic is
componentwise on those tuples, which makes each fixed-base family a
commutative ring with exact additive inverses.  Around that core:

* propriety classification and pathology repair (ring results can leave the
  proper numbers; the escape is detected and correctable);
* membership inversion for proper numbers, including mixed-base side pairs;
* three rival arithmetics kept as executable oracles: pointwise function
  pairs (Kosinski), revised corner-first trapezoids (Piasecki), and classical
  level-set / extension-principle fuzzy numbers;
* a ranking functional with fuzzy-weighted shortest paths, and a CLI.
"""

from .bases import (GAUSSIAN_INVERSE, IDENTITY, LOG, SQRT, BaseFunction,
                    available_tags, get_base, register_base)
from .classical import (LINEAR, LRFuzzyNumber, SpreadFamily,
                        from_typed_trapezoid, levelset_add, lr_level_set,
                        lr_membership, to_typed_trapezoid, zadeh_add_grid,
                        zadeh_mul_levelsets)
from .errors import (DegenerateError, DegreeCapError, DivisionByZero,
                     DocumentError, DomainError, FamilyMismatch, ImproperError,
                     MixedTypeError, NegativeCycle, OfnError, ParseError,
                     RangeError, UnknownBaseError, WrongPathology)
from .expr import parse_expression
from .kosinski import (FunctionProprietyReport, PiecewisePoly, PiecewisePolyOfn,
                       combine_sides, corresponding_membership, k_is_proper,
                       k_neg, k_op, k_scalar, value_preimages)
from .pathalgebra import (FuzzyDigraph, ShortestPathResult, ofn_min,
                          pointwise_min_report, rank, shortest_paths)
from .piasecki import (CONSTANT, PRODUCT_FORM, PiaseckiResult,
                       TrapezoidCorners, p_closure_check, p_op)
from .propriety import (PATHOLOGY_COMBINED, PATHOLOGY_II, PATHOLOGY_III,
                        PATHOLOGY_NONE, MembershipBranch, MembershipFunction,
                        ProprietyReport, classify, correct, correct_combined,
                        correct_type_ii, correct_type_iii, membership,
                        membership_eval, membership_from_sides,
                        nesting_violation)
from .ring import (EssentialTuple, Interval, Side, TypedOfn, add, crisp, div,
                   level_set, level_set_of_sides, mul, neg, one, orientation,
                   rectangular, scalar_mul, side_eval, sign_class, sub,
                   support, trapezoid, typed, zero)

__version__ = "0.1.0"

__all__ = [
    "BaseFunction", "IDENTITY", "SQRT", "GAUSSIAN_INVERSE", "LOG",
    "available_tags", "get_base", "register_base",
    "EssentialTuple", "Interval", "Side", "TypedOfn",
    "typed", "trapezoid", "rectangular", "crisp", "zero", "one",
    "add", "sub", "mul", "div", "neg", "scalar_mul",
    "side_eval", "level_set", "level_set_of_sides", "support",
    "sign_class", "orientation",
    "ProprietyReport", "classify",
    "PATHOLOGY_NONE", "PATHOLOGY_II", "PATHOLOGY_III", "PATHOLOGY_COMBINED",
    "correct", "correct_type_ii", "correct_type_iii", "correct_combined",
    "MembershipBranch", "MembershipFunction", "membership",
    "membership_from_sides", "membership_eval", "nesting_violation",
    "PiecewisePoly", "PiecewisePolyOfn", "FunctionProprietyReport",
    "combine_sides", "k_op", "k_neg", "k_scalar", "k_is_proper",
    "value_preimages", "corresponding_membership",
    "TrapezoidCorners", "PiaseckiResult", "CONSTANT", "PRODUCT_FORM",
    "p_op", "p_closure_check",
    "SpreadFamily", "LINEAR", "LRFuzzyNumber", "lr_membership",
    "lr_level_set", "levelset_add", "zadeh_add_grid", "zadeh_mul_levelsets",
    "from_typed_trapezoid", "to_typed_trapezoid",
    "rank", "ofn_min", "pointwise_min_report", "FuzzyDigraph",
    "ShortestPathResult", "shortest_paths",
    "parse_expression",
    "OfnError", "DomainError", "RangeError", "UnknownBaseError",
    "MixedTypeError", "DivisionByZero", "ImproperError", "DegenerateError",
    "WrongPathology", "DegreeCapError", "FamilyMismatch", "NegativeCycle",
    "ParseError", "DocumentError",
]
