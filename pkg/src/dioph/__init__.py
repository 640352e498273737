"""Exact diophantine constructions over F_q(t), F_q[t] and Z[t]."""

from .artin_schreier import (ASResult, DegreeObstruction, PoleOrderObstruction,
                             TraceObstruction, artin_schreier_operator, as_solve,
                             as_solve_constant, trace_to_prime)
from .errors import *  # noqa: F401,F403
from .field import FieldDescriptor, FieldElement, make_field, standard_field
from .formula import NoWitnessUpTo, Sat, check, evaluate, parse, pretty_print
from .godel import code_add, code_mul, decode, encode
from .mazur import (IndexedPoint, cluster_count, discretize, interval_index,
                    squares_sequence)
from .model import (div_p, model_add, model_mul, switch_E, val_add_rel, val_eq,
                    verify_model)
from .pell import IntPoly, PellSolution, denef_mul_rel, pell_solution, pell_verify
from .pheidas import (DpElement, DpWitness, dp_element, dp_membership, dp_residuals,
                      membership_formula_text)
from .poly import Polynomial, factor, is_irreducible, poly_gcd
from .ratfunc import (Place, RatFunc, enumerate_by_height, local_parts,
                      partial_fractions, valuation)
from .textio import parse_field, parse_poly, parse_ratfunc

__version__ = "0.1.0"
