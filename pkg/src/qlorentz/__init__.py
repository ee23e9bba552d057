"""Exact computational-algebra engine for q-deformed oscillators, su_q(2),
the chiral q-Lorentz algebra, and q-Minkowski space.

Everything is verified twice: symbolically, by a confluent normal-ordering
rewrite system over an exact scalar field (rationals extended by p = q^(1/2),
i, and sqrt2), and on total-number-graded Fock blocks, where exact matrix
arithmetic provides an independent oracle.
"""

from .scalars import (LaurentFrac, LaurentPoly, QValue, Rational, Scalar,
                      eval_float, qfactorial, qnum, qnum_at)
from .qexpr import (Bracket, Expr, Gen, GradingError, NormalForm, ParseError,
                    Power, Product, QNum, QPow, ScalarLit, Sum, commutator,
                    normal_order, parse, parse_normal)
from .fockrep import (CutoffSpace, FockBlock, ScalarMatrix, equivalence_check,
                      lorentz_block, number_matrix, pair_block, represent,
                      represent_expr, represent_expr_float, represent_float,
                      spectral_function)
from .report import Entry, VerificationReport
from .suq2 import (GeneratorSet, Relation, basis_transform, fundamental_rep,
                   js_generators, qbracket_diagonal, relations_to_dsl,
                   verify_relations)
from .lorentz import (brace, chiral_generators, fundamental_rep4,
                      hopf_axiom_check, rotation_boost_generators)
from .qminkowski import (central_elements_check, coordinates,
                         deformed_metric, invariant_length, metric_form_check,
                         minkowski_generators, q_trace, verify_qm_relations)
from .cli import SuiteConfig, main, run_suite

__version__ = "0.1.0"
