"""Extremal degree-sum problems on graphs with n vertices and m edges.

Maximize ``sum f(d_i)`` for convex ``f`` and minimize ``sum g(d_i)`` for
concave ``g``; build quasi-star, quasi-complete and threshold graphs; check
finite-range membership in the function classes for which those graphs are
the unique optimizers; and verify everything against exhaustive enumeration.
"""

from .extremal import (chebyshev_bound, chebyshev_inequality_check, local_search_to_threshold,
                       minimize_via_complement, plan_minimization, sigma, sigma_via_conjugate)
from .functions import (BaseExpMinusOne, Conical, ExpMinusOne, FunctionSpec, Hat, Linear, NegExp,
                        Power, Ratio, check_class_f, check_class_g, evaluate,
                        forward_difference, make_hat, parse_spec)
from .graphs import (DegreeSequence, Graph, chain_exchange, chain_violation, complement,
                     degree_sequence, is_graphical, is_threshold, make_quasi_complete,
                     make_quasi_star, threshold_from_creation_sequence)
from .oracle import (ExtremalReport, enumerate_graphical_sequences, enumerate_threshold_graphs,
                     find_extremal, verify_isolated_vertex_lemma, verify_unique_quasi_complete,
                     verify_unique_quasi_star)
from .sparse import counterexample_margin, find_epsilon_window, verify_counterexample

__version__ = "0.1.0"
