"""
Quasi-star, quasi-complete and threshold graphs
===============================================

Build the two extremal families, look at their degree and conjugate
sequences, then walk a non-threshold graph to a threshold one.
"""

from extremal_degseq import (Graph, degree_sequence, is_threshold, make_quasi_complete,
                             make_quasi_star, threshold_from_creation_sequence)
from extremal_degseq.graphs import chain_exchange, chain_violation

# a star on 6 leaves: the quasi-star with n = 7, m = 6
qs = make_quasi_star(7, 6)
print("quasi-star     ", degree_sequence(qs).d, degree_sequence(qs).conjugate)

# six edges packed into a clique on four vertices
qk = make_quasi_complete(7, 6)
print("quasi-complete ", degree_sequence(qk).d, degree_sequence(qk).conjugate)

# creation sequences: the first symbol is only the seed vertex
print(threshold_from_creation_sequence("iid"))

# the path on 4 vertices is not threshold; one exchange fixes that
p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
triple = chain_violation(p4)
print("violation", triple)
fixed = chain_exchange(p4, *triple)
print("after exchange", degree_sequence(fixed).d, "threshold:", is_threshold(fixed))
