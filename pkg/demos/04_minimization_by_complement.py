"""
Minimizing through the complement
=================================

A concave objective is minimized by packing edges. The minimum on n vertices
is read off from a maximization of the reflected function on the complement.
"""

from extremal_degseq import find_extremal, minimize_via_complement, parse_spec, plan_minimization

g = parse_spec("ratio")
plan = plan_minimization(5, 7, g)
print(f"ell={plan.ell} nu={plan.nu} complement edges={plan.m_bar} reflected={plan.hat.dsl()}")

via = minimize_via_complement(5, 7, g)
direct = find_extremal(g, 5, 7, mode="min")
print("duality:", via.optimal_sequences, via.optimum)
print("oracle: ", direct.optimal_sequences, direct.optimum)

sqrt = parse_spec("pow:0.5")
for m in range(0, 16, 3):
    rep = minimize_via_complement(6, m, sqrt)
    print(m, rep.optimal_sequences[0], float(rep.optimum))
