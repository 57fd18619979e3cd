"""
Maximizers over sparse graphs
=============================

For m <= n - 1 the star wins for every function in F. Squares tie with the
triangle at m = 3, and x^1.5 lets a clique take over.
"""

from extremal_degseq import find_extremal, parse_spec, verify_unique_quasi_star

rep = find_extremal(parse_spec("pow:2"), 6, 3, mode="max")
print("pow:2, n=6, m=3:", rep.optimum, rep.optimal_sequences)

for n in range(4, 8):
    row = [verify_unique_quasi_star(parse_spec("exp:1"), n, m).status for m in range(n)]
    print("exp:1 n =", n, row)

v = verify_unique_quasi_star(parse_spec("pow:1.5"), 7, 6)
print("pow:1.5, n=7, m=6:", v.status, "found", v.found, "value", float(v.report.optimum))

# beyond m = n - 1 the oracle still answers, but nothing is guaranteed there
print(find_extremal(parse_spec("pow:2"), 5, 7).note)
