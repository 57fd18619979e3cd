"""
Where the star loses for exponents just above one
=================================================

With m = C(q, 2) edges on m + 1 vertices, the clique K_q beats the star for
f(x) = x^(1 + eps) on a window of small eps that shrinks as q grows.
"""

from extremal_degseq import find_epsilon_window, verify_counterexample

for q in range(4, 13):
    w = find_epsilon_window(q)
    print(f"q={q:2d} peak={w.peak:.6f} bound={w.peak_bound:.6f} root={w.root:.6f}")

rec = verify_counterexample(4, 0.5)
print("q=4, eps=0.5: star", rec.star_value, "clique", rec.clique_value)
rec = verify_counterexample(4, 0.9)
print("q=4, eps=0.9: star", rec.star_value, "clique", rec.clique_value)
