"""
Which functions keep the star on top?
=====================================

Finite-range checks of the convexity, star and increment inequalities for a
few catalog functions.
"""

from extremal_degseq import check_class_f, check_class_g, make_hat, parse_spec

for text in ["pow:2", "pow:1.5", "pow:3", "exp:1"]:
    rep = check_class_f(parse_spec(text), K=2000)
    fail = rep.first_failure
    print(f"{text:8s} F member: {rep.member!s:5s}",
          f"first failure {fail.condition} at k={fail.k}" if fail else "",
          f"({len(rep.ties)} equality points kept)" if rep.ties else "")

for text in ["pow:0.5", "ratio", "negexp:ln(2)", "negexp:0.5"]:
    rep = check_class_g(parse_spec(text), K=2000)
    print(f"{text:12s} G member: {rep.member}", [(w.condition, w.k) for w in rep.ties])

# reflecting a concave function at level nu gives a convex one
hat = make_hat(parse_spec("pow:0.5"), 6)
print(hat.dsl(), "tail rate M =", hat.M, "F member:", check_class_f(hat, K=200).member)
