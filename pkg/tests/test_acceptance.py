"""One test per acceptance criterion; each logs a PASS/FAIL line shown in the
terminal summary."""

import math
import random
import time
from fractions import Fraction

import mpmath
import pytest

from extremal_degseq._numeric import TAU, compare, to_mpf
from extremal_degseq.extremal import (chebyshev_bound, chebyshev_inequality_check,
                                      local_search_to_threshold, minimize_via_complement, sigma,
                                      sigma_via_conjugate)
from extremal_degseq.functions import (NegExp, Power, check_class_f, check_increment_inequality,
                                       check_star_inequality, evaluate, make_hat, parse_spec)
from extremal_degseq.graphs import (all_graphs, degree_sequence, has_triangle, is_threshold,
                                    make_quasi_complete, make_quasi_star,
                                    threshold_from_creation_sequence)
from extremal_degseq.oracle import (ALL_GRAPHICAL, THRESHOLD_ONLY, enumerate_graphical_sequences,
                                    enumerate_threshold_graphs, find_extremal,
                                    verify_isolated_vertex_lemma, verify_unique_quasi_complete,
                                    verify_unique_quasi_star)
from extremal_degseq.sparse import (DEFAULT_BETAS, DEFAULT_XS, ROOT_TOL, check_derivative_inequality,
                                    check_power_star_gap, find_epsilon_window, power_tie_margin)

MAX_SPECS = ["pow:2", "pow:2.5", "pow:3", "pow:4", "exp:0.5", "exp:1", "exp:2", "lc:1*pow:2+1*exp:0.5"]
MIN_SPECS = ["pow:0.5", "pow:0.3", "negexp:0.7", "negexp:1.0", "ratio"]
MIN_CELLS = [(g, n, m) for g in MIN_SPECS for n in range(4, 8) for m in range(math.comb(n, 2) + 1)]


def record(log, number, failures, elapsed, scope):
    status = "FAIL" if failures else "PASS"
    line = f"criterion {number}: {status} ({scope}; {elapsed:.2f} s)"
    if failures:
        line += f"; first failures: {failures[:3]}"
    log.append(line)
    print(line)


def threshold_graphs_upto(n_max):
    for n in range(1, n_max + 1):
        for m in range(math.comb(n, 2) + 1):
            yield from enumerate_threshold_graphs(n, m)


def test_criterion_1_unique_quasi_star(acceptance_log):
    t0 = time.perf_counter()
    failures, tie_rows = [], []
    for text in MAX_SPECS:
        spec = parse_spec(text)
        for n in range(4, 10):
            for m in range(n):
                v = verify_unique_quasi_star(spec, n, m, ALL_GRAPHICAL, TAU)
                if not v.passed:
                    failures.append((text, n, m, v.status, v.found))
                if len(v.found) > 1:
                    tie_rows.append((text, n, m))
    elapsed = time.perf_counter() - t0
    # the only ties are pow:2 at m = 3, where f(3) = 3(f(2) - f(1))
    if tie_rows != [("pow:2", n, 3) for n in range(4, 10)]:
        failures.append(("unexpected tie rows", tie_rows))
    record(acceptance_log, 1, failures, elapsed, "8 functions, n 4..9, m 0..n-1")
    assert not failures
    assert elapsed < 30


def test_criterion_2_unique_quasi_complete(acceptance_log):
    t0 = time.perf_counter()
    failures = []
    for text, n, m in MIN_CELLS:
        spec = parse_spec(text)
        v = verify_unique_quasi_complete(spec, n, m, THRESHOLD_ONLY, TAU)
        if not v.passed:
            failures.append((text, n, m, "threshold-only", v.status))
        if n <= 6:
            w = verify_unique_quasi_complete(spec, n, m, ALL_GRAPHICAL, TAU)
            if not w.passed:
                failures.append((text, n, m, "all-graphical", w.status))
    elapsed = time.perf_counter() - t0
    record(acceptance_log, 2, failures, elapsed,
           f"{len(MIN_CELLS)} cells, n 4..7 threshold-only, n 4..6 all-graphical")
    assert not failures
    assert elapsed < 120


def test_criterion_3_duality(acceptance_log):
    t0 = time.perf_counter()
    failures = []
    for text, n, m in MIN_CELLS:
        spec = parse_spec(text)
        via = minimize_via_complement(n, m, spec)
        oracle = find_extremal(spec, n, m, "min", ALL_GRAPHICAL, TAU)
        same_value = compare(via.optimum, oracle.optimum, TAU).sign == 0
        if not same_value or via.optimal_sequences != oracle.optimal_sequences:
            failures.append((text, n, m))
        if spec.exact and via.optimum != oracle.optimum:
            failures.append((text, n, m, "exact mismatch"))
    elapsed = time.perf_counter() - t0
    record(acceptance_log, 3, failures, elapsed, f"{len(MIN_CELLS)} cells against the all-graphical oracle")
    assert not failures


@pytest.fixture(scope="module")
def windows():
    t0 = time.perf_counter()
    ws = {q: find_epsilon_window(q) for q in range(4, 11)}
    return ws, time.perf_counter() - t0


def _window_checks(ws):
    failures = []
    for q, w in ws.items():
        m = math.comb(q, 2)
        if not 0 < w.root <= 1:
            failures.append((q, "root outside (0, 1]"))
        eps = mpmath.mpf(w.root) / 2
        clique = q * (q - 1) ** (1 + eps)
        star = m + m ** (1 + eps)
        if not clique > star:
            failures.append((q, "no counterexample at half the root"))
        if not all(s.clique_wins for s in w.samples):
            failures.append((q, "sample lost"))
    if not ws[4].contains(0.25):
        failures.append((4, "0.25 outside window"))
    return failures


def test_criterion_4_counterexample_window(acceptance_log, windows):
    ws, elapsed = windows
    failures = _window_checks(ws)
    strict = {q: w.peak_bound - w.peak > ROOT_TOL for q, w in ws.items()}
    bound_failures = [(q, "peak not strictly below bound") for q, ok in strict.items() if not ok]
    record(acceptance_log, 4, failures + bound_failures, elapsed,
           "q 4..10, root tolerance 1e-12; strict peak bound checked separately at q = 4")
    assert not failures
    assert all(strict[q] for q in range(5, 11))
    assert ws[4].peak <= ws[4].peak_bound + ROOT_TOL
    assert elapsed < 1


@pytest.mark.xfail(strict=True, reason="at q = 4 the peak equals the bound analytically: "
                                       "ln 6 / ln 3 = 1 + ln 2 / ln 3")
def test_criterion_4_strict_peak_bound_at_q4(windows):
    ws, _ = windows
    assert ws[4].peak_bound - ws[4].peak > ROOT_TOL


def test_criterion_5_class_table(acceptance_log):
    t0 = time.perf_counter()
    failures = []
    for beta in (2, Fraction(5, 2), 3, 5):
        rep = check_class_f(Power(beta), 10_000)
        if not rep.member or rep.checked_up_to != 10_000:
            failures.append(("pow", beta, rep.first_failure))
    star = check_star_inequality(Power(Fraction(3, 2)), 10_000)
    if star.ok or star.first_failure.k != 3:
        failures.append(("pow:1.5", star.first_failure))
    for lam in (mpmath.log(2), Fraction(7, 10), 1):
        inc = check_increment_inequality(NegExp(lam), 10_000)
        if not inc.ok:
            failures.append(("negexp", lam, inc.first_failure))
        tie_ks = [w.k for w in inc.ties]
        if (tie_ks == [1]) != (lam == mpmath.log(2)):
            failures.append(("negexp ties", lam, tie_ks))
    for nu in range(3, 13):
        hat = make_hat(Power(Fraction(1, 2)), nu)
        rep = check_class_f(hat, 200)
        h1, h2, h3 = (to_mpf(evaluate(hat, k)) for k in (1, 2, 3))
        if not rep.member:
            failures.append(("hat", nu, rep.first_failure))
        if not h3 > 3 * (h2 - h1) or compare(h3, 3 * (h2 - h1)).near_tie:
            failures.append(("hat strict at 3", nu))
    elapsed = time.perf_counter() - t0
    record(acceptance_log, 5, failures, elapsed, "verified up to K = 10000 (hats up to K = 200)")
    assert not failures


def test_criterion_6a_chebyshev_property(acceptance_log):
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    failures = []
    for trial in range(10_000):
        n = rng.randint(1, 10)
        a = sorted(rng.randint(-3, 3) for _ in range(n))
        b = sorted((rng.randint(-3, 3) for _ in range(n)), reverse=True)
        r = chebyshev_inequality_check(a, b)
        constant = len(set(a)) == 1 or len(set(b)) == 1
        if not r.holds or r.equality != constant:
            failures.append((trial, a, b))
    record(acceptance_log, "6a", failures, time.perf_counter() - t0, "10000 seeded monotone pairs")
    assert not failures


def test_criterion_6b_conjugate_identity(acceptance_log):
    t0 = time.perf_counter()
    exact = [parse_spec(s) for s in ("pow:2", "pow:3", "ratio", "lc:2*pow:2+1*ratio")]
    inexact = [parse_spec(s) for s in ("pow:2.5", "exp:1", "negexp:0.7")]
    failures, count = [], 0
    for n in range(1, 9):
        for m in range(math.comb(n, 2) + 1):
            for ds in enumerate_graphical_sequences(n, m):
                count += 1
                for spec in exact:
                    if sigma(spec, ds) != sigma_via_conjugate(spec, ds):
                        failures.append((spec.dsl(), ds.d))
                for spec in inexact:
                    if compare(sigma(spec, ds), sigma_via_conjugate(spec, ds), TAU).sign != 0:
                        failures.append((spec.dsl(), ds.d))
    record(acceptance_log, "6b", failures, time.perf_counter() - t0,
           f"{count} graphical sequences, n <= 8")
    assert not failures


def test_criterion_6c_chebyshev_bound(acceptance_log):
    t0 = time.perf_counter()
    specs = [parse_spec(s) for s in MAX_SPECS]
    failures, equalities = [], set()
    for g in threshold_graphs_upto(8):
        ds = degree_sequence(g)
        if g.m > g.n - 1 or ds.max_degree < 2:
            continue
        # predicted equality: conjugate constant on positions 2..d1
        predicted = len(set(ds.conjugate[1:ds.max_degree])) == 1
        for spec in specs:
            cmp = compare(sigma(spec, ds), chebyshev_bound(spec, g.m, ds.max_degree), TAU)
            if cmp.sign > 0 or (cmp.sign == 0) != predicted or (spec.exact and cmp.near_tie):
                failures.append((spec.dsl(), ds.d, cmp.sign))
            if cmp.sign == 0:
                equalities.add(ds.d)
    stars = {degree_sequence(make_quasi_star(n, m)).d for n in range(3, 9) for m in range(2, n)}
    triangles = {(2, 2, 2) + (0,) * (n - 3) for n in range(4, 9)}
    missing = (stars | triangles) - equalities
    if missing:
        failures.append(("missing equality cases", sorted(missing)))
    record(acceptance_log, "6c", failures, time.perf_counter() - t0,
           "threshold graphs n <= 8, m <= n-1, d1 >= 2")
    assert not failures


def test_criterion_6d_local_search(acceptance_log):
    t0 = time.perf_counter()
    f = Power(2)
    failures, count = [], 0
    for n in range(1, 7):
        for g in all_graphs(n):
            count += 1
            res = local_search_to_threshold(g, f)
            monotone = all(b > a for a, b in zip(res.values, res.values[1:]))
            if not is_threshold(res.graph) or not monotone or res.graph.m != g.m:
                failures.append(g.edges())
    record(acceptance_log, "6d", failures, time.perf_counter() - t0,
           f"{count} labeled graphs, n <= 6")
    assert not failures


def test_criterion_6e_threshold_structure(acceptance_log):
    t0 = time.perf_counter()
    failures, count = [], 0
    for g in threshold_graphs_upto(8):
        count += 1
        d = g.degrees
        top, low = max(d), min(d)
        live = {v for v in range(g.n) if d[v] > 0}
        for v in range(g.n):
            if d[v] == top and top > 0 and not live - {v} <= set(g.neighbors(v)):
                failures.append(("i", g.edges()))
        if low > 0:
            if top != g.n - 1:
                failures.append(("ii", g.edges()))
            for v in range(g.n):
                if d[v] == low and any(d[u] != g.n - 1 for u in g.neighbors(v)):
                    failures.append(("ii", g.edges()))
        conj = degree_sequence(g).conjugate
        if g.n >= 2 and conj[1] > 1 and not (has_triangle(g) and conj[1] >= 3):
            failures.append(("iii", g.edges()))
    # enumeration covers every creation sequence up to n = 8
    assert count == sum(2 ** (n - 1) for n in range(1, 9))
    assert is_threshold(threshold_from_creation_sequence("iddid"))
    record(acceptance_log, "6e", failures, time.perf_counter() - t0, f"{count} threshold graphs, n <= 8")
    assert not failures


def test_criterion_6f_isolated_vertex(acceptance_log):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for text, n, m in MIN_CELLS:
        v = verify_isolated_vertex_lemma(parse_spec(text), n, m, ALL_GRAPHICAL, TAU)
        in_scope = m <= math.comb(n - 1, 2)
        if in_scope:
            checked += 1
        if (in_scope and not v.passed) or (not in_scope and v.status != "SKIPPED"):
            failures.append((text, n, m, v.status))
    record(acceptance_log, "6f", failures, time.perf_counter() - t0,
           f"{checked} in-scope cells of criterion 2")
    assert not failures


def test_criterion_7_grid_scans(acceptance_log):
    t0 = time.perf_counter()
    failures = []
    ratio = check_derivative_inequality(DEFAULT_BETAS, DEFAULT_XS)
    if not ratio.holds or (2.0, 3.0) not in ratio.equality_points:
        failures.append(("derivative inequality", ratio.worst, ratio.worst_at))
    ties = [power_tie_margin(float(b)) for b in DEFAULT_BETAS]
    if ties[0] != 0 or any(t < 0 for t in ties):
        failures.append(("tie margin", min(ties)))
    for beta in DEFAULT_BETAS:
        gap = check_power_star_gap(float(beta), DEFAULT_XS)
        if not gap.holds:
            failures.append(("star gap", float(beta), gap.worst_at))
    elapsed = time.perf_counter() - t0
    record(acceptance_log, 7, failures, elapsed,
           f"beta {DEFAULT_BETAS[0]}..{DEFAULT_BETAS[-1]} step 0.1, x 3..100 step 0.5")
    assert not failures
    assert elapsed < 1
