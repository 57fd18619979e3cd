"""Symbolic objective functions evaluated on the naturals.

Every function here is centered (value 0 at 0). Integer powers, the identity,
``x/(x+1)`` and non-negative rational combinations of them evaluate exactly;
everything else evaluates in ``mpmath`` at 50 digits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import mpmath

from ._numeric import TAU, compare, is_exact, to_mpf

Param = Union[int, Fraction, mpmath.mpf]


def _fmt(p: Param) -> str:
    if isinstance(p, int):
        return str(p)
    if isinstance(p, Fraction):
        if p.denominator == 1:
            return str(p.numerator)
        s = f"{float(p):.15g}"
        return s if Fraction(s) == p else f"{p.numerator}/{p.denominator}"
    return mpmath.nstr(p, 17)


def _as_mpf(p: Param) -> mpmath.mpf:
    return to_mpf(p)


class FunctionSpec:
    """Base class; subclasses are frozen dataclasses."""

    exact = False

    def value(self, k: int):
        raise NotImplementedError

    def diff(self, k: int):
        """``value(k) - value(k - 1)`` for ``k >= 1``."""
        return self.value(k) - self.value(k - 1)

    def __str__(self) -> str:
        return self.dsl()

    def dsl(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Power(FunctionSpec):
    beta: Param

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError("power exponent must be positive")

    @property
    def exact(self) -> bool:
        return is_exact(self.beta) and Fraction(self.beta).denominator == 1

    def value(self, k: int):
        if self.exact:
            return k ** int(self.beta)
        return mpmath.mpf(k) ** _as_mpf(self.beta) if k else mpmath.mpf(0)

    def dsl(self) -> str:
        return f"pow:{_fmt(self.beta)}"


@dataclass(frozen=True)
class ExpMinusOne(FunctionSpec):
    """``e^(lam x) - 1``."""

    lam: Param

    def __post_init__(self):
        if self.lam <= 0:
            raise ValueError("rate must be positive")

    def value(self, k: int):
        return mpmath.expm1(_as_mpf(self.lam) * k)

    def diff(self, k: int):
        lam = _as_mpf(self.lam)
        return mpmath.exp(lam * (k - 1)) * mpmath.expm1(lam)

    def dsl(self) -> str:
        return f"exp:{_fmt(self.lam)}"


@dataclass(frozen=True)
class BaseExpMinusOne(FunctionSpec):
    """``a^(lam x) - 1`` with ``a > 1``."""

    a: Param
    lam: Param

    def __post_init__(self):
        if self.a <= 1 or self.lam <= 0:
            raise ValueError("need a > 1 and lam > 0")

    def _rate(self):
        return _as_mpf(self.lam) * mpmath.log(_as_mpf(self.a))

    def value(self, k: int):
        return mpmath.expm1(self._rate() * k)

    def diff(self, k: int):
        rate = self._rate()
        return mpmath.exp(rate * (k - 1)) * mpmath.expm1(rate)

    def dsl(self) -> str:
        return f"bexp:{_fmt(self.a)},{_fmt(self.lam)}"


@dataclass(frozen=True)
class NegExp(FunctionSpec):
    """``1 - e^(-lam x)``."""

    lam: Param

    def __post_init__(self):
        if self.lam <= 0:
            raise ValueError("rate must be positive")

    def value(self, k: int):
        return -mpmath.expm1(-_as_mpf(self.lam) * k)

    def diff(self, k: int):
        lam = _as_mpf(self.lam)
        return mpmath.exp(-lam * k) * mpmath.expm1(lam)

    def dsl(self) -> str:
        return f"negexp:{_fmt(self.lam)}"


@dataclass(frozen=True)
class Ratio(FunctionSpec):
    """``x / (x + 1)``."""

    exact = True

    def value(self, k: int):
        return Fraction(k, k + 1)

    def dsl(self) -> str:
        return "ratio"


@dataclass(frozen=True)
class Linear(FunctionSpec):
    exact = True

    def value(self, k: int):
        return k

    def dsl(self) -> str:
        return "lin"


@dataclass(frozen=True)
class Conical(FunctionSpec):
    """Non-negative combination of specs with at least one positive weight."""

    terms: tuple[tuple[Param, FunctionSpec], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("empty combination")
        if any(c < 0 for c, _ in self.terms) or not any(c > 0 for c, _ in self.terms):
            raise ValueError("weights must be non-negative with one positive")

    @property
    def exact(self) -> bool:
        return all(is_exact(c) and s.exact for c, s in self.terms)

    def _combine(self, parts):
        total = 0
        for (c, _), v in zip(self.terms, parts):
            if not (is_exact(c) and is_exact(v)):
                c, v = to_mpf(c), to_mpf(v)
            total = total + c * v
        return total

    def value(self, k: int):
        return self._combine([s.value(k) for _, s in self.terms])

    def diff(self, k: int):
        return self._combine([s.diff(k) for _, s in self.terms])

    def dsl(self) -> str:
        return "lc:" + "+".join(f"{_fmt(c)}*{s.dsl()}" for c, s in self.terms)


@dataclass(frozen=True)
class Hat(FunctionSpec):
    """Reflection of ``inner`` at level ``nu``, continued by a steep exponential.

    ``value(k) = inner(nu) - inner(nu - k)`` for ``k <= nu`` and
    ``exp(M * inner(nu) * k) - 1`` beyond.
    """

    inner: FunctionSpec
    nu: int
    M: int = field(default=1)

    def __post_init__(self):
        if self.nu < 3 or self.M < 1:
            raise ValueError("need nu >= 3 and M >= 1")

    def _rate(self):
        return self.M * to_mpf(self.inner.value(self.nu))

    def value(self, k: int):
        if k <= self.nu:
            top, rest = self.inner.value(self.nu), self.inner.value(self.nu - k)
            if not (is_exact(top) and is_exact(rest)):
                top, rest = to_mpf(top), to_mpf(rest)
            return top - rest
        return mpmath.expm1(self._rate() * k)

    def diff(self, k: int):
        if k <= self.nu:
            return self.inner.diff(self.nu - k + 1)
        if k == self.nu + 1:
            return self.value(k) - to_mpf(self.value(k - 1))
        rate = self._rate()
        return mpmath.exp(rate * (k - 1)) * mpmath.expm1(rate)

    def dsl(self) -> str:
        return f"hat:{self.inner.dsl()}@{self.nu}"


def evaluate(spec: FunctionSpec, x: int):
    if x < 0:
        raise ValueError("functions are evaluated on the naturals")
    return spec.value(x)


def forward_difference(spec: FunctionSpec, k: int):
    if k < 1:
        raise ValueError("k must be at least 1")
    return spec.diff(k)


# ---------------------------------------------------------------------------
# class membership


@dataclass(frozen=True)
class Witness:
    condition: str
    k: int
    lhs: object
    rhs: object


@dataclass(frozen=True)
class ConditionResult:
    """Scan of one inequality over a range of ``k``.

    ``ties`` keeps the first few points where both sides agree (exactly or
    within tolerance); ``tie_count`` counts all of them. ``inconclusive`` is
    set when a strict inequality landed in a float near-tie.
    """

    condition: str
    ok: bool
    checked_up_to: int
    first_failure: Witness | None = None
    ties: tuple[Witness, ...] = ()
    tie_count: int = 0
    inconclusive: bool = False


_TIES_KEPT = 10


def _scan(condition, points, strict, K, tau):
    ties, tie_count, inconclusive = [], 0, False
    for k, lhs, rhs in points:
        cmp = compare(lhs, rhs, tau)
        if cmp.sign == 0:
            w = Witness(condition, k, lhs, rhs)
            if strict and not cmp.near_tie:
                return ConditionResult(condition, False, K, w, tuple(ties), tie_count)
            tie_count += 1
            if len(ties) < _TIES_KEPT:
                ties.append(w)
            inconclusive |= strict
        elif cmp.sign < 0:
            w = Witness(condition, k, lhs, rhs)
            return ConditionResult(condition, False, K, w, tuple(ties), tie_count, inconclusive)
    return ConditionResult(condition, True, K, None, tuple(ties), tie_count, inconclusive)


def check_integer_convexity(spec: FunctionSpec, K: int, tau: float = TAU,
                            negate: bool = False) -> ConditionResult:
    """``f(k+2) - f(k+1) > f(k+1) - f(k)`` for ``0 <= k <= K-2``.

    With ``negate`` the check runs on ``-f``.
    """
    if K < 2:
        raise ValueError("K must be at least 2")
    sgn = -1 if negate else 1
    diffs = [None] + [spec.diff(j) for j in range(1, K + 1)]
    points = ((j - 1, sgn * diffs[j + 1], sgn * diffs[j]) for j in range(1, K))
    return _scan("concavity" if negate else "convexity", points, True, K, tau)


def check_star_inequality(spec: FunctionSpec, K: int, tau: float = TAU) -> ConditionResult:
    """``(k-2) f(k) >= k (f(k-1) - f(1))`` for ``3 <= k <= K``."""
    if K < 3:
        raise ValueError("K must be at least 3")
    f1 = spec.value(1)

    def points():
        prev = spec.value(2)
        for k in range(3, K + 1):
            cur = spec.value(k)
            yield k, (k - 2) * cur, k * _sub(prev, f1)
            prev = cur

    return _scan("star", points(), False, K, tau)


def check_increment_inequality(spec: FunctionSpec, K: int, tau: float = TAU) -> ConditionResult:
    """``g(k) >= 2k (g(k+1) - g(k))`` for ``1 <= k <= K`` (``k = 0`` is ``0 >= 0``)."""
    if K < 1:
        raise ValueError("K must be at least 1")
    points = ((k, spec.value(k), 2 * k * spec.diff(k + 1)) for k in range(1, K + 1))
    return _scan("increment", points, False, K, tau)


def check_strictly_increasing(spec: FunctionSpec, K: int, tau: float = TAU) -> ConditionResult:
    points = ((k, spec.diff(k), 0) for k in range(1, K + 1))
    return _scan("increasing", points, True, K, tau)


def check_centered(spec: FunctionSpec) -> ConditionResult:
    v = spec.value(0)
    ok = v == 0
    return ConditionResult("centered", ok, 0, None if ok else Witness("centered", 0, v, 0))


def _sub(a, b):
    if is_exact(a) and is_exact(b):
        return a - b
    return to_mpf(a) - to_mpf(b)


@dataclass(frozen=True)
class ClassReport:
    """Finite-range membership verdict ("verified up to K", not a proof).

    Flags for conditions that do not belong to the class being checked are
    ``None``.
    """

    family: str
    spec: str
    checked_up_to: int
    centered_ok: bool
    convexity_ok: bool | None = None
    star_inequality_ok: bool | None = None
    concavity_ok: bool | None = None
    increasing_ok: bool | None = None
    increment_inequality_ok: bool | None = None
    first_failure: Witness | None = None
    ties: tuple[Witness, ...] = ()
    inconclusive: bool = False

    @property
    def member(self) -> bool:
        flags = (self.centered_ok, self.convexity_ok, self.star_inequality_ok,
                 self.concavity_ok, self.increasing_ok, self.increment_inequality_ok)
        return all(f for f in flags if f is not None)


def _assemble(family, spec, K, results) -> ClassReport:
    by_name = {r.condition: r for r in results}
    failure = next((r.first_failure for r in results if not r.ok), None)
    ties = tuple(w for r in results for w in r.ties)

    def flag(name):
        return by_name[name].ok if name in by_name else None

    return ClassReport(
        family=family, spec=spec.dsl(), checked_up_to=K,
        centered_ok=by_name["centered"].ok,
        convexity_ok=flag("convexity"), star_inequality_ok=flag("star"),
        concavity_ok=flag("concavity"), increasing_ok=flag("increasing"),
        increment_inequality_ok=flag("increment"),
        first_failure=failure, ties=ties,
        inconclusive=any(r.inconclusive for r in results),
    )


def check_class_f(spec: FunctionSpec, K: int = 10_000, tau: float = TAU) -> ClassReport:
    """Centered, integer-strictly-convex, and the quasi-star inequality, for k <= K."""
    if K < 3:
        raise ValueError("K must be at least 3")
    results = [check_centered(spec), check_integer_convexity(spec, K, tau),
               check_star_inequality(spec, K, tau)]
    return _assemble("F", spec, K, results)


def check_class_g(spec: FunctionSpec, K: int = 10_000, tau: float = TAU) -> ClassReport:
    """Centered, strictly increasing, integer-strictly-concave, increment bound, for k <= K."""
    if K < 3:
        raise ValueError("K must be at least 3")
    results = [check_centered(spec), check_strictly_increasing(spec, K, tau),
               check_integer_convexity(spec, K, tau, negate=True),
               check_increment_inequality(spec, K, tau)]
    return _assemble("G", spec, K, results)


def check_three_slopes(spec: FunctionSpec, x1: int, x2: int, x3: int) -> bool:
    """Both chord-slope inequalities for ``x1 < x2 < x3``."""
    if not 0 <= x1 < x2 < x3:
        raise ValueError("need 0 <= x1 < x2 < x3")
    f1, f2, f3 = (spec.value(x) for x in (x1, x2, x3))
    if not all(is_exact(v) for v in (f1, f2, f3)):
        f1, f2, f3 = map(to_mpf, (f1, f2, f3))
        s12, s13, s23 = (f2 - f1) / (x2 - x1), (f3 - f1) / (x3 - x1), (f3 - f2) / (x3 - x2)
    else:
        s12 = Fraction(f2 - f1, x2 - x1)
        s13 = Fraction(f3 - f1, x3 - x1)
        s23 = Fraction(f3 - f2, x3 - x2)
    return compare(s13, s12).sign > 0 and compare(s23, s13).sign > 0


class HatConstructionError(RuntimeError):
    pass


def make_hat(g: FunctionSpec, nu: int, M_max: int = 10**6, tau: float = TAU) -> Hat:
    """Smallest ``M`` for which the splice at ``nu`` keeps both class-F inequalities."""
    if nu < 3:
        raise ValueError("nu must be at least 3")
    for M in range(1, M_max + 1):
        h = Hat(g, nu, M)
        f1 = h.value(1)
        convex = all(compare(h.diff(k + 2), h.diff(k + 1), tau).sign > 0
                     for k in range(nu - 2, nu + 2))
        star = all(compare((k - 2) * to_mpf(h.value(k)), k * (to_mpf(h.value(k - 1)) - to_mpf(f1)),
                           tau).sign >= 0
                   for k in range(max(3, nu - 1), nu + 3))
        if convex and star:
            return h
    raise HatConstructionError(f"no M <= {M_max} splices {g.dsl()} at nu={nu}")


# ---------------------------------------------------------------------------
# mini-DSL


class SpecSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos = text, pos
        super().__init__(f"expected {expected} at position {pos} in {text!r}")


_NUMBER = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")
_LN = re.compile(r"ln\(")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected):
        raise SpecSyntaxError(self.text, self.pos, expected)

    def take(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str):
        if not self.take(literal):
            self.error(repr(literal))

    def number(self) -> Param:
        if _LN.match(self.text, self.pos):
            self.pos += 3
            inner = self.number()
            self.expect(")")
            return mpmath.log(_as_mpf(inner))
        mt = _NUMBER.match(self.text, self.pos)
        if not mt:
            self.error("a number")
        self.pos = mt.end()
        q = Fraction(mt.group())
        return q.numerator if q.denominator == 1 else q

    def integer(self) -> int:
        start = self.pos
        p = self.number()
        if not isinstance(p, int):
            self.pos = start
            self.error("an integer")
        return p

    def spec(self) -> FunctionSpec:
        start = self.pos
        try:
            if self.take("pow:"):
                return Power(self.number())
            if self.take("negexp:"):
                return NegExp(self.number())
            if self.take("exp:"):
                return ExpMinusOne(self.number())
            if self.take("bexp:"):
                a = self.number()
                self.expect(",")
                return BaseExpMinusOne(a, self.number())
            if self.take("ratio"):
                return Ratio()
            if self.take("lin"):
                return Linear()
            if self.take("lc:"):
                terms = [self.term()]
                while self.take("+"):
                    terms.append(self.term())
                return Conical(tuple(terms))
            if self.take("hat:"):
                inner = self.spec()
                self.expect("@")
                return make_hat(inner, self.integer())
        except (ValueError, HatConstructionError) as exc:
            if isinstance(exc, SpecSyntaxError):
                raise
            self.pos = start
            self.error(f"valid parameters ({exc})")
        self.error("one of pow:, exp:, negexp:, bexp:, ratio, lin, lc:, hat:")

    def term(self):
        c = self.number()
        self.expect("*")
        return c, self.spec()


def parse_spec(text: str) -> FunctionSpec:
    """Parse the function mini-DSL.

    Grammar::

        spec   := "pow:" num | "exp:" num | "negexp:" num | "bexp:" num "," num
                | "ratio" | "lin" | "lc:" term ("+" term)* | "hat:" spec "@" int
        term   := num "*" spec
        num    := decimal | "ln(" num ")"
    """
    p = _Parser(text.strip())
    spec = p.spec()
    if p.pos != len(p.text):
        p.error("end of input")
    return spec
