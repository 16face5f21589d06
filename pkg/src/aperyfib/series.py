"""Telescoping Fibonacci/Lucas series: terms, B-sequences, partial sums, certification.

Every series is described by a :class:`SeriesSpec`.  Partial sums are
available by two independent routes: ``direct`` adds the literal summands,
``telescoped`` collapses to ``(B_start - B_end) / scale`` where ``B`` is a
product of Lucas brackets.  Exact agreement of the two routes for every N
is what makes a closed form believable; :func:`certify` then bounds the
omitted tail and checks the exact gap against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .exactnum import ONE, QuadRat, as_quadrat, qr_sign, qr_to_decimal
from .identities import (
    IdentityCheck,
    even_base_bracket,
    lucas_even_bracket,
    odd_base_bracket,
    odd_base_even_mult_bracket,
    odd_power_bracket,
)
from .lucas import IndexBoundError, alpha_pow, fib, lucas

MODES = ("direct", "telescoped")


class SpecError(ValueError):
    """A series parameter violates its variant's constraints."""


# variant -> (parameters, start index, summary)
VARIANTS: dict[str, tuple[tuple[str, ...], int, str]] = {
    "T1": ((), 0, "sum_{n>=0} 1/F_(2^n) = (7 - sqrt5)/2"),
    "T2": (("m", "a"), 0, "sum_{n>=0} (L^a_(2^(n+1) m) - 1)/F^a_(2^(n+2) m) = 1/(F_m L_m)^a;  m >= 1, a >= 1"),
    "T3": (("m",), 0, "sum_{n>=0} ((-1)^m - 1 + sum_k (-1)^k L_(2(m-k)(2m+1)^n))/F_((2m+1)^(n+1)) = 1;  m >= 1"),
    "T4": (("m",), 0, "sum_{n>=0} (sum_k L_(2(m-k)(2m+1)^n))/L_((2m+1)^(n+1)) = 1;  m >= 1"),
    "T5": (("m",), 0, "sum_{n>=0} F_(2^(n+2)) ((-1)^m - 1 + sum_k (-1)^k L_((m-k) 2^(n+2)))/F_((2m+1) 2^(n+2)) = 1/(F_(2m+1) L_(2m+1));  m >= 1"),
    "T6": (("p", "m"), 1, "sum_{n>=1} (sum_{k=1}^{p/2} L_((2k-1) m p^n) - 1)/F_(m p^(n+1)) = 1/F_(mp);  p even >= 2, m >= 1"),
    "T7": (("p", "m"), 1, "sum_{n>=1} (sum_{k=1}^{(p-1)/2} L_(2k m p^n))/F_(m p^(n+1)) = 1/F_(mp);  p odd >= 3, m even >= 2"),
    "T8": (("p",), 1, "sum_{n>=1} (-1)^(n(p-1)/2) (sum_{k=1}^{(p-1)/2} (-1)^k L_(2k p^n))/F_(p^(n+1)) = 1/F_p;  p odd >= 3"),
    "T9": (("p",), 2, "sum_{n>=2} ([sum_{k=1}^{p/2} L_((2k-1) p^n/2)]^2 - 1)/(L_(p^(n+1)) - 2) = 1/(L_(p^2) - 2);  p even >= 2"),
    "R2": ((), 0, "sum_{n>=0} L_(2^(n+1))/F_(2^(n+2)) = (5 - sqrt5)/2"),
}


@dataclass(frozen=True)
class SeriesSpec:
    variant: str
    m: int | None = None
    a: int | None = None
    p: int | None = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise SpecError(f"unknown series {self.variant!r}")
        wanted = VARIANTS[self.variant][0]
        for name in ("m", "a", "p"):
            value = getattr(self, name)
            if name in wanted and value is None:
                raise SpecError(f"{self.variant} requires parameter {name}")
            if name not in wanted and value is not None:
                raise SpecError(f"{self.variant} takes no parameter {name}")
        v, m, a, p = self.variant, self.m, self.a, self.p
        if m is not None and m < 1:
            raise SpecError("m must be >= 1")
        if a is not None and a < 1:
            raise SpecError("a must be >= 1")
        if v in ("T6", "T9"):
            if p % 2 or p < 2:
                raise SpecError("p must be even")
        if v in ("T7", "T8"):
            if p % 2 == 0 or p < 3:
                raise SpecError("p must be odd and >= 3")
        if v == "T7" and m % 2:
            raise SpecError("m must be even")

    @property
    def n0(self) -> int:
        return VARIANTS[self.variant][1]

    def params(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in VARIANTS[self.variant][0]}

    def __str__(self) -> str:
        ps = self.params()
        if not ps:
            return self.variant
        return self.variant + "{" + ",".join(f"{k}={v}" for k, v in ps.items()) + "}"


def spec_validate(variant: str, **params) -> SeriesSpec:
    """Build a :class:`SeriesSpec` from loose input; ``None`` values are ignored.

    T2's exponent ``a`` defaults to 1.
    """
    key = str(variant).upper()
    given = {k: int(v) for k, v in params.items() if v is not None}
    unknown = set(given) - {"m", "a", "p"}
    if unknown:
        raise SpecError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
    if key == "T2":
        given.setdefault("a", 1)
    return SeriesSpec(key, **given)


def _neg1(e: int) -> int:
    return -1 if e % 2 else 1


def _check_n(spec: SeriesSpec, n: int) -> None:
    if n < spec.n0:
        raise ValueError(f"{spec} starts at n={spec.n0}, got n={n}")


# ---------------------------------------------------------------- summands


def direct_term(spec: SeriesSpec, n: int) -> Fraction:
    """The n-th summand, evaluated literally from Fibonacci/Lucas values."""
    _check_n(spec, n)
    v, m, a, p = spec.variant, spec.m, spec.a, spec.p
    if v == "T1":
        return Fraction(1, fib(2**n))
    if v == "R2":
        return Fraction(lucas(2 ** (n + 1)), fib(2 ** (n + 2)))
    if v == "T2":
        return Fraction(lucas(2 ** (n + 1) * m) ** a - 1, fib(2 ** (n + 2) * m) ** a)
    if v == "T3":
        q = (2 * m + 1) ** n
        num = _neg1(m) - 1 + sum(_neg1(k) * lucas(2 * (m - k) * q) for k in range(m))
        return Fraction(num, fib(q * (2 * m + 1)))
    if v == "T4":
        q = (2 * m + 1) ** n
        return Fraction(sum(lucas(2 * (m - k) * q) for k in range(m)), lucas(q * (2 * m + 1)))
    if v == "T5":
        t = 2 ** (n + 2)
        bracket = _neg1(m) - 1 + sum(_neg1(k) * lucas((m - k) * t) for k in range(m))
        return Fraction(fib(t) * bracket, fib((2 * m + 1) * t))
    if v == "T6":
        num = sum(lucas((2 * k - 1) * m * p**n) for k in range(1, p // 2 + 1)) - 1
        return Fraction(num, fib(m * p ** (n + 1)))
    if v == "T7":
        num = sum(lucas(2 * k * m * p**n) for k in range(1, (p - 1) // 2 + 1))
        return Fraction(num, fib(m * p ** (n + 1)))
    if v == "T8":
        s = sum(_neg1(k) * lucas(2 * k * p**n) for k in range(1, (p - 1) // 2 + 1))
        return Fraction(_neg1(n * (p - 1) // 2) * s, fib(p ** (n + 1)))
    if v == "T9":
        s = sum(lucas((2 * k - 1) * p**n // 2) for k in range(1, p // 2 + 1))
        return Fraction(s * s - 1, lucas(p ** (n + 1)) - 2)
    raise AssertionError(v)


# ---------------------------------------------------------------- B-sequences


def b_value(spec: SeriesSpec, n: int):
    """B_n of the telescoping construction, built from products of Lucas brackets.

    Rational for every variant except T1, whose B_n is
    ``1 / prod_{j=2}^{n} (1 + alpha^(2^j))`` and is returned as a QuadRat
    (n >= 1; the product is empty at n = 1).  R2 has no B-sequence of its
    own; its telescoped sum is assembled from T2{m=1,a=1} and T1.
    """
    v, m, a, p = spec.variant, spec.m, spec.a, spec.p
    if v == "R2":
        raise ValueError("R2 is a rearrangement of T2 and T1; it has no B-sequence")
    if v == "T1":
        if n < 1:
            raise ValueError("T1's B-sequence starts at n=1")
        den = ONE
        for j in range(2, n + 1):
            den = den * (ONE + alpha_pow(2**j))
        return ONE / den
    _check_n(spec, n)
    if v == "T2":
        return Fraction(1, (fib(m) * prod(lucas(m << j) for j in range(n + 1))) ** a)
    if v == "T3":
        return Fraction(1, prod(odd_power_bracket("fib", m, j) for j in range(n)))
    if v == "T4":
        return Fraction(1, prod(odd_power_bracket("lucas", m, j) for j in range(n)))
    if v == "T5":
        return Fraction(1, prod(_t5_bracket(m, s) for s in range(n + 1)))
    if v == "T6":
        return Fraction(1, prod(even_base_bracket(p, m, j) for j in range(1, n)))
    if v == "T7":
        return Fraction(1, prod(odd_base_even_mult_bracket(p, m, j) for j in range(1, n)))
    if v == "T8":
        return Fraction(1, prod(odd_base_bracket(p, j) for j in range(1, n)))
    if v == "T9":
        return Fraction(1, prod(lucas_even_bracket(p, j) for j in range(1, n - 1)))
    raise AssertionError(v)


def _t5_bracket(m: int, s: int) -> int:
    # equals F_(2m+1) at s = 0 and L_((2m+1) 2^s) / L_(2^s) for s >= 1
    return _neg1(m) + sum(_neg1(k) * lucas((m - k) << (s + 1)) for k in range(m))


def telescope_scale(spec: SeriesSpec) -> int:
    """Constant c with B_n - B_(n+1) = c * term_n."""
    v, m, p = spec.variant, spec.m, spec.p
    if v in ("T2", "T3", "T4"):
        return 1
    if v == "T5":
        return lucas(2 * m + 1)
    if v in ("T6", "T7"):
        return fib(m * p)
    if v == "T8":
        return fib(p)
    if v == "T9":
        return lucas(p * p) - 2
    raise ValueError(f"{v} has no single telescoping scale")


_ALPHA_SQ = QuadRat(3, 1, 2)
_T1_HEAD = (Fraction(1), Fraction(1), Fraction(1, 3))  # 1/F_1, 1/F_2, 1/F_4


def _reciprocal_pow2_tail(first: int, last: int) -> Fraction:
    """sum_{k=first}^{last} 1/F_(2^k) for 3 <= first, via T1's B-sequence."""
    if last < first:
        return Fraction(0)
    spec = SeriesSpec("T1")
    diff = (b_value(spec, first - 1) - b_value(spec, last)) / _ALPHA_SQ
    return diff.to_fraction()


def _telescoped(spec: SeriesSpec, N: int) -> Fraction:
    v = spec.variant
    if v == "T1":
        head = sum(_T1_HEAD[: min(N, 3)], Fraction(0))
        return head + _reciprocal_pow2_tail(3, N - 1)
    if v == "R2":
        t2 = _telescoped(SeriesSpec("T2", m=1, a=1), N)
        # sum_{n<N} 1/F_(2^(n+2)) = 1/3 + sum_{k=3}^{N+1} 1/F_(2^k)
        head = Fraction(1, 3) if N >= 1 else Fraction(0)
        return t2 + head + _reciprocal_pow2_tail(3, N + 1)
    n0 = spec.n0
    return (b_value(spec, n0) - b_value(spec, n0 + N)) / telescope_scale(spec)


def partial_sum(spec: SeriesSpec, N: int, mode: str = "direct") -> Fraction:
    """Sum of the first N summands (indices n0 .. n0+N-1)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if mode == "direct":
        n0 = spec.n0
        return sum((direct_term(spec, n) for n in range(n0, n0 + N)), Fraction(0))
    if mode == "telescoped":
        return _telescoped(spec, N)
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def closed_form(spec: SeriesSpec) -> QuadRat:
    """Exact value of the infinite series."""
    v, m, a, p = spec.variant, spec.m, spec.a, spec.p
    if v == "T1":
        return QuadRat(7, -1, 2)
    if v == "R2":
        return QuadRat(5, -1, 2)
    if v == "T2":
        return QuadRat(1, 0, (fib(m) * lucas(m)) ** a)
    if v in ("T3", "T4"):
        return ONE
    if v == "T5":
        return QuadRat(1, 0, fib(2 * m + 1) * lucas(2 * m + 1))
    if v in ("T6", "T7"):
        return QuadRat(1, 0, fib(m * p))
    if v == "T8":
        return QuadRat(1, 0, fib(p))
    if v == "T9":
        return QuadRat(1, 0, lucas(p * p) - 2)
    raise AssertionError(v)


def gap(spec: SeriesSpec, N: int) -> QuadRat:
    """closed_form(spec) - partial_sum(spec, N, 'direct'), exactly."""
    return closed_form(spec) - partial_sum(spec, N, "direct")


# ---------------------------------------------------------------- certification


@dataclass
class ConvergenceReport:
    spec: SeriesSpec
    digits: int
    terms_used: int
    partial: Fraction
    target: QuadRat
    gap: QuadRat
    gap_bound: Fraction
    certified: bool
    decimal_digits_agreeing: int
    bound_kind: str = "geometric"
    diagnostics: list[str] = field(default_factory=list)


class _TermCache:
    def __init__(self, spec: SeriesSpec):
        self.spec = spec
        self.terms: dict[int, Fraction] = {}

    def __call__(self, n: int) -> Fraction:
        t = self.terms.get(n)
        if t is None:
            t = self.terms[n] = direct_term(self.spec, n)
        return t


def _tail_bound(term, n0: int, N: int, alternating_ok: bool):
    """Bound on |sum of omitted terms| after N terms, or (None, reason)."""
    first = n0 + N
    idx = list(range(max(n0, first - 2), first + 1))
    if len(idx) < 2:
        idx.append(first + 1)
    ts = [term(i) for i in idx]
    if any(t == 0 for t in ts):
        return None, "zero term in ratio window", ""
    mags = [abs(t) for t in ts]
    if alternating_ok:
        signs_alternate = all((x > 0) != (y > 0) for x, y in zip(ts, ts[1:]))
        decreasing = all(y < x for x, y in zip(mags, mags[1:]))
        if signs_alternate and decreasing:
            return abs(term(first)), "", "alternating"
    if all(2 * y <= x for x, y in zip(mags, mags[1:])):
        return 2 * abs(term(first)), "", "geometric"
    return None, f"ratio test failed on indices {idx[0]}..{idx[-1]}", ""


def _agreeing_digits(x, y, digits: int) -> int:
    sx, sy = qr_to_decimal(x, digits), qr_to_decimal(y, digits)
    if sx.split(".")[0] != sy.split(".")[0]:
        return 0
    count = 0
    for cx, cy in zip(sx.split(".")[1], sy.split(".")[1]):
        if cx != cy:
            break
        count += 1
    return count


def certify(spec: SeriesSpec, digits: int, max_terms: int = 64) -> ConvergenceReport:
    """Find the fewest terms whose tail bound is below 10^-digits and check the gap.

    The bound is ``2 |first omitted term|`` after confirming each term at most
    halves the previous one across the last three indices; for T8 an
    alternating-sign window with decreasing magnitudes allows the sharper
    ``|first omitted term|``.  Certification then requires the exact gap
    ``closed_form - partial`` to lie within the bound (sign tests only) and
    the direct and telescoped partial sums to coincide.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    eps = Fraction(1, 10**digits)
    n0 = spec.n0
    term = _TermCache(spec)
    alternating_ok = spec.variant == "T8"
    diagnostics: list[str] = []

    def good(N: int):
        bound, why, kind = _tail_bound(term, n0, N, alternating_ok)
        if bound is None:
            return None, why, kind
        if bound >= eps:
            return None, f"bound at N={N} not below 1e-{digits}", kind
        return bound, "", kind

    # doubling search for an admissible N, then bisection for the least one
    hi, found, last_why = 1, None, ""
    try:
        while hi <= max_terms:
            bound, last_why, kind = good(hi)
            if bound is not None:
                found = (hi, bound, kind)
                break
            hi *= 2
    except IndexBoundError as exc:
        last_why = str(exc)

    target = closed_form(spec)
    if found is None:
        diagnostics.append(f"no admissible N: {last_why}")
        return ConvergenceReport(
            spec, digits, 0, Fraction(0), target, target, Fraction(0), False, 0, "", diagnostics
        )

    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        bound, _, kind = good(mid)
        if bound is not None:
            hi, found = mid, (mid, bound, kind)
        else:
            lo = mid
    N, bound, kind = found

    partial = sum((term(n) for n in range(n0, n0 + N)), Fraction(0))
    g = target - partial
    within = qr_sign(as_quadrat(bound) - abs(g)) >= 0
    if not within:
        diagnostics.append("exact gap exceeds the tail bound")
    try:
        routes_agree = partial == _telescoped(spec, N)
    except IndexBoundError as exc:
        routes_agree = False
        diagnostics.append(f"telescoped route unavailable: {exc}")
    if not routes_agree and not diagnostics:
        diagnostics.append("direct and telescoped partial sums differ")
    certified = within and routes_agree
    return ConvergenceReport(
        spec,
        digits,
        N,
        partial,
        target,
        g,
        bound,
        certified,
        _agreeing_digits(partial, target, digits),
        kind,
        diagnostics,
    )


# ---------------------------------------------------------------- generic construction


def generic_apery_check(x, a, n: int) -> IdentityCheck:
    """Finite telescoping identity for ``B_k = a_1...a_(k-1) / (x (x+a_1)...(x+a_(k-1)))``.

    lhs is ``1/(x+a_1) + sum_{k=2}^{n} a_1...a_(k-1) / ((x+a_1)...(x+a_k))``,
    rhs is ``1/x - a_1...a_n / (x (x+a_1)...(x+a_n))``.
    """
    x = Fraction(x)
    a = [Fraction(t) for t in a]
    if x == 0:
        raise ZeroDivisionError("x must be nonzero")
    if not 1 <= n <= len(a):
        raise ValueError(f"need 1 <= n <= {len(a)}, got {n}")
    for i, t in enumerate(a[:n], start=1):
        if x + t == 0:
            raise ZeroDivisionError(f"x + a_{i} = 0")
    lhs = Fraction(0)
    num, den = Fraction(1), Fraction(1)
    for k in range(1, n + 1):
        den *= x + a[k - 1]
        lhs += num / den
        num *= a[k - 1]
    rhs = 1 / x - num / (x * den)
    return IdentityCheck(lhs, rhs)


__all__ = [
    "MODES",
    "VARIANTS",
    "SpecError",
    "SeriesSpec",
    "spec_validate",
    "direct_term",
    "b_value",
    "telescope_scale",
    "partial_sum",
    "closed_form",
    "gap",
    "ConvergenceReport",
    "certify",
    "generic_apery_check",
]
