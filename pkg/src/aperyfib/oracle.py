"""Brute-force checks: exhaustive identity grids, decimal cross-checks, rearrangements.

Nothing in this module touches :func:`aperyfib.series.b_value`; it works
from Fibonacci/Lucas values and literal summands only, so agreement with the
telescoped route is independent evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Iterator

from . import identities as ids
from .exactnum import qr_to_decimal
from .identities import IdentityCheck
from .lucas import fib, lucas
from .series import SeriesSpec, certify, closed_form, partial_sum

DEFAULT_GRID_BOUND = 10**5


@dataclass
class FuzzReport:
    identity: str
    grid: str
    cases: int = 0
    failures: list[tuple[dict, object, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        ok = self.cases - len(self.failures)
        status = "ok" if self.passed else "FAIL"
        return f"{self.identity}: {ok}/{self.cases} {status}"


# ---------------------------------------------------------------- grids
#
# Each grid yields keyword dicts in a fixed order.  ``bound`` caps the largest
# Fibonacci/Lucas index the identity touches.


def _powers_upto(base: int, start: int, cap: int) -> Iterator[int]:
    n = start
    while base**n <= cap:
        yield n
        n += 1


def grid_lemma1(n: int = 500, **_):
    for k in range(1, n + 1):
        yield {"n": k}


def grid_lemma2(m: int = 20, bound: int = DEFAULT_GRID_BOUND, **_):
    for mm in range(1, m + 1):
        n = 1
        while (mm << n) <= bound:
            yield {"m": mm, "n": n}
            n += 1


def grid_lemma3(q: int = 50, m: int = 25, **_):
    for qq in range(1, q + 1):
        for mm in range(1, m + 1):
            yield {"q": qq, "m": mm}


def grid_lemma4(m: int = 6, bound: int = DEFAULT_GRID_BOUND, **_):
    for mm in range(1, m + 1):
        for n in _powers_upto(2 * mm + 1, 1, bound):
            yield {"m": mm, "n": n}


def grid_lemma5(p: int = 8, m: int = 6, bound: int = DEFAULT_GRID_BOUND, **_):
    for pp in range(2, p + 1, 2):
        for mm in range(1, m + 1):
            for n in _powers_upto(pp, 1, bound // mm):
                yield {"p": pp, "m": mm, "n": n}


def grid_lemma6(p: int = 9, m: int = 8, bound: int = DEFAULT_GRID_BOUND, **_):
    for pp in range(3, p + 1, 2):
        for mm in range(2, m + 1, 2):
            for n in _powers_upto(pp, 1, bound // mm):
                yield {"p": pp, "m": mm, "n": n}


def grid_lemma7(p: int = 9, bound: int = DEFAULT_GRID_BOUND, **_):
    for pp in range(3, p + 1, 2):
        for n in _powers_upto(pp, 1, bound):
            yield {"p": pp, "n": n}


def grid_lemma8(p: int = 8, bound: int = DEFAULT_GRID_BOUND, **_):
    for pp in range(2, p + 1, 2):
        for n in _powers_upto(pp, 2, bound):
            yield {"p": pp, "n": n}


def grid_ratio(l: int = 12, m: int = 12, **_):
    for ll in range(1, l + 1):
        for mm in range(1, m + 1):
            yield {"l": ll, "m": mm}


def _with_kind(fn, kind):
    return lambda **kw: fn(kind, **kw)


# identity id -> (evaluator, grid, default grid parameters)
IDENTITIES: dict[str, tuple[Callable[..., IdentityCheck], Callable, dict]] = {
    "lemma1": (ids.lemma1_eval, grid_lemma1, {"n": 500}),
    "lemma2": (ids.lemma2_eval, grid_lemma2, {"m": 20}),
    "lemma3[fib]": (_with_kind(ids.lemma3_eval, "fib"), grid_lemma3, {"q": 50, "m": 25}),
    "lemma3[lucas]": (_with_kind(ids.lemma3_eval, "lucas"), grid_lemma3, {"q": 50, "m": 25}),
    "lemma4[fib]": (_with_kind(ids.lemma4_eval, "fib"), grid_lemma4, {"m": 6}),
    "lemma4[lucas]": (_with_kind(ids.lemma4_eval, "lucas"), grid_lemma4, {"m": 6}),
    "lemma5": (ids.lemma5_eval, grid_lemma5, {"p": 8, "m": 6}),
    "lemma6": (ids.lemma6_eval, grid_lemma6, {"p": 9, "m": 8}),
    "lemma7": (ids.lemma7_eval, grid_lemma7, {"p": 9}),
    "lemma8": (ids.lemma8_eval, grid_lemma8, {"p": 8}),
    "ratio[fib]": (_with_kind(ids.ratio_eval, "fib"), grid_ratio, {"l": 12, "m": 12}),
    "ratio[lucas]": (_with_kind(ids.ratio_eval, "lucas"), grid_ratio, {"l": 12, "m": 12}),
}

# the misprinted k-free variant; expected to fail, kept as a negative control
NEGATIVE_CONTROLS = {
    "lemma6-literal": (
        lambda **kw: ids.lemma6_eval(literal=True, **kw),
        grid_lemma6,
        {"p": 9, "m": 8},
    ),
}

LEMMA_GROUPS = {
    "1": ["lemma1"],
    "2": ["lemma2"],
    "3": ["lemma3[fib]", "lemma3[lucas]"],
    "4": ["lemma4[fib]", "lemma4[lucas]"],
    "5": ["lemma5"],
    "6": ["lemma6"],
    "7": ["lemma7"],
    "8": ["lemma8"],
    "ratio": ["ratio[fib]", "ratio[lucas]"],
    "6-literal": ["lemma6-literal"],
}


def _lookup(identity: str):
    if identity in IDENTITIES:
        return IDENTITIES[identity]
    if identity in NEGATIVE_CONTROLS:
        return NEGATIVE_CONTROLS[identity]
    raise KeyError(f"unknown identity {identity!r}")


def fuzz_identity(identity: str, bound: int = DEFAULT_GRID_BOUND, **grid) -> FuzzReport:
    """Evaluate one identity over its whole grid and collect mismatches."""
    evaluate, make_grid, defaults = _lookup(identity)
    params = {**defaults, **grid, "bound": bound}
    desc = ",".join(f"{k}<={v}" for k, v in sorted(params.items()))
    report = FuzzReport(identity, desc)
    for point in make_grid(**params):
        check = evaluate(**point)
        report.cases += 1
        if not check.holds:
            report.failures.append((point, check.lhs, check.rhs))
    return report


def fuzz_lemmas(lemmas=None, bound: int = DEFAULT_GRID_BOUND, grids=None) -> list[FuzzReport]:
    """Run the default grids (or ``grids[identity]`` overrides) for each selected lemma.

    ``lemmas`` holds keys of :data:`LEMMA_GROUPS` (``"1"`` .. ``"8"``,
    ``"ratio"``, ``"6-literal"``); ``None`` means every proper identity.
    Reports come back in a fixed order.
    """
    grids = grids or {}
    if lemmas is None:
        names = list(IDENTITIES)
    else:
        names = [name for key in lemmas for name in LEMMA_GROUPS[str(key)]]
    return [fuzz_identity(name, bound=bound, **grids.get(name, {})) for name in names]


# ---------------------------------------------------------------- decimals


def decimal_crosscheck(spec: SeriesSpec, digits: int) -> bool:
    """Certified partial sum and closed form agree to within one unit in the last place."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    report = certify(spec, digits)
    left = Decimal(qr_to_decimal(report.partial, digits))
    right = Decimal(qr_to_decimal(closed_form(spec), digits))
    return abs(left - right) <= Decimal(1).scaleb(-digits)


# ---------------------------------------------------------------- rearrangements
#
# Splitting a summand (bracket - 2)/F into bracket/F - 2/F turns the
# telescoping series of odd-power Fibonacci indices into a representation of
# sum 1/F_(p^n).  Partial sums of the two sides differ by an exact, known
# amount; the checks below assert that relation termwise and then in total.

REARRANGEMENTS = ("lucas-square", "reciprocal-3", "reciprocal-4m3", "reciprocal-7", "reciprocal-even")


def _odd_reciprocal(m: int, N: int) -> IdentityCheck:
    # p = 4m + 3 = 2M + 1 with M = 2m + 1 odd, so the T3{M} bracket minus one is S_n - 2
    M = 2 * m + 1
    p = 2 * M + 1
    spec = SeriesSpec("T3", m=M)
    termwise = True
    split = Fraction(0)
    for n in range(N):
        s = sum((-1) ** k * lucas(2 * (M - k) * p**n) for k in range(M))
        den = fib(p ** (n + 1))
        termwise &= Fraction(s - 2, den) == Fraction(s, den) - Fraction(2, den)
        split += Fraction(s, den)
    rhs = split / 2 + Fraction(1, 2)
    lhs = sum((Fraction(1, fib(p**n)) for n in range(N + 1)), Fraction(0))
    # finite-N correction: half the T3{M} gap, from the direct partial sum
    lhs -= (1 - partial_sum(spec, N, "direct")) / 2
    return IdentityCheck(lhs, rhs if termwise else None)


def rearrangement_check(identity: str, N: int, m: int | None = None, p: int | None = None) -> IdentityCheck:
    """Exact partial-sum form of a rearranged reciprocal series.

    ``lucas-square``     sum L^2_(3^n)/F_(3^(n+1)) against sum (L_(2*3^n) - 2)/F_(3^(n+1))
    ``reciprocal-3``     sum 1/F_(3^n) against 1/2 sum L_(2*3^n)/F_(3^(n+1)) + 1/2
    ``reciprocal-4m3``   the same for F_((4m+3)^n), m >= 0
    ``reciprocal-7``     ``reciprocal-4m3`` at m = 1
    ``reciprocal-even``  sum 1/F_(m p^(n+1)) against sum S_n/F_(m p^(n+1)) - 1/F_(mp), p even

    Each returns the two sides with the exact truncation correction applied,
    so ``holds`` is an exact equality for every N.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if identity == "lucas-square":
        lhs = rhs = Fraction(0)
        termwise = True
        for n in range(N):
            k = 3**n
            sq, dbl = lucas(k) ** 2, lucas(2 * k) - 2
            termwise &= sq == dbl
            den = fib(3 * k)
            lhs += Fraction(sq, den)
            rhs += Fraction(dbl, den)
        return IdentityCheck(lhs, rhs if termwise else None)
    if identity == "reciprocal-3":
        return _odd_reciprocal(0, N)
    if identity == "reciprocal-7":
        return _odd_reciprocal(1, N)
    if identity == "reciprocal-4m3":
        if m is None or m < 0:
            raise ValueError("reciprocal-4m3 needs m >= 0")
        return _odd_reciprocal(m, N)
    if identity == "reciprocal-even":
        if p is None or m is None or p % 2 or p < 2 or m < 1:
            raise ValueError("reciprocal-even needs even p >= 2 and m >= 1")
        spec = SeriesSpec("T6", p=p, m=m)
        lhs = rhs = Fraction(0)
        for n in range(1, N + 1):
            den = fib(m * p ** (n + 1))
            s = sum(lucas((2 * k - 1) * m * p**n) for k in range(1, p // 2 + 1))
            lhs += Fraction(1, den)
            rhs += Fraction(s, den)
        rhs -= Fraction(1, fib(m * p))
        # finite-N correction: the T6 gap 1/F_(mp) - partial
        rhs += Fraction(1, fib(m * p)) - partial_sum(spec, N, "direct")
        return IdentityCheck(lhs, rhs)
    raise ValueError(f"unknown rearrangement {identity!r}; choose from {REARRANGEMENTS}")


def rearranged_decimal(identity: str, digits: int, m: int | None = None) -> tuple[str, str]:
    """Render both sides of an odd-base reciprocal rearrangement as infinite sums.

    Both sides are summed until the next term is below ``10^-(digits+5)``;
    the terms decay doubly exponentially, so the two strings should match.
    """
    mm = {"reciprocal-3": 0, "reciprocal-7": 1}.get(identity, m)
    if mm is None:
        raise ValueError("m required")
    M = 2 * mm + 1
    p = 2 * M + 1
    eps = Fraction(1, 10 ** (digits + 5))
    left = right = Fraction(0)
    n = 0
    while True:
        t = Fraction(1, fib(p**n))
        s = sum((-1) ** k * lucas(2 * (M - k) * p**n) for k in range(M))
        u = Fraction(s, fib(p ** (n + 1)))
        left += t
        right += u
        if n >= 1 and t < eps and u < eps:
            break
        n += 1
    return qr_to_decimal(left, digits), qr_to_decimal(right / 2 + Fraction(1, 2), digits)


__all__ = [
    "DEFAULT_GRID_BOUND",
    "FuzzReport",
    "IDENTITIES",
    "NEGATIVE_CONTROLS",
    "LEMMA_GROUPS",
    "fuzz_identity",
    "fuzz_lemmas",
    "decimal_crosscheck",
    "REARRANGEMENTS",
    "rearrangement_check",
    "rearranged_decimal",
]
