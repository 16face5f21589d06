"""Exact evaluators for the Fibonacci/Lucas product and sum identities.

Each ``*_eval`` function computes both sides of one identity from
:func:`aperyfib.lucas.fib_lucas` values and returns an :class:`IdentityCheck`.
Nothing here divides, so every comparison is between integers or elements
of Q(sqrt 5).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .exactnum import ONE, SQRT5
from .lucas import alpha_pow, check_index, fib, lucas

KINDS = ("fib", "lucas")


@dataclass(frozen=True)
class IdentityCheck:
    lhs: object
    rhs: object

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _neg1(e: int) -> int:
    return -1 if e % 2 else 1


def _kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be 'fib' or 'lucas', got {kind!r}")
    return kind


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def lemma1_eval(n: int) -> IdentityCheck:
    """``1 + alpha^(2n)`` against ``sqrt5 F_n alpha^n`` (n odd) or ``L_n alpha^n`` (n even)."""
    _require(n >= 1, "n must be >= 1")
    lhs = ONE + alpha_pow(2 * n)
    if n % 2:
        rhs = SQRT5 * fib(n) * alpha_pow(n)
    else:
        rhs = lucas(n) * alpha_pow(n)
    return IdentityCheck(lhs, rhs)


def lemma2_eval(m: int, n: int) -> IdentityCheck:
    """``F_(2^n m) = F_m L_m L_2m ... L_(2^(n-1) m)``."""
    _require(m >= 1 and n >= 1, "m and n must be >= 1")
    top = check_index(m << n)
    rhs = fib(m) * prod(lucas(m << j) for j in range(n))
    return IdentityCheck(fib(top), rhs)


def lemma3_bracket(kind: str, q: int, m: int) -> int:
    """The bracket multiplying F_q (or L_q) in the odd-multiple expansion."""
    e = q if kind == "fib" else q + 1
    return _neg1(m * e) + sum(_neg1(k * e) * lucas(2 * (m - k) * q) for k in range(m))


def lemma3_eval(kind: str, q: int, m: int) -> IdentityCheck:
    """``F_((2m+1)q)`` / ``L_((2m+1)q)`` as F_q / L_q times an alternating Lucas sum."""
    _kind(kind)
    _require(q >= 1 and m >= 1, "q and m must be >= 1")
    top = check_index((2 * m + 1) * q)
    if kind == "fib":
        return IdentityCheck(fib(top), fib(q) * lemma3_bracket(kind, q, m))
    return IdentityCheck(lucas(top), lucas(q) * lemma3_bracket(kind, q, m))


def odd_power_bracket(kind: str, m: int, j: int) -> int:
    """j-th factor of the product expansion of F_((2m+1)^n) or L_((2m+1)^n)."""
    step = (2 * m + 1) ** j
    if kind == "fib":
        return _neg1(m) + sum(_neg1(k) * lucas(2 * (m - k) * step) for k in range(m))
    return 1 + sum(lucas(2 * (m - k) * step) for k in range(m))


def lemma4_eval(kind: str, m: int, n: int) -> IdentityCheck:
    _kind(kind)
    _require(m >= 1 and n >= 1, "m and n must be >= 1")
    top = check_index((2 * m + 1) ** n)
    rhs = prod(odd_power_bracket(kind, m, j) for j in range(n))
    lhs = fib(top) if kind == "fib" else lucas(top)
    return IdentityCheck(lhs, rhs)


def even_base_bracket(p: int, m: int, j: int) -> int:
    """``sum_{k=1}^{p/2} L_((2k-1) m p^j)``."""
    return sum(lucas((2 * k - 1) * m * p**j) for k in range(1, p // 2 + 1))


def lemma5_eval(p: int, m: int, n: int) -> IdentityCheck:
    """``F_(m p^n) = F_(mp) prod_{j=1}^{n-1} even_base_bracket`` for even p."""
    _require(p >= 2 and p % 2 == 0, "p must be even")
    _require(m >= 1 and n >= 1, "m and n must be >= 1")
    top = check_index(m * p**n)
    rhs = fib(m * p) * prod(even_base_bracket(p, m, j) for j in range(1, n))
    return IdentityCheck(fib(top), rhs)


def odd_base_even_mult_bracket(p: int, m: int, j: int, literal: bool = False) -> int:
    """``1 + sum_{k=1}^{(p-1)/2} L_(2k m p^j)``.

    ``literal=True`` drops the k from the index (``L_(2 m p^j)`` repeated),
    the misprinted form that only coincides with the true one when p = 3.
    """
    half = (p - 1) // 2
    if literal:
        return 1 + half * lucas(2 * m * p**j)
    return 1 + sum(lucas(2 * k * m * p**j) for k in range(1, half + 1))


def lemma6_eval(p: int, m: int, n: int, literal: bool = False) -> IdentityCheck:
    _require(p >= 3 and p % 2 == 1, "p must be odd and >= 3")
    _require(m >= 2 and m % 2 == 0, "m must be even and >= 2")
    _require(n >= 1, "n must be >= 1")
    top = check_index(m * p**n)
    rhs = fib(m * p) * prod(odd_base_even_mult_bracket(p, m, j, literal) for j in range(1, n))
    return IdentityCheck(fib(top), rhs)


def odd_base_bracket(p: int, j: int) -> int:
    """``1 + sum_{k=1}^{(p-1)/2} (-1)^k L_(2k p^j)``."""
    return 1 + sum(_neg1(k) * lucas(2 * k * p**j) for k in range(1, (p - 1) // 2 + 1))


def lemma7_eval(p: int, n: int) -> IdentityCheck:
    _require(p >= 3 and p % 2 == 1, "p must be odd and >= 3")
    _require(n >= 1, "n must be >= 1")
    top = check_index(p**n)
    sign = _neg1((n - 1) * (p - 1) // 2)
    rhs = sign * fib(p) * prod(odd_base_bracket(p, j) for j in range(1, n))
    return IdentityCheck(fib(top), rhs)


def lucas_even_bracket(p: int, j: int) -> int:
    """``[sum_{k=1}^{p/2} L_((2k-1) p^(j+1) / 2)]^2``."""
    s = sum(lucas((2 * k - 1) * p ** (j + 1) // 2) for k in range(1, p // 2 + 1))
    return s * s


def lemma8_eval(p: int, n: int) -> IdentityCheck:
    _require(p >= 2 and p % 2 == 0, "p must be even")
    _require(n >= 2, "n must be >= 2")
    top = check_index(p**n)
    rhs = 2 + (lucas(p * p) - 2) * prod(lucas_even_bracket(p, j) for j in range(1, n - 1))
    return IdentityCheck(lucas(top), rhs)


def ratio_eval(kind: str, l: int, m: int) -> IdentityCheck:
    """Cross-multiplied ratio identity for F_(2l+1)/F_(2m+1) (or the Lucas analogue).

    Both sides expand F_((2l+1)(2m+1)) (resp. L_...) through a different
    odd factor, so ``F_(2l+1) * bracket(q=2l+1, m) == F_(2m+1) * bracket(q=2m+1, l)``.
    """
    _kind(kind)
    _require(l >= 1 and m >= 1, "l and m must be >= 1")
    check_index(max(2 * m * (2 * l + 1), 2 * l * (2 * m + 1)))
    ql, qm = 2 * l + 1, 2 * m + 1
    if kind == "fib":
        # odd q makes (-1)^(kq) = (-1)^k
        lhs = fib(ql) * (_neg1(m) + sum(_neg1(k) * lucas(2 * (m - k) * ql) for k in range(m)))
        rhs = fib(qm) * (_neg1(l) + sum(_neg1(k) * lucas(2 * (l - k) * qm) for k in range(l)))
    else:
        lhs = lucas(ql) * (1 + sum(lucas(2 * (m - k) * ql) for k in range(m)))
        rhs = lucas(qm) * (1 + sum(lucas(2 * (l - k) * qm) for k in range(l)))
    return IdentityCheck(lhs, rhs)


__all__ = [
    "IdentityCheck",
    "KINDS",
    "lemma1_eval",
    "lemma2_eval",
    "lemma3_eval",
    "lemma3_bracket",
    "lemma4_eval",
    "lemma5_eval",
    "lemma6_eval",
    "lemma7_eval",
    "lemma8_eval",
    "ratio_eval",
    "odd_power_bracket",
    "even_base_bracket",
    "odd_base_even_mult_bracket",
    "odd_base_bracket",
    "lucas_even_bracket",
]
