"""Fibonacci/Lucas pairs at large indices and exact powers of the golden ratio.

The fast-doubling kernel comes from the compiled ``_kernel`` extension when
it is importable and from ``_kernel_py`` otherwise.  Setting
``APERYFIB_PURE=1`` forces the pure-Python kernel.
"""

from __future__ import annotations

import contextlib
import os
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import _kernel_py
from .exactnum import SQRT5, QuadRat, qr_add, qr_inv, qr_mul, qr_sub

if os.environ.get("APERYFIB_PURE"):
    _kernel = _kernel_py
    KERNEL = "python"
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]

        KERNEL = "cython"
    except ImportError:
        _kernel = _kernel_py
        KERNEL = "python"

DEFAULT_INDEX_BOUND = 10**6
ENV_INDEX_BOUND = "APERYFIB_INDEX_BOUND"


class IndexBoundError(ValueError):
    """Raised when a requested Fibonacci/Lucas index exceeds the configured bound."""


def _bound_from_env() -> int:
    raw = os.environ.get(ENV_INDEX_BOUND)
    if not raw:
        return DEFAULT_INDEX_BOUND
    value = int(raw)
    if value < 1:
        raise ValueError(f"{ENV_INDEX_BOUND} must be positive, got {raw!r}")
    return value


_index_bound = _bound_from_env()


def get_index_bound() -> int:
    return _index_bound


def set_index_bound(bound: int) -> None:
    global _index_bound
    if bound < 1:
        raise ValueError("index bound must be positive")
    _index_bound = int(bound)


@contextlib.contextmanager
def index_bound(bound: int):
    """Temporarily replace the global index bound."""
    old = get_index_bound()
    set_index_bound(bound)
    try:
        yield
    finally:
        set_index_bound(old)


def check_index(n: int) -> int:
    if abs(n) > _index_bound:
        raise IndexBoundError(f"index {n} exceeds bound {_index_bound}")
    return n


class LucasPair(NamedTuple):
    n: int
    fib: int
    lucas: int


# lru_cache is internally locked, so concurrent readers only see whole entries
@lru_cache(maxsize=4096)
def _cached_pair(n: int) -> LucasPair:
    f, l = _kernel.fib_lucas_pair(n)
    return LucasPair(n, f, l)


def fib_lucas(n: int) -> LucasPair:
    """Exact ``(n, F_n, L_n)`` for ``n >= 0`` by fast doubling."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    check_index(n)
    return _cached_pair(n)


def clear_cache() -> None:
    _cached_pair.cache_clear()


def fib(n: int) -> int:
    return fib_lucas(n).fib


def lucas(n: int) -> int:
    return fib_lucas(n).lucas


def fib_signed(n: int) -> int:
    """F_n for any integer n, using F_{-n} = (-1)^(n+1) F_n."""
    if n >= 0:
        return fib(n)
    f = fib(-n)
    return f if (-n) % 2 else -f


def lucas_signed(n: int) -> int:
    """L_n for any integer n, using L_{-n} = (-1)^n L_n."""
    if n >= 0:
        return lucas(n)
    l = lucas(-n)
    return -l if (-n) % 2 else l


def alpha_pow(n: int) -> QuadRat:
    """Exact golden-ratio power ``alpha**n = (L_n + F_n sqrt 5) / 2``."""
    return QuadRat(lucas_signed(n), fib_signed(n), 2)


def beta_pow(n: int) -> QuadRat:
    """Exact ``beta**n = (L_n - F_n sqrt 5) / 2``."""
    return QuadRat(lucas_signed(n), -fib_signed(n), 2)


class BinetMismatch(ArithmeticError):
    pass


def binet_roundtrip(n: int) -> tuple[Fraction, Fraction]:
    """Evaluate ``(alpha^n - beta^n)/sqrt5`` and ``alpha^n + beta^n`` in Q(sqrt 5).

    The powers are built by repeated squaring of alpha and beta, so this path
    shares nothing with the doubling kernel beyond integer arithmetic.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    check_index(n)
    an = QuadRat(1, 1, 2) ** n
    bn = QuadRat(1, -1, 2) ** n
    f = qr_mul(qr_sub(an, bn), qr_inv(SQRT5))
    l = qr_add(an, bn)
    if not (f.is_rational() and l.is_rational()):
        raise BinetMismatch(f"irrational Binet value at n={n}: F={f}, L={l}")
    return f.to_fraction(), l.to_fraction()


__all__ = [
    "KERNEL",
    "DEFAULT_INDEX_BOUND",
    "ENV_INDEX_BOUND",
    "IndexBoundError",
    "LucasPair",
    "fib_lucas",
    "fib",
    "lucas",
    "fib_signed",
    "lucas_signed",
    "alpha_pow",
    "beta_pow",
    "binet_roundtrip",
    "BinetMismatch",
    "check_index",
    "get_index_bound",
    "set_index_bound",
    "index_bound",
    "clear_cache",
]
