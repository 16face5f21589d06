"""Pure-Python Fibonacci/Lucas kernels (fallback for the compiled ``_kernel``)."""


def fib_lucas_pair(n):
    """Return ``(F_n, L_n)`` by binary fast doubling, most significant bit first."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    f, l = 0, 2
    odd = False
    for bit in bin(n)[2:]:
        # k -> 2k:  F_2k = F_k L_k,  L_2k = L_k^2 - 2(-1)^k
        f, l = f * l, (l * l + 2 if odd else l * l - 2)
        if bit == "1":
            # k -> k+1; F_k and L_k have equal parity, so both sums are even
            f, l = (f + l) >> 1, (5 * f + l) >> 1
            odd = True
        else:
            odd = False
    return f, l


def fib_lucas_naive(n):
    """Return ``(F_n, L_n)`` by the plain additive recurrence; O(n) additions."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    f0, f1 = 0, 1
    for _ in range(n):
        f0, f1 = f1, f0 + f1
    # L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
    return f0, 2 * f1 - f0
