"""p-adic valuations of integers and binomial coefficients.

Three independent routes to ord_p C(n, k):

* ``ord_p_binomial_kummer``: carries when adding k and n - k in base p,
* ``ord_p_binomial_legendre``: factorial valuations via floor sums,
* ``ord_p_integer`` applied to an exact binomial.
"""

from __future__ import annotations

from collections import Counter

from .primes_digits import ExponentSeq, as_prime, minimal_representation


def _check_range(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def ord_p_integer(m: int, p: int) -> int:
    """Largest e such that p**e divides m (m >= 1)."""
    if m < 1:
        raise ValueError(f"valuation is only defined here for m >= 1, got {m}")
    p = as_prime(p)
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def count_carries(a: int, b: int, p: int) -> int:
    """Number of carries in the base-p schoolbook addition a + b."""
    if a < 0 or b < 0:
        raise ValueError("addends must be nonnegative")
    p = as_prime(p)
    carries = carry = 0
    while a or b or carry:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        carry = 1 if da + db + carry >= p else 0
        carries += carry
    return carries


def ord_p_binomial_kummer(n: int, k: int, p: int) -> int:
    _check_range(n, k)
    return count_carries(k, n - k, p)


def ord_p_factorial(n: int, p: int) -> int:
    """Legendre: sum of floor(n / p**i) for i >= 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    p = as_prime(p)
    e = 0
    while n:
        n //= p
        e += n
    return e


def ord_p_binomial_legendre(n: int, k: int, p: int) -> int:
    _check_range(n, k)
    return ord_p_factorial(n, p) - ord_p_factorial(k, p) - ord_p_factorial(n - k, p)


def is_exponent_subsequence(sub: ExponentSeq, full: ExponentSeq) -> bool:
    """True iff ``sub`` is obtained from ``full`` by deleting terms.

    Both sequences are sorted, so this is multiset containment.
    """
    if int(sub.base) != int(full.base):
        raise ValueError(f"bases differ: {int(sub.base)} vs {int(full.base)}")
    have = Counter(full.exponents)
    need = Counter(sub.exponents)
    return all(have[e] >= c for e, c in need.items())


def ord_zero_by_subsequence(n: int, k: int, p: int) -> bool:
    """Decide ord_p C(n, k) == 0 by comparing minimal power representations."""
    _check_range(n, k)
    return is_exponent_subsequence(minimal_representation(k, p), minimal_representation(n, p))
