"""GCDs of stepped binomial families {C(n, qk) : 0 < qk < n}.

``gcd_exact`` is the big-integer oracle. ``gcd_valuation_fast`` gets the
valuation of the same GCD as a minimum of carry counts, never touching a
big integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod

from .primes_digits import as_prime, primes_up_to
from .valuation import ord_p_binomial_kummer

EXACT_DEFAULT_LIMIT = 512


@dataclass(frozen=True, order=True)
class SteppedFamily:
    n: int
    q: int

    def __post_init__(self):
        if not self.n > self.q > 0:
            raise ValueError(f"need n > q > 0, got n={self.n}, q={self.q}")

    @property
    def indices(self) -> range:
        return range(self.q, self.n, self.q)


def _family(family: SteppedFamily | tuple[int, int]) -> SteppedFamily:
    if isinstance(family, SteppedFamily):
        return family
    return SteppedFamily(*family)


def format_factors(factors: dict[int, int]) -> str:
    if not factors:
        return "1"
    return "·".join(str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(factors.items()))


@dataclass(frozen=True)
class FactoredGCD:
    family: SteppedFamily
    factors: dict[int, int] = field(default_factory=dict)
    exact_value: int | None = None

    def __post_init__(self):
        for p, e in self.factors.items():
            if p > self.family.n or e < 1:
                raise ValueError(f"bad factor {p}^{e} for n={self.family.n}")
        if self.exact_value is not None and self.exact_value != self.value:
            raise ArithmeticError(
                f"factored product {self.value} != exact gcd {self.exact_value} "
                f"for n={self.family.n}, q={self.family.q}"
            )

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors.items())

    def __str__(self) -> str:
        return f"{self.value} = {format_factors(self.factors)}"


def binomial_exact(n: int, k: int) -> int:
    """C(n, k) by the multiplicative recurrence with exact division."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    c = 1
    for j in range(1, k + 1):
        c = c * (n - j + 1) // j
    return c


def family_indices(family: SteppedFamily | tuple[int, int]) -> list[int]:
    return list(_family(family).indices)


def gcd_exact(family: SteppedFamily | tuple[int, int]) -> int:
    """Exact GCD of C(n, j) over the family, walking row n once."""
    family = _family(family)
    n, q = family.n, family.q
    g = 0
    c = 1
    for j in range(1, n):
        c = c * (n - j + 1) // j
        if j % q == 0:
            g = gcd(g, c)
            if g == 1:
                break
    return g


def gcd_valuation_fast(family: SteppedFamily | tuple[int, int], p: int) -> int:
    """ord_p of the family GCD as the minimum carry count over the family."""
    family = _family(family)
    p = as_prime(p)
    best = None
    for j in family.indices:
        v = ord_p_binomial_kummer(family.n, j, p)
        if best is None or v < best:
            best = v
            if v == 0:
                break
    return best


def gcd_factored(family: SteppedFamily | tuple[int, int],
                 with_exact: bool | None = None) -> FactoredGCD:
    """Factor the family GCD over all primes <= n.

    ``with_exact`` defaults to True for n <= 512; when set, the product is
    checked against ``gcd_exact``.
    """
    family = _family(family)
    if with_exact is None:
        with_exact = family.n <= EXACT_DEFAULT_LIMIT
    factors = {}
    for p in primes_up_to(family.n):
        e = gcd_valuation_fast(family, p)
        if e:
            factors[int(p)] = e
    exact = gcd_exact(family) if with_exact else None
    return FactoredGCD(family, factors, exact)
