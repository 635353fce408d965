"""Prime testing/enumeration and base-p digit machinery."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    if n >= _MR_LIMIT:
        raise ValueError(f"primality of {n} is outside the deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeBase(int):
    """A prime used as a radix. Construction fails for non-primes."""

    def __new__(cls, p: int) -> "PrimeBase":
        if isinstance(p, PrimeBase):
            return p
        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError(f"prime must be an int, got {type(p).__name__}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return super().__new__(cls, p)

    def __repr__(self) -> str:
        return f"PrimeBase({int(self)})"


def as_prime(p: int) -> PrimeBase:
    return p if type(p) is PrimeBase else PrimeBase(p)


def primes_up_to(limit: int) -> list[PrimeBase]:
    """All primes <= limit in ascending order (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [_unchecked(i) for i, f in enumerate(flags) if f]


def _unchecked(p: int) -> PrimeBase:
    # sieve output is prime by construction
    return int.__new__(PrimeBase, p)


@dataclass(frozen=True)
class DigitExpansion:
    """Little-endian base-p digits: ``digits[i]`` is the coefficient of p**i."""

    base: PrimeBase
    digits: tuple[int, ...]

    def __post_init__(self):
        p = self.base
        if any(not 0 <= d < p for d in self.digits):
            raise ValueError(f"digit out of range for base {int(p)}: {self.digits}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("leading (highest-index) digit must be nonzero")

    @property
    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v

    def digit(self, i: int) -> int:
        """Digit at position i; zero beyond the expansion."""
        return self.digits[i] if i < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class ExponentSeq:
    """Minimal representation n = p**i_1 + ... + p**i_r with i_1 <= ... <= i_r."""

    base: PrimeBase
    exponents: tuple[int, ...]

    def __post_init__(self):
        e = self.exponents
        if any(x < 0 for x in e):
            raise ValueError("exponents must be nonnegative")
        if any(a > b for a, b in zip(e, e[1:])):
            raise ValueError("exponents must be nondecreasing")
        run = 1
        for a, b in zip(e, e[1:]):
            run = run + 1 if a == b else 1
            if run >= self.base:
                raise ValueError(f"exponent {a} repeats {self.base} or more times")

    @property
    def value(self) -> int:
        return sum(self.base**i for i in self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)


def to_digits(n: int, p: int) -> DigitExpansion:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    p = as_prime(p)
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitExpansion(p, tuple(digits))


def alpha(n: int, p: int) -> int:
    """Sum of the base-p digits of n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    p = as_prime(p)
    s = 0
    while n:
        n, d = divmod(n, p)
        s += d
    return s


def minimal_representation(n: int, p: int) -> ExponentSeq:
    """Each digit d at position i contributes d copies of exponent i.

    n = 0 gives the empty sequence.
    """
    expansion = to_digits(n, p)
    exps: list[int] = []
    for i, d in enumerate(expansion.digits):
        exps.extend([i] * d)
    return ExponentSeq(expansion.base, tuple(exps))
