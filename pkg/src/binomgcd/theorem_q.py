"""Closed-form predictors for ord_p of stepped binomial GCDs.

For n > q > 0 and a prime p = 1 (mod q), ord_p of GCD_{0<k<n/q} C(n, qk)
is 1 when the base-p digit sum of n is at most q and 0 otherwise. The
full-row (q = 1) and even-entry (q = 2) cases are thin wrappers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .binomial_gcd import SteppedFamily, _family
from .primes_digits import PrimeBase, alpha, as_prime, minimal_representation
from .valuation import ord_p_binomial_kummer


@dataclass(frozen=True)
class Prediction:
    n: int
    q: int
    p: int
    applicable: bool
    predicted_ord: int | None = None

    def __post_init__(self):
        if self.applicable and self.predicted_ord not in (0, 1):
            raise ValueError(f"predicted_ord must be 0 or 1, got {self.predicted_ord}")


@dataclass(frozen=True)
class Witness:
    family: SteppedFamily
    p: int
    index: int
    asserted_ord: int

    def is_valid(self) -> bool:
        """Re-check the index range, divisibility and valuation by carry counting."""
        n, q = self.family.n, self.family.q
        return (0 < self.index < n and self.index % q == 0
                and ord_p_binomial_kummer(n, self.index, self.p) == self.asserted_ord)


def strict_applies(q: int, p: int) -> bool:
    return (p - 1) % q == 0


def predict_theorem_q(family: SteppedFamily | tuple[int, int], p: int) -> Prediction:
    family = _family(family)
    p = as_prime(p)
    n, q = family.n, family.q
    if not strict_applies(q, p):
        return Prediction(n, q, int(p), applicable=False)
    return Prediction(n, q, int(p), True, 1 if alpha(n, p) <= q else 0)


def predict_theorem_1(n: int, p: int) -> int:
    """ord_p of GCD_{0<k<n} C(n, k): 1 iff n is a power of p."""
    if n <= 1:
        raise ValueError(f"need n > 1, got {n}")
    return predict_theorem_q((n, 1), p).predicted_ord


def predict_theorem_2(n: int, p: int) -> int:
    if n <= 1:
        raise ValueError(f"need n > 1, got {n}")
    if as_prime(p) == 2:
        raise ValueError("p must be an odd prime")
    return predict_theorem_q((2 * n, 2), p).predicted_ord


def _residue_target(top: int, q: int) -> int:
    # the unique 0 < s <= q with s = top (mod q)
    return (top - 1) % q + 1


def predict_corollaries(n: int, q: int, p: int) -> tuple[Prediction, Prediction]:
    """Predictions for the families (qn, q) and (qn + 1, q).

    Uses the equality form alpha_p(top) == s, with s the residue of top
    in (0, q], and cross-checks it against the alpha <= q form.
    """
    p = as_prime(p)
    if n <= 1 or q < 1:
        raise ValueError(f"need n > 1 and q >= 1, got n={n}, q={q}")
    if not strict_applies(q, p):
        raise ValueError(f"need p = 1 (mod q), got p={int(p)}, q={q}")
    out = []
    for top in (q * n, q * n + 1):
        a = alpha(top, p)
        by_equality = 1 if a == _residue_target(top, q) else 0
        general = predict_theorem_q((top, q), p)
        if general.predicted_ord != by_equality:
            raise ArithmeticError(
                f"alpha <= q and alpha == s disagree at top={top}, q={q}, p={int(p)}")
        out.append(general)
    return out[0], out[1]


def check_weakened_hypothesis(n: int, q: int, p: int) -> tuple[bool, int | None]:
    """gcd(p, q) == 1 and every power in the minimal representation of n
    has the same residue c mod q. Returns (holds, c)."""
    SteppedFamily(n, q)
    p = as_prime(p)
    if gcd(p, q) != 1:
        return False, None
    residues = {pow(p, i, q) for i in set(minimal_representation(n, p).exponents)}
    if len(residues) != 1:
        return False, None
    return True, residues.pop()


def predict_weakened(n: int, q: int, p: int) -> Prediction:
    """Experimental: the alpha <= q criterion under the coprime/common-residue
    hypothesis. Callers should treat disagreements as data."""
    holds, _ = check_weakened_hypothesis(n, q, p)
    if not holds:
        raise ValueError(f"weakened hypothesis fails for n={n}, q={q}, p={int(p)}")
    return Prediction(n, q, int(p), True, 1 if alpha(n, p) <= q else 0)


def _strict_branch(family: SteppedFamily, p: PrimeBase) -> tuple[tuple[int, ...], bool]:
    if not strict_applies(family.q, p):
        raise ValueError(f"need p = 1 (mod q), got p={int(p)}, q={family.q}")
    exps = minimal_representation(family.n, p).exponents
    return exps, len(exps) > family.q


def witness_zero_valuation(family: SteppedFamily | tuple[int, int], p: int) -> Witness:
    """Index p**i_1 + ... + p**i_q, the first q terms; requires alpha_p(n) > q."""
    family = _family(family)
    p = as_prime(p)
    exps, many_terms = _strict_branch(family, p)
    if not many_terms:
        raise ValueError(f"alpha_{int(p)}({family.n}) <= q={family.q}: no valuation-0 witness")
    index = sum(p**i for i in exps[: family.q])
    return Witness(family, int(p), index, 0)


def witness_unit_valuation(family: SteppedFamily | tuple[int, int], p: int) -> Witness:
    """Index (p - 1) * p**(i_r - 1) with i_r the top exponent; requires alpha_p(n) <= q."""
    family = _family(family)
    p = as_prime(p)
    exps, many_terms = _strict_branch(family, p)
    if many_terms:
        raise ValueError(f"alpha_{int(p)}({family.n}) > q={family.q}: no valuation-1 witness")
    # n > q forces the top exponent to be positive
    top = exps[-1]
    return Witness(family, int(p), (p - 1) * p ** (top - 1), 1)
