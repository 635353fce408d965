"""p-adic valuations of binomial coefficients and GCDs of stepped Pascal-row families."""

from .binomial_gcd import (FactoredGCD, SteppedFamily, binomial_exact, family_indices,
                           gcd_exact, gcd_factored, gcd_valuation_fast)
from .harness import PredictionRecord, VerificationReport, verify_grid
from .primes_digits import (DigitExpansion, ExponentSeq, PrimeBase, alpha, is_prime,
                            minimal_representation, primes_up_to, to_digits)
from .theorem_q import (Prediction, Witness, check_weakened_hypothesis, predict_corollaries,
                        predict_theorem_1, predict_theorem_2, predict_theorem_q,
                        predict_weakened, witness_unit_valuation, witness_zero_valuation)
from .valuation import (count_carries, is_exponent_subsequence, ord_p_binomial_kummer,
                        ord_p_binomial_legendre, ord_p_factorial, ord_p_integer,
                        ord_zero_by_subsequence)

__version__ = "0.1.0"
