"""Factoring a polyphase matrix into lifting steps.

The factorizer runs a Euclidean reduction on the first column: each
division kills the extreme tap of one entry with a monomial multiple of
the other.  Strategy choices (which support end to attack, which channel
wins ties) produce genuinely different factorizations of the same bank.

Run:  python3 demos/05_factorization.py
"""

from liftbank import (
    FactorizationError,
    FactorStrategy,
    HIGH_END,
    HIGHPASS_FIRST,
    LOW_END,
    LOWPASS_FIRST,
    LaurentPoly,
    PolyphaseMatrix,
    factor_lifting,
)
from liftbank.banks import five_three, haar_base

matrix = haar_base()
print("Factoring the Haar polyphase matrix [[1/2, 1/2], [-1, 1]]:\n")

for first in (LOWPASS_FIRST, HIGHPASS_FIRST):
    cascade = factor_lifting(matrix, FactorStrategy(first_channel=first))
    print(f"tie-break {first}: {cascade.n_steps} steps, K = {cascade.k}")
    for s in cascade.steps:
        print(f"    update={s.update}  filter {s.filter}")
    print(f"    evaluates back to the input: {cascade.evaluate() == matrix}\n")

# A pure channel swap also factors: three "swap lifting" steps.
swap = PolyphaseMatrix(
    LaurentPoly({}), LaurentPoly({0: 1}), LaurentPoly({0: -1}), LaurentPoly({})
)
cascade = factor_lifting(swap)
print(f"antidiagonal swap matrix: {cascade.n_steps} steps, "
      f"round trip {cascade.evaluate() == swap}\n")

# Not every unimodular matrix factors in this shape.  When the reduction
# bottoms out in diag(c z^-d, c^-1 z^d) with d != 0 the bank needs a delay
# normalization first, and the factorizer says so rather than guessing.
try:
    factor_lifting(five_three().evaluate())
except FactorizationError as exc:
    print(f"5/3 analysis matrix as-is: {exc}")
