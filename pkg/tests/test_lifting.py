"""Cascade evaluation, DC recursion and synthesis.

The two identity cascades (8 constant steps / 6 FIR steps) were multiplied
out by hand before this module existed; reproducing the identity exactly is
the strongest single check on step ordering and the matrix conventions.
"""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftbank import (
    EXACT,
    FLOAT,
    DEFAULT_ROUNDING,
    ROUND_FLOOR,
    LaurentPoly,
    LiftingCascade,
    LiftingStep,
    PolyphaseMatrix,
    cascade_synthesis,
    scalar_dc_recursion,
    step_matrix,
)
from liftbank.banks import (
    cdf97,
    dc_counterexample,
    five_three,
    haar,
    haar_base,
    identity_eight_step,
    identity_six_step,
    wa_lifted_haar,
)

from conftest import lp, random_alternating_cascade, step


def test_step_matrices():
    s = lp({0: F(1, 2), 1: F(1, 2)})
    u = step_matrix(LiftingStep(0, s))
    assert u.h00 == lp({0: 1}) and u.h01 == s and u.h10.is_zero
    l = step_matrix(LiftingStep(1, s))
    assert l.h10 == s and l.h01.is_zero


def test_step_validation():
    with pytest.raises(ValueError):
        LiftingStep(2, lp({0: 1}))
    with pytest.raises(ValueError):
        LiftingStep(0, lp({}))


def test_haar_evaluation_oracle():
    m = haar().evaluate()
    assert m == haar_base()


def test_haar_partial_products():
    c = haar()
    p0 = c.partial_product(-1)
    assert p0.is_identity()
    p1 = c.partial_product(0)           # just the highpass update
    assert p1.h10 == lp({0: -1}) and p1.h00 == lp({0: 1})
    assert c.partial_product(1) == haar_base()  # K = 1, so E = H
    with pytest.raises(IndexError):
        c.partial_product(2)


def test_identity_cascades_reproduce_identity():
    assert identity_eight_step().evaluate().is_identity()
    assert identity_six_step().evaluate().is_identity()


def test_step_order_is_first_applied_first():
    # reversing the Haar steps gives a different matrix
    c = haar()
    r = LiftingCascade(tuple(reversed(c.steps)), k=c.k)
    assert r.evaluate() != c.evaluate()


def test_m_init_and_alternation():
    c = haar()
    assert c.m_init() == 0           # last step updates the lowpass channel
    assert c.is_alternating()
    nonalt = LiftingCascade([step(0, {0: 1}), step(0, {0: 1})])
    assert not nonalt.is_alternating()
    with pytest.raises(ValueError):
        LiftingCascade([]).m_init()


def test_dc_trace_haar():
    t = haar().dc_trace()
    assert t.vectors == ((F(1), F(1)), (F(1), F(0)), (F(1), F(0)))
    assert t.b == (F(1), F(1), F(0), F(1))
    assert t.b_at(-2) == 1 and t.b_at(-1) == 1
    assert t.b_at(0) == 0 and t.b_at(1) == 1
    assert t.vector_at(-1) == (F(1), F(1))
    assert t.vector_at(1) == (F(1), F(0))


def test_dc_trace_counterexample():
    # single update-0 step with filter 1 + z^-1: DC gain 2, so B_0 = 2*1 + 1 = 3
    t = dc_counterexample().dc_trace()
    assert t.b == (F(1), F(1), F(3))


def test_dc_trace_with_base():
    # base row sums seed the vector: haar base gives (1, 0)
    t = wa_lifted_haar().dc_trace()
    assert t.vector_at(-1) == (F(1), F(0))
    assert t.b_at(0) == F(1)


def test_scalar_recursion_matches_vector_form():
    rng = random.Random(2024)
    for _ in range(80):
        c = random_alternating_cascade(rng, max_steps=6, max_taps=4)
        t = c.dc_trace()
        gains = [s.dc_gain() for s in c.steps]
        assert scalar_dc_recursion(gains) == t.b


def test_scalar_recursion_seed_values():
    assert scalar_dc_recursion([]) == (F(1), F(1))
    assert scalar_dc_recursion([F(2)]) == (F(1), F(1), F(3))


# -- synthesis ----------------------------------------------------------------


def test_haar_synthesis_shape():
    s = cascade_synthesis(haar())
    assert [st_.update for st_ in s.steps] == [0, 1]
    assert s.steps[0].filter == lp({0: F(-1, 2)})
    assert s.steps[1].filter == lp({0: 1})
    assert s.k == 1


def test_synthesis_inverts_exact():
    rng = random.Random(7)
    for _ in range(60):
        c = random_alternating_cascade(rng, max_steps=6, max_taps=4)
        p = cascade_synthesis(c).evaluate() @ c.evaluate()
        assert p.is_identity()


def test_synthesis_inverts_with_base():
    c = wa_lifted_haar()
    p = cascade_synthesis(c).evaluate() @ c.evaluate()
    assert p.is_identity()


def test_synthesis_inverts_float():
    p = cascade_synthesis(cdf97()).evaluate() @ cdf97().evaluate()
    assert p.approx_eq(PolyphaseMatrix.identity(FLOAT), 1e-9)


def test_synthesis_preserves_reversibility():
    s = cascade_synthesis(five_three())
    assert s.reversible
    assert s.k == 1


def test_synthesis_nontrivial_gain():
    # K != 1 exercises the gamma scaling of the reversed steps
    c = haar().replace(k=F(3, 2))
    p = cascade_synthesis(c).evaluate() @ c.evaluate()
    assert p.is_identity()


# -- construction-time validation -------------------------------------------


def test_reversible_constraints():
    good = five_three()
    assert good.reversible and good.k == 1 and good.base is None
    with pytest.raises(ValueError):
        LiftingCascade([step(0, {0: F(1, 3)})], reversible=True)
    with pytest.raises(ValueError):
        LiftingCascade([step(0, {0: F(1, 2)})], k=2, reversible=True)
    with pytest.raises(ValueError):
        LiftingCascade(
            [step(0, {0: F(1, 2)})], base=haar_base(), reversible=True
        )
    with pytest.raises(ValueError):
        LiftingCascade(
            [LiftingStep(0, LaurentPoly({0: 0.5}, FLOAT))],
            mode=FLOAT,
            reversible=True,
        )


def test_base_must_be_unimodular():
    bad = PolyphaseMatrix(lp({0: 2}), lp({}), lp({}), lp({0: 1}))
    with pytest.raises(ValueError):
        LiftingCascade([step(0, {0: 1})], base=bad)


def test_zero_gain_rejected():
    with pytest.raises(ValueError):
        LiftingCascade([step(0, {0: 1})], k=0)


def test_mode_mismatch_rejected():
    with pytest.raises(ValueError):
        LiftingCascade([step(0, {0: 1})], mode=FLOAT)


def test_replace():
    c = haar()
    d = c.replace(k=F(2))
    assert d.k == F(2) and d.steps == c.steps and c.k == 1
    e = five_three().replace(rounding=ROUND_FLOOR)
    assert e.rounding is ROUND_FLOOR and e.reversible


def test_equality_includes_rounding():
    assert five_three() == five_three()
    assert five_three() != five_three(rounding=ROUND_FLOOR)
    assert haar() != haar(reversible=True)
