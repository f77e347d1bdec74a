"""Rescaling equivalence between lifting factorizations.

Conjugating by the gain matrix D_K = diag(1/K, K) is an inner automorphism
of the polyphase matrix group:

    gamma_K(A) = D_K A D_K^-1,   [[a, b], [c, d]] -> [[a, b/K^2], [c*K^2, d]]

Two irreversible cascades are *equivalent modulo rescaling* when one turns
into the other by pushing a diagonal factor through the steps: for kappa > 0
the rescaled cascade multiplies update-0 filters by kappa^2, update-1
filters by 1/kappa^2, replaces the base B by diag(kappa, 1/kappa) @ B and
the gain K by K*kappa.  Both cascades evaluate to the same analysis matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .laurent import EXACT, Scalar, as_scalar
from .lifting import LiftingCascade, LiftingStep
from .polyphase import PolyphaseMatrix

IDENTICAL = "identical"
EQUIVALENT = "equivalent-modulo-rescaling"
INEQUIVALENT = "inequivalent"


def gamma(matrix: PolyphaseMatrix, k) -> PolyphaseMatrix:
    """The inner automorphism D_K A D_K^-1."""
    kk = as_scalar(k, matrix.mode)
    if kk == 0:
        raise ValueError("gamma requires a nonzero K")
    k2 = kk * kk
    return PolyphaseMatrix(
        matrix.h00,
        matrix.h01.scaled(1 / k2),
        matrix.h10.scaled(k2),
        matrix.h11,
    )


def rescale_cascade(cascade: LiftingCascade, kappa) -> LiftingCascade:
    """Push diag(kappa, 1/kappa) through the cascade; evaluation is unchanged.

    Only irreversible cascades rescale (a reversible bank has no gain to
    trade against its steps).  kappa = 1 returns the cascade untouched;
    any other kappa materializes the base, so an identity base becomes the
    explicit matrix diag(kappa, 1/kappa).
    """
    if cascade.reversible:
        raise ValueError("reversible cascades do not admit rescaling")
    kk = as_scalar(kappa, cascade.mode)
    if kk == 0:
        raise ValueError("kappa must be nonzero")
    if kk == 1:
        return cascade
    k2 = kk * kk
    steps = tuple(
        LiftingStep(s.update, s.filter.scaled(k2 if s.update == 0 else 1 / k2))
        for s in cascade.steps
    )
    diag = PolyphaseMatrix.diagonal(kk, 1 / kk, cascade.mode)
    base = cascade.base if cascade.base is not None else PolyphaseMatrix.identity(cascade.mode)
    return cascade.replace(steps=steps, k=cascade.k * kk, base=diag @ base)


@dataclass(frozen=True)
class RescalingWitness:
    relation: str
    kappa: Optional[Scalar]

    @property
    def equivalent(self) -> bool:
        return self.relation in (IDENTICAL, EQUIVALENT)


def _exact_sqrt(x: Fraction) -> Optional[Fraction]:
    if x <= 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _bases_equal(a: LiftingCascade, b: LiftingCascade, tol: float) -> bool:
    base_a = a.base if a.base is not None else PolyphaseMatrix.identity(a.mode)
    base_b = b.base if b.base is not None else PolyphaseMatrix.identity(b.mode)
    if a.mode == EXACT:
        return base_a == base_b
    return base_a.approx_eq(base_b, tol)


def _cascades_match(a: LiftingCascade, b: LiftingCascade, tol: float) -> bool:
    """Structural equality, treating a missing base as the identity."""
    if a.n_steps != b.n_steps:
        return False
    if a.mode == EXACT:
        if a.k != b.k:
            return False
        for sa, sb in zip(a.steps, b.steps):
            if sa.update != sb.update or sa.filter != sb.filter:
                return False
    else:
        if abs(a.k - b.k) > tol:
            return False
        for sa, sb in zip(a.steps, b.steps):
            if sa.update != sb.update or not sa.filter.approx_eq(sb.filter, tol):
                return False
    return _bases_equal(a, b, tol)


def find_rescaling(
    a: LiftingCascade, b: LiftingCascade, tol: float = 1e-9
) -> RescalingWitness:
    """Decide identical / equivalent-modulo-rescaling / inequivalent.

    The returned kappa satisfies ``rescale_cascade(a, kappa) == b`` (up to
    tolerance in float mode).  Reversible cascades compare as identical when
    structurally equal and inequivalent otherwise; the kappa search is an
    irreversible-only notion.
    """
    if a.mode != b.mode:
        return RescalingWitness(INEQUIVALENT, None)
    same_flavor = a.reversible == b.reversible and (
        not a.reversible or a.rounding == b.rounding
    )
    if same_flavor and _cascades_match(a, b, tol):
        return RescalingWitness(IDENTICAL, as_scalar(1, a.mode))
    if a.reversible or b.reversible:
        return RescalingWitness(INEQUIVALENT, None)
    if a.n_steps != b.n_steps:
        return RescalingWitness(INEQUIVALENT, None)
    if any(sa.update != sb.update for sa, sb in zip(a.steps, b.steps)):
        return RescalingWitness(INEQUIVALENT, None)

    kappa2: Optional[Scalar] = None
    for sa, sb in zip(a.steps, b.steps):
        if sa.filter == sb.filter:
            continue
        taps_a = sa.filter.taps()
        taps_b = sb.filter.taps()
        if set(taps_a) != set(taps_b):
            return RescalingWitness(INEQUIVALENT, None)
        n0 = min(taps_a)
        ratio = taps_b[n0] / taps_a[n0]  # b = rescale(a, kappa)
        if sa.update == 1:
            if ratio == 0:
                return RescalingWitness(INEQUIVALENT, None)
            ratio = 1 / ratio
        kappa2 = ratio
        break
    if kappa2 is None:
        # steps all equal; a gain/base difference alone fixes kappa = K_b/K_a
        kappa = b.k / a.k
    else:
        if kappa2 <= 0:
            return RescalingWitness(INEQUIVALENT, None)
        if a.mode == EXACT:
            root = _exact_sqrt(kappa2)
            if root is None:
                return RescalingWitness(INEQUIVALENT, None)
            kappa = root
        else:
            kappa = math.sqrt(kappa2)

    if a.mode == EXACT:
        if kappa <= 0:
            return RescalingWitness(INEQUIVALENT, None)
    elif not kappa > 0:
        return RescalingWitness(INEQUIVALENT, None)

    candidate = rescale_cascade(a, kappa)
    if _cascades_match(candidate, b, tol):
        if kappa == 1:
            return RescalingWitness(IDENTICAL, kappa)
        return RescalingWitness(EQUIVALENT, kappa)
    return RescalingWitness(INEQUIVALENT, None)
