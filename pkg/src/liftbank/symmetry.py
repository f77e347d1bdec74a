"""Linear-phase classification of filters, filter pairs and cascades.

Whole-sample (WS) banks have odd-length filters symmetric about integer
positions; half-sample (HS) banks have even-length filters with a symmetric
lowpass and an antisymmetric highpass centered on half-integers.  The
structural counterparts for cascades:

* a cascade is *WS-group* when it has no base matrix and every lifting
  filter is half-sample symmetric about +1/2 (lowpass updates) or -1/2
  (highpass updates);
* a cascade is *HS-group* when it is lifted from a unimodular base whose
  scalar filters are equal-length, concentric, HS symmetric (lowpass) /
  HS antisymmetric (highpass), using whole-sample antisymmetric (WA)
  lifting filters centered on 0.

Centers always land on the support midpoint, so classification only has to
test the reflection through (lo + hi) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .laurent import DEFAULT_FLOAT_TOL, EXACT, LaurentPoly, Scalar
from .polyphase import FilterPair

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NONE = "none"

WS = "WS"
HS = "HS"
WS_GROUP = "WS-group"
HS_GROUP = "HS-group"
NEITHER = "neither"

Center = Union[Fraction, float, None]


@dataclass(frozen=True)
class SymmetryClass:
    kind: str
    center: Center


@dataclass(frozen=True)
class GroupLiftingClass:
    kind: str
    detail: tuple[str, ...]


def classify_filter(p: LaurentPoly, tol: float = DEFAULT_FLOAT_TOL) -> SymmetryClass:
    """Symmetry of one filter about its support midpoint.

    The zero polynomial has no support and is rejected.  A single tap is
    symmetric (it can never be antisymmetric: the coefficient would have to
    be its own negation).
    """
    sup = p.support()
    if sup is None:
        raise ValueError("the zero filter has no symmetry class")
    lo, hi = sup
    twice_center = lo + hi
    if p.mode == EXACT:
        center: Center = Fraction(twice_center, 2)

        def eq(a: Scalar, b: Scalar) -> bool:
            return a == b

    else:
        center = twice_center / 2.0

        def eq(a: Scalar, b: Scalar) -> bool:
            return abs(a - b) <= tol

    symmetric = True
    antisymmetric = True
    for n, c in p.items():
        mirrored = p.coeff(twice_center - n)
        if not eq(c, mirrored):
            symmetric = False
        if not eq(c, -mirrored):
            antisymmetric = False
        if not (symmetric or antisymmetric):
            return SymmetryClass(NONE, None)
    if symmetric:
        return SymmetryClass(SYMMETRIC, center)
    return SymmetryClass(ANTISYMMETRIC, center)


def _is_whole_sample_antisymmetric(p: LaurentPoly, tol: float) -> bool:
    cls = classify_filter(p, tol)
    return cls.kind == ANTISYMMETRIC and cls.center == 0


def classify_ws_group(
    cascade, tol: float = DEFAULT_FLOAT_TOL
) -> GroupLiftingClass:
    """Does the cascade have whole-sample group-lifting structure?

    Requires an absent base and, per step, an HS-symmetric filter centered
    on +1/2 for lowpass updates and -1/2 for highpass updates.  The empty
    step list passes vacuously (the identity bank is WS).
    """
    detail: list[str] = []
    if cascade.base is not None:
        detail.append("cascade carries a base matrix")
    for i, step in enumerate(cascade.steps):
        cls = classify_filter(step.filter, tol)
        want = Fraction(1, 2) if step.update == 0 else Fraction(-1, 2)
        if cls.kind != SYMMETRIC or cls.center != want:
            got = (
                f"{cls.kind} about {cls.center}"
                if cls.kind != NONE
                else "not symmetric"
            )
            detail.append(
                f"step {i} (update {step.update}): filter is {got}, "
                f"needs symmetric about {want}"
            )
    if detail:
        return GroupLiftingClass(NEITHER, tuple(detail))
    return GroupLiftingClass(WS_GROUP, ())


def classify_hs_group(
    cascade, tol: float = DEFAULT_FLOAT_TOL
) -> GroupLiftingClass:
    """Does the cascade have half-sample group-lifting structure?

    The base must be present and extract to equal-length concentric scalar
    filters, HS symmetric (lowpass) and HS antisymmetric (highpass); every
    lifting filter must be whole-sample antisymmetric about 0.
    """
    detail: list[str] = []
    if cascade.base is None:
        return GroupLiftingClass(NEITHER, ("cascade has no base matrix",))

    pair = cascade.base.to_filters()
    lo_sup = pair.lowpass.support()
    hi_sup = pair.highpass.support()
    if lo_sup is None or hi_sup is None:
        detail.append("base has a zero scalar filter")
    else:
        if (lo_sup[1] - lo_sup[0]) != (hi_sup[1] - hi_sup[0]):
            detail.append(
                f"base filters differ in length: supports {lo_sup} vs {hi_sup}"
            )
        if sum(lo_sup) != sum(hi_sup):
            detail.append(
                f"base filters are not concentric: supports {lo_sup} vs {hi_sup}"
            )
        lo_cls = classify_filter(pair.lowpass, tol)
        hi_cls = classify_filter(pair.highpass, tol)
        if lo_cls.kind != SYMMETRIC or sum(lo_sup) % 2 == 0:
            detail.append("base lowpass is not half-sample symmetric")
        if hi_cls.kind != ANTISYMMETRIC or sum(hi_sup) % 2 == 0:
            detail.append("base highpass is not half-sample antisymmetric")

    for i, step in enumerate(cascade.steps):
        if not _is_whole_sample_antisymmetric(step.filter, tol):
            detail.append(
                f"step {i}: filter is not whole-sample antisymmetric about 0"
            )

    if detail:
        return GroupLiftingClass(NEITHER, tuple(detail))
    return GroupLiftingClass(HS_GROUP, ())


def classify_linear_phase(pair: FilterPair, tol: float = DEFAULT_FLOAT_TOL) -> str:
    """WS / HS / neither for a scalar filter pair.

    WS: both filters symmetric about whole-sample (integer) centers.
    HS: lowpass symmetric and highpass antisymmetric about half-sample
    centers.  Anything else (including a zero filter): neither.
    """
    if pair.lowpass.is_zero or pair.highpass.is_zero:
        return NEITHER
    lo = classify_filter(pair.lowpass, tol)
    hi = classify_filter(pair.highpass, tol)

    def whole(c: Center) -> bool:
        return c is not None and 2 * c % 2 == 0

    def half(c: Center) -> bool:
        return c is not None and 2 * c % 2 != 0

    if lo.kind == SYMMETRIC and hi.kind == SYMMETRIC and whole(lo.center) and whole(hi.center):
        return WS
    if (
        lo.kind == SYMMETRIC
        and hi.kind == ANTISYMMETRIC
        and half(lo.center)
        and half(hi.center)
    ):
        return HS
    return NEITHER
