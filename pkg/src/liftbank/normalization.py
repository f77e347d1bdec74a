"""JPEG 2000 Part 2 gain-normalization compliance for lifting cascades.

Part 2 of the standard transmits user-defined wavelet transforms as lifting
steps and requires the lowpass channel to come out with unit DC gain.  For a
cascade whose steps alternate channels, the requirement pins a single value
in the DC recursion:

* irreversible: B_{N-1} = K when the final step updates the lowpass channel
  (m_init = 0), B_{N-2} = K when it updates the highpass channel;
* reversible: the same value must equal 1 (and K is 1 by construction).

Either way the selected B equals the unnormalized lowpass DC gain E_0(1),
so compliance is exactly "lowpass DC gain of the full bank is 1".  For
N = 1 with m_init = 1 the selected value is B_{-1} = 1, which forces K = 1.

Cascades whose steps do not alternate are outside the recursion's premises
and get the verdict "not-applicable".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .laurent import EXACT, LaurentPoly, Scalar, as_scalar, format_scalar
from .lifting import DCTrace, LiftingCascade
from .polyphase import FilterPair
from . import symmetry

COMPLIANT = "compliant"
NON_COMPLIANT = "non-compliant"
NOT_APPLICABLE = "not-applicable"

#: |B - K| tolerance admitting float-mode cascades as compliant.
FLOAT_COMPLIANCE_TOL = 1e-9


@dataclass(frozen=True)
class ComplianceReport:
    verdict: str
    required_value: Optional[Scalar]
    actual_b: Optional[Scalar]
    k: Scalar
    m_init: Optional[int]
    selected_index: Optional[int]
    alternation_ok: bool
    dyadic_ok: bool
    tolerance_qualified: bool
    reasons: tuple[str, ...]

    @property
    def compliant(self) -> bool:
        return self.verdict == COMPLIANT


def _selected_b_index(n_steps: int, m_init: int) -> int:
    # the B value pinned by the normalization requirement
    return n_steps - 1 if m_init == 0 else n_steps - 2


def check_part2(cascade: LiftingCascade) -> ComplianceReport:
    """Verdict on the gain-normalization requirement for one cascade."""
    reasons: list[str] = []

    if cascade.n_steps == 0:
        return ComplianceReport(
            verdict=NOT_APPLICABLE,
            required_value=None,
            actual_b=None,
            k=cascade.k,
            m_init=None,
            selected_index=None,
            alternation_ok=True,
            dyadic_ok=True,
            tolerance_qualified=False,
            reasons=("cascade has no lifting steps",),
        )

    alternation_ok = cascade.is_alternating()
    if cascade.mode == EXACT:
        dyadic_ok = all(s.filter.is_dyadic() for s in cascade.steps)
    else:
        dyadic_ok = False

    if not alternation_ok:
        seq = [s.update for s in cascade.steps]
        return ComplianceReport(
            verdict=NOT_APPLICABLE,
            required_value=None,
            actual_b=None,
            k=cascade.k,
            m_init=cascade.m_init(),
            selected_index=None,
            alternation_ok=False,
            dyadic_ok=dyadic_ok,
            tolerance_qualified=False,
            reasons=(f"update characteristics do not alternate: {seq}",),
        )

    m_init = cascade.m_init()
    trace = cascade.dc_trace()
    idx = _selected_b_index(cascade.n_steps, m_init)
    actual = trace.b_at(idx)
    required = as_scalar(1, cascade.mode) if cascade.reversible else cascade.k

    if cascade.mode == EXACT:
        ok = actual == required
        qualified = False
    else:
        ok = abs(actual - required) <= FLOAT_COMPLIANCE_TOL
        qualified = True
        reasons.append(
            f"float arithmetic: verdict within |B - K| <= {FLOAT_COMPLIANCE_TOL:g}"
        )

    if not ok:
        kind = "reversible" if cascade.reversible else "irreversible"
        reasons.insert(
            0,
            f"B_{idx} = {format_scalar(actual)} != {format_scalar(required)}"
            f" ({kind} requirement)",
        )

    return ComplianceReport(
        verdict=COMPLIANT if ok else NON_COMPLIANT,
        required_value=required,
        actual_b=actual,
        k=cascade.k,
        m_init=m_init,
        selected_index=idx,
        alternation_ok=True,
        dyadic_ok=dyadic_ok,
        tolerance_qualified=qualified,
        reasons=tuple(reasons),
    )


@dataclass(frozen=True)
class AnalysisReport:
    """Everything worth knowing about one cascade, in one place."""

    filters: FilterPair
    dc_lowpass: Scalar
    nyquist_lowpass: Scalar
    dc_highpass: Scalar
    nyquist_highpass: Scalar
    determinant: LaurentPoly
    b_sequence: tuple[Scalar, ...]
    dc_trace: DCTrace
    m_init: Optional[int]
    k: Scalar
    reversible: bool
    mode: str
    lowpass_symmetry: symmetry.SymmetryClass
    highpass_symmetry: symmetry.SymmetryClass
    linear_phase: str
    group_lifting: str
    compliance: ComplianceReport


def analyze(cascade: LiftingCascade) -> AnalysisReport:
    """Evaluate, extract filters, run the DC recursion and classify."""
    matrix = cascade.evaluate()
    pair = matrix.to_filters()
    trace = cascade.dc_trace()

    ws = symmetry.classify_ws_group(cascade)
    hs = symmetry.classify_hs_group(cascade)
    if ws.kind == symmetry.WS_GROUP:
        group = ws.kind
    elif hs.kind == symmetry.HS_GROUP:
        group = hs.kind
    else:
        group = symmetry.NEITHER

    return AnalysisReport(
        filters=pair,
        dc_lowpass=pair.lowpass.evaluate(1),
        nyquist_lowpass=pair.lowpass.evaluate(-1),
        dc_highpass=pair.highpass.evaluate(1),
        nyquist_highpass=pair.highpass.evaluate(-1),
        determinant=matrix.determinant(),
        b_sequence=trace.b,
        dc_trace=trace,
        m_init=cascade.m_init() if cascade.n_steps else None,
        k=cascade.k,
        reversible=cascade.reversible,
        mode=cascade.mode,
        lowpass_symmetry=symmetry.classify_filter(pair.lowpass)
        if not pair.lowpass.is_zero
        else symmetry.SymmetryClass(symmetry.NONE, None),
        highpass_symmetry=symmetry.classify_filter(pair.highpass)
        if not pair.highpass.is_zero
        else symmetry.SymmetryClass(symmetry.NONE, None),
        linear_phase=symmetry.classify_linear_phase(pair),
        group_lifting=group,
        compliance=check_part2(cascade),
    )
