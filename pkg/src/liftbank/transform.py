"""Running lifting cascades on finite signals with periodic extension.

The analysis side demultiplexes x into even samples x0 and odd samples x1,
applies each lifting step in order (update-0 steps add a filtered copy of
x1 to x0, update-1 steps the other way around), then scales the channels by
1/K and K.  All filtering is circular at the subband rate: tap n of a
lifting filter reads the neighbor (i - n) mod L.

Reversible cascades keep every intermediate as an exact dyadic rational and
round each update to an integer before adding it; the synthesis side
recomputes the identical rounded update and subtracts it, which is what
makes the transform bit-exact on integers.  Internally the dyadic
arithmetic runs on integer numerators with a power-of-two shift - never on
binary floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import EXACT, LaurentPoly, Scalar, as_scalar
from .lifting import LiftingCascade, RoundingRule
from .polyphase import PolyphaseMatrix


@dataclass(frozen=True)
class SubbandPair:
    """Output of one analysis pass: half-rate lowpass and highpass bands."""

    lowpass: tuple
    highpass: tuple

    def __len__(self) -> int:
        return len(self.lowpass) + len(self.highpass)


def _check_signal(cascade: LiftingCascade, samples: Sequence) -> list:
    n = len(samples)
    if n == 0 or n % 2 != 0:
        raise ValueError(
            f"signal length must be even and nonzero, got {n} "
            "(periodic extension needs whole sample pairs)"
        )
    if cascade.reversible:
        for s in samples:
            if not isinstance(s, int) or isinstance(s, bool):
                raise ValueError(
                    "reversible transforms take integer samples, got "
                    f"{s!r}"
                )
        return list(samples)
    return [as_scalar(s, cascade.mode) for s in samples]


def _circular(taps: list[tuple[int, Scalar]], x: list, L: int) -> list:
    out = []
    for i in range(L):
        acc = 0
        for n, c in taps:
            acc += c * x[(i - n) % L]
        out.append(acc)
    return out


def _apply_base(matrix: PolyphaseMatrix, x0: list, x1: list, L: int) -> tuple[list, list]:
    t00 = list(matrix.h00.items())
    t01 = list(matrix.h01.items())
    t10 = list(matrix.h10.items())
    t11 = list(matrix.h11.items())
    y0 = [a + b for a, b in zip(_circular(t00, x0, L), _circular(t01, x1, L))]
    y1 = [a + b for a, b in zip(_circular(t10, x0, L), _circular(t11, x1, L))]
    return y0, y1


# -- reversible integer path -------------------------------------------------


def _shifted_taps(filt: LaurentPoly) -> tuple[list[tuple[int, int]], int]:
    """Taps as integer numerators over a common power-of-two denominator."""
    items = list(filt.items())
    shift = 0
    for _, c in items:
        shift = max(shift, c.denominator.bit_length() - 1)
    scale = 1 << shift
    return [(n, int(c * scale)) for n, c in items], shift


def _reversible_pass(
    cascade: LiftingCascade, x0: list[int], x1: list[int], inverse: bool
) -> tuple[list[int], list[int]]:
    L = len(x0)
    rule: RoundingRule = cascade.rounding
    plans = [(s.update,) + _shifted_taps(s.filter) for s in cascade.steps]
    order = reversed(plans) if inverse else plans
    sign = -1 if inverse else 1
    for update, taps, shift in order:
        src = x1 if update == 0 else x0
        dst = x0 if update == 0 else x1
        if rule.apply_shifted is not None:
            rnd = rule.apply_shifted
            for i in range(L):
                acc = 0
                for n, c in taps:
                    acc += c * src[(i - n) % L]
                dst[i] += sign * rnd(acc, shift)
        else:
            denom = 1 << shift
            for i in range(L):
                acc = 0
                for n, c in taps:
                    acc += c * src[(i - n) % L]
                dst[i] += sign * rule.apply(Fraction(acc, denom))
    return x0, x1


# -- public API ----------------------------------------------------------------


def analyze_signal(
    cascade: LiftingCascade, samples: Sequence, boundary: str = "periodic"
) -> SubbandPair:
    """Forward transform: demultiplex, lift, scale.

    Parameters
    ----------
    cascade : LiftingCascade
        Analysis cascade; reversible cascades require integer samples.
    samples : sequence
        Even-length signal.
    boundary : str
        Only "periodic" is implemented.

    Returns
    -------
    SubbandPair
        Lowpass and highpass bands, each of length len(samples) / 2.
    """
    if boundary != "periodic":
        raise ValueError(f"unsupported boundary handling {boundary!r}")
    x = _check_signal(cascade, samples)
    x0 = x[0::2]
    x1 = x[1::2]
    L = len(x0)

    if cascade.reversible:
        x0, x1 = _reversible_pass(cascade, x0, x1, inverse=False)
        return SubbandPair(tuple(x0), tuple(x1))

    if cascade.base is not None:
        x0, x1 = _apply_base(cascade.base, x0, x1, L)
    for step in cascade.steps:
        taps = list(step.filter.items())
        if step.update == 0:
            upd = _circular(taps, x1, L)
            x0 = [a + u for a, u in zip(x0, upd)]
        else:
            upd = _circular(taps, x0, L)
            x1 = [a + u for a, u in zip(x1, upd)]
    k = cascade.k
    return SubbandPair(
        tuple(v / k for v in x0),
        tuple(v * k for v in x1),
    )


def synthesize_signal(
    cascade: LiftingCascade, subbands: SubbandPair, boundary: str = "periodic"
) -> list:
    """Inverse transform; exact inverse of :func:`analyze_signal`.

    Takes the *analysis* cascade and undoes it: gain first, then the steps
    in reverse with subtracted updates, then the base.  Reversible cascades
    reproduce the original integers bit for bit.
    """
    if boundary != "periodic":
        raise ValueError(f"unsupported boundary handling {boundary!r}")
    y0 = list(subbands.lowpass)
    y1 = list(subbands.highpass)
    if len(y0) != len(y1):
        raise ValueError(
            f"subband lengths differ: {len(y0)} vs {len(y1)}"
        )
    if len(y0) == 0:
        raise ValueError("empty subbands")
    L = len(y0)

    if cascade.reversible:
        for v in y0 + y1:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(
                    f"reversible synthesis takes integer subbands, got {v!r}"
                )
        y0, y1 = _reversible_pass(cascade, y0, y1, inverse=True)
    else:
        k = cascade.k
        y0 = [as_scalar(v, cascade.mode) * k for v in y0]
        y1 = [as_scalar(v, cascade.mode) / k for v in y1]
        for step in reversed(cascade.steps):
            taps = list(step.filter.items())
            if step.update == 0:
                upd = _circular(taps, y1, L)
                y0 = [a - u for a, u in zip(y0, upd)]
            else:
                upd = _circular(taps, y0, L)
                y1 = [a - u for a, u in zip(y1, upd)]
        if cascade.base is not None:
            inv = cascade.base.inverse()
            y0, y1 = _apply_base(inv, y0, y1, L)

    out = []
    for a, b in zip(y0, y1):
        out.append(a)
        out.append(b)
    return out
