"""Lifting cascades: structured factorizations of two-channel filter banks.

A cascade holds lifting steps S_0 .. S_{N-1}, a gain K and an optional base
matrix B(z), and denotes the analysis polyphase matrix

    H(z) = diag(1/K, K) * M(S_{N-1}) * ... * M(S_1) * M(S_0) * B(z)

where a step with update characteristic 0 contributes the upper-triangular
matrix [[1, S], [0, 1]] (it adds a filtered version of the highpass channel
to the lowpass channel) and a step with update characteristic 1 contributes
[[1, 0], [S, 1]].  Steps are stored first-applied-first, i.e. S_0 acts first
on the demultiplexed signal.

The DC trace follows the lowpass/highpass DC gains through the cascade:
starting from the vector B(1) @ [1, 1]^T, each step multiplies by its matrix
evaluated at z = 1.  The running value B_n is the entry most recently
modified, which for alternating cascades coincides with the two-term scalar
recursion B_n = D_n * B_{n-1} + B_{n-2} (D_n the step's DC gain,
B_{-1} = B_{-2} = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .laurent import EXACT, LaurentPoly, ModeError, Scalar, as_scalar
from .polyphase import FilterPair, PolyphaseMatrix

#: Tolerance used to admit float-mode base matrices as unimodular.
BASE_DET_TOL = 1e-9


# ---------------------------------------------------------------------------
# rounding rules


@dataclass(frozen=True)
class RoundingRule:
    """A deterministic map from dyadic rationals to integers.

    ``apply`` does the general job on a Fraction.  ``apply_shifted``, when
    present, is an integer fast path: it receives a numerator and a shift d
    and must return the same value as ``apply(Fraction(num, 2**d))``.
    """

    name: str
    apply: Callable[[Fraction], int]
    apply_shifted: Optional[Callable[[int, int], int]] = field(
        default=None, compare=False
    )

    def __call__(self, x: Fraction) -> int:
        return self.apply(x)


def _half_up(x: Fraction) -> int:
    return math.floor(x + Fraction(1, 2))


def _half_down(x: Fraction) -> int:
    return math.ceil(x - Fraction(1, 2))


def _half_even(x: Fraction) -> int:
    return round(x)


def _shift_half_up(num: int, d: int) -> int:
    return (num + (1 << (d - 1))) >> d if d else num


def _shift_half_down(num: int, d: int) -> int:
    return -((-num + (1 << (d - 1))) >> d) if d else num


def _shift_floor(num: int, d: int) -> int:
    return num >> d


def _shift_ceil(num: int, d: int) -> int:
    return -((-num) >> d)


def _shift_half_even(num: int, d: int) -> int:
    if d == 0:
        return num
    q = num >> d
    r = num - (q << d)
    half = 1 << (d - 1)
    if r > half or (r == half and (q & 1)):
        q += 1
    return q


ROUND_HALF_UP = RoundingRule("half-up", _half_up, _shift_half_up)
ROUND_HALF_DOWN = RoundingRule("half-down", _half_down, _shift_half_down)
ROUND_FLOOR = RoundingRule("floor", math.floor, _shift_floor)
ROUND_CEILING = RoundingRule("ceiling", math.ceil, _shift_ceil)
ROUND_HALF_EVEN = RoundingRule("half-even", _half_even, _shift_half_even)

ROUNDING_RULES = {
    r.name: r
    for r in (
        ROUND_HALF_UP,
        ROUND_HALF_DOWN,
        ROUND_FLOOR,
        ROUND_CEILING,
        ROUND_HALF_EVEN,
    )
}

DEFAULT_ROUNDING = ROUND_HALF_UP


# ---------------------------------------------------------------------------
# steps and cascades


@dataclass(frozen=True)
class LiftingStep:
    """One lifting step: which channel it updates (0 = lowpass, 1 = highpass)
    and the FIR update filter."""

    update: int
    filter: LaurentPoly

    def __post_init__(self):
        if self.update not in (0, 1):
            raise ValueError(f"update characteristic must be 0 or 1, got {self.update}")
        if self.filter.is_zero:
            raise ValueError("lifting filter must be nonzero")

    @property
    def mode(self) -> str:
        return self.filter.mode

    def matrix(self) -> PolyphaseMatrix:
        one = LaurentPoly.one(self.mode)
        zero = LaurentPoly.zero(self.mode)
        if self.update == 0:
            return PolyphaseMatrix(one, self.filter, zero, one)
        return PolyphaseMatrix(one, zero, self.filter, one)

    def dc_gain(self) -> Scalar:
        return self.filter.evaluate(1)


def step_matrix(step: LiftingStep) -> PolyphaseMatrix:
    """Free-function spelling of :meth:`LiftingStep.matrix`."""
    return step.matrix()


@dataclass(frozen=True)
class DCTrace:
    """DC vectors and running normalization values along a cascade.

    ``vectors[i]`` is the DC vector after step i-1 (``vectors[0]`` is the
    initial vector, before any step).  ``b[i]`` is B_{i-2}, so the list
    starts with B_{-2} = B_{-1} = 1.  ``d[i]`` is the DC gain of step i.
    """

    vectors: tuple[tuple[Scalar, Scalar], ...]
    b: tuple[Scalar, ...]
    d: tuple[Scalar, ...]

    def vector_at(self, n: int) -> tuple[Scalar, Scalar]:
        """DC vector after step n; n = -1 gives the initial vector."""
        if not -1 <= n < len(self.vectors) - 1:
            raise IndexError(f"step index {n} out of range")
        return self.vectors[n + 1]

    def b_at(self, i: int) -> Scalar:
        """B_i for i in [-2, N-1]."""
        if not -2 <= i < len(self.b) - 2:
            raise IndexError(f"B index {i} out of range")
        return self.b[i + 2]


def scalar_dc_recursion(dc_gains: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """The two-term recursion B_i = D_i * B_{i-1} + B_{i-2}.

    Returns (B_{-2}, B_{-1}, B_0, ..., B_{N-1}).  For alternating cascades
    this agrees with the most-recently-modified entry of the DC vector
    recursion; for non-alternating cascades only the vector form is
    meaningful.
    """
    b: list[Scalar] = [1, 1]
    for dcg in dc_gains:
        b.append(dcg * b[-1] + b[-2])
    return tuple(b)


class LiftingCascade:
    """An ordered list of lifting steps with gain, optional base and mode.

    Invariants enforced at construction: a reversible cascade has K = 1, no
    base, exact arithmetic and dyadic filters; all parts share one
    arithmetic mode; K is nonzero; a base, when present, is unimodular so
    that det(evaluate()) = 1 holds by construction.
    """

    __slots__ = ("steps", "k", "base", "mode", "reversible", "rounding")

    def __init__(
        self,
        steps: Iterable[LiftingStep],
        k=1,
        base: PolyphaseMatrix | None = None,
        mode: str = EXACT,
        reversible: bool = False,
        rounding: RoundingRule = DEFAULT_ROUNDING,
    ):
        steps = tuple(steps)
        for s in steps:
            if not isinstance(s, LiftingStep):
                raise TypeError("steps must be LiftingStep instances")
            if s.mode != mode:
                raise ModeError(
                    f"step filter mode {s.mode!r} does not match cascade mode {mode!r}"
                )
        kk = as_scalar(k, mode)
        if kk == 0:
            raise ValueError("gain K must be nonzero")
        if base is not None:
            if base.mode != mode:
                raise ModeError("base matrix mode does not match cascade mode")
            det = base.determinant()
            one = LaurentPoly.one(mode)
            if mode == EXACT:
                if det != one:
                    raise ValueError(f"base matrix must have det 1, got {det}")
            elif not det.approx_eq(one, BASE_DET_TOL):
                raise ValueError(f"base matrix must have det 1, got {det}")
        if not isinstance(rounding, RoundingRule):
            raise TypeError("rounding must be a RoundingRule")
        if reversible:
            if mode != EXACT:
                raise ModeError("reversible cascades require exact arithmetic")
            if kk != 1:
                raise ValueError("reversible cascades require K = 1")
            if base is not None:
                raise ValueError("reversible cascades cannot carry a base matrix")
            for i, s in enumerate(steps):
                if not s.filter.is_dyadic():
                    raise ValueError(
                        f"step {i} filter is not dyadic; reversible cascades "
                        "need power-of-two denominators"
                    )
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "k", kk)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "reversible", reversible)
        object.__setattr__(self, "rounding", rounding)

    def __setattr__(self, name, value):
        raise AttributeError("LiftingCascade is immutable")

    # -- basics --------------------------------------------------------------

    @property
    def n_steps(self) -> int:
        return len(self.steps)

    def m_init(self) -> int:
        """Update characteristic of the final (most recent) analysis step."""
        if not self.steps:
            raise ValueError("m_init is undefined for an empty cascade")
        return self.steps[-1].update

    def is_alternating(self) -> bool:
        """True iff consecutive steps update opposite channels."""
        return all(
            self.steps[i + 1].update == 1 - self.steps[i].update
            for i in range(len(self.steps) - 1)
        )

    def replace(self, **kwargs) -> "LiftingCascade":
        """A copy with the given fields replaced (re-validated)."""
        args = {
            "steps": self.steps,
            "k": self.k,
            "base": self.base,
            "mode": self.mode,
            "reversible": self.reversible,
            "rounding": self.rounding,
        }
        args.update(kwargs)
        return LiftingCascade(**args)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LiftingCascade):
            return NotImplemented
        return (
            self.steps == other.steps
            and self.k == other.k
            and self.base == other.base
            and self.mode == other.mode
            and self.reversible == other.reversible
            and self.rounding == other.rounding
        )

    __hash__ = None

    def __repr__(self) -> str:
        parts = [f"{len(self.steps)} steps", f"K={self.k}"]
        if self.base is not None:
            parts.append("base")
        parts.append("reversible" if self.reversible else f"{self.mode} irreversible")
        return f"<LiftingCascade {', '.join(parts)}>"

    # -- evaluation ------------------------------------------------------------

    def partial_product(self, n: int) -> PolyphaseMatrix:
        """M(S_n) * ... * M(S_0) * B(z), without the gain matrix.

        n = -1 gives the base alone (or the identity when there is none);
        n = n_steps - 1 gives the full unnormalized cascade E(z).
        """
        if not -1 <= n < len(self.steps):
            raise IndexError(f"partial product index {n} out of range")
        acc = self.base if self.base is not None else PolyphaseMatrix.identity(self.mode)
        for s in self.steps[: n + 1]:
            acc = s.matrix() @ acc
        return acc

    def evaluate(self) -> PolyphaseMatrix:
        """The analysis polyphase matrix diag(1/K, K) * steps * base."""
        e = self.partial_product(len(self.steps) - 1)
        return PolyphaseMatrix.gain(self.k, self.mode) @ e

    def to_filters(self) -> FilterPair:
        return self.evaluate().to_filters()

    # -- DC recursion ------------------------------------------------------------

    def dc_trace(self) -> DCTrace:
        """Track the DC vector E^(n)(1) and the running values B_n."""
        if self.base is not None:
            (a, b_), (c, d_) = self.base.evaluate(1)
            vec = (a + b_, c + d_)
        else:
            one = as_scalar(1, self.mode)
            vec = (one, one)
        vectors = [vec]
        bvals: list[Scalar] = [as_scalar(1, self.mode), as_scalar(1, self.mode)]
        dvals: list[Scalar] = []
        for s in self.steps:
            dcg = s.dc_gain()
            dvals.append(dcg)
            lo, hi = vectors[-1]
            if s.update == 0:
                lo = lo + dcg * hi
            else:
                hi = hi + dcg * lo
            vectors.append((lo, hi))
            bvals.append(lo if s.update == 0 else hi)
        return DCTrace(tuple(vectors), tuple(bvals), tuple(dvals))

    # -- synthesis ------------------------------------------------------------

    def synthesis(self) -> "LiftingCascade":
        """The inverse bank as a cascade: evaluate(synthesis) @ evaluate(self) = I.

        Steps come back reversed and negated; moving the gain matrix to the
        left of the inverted product additionally scales update-0 filters by
        1/K^2 and update-1 filters by K^2.  A base, when present, cannot in
        general commute to the right of the inverted steps, so the synthesis
        base is solved exactly from the remaining factor.
        """
        k2 = self.k * self.k
        inv_steps = tuple(
            LiftingStep(
                s.update,
                (-s.filter).scaled(1 / k2 if s.update == 0 else k2),
            )
            for s in reversed(self.steps)
        )
        inv_k = 1 / self.k
        if self.base is None:
            return LiftingCascade(
                inv_steps, inv_k, None, self.mode, self.reversible, self.rounding
            )
        target = self.evaluate().inverse(BASE_DET_TOL)
        partial = LiftingCascade(inv_steps, inv_k, None, self.mode).evaluate()
        inv_base = partial.inverse(BASE_DET_TOL) @ target
        return LiftingCascade(
            inv_steps, inv_k, inv_base, self.mode, False, self.rounding
        )


def cascade_evaluate(c: LiftingCascade) -> PolyphaseMatrix:
    return c.evaluate()


def cascade_partial(c: LiftingCascade, n: int) -> PolyphaseMatrix:
    return c.partial_product(n)


def dc_trace(c: LiftingCascade) -> DCTrace:
    return c.dc_trace()


def cascade_synthesis(c: LiftingCascade) -> LiftingCascade:
    return c.synthesis()
