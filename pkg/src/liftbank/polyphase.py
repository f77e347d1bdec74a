"""2x2 polyphase matrices and the scalar-filter correspondence.

A two-channel analysis bank is represented by

    H(z) = [[h00, h01],
            [h10, h11]]

acting on the subsampled signal vector [x0; x1] with x0(n) = x(2n) and
x1(n) = x(2n+1).  Row 0 is the lowpass channel.  The scalar filters are
recovered through

    H_0(z) = h00(z^2) + z * h01(z^2)
    H_1(z) = h10(z^2) + z * h11(z^2)

which in tap indices reads: even tap 2m of H_i comes from tap m of the
left column entry, odd tap 2m-1 from tap m of the right column entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import (
    DEFAULT_FLOAT_TOL,
    EXACT,
    LaurentPoly,
    ModeError,
    Scalar,
    as_scalar,
)


@dataclass(frozen=True)
class FilterPair:
    """Scalar lowpass/highpass analysis filters of a two-channel bank."""

    lowpass: LaurentPoly
    highpass: LaurentPoly

    def __post_init__(self):
        if self.lowpass.mode != self.highpass.mode:
            raise ModeError("filter pair mixes arithmetic modes")

    @property
    def mode(self) -> str:
        return self.lowpass.mode


@dataclass(frozen=True)
class PolyphaseMatrix:
    h00: LaurentPoly
    h01: LaurentPoly
    h10: LaurentPoly
    h11: LaurentPoly

    def __post_init__(self):
        modes = {e.mode for e in self.entries()}
        if len(modes) != 1:
            raise ModeError("polyphase matrix mixes arithmetic modes")

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.h00, self.h01, self.h10, self.h11)

    @property
    def mode(self) -> str:
        return self.h00.mode

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, mode: str = EXACT) -> "PolyphaseMatrix":
        one = LaurentPoly.one(mode)
        zero = LaurentPoly.zero(mode)
        return cls(one, zero, zero, one)

    @classmethod
    def diagonal(cls, a, b, mode: str = EXACT) -> "PolyphaseMatrix":
        zero = LaurentPoly.zero(mode)
        return cls(
            LaurentPoly.monomial(a, 0, mode),
            zero,
            zero,
            LaurentPoly.monomial(b, 0, mode),
        )

    @classmethod
    def gain(cls, k, mode: str = EXACT) -> "PolyphaseMatrix":
        """The scaling matrix diag(1/K, K)."""
        kk = as_scalar(k, mode)
        if kk == 0:
            raise ValueError("gain K must be nonzero")
        return cls.diagonal(1 / kk, kk, mode)

    @classmethod
    def from_filters(cls, pair: FilterPair) -> "PolyphaseMatrix":
        """Invert the scalar-filter correspondence (exact round-trip)."""
        mode = pair.mode

        def split(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
            even: dict[int, Scalar] = {}
            odd: dict[int, Scalar] = {}
            for n, c in p.items():
                if n % 2 == 0:
                    even[n // 2] = c
                else:
                    odd[(n + 1) // 2] = c
            return LaurentPoly(even, mode), LaurentPoly(odd, mode)

        h00, h01 = split(pair.lowpass)
        h10, h11 = split(pair.highpass)
        return cls(h00, h01, h10, h11)

    # -- algebra -----------------------------------------------------------

    def __matmul__(self, other: "PolyphaseMatrix") -> "PolyphaseMatrix":
        if not isinstance(other, PolyphaseMatrix):
            return NotImplemented
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return PolyphaseMatrix(
            a * e + b * g,
            a * f + b * h,
            c * e + d * g,
            c * f + d * h,
        )

    def determinant(self) -> LaurentPoly:
        return self.h00 * self.h11 - self.h01 * self.h10

    def inverse(self, tol: float = DEFAULT_FLOAT_TOL) -> "PolyphaseMatrix":
        """Adjugate inverse, valid only for unimodular (det = 1) matrices."""
        det = self.determinant()
        one = LaurentPoly.one(self.mode)
        if self.mode == EXACT:
            ok = det == one
        else:
            ok = det.approx_eq(one, tol)
        if not ok:
            raise ValueError(
                f"matrix is not unimodular (det = {det}); no FIR inverse taken"
            )
        return PolyphaseMatrix(self.h11, -self.h01, -self.h10, self.h00)

    def evaluate(self, point) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
        """Entry-wise evaluation at z = point."""
        return (
            (self.h00.evaluate(point), self.h01.evaluate(point)),
            (self.h10.evaluate(point), self.h11.evaluate(point)),
        )

    def to_filters(self) -> FilterPair:
        mode = self.mode

        def merge(left: LaurentPoly, right: LaurentPoly) -> LaurentPoly:
            taps: dict[int, Scalar] = {}
            for m, c in left.items():
                taps[2 * m] = c
            for m, c in right.items():
                taps[2 * m - 1] = c
            return LaurentPoly(taps, mode)

        return FilterPair(merge(self.h00, self.h01), merge(self.h10, self.h11))

    # -- comparison --------------------------------------------------------

    def approx_eq(self, other: "PolyphaseMatrix", tol: float = DEFAULT_FLOAT_TOL) -> bool:
        return all(
            a.approx_eq(b, tol) for a, b in zip(self.entries(), other.entries())
        )

    def is_identity(self, tol: float = DEFAULT_FLOAT_TOL) -> bool:
        ident = PolyphaseMatrix.identity(self.mode)
        if self.mode == EXACT:
            return self == ident
        return self.approx_eq(ident, tol)

    def __str__(self) -> str:
        return f"[[{self.h00}, {self.h01}], [{self.h10}, {self.h11}]]"
