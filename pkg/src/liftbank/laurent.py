"""Laurent polynomials in z^-1 over exact rationals, with a float mode.

Tap convention
--------------
A polynomial is a finite map ``n -> s(n)`` representing

    S(z) = sum_n s(n) * z**(-n)

so positive powers of z (advances) sit at *negative* tap indices: the
coefficient of z^2 is the tap at n = -2, and a one-sample delay z^-1 is the
tap at n = 1.  Under this convention "symmetric about 1/2" reads
``s(n) == s(1 - n)`` and "antisymmetric about 0" reads ``s(n) == -s(-n)``.

Two arithmetic modes exist and are never mixed inside one computation:
``EXACT`` (``fractions.Fraction`` coefficients) and ``FLOAT`` (binary
doubles).  Exact mode is the default and is required for reversible
transforms and for factorization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

EXACT = "exact"
FLOAT = "float"

#: Default absolute tolerance for float-mode coefficient comparisons.
DEFAULT_FLOAT_TOL = 1e-12

Scalar = Union[Fraction, float]


class ModeError(ValueError):
    """Raised when exact and float arithmetic would be mixed."""


def _check_mode(mode: str) -> str:
    if mode not in (EXACT, FLOAT):
        raise ModeError(f"unknown arithmetic mode {mode!r}")
    return mode


def as_scalar(value, mode: str = EXACT) -> Scalar:
    """Coerce ``value`` to the scalar type of ``mode``.

    Exact mode accepts ints, Fractions and strings ("3", "-1/2", "0.25");
    floats are rejected so binary rounding never sneaks into exact data.
    Float mode accepts any real number or numeric string.
    """
    _check_mode(mode)
    if mode == EXACT:
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return parse_scalar(value, EXACT)
        if isinstance(value, float):
            raise ModeError(
                "float given in exact mode; use an int, Fraction or 'p/q' string"
            )
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, float, Fraction)):
        return float(value)
    if isinstance(value, str):
        return parse_scalar(value, FLOAT)
    raise TypeError(f"cannot use {type(value).__name__} as a float scalar")


def parse_scalar(text: str, mode: str = EXACT) -> Scalar:
    """Parse a scalar literal: "p/q", an integer, or a decimal.

    In exact mode decimals parse exactly ("0.25" -> 1/4); in float mode
    everything collapses to a double.
    """
    _check_mode(mode)
    t = text.strip()
    try:
        value = Fraction(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid scalar literal {text!r}") from exc
    return value if mode == EXACT else float(value)


def format_scalar(x: Scalar) -> str:
    """Canonical text form: "p/q" or "n" for Fractions, repr for floats."""
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


def scalar_is_dyadic(x: Scalar) -> bool:
    """True iff ``x`` is an exact rational whose denominator is a power of 2."""
    if not isinstance(x, Fraction):
        raise ModeError("dyadicity is undefined for float scalars")
    d = x.denominator
    return d & (d - 1) == 0


class LaurentPoly:
    """Immutable Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("_taps", "_mode")

    def __init__(self, taps: Mapping[int, object] | None = None, mode: str = EXACT):
        _check_mode(mode)
        clean: dict[int, Scalar] = {}
        if taps:
            for n, c in taps.items():
                if not isinstance(n, int) or isinstance(n, bool):
                    raise TypeError(f"tap index must be an int, got {n!r}")
                v = as_scalar(c, mode)
                if v != 0:
                    clean[n] = v
        object.__setattr__(self, "_taps", clean)
        object.__setattr__(self, "_mode", mode)

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, mode: str = EXACT) -> "LaurentPoly":
        return cls({}, mode)

    @classmethod
    def one(cls, mode: str = EXACT) -> "LaurentPoly":
        return cls({0: 1}, mode)

    @classmethod
    def monomial(cls, coeff, tap: int = 0, mode: str = EXACT) -> "LaurentPoly":
        """The single-term polynomial coeff * z^(-tap)."""
        return cls({tap: coeff}, mode)

    # -- inspection --------------------------------------------------------

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def is_zero(self) -> bool:
        return not self._taps

    def coeff(self, n: int) -> Scalar:
        zero = Fraction(0) if self._mode == EXACT else 0.0
        return self._taps.get(n, zero)

    def items(self) -> Iterator[tuple[int, Scalar]]:
        """Taps in ascending index order."""
        return iter(sorted(self._taps.items()))

    def taps(self) -> dict[int, Scalar]:
        """A copy of the tap map."""
        return dict(self._taps)

    def support(self) -> tuple[int, int] | None:
        """(min tap, max tap), or None for the zero polynomial."""
        if not self._taps:
            return None
        return min(self._taps), max(self._taps)

    def span(self) -> int:
        """Length of the support interval (0 for the zero polynomial)."""
        if not self._taps:
            return 0
        return max(self._taps) - min(self._taps) + 1

    # -- algebra -----------------------------------------------------------

    def _require_same_mode(self, other: "LaurentPoly") -> None:
        if self._mode != other._mode:
            raise ModeError(
                f"cannot mix {self._mode} and {other._mode} polynomials"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._require_same_mode(other)
        taps = dict(self._taps)
        for n, c in other._taps.items():
            taps[n] = taps.get(n, 0) + c
        return LaurentPoly._raw(taps, self._mode)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({n: -c for n, c in self._taps.items()}, self._mode)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._require_same_mode(other)
            taps: dict[int, Scalar] = {}
            for n1, c1 in self._taps.items():
                for n2, c2 in other._taps.items():
                    n = n1 + n2
                    taps[n] = taps.get(n, 0) + c1 * c2
            return LaurentPoly._raw(taps, self._mode)
        return self.scaled(other)

    def __rmul__(self, other) -> "LaurentPoly":
        return self.scaled(other)

    def scaled(self, c) -> "LaurentPoly":
        v = as_scalar(c, self._mode)
        return LaurentPoly._raw(
            {n: v * x for n, x in self._taps.items()}, self._mode
        )

    def shifted(self, d: int) -> "LaurentPoly":
        """Multiply by z^(-d): every tap index moves up by d."""
        return LaurentPoly._raw(
            {n + d: c for n, c in self._taps.items()}, self._mode
        )

    @classmethod
    def _raw(cls, taps: dict[int, Scalar], mode: str) -> "LaurentPoly":
        # internal: values already coerced, just drop zeros
        p = cls.__new__(cls)
        object.__setattr__(p, "_taps", {n: c for n, c in taps.items() if c != 0})
        object.__setattr__(p, "_mode", mode)
        return p

    def evaluate(self, point) -> Scalar:
        """Value of S at z = point: sum of s(n) * point**(-n).

        point = 0 is only legal when no tap needs a negative exponent there,
        i.e. when every tap index is <= 0.
        """
        x = as_scalar(point, self._mode)
        if x == 0:
            if any(n > 0 for n in self._taps):
                raise ZeroDivisionError(
                    "evaluation at 0 with delay taps (negative exponents)"
                )
            return self.coeff(0)
        total = as_scalar(0, self._mode)
        for n, c in self._taps.items():
            total += c * x ** (-n)
        return total

    def is_dyadic(self) -> bool:
        """True iff every coefficient has a power-of-two denominator."""
        if self._mode != EXACT:
            raise ModeError("dyadicity is undefined in float mode")
        return all(scalar_is_dyadic(c) for c in self._taps.values())

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._mode == other._mode and self._taps == other._taps

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # mutable-dict backed; not hashable

    def approx_eq(self, other: "LaurentPoly", tol: float = DEFAULT_FLOAT_TOL) -> bool:
        """Coefficient-wise comparison within an absolute tolerance."""
        if not isinstance(other, LaurentPoly):
            raise TypeError("approx_eq expects a LaurentPoly")
        self._require_same_mode(other)
        for n in set(self._taps) | set(other._taps):
            if abs(self.coeff(n) - other.coeff(n)) > tol:
                return False
        return True

    def __bool__(self) -> bool:
        return bool(self._taps)

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._taps:
            return "0"
        parts = []
        for n, c in sorted(self._taps.items()):  # descending powers of z
            if n == 0:
                mag = format_scalar(abs(c))
            else:
                z = "z" if n == -1 else f"z^{-n}"
                a = abs(c)
                if a == 1:
                    mag = z
                else:
                    mag = f"{format_scalar(a)}*{z}"
            sign = "-" if (c < 0) else "+"
            parts.append((sign, mag))
        first_sign, first_mag = parts[0]
        out = ("-" if first_sign == "-" else "") + first_mag
        for sign, mag in parts[1:]:
            out += f" {sign} {mag}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"
