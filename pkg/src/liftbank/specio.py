"""Reading and writing cascade spec files, matrix files and signal files.

Spec files are JSON documents:

    {
      "mode": "reversible" | "irreversible",
      "arithmetic": "exact" | "float",          (default "exact")
      "k": "..." | number,                      (default 1)
      "rounding": "half-up" | ...,              (reversible only)
      "base": [[taps, taps], [taps, taps]],     (optional, row-major)
      "steps": [{"update": 0|1, "taps": [{"n": int, "c": scalar}, ...]}, ...]
    }

Exact scalars travel as strings ("-1/2", "3", "0.25") so nothing is forced
through binary floating point; float-mode documents use plain JSON numbers.
Serialization is canonical (taps sorted by index, fixed key order), which
makes parse -> serialize -> parse the identity.

Signal files are UTF-8 text, one sample per line, LF endings.  Subband
files produced by the command-line transform hold the lowpass block first,
then the highpass block.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .laurent import EXACT, FLOAT, LaurentPoly, Scalar
from .lifting import (
    DEFAULT_ROUNDING,
    ROUNDING_RULES,
    LiftingCascade,
    LiftingStep,
    RoundingRule,
)
from .polyphase import PolyphaseMatrix

REVERSIBLE = "reversible"
IRREVERSIBLE = "irreversible"


class SpecFormatError(ValueError):
    """A spec document failed to parse; ``where`` locates the offender."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def _scalar_from_json(value: Any, mode: str, where: str) -> Scalar:
    if isinstance(value, bool):
        raise SpecFormatError("scalar must be a number or string", where)
    if mode == EXACT:
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise SpecFormatError(f"invalid rational literal {value!r}", where)
        if isinstance(value, float):
            raise SpecFormatError(
                "exact documents must write non-integer scalars as strings "
                f"(got JSON float {value!r})",
                where,
            )
        raise SpecFormatError(f"cannot read {type(value).__name__} as a scalar", where)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            raise SpecFormatError(f"invalid numeric literal {value!r}", where)
    raise SpecFormatError(f"cannot read {type(value).__name__} as a scalar", where)


def _scalar_to_json(value: Scalar) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    return float(value)


def _taps_from_json(value: Any, mode: str, where: str) -> LaurentPoly:
    if not isinstance(value, list):
        raise SpecFormatError("taps must be a list of {n, c} objects", where)
    taps: dict[int, Scalar] = {}
    for i, item in enumerate(value):
        spot = f"{where}[{i}]"
        if not isinstance(item, dict) or set(item) != {"n", "c"}:
            raise SpecFormatError('tap must be an object with keys "n" and "c"', spot)
        n = item["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise SpecFormatError(f"tap index must be an integer, got {n!r}", spot)
        if n in taps:
            raise SpecFormatError(f"duplicate tap index {n}", spot)
        taps[n] = _scalar_from_json(item["c"], mode, f"{spot}.c")
    return LaurentPoly(taps, mode)


def _taps_to_json(p: LaurentPoly) -> list[dict[str, Any]]:
    return [{"n": n, "c": _scalar_to_json(c)} for n, c in p.items()]


def document_to_cascade(doc: Any) -> LiftingCascade:
    """Build and validate a cascade from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise SpecFormatError("spec document must be a JSON object", "$")

    known = {"mode", "arithmetic", "k", "rounding", "base", "steps"}
    for key in doc:
        if key not in known:
            raise SpecFormatError(f"unknown key {key!r}", "$")

    mode_txt = doc.get("mode")
    if mode_txt not in (REVERSIBLE, IRREVERSIBLE):
        raise SpecFormatError(
            f'"mode" must be "{REVERSIBLE}" or "{IRREVERSIBLE}", got {mode_txt!r}',
            "$.mode",
        )
    reversible = mode_txt == REVERSIBLE

    arithmetic = doc.get("arithmetic", EXACT)
    if arithmetic not in (EXACT, FLOAT):
        raise SpecFormatError(
            f'"arithmetic" must be "{EXACT}" or "{FLOAT}", got {arithmetic!r}',
            "$.arithmetic",
        )
    if reversible and arithmetic != EXACT:
        raise SpecFormatError(
            "reversible cascades require exact arithmetic", "$.arithmetic"
        )

    k = _scalar_from_json(doc.get("k", 1), arithmetic, "$.k")
    if reversible and k != 1:
        raise SpecFormatError(f"reversible cascades require k = 1, got {k}", "$.k")
    if k == 0:
        raise SpecFormatError("k must be nonzero", "$.k")

    rounding: RoundingRule = DEFAULT_ROUNDING
    if "rounding" in doc:
        name = doc["rounding"]
        if name not in ROUNDING_RULES:
            raise SpecFormatError(
                f"unknown rounding rule {name!r}; known: "
                + ", ".join(sorted(ROUNDING_RULES)),
                "$.rounding",
            )
        rounding = ROUNDING_RULES[name]

    base = None
    if "base" in doc and doc["base"] is not None:
        if reversible:
            raise SpecFormatError(
                "reversible cascades cannot carry a base matrix", "$.base"
            )
        rows = doc["base"]
        if (
            not isinstance(rows, list)
            or len(rows) != 2
            or any(not isinstance(r, list) or len(r) != 2 for r in rows)
        ):
            raise SpecFormatError("base must be a 2x2 array of tap lists", "$.base")
        entries = [
            _taps_from_json(rows[i][j], arithmetic, f"$.base[{i}][{j}]")
            for i in range(2)
            for j in range(2)
        ]
        try:
            base = PolyphaseMatrix(*entries)
        except ValueError as exc:
            raise SpecFormatError(str(exc), "$.base")

    steps_doc = doc.get("steps")
    if not isinstance(steps_doc, list):
        raise SpecFormatError('"steps" must be a list', "$.steps")
    steps = []
    for i, sd in enumerate(steps_doc):
        spot = f"$.steps[{i}]"
        if not isinstance(sd, dict) or set(sd) != {"update", "taps"}:
            raise SpecFormatError(
                'step must be an object with keys "update" and "taps"', spot
            )
        update = sd["update"]
        if update not in (0, 1) or isinstance(update, bool):
            raise SpecFormatError(f"update must be 0 or 1, got {update!r}", spot)
        filt = _taps_from_json(sd["taps"], arithmetic, f"{spot}.taps")
        if filt.is_zero:
            raise SpecFormatError("zero lifting filter", f"{spot}.taps")
        if reversible and not filt.is_dyadic():
            raise SpecFormatError(
                "reversible cascades need dyadic taps (power-of-two denominators)",
                f"{spot}.taps",
            )
        steps.append(LiftingStep(update, filt))

    try:
        return LiftingCascade(
            steps,
            k=k,
            base=base,
            mode=arithmetic,
            reversible=reversible,
            rounding=rounding,
        )
    except ValueError as exc:
        raise SpecFormatError(str(exc), "$")


def cascade_to_document(cascade: LiftingCascade) -> dict:
    """Canonical JSON-ready form of a cascade (m_init is never stored)."""
    doc: dict[str, Any] = {
        "mode": REVERSIBLE if cascade.reversible else IRREVERSIBLE,
        "arithmetic": cascade.mode,
        "k": _scalar_to_json(cascade.k),
    }
    if cascade.reversible:
        doc["rounding"] = cascade.rounding.name
    if cascade.base is not None:
        b = cascade.base
        doc["base"] = [
            [_taps_to_json(b.h00), _taps_to_json(b.h01)],
            [_taps_to_json(b.h10), _taps_to_json(b.h11)],
        ]
    doc["steps"] = [
        {"update": s.update, "taps": _taps_to_json(s.filter)} for s in cascade.steps
    ]
    return doc


def parse_spec(text: str) -> LiftingCascade:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(
            f"invalid JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}"
        )
    return document_to_cascade(doc)


def serialize_spec(cascade: LiftingCascade) -> str:
    return json.dumps(cascade_to_document(cascade), indent=2) + "\n"


def load_spec(path) -> LiftingCascade:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())


def save_spec(cascade: LiftingCascade, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_spec(cascade))


# -- matrix files -------------------------------------------------------------


def parse_matrix(text: str, mode: str = EXACT) -> PolyphaseMatrix:
    """A matrix file is a JSON 2x2 array of tap lists."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(
            f"invalid JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}"
        )
    if (
        not isinstance(doc, list)
        or len(doc) != 2
        or any(not isinstance(r, list) or len(r) != 2 for r in doc)
    ):
        raise SpecFormatError("matrix file must be a 2x2 array of tap lists", "$")
    entries = [
        _taps_from_json(doc[i][j], mode, f"$[{i}][{j}]")
        for i in range(2)
        for j in range(2)
    ]
    return PolyphaseMatrix(*entries)


def serialize_matrix(matrix: PolyphaseMatrix) -> str:
    doc = [
        [_taps_to_json(matrix.h00), _taps_to_json(matrix.h01)],
        [_taps_to_json(matrix.h10), _taps_to_json(matrix.h11)],
    ]
    return json.dumps(doc, indent=2) + "\n"


# -- signal files -------------------------------------------------------------


def format_sample(value) -> str:
    """One sample as text: integers bare, dyadics as finite decimals.

    Exact rationals with a 2^a * 5^b denominator print as exact decimals;
    anything else falls back to "p/q".  Floats use repr (shortest
    round-tripping form).
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a sample")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        den = value.denominator
        twos = 0
        while den % 2 == 0:
            den //= 2
            twos += 1
        fives = 0
        while den % 5 == 0:
            den //= 5
            fives += 1
        if den != 1:
            return str(value)  # p/q fallback
        digits = max(twos, fives)
        scaled = value * 10**digits
        num = scaled.numerator  # exact by construction
        sign = "-" if num < 0 else ""
        mag = abs(num)
        head, tail = divmod(mag, 10**digits)
        return f"{sign}{head}.{str(tail).zfill(digits)}"
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"cannot format {type(value).__name__} as a sample")


def parse_sample(text: str, mode: str, reversible: bool, where: str):
    t = text.strip()
    if reversible:
        try:
            return int(t)
        except ValueError:
            raise SpecFormatError(
                f"reversible signals need integer samples, got {t!r}", where
            )
    try:
        value = Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise SpecFormatError(f"invalid sample {t!r}", where)
    return value if mode == EXACT else float(value)


def read_signal(path, mode: str = EXACT, reversible: bool = False) -> list:
    samples = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip() == "":
                continue
            samples.append(
                parse_sample(line, mode, reversible, f"{path}:{lineno}")
            )
    return samples


def write_signal(samples, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for s in samples:
            fh.write(format_sample(s) + "\n")
