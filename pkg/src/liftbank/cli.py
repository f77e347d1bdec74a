"""Command-line front end.

Subcommands: analyze, validate, rescale, compare, transform, factor.  All
output is deterministic (same input, same bytes).  Exit codes: 0 success or
positive verdict, 1 negative verdict or semantic error in valid input,
2 unreadable input (I/O or parse failure).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .factorization import (
    HIGH_END,
    HIGHPASS_FIRST,
    LOW_END,
    LOWPASS_FIRST,
    FactorizationError,
    FactorStrategy,
    factor_lifting,
)
from .laurent import EXACT, ModeError, format_scalar, parse_scalar
from .normalization import AnalysisReport, analyze
from .rescaling import EQUIVALENT, IDENTICAL, find_rescaling, rescale_cascade
from .specio import (
    SpecFormatError,
    load_spec,
    parse_matrix,
    read_signal,
    serialize_spec,
    format_sample,
)
from .transform import SubbandPair, analyze_signal, synthesize_signal


def _scalar_text(x) -> str:
    return format_scalar(x)


def _scalar_json(x):
    return format_scalar(x) if isinstance(x, Fraction) else float(x)


def _taps_json(p):
    return [{"n": n, "c": _scalar_json(c)} for n, c in p.items()]


def _center_json(center):
    if center is None:
        return None
    return _scalar_json(center)


def _write_text(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def render_text_report(report: AnalysisReport) -> str:
    c = report.compliance
    lines = [
        f"arithmetic:    {report.mode}",
        f"type:          {'reversible' if report.reversible else 'irreversible'}",
        f"k:             {_scalar_text(report.k)}",
        f"steps:         {len(report.b_sequence) - 2}"
        + (f" (m_init = {report.m_init})" if report.m_init is not None else ""),
        f"lowpass:       {report.filters.lowpass}",
        f"highpass:      {report.filters.highpass}",
        f"dc gain:       lowpass {_scalar_text(report.dc_lowpass)}, "
        f"highpass {_scalar_text(report.dc_highpass)}",
        f"nyquist gain:  lowpass {_scalar_text(report.nyquist_lowpass)}, "
        f"highpass {_scalar_text(report.nyquist_highpass)}",
        f"determinant:   {report.determinant}",
        "b sequence:    "
        + ", ".join(
            f"B_{i - 2} = {_scalar_text(b)}" for i, b in enumerate(report.b_sequence)
        ),
        f"lowpass sym:   {report.lowpass_symmetry.kind}"
        + (
            f" about {_scalar_text(report.lowpass_symmetry.center)}"
            if report.lowpass_symmetry.center is not None
            else ""
        ),
        f"highpass sym:  {report.highpass_symmetry.kind}"
        + (
            f" about {_scalar_text(report.highpass_symmetry.center)}"
            if report.highpass_symmetry.center is not None
            else ""
        ),
        f"linear phase:  {report.linear_phase}",
        f"group lifting: {report.group_lifting}",
        f"part2:         {c.verdict}"
        + (f" ({'; '.join(c.reasons)})" if c.reasons else ""),
    ]
    return "\n".join(lines) + "\n"


def render_json_report(report: AnalysisReport) -> str:
    c = report.compliance
    doc = {
        "arithmetic": report.mode,
        "reversible": report.reversible,
        "k": _scalar_json(report.k),
        "steps": len(report.b_sequence) - 2,
        "m_init": report.m_init,
        "lowpass": _taps_json(report.filters.lowpass),
        "highpass": _taps_json(report.filters.highpass),
        "dc_gain": {
            "lowpass": _scalar_json(report.dc_lowpass),
            "highpass": _scalar_json(report.dc_highpass),
        },
        "nyquist_gain": {
            "lowpass": _scalar_json(report.nyquist_lowpass),
            "highpass": _scalar_json(report.nyquist_highpass),
        },
        "determinant": _taps_json(report.determinant),
        "b_sequence": [_scalar_json(b) for b in report.b_sequence],
        "symmetry": {
            "lowpass": {
                "kind": report.lowpass_symmetry.kind,
                "center": _center_json(report.lowpass_symmetry.center),
            },
            "highpass": {
                "kind": report.highpass_symmetry.kind,
                "center": _center_json(report.highpass_symmetry.center),
            },
        },
        "linear_phase": report.linear_phase,
        "group_lifting": report.group_lifting,
        "compliance": {
            "verdict": c.verdict,
            "required_value": None
            if c.required_value is None
            else _scalar_json(c.required_value),
            "actual_b": None if c.actual_b is None else _scalar_json(c.actual_b),
            "selected_index": c.selected_index,
            "tolerance_qualified": c.tolerance_qualified,
            "reasons": list(c.reasons),
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def _cmd_analyze(args) -> int:
    report = analyze(load_spec(args.spec))
    if args.format == "json":
        sys.stdout.write(render_json_report(report))
    else:
        sys.stdout.write(render_text_report(report))
    return 0


def _cmd_validate(args) -> int:
    report = analyze(load_spec(args.spec)).compliance
    print(report.verdict)
    for reason in report.reasons:
        print(reason, file=sys.stderr)
    return 0 if report.compliant else 1


def _cmd_rescale(args) -> int:
    cascade = load_spec(args.spec)
    try:
        kappa = parse_scalar(args.kappa, cascade.mode)
    except ValueError as exc:
        raise SpecFormatError(str(exc), "--kappa")
    rescaled = rescale_cascade(cascade, kappa)
    _write_text(serialize_spec(rescaled), args.output)
    return 0


def _cmd_compare(args) -> int:
    a = load_spec(args.spec_a)
    b = load_spec(args.spec_b)
    witness = find_rescaling(a, b)
    if witness.relation == IDENTICAL:
        print("identical")
        return 0
    if witness.relation == EQUIVALENT:
        print(f"equivalent modulo rescaling, kappa = {_scalar_text(witness.kappa)}")
        return 0
    print("inequivalent")
    return 1


def _cmd_transform(args) -> int:
    cascade = load_spec(args.spec)
    samples = read_signal(args.signal, cascade.mode, cascade.reversible)
    if args.direction == "analyze":
        bands = analyze_signal(cascade, samples)
        out = list(bands.lowpass) + list(bands.highpass)
    else:
        if len(samples) % 2 != 0:
            raise ValueError(
                "subband file must hold lowpass then highpass blocks of equal "
                f"length; got {len(samples)} samples"
            )
        half = len(samples) // 2
        bands = SubbandPair(tuple(samples[:half]), tuple(samples[half:]))
        out = synthesize_signal(cascade, bands)
    _write_text("".join(format_sample(s) + "\n" for s in out), args.output)
    return 0


def _cmd_factor(args) -> int:
    with open(args.matrix, "r", encoding="utf-8") as fh:
        matrix = parse_matrix(fh.read(), EXACT)
    first = LOWPASS_FIRST if args.first == "lowpass" else HIGHPASS_FIRST
    strategy = FactorStrategy(reduction=args.reduction, first_channel=first)
    cascade = factor_lifting(matrix, strategy)
    _write_text(serialize_spec(cascade), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liftbank",
        description="Analyze, transform and factor two-channel lifting filter banks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report on a cascade spec")
    p.add_argument("spec", help="cascade spec file (JSON)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser(
        "validate", help="gain-normalization check; exit 0 iff compliant"
    )
    p.add_argument("spec")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("rescale", help="apply a rescaling equivalence")
    p.add_argument("spec")
    p.add_argument("--kappa", required=True, help='scale factor ("3/2", "2", "0.5")')
    p.add_argument("-o", "--output", default=None, help="output spec file (default stdout)")
    p.set_defaults(func=_cmd_rescale)

    p = sub.add_parser("compare", help="test two specs for rescaling equivalence")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("transform", help="run a signal through the bank")
    p.add_argument("spec")
    p.add_argument("signal", help="signal file, one sample per line")
    p.add_argument(
        "--direction",
        choices=("analyze", "synthesize"),
        default="analyze",
        help="analyze: signal -> subbands; synthesize: subbands -> signal",
    )
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("factor", help="factor a polyphase matrix into lifting steps")
    p.add_argument("matrix", help="matrix file (JSON 2x2 array of tap lists)")
    p.add_argument("--reduction", choices=(HIGH_END, LOW_END), default=HIGH_END)
    p.add_argument(
        "--first",
        choices=("lowpass", "highpass"),
        default="lowpass",
        help="channel whose entry is reduced on equal support",
    )
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_factor)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FactorizationError, ModeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
