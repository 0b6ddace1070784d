"""Command-line front end.

Commands: analyze, test, cond, mutual, simulate, calibrate, audit.
Exit status: 0 on success, 1 when the test command rejects, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .coders import CODER_NAMES, CoderId, coder_from_name
from .inputs import INPUT_FORMATS, InputSource, read_word
from .simulate import GeneratorSpec, convergence_trace, geometric_schedule
from .stats import (
    ConstantWordError,
    ZeroMutualBaselineError,
    adjusted,
    adjusted_conditional,
    adjusted_mutual,
    sig6,
)
from .testing import TestConfig, counting_lemma_audit, monte_carlo_fpr, test_word
from .words import BitWord

USAGE_ERROR = 2


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation of one CLI command."""

    command: str
    coder: CoderId | None = None
    m: int = 5
    seed: int = 1
    length: int | None = None
    measure: str | None = None
    fmt: str = "table"
    schedule: str | None = None
    trials: int = 10000
    inputs: tuple[str, ...] = ()
    input_format: str = "ascii01"
    max_bits: int | None = None
    lengths: str = "ideal"


def parse_measure(text: str, seed: int, length: int) -> GeneratorSpec:
    """Parse bernoulli:p | mixture:w1:p1,... | block into a GeneratorSpec."""
    kind, _, rest = text.partition(":")
    if kind == "bernoulli":
        return GeneratorSpec.bernoulli(float(rest), seed, length)
    if kind == "mixture":
        components = []
        for part in rest.split(","):
            w, _, p = part.partition(":")
            if not p:
                raise ValueError(f"bad mixture component {part!r}, expected w:p")
            components.append((float(w), float(p)))
        return GeneratorSpec.mixture(components, seed, length)
    if kind == "block":
        if rest:
            raise ValueError("block measure takes no parameters")
        return GeneratorSpec.block(seed, length)
    raise ValueError(f"unknown measure {kind!r}")


def parse_schedule(text: str | None, length: int) -> list[int]:
    if text is None:
        return geometric_schedule(length)
    points = [int(v) for v in text.split(",") if v.strip()]
    if not points:
        raise ValueError("empty schedule")
    return points


def _emit_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        keys = list(records[0].keys())
        out.write(",".join(keys) + "\n")
        for rec in records:
            out.write(",".join("" if rec[k] is None else str(rec[k]) for k in keys) + "\n")
    else:
        for rec in records:
            width = max(len(k) for k in rec)
            for k, v in rec.items():
                out.write(f"{k:<{width}}  {'-' if v is None else v}\n")
            out.write("\n")


def _read_inputs(cfg: RunConfig, expected: int | None = None) -> list[BitWord]:
    paths = list(cfg.inputs) or [None]
    if expected is not None and len(paths) != expected:
        raise ValueError(f"this command requires exactly {expected} input words")
    return [
        read_word(InputSource(format=cfg.input_format, path=p, max_bits=cfg.max_bits))
        for p in paths
    ]


def _constant_record(word: BitWord, coder: CoderId) -> dict:
    from .coders import code_word

    return {
        "n": word.n,
        "w": word.weight,
        "H": 0.0,
        "baseline": 0.0,
        "k_eff": sig6(code_word(coder, word).ideal_len),
        "KA": None,
        "R": None,
        "deficiency": None,
        "coder": coder.label,
    }


def cmd_analyze(cfg: RunConfig, out) -> int:
    records = []
    for word in _read_inputs(cfg):
        try:
            records.append(adjusted(word, cfg.coder, cfg.lengths).to_record())
        except ConstantWordError:
            records.append(_constant_record(word, cfg.coder))
    _emit_records(records, cfg.fmt, out)
    return 0


def cmd_test(cfg: RunConfig, out) -> int:
    tc = TestConfig(m=cfg.m, coder=cfg.coder, lengths=cfg.lengths)
    verdicts = [test_word(word, tc) for word in _read_inputs(cfg)]
    _emit_records([v.to_record() for v in verdicts], cfg.fmt, out)
    return 1 if any(v.rejected for v in verdicts) else 0


def cmd_cond(cfg: RunConfig, out) -> int:
    x, y = _read_inputs(cfg, expected=2)
    rec = adjusted_conditional(x, y, cfg.coder, cfg.lengths).to_record()
    _emit_records([rec], cfg.fmt, out)
    return 0


def cmd_mutual(cfg: RunConfig, out) -> int:
    x, y = _read_inputs(cfg, expected=2)
    rec = adjusted_mutual(x, y, cfg.coder, cfg.lengths).to_record()
    _emit_records([rec], cfg.fmt, out)
    return 0


def cmd_simulate(cfg: RunConfig, out) -> int:
    spec = parse_measure(cfg.measure, cfg.seed, cfg.length)
    schedule = parse_schedule(cfg.schedule, cfg.length)
    trace = convergence_trace(spec, cfg.coder, schedule)
    if cfg.fmt == "json":
        for row in trace.rows:
            out.write(
                json.dumps(
                    {
                        "m": row.m,
                        "p_hat": sig6(row.p_hat),
                        "H": sig6(row.H),
                        "K_eff": sig6(row.k_eff),
                        "R": sig6(row.R),
                        "coder": trace.coder.label,
                    }
                )
                + "\n"
            )
    else:
        trace.to_csv(out)
    return 0


def cmd_calibrate(cfg: RunConfig, out) -> int:
    kind, _, rest = (cfg.measure or "").partition(":")
    if kind != "bernoulli":
        raise ValueError("calibration requires a bernoulli:p measure")
    tc = TestConfig(m=1, coder=cfg.coder, lengths=cfg.lengths)
    result = monte_carlo_fpr(float(rest), cfg.length, tc, cfg.trials, cfg.seed)
    result.to_csv(out)
    return 0


def cmd_audit(cfg: RunConfig, out) -> int:
    rows = counting_lemma_audit(cfg.length, cfg.coder)
    out.write("k,t,count,bound,ok\n")
    violations = 0
    for row in rows:
        violations += 0 if row.ok else 1
        out.write(f"{row.k},{row.t},{row.count},{row.bound:.6g},{row.ok}\n")
    out.write(f"# violations: {violations}\n")
    return 0


_COMMANDS = {
    "analyze": cmd_analyze,
    "test": cmd_test,
    "cond": cmd_cond,
    "mutual": cmd_mutual,
    "simulate": cmd_simulate,
    "calibrate": cmd_calibrate,
    "audit": cmd_audit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kadjust",
        description="Entropy-adjusted description-length statistics and randomness tests "
        "for binary words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_inputs=True, coder_default="shell"):
        p.add_argument("--coder", default=coder_default, choices=CODER_NAMES)
        p.add_argument("--format", dest="fmt", default=None, choices=("json", "csv", "table"))
        p.add_argument("--seed", type=int, default=1)
        if with_inputs:
            p.add_argument("inputs", nargs="*", help="input files (default: stdin)")
            p.add_argument("--input-format", default="ascii01", choices=INPUT_FORMATS)
            p.add_argument("--max-bits", type=int, default=None)
            p.add_argument("--lengths", default="ideal", choices=("ideal", "concrete"))

    p = sub.add_parser("analyze", help="adjusted-complexity report for words")
    add_common(p)

    p = sub.add_parser("test", help="deficiency randomness test (exit 1 on rejection)")
    add_common(p)
    p.add_argument("--m", type=int, default=5, help="deficiency threshold in bits")

    p = sub.add_parser("cond", help="conditional report for a pair of words")
    add_common(p)

    p = sub.add_parser("mutual", help="mutual-information report for a pair of words")
    add_common(p)

    p = sub.add_parser("simulate", help="convergence trace for a seeded measure")
    add_common(p, with_inputs=False)
    p.add_argument("--measure", required=True, help="bernoulli:p | mixture:w1:p1,... | block")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--schedule", default=None, help="comma-separated prefix lengths")

    p = sub.add_parser("calibrate", help="Monte Carlo false-positive calibration")
    add_common(p, with_inputs=False)
    p.add_argument("--measure", required=True, help="bernoulli:p")
    p.add_argument("--length", type=int, required=True, help="word length per trial")
    p.add_argument("--trials", type=int, default=10000)

    p = sub.add_parser("audit", help="exhaustive counting-lemma audit")
    add_common(p, with_inputs=False, coder_default="model_class")
    p.add_argument("--length", type=int, required=True, help="word length n <= 16")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        coder = coder_from_name(args.coder)
        cfg = RunConfig(
            command=args.command,
            coder=coder,
            m=getattr(args, "m", 5),
            seed=args.seed,
            length=getattr(args, "length", None),
            measure=getattr(args, "measure", None),
            fmt=args.fmt or ("csv" if args.command in ("simulate", "calibrate", "audit") else "table"),
            schedule=getattr(args, "schedule", None),
            trials=getattr(args, "trials", 10000),
            inputs=tuple(getattr(args, "inputs", ()) or ()),
            input_format=getattr(args, "input_format", "ascii01"),
            max_bits=getattr(args, "max_bits", None),
            lengths=getattr(args, "lengths", "ideal"),
        )
        return _COMMANDS[args.command](cfg, sys.stdout)
    except (ValueError, ZeroMutualBaselineError, OSError) as exc:
        print(f"kadjust: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
