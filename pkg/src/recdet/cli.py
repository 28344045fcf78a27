"""Command-line front end: ``recdet seq``, ``recdet det`` and ``recdet verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional

from .engines import ENGINES, determinant
from .errors import RecdetError, TooLarge
from .identities import build_matrix
from .matrices import IdentityCase, IndexProfile, parse_matrix
from .sequences import parse_family
from .sweep import (
    COROLLARIES,
    SWEEP_THEOREMS,
    SweepConfig,
    apply_option,
    load_config,
    parse_int_list,
    run_sweep,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(parser: argparse.ArgumentParser, default):
    parser.add_argument("--format", choices=("text", "json"), default=default)
    parser.add_argument("--seed", type=int, default=default)
    parser.add_argument("--engine", choices=ENGINES + ("all",), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="recdet", description=__doc__.splitlines()[0])
    _common(parser, None)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    seq = sub.add_parser("seq", help="print sequence terms")
    _common(seq, argparse.SUPPRESS)
    seq.add_argument("family", help="fib, lucas, chebT, chebS or a 'p,q,r;a,b,c' literal")
    seq.add_argument("range", help="index range a..b (negative indices allowed)")

    det = sub.add_parser("det", help="compute a determinant")
    _common(det, argparse.SUPPRESS)
    det.add_argument("--matrix-file", type=Path)
    det.add_argument("--theorem", choices=("2", "3", "3.5", "4"))
    det.add_argument("--family", default="fib")
    for name, default in (("s", 0), ("k", 1), ("n", 0), ("m", 1), ("d", 1)):
        det.add_argument(f"--{name}", type=int, default=default)
    det.add_argument("--d-seq", help="comma separated d_1..d_m")
    det.add_argument("--e-seq", help="comma separated e_1..e_m")

    ver = sub.add_parser("verify", help="run an identity verification sweep")
    _common(ver, argparse.SUPPRESS)
    ver.add_argument("--config", type=Path, help="flat key = value config file")
    ver.add_argument("--theorem", action="append", choices=SWEEP_THEOREMS)
    ver.add_argument("--family", action="append")
    ver.add_argument("--corollary", action="append", choices=COROLLARIES)
    ver.add_argument("--random-specs", type=int)
    for name in ("s", "k", "n", "m", "d", "ij"):
        ver.add_argument(f"--{name}", metavar="RANGE")
    ver.add_argument("--profile-mode", choices=("fixed", "random"))
    ver.add_argument("--profiles", type=int)
    ver.add_argument("--profile-bound", type=int)
    ver.add_argument("--x", action="append", help="specialize at this rational point")
    ver.add_argument("--jobs", type=int)
    ver.add_argument("--output", type=Path, help="write the report here instead of stdout")
    return parser


def _protect_negative(argv: List[str]) -> List[str]:
    # argparse treats "-2..4" as an option; a leading space keeps it positional
    return [" " + a if re.match(r"-\d", a) else a for a in argv]


def _unprotect(value):
    return value.strip() if isinstance(value, str) else value


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_protect_negative(argv))
        for key, value in vars(args).items():
            setattr(args, key, _unprotect(value))
        if args.command is None:
            raise UsageError("a subcommand is required: seq, det or verify")
        fmt = args.format or "text"
        if args.command == "seq":
            return cmd_seq(args, fmt)
        if args.command == "det":
            return cmd_det(args, fmt)
        return cmd_verify(args, fmt)
    except (UsageError, RecdetError, ValueError, OSError) as exc:
        print(f"recdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def cmd_seq(args, fmt: str) -> int:
    family = parse_family(args.family)
    indices = parse_int_list(args.range)
    seq = family_sequence(family)
    if fmt == "json":
        print(json.dumps([{"n": n, "term": str(seq[n])} for n in indices], indent=2))
    else:
        for n in indices:
            print(f"{n}: {seq[n]}")
    return EXIT_OK


def family_sequence(family):
    from .sequences import sequence_for

    return sequence_for(family.spec)


def _det_matrix(args):
    if args.matrix_file is not None:
        if args.theorem is not None:
            raise UsageError("use either --matrix-file or --theorem, not both")
        return parse_matrix(args.matrix_file.read_text(encoding="utf-8"))
    if args.theorem is None:
        raise UsageError("det needs --matrix-file or --theorem")
    spec = parse_family(args.family).spec
    profile = None
    if args.theorem == "3":
        if not args.d_seq or not args.e_seq:
            raise UsageError("theorem 3 needs --d-seq and --e-seq")
        profile = IndexProfile(parse_int_list(args.d_seq), parse_int_list(args.e_seq))
    case = IdentityCase(spec, args.s, args.k, args.n, args.m, args.d, profile)
    return build_matrix(args.theorem, case)


def cmd_det(args, fmt: str) -> int:
    mat = _det_matrix(args)
    engine = args.engine or "bareiss"
    if engine != "all":
        out = determinant(mat, engine)
        if fmt == "json":
            print(json.dumps({"engine": engine, "determinant": str(out.value),
                              "fallback_used": out.fallback_used}, indent=2))
        else:
            print(out.value)
        return EXIT_OK
    values, skipped, fallback = {}, {}, False
    for eng in ENGINES:
        try:
            out = determinant(mat, eng)
        except TooLarge as exc:
            skipped[eng] = str(exc)
            continue
        values[eng] = out.value
        fallback = fallback or out.fallback_used
    consistent = len(set(values.values())) == 1
    if fmt == "json":
        print(json.dumps({"engines": {k: str(v) for k, v in values.items()}, "skipped": skipped,
                          "consistent": consistent, "fallback_used": fallback}, indent=2))
    else:
        for eng in ENGINES:
            print(f"{eng}: {values[eng]}" if eng in values else f"{eng}: skipped ({skipped[eng]})")
        print(f"consistent: {str(consistent).lower()}")
    return EXIT_OK if consistent else EXIT_FAIL


def sweep_config(args) -> SweepConfig:
    cfg = SweepConfig()
    if args.config is not None:
        cfg = load_config(args.config.read_text(encoding="utf-8"), cfg)
    for name in ("s", "k", "n", "m", "d", "ij"):
        value = getattr(args, name)
        if value is not None:
            apply_option(cfg, name, value)
    if args.family:
        cfg.families = args.family
    if args.theorem:
        cfg.theorems = args.theorem
    if args.corollary:
        cfg.corollaries = args.corollary
    if args.x:
        cfg.x_points = args.x
    for name in ("random_specs", "profile_mode", "profiles", "profile_bound", "jobs", "engine", "seed"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    if args.format is not None:
        cfg.output_format = args.format
    return cfg.validate()


def cmd_verify(args, fmt: str) -> int:
    cfg = sweep_config(args)
    report = run_sweep(cfg)
    if cfg.output_format == "json":
        text = json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    else:
        text = format_text_report(report)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return report.exit_code


def format_text_report(report) -> str:
    s = report.summary
    lines = []
    for v in report.verdicts:
        if v.status in ("unequal", "error"):
            tag = "expected" if v.whitelisted else v.status.upper()
            detail = v.error if v.error else f"difference = {v.difference}"
            extra = "/".join(filter(None, (v.corollary, v.variant, v.constant)))
            lines.append(f"[{tag}] theorem {v.theorem} {v.family} {extra} {_params_text(v.params)}: {detail}")
    lines.append(
        f"total {s['total']}: equal {s['equal']}, degenerate-ok {s['degenerate_ok']}, "
        f"unequal {s['unequal']}, expected-unequal {s['expected_unequal']}, errors {s['errors']}"
    )
    lines.append(f"theorem 4 reading supported: {s['thm4_variant_supported']}")
    for which, adj in s["corollary_constants"].items():
        lines.append(f"{which} discriminant supported: {adj['supported']}")
    return "\n".join(lines) + "\n"


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items() if v is not None)


if __name__ == "__main__":
    sys.exit(main())
