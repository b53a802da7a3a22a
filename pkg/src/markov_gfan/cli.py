"""Command-line front end: ``markov-gfan {verify,enum,param,locate,render}``.

Exit codes: 0 on success, 1 when a verification suite fails, 2 for
configuration or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from typing import Optional, Sequence

from .config import SUITES, ConfigError, RunConfig, parse_matrix
from .cw import c_from_params, g_from_coprime, valid_c_params, walk_for_g_params
from .errors import GfanError
from .gfan import fan_snapshot, locate
from .render import render_svg
from .verify import run_suites

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _add_common(p: argparse.ArgumentParser, depth: int) -> None:
    p.add_argument("--matrix", default="markov", help="markov | integer2 [:-] | custom:p,pp,q,qp,r,rp,sign")
    p.add_argument("--depth", type=int, default=depth, help="maximum walk length")
    p.add_argument("--bound", type=int, default=12, help="bound on a+b for coprime parameters")
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--backend", choices=("c", "python"), help="kernel backend (default: compiled if built)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="markov-gfan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification suites and print a JSON report")
    _add_common(p, 8)
    p.add_argument("--suite", action="append", help=f"suite name, repeatable or comma separated ({', '.join(SUITES)})")
    p.add_argument("--samples", type=int, default=100, help="sampled pairs for the fractal suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("enum", help="export the fan snapshot")
    _add_common(p, 6)
    p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("param", help="table of coprime parameters and vectors")
    _add_common(p, 6)
    p.add_argument("--subtree", type=int, choices=(1, 2, 3), help="initial direction (default: all)")
    p.add_argument("--side", choices=("g", "c"), default="g")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("locate", help="classify a point against cones and complement rays")
    _add_common(p, 8)
    p.add_argument("point", help="modified coordinates x1,x2,x3 (integers)")
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("render", help="draw the fan section as SVG")
    _add_common(p, 8)
    p.add_argument("--format", choices=("svg",), default="svg")
    return parser


def _config(args) -> RunConfig:
    suites = SUITES
    if getattr(args, "suite", None):
        suites = tuple(s.strip() for chunk in args.suite for s in chunk.split(",") if s.strip())
    return RunConfig(
        matrix=parse_matrix(args.matrix),
        depth=args.depth,
        bound=args.bound,
        samples=getattr(args, "samples", 100),
        seed=getattr(args, "seed", 0),
        suites=suites,
        out=args.out,
        format=args.format,
        subtree=getattr(args, "subtree", None),
        backend=args.backend,
        side=getattr(args, "side", "g"),
    )


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    report = run_suites(cfg)
    return (EXIT_OK if report["ok"] else EXIT_FAIL), _dump(report)


def cmd_enum(cfg: RunConfig) -> tuple[int, str]:
    snap = fan_snapshot(cfg.pattern, cfg.depth, cfg.backend)
    if cfg.format == "json":
        return EXIT_OK, _dump(snap)
    rows = ["kind\twalk_or_subtree\tdata"]
    for c in snap["cones"]:
        rows.append("cone\t{}\t{}".format(c["walk"], ";".join(",".join(map(str, g)) for g in c["gens"])))
    for r in snap["complements"]:
        rows.append("complement\t{}\ta={},b={}".format(r["subtree"], r["a"], r["b"]))
    return EXIT_OK, "\n".join(rows) + "\n"


def _param_rows(cfg: RunConfig) -> list[dict]:
    rows = []
    for i in (cfg.subtree,) if cfg.subtree else (1, 2, 3):
        if cfg.side == "g":
            pairs = [(a, s - a) for s in range(2, cfg.bound + 1) for a in range(1, s) if gcd(a, s - a) == 1]
            for a, b in [(1, 0)] + pairs:
                w = walk_for_g_params(cfg.pattern, i, a, b)
                vec = list(g_from_coprime(cfg.pattern, i, a, b))
                rows.append({"subtree": i, "a": a, "b": b, "vector": vec, "walk": str(w) if w else "initial"})
        else:
            span = range(-cfg.bound, cfg.bound + 1)
            cells = sorted(((a, b) for a in span for b in span if abs(a) + abs(b) <= cfg.bound),
                           key=lambda ab: (abs(ab[0]) + abs(ab[1]), ab))
            for a, b in cells:
                for eps in (1, -1):
                    if valid_c_params(eps, a, b):
                        vec = list(c_from_params(cfg.pattern, i, eps, a, b))
                        rows.append({"subtree": i, "eps": eps, "a": a, "b": b, "vector": vec})
    return rows


def cmd_param(cfg: RunConfig) -> tuple[int, str]:
    rows = _param_rows(cfg)
    if cfg.format == "json":
        return EXIT_OK, _dump(rows)
    keys = list(rows[0]) if rows else []
    out = ["\t".join(keys)]
    for r in rows:
        out.append("\t".join(",".join(map(str, v)) if isinstance(v, list) else str(v) for v in r.values()))
    return EXIT_OK, "\n".join(out) + "\n"


def _parse_point(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"point must be three integers x1,x2,x3, got {text!r}") from None
    if len(parts) != 3:
        raise ConfigError(f"point must have three coordinates, got {text!r}")
    return parts


def cmd_locate(cfg: RunConfig, point: str) -> tuple[int, str]:
    result = locate(_parse_point(point), cfg.depth, cfg.bound, cfg.pattern, cfg.backend)
    return EXIT_OK, _dump(result.to_json())


def cmd_render(cfg: RunConfig) -> tuple[int, str]:
    return EXIT_OK, render_svg(cfg.pattern, cfg.depth, None, cfg.backend)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "verify":
            code, text = cmd_verify(cfg)
        elif args.command == "enum":
            code, text = cmd_enum(cfg)
        elif args.command == "param":
            code, text = cmd_param(cfg)
        elif args.command == "locate":
            code, text = cmd_locate(cfg, args.point)
        else:
            code, text = cmd_render(cfg)
        _emit(text, cfg.out)
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"markov-gfan: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (GfanError, OSError) as exc:
        print(f"markov-gfan: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return code


if __name__ == "__main__":
    sys.exit(main())
