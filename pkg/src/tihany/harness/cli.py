"""Command line: ``gen``, ``sweep``, ``hunt`` and ``explain``.

Exit codes: 0 clean, 1 usage or I/O error, 2 violation found, 3 unknowns
(some search ran out of budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..graph6 import encode
from .explain import explain
from .families import FAMILIES, generate
from .hunt import hunt
from .sweep import EXIT_CLEAN, EXIT_USAGE, ConfigError, SweepConfig, SweepReport, run_sweep


def _params(text: str | None) -> dict:
    if not text:
        return {}
    path = Path(text)
    raw = path.read_text() if path.is_file() else text
    data = json.loads(raw)
    if not isinstance(data, dict):
        raise ConfigError("--params must be a JSON object")
    return data


def cmd_gen(args: argparse.Namespace) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    params = _params(args.params)
    lines = []
    for seed in range(args.seed, args.seed + args.count):
        inst = generate(args.family, seed, params)
        g6 = encode(inst.graph)
        lines.append(g6 + "\n")
        (out / f"{inst.id}.g6").write_text(g6 + "\n")
        sidecar = {
            "id": inst.id, "family": inst.family, "seed": seed, "params": params,
            "labels": list(inst.labeled.labels), "detail": inst.detail,
        }
        (out / f"{inst.id}.json").write_text(json.dumps(sidecar, sort_keys=True, indent=1) + "\n")
    (out / f"{args.family}.g6").write_text("".join(lines))
    print(f"wrote {args.count} {args.family} instances to {out}")
    return EXIT_CLEAN


def cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig.load(args.config)
    if args.workers:
        config = SweepConfig.from_dict({**config.to_dict(), "workers": args.workers})
    report = run_sweep(config)
    text = report.to_json(timings=not args.no_timings) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    print(json.dumps(report.summary, sort_keys=True))
    return report.exit_code


def cmd_hunt(args: argparse.Namespace) -> int:
    config = SweepConfig.load(args.config)
    result = hunt(config, args.bundle)
    summary = {
        **result.report.summary,
        "partition_failures": sum(1 for f in result.failures if f["kind"] == "no-partition"),
        "partition_unknowns": len(result.unknowns),
        "bundle": str(result.bundle) if result.bundle else None,
    }
    print(json.dumps(summary, sort_keys=True))
    if result.failures:
        print("counterexample candidates found; see the bundle" if result.bundle
              else "counterexample candidates found; pass --bundle DIR to save them", file=sys.stderr)
    else:
        print("none")
    return result.exit_code


def cmd_explain(args: argparse.Namespace) -> int:
    report = SweepReport.load(args.report)
    try:
        print(explain(report, args.id))
    except KeyError:
        print(f"unknown instance id {args.id!r}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_CLEAN


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tihany", description="Tihany clique checks for claw-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write seeded instances of one family as graph6 plus JSON labels")
    g.add_argument("--family", required=True, choices=sorted(FAMILIES))
    g.add_argument("--params", help="JSON object or path to a JSON file")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("sweep", help="evaluate a configured corpus and write a JSON report")
    s.add_argument("--config", required=True)
    s.add_argument("--out")
    s.add_argument("--workers", type=int)
    s.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable reports")
    s.set_defaults(func=cmd_sweep)

    h = sub.add_parser("hunt", help="sweep plus partition checks; bundle any failure")
    h.add_argument("--config", required=True)
    h.add_argument("--bundle", help="directory for counterexample bundles")
    h.set_defaults(func=cmd_hunt)

    e = sub.add_parser("explain", help="print the certificate for one instance of a report")
    e.add_argument("--report", required=True)
    e.add_argument("--id", required=True)
    e.set_defaults(func=cmd_explain)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_CLEAN
    try:
        return args.func(args)
    except (ConfigError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
