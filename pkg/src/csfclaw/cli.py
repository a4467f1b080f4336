"""Command-line interface.

Exit codes: 0 success, 1 a check failed (or hunt records were skipped),
2 usage or parse error, 3 capacity exceeded.

Every flag can also come from the environment as ``CSFCLAW_<FLAG>``, e.g.
``CSFCLAW_EDGE_CAP=24``; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass

from . import graph as gr
from .chromatic import (
    DEFAULT_COLOURING_BUDGET,
    DEFAULT_EDGE_CAP,
    compute_csf,
    count_proper_colourings,
)
from .clawtest import claw_report
from .errors import CapacityError, CsfError, DomainError, Graph6Error
from .hunt import DEFAULT_CHECKPOINT_INTERVAL, builtin_corpus, file_corpus, hunt, parse_filters
from .partition import format_partition
from .symfunc import coefficient_of, is_e_positive, render, specialize_power, to_json
from .verify import expand_selector, format_table, run_checks

ENV_PREFIX = "CSFCLAW_"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


@dataclass(frozen=True)
class Config:
    edge_cap: int = DEFAULT_EDGE_CAP
    colouring_budget: int = DEFAULT_COLOURING_BUDGET
    workers: int = os.cpu_count() or 1
    checkpoint_interval: int = DEFAULT_CHECKPOINT_INTERVAL
    format: str = "text"

    def __post_init__(self):
        for name in ("edge_cap", "colouring_budget", "workers", "checkpoint_interval"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be positive")
        if self.format not in ("text", "json"):
            raise DomainError(f"format must be 'text' or 'json', not {self.format!r}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {text!r}") from None


_FAMILIES = {
    "sa": (gr.make_saltire, 2),
    "as": (gr.make_augmented_saltire, 2),
    "tt": (gr.make_triangular_tower, 3),
    "path": (gr.make_path, 1),
    "cycle": (gr.make_cycle, 1),
    "complete": (gr.make_complete, 1),
    "kbip": (gr.make_complete_bipartite, 2),
}


def parse_graph_spec(spec: str) -> gr.Graph:
    """``claw``, ``ak33``, ``sa:3,3``, ``as:3,4``, ``tt:3,3,3``, ``path:5``,
    ``cycle:6``, ``complete:4``, ``kbip:3,3`` or ``g6:<graph6>``."""
    name, _, args = spec.partition(":")
    name = name.strip().lower()
    if name == "g6":
        return gr.from_graph6(args)
    if name == "claw" and not args:
        return gr.make_claw()
    if name == "ak33" and not args:
        return gr.make_ak33()
    if name not in _FAMILIES or not args:
        raise DomainError(f"unrecognised graph spec {spec!r}")
    make, arity = _FAMILIES[name]
    values = _ints(args)
    if len(values) != arity:
        raise DomainError(f"{name} takes {arity} parameter(s), got {len(values)}")
    return make(*values)


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise DomainError(f"bad range {text!r}; use N or A..B") from None
    if b < a:
        raise DomainError(f"empty range {text!r}")
    return list(range(a, b + 1))


def _env(name: str, default):
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return default
    return type(default)(raw) if not isinstance(default, str) else raw


def _config(args) -> Config:
    base = Config()
    pick = lambda flag, key: getattr(args, flag, None) if getattr(args, flag, None) is not None else _env(key, getattr(base, key))
    return Config(
        edge_cap=pick("edge_cap", "edge_cap"),
        colouring_budget=pick("colouring_budget", "colouring_budget"),
        workers=pick("workers", "workers"),
        checkpoint_interval=pick("checkpoint_interval", "checkpoint_interval"),
        format=pick("format", "format"),
    )


def _emit(obj, cfg: Config, text: str) -> None:
    print(json.dumps(obj, sort_keys=True) if cfg.format == "json" else text)


def cmd_csf(args, cfg: Config) -> int:
    g = parse_graph_spec(args.graph)
    result = compute_csf(g, cap=cfg.edge_cap, with_e=args.basis == "e", workers=cfg.workers if g.m >= 20 else 1)
    expr = result.e_expansion if args.basis == "e" else result.power_expansion
    payload = {"graph6": gr.to_graph6(g), **to_json(expr)}
    _emit(payload, cfg, render(expr))
    return EXIT_OK


def cmd_check(args, cfg: Config) -> int:
    g = parse_graph_spec(args.graph)
    report = claw_report(g, cap=cfg.edge_cap)
    e = compute_csf(g, cap=cfg.edge_cap).e_expansion
    positive, witness = is_e_positive(e)
    verdict = {
        "graph6": gr.to_graph6(g),
        **report.to_json(),
        "e_positive": positive,
        "witness": format_partition(witness) if witness else None,
        "witness_coefficient": str(coefficient_of(e, witness)) if witness else None,
    }
    if cfg.format == "json":
        print(json.dumps(verdict, sort_keys=True))
    else:
        for key in ("graph6", "claw_free", "ccf", "e_positive", "witness", "witness_coefficient"):
            print(f"{key}: {verdict[key]}")
    return EXIT_OK


def cmd_colourings(args, cfg: Config) -> int:
    g = parse_graph_spec(args.graph)
    count = count_proper_colourings(g, args.m, budget=cfg.colouring_budget)
    spec_value = specialize_power(compute_csf(g, cap=cfg.edge_cap, with_e=False).power_expansion, args.m)
    agree = spec_value == count
    _emit({"m": args.m, "count": count, "specialization": str(spec_value), "agree": agree}, cfg,
          f"proper {args.m}-colourings: {count}; X_G at {args.m} ones: {spec_value}")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args, cfg: Config) -> int:
    selectors = ["all"] if args.all or not args.lemmas else args.lemmas
    rows = run_checks(expand_selector(selectors), parse_range(args.n), cap=cfg.edge_cap, workers=cfg.workers)
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            for r in rows:
                fh.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
    if cfg.format == "json":
        for r in rows:
            print(json.dumps(r.to_json(), sort_keys=True))
    else:
        print(format_table(rows))
        print(f"{sum(r.passed for r in rows)}/{len(rows)} passed")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def cmd_hunt(args, cfg: Config) -> int:
    if (args.builtin is None) == (args.graph6 is None):
        raise DomainError("give exactly one of --builtin N or --graph6 FILE")
    corpus = builtin_corpus(args.builtin) if args.builtin is not None else file_corpus(args.graph6)
    order = tuple(x.strip() for x in args.order.split(",")) if args.order else None
    kwargs = {"order": order} if order else {}
    summary = hunt(
        corpus,
        parse_filters(args.filters),
        args.out,
        cap=cfg.edge_cap,
        workers=cfg.workers,
        checkpoint=args.checkpoint,
        checkpoint_interval=cfg.checkpoint_interval,
        resume=args.resume,
        strict=args.strict,
        **kwargs,
    )
    out = dict(summary)
    out["hits"] = [r.to_json() for r in summary["hits"]]
    print(json.dumps(out, sort_keys=True))
    t = summary["tallies"]
    return EXIT_FAIL if t["skipped"] or t["malformed"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--edge-cap", type=int, default=None, help=f"max edges for subset walks (default {DEFAULT_EDGE_CAP})")
    common.add_argument("--workers", type=int, default=None, help="worker processes (default: CPU count)")
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--colouring-budget", type=int, default=None)
    common.add_argument("--checkpoint-interval", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="csfclaw", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("csf", parents=[common], help="chromatic symmetric function of one graph")
    s.add_argument("graph")
    s.add_argument("--basis", choices=("p", "e"), default="e")
    s.set_defaults(func=cmd_csf)

    s = sub.add_parser("check", parents=[common], help="claw status and e-positivity of one graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("colourings", parents=[common], help="count proper m-colourings and compare with X_G")
    s.add_argument("graph")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_colourings)

    s = sub.add_parser("verify", parents=[common], help="check closed-form coefficient lemmas")
    s.add_argument("lemmas", nargs="*", help="lemma ids, e.g. 3.3 3.8 4.5")
    s.add_argument("--all", action="store_true")
    s.add_argument("--n", default="3..6", help="N or A..B (default 3..6)")
    s.add_argument("--jsonl", help="also write rows as JSONL to this path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("hunt", parents=[common], help="exhaustive scan of connected graphs")
    s.add_argument("--builtin", type=int, help="enumerate connected graphs on N <= 7 vertices")
    s.add_argument("--graph6", help="graph6 corpus file")
    s.add_argument("--filters", default="ccf,not-epos")
    s.add_argument("--order", help="predicate evaluation order, e.g. epos,claw-free,ccf")
    s.add_argument("--out", help="JSONL sink")
    s.add_argument("--checkpoint", help="checkpoint file")
    s.add_argument("--resume", action="store_true")
    s.add_argument("--strict", action="store_true", help="abort on the first malformed line")
    s.set_defaults(func=cmd_hunt)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DomainError, Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CsfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
