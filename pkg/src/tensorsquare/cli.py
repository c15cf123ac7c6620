"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 enumeration overflow,
3 invalid input, 4 internal assertion.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from . import nu as nm
from .catalog import ALIASES, CATALOG, UnknownGroup, load_corpus, resolve
from .config import RunConfig
from .coset_enum import DEFAULT_ELEMENT_CAP, DEFAULT_MAX_COSETS, CosetOverflow, ElementCapExceeded
from .groups import GroupError, GroupTable
from .presentation import PresentationError
from .theorems import run_suite

EXIT_FAIL, EXIT_OVERFLOW, EXIT_INPUT, EXIT_INTERNAL = 1, 2, 3, 4
SELECTORS = ("identities", "series", "splitting", "centers", "bounds", "lambdagroups", "oracle", "question", "all")
INPUT_FORMATS = {
    "NAME": "a catalog name or alias",
    "gdc:d,c,p": "free class-c group on d generators with exponent-p central series",
    "table:FILE": "JSON object with 'order' and 'mul' (row-major table), optional 'name'",
    "presentation:FILE": "text '<a, b | a^4, b^2, (a*b)^2>' or JSON {'generators', 'relators'}",
}


# --------------------------------------------------------------------------
# rendering


def render_text(obj, indent: int = 0) -> str:
    """Stable line-per-field rendering of a JSON value."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return "\n".join(ln for ln in lines if ln)


def _flat(v) -> bool:
    if isinstance(v, dict):
        return not v
    return all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _meta(cfg: RunConfig) -> dict:
    cfg_d = cfg.to_dict()
    cfg_d.pop("cache_dir")
    cfg_d.pop("output")
    return {"tool": {"name": "tensorsquare", "version": __version__}, "config": cfg_d, "seed": cfg.seed}


def group_hash(G: GroupTable) -> str:
    h = hashlib.sha256()
    h.update(str(G.order).encode())
    h.update(G.action.tobytes())
    return h.hexdigest()[:16]


# --------------------------------------------------------------------------
# commands


def cmd_catalog(args, cfg: RunConfig) -> int:
    if args.ref:
        G = resolve(args.ref, cfg.max_cosets, cfg.element_cap)
        info = {"ref": args.ref, "name": G.name, "order": G.order,
                "generators": len(G.generators), "abelian": bool(G.is_abelian())}
        print(dump_json(info) if args.json else render_text(info))
        return 0
    entries = [{"name": e.name, "order": e.order, "description": e.description} for e in CATALOG.values()]
    if args.json:
        print(dump_json({"groups": entries, "aliases": ALIASES, "formats": INPUT_FORMATS}))
        return 0
    w = max(len(e["name"]) for e in entries)
    for e in entries:
        print(f"{e['name']:<{w}}  {e['order']:>4}  {e['description']}")
    print()
    print("aliases: " + ", ".join(f"{k}={v}" for k, v in ALIASES.items()))
    for k, v in INPUT_FORMATS.items():
        print(f"{k:<18} {v}")
    return 0


def compute_payload(ref: str, cfg: RunConfig) -> dict:
    t0 = time.perf_counter()
    G = resolve(ref, cfg.max_cosets, cfg.element_cap)
    ni = nm.nu_image(G, cfg.nu_mode, cfg.max_cosets, cfg.element_cap, seed=cfg.seed)
    report = nm.TensorAnalysis(ni).report().to_dict()
    out = _meta(cfg)
    out.update({"group": ref, "group_hash": group_hash(G), "transversal": report["transversal"],
                "report": report, "wall_time_s": round(time.perf_counter() - t0, 4)})
    return out


def cmd_compute(args, cfg: RunConfig) -> int:
    cache_file = None
    if cfg.cache_dir is not None:
        G = resolve(args.ref, cfg.max_cosets, cfg.element_cap)
        cache_file = Path(cfg.cache_dir) / f"{group_hash(G)}-{cfg.computation_key()}.json"
    if cache_file is not None and cache_file.exists():
        payload = json.loads(cache_file.read_text())
    else:
        payload = compute_payload(args.ref, cfg)
        if cache_file is not None:
            cache_file.parent.mkdir(parents=True, exist_ok=True)
            cache_file.write_text(dump_json(payload))
    print(dump_json(payload) if cfg.output == "json" else render_text(payload))
    return 0


def _verify_groups(args, cfg: RunConfig) -> list[str]:
    if args.group:
        return list(args.group)
    return load_corpus(cfg.corpus)


def cmd_verify(args, cfg: RunConfig) -> int:
    t0 = time.perf_counter()
    groups = _verify_groups(args, cfg)
    for g in groups:  # fail early on bad references
        key = ALIASES.get(g.lower(), g.lower())
        if key not in CATALOG and not key.startswith(("gdc:", "table:", "presentation:")):
            raise UnknownGroup(f"unknown group {g!r}")
    outcomes = run_suite(args.selector, groups, cfg)
    payload = _meta(cfg)
    payload.update({"selector": args.selector, "groups": groups,
                    "outcomes": [o.to_dict() for o in outcomes],
                    "wall_time_s": round(time.perf_counter() - t0, 4)})
    counts = {s: sum(o.status == s for o in outcomes) for s in ("pass", "fail", "skipped")}
    payload["summary"] = counts
    if cfg.output == "json":
        print(dump_json(payload))
    elif args.selector == "question":
        print(_question_table(outcomes))
    else:
        for o in outcomes:
            extra = o.reason if o.status == "skipped" else (json.dumps(o.to_dict()["witness"]) if o.status == "fail" else "")
            print(f"{o.status.upper():<7} {o.claim_id:<30} {o.group_name:<12} {extra}".rstrip())
        print(f"pass={counts['pass']} fail={counts['fail']} skipped={counts['skipped']} "
              f"seed={cfg.seed} version={__version__}")
    if args.selector == "question":
        return 0
    return EXIT_FAIL if counts["fail"] else 0


def _question_table(outcomes) -> str:
    rows = [("group", "|N|", "|[Zw cap G', G^phi]|", "equal")]
    for o in outcomes:
        if o.status == "skipped":
            rows.append((o.group_name, "-", "-", "skipped"))
        else:
            d = o.detail
            rows.append((o.group_name, str(d["n_subgroup"]), str(d["bracket_subgroup"]), str(d["equal"]).lower()))
    w = [max(len(r[i]) for r in rows) for i in range(4)]
    return "\n".join("  ".join(c.ljust(w[i]) for i, c in enumerate(r)).rstrip() for r in rows)


# --------------------------------------------------------------------------
# argument parsing


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2, which is the overflow code here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)
    common.add_argument("--element-cap", type=_positive, default=DEFAULT_ELEMENT_CAP)
    common.add_argument("--nu-mode", choices=("full", "generators", "auto"), default="auto")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache", type=Path, default=None, metavar="DIR")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--corpus", default="standard", help="standard or a file of group references")

    p = _Parser(prog="tensorsquare", description="Non-abelian tensor squares of finite groups.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("catalog", parents=[common], help="list built-in groups or resolve one")
    c.add_argument("ref", nargs="?")
    c = sub.add_parser("compute", parents=[common], help="tensor square report for one group")
    c.add_argument("ref")
    c = sub.add_parser("verify", parents=[common], help="run verification suites")
    c.add_argument("selector", choices=SELECTORS)
    c.add_argument("--group", action="append", help="restrict to this group (repeatable)")
    return p


COMMANDS = {"catalog": cmd_catalog, "compute": cmd_compute, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(max_cosets=args.max_cosets, element_cap=args.element_cap, nu_mode=args.nu_mode,
                        corpus=args.corpus, output="json" if args.json else "text",
                        cache_dir=args.cache, seed=args.seed)
        return COMMANDS[args.command](args, cfg)
    except (CosetOverflow, ElementCapExceeded) as e:
        print(f"error: overflow: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except AssertionError as e:
        print(f"error: internal assertion: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UnknownGroup, PresentationError, GroupError, ValueError, OSError, KeyError) as e:
        print(f"error: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
