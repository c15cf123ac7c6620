#!/usr/bin/env python3
"""Run every assertive suite over a corpus and print a per-claim summary.

    python scripts/run_corpus.py [--corpus standard] [--json out.json]
"""

import argparse
import json
import sys
import time
from collections import Counter, defaultdict

from tensorsquare.catalog import load_corpus
from tensorsquare.config import RunConfig
from tensorsquare.theorems import run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", default="standard")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", default=None, help="write all outcomes to this file")
    args = ap.parse_args()

    cfg = RunConfig(seed=args.seed, corpus=args.corpus)
    groups = load_corpus(cfg.corpus)
    t0 = time.perf_counter()
    outs = run_suite("all", groups, cfg, progress=lambda g: print(f"... {g}", file=sys.stderr))
    by_claim: dict[str, Counter] = defaultdict(Counter)
    for o in outs:
        by_claim[o.claim_id][o.status] += 1
    w = max(map(len, by_claim))
    print(f"{'claim':<{w}}  pass  fail  skip")
    for claim, c in sorted(by_claim.items()):
        print(f"{claim:<{w}}  {c['pass']:>4}  {c['fail']:>4}  {c['skipped']:>4}")
    for o in outs:
        if o.status == "fail":
            print(f"FAIL {o.claim_id} {o.group_name} {json.dumps(o.to_dict()['witness'])}")
    print(f"{len(outs)} outcomes over {len(groups)} groups in {time.perf_counter() - t0:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([o.to_dict() for o in outs], fh, indent=2)
    return 1 if any(o.status == "fail" for o in outs) else 0


if __name__ == "__main__":
    sys.exit(main())
