"""Run every theorem check over a range of orders and write one JSON report."""

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Dict, List

from sombor.oracle import THEOREMS, verify


@dataclass
class RunConfig:
    max_n: int = 8
    jobs: int = 1
    theorems: List[str] = field(default_factory=lambda: list(THEOREMS))
    # unicyclic and corollary families get big fast; cap them separately
    max_n_unicyclic: int = 8
    max_n_corollary: int = 8


def orders(cfg: RunConfig, theorem: str) -> range:
    if theorem == "unicyclic":
        return range(3, min(cfg.max_n, cfg.max_n_unicyclic) + 1)
    if theorem.startswith("cor_"):
        return range(3, min(cfg.max_n, cfg.max_n_corollary) + 1)
    return range(1, cfg.max_n + 1)


def run(cfg: RunConfig) -> Dict:
    results = {}
    for theorem in cfg.theorems:
        reports = [verify(theorem, n=n, jobs=cfg.jobs) for n in orders(cfg, theorem)]
        results[theorem] = {
            "instances": sum(r.instances for r in reports),
            "failures": sum(len(r.failures) for r in reports),
            "elapsed_ms": round(sum(r.elapsed_ms for r in reports), 1),
            "notes": {str(r.scope.get("n")): r.notes for r in reports if r.notes},
        }
        status = "pass" if results[theorem]["failures"] == 0 else "FAIL"
        print(f"{theorem:>16}  {status}  {results[theorem]['instances']:>6} instances"
              f"  {results[theorem]['elapsed_ms']:>9.1f} ms", file=sys.stderr)
    return {"config": asdict(cfg), "results": results}


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=RunConfig.max_n)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--theorem", action="append", choices=list(THEOREMS))
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    args = p.parse_args()
    cfg = RunConfig(max_n=args.max_n, jobs=args.jobs)
    if args.theorem:
        cfg.theorems = args.theorem
    report = run(cfg)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if all(r["failures"] == 0 for r in report["results"].values()) else 1


if __name__ == "__main__":
    sys.exit(main())
