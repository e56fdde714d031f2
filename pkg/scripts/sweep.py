#!/usr/bin/env python3
"""Run the verification sweeps with timing per suite and write a JSONL report.

    python3 scripts/sweep.py --d 2 3 4 --out sweep.jsonl
"""

import argparse
import time
from dataclasses import dataclass, field

from dnarayana.verify import (
    CELL_LIMIT,
    VerificationReport,
    verify_bijections,
    verify_counts,
    verify_identities,
)


@dataclass
class SweepConfig:
    arities: list = field(default_factory=lambda: [2, 3, 4, 5])
    n_max: int | None = None  # None means the per-arity defaults
    cell_limit: int = CELL_LIMIT
    suites: tuple = ("counts", "bijections", "identities")
    out: str | None = None


def run(cfg: SweepConfig) -> VerificationReport:
    report = VerificationReport()
    for suite in cfg.suites:
        t0 = time.perf_counter()
        if suite == "counts":
            part = verify_counts(cfg.arities, cfg.n_max, cell_limit=cfg.cell_limit)
        elif suite == "bijections":
            part = verify_bijections(cfg.arities, cfg.n_max, cell_limit=cfg.cell_limit)
        else:
            part = verify_identities()
        s = part.summary
        print(f"{suite:<11} {s['total']:>6} cells  {s['failed']} failed  "
              f"{s['skipped']} skipped  {time.perf_counter() - t0:6.1f}s", flush=True)
        report.extend(part)
    print()
    print(report.summary_table())
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(report.to_jsonl())
    return report


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--d", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--n-max", type=int)
    p.add_argument("--cell-limit", type=int, default=CELL_LIMIT)
    p.add_argument("--suite", nargs="+", choices=("counts", "bijections", "identities"),
                   default=["counts", "bijections", "identities"])
    p.add_argument("--out")
    args = p.parse_args()
    cfg = SweepConfig(args.d, args.n_max, args.cell_limit, tuple(args.suite), args.out)
    raise SystemExit(0 if run(cfg).ok else 1)


if __name__ == "__main__":
    main()
