"""Sweep Q_k over a range of k and report timing plus the worst (largest) ratio.

    python3 scripts/run_sweep.py --k-to 1000 --workers 4 --csv out/qk.csv
"""
import argparse
import logging
import time
from dataclasses import dataclass
from pathlib import Path

from grassmann import counting
from grassmann.cli import reports_to_csv

log = logging.getLogger("run_sweep")


@dataclass
class SweepConfig:
    k_from: int = 2
    k_to: int = 1000
    workers: int = 1
    csv: Path | None = None


def run(cfg: SweepConfig):
    t0 = time.perf_counter()
    reports = counting.sweep(cfg.k_from, cfg.k_to, workers=cfg.workers)
    elapsed = time.perf_counter() - t0
    worst = max(reports, key=lambda r: r.qk)
    failing = [r.k for r in reports if not r.qk_lt_1]
    log.info("swept k=%d..%d in %.2fs with %d worker(s)", cfg.k_from, cfg.k_to, elapsed, cfg.workers)
    print(f"k range       : {cfg.k_from}..{cfg.k_to} ({len(reports)} values)")
    print(f"elapsed       : {elapsed:.2f}s")
    print(f"largest Q_k   : k={worst.k}, Q_k ~ {float(worst.qk):.6f}")
    print(f"Q_k >= 1 at   : {failing or 'none'}")
    if cfg.csv:
        cfg.csv.parent.mkdir(parents=True, exist_ok=True)
        cfg.csv.write_text(reports_to_csv(reports))
        print(f"wrote {cfg.csv}")
    return 0 if not failing else 2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-from", type=int, default=2)
    ap.add_argument("--k-to", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=counting.default_workers())
    ap.add_argument("--csv", type=Path)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    return run(SweepConfig(args.k_from, args.k_to, args.workers, args.csv))


if __name__ == "__main__":
    raise SystemExit(main())
