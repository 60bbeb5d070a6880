"""Enumerate maximal intersecting odd families for small n and certify each
attached subalgebra algebraically.

    python3 scripts/bridge_census.py --n-max 5 --field gf3
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from grassmann.exterior import GF3, QQ
from grassmann.families import certify_family, enumerate_maximal_families, family_to_subalgebra


@dataclass
class CensusConfig:
    n_max: int = 4
    field: str = "rationals"


def run(cfg: CensusConfig):
    field = GF3 if cfg.field == "gf3" else QQ
    print(f"{'n':>2} {'families':>9} {'sizes':<24} {'dims':<16} {'certified':>9} {'time':>7}")
    bad = 0
    for n in range(1, cfg.n_max + 1):
        t0 = time.perf_counter()
        fams = enumerate_maximal_families(n)
        sizes = Counter(len(F) for F in fams)
        dims = Counter(family_to_subalgebra(F).dim for F in fams)
        ok = sum(bool(certify_family(F, field)) for F in fams)
        bad += len(fams) - ok
        dt = time.perf_counter() - t0
        print(f"{n:>2} {len(fams):>9} {str(dict(sorted(sizes.items()))):<24} "
              f"{str(dict(sorted(dims.items()))):<16} {ok:>9} {dt:>6.2f}s")
    return 0 if not bad else 2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=4, choices=range(1, 6))
    ap.add_argument("--field", choices=["rationals", "gf3"], default="rationals")
    args = ap.parse_args()
    return run(CensusConfig(args.n_max, args.field))


if __name__ == "__main__":
    raise SystemExit(main())
