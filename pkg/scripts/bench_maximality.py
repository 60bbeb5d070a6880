"""Time the zeta-transform maximality test against the naive scan on
random completed families.

    python3 scripts/bench_maximality.py --n 12 --trials 50
"""
import argparse
import random
import time
from dataclasses import dataclass

from grassmann.families import (
    OddFamily,
    complete_family,
    is_maximal_family_fast,
    is_maximal_family_naive,
    odd_masks,
)


@dataclass
class BenchConfig:
    n: int = 10
    trials: int = 50
    seed: int = 0


def random_intersecting(n, rng, tries=30):
    odds = odd_masks(n)
    members = []
    for _ in range(tries):
        t = rng.choice(odds)
        if t not in members and all(t & s for s in members):
            members.append(t)
    return OddFamily(n, frozenset(members))


def run(cfg: BenchConfig):
    rng = random.Random(cfg.seed)
    t_fast = t_naive = 0.0
    for _ in range(cfg.trials):
        F = complete_family(random_intersecting(cfg.n, rng))
        a = time.perf_counter()
        vf = is_maximal_family_fast(F)
        b = time.perf_counter()
        vn = is_maximal_family_naive(F)
        c = time.perf_counter()
        assert vf == vn and vf
        t_fast += b - a
        t_naive += c - b
    print(f"n={cfg.n}, {cfg.trials} maximal families (size {2 ** (cfg.n - 2)}+ each)")
    print(f"fast  : {t_fast * 1000 / cfg.trials:8.3f} ms/family")
    print(f"naive : {t_naive * 1000 / cfg.trials:8.3f} ms/family")
    print(f"ratio : {t_naive / t_fast:.1f}x")
    return 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    return run(BenchConfig(args.n, args.trials, args.seed))


if __name__ == "__main__":
    raise SystemExit(main())
