"""Round-trip sweep: build witnesses for random abstract causal betweennesses,
expand them, extract CB and compare. Prints one row per ground-set size."""

import argparse
import random
import time

from causal_betweenness import construct_witness, expand, extract_cb
from causal_betweenness.generators import random_acyclic, random_orderable


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=8)
    ap.add_argument("--trials", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'m':>3} {'trials':>6} {'pass':>5} {'avg |R|':>8} {'witness s':>10} {'extract s':>10}")
    for m in range(1, args.max_m + 1):
        passed, sizes, t_build, t_check = 0, 0, 0.0, 0.0
        for k in range(args.trials):
            gen = random_orderable if k % 2 else random_acyclic
            rel = gen(m, rng, keep=rng.uniform(0.2, 1))
            t0 = time.perf_counter()
            space = construct_witness(rel)
            t1 = time.perf_counter()
            back = extract_cb(expand(space))
            t2 = time.perf_counter()
            passed += back == rel
            sizes += len(rel)
            t_build += t1 - t0
            t_check += t2 - t1
        print(f"{m:>3} {args.trials:>6} {passed:>5} {sizes / args.trials:>8.1f} "
              f"{t_build:>10.3f} {t_check:>10.3f}")


if __name__ == "__main__":
    main()
