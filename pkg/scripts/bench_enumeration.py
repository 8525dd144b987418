#!/usr/bin/env python3
"""Timing sweep: brute vs fast prime/ultrafilter enumeration.

Generates random downset lattices of increasing poset size and reports the
two enumeration routes side by side, asserting that they agree.

    python scripts/bench_enumeration.py --max-points 10 --repeats 5
"""

import argparse
import statistics
import time
from dataclasses import dataclass

from wallman import gen
from wallman.filters import enumerate_filters


@dataclass(frozen=True)
class BenchConfig:
    max_points: int = 10
    repeats: int = 5
    seed: int = 0


def time_route(L, kind, strategy):
    start = time.perf_counter()
    out = enumerate_filters(L, kind, strategy)
    return (time.perf_counter() - start) * 1000.0, {f.members for f in out}


def run(cfg: BenchConfig) -> None:
    print(f"{'pts':>4} {'|L|':>6} {'ultras':>7} "
          f"{'brute ms':>10} {'fast ms':>10} {'b/f':>8}")
    for n in range(1, cfg.max_points + 1):
        brute_ms, fast_ms, count = [], [], None
        for r in range(cfg.repeats):
            L = gen.random_downset_lattice(n, cfg.seed + r)
            tb, sb = time_route(L, "ultra", "brute")
            tf, sf = time_route(L, "ultra", "fast")
            assert sb == sf, (n, cfg.seed + r)
            brute_ms.append(tb)
            fast_ms.append(tf)
            count = len(sf)
        mb = statistics.median(brute_ms)
        mf = statistics.median(fast_ms)
        ratio = mb / mf if mf else float("inf")
        print(f"{n:>4} {L.n:>6} {count:>7} {mb:>10.2f} {mf:>10.2f} "
              f"{ratio:>7.1f}x")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-points", type=int, default=10)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    run(BenchConfig(args.max_points, args.repeats, args.seed))


if __name__ == "__main__":
    main()
