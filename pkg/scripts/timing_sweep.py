"""Wall-time sweep for the coloring plus clique pipeline.

Generates one G(n, p) instance per size, times lex_color followed by
greedy_clique over several repetitions, and prints the median per size
together with consecutive doubling ratios.  A ratio around 4 is what
the quadratic implementation predicts at fixed density.

    python3 scripts/timing_sweep.py --sizes 250,500,1000,2000 --runs 5
"""

import argparse
import statistics
import time
from dataclasses import dataclass

from meyniel.clique import greedy_clique
from meyniel.graph import GenSpec, generate
from meyniel.lexcolor import lex_color


@dataclass(frozen=True)
class SweepConfig:
    sizes: tuple[int, ...] = (250, 500, 1000, 2000)
    density: float = 0.5
    runs: int = 5
    seed: int = 17
    strategy: str = "refined"


def time_once(g, strategy):
    t0 = time.perf_counter()
    trace = lex_color(g, strategy=strategy)
    greedy_clique(g, trace)
    return time.perf_counter() - t0


def sweep(cfg: SweepConfig) -> dict[int, float]:
    medians = {}
    for n in cfg.sizes:
        g = generate(GenSpec(family="gnp", n=n, p=cfg.density, seed=cfg.seed))
        samples = [time_once(g, cfg.strategy) for _ in range(cfg.runs)]
        medians[n] = statistics.median(samples)
        print(f"n={n:>6}  m={g.m:>9}  median={medians[n] * 1000:9.2f} ms  "
              f"min={min(samples) * 1000:9.2f} ms")
    return medians


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="250,500,1000,2000",
                    help="comma-separated instance sizes")
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--seed", type=int, default=17)
    ap.add_argument("--strategy", choices=("naive", "refined"), default="refined")
    args = ap.parse_args()
    cfg = SweepConfig(
        sizes=tuple(int(tok) for tok in args.sizes.split(",")),
        density=args.density,
        runs=args.runs,
        seed=args.seed,
        strategy=args.strategy,
    )
    medians = sweep(cfg)
    for a, b in zip(cfg.sizes, cfg.sizes[1:]):
        if medians[a] > 0:
            print(f"T({b})/T({a}) = {medians[b] / medians[a]:.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
