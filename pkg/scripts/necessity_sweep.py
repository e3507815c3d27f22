"""Necessity sweep: random models of each kind must pass their axiom suite.

    python3 scripts/necessity_sweep.py --sizes 1 2 3 4 5 6 --trials 200
"""

import argparse
import time
from dataclasses import dataclass, field

from ramur.oracle import exhaustive_necessity


@dataclass
class SweepConfig:
    sizes: list = field(default_factory=lambda: [1, 2, 3, 4, 5, 6])
    trials: int = 200
    seed: int = 0
    kinds: tuple = ("ramur", "ira")


def run(cfg: SweepConfig) -> int:
    bad = 0
    for kind in cfg.kinds:
        for size in cfg.sizes:
            t0 = time.perf_counter()
            rep = exhaustive_necessity(kind, size, cfg.trials, seed=cfg.seed)
            dt = time.perf_counter() - t0
            print(f"{kind:6} |X|={size}  trials={rep.trials}  failures={len(rep.failures)}  {dt:.2f}s")
            for f in rep.failures[:5]:
                print("   ", f)
            bad += len(rep.failures)
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=SweepConfig().sizes)
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    raise SystemExit(1 if run(SweepConfig(args.sizes, args.trials, args.seed)) else 0)


if __name__ == "__main__":
    main()
