"""Sampling error of simulated frequencies against exact probabilities, with an eps axiom check.

    python3 scripts/monte_carlo.py --draws 1000 10000 100000 --eps 1/50
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from ramur.axioms import THEOREM2, check_all
from ramur.core import PreferenceRelation, RamUrIraModel
from ramur.forward import eval_ira, sample_choices


@dataclass
class MonteCarloConfig:
    draws: tuple = (1_000, 10_000, 100_000)
    seed: int = 7
    eps: Fraction = Fraction(1, 50)


def fixed_model() -> RamUrIraModel:
    gamma = {"w": Fraction(1), "x": Fraction(1, 2), "y": Fraction(1, 3), "z": Fraction(3, 4)}
    return RamUrIraModel(PreferenceRelation.from_ranking("xywz"), gamma)


def run(cfg: MonteCarloConfig):
    model = fixed_model()
    exact = eval_ira(model)
    print(f"model: preference {model.preference}, gamma "
          + ", ".join(f"{x}={g}" for x, g in sorted(model.gamma.items())))
    print(f"{'draws':>8}  {'max |freq - p|':>14}  axioms at eps={cfg.eps}")
    for n in cfg.draws:
        run_ = sample_choices(model, cfg.seed, n)
        worst = max(abs(run_.frequencies[A][x] - exact.p(x, A)) for A in exact.menus() for x in exact.row(A))
        reps = check_all(run_.to_scf(), THEOREM2, eps=cfg.eps)
        failed = [a for a, r in reps.items() if not r.passed]
        print(f"{n:>8}  {float(worst):>14.5f}  {'all pass' if not failed else 'fail: ' + ', '.join(failed)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--draws", type=int, nargs="+", default=list(MonteCarloConfig.draws))
    ap.add_argument("--seed", type=int, default=MonteCarloConfig.seed)
    ap.add_argument("--eps", type=Fraction, default=MonteCarloConfig.eps)
    args = ap.parse_args()
    run(MonteCarloConfig(tuple(args.draws), args.seed, args.eps))


if __name__ == "__main__":
    main()
