"""Sup distance to the limit curve and moment scaling for growing n.

    python3 scripts/limit_shapes.py --seed 7 --count 20 --sizes 1000 4000 10000
"""

import argparse
import time

import numpy as np

from wedgekit.limits import PLANCHEREL, UNIFORM, moment_scaling_check, sup_distance
from wedgekit.measures import MeasureSpec, sample_batch


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 4000, 10000])
    a = ap.parse_args()

    print("measure\tn\tmean_sup\tk3_estimate\tk3_stderr\tk3_target\tk3_printed\tseconds")
    for kind, shape in (("uniform_exact", UNIFORM), ("plancherel", PLANCHEREL)):
        for n in a.sizes:
            t = time.perf_counter()
            spec = MeasureSpec(kind, seed=a.seed, n=n)
            draws = sample_batch(spec, a.count)
            sup = np.mean([sup_distance(l, shape) for l in draws])
            rep = moment_scaling_check(spec, 3, a.count, draws)
            print(
                f"{kind}\t{n}\t{sup:.4f}\t{rep.estimate:.4f}\t{rep.stderr:.4f}"
                f"\t{rep.target:.4f}\t{rep.printed_target:.4f}\t{time.perf_counter() - t:.1f}"
            )


if __name__ == "__main__":
    main()
