"""Compare log dim(lambda) of sampled partitions with both typical-dimension forms.

For each sample the script prints the empirical per-n constant under the
(1/2) n log n leading term and under the n log n leading term.

    python3 scripts/typical_dimension.py --seed 3 --count 5 --sizes 500 2000 8000
"""

import argparse
import math

from wedgekit.partitions import hook_lengths
from wedgekit.measures import MeasureSpec, sample_batch
from wedgekit.variational import typical_dimension_constant


def log_dim(lam) -> float:
    n = lam.size()
    return math.lgamma(n + 1) - sum(math.log(h) for h in hook_lengths(lam))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="+", default=[500, 2000, 8000])
    a = ap.parse_args()

    for kind, shape in (("uniform_exact", "uniform"), ("plancherel", "plancherel")):
        consistent = typical_dimension_constant(shape, "consistent")
        display = typical_dimension_constant(shape, "display")
        print(f"# {kind}: consistent {consistent:.6f} (lead n log n / 2), display {display:.6f} (lead n log n)")
        print("n\tmean_const_half\tmean_const_full")
        for n in a.sizes:
            half, full = [], []
            for lam in sample_batch(MeasureSpec(kind, seed=a.seed, n=n), a.count):
                ld = log_dim(lam)
                half.append((0.5 * n * math.log(n) - ld) / n)
                full.append((n * math.log(n) - ld) / n)
            print(f"{n}\t{sum(half) / len(half):.5f}\t{sum(full) / len(full):.5f}")


if __name__ == "__main__":
    main()
