"""Ratios of theta to its q -> 1 approximations as h shrinks.

Near x = 1 the approximation is h sin(pi u/h)/pi exp(u^2/2h). Near x = -1
there are two variants; the script prints both to show which one converges.

    python3 scripts/theta_lemmas.py
"""

import argparse
import math

from wedgekit.numeric import lemma_theta1_ratio, lemma_theta2_ratio


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--hs", type=float, nargs="+", default=[0.4, 0.2, 0.1, 0.05, 0.02])
    ap.add_argument("--a", type=float, default=0.3, help="real part of u in units of h")
    ap.add_argument("--b", type=float, default=0.49, help="imaginary part of u in units of 2 pi")
    a = ap.parse_args()

    print("h\t|r1 - 1|\t|r2 - 1|\t|r2 shifted|")
    for h in a.hs:
        r1 = lemma_theta1_ratio(a.a * h, h)
        u = a.a * h + 2j * math.pi * a.b
        r2 = lemma_theta2_ratio(u, h)
        r2s = lemma_theta2_ratio(u, h, printed=True)
        print(f"{h}\t{abs(r1 - 1):.3e}\t{abs(r2 - 1):.3e}\t{abs(r2s):.3e}")


if __name__ == "__main__":
    main()
