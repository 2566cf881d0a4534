"""Characters and dimensions of symmetric groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Sequence

from .partitions import (
    Partition,
    conjugate,
    hook_product,
    p_core_quotient,
    partitions,
    removable_strips,
    to_frobenius,
)

__all__ = [
    "CycleType",
    "CharacterTable",
    "centralizer_size",
    "mn_character",
    "dim_hook",
    "dim_coords",
    "dim_frobenius",
    "dim_determinant",
    "character_table",
    "char_rectangular",
    "falling",
    "shifted_schur",
    "skew_dim",
    "schur_in_power_sums",
    "det",
]

# A cycle type is just a partition read as cycle lengths.
CycleType = Partition


def centralizer_size(mu: CycleType) -> int:
    return prod(i**m * factorial(m) for i, m in mu.multiplicities().items())


@cache
def _mn(lam: Partition, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    first, rest = cycles[0], cycles[1:]
    return sum(s.sign * _mn(s.inner, rest) for s in removable_strips(lam, first))


def mn_character(lam: Partition, mu: CycleType) -> int:
    """Murnaghan-Nakayama recursion, peeling the largest cycle first."""
    if lam.size() != mu.size():
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, tuple(sorted(mu.parts, reverse=True)))


# -- dimensions ---------------------------------------------------------------


def dim_hook(lam: Partition) -> int:
    return factorial(lam.size()) // hook_product(lam)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} produced a non-integer {x}")
    return x.numerator


def dim_coords(lam: Partition) -> int:
    """Product formula in the shifted coordinates l_i = lam_i + k - i."""
    k = len(lam)
    ell = [lam.part(i) + k - i for i in range(1, k + 1)]
    num = prod(ell[i] - ell[j] for i in range(k) for j in range(i + 1, k))
    den = prod(factorial(x) for x in ell)
    return _as_int(Fraction(factorial(lam.size()) * num, den), "coordinate formula")


def dim_frobenius(lam: Partition) -> int:
    fc = to_frobenius(lam)
    p, q, d = fc.p, fc.q, fc.d
    num = prod((p[i] - p[j]) * (q[i] - q[j]) for i in range(d) for j in range(i + 1, d))
    den = prod(p[i] + q[j] + 1 for i in range(d) for j in range(d))
    den *= prod(factorial(p[i]) * factorial(q[i]) for i in range(d))
    return _as_int(Fraction(factorial(lam.size()) * num, den), "Frobenius formula")


def det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                row_c = a[c]
                a[r] = [x - f * y for x, y in zip(a[r], row_c)]
    return out


def dim_determinant(lam: Partition) -> int:
    fc = to_frobenius(lam)
    p, q = fc.p, fc.q
    m = [
        [Fraction(1, (p[i] + q[j] + 1) * factorial(p[i]) * factorial(q[j])) for j in range(fc.d)]
        for i in range(fc.d)
    ]
    return _as_int(factorial(lam.size()) * det(m), "determinant formula")


# -- tables -----------------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: tuple[Partition, ...]
    cols: tuple[CycleType, ...]
    entries: dict = field(repr=False)

    def __getitem__(self, key: tuple[Partition, CycleType]) -> int:
        return self.entries[key]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [
                {
                    "lambda": str(lam),
                    "values": [{"mu": str(mu), "chi": str(self.entries[lam, mu])} for mu in self.cols],
                }
                for lam in self.rows
            ],
        }

    def to_tsv(self) -> str:
        head = ["lambda\\mu"] + [str(mu) for mu in self.cols]
        body = [[str(lam)] + [str(self.entries[lam, mu]) for mu in self.cols] for lam in self.rows]
        table = [head] + body
        widths = [max(len(r[c]) for r in table) for c in range(len(head))]
        return "\n".join(
            "\t".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in table
        ) + "\n"


def character_table(n: int) -> CharacterTable:
    if n < 1:
        raise ValueError("n must be positive")
    ps = tuple(partitions(n))
    entries = {(lam, mu): mn_character(lam, mu) for lam in ps for mu in ps}
    return CharacterTable(n, ps, ps, entries)


def _multinomial(total: int, parts: Sequence[int]) -> int:
    out = factorial(total)
    for k in parts:
        out //= factorial(k)
    return out


def char_rectangular(lam: Partition, p: int) -> int:
    """|chi^lam(p, ..., p)| from the p-core and p-quotient."""
    if p < 2:
        raise ValueError("p must be at least 2")
    n = lam.size()
    if n % p:
        raise ValueError(f"{p} does not divide |{lam}| = {n}")
    pq = p_core_quotient(lam, p)
    if pq.core:
        return 0
    sizes = [q.size() for q in pq.quotient]
    return _multinomial(n // p, sizes) * prod(dim_hook(q) for q in pq.quotient)


# -- shifted Schur ----------------------------------------------------------


def falling(x, k: int):
    """Falling factorial x(x-1)...(x-k+1)."""
    if k < 0:
        raise ValueError("falling factorial needs k >= 0")
    out = Fraction(1) if isinstance(x, Fraction) else 1
    for i in range(k):
        out *= x - i
    return out


def shifted_schur(mu: Partition, x: Sequence) -> Fraction:
    n = len(x)
    if n < len(mu):
        raise ValueError("need at least as many variables as parts")
    y = [Fraction(x[i]) + n - 1 - i for i in range(n)]
    den = det([[falling(y[i], n - 1 - j) for j in range(n)] for i in range(n)])
    if den == 0:
        raise ZeroDivisionError("repeated values of x_i + n - i")
    num = det([[falling(y[i], mu.part(j + 1) + n - 1 - j) for j in range(n)] for i in range(n)])
    return num / den


def skew_dim(lam: Partition, mu: Partition) -> int:
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = max(len(lam), len(mu), 1)
    x = [lam.part(i) for i in range(1, n + 1)]
    value = shifted_schur(mu, x) * dim_hook(lam) / falling(lam.size(), mu.size())
    return _as_int(value, "skew dimension formula")


def schur_in_power_sums(lam: Partition) -> dict[CycleType, Fraction]:
    return {
        rho: Fraction(mn_character(lam, rho), centralizer_size(rho))
        for rho in partitions(lam.size())
    }


def transpose_sign(mu: CycleType) -> int:
    return -1 if (mu.size() - len(mu)) % 2 else 1


def branching_dim(lam: Partition) -> int:
    """dim lam as the sum of dims one cell smaller."""
    if not lam:
        return 1
    return sum(dim_hook(lam.remove_cell(c.row)) for c in lam.removable_cells())


def conjugate_character(lam: Partition, mu: CycleType) -> int:
    return mn_character(conjugate(lam), mu)
