"""Partitions, Young and Maya diagrams, border strips, p-cores and p-quotients.

Half-integer Maya sites are stored doubled, so the site of row i of a
partition is ``2*(lam_i - i) + 1``, an odd integer.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cache
from typing import Iterator, NamedTuple

import numpy as np

__all__ = [
    "Partition",
    "Cell",
    "FrobeniusCoords",
    "MayaDiagram",
    "BorderStrip",
    "PQuotient",
    "partitions",
    "partitions_upto",
    "conjugate",
    "hook_length",
    "hook_lengths",
    "hook_product",
    "to_frobenius",
    "from_frobenius",
    "to_maya",
    "from_maya",
    "removable_strips",
    "addable_strips",
    "p_core_quotient",
    "reconstruct",
    "contour",
    "standard_tableaux_count",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"5,4,4,2"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip()
        if text in ("", "0", "∅"):
            return cls()
        try:
            parts = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(tuple(parts))

    @classmethod
    def from_json(cls, obj: dict) -> Partition:
        return cls(tuple(obj["parts"]))

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self.parts:
            m[p] = m.get(p, 0) + 1
        return m

    def cells(self) -> Iterator[Cell]:
        for r, row in enumerate(self.parts, start=1):
            for c in range(1, row + 1):
                yield Cell(r, c)

    def contains(self, other: Partition) -> bool:
        """Diagram inclusion ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def addable_cells(self) -> list[Cell]:
        out = []
        for r in range(1, len(self.parts) + 2):
            if r == 1 or self.part(r - 1) > self.part(r):
                out.append(Cell(r, self.part(r) + 1))
        return out

    def removable_cells(self) -> list[Cell]:
        return [
            Cell(r, self.part(r))
            for r in range(1, len(self.parts) + 1)
            if self.part(r) > self.part(r + 1)
        ]

    def add_cell(self, r: int) -> Partition:
        parts = list(self.parts) + [0]
        parts[r - 1] += 1
        return Partition(tuple(p for p in parts if p))

    def remove_cell(self, r: int) -> Partition:
        parts = list(self.parts)
        parts[r - 1] -= 1
        return Partition(tuple(p for p in parts if p))


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class FrobeniusCoords:
    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.p) != len(self.q):
            raise ValueError("Frobenius coordinates need equal lengths")
        for seq in (self.p, self.q):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"coordinates must be strictly decreasing and >= 0: {seq}")

    @property
    def d(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class MayaDiagram:
    """Symmetric difference with the vacuum, as doubled sites.

    ``particles`` are occupied positive sites, ``holes`` vacant negative ones.
    """

    particles: frozenset[int]
    holes: frozenset[int]

    @property
    def charge(self) -> int:
        return len(self.particles) - len(self.holes)

    def occupied(self, site2: int) -> bool:
        if site2 % 2 == 0:
            raise ValueError(f"doubled site must be odd: {site2}")
        if site2 > 0:
            return site2 in self.particles
        return site2 not in self.holes

    def sites(self, lowest: int) -> list[int]:
        """Occupied doubled sites >= lowest, descending."""
        top = max(self.particles, default=-1)
        return [s for s in range(top, lowest - 1, -2) if s >= lowest and self.occupied(s)]


@dataclass(frozen=True)
class BorderStrip:
    outer: Partition
    inner: Partition
    size: int
    height: int
    top_row: int

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1


@dataclass(frozen=True)
class PQuotient:
    core: Partition
    quotient: tuple[Partition, ...]
    p: int

    def __str__(self) -> str:
        q = ",".join(f"[{lam}]" for lam in self.quotient)
        return f"core={self.core}; quotient={q}"


# -- enumeration -------------------------------------------------------------


@cache
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """Partitions of n in reverse-lexicographic order."""
    if n < 0:
        return []
    return [Partition(p) for p in _partitions(n, n)]


def partitions_upto(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions(m)


# -- diagrams ---------------------------------------------------------------


def conjugate(lam: Partition) -> Partition:
    parts = lam.parts
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def hook_length(lam: Partition, c: Cell | tuple[int, int]) -> int:
    row, col = c
    if not (1 <= row <= len(lam) and 1 <= col <= lam.part(row)):
        raise ValueError(f"cell {tuple(c)} is not in {lam}")
    leg = sum(1 for p in lam.parts[row:] if p >= col)
    return lam.part(row) - col + leg + 1


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam).parts
    return [
        lam.parts[r] - c + conj[c] - r - 1
        for r in range(len(lam))
        for c in range(lam.parts[r])
    ]


def hook_product(lam: Partition) -> int:
    out = 1
    for h in hook_lengths(lam):
        out *= h
    return out


def to_frobenius(lam: Partition) -> FrobeniusCoords:
    conj = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam.parts, start=1) if p >= i)
    p = tuple(lam.part(i) - i for i in range(1, d + 1))
    q = tuple(conj.part(i) - i for i in range(1, d + 1))
    return FrobeniusCoords(p, q)


def from_frobenius(fc: FrobeniusCoords) -> Partition:
    d = fc.d
    if d == 0:
        return Partition()
    # Rows above the diagonal come from p; the rest are read off the legs.
    rows = [fc.p[i] + i + 1 for i in range(d)]
    for r in range(d + 1, fc.q[0] + 2):
        rows.append(sum(1 for j in range(d) if fc.q[j] + j + 1 >= r))
    lam = Partition(tuple(rows))
    if to_frobenius(lam) != fc:
        raise ValueError(f"inconsistent Frobenius coordinates: {fc}")
    return lam


def to_maya(lam: Partition) -> MayaDiagram:
    ell = len(lam)
    sites = {2 * (lam.parts[i - 1] - i) + 1 for i in range(1, ell + 1)}
    particles = frozenset(s for s in sites if s > 0)
    holes = frozenset(s for s in range(-1, -2 * ell - 1, -2) if s not in sites)
    return MayaDiagram(particles, holes)


def from_maya(m: MayaDiagram) -> Partition:
    if m.charge != 0:
        raise ValueError(f"Maya diagram has charge {m.charge}, expected 0")
    if any(s <= 0 or s % 2 == 0 for s in m.particles) or any(
        s >= 0 or s % 2 == 0 for s in m.holes
    ):
        raise ValueError("malformed Maya diagram")
    lowest = min(m.holes, default=1)
    parts = []
    for i, s in enumerate(m.sites(lowest), start=1):
        part = (s - 1) // 2 + i
        if part > 0:
            parts.append(part)
    return Partition(tuple(parts))


# -- border strips -----------------------------------------------------------
#
# Strips are read off the beta-numbers x_i = lam_i - i with the partition
# padded by n zero rows; beads below the padding are frozen.


def _beta(lam: Partition, rows: int) -> list[int]:
    return [lam.part(i) - i for i in range(1, rows + 1)]


def _from_beta(xs: list[int]) -> Partition:
    xs = sorted(xs, reverse=True)
    return Partition(tuple(p for p in (x + i for i, x in enumerate(xs, start=1)) if p))


@cache
def removable_strips(lam: Partition, n: int) -> tuple[BorderStrip, ...]:
    if n < 1:
        raise ValueError("strip size must be positive")
    xs = _beta(lam, len(lam) + n)
    present = set(xs)
    out = []
    for i, x in enumerate(xs, start=1):
        if x - n in present or x - n < -len(xs):
            continue
        height = sum(1 for y in xs if x - n < y < x)
        ys = list(xs)
        ys[i - 1] = x - n
        out.append(BorderStrip(lam, _from_beta(ys), n, height, i))
    out.sort(key=lambda s: s.top_row)
    return tuple(out)


@cache
def addable_strips(lam: Partition, n: int) -> tuple[BorderStrip, ...]:
    if n < 1:
        raise ValueError("strip size must be positive")
    xs = _beta(lam, len(lam) + n)
    present = set(xs)
    out = []
    for i, x in enumerate(xs, start=1):
        if x + n in present:
            continue
        height = sum(1 for y in xs if x < y < x + n)
        ys = list(xs)
        ys[i - 1] = x + n
        out.append(BorderStrip(_from_beta(ys), lam, n, height, i - height))
    out.sort(key=lambda s: s.top_row)
    return tuple(out)


# -- abacus -----------------------------------------------------------------


def _runner_partition(beads: list[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    m = len(beads)
    return Partition(tuple(p for p in (b - (m - j) for j, b in enumerate(beads, start=1)) if p))


def p_core_quotient(lam: Partition, p: int) -> PQuotient:
    if p < 2:
        raise ValueError("p must be at least 2")
    rows = -(-len(lam) // p) * p
    beta = [x + rows for x in _beta(lam, rows)]
    runners: list[list[int]] = [[] for _ in range(p)]
    for b in beta:
        runners[b % p].append(b // p)
    quotient = tuple(_runner_partition(r) for r in runners)
    # Sliding every bead to the top of its runner leaves the core.
    pushed = [r + p * k for r in range(p) for k in range(len(runners[r]))]
    core = _from_beta([b - rows for b in pushed])
    return PQuotient(core, quotient, p)


def reconstruct(pq: PQuotient) -> Partition:
    p = pq.p
    if p < 2 or len(pq.quotient) != p:
        raise ValueError("quotient must have p entries")
    depth = max((len(q) for q in pq.quotient), default=0)
    rows = p * (len(pq.core) + depth + 1)
    core_beta = [x + rows for x in _beta(pq.core, rows)]
    runners: list[list[int]] = [[] for _ in range(p)]
    for b in core_beta:
        runners[b % p].append(b // p)
    beta = []
    for r in range(p):
        m = len(runners[r])
        q = pq.quotient[r]
        if len(q) > m:
            raise ValueError("runner too short for quotient")
        for j in range(1, m + 1):
            beta.append(p * (q.part(j) + m - j) + r)
    lam = _from_beta([b - rows for b in beta])
    if p_core_quotient(lam, p) != PQuotient(pq.core, tuple(pq.quotient), p):
        raise ValueError(f"not a valid core/quotient pair: {pq}")
    return lam


# -- contour ----------------------------------------------------------------


def contour(lam: Partition, scale: float = 1.0) -> np.ndarray:
    """Breakpoints (s, L(s)) of the rotated contour, rescaled by ``scale``.

    Content coordinates s = col - row; slope -1 across occupied Maya sites
    and +1 across vacant ones, so L(s) = |s| far out.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    ell = len(lam)
    top = lam.part(1)
    sites = {2 * (lam.parts[i - 1] - i) + 1 for i in range(1, ell + 1)}
    s, height = -ell - 1, ell + 1
    pts = [(s, height)]
    for site in range(-2 * ell - 1, 2 * top + 2, 2):
        step = -1 if (site in sites or site < -2 * ell) else 1
        s, height = s + 1, height + step
        pts.append((s, height))
    # keep only the corners and the two ends
    keep = [pts[0]]
    for a, b, c in zip(pts, pts[1:], pts[2:]):
        if (b[1] - a[1]) != (c[1] - b[1]):
            keep.append(b)
    keep.append(pts[-1])
    return np.asarray(keep, dtype=float) * scale


# -- tableaux ---------------------------------------------------------------


def standard_tableaux_count(outer: Partition, inner: Partition = Partition()) -> int:
    """Count standard fillings of outer/inner by DP over intermediate shapes."""
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    target = outer.parts

    @cache
    def ways(shape: tuple[int, ...]) -> int:
        if shape == target:
            return 1
        total = 0
        padded = shape + (0,)
        for r in range(min(len(padded), len(target))):
            if padded[r] < target[r] and (r == 0 or padded[r - 1] > padded[r]):
                nxt = list(padded)
                nxt[r] += 1
                total += ways(tuple(p for p in nxt if p))
        return total

    return ways(inner.parts)


def insert_sorted(row: list[int], x: int) -> int | None:
    """RSK row bump: place x, return the bumped entry or None."""
    k = bisect.bisect_right(row, x)
    if k == len(row):
        row.append(x)
        return None
    y, row[k] = row[k], x
    return y
