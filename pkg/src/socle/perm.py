"""Permutations of {0..n-1} with a pinned composition convention.

The product `compose(a, b)` applies `b` first: `compose(a, b)(i) == a(b(i))`.
Every module in the package uses this orientation; a unit test pins it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Perm:
    """A permutation of {0..degree-1}; `images[i]` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise ValueError("permutation degree must be positive")
        seen = [False] * n
        for x in self.images:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"images {self.images} are not a bijection on 0..{n - 1}")
            seen[x] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = _lcm(n, len(c))
        return n

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        out = []
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from pairwise-disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        touched = set()
        for cyc in cycles:
            for p in cyc:
                if not 0 <= p < degree:
                    raise ValueError(f"point {p} out of range for degree {degree}")
                if p in touched:
                    raise ValueError(f"point {p} appears in more than one cycle")
                touched.add(p)
            for i, p in enumerate(cyc):
                images[p] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))


def compose(a: Perm, b: Perm) -> Perm:
    """Product a*b: apply b first, then a."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    return Perm(tuple(a.images[x] for x in b.images))


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)
