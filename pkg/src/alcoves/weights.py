"""Weights and roots of type A_n.

A weight is an integer vector in the basis of fundamental weights
``w_1, ..., w_n``, so its i-th coordinate is the pairing with the simple
root ``alpha_i``.  Root-basis coordinates are exact fractions.

Most computations go through the lift to ``Z^{n+1}``: the weight with
fundamental coordinates ``(l_1, ..., l_n)`` is the image under

    g(m_1, ..., m_{n+1}) = sum_i (m_i - m_{i+1}) w_i

of any vector with consecutive differences ``l_i``.  The finite Weyl group
``S_{n+1}`` acts on lifts by permuting coordinates, and ``g`` is equivariant.

>>> fw_to_root(Weight((1, 0)))
RootVector(coords=(Fraction(2, 3), Fraction(1, 3)))
>>> sorted(phi_plus(Weight((1, 1, 1))))
[(1, 2), (2, 3)]
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Weight",
    "RootVector",
    "FinitePermutation",
    "Zone",
    "ZVector",
    "RootInterval",
    "cartan_matrix",
    "inverse_cartan",
    "fw_to_root",
    "root_to_fw",
    "dominance_leq",
    "lift",
    "g_map",
    "zvector_leq",
    "act_finite",
    "dominant_rep",
    "root_weight",
    "positive_roots",
    "phi_plus",
    "meet",
    "join",
    "join_roots",
    "zone_of",
    "all_zones",
    "ideal",
    "coset_index",
    "height_pairing",
]

ZVector = tuple[int, ...]
"""An integer vector of length n+1; the lift of a weight."""

RootInterval = tuple[int, int]
"""The positive root ``alpha_i + ... + alpha_j`` written as ``(i, j)``, i <= j."""


@dataclass(frozen=True)
class Weight:
    """An integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise ValueError("a weight needs rank at least 1")
        object.__setattr__(self, "coords", coords)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls((0,) * n)

    @classmethod
    def fundamental(cls, n: int, i: int) -> Weight:
        """The fundamental weight ``w_i``; ``i = 0`` gives the zero weight."""
        if not 0 <= i <= n:
            raise ValueError(f"fundamental weight index {i} out of range for rank {n}")
        return cls(tuple(int(k == i) for k in range(1, n + 1)))

    @classmethod
    def rho(cls, n: int) -> Weight:
        return cls((1,) * n)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def _check(self, other: Weight) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, k: int) -> int:
        return self.coords[k]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootVector:
    """A rational vector in simple-root coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


@dataclass(frozen=True)
class FinitePermutation:
    """A permutation of ``{1, ..., n+1}`` in one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self) -> None:
        one_line = tuple(int(v) for v in self.one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"not a permutation: {one_line}")
        object.__setattr__(self, "one_line", one_line)

    @property
    def size(self) -> int:
        return len(self.one_line)

    @classmethod
    def identity(cls, size: int) -> FinitePermutation:
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def longest(cls, size: int) -> FinitePermutation:
        return cls(tuple(range(size, 0, -1)))

    @classmethod
    def simple(cls, size: int, i: int) -> FinitePermutation:
        one_line = list(range(1, size + 1))
        one_line[i - 1], one_line[i] = one_line[i], one_line[i - 1]
        return cls(tuple(one_line))

    def __call__(self, r: int) -> int:
        return self.one_line[r - 1]

    def __mul__(self, other: FinitePermutation) -> FinitePermutation:
        return FinitePermutation(tuple(self(other(r)) for r in range(1, self.size + 1)))

    def inverse(self) -> FinitePermutation:
        inv = [0] * self.size
        for r, v in enumerate(self.one_line, start=1):
            inv[v - 1] = r
        return FinitePermutation(tuple(inv))

    def act(self, v: Sequence) -> tuple:
        """Permute coordinates: ``(w . v)_k = v_{w^{-1}(k)}``."""
        out = [None] * self.size
        for r, value in enumerate(v, start=1):
            out[self(r) - 1] = value
        return tuple(out)


@dataclass(frozen=True)
class Zone:
    """A pattern in ``{0,1,2}^n`` naming a piece of the dominant chamber."""

    pattern: tuple[int, ...]

    def __post_init__(self) -> None:
        pattern = tuple(int(v) for v in self.pattern)
        if not pattern or any(v not in (0, 1, 2) for v in pattern):
            raise ValueError(f"zone entries must lie in {{0,1,2}}: {pattern}")
        object.__setattr__(self, "pattern", pattern)

    @property
    def rank(self) -> int:
        return len(self.pattern)

    def representative(self) -> Weight:
        """The clamp vector itself, the smallest weight of the zone."""
        return Weight(self.pattern)

    def contains(self, lam: Weight) -> bool:
        return lam.is_dominant() and zone_of(lam) == self

    def __iter__(self) -> Iterator[int]:
        return iter(self.pattern)

    def __str__(self) -> str:
        return "".join(str(v) for v in self.pattern)


def cartan_matrix(n: int) -> np.ndarray:
    """The Cartan matrix of type A_n as an integer array.

    >>> cartan_matrix(2).tolist()
    [[2, -1], [-1, 2]]
    """
    if n < 1:
        raise ValueError("rank must be positive")
    a = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        a[i, i + 1] = a[i + 1, i] = -1
    return a


@lru_cache(maxsize=None)
def inverse_cartan(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # entry (i, j) is min(i,j) * (n+1 - max(i,j)) / (n+1), 1-based
    return tuple(
        tuple(Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def fw_to_root(w: Weight) -> RootVector:
    inv = inverse_cartan(w.rank)
    return RootVector(tuple(sum((row[j] * c for j, c in enumerate(w.coords)), Fraction(0)) for row in inv))


def root_to_fw(r: RootVector) -> Weight:
    """Convert root coordinates back to an integral weight."""
    n = r.rank
    c = r.coords
    out = []
    for i in range(n):
        v = 2 * c[i] - (c[i - 1] if i > 0 else 0) - (c[i + 1] if i + 1 < n else 0)
        if Fraction(v).denominator != 1:
            raise ValueError(f"{r} is not an integral weight")
        out.append(int(v))
    return Weight(tuple(out))


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """``mu <= lam``: the root coordinates of ``lam - mu`` are all nonnegative."""
    return all(c >= 0 for c in fw_to_root(lam - mu).coords)


def lift(w: Weight) -> ZVector:
    """The lift to ``Z^{n+1}`` with last coordinate zero."""
    out = [0]
    for c in reversed(w.coords):
        out.append(out[-1] + c)
    return tuple(reversed(out))


def g_map(v: Sequence[int]) -> Weight:
    return Weight(tuple(v[i] - v[i + 1] for i in range(len(v) - 1)))


def zvector_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Partial-sum order on ``Z^{n+1}``: equal totals and every prefix sum of u at most v's."""
    if sum(u) != sum(v):
        return False
    su = sv = 0
    for a, b in zip(u, v):
        su += a
        sv += b
        if su > sv:
            return False
    return True


def act_finite(w: FinitePermutation, v: Weight) -> Weight:
    """The finite Weyl group action, through the lift."""
    return g_map(w.act(lift(v)))


def dominant_rep(w: Weight) -> tuple[Weight, FinitePermutation]:
    """The dominant weight in the orbit of ``w`` and a permutation taking ``w`` to it."""
    v = lift(w)
    # stable sort keeps the permutation trivial on dominant input
    order = sorted(range(len(v)), key=lambda k: -v[k])
    # position k of the sorted vector holds v[order[k]], so perm^{-1}(k+1) = order[k]+1
    inv = FinitePermutation(tuple(o + 1 for o in order))
    perm = inv.inverse()
    return g_map(tuple(v[o] for o in order)), perm


def root_weight(n: int, root: RootInterval) -> Weight:
    """The positive root ``alpha_{i,j}`` in fundamental coordinates."""
    i, j = root
    if not 1 <= i <= j <= n:
        raise ValueError(f"bad root interval {root} for rank {n}")
    coords = [0] * (n + 2)
    for k in range(i, j + 1):
        coords[k - 1] -= 1
        coords[k] += 2
        coords[k + 1] -= 1
    return Weight(tuple(coords[1 : n + 1]))


def positive_roots(n: int) -> list[RootInterval]:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def height_pairing(w: Weight) -> int:
    """``2<w, rho>``, the sum of pairings of ``w`` with all positive roots."""
    n = w.rank
    return sum(k * (n + 1 - k) * c for k, c in enumerate(w.coords, start=1))


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")


def phi_plus(lam: Weight) -> frozenset[RootInterval]:
    """Positive roots ``alpha`` such that ``lam - alpha`` is covered by ``lam`` among dominant weights."""
    _require_dominant(lam)
    n = lam.rank
    out = set()
    for i in range(1, n + 1):
        if lam[i - 1] >= 2:
            out.add((i, i))
        if lam[i - 1] != 1:
            continue
        for j in range(i + 1, n + 1):
            if lam[j - 1] == 1:
                out.add((i, j))
                break
            if lam[j - 1] != 0:
                break
    return frozenset(out)


def _same_coset(lam: Weight, mu: Weight) -> None:
    lam._check(mu)
    if coset_index(lam) != coset_index(mu):
        raise ValueError(f"{lam} and {mu} lie in different cosets of the root lattice")


def meet(lam: Weight, mu: Weight) -> Weight:
    """Coordinatewise minimum in the root basis."""
    _same_coset(lam, mu)
    a, b = fw_to_root(lam).coords, fw_to_root(mu).coords
    return root_to_fw(RootVector(tuple(min(x, y) for x, y in zip(a, b))))


def join(lam: Weight, mu: Weight) -> Weight:
    """Coordinatewise maximum in the root basis."""
    _same_coset(lam, mu)
    a, b = fw_to_root(lam).coords, fw_to_root(mu).coords
    return root_to_fw(RootVector(tuple(max(x, y) for x, y in zip(a, b))))


def join_roots(n: int, roots: Iterable[RootInterval]) -> Weight:
    """The join of a set of positive roots; the empty join is zero."""
    out = Weight.zero(n)
    for r in roots:
        out = join(out, root_weight(n, r))
    return out


def zone_of(lam: Weight) -> Zone:
    _require_dominant(lam)
    return Zone(tuple(min(c, 2) for c in lam.coords))


def all_zones(n: int) -> list[Zone]:
    """All ``3^n`` zones, first coordinate varying slowest."""
    from itertools import product

    return [Zone(p) for p in product(range(3), repeat=n)]


def ideal(lam: Weight) -> frozenset[Weight]:
    """Dominant weights below ``lam`` in its coset, by closure under covers."""
    _require_dominant(lam)
    n = lam.rank
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for root in phi_plus(mu):
            nu = mu - root_weight(n, root)
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return frozenset(seen)


def coset_index(lam: Weight) -> int:
    """Class of ``lam`` in ``Lambda / Z Phi``, as ``sum_i i*l_i mod (n+1)``."""
    n = lam.rank
    return sum(i * c for i, c in enumerate(lam.coords, start=1)) % (n + 1)
