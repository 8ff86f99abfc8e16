"""Paper Boats: the tiles of a lower Bruhat interval of a dominant element.

For ``a`` in the negative parallelepiped set and a dominant weight ``lam``,
write ``I_a(lam)`` for the interval below ``theta_a(lam)``.  The Paper Boat
``PB_a(lam)`` is what remains of ``I_a(lam)`` after removing ``I_a(lam - alpha)``
for every root ``alpha`` along which ``lam`` covers a smaller dominant weight.
The intervals are tiled by Paper Boats, and the size of a Paper Boat only
depends on the zone of ``lam``, so a table of ``3^n`` numbers per ``a`` gives
every interval size.

>>> from alcoves.affine import f_elements
>>> a = f_elements(2)[1]
>>> pb_size_dominant(a, Weight((2, 2)))
6
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial

import numpy as np

from .affine import (
    AffinePermutation,
    _store,
    alcove_vertices,
    compose,
    enumerate_F,
    f_elements,
    inverse,
    theta,
)
from .bruhat import interval_indices
from .report import VerificationReport
from .weights import (
    Weight,
    Zone,
    all_zones,
    coset_index,
    ideal,
    join_roots,
    phi_plus,
    root_weight,
    zone_of,
)

__all__ = [
    "ZoneCountTable",
    "element_of_F",
    "index_in_F",
    "paper_boat",
    "pb_size",
    "pb_size_dominant",
    "interval_size",
    "verify_tiling",
    "verify_zone_constancy",
    "pb_size_via_recurrence",
    "build_zone_table",
    "weighted_interval_size",
    "zone_samples",
    "general_theta",
    "experimental_tiling",
]


def element_of_F(n: int, k: int) -> AffinePermutation:
    """The k-th element (1-based) of the negative parallelepiped set."""
    elements = f_elements(n)
    if not 1 <= k <= len(elements):
        raise ValueError(f"index {k} out of range 1..{len(elements)}")
    return elements[k - 1]


def index_in_F(a: AffinePermutation) -> int:
    return f_elements(a.n).index(a) + 1


def _check(a: AffinePermutation, lam: Weight) -> None:
    if lam.rank != a.n:
        raise ValueError("rank mismatch")
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if a not in enumerate_F(a.n):
        raise ValueError(f"{a} does not lie in the negative parallelepiped")


@lru_cache(maxsize=None)
def _interval(window: tuple[int, ...], dominant_only: bool) -> frozenset[int]:
    return frozenset(interval_indices(AffinePermutation(window), dominant_only).tolist())


def _theta_interval(a: AffinePermutation, lam: Weight, dominant_only: bool) -> frozenset[int]:
    return _interval(theta(a, lam).window, dominant_only)


@lru_cache(maxsize=None)
def _pb(window: tuple[int, ...], coords: tuple[int, ...], dominant_only: bool) -> frozenset[int]:
    a, lam = AffinePermutation(window), Weight(coords)
    out = set(_theta_interval(a, lam, dominant_only))
    for root in phi_plus(lam):
        out -= _theta_interval(a, lam - root_weight(lam.rank, root), dominant_only)
    return frozenset(out)


def _elements(n: int, idx) -> set[AffinePermutation]:
    windows = _store(n).windows
    return {AffinePermutation(windows[i]) for i in idx}


def paper_boat(a: AffinePermutation, lam: Weight) -> set[AffinePermutation]:
    _check(a, lam)
    return _elements(a.n, _pb(a.window, lam.coords, False))


def pb_size(a: AffinePermutation, lam: Weight) -> int:
    _check(a, lam)
    return len(_pb(a.window, lam.coords, False))


def pb_size_dominant(a: AffinePermutation, lam: Weight) -> int:
    _check(a, lam)
    return len(_pb(a.window, lam.coords, True))


def interval_size(a: AffinePermutation, lam: Weight, method: str = "enumerate") -> int:
    """``|I_a(lam)|`` by enumeration, by the dominant slice, or by the zone table."""
    _check(a, lam)
    if method == "enumerate":
        return len(_theta_interval(a, lam, False))
    if method == "dominant":
        return factorial(a.n + 1) * len(_theta_interval(a, lam, True))
    if method == "weighted":
        return weighted_interval_size(a, lam)
    raise ValueError(f"unknown method {method!r}")


def verify_tiling(a: AffinePermutation, lam: Weight) -> VerificationReport:
    """Check that the Paper Boats over ``ideal(lam)`` partition ``I_a(lam)`` elementwise."""
    _check(a, lam)
    report = VerificationReport(f"tiling a={a} lambda={lam}")
    whole = _theta_interval(a, lam, False)
    tiles = {mu: _pb(a.window, mu.coords, False) for mu in sorted(ideal(lam), key=lambda m: m.coords)}
    overlap = None
    for (mu, p), (nu, q) in combinations(tiles.items(), 2):
        if p & q:
            overlap = {"mu": str(mu), "nu": str(nu), "shared": len(p & q)}
            break
    report.add("tiles pairwise disjoint", overlap is None, overlap)
    union = frozenset().union(*tiles.values())
    report.add(
        "union equals interval",
        union == whole,
        {"missing": len(whole - union), "extra": len(union - whole)},
    )
    report.add(
        "sizes add up",
        sum(len(p) for p in tiles.values()) == len(whole),
        {"sum": sum(len(p) for p in tiles.values()), "interval": len(whole)},
    )
    return report


def _vertex_key(x: AffinePermutation, shift: Weight) -> frozenset:
    return frozenset((v + shift).coords for v in alcove_vertices(x))


def verify_zone_constancy(a: AffinePermutation, zone: Zone, samples: list[Weight]) -> VerificationReport:
    """Equal Paper Boat sizes across ``samples``, whose dominant parts are translates of one another."""
    report = VerificationReport(f"zone constancy a={a} zone={zone}")
    for lam in samples:
        _check(a, lam)
        if zone_of(lam) != zone:
            raise ValueError(f"{lam} does not lie in zone {zone}")
    if not samples:
        return report
    base = samples[0]
    base_size = pb_size(a, base)
    base_alcoves = {_vertex_key(x, Weight.zero(a.n)) for x in _elements(a.n, _pb(a.window, base.coords, True))}
    for lam in samples[1:]:
        size = pb_size(a, lam)
        report.add(f"size {lam} = size {base}", size == base_size, {"lambda": str(lam), "size": size, "expected": base_size})
        moved = {_vertex_key(x, base - lam) for x in _elements(a.n, _pb(a.window, lam.coords, True))}
        report.add(f"dominant part at {lam} translates to {base}", moved == base_alcoves, {"lambda": str(lam)})
    return report


def pb_size_via_recurrence(a: AffinePermutation, lam: Weight) -> int:
    """Alternating sum of ``|I_a(lam - join(J))|`` over subsets J of the covering roots."""
    _check(a, lam)
    roots = sorted(phi_plus(lam))
    total = 0
    for k in range(len(roots) + 1):
        for subset in combinations(roots, k):
            mu = lam - join_roots(lam.rank, subset)
            total += (-1) ** k * interval_size(a, mu)
    return total


@dataclass
class ZoneCountTable:
    """Paper Boat sizes ``c_a(Z)`` for every zone Z, for one element ``a``."""

    a: AffinePermutation
    entries: dict[Zone, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.a.n

    @property
    def index(self) -> int:
        return index_in_F(self.a)

    def __getitem__(self, zone: Zone) -> int:
        return self.entries[zone]

    def dominant(self, zone: Zone) -> int:
        return self.entries[zone] // factorial(self.n + 1)

    def rows(self) -> list[tuple[Zone, int]]:
        return [(z, self.entries[z]) for z in all_zones(self.n)]


@lru_cache(maxsize=None)
def _zone_table(window: tuple[int, ...]) -> ZoneCountTable:
    a = AffinePermutation(window)
    table = ZoneCountTable(a)
    for zone in all_zones(a.n):
        table.entries[zone] = pb_size(a, zone.representative())
    return table


def build_zone_table(a: AffinePermutation) -> ZoneCountTable:
    if a not in enumerate_F(a.n):
        raise ValueError(f"{a} does not lie in the negative parallelepiped")
    return _zone_table(a.window)


def weighted_interval_size(a: AffinePermutation, lam: Weight, table: ZoneCountTable | None = None) -> int:
    """``sum_Z c_a(Z) |ideal(lam) & Z|``."""
    _check(a, lam)
    if table is None:
        table = build_zone_table(a)
    if table.a != a:
        raise ValueError("table belongs to a different element")
    return sum(table[zone_of(mu)] for mu in ideal(lam))


def zone_samples(zone: Zone, count: int = 5) -> list[Weight]:
    """Distinct weights of ``zone``: the clamp vector, then its free coordinates pushed upward.

    Zones with no free coordinate have a single weight.
    """
    free = [k for k, v in enumerate(zone.pattern) if v == 2]
    out = {zone.representative(): None}
    step = 1
    while free and len(out) < count:
        for k in free + [None]:
            out[Weight(tuple(
                v + step if (k is None and j in free) or j == k else v for j, v in enumerate(zone.pattern)
            ))] = None
        step += 1
    return list(out)[:count]


def general_theta(a: AffinePermutation, lam: Weight, b: AffinePermutation) -> AffinePermutation:
    """``a^{-1} theta_b(lam)``, an element of the lowest two-sided cell."""
    _check(a, lam)
    return compose(inverse(a), theta(b, lam))


def experimental_tiling(a: AffinePermutation, lam: Weight, b: AffinePermutation) -> VerificationReport:
    """Test the tiling pattern for ``a^{-1} theta_b(lam)``; the outcome is evidence only."""
    report = VerificationReport(f"tiling a={a} b={b} lambda={lam}", conjectural=True)

    def interval(mu: Weight) -> frozenset[int]:
        return _interval(general_theta(a, mu, b).window, False)

    def tile(mu: Weight) -> frozenset[int]:
        out = set(interval(mu))
        for root in phi_plus(mu):
            out -= interval(mu - root_weight(mu.rank, root))
        return frozenset(out)

    tiles = [tile(mu) for mu in sorted(ideal(lam), key=lambda m: m.coords)]
    disjoint = sum(len(t) for t in tiles) == len(frozenset().union(*tiles))
    report.add("tiles pairwise disjoint", disjoint)
    report.add("union equals interval", frozenset().union(*tiles) == interval(lam))
    report.data["coset"] = coset_index(lam)
    return report
