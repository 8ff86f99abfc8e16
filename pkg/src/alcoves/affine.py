"""The affine symmetric group in window notation and its action on weights.

An affine permutation of rank n is a bijection ``pi`` of the integers with
``pi(t + n + 1) = pi(t) + n + 1``, recorded by its window
``[pi(1), ..., pi(n+1)]``.  Elements of the affine Weyl group also satisfy
``sum(window) = (n+1)(n+2)/2``; dropping that condition (modulo the central
shift by ``n+1``) gives the extended group.

Writing ``pi(q(n+1) + r) = (q + mu_r)(n+1) + w(r)`` splits an element into a
finite permutation ``w`` and an integer vector ``mu``.  The geometric action
on weights is ``v -> w(v - g(mu))``; with it the fundamental alcove is
``{x : -1 < <x, alpha> < 0}``, ``s_0`` is the reflection in
``<x, alpha_max> = -1`` and translations act by ``v -> v + lambda``.

>>> s0, s1 = simple_reflection(2, 0), simple_reflection(2, 1)
>>> compose(s0, s1).window
(2, 0, 4)
>>> act_on_weight(s0, Weight((0, 0)))
Weight(coords=(-1, -1))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

import numpy as np

from .weights import (
    FinitePermutation,
    Weight,
    ZVector,
    coset_index,
    g_map,
    height_pairing,
    lift,
    positive_roots,
)

__all__ = [
    "ExtendedAffinePermutation",
    "AffinePermutation",
    "SemidirectElement",
    "identity",
    "simple_reflection",
    "longest_element",
    "compose",
    "inverse",
    "from_word",
    "reduced_word",
    "right_descents",
    "to_semidirect",
    "from_semidirect",
    "act_on_weight",
    "alcove_vertices",
    "length",
    "length_by_hyperplanes",
    "is_dominant",
    "translation",
    "extended_translation",
    "omega",
    "sigma_of",
    "enumerate_F",
    "f_elements",
    "f_words",
    "theta",
    "ball",
    "ball_windows",
]


@dataclass(frozen=True)
class ExtendedAffinePermutation:
    """An element of the extended group, normalized modulo the central shift."""

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(a) for a in self.window)
        m = len(window)
        if m < 2:
            raise ValueError("window must have length at least 2")
        if len({a % m for a in window}) != m:
            raise ValueError(f"window {window} repeats a residue mod {m}")
        object.__setattr__(self, "window", self._normalize(window))

    @staticmethod
    def _normalize(window: tuple[int, ...]) -> tuple[int, ...]:
        m = len(window)
        excess = (sum(window) - m * (m + 1) // 2) // m
        shift = excess // m
        return tuple(a - shift * m for a in window) if shift else window

    @property
    def n(self) -> int:
        return len(self.window) - 1

    def __call__(self, t: int) -> int:
        m = len(self.window)
        q, r = divmod(t - 1, m)
        return self.window[r] + q * m

    def decompose(self) -> tuple[FinitePermutation, ZVector]:
        """The pair ``(w, mu)`` with ``pi(r) = mu_r (n+1) + w(r)``."""
        m = len(self.window)
        w, mu = [], []
        for a in self.window:
            q, r = divmod(a - 1, m)
            w.append(r + 1)
            mu.append(q)
        return FinitePermutation(tuple(w)), tuple(mu)

    def __mul__(self, other: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
        return compose(self, other)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.window) + "]"


class AffinePermutation(ExtendedAffinePermutation):
    """An element of the affine Weyl group: the window also sums to (n+1)(n+2)/2."""

    @staticmethod
    def _normalize(window: tuple[int, ...]) -> tuple[int, ...]:
        m = len(window)
        if sum(window) != m * (m + 1) // 2:
            raise ValueError(f"window {window} does not sum to {m * (m + 1) // 2}")
        return window


@dataclass(frozen=True)
class SemidirectElement:
    """The view ``w eps^mu`` of an affine permutation, with ``sum(mu) = 0``."""

    w: FinitePermutation
    mu: ZVector

    def __post_init__(self) -> None:
        if sum(self.mu) != 0:
            raise ValueError("mu must have coordinate sum 0")
        if len(self.mu) != self.w.size:
            raise ValueError("size mismatch between w and mu")


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(tuple(range(1, n + 2)))


def simple_reflection(n: int, i: int) -> AffinePermutation:
    if not 0 <= i <= n:
        raise ValueError(f"simple reflection index {i} out of range for rank {n}")
    window = list(range(1, n + 2))
    if i == 0:
        window[0], window[n] = 0, n + 2
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return AffinePermutation(tuple(window))


def longest_element(n: int) -> AffinePermutation:
    """The longest element of the finite Weyl group, as an affine permutation."""
    return AffinePermutation(tuple(range(n + 1, 0, -1)))


def _check_rank(x: ExtendedAffinePermutation, y: ExtendedAffinePermutation) -> None:
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")


def compose(x: ExtendedAffinePermutation, y: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
    """The window of ``pi_x o pi_y``."""
    _check_rank(x, y)
    window = tuple(x(a) for a in y.window)
    if type(x) is AffinePermutation and type(y) is AffinePermutation:
        return AffinePermutation(window)
    return ExtendedAffinePermutation(window)


def inverse(x: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
    m = len(x.window)
    inv = [0] * m
    for t, a in enumerate(x.window, start=1):
        q, r = divmod(a - 1, m)
        inv[r] = t - q * m
    return type(x)(tuple(inv))


def as_affine(x: ExtendedAffinePermutation) -> AffinePermutation:
    """Reinterpret an extended element that lies in the affine Weyl group."""
    return x if type(x) is AffinePermutation else AffinePermutation(x.window)


def _right_simple(window: tuple[int, ...], i: int) -> tuple[int, ...]:
    m = len(window)
    w = list(window)
    if i == 0:
        w[0], w[m - 1] = window[m - 1] - m, window[0] + m
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def from_word(n: int, word: Iterable[int]) -> AffinePermutation:
    """The product ``s_{i_1} s_{i_2} ... s_{i_k}``."""
    window = tuple(range(1, n + 2))
    for i in word:
        window = _right_simple(window, i)
    return AffinePermutation(window)


def right_descents(x: ExtendedAffinePermutation) -> list[int]:
    """Indices i with ``l(x s_i) < l(x)``, read off as ``pi(i) > pi(i+1)``."""
    return [i for i in range(x.n + 1) if x(i) > x(i + 1)]


def reduced_word(x: AffinePermutation) -> tuple[int, ...]:
    """A reduced word, found by repeatedly stripping the smallest right descent."""
    window = x.window
    word = []
    while True:
        m = len(window)
        desc = next((i for i in range(m) if (window[i - 1] if i else window[m - 1] - m) > window[i]), None)
        if desc is None:
            break
        word.append(desc)
        window = _right_simple(window, desc)
    return tuple(reversed(word))


def to_semidirect(x: AffinePermutation) -> SemidirectElement:
    w, mu = x.decompose()
    return SemidirectElement(w, mu)


def from_semidirect(s: SemidirectElement) -> AffinePermutation:
    m = s.w.size
    return AffinePermutation(tuple(mu_r * m + s.w(r) for r, mu_r in enumerate(s.mu, start=1)))


def act_on_weight(x: ExtendedAffinePermutation, v: Weight) -> Weight:
    if v.rank != x.n:
        raise ValueError(f"rank mismatch: weight of rank {v.rank}, element of rank {x.n}")
    w, mu = x.decompose()
    shifted = tuple(a - b for a, b in zip(lift(v), mu))
    return g_map(w.act(shifted))


def alcove_vertices(x: ExtendedAffinePermutation) -> list[Weight]:
    """Images of the vertices ``0, -w_1, ..., -w_n`` of the fundamental alcove, in that order."""
    n = x.n
    return [act_on_weight(x, -Weight.fundamental(n, i)) for i in range(n + 1)]


def length(x: AffinePermutation) -> int:
    """Coxeter length via the window inversion count."""
    m = len(x.window)
    a = x.window
    return sum(abs((a[j] - a[i]) // m) for i in range(m) for j in range(i + 1, m))


def length_by_hyperplanes(x: AffinePermutation) -> int:
    """Number of reflecting hyperplanes separating the alcove of ``x`` from the fundamental one.

    For a positive root the alcove lies in a strip ``k < <v, alpha> < k+1``,
    with ``k`` the least pairing over its vertices; the fundamental alcove
    has ``k = -1``.
    """
    verts = alcove_vertices(x)
    total = 0
    for i, j in positive_roots(x.n):
        k = min(sum(v.coords[i - 1 : j]) for v in verts)
        total += abs(k + 1)
    return total


def is_dominant(x: ExtendedAffinePermutation) -> bool:
    return all(v.is_dominant() for v in alcove_vertices(x))


def extended_translation(lam: Weight) -> ExtendedAffinePermutation:
    m = lam.rank + 1
    return ExtendedAffinePermutation(tuple(-c * m + r for r, c in enumerate(lift(lam), start=1)))


def translation(lam: Weight) -> AffinePermutation:
    if coset_index(lam) != 0:
        raise ValueError(f"{lam} is not in the root lattice")
    return as_affine(extended_translation(lam))


@lru_cache(maxsize=None)
def omega(n: int) -> tuple[ExtendedAffinePermutation, ...]:
    """The stabilizer of the fundamental alcove in the extended group.

    Brute force over windows with entries in ``1..2(n+1)``, keeping those
    that permute the vertices of the fundamental alcove.
    """
    m = n + 1
    target = sorted(alcove_vertices(identity(n)), key=lambda v: v.coords)
    found = []
    for perm in permutations(range(1, m + 1)):
        for lifts in product((0, 1), repeat=m):
            x = ExtendedAffinePermutation(tuple(r + q * m for r, q in zip(perm, lifts)))
            if sorted(alcove_vertices(x), key=lambda v: v.coords) == target:
                found.append(x)
    found = sorted(set(found), key=lambda x: x.window)
    if len(found) != m:
        raise AssertionError(f"expected {m} elements fixing the fundamental alcove, found {len(found)}")
    return tuple(found)


def sigma_of(lam: Weight) -> ExtendedAffinePermutation:
    """The element of ``omega`` with ``t_lam sigma^{-1}`` in the affine Weyl group.

    Equivalently ``lam = -sigma^{-1}(0) = sigma(0)`` modulo the root lattice.
    """
    n = lam.rank
    k = coset_index(lam)
    for sigma in omega(n):
        if coset_index(-act_on_weight(inverse(sigma), Weight.zero(n))) == k:
            return sigma
    raise AssertionError("no element of omega matches the coset")


def _in_negative_box(x: ExtendedAffinePermutation) -> bool:
    return all(-1 <= c <= 0 for v in alcove_vertices(x) for c in v.coords)


@lru_cache(maxsize=None)
def enumerate_F(n: int) -> tuple[AffinePermutation, ...]:
    """Elements whose alcoves lie in ``{-1 <= <x, alpha_j> <= 0}``, ordered by (length, window)."""
    start = identity(n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(n + 1):
                y = AffinePermutation(_right_simple(x.window, i))
                if y not in seen and _in_negative_box(y):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen, key=lambda x: (length(x), x.window)))


_A3_WORDS = ((), (0,), (0, 1), (0, 3), (0, 1, 3), (0, 1, 3, 2))


def f_words(n: int) -> tuple[tuple[int, ...], ...]:
    """Words for the elements of :func:`f_elements`, in the same order."""
    if n == 3:
        return _A3_WORDS
    return tuple(reduced_word(a) for a in enumerate_F(n))


@lru_cache(maxsize=None)
def f_elements(n: int) -> tuple[AffinePermutation, ...]:
    """The elements ``a_1, a_2, ...`` used for indexing.

    In rank 3 the order is ``id, s0, s0s1, s0s3, s0s1s3, s0s1s3s2``; in
    other ranks it is the canonical (length, window) order.
    """
    canonical = enumerate_F(n)
    if n != 3:
        return canonical
    listed = tuple(from_word(3, w) for w in _A3_WORDS)
    if set(listed) != set(canonical):
        raise AssertionError("rank-3 word list does not match the enumerated set")
    return listed


def theta(a: AffinePermutation, lam: Weight) -> AffinePermutation:
    """The dominant element whose alcove is the alcove of ``w0 a`` translated by ``lam``."""
    n = a.n
    if lam.rank != n:
        raise ValueError("rank mismatch")
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if a not in enumerate_F(n):
        raise ValueError(f"{a} does not lie in the negative parallelepiped")
    x = compose(compose(compose(extended_translation(lam), longest_element(n)), a), inverse(sigma_of(lam)))
    return as_affine(x)


class _BallStore:
    """Layers of the Cayley graph grown by right multiplication, sorted within each layer."""

    def __init__(self, n: int) -> None:
        self.n = n
        start = tuple(range(1, n + 2))
        self.windows: list[tuple[int, ...]] = [start]
        self.offsets = [0, 1]
        self._array: np.ndarray | None = None

    @property
    def max_length(self) -> int:
        return len(self.offsets) - 2

    def ensure(self, L: int) -> None:
        while self.max_length < L:
            k = self.max_length
            layer = self.windows[self.offsets[k] : self.offsets[k + 1]]
            prev = set(self.windows[self.offsets[k - 1] : self.offsets[k]]) if k > 0 else set()
            nxt = set()
            for w in layer:
                for i in range(self.n + 1):
                    v = _right_simple(w, i)
                    if v not in prev:
                        nxt.add(v)
            self.windows.extend(sorted(nxt))
            self.offsets.append(len(self.windows))
            self._array = None

    def count(self, L: int) -> int:
        self.ensure(L)
        return self.offsets[L + 1]

    def array(self, L: int) -> np.ndarray:
        self.ensure(L)
        if self._array is None or len(self._array) < len(self.windows):
            self._array = np.array(self.windows, dtype=np.int64)
        return self._array[: self.offsets[L + 1]]


@lru_cache(maxsize=None)
def _store(n: int) -> _BallStore:
    return _BallStore(n)


def ball_windows(n: int, L: int) -> np.ndarray:
    """Windows of all elements of length at most ``L`` as an array, in (length, window) order."""
    if L < 0:
        raise ValueError("length bound must be nonnegative")
    return _store(n).array(L)


def ball(n: int, L: int) -> list[AffinePermutation]:
    """All elements of length at most ``L``, ordered by (length, window)."""
    if L < 0:
        raise ValueError("length bound must be nonnegative")
    store = _store(n)
    return [AffinePermutation(w) for w in store.windows[: store.count(L)]]


def ball_lengths(n: int, L: int) -> np.ndarray:
    store = _store(n)
    store.ensure(L)
    out = np.empty(store.offsets[L + 1], dtype=np.int64)
    for k in range(L + 1):
        out[store.offsets[k] : store.offsets[k + 1]] = k
    return out


def theta_length(a: AffinePermutation, lam: Weight) -> int:
    """``l(a) + l(w0) + 2<lam, rho>``."""
    n = a.n
    return length(a) + n * (n + 1) // 2 + height_pairing(lam)


def windows_of(xs: Sequence[ExtendedAffinePermutation]) -> list[tuple[int, ...]]:
    return [x.window for x in xs]
