"""Bruhat order on the affine symmetric group.

Three comparisons are provided:

* :func:`leq`, the general criterion.  Write ``x = w eps^mu``.  For each
  pair ``1 <= i, j <= n+1`` form the vector ``mu + w'_i - w^{-1} w'_{j-1}``
  (``w'_k`` is the 0/1 vector with k leading ones), sort it into decreasing
  order and take prefix sums.  Then ``x <= y`` iff every prefix sum for
  ``x`` is at most the corresponding one for ``y``.
* :func:`leq_dominant`, for elements whose alcoves lie in the dominant
  chamber: ``x <= y`` iff ``x(-w_i) <= y(-w_i)`` in dominance order for each i.
* :func:`leq_oracle`, the subword property on a fixed reduced word.  It is
  slow and exists to validate the other two.

Both fast tests reduce to an elementwise comparison of integer signatures,
which is what makes interval enumeration over a length ball cheap.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .affine import (
    AffinePermutation,
    _right_simple,
    _store,
    ball_windows,
    is_dominant,
    length,
    reduced_word,
)

__all__ = [
    "criterion_signature",
    "vertex_signature",
    "leq",
    "leq_dominant",
    "leq_oracle",
    "subword_elements",
    "lower_interval",
    "lower_interval_dominant",
    "interval_indices",
    "interval_size",
    "OracleBoundExceeded",
]

DEFAULT_ORACLE_BOUND = 12


class OracleBoundExceeded(ValueError):
    pass


def _split(windows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    m = windows.shape[1]
    w = (windows - 1) % m + 1
    mu = (windows - w) // m
    return w, mu


def criterion_signature(windows: np.ndarray) -> np.ndarray:
    """Prefix sums of the sorted vectors of the general criterion, one row per window."""
    windows = np.atleast_2d(np.asarray(windows, dtype=np.int64))
    n_el, m = windows.shape
    w, mu = _split(windows)
    k = np.arange(m)
    leading = (k[None, :] < np.arange(1, m + 1)[:, None]).astype(np.int64)  # row i-1 is w'_i
    # inv[:, j-1, k] = 1 iff w(k) <= j-1, i.e. the k-th entry of w^{-1} w'_{j-1}
    inv = (w[:, None, :] <= np.arange(m)[None, :, None]).astype(np.int64)
    vecs = mu[:, None, None, :] + leading[None, :, None, :] - inv[:, None, :, :]
    vecs = -np.sort(-vecs, axis=-1)
    sums = np.cumsum(vecs, axis=-1)[..., : m - 1]
    return sums.reshape(n_el, -1).astype(np.int32)


def vertex_signature(windows: np.ndarray) -> np.ndarray:
    """Prefix sums of the lifted vertices ``x(-w_i)``, i = 0..n, one row per window."""
    windows = np.atleast_2d(np.asarray(windows, dtype=np.int64))
    n_el, m = windows.shape
    w, mu = _split(windows)
    k = np.arange(m)
    neg_fund = -(k[None, :] < np.arange(m)[:, None]).astype(np.int64)  # row i is -w'_i
    pre = neg_fund[None, :, :] - mu[:, None, :]
    lifted = np.empty_like(pre)
    np.put_along_axis(lifted, np.broadcast_to((w - 1)[:, None, :], pre.shape), pre, axis=-1)
    sums = np.cumsum(lifted, axis=-1)[..., : m - 1]
    return sums.reshape(n_el, -1).astype(np.int32)


def _dominant_flags(windows: np.ndarray) -> np.ndarray:
    """Whether every lifted vertex is weakly decreasing."""
    windows = np.atleast_2d(np.asarray(windows, dtype=np.int64))
    n_el, m = windows.shape
    w, mu = _split(windows)
    k = np.arange(m)
    neg_fund = -(k[None, :] < np.arange(m)[:, None]).astype(np.int64)
    pre = neg_fund[None, :, :] - mu[:, None, :]
    lifted = np.empty_like(pre)
    np.put_along_axis(lifted, np.broadcast_to((w - 1)[:, None, :], pre.shape), pre, axis=-1)
    return np.all(np.diff(lifted, axis=-1) <= 0, axis=(1, 2))


class _SignatureCache:
    def __init__(self, n: int) -> None:
        self.n = n
        self.crit = np.zeros((0, (n + 1) ** 2 * n), dtype=np.int32)
        self.dom = np.zeros(0, dtype=bool)
        self.vert = np.zeros((0, (n + 1) * n), dtype=np.int32)

    def upto(self, L: int) -> int:
        windows = ball_windows(self.n, L)
        have = len(self.crit)
        if have < len(windows):
            tail = windows[have:]
            self.crit = np.concatenate([self.crit, criterion_signature(tail)])
            self.dom = np.concatenate([self.dom, _dominant_flags(tail)])
            self.vert = np.concatenate([self.vert, vertex_signature(tail)])
        return len(windows)


@lru_cache(maxsize=None)
def _signatures(n: int) -> _SignatureCache:
    return _SignatureCache(n)


def leq(x: AffinePermutation, y: AffinePermutation) -> bool:
    if x.n != y.n:
        raise ValueError("rank mismatch")
    sig = criterion_signature(np.array([x.window, y.window]))
    return bool(np.all(sig[0] <= sig[1]))


def leq_dominant(x: AffinePermutation, y: AffinePermutation) -> bool:
    if x.n != y.n:
        raise ValueError("rank mismatch")
    if not (is_dominant(x) and is_dominant(y)):
        raise ValueError("both arguments must be dominant")
    sig = vertex_signature(np.array([x.window, y.window]))
    return bool(np.all(sig[0] <= sig[1]))


@lru_cache(maxsize=4096)
def _subword_windows(window: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    y = AffinePermutation(window)
    reached = {tuple(range(1, y.n + 2))}
    for i in reduced_word(y):
        reached |= {_right_simple(v, i) for v in reached}
    return frozenset(reached)


def subword_elements(y: AffinePermutation, bound: int = DEFAULT_ORACLE_BOUND) -> frozenset[AffinePermutation]:
    """All products of subwords of one reduced word of ``y``."""
    if length(y) > bound:
        raise OracleBoundExceeded(f"length {length(y)} exceeds oracle bound {bound}")
    return frozenset(AffinePermutation(w) for w in _subword_windows(y.window))


def leq_oracle(x: AffinePermutation, y: AffinePermutation, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    if x.n != y.n:
        raise ValueError("rank mismatch")
    if length(y) > bound:
        raise OracleBoundExceeded(f"length {length(y)} exceeds oracle bound {bound}")
    return x.window in _subword_windows(y.window)


def interval_indices(y: AffinePermutation, dominant_only: bool = False) -> np.ndarray:
    """Positions in the length ball of the elements below ``y``."""
    cache = _signatures(y.n)
    count = cache.upto(length(y))
    sig_y = criterion_signature(np.array([y.window]))[0]
    mask = np.all(cache.crit[:count] <= sig_y, axis=1)
    if dominant_only:
        mask &= cache.dom[:count]
    return np.flatnonzero(mask)


def interval_size(y: AffinePermutation, dominant_only: bool = False) -> int:
    return len(interval_indices(y, dominant_only))


def _to_elements(n: int, idx: np.ndarray) -> set[AffinePermutation]:
    windows = _store(n).windows
    return {AffinePermutation(windows[i]) for i in idx}


def lower_interval(y: AffinePermutation) -> set[AffinePermutation]:
    return _to_elements(y.n, interval_indices(y))


def lower_interval_dominant(y: AffinePermutation) -> set[AffinePermutation]:
    if not is_dominant(y):
        raise ValueError(f"{y} is not dominant")
    return _to_elements(y.n, interval_indices(y, dominant_only=True))


def dominant_interval_indices_by_vertices(y: AffinePermutation) -> np.ndarray:
    """Dominant elements below ``y`` selected with the vertex test instead of the general one."""
    if not is_dominant(y):
        raise ValueError(f"{y} is not dominant")
    cache = _signatures(y.n)
    count = cache.upto(length(y))
    sig_y = vertex_signature(np.array([y.window]))[0]
    mask = cache.dom[:count] & np.all(cache.vert[:count] <= sig_y, axis=1)
    return np.flatnonzero(mask)
