"""Permutohedra, their dominant slices, lattice points and Ehrhart fits.

Points are rational vectors in fundamental-weight coordinates.  ``P(lam)`` is
the convex hull of the Weyl orbit of ``lam``; a point lies in it exactly when
its dominant representative is below ``lam`` in dominance order, which is a
prefix-sum test on the lift to ``Q^{n+1}``.  ``P+(lam)`` is the part of
``P(lam)`` in the dominant chamber:

    P+(lam) = { x : <w_i, x> <= <w_i, lam>,  <alpha_i, x> >= 0 }.

Here ``<w_i, x>`` is the i-th root coordinate of x and ``<alpha_i, x>`` its
i-th fundamental coordinate.

>>> sorted(ideal_lattice_points(Weight((1, 1))), key=lambda w: w.coords)
[Weight(coords=(0, 0)), Weight(coords=(1, 1))]
>>> relative_volume(Weight((1, 1)))
Fraction(3, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, floor, ceil
from typing import Callable, Iterable, Sequence

import numpy as np
import sympy
from scipy.optimize import linprog

from .report import VerificationReport
from .weights import (
    Weight,
    Zone,
    cartan_matrix,
    coset_index,
    fw_to_root,
    ideal,
    inverse_cartan,
    positive_roots,
    zone_of,
)

__all__ = [
    "RationalPoint",
    "HPolytope",
    "QuasiPolynomial",
    "FitError",
    "permutohedron_contains",
    "p_plus",
    "ideal_lattice_points",
    "count_zone_slice",
    "p_plus_vertices",
    "translation_trick_check",
    "minkowski_check",
    "orbit_size",
    "dilation_counts",
    "fit_quasipolynomial",
    "fit_with_holdout",
    "ehrhart_polynomial",
    "relative_volume",
    "top_component_check",
    "cartan_minor",
    "minor_partition_decomposition",
    "cartan_minor_check",
    "inverse_cartan_minor_check",
    "shi_membership",
]

RationalPoint = tuple[Fraction, ...]


class FitError(ValueError):
    """Raised when samples cannot determine, or are not matched by, a quasi-polynomial."""


def _as_point(x: Iterable) -> RationalPoint:
    if isinstance(x, Weight):
        x = x.coords
    return tuple(Fraction(c) for c in x)


def _lift(x: RationalPoint) -> list[Fraction]:
    out = [Fraction(0)]
    for c in reversed(x):
        out.append(out[-1] + c)
    return out[::-1]


def _centered_prefix_sums(v: Sequence[Fraction]) -> list[Fraction]:
    mean = sum(v, Fraction(0)) / len(v)
    sums, acc = [], Fraction(0)
    for c in v:
        acc += c - mean
        sums.append(acc)
    return sums


def permutohedron_contains(lam: Weight, x) -> bool:
    """Whether ``x`` lies in the convex hull of the Weyl orbit of ``lam``."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    x = _as_point(x)
    if len(x) != lam.rank:
        raise ValueError("rank mismatch")
    xs = sorted(_lift(x), reverse=True)
    ls = _lift(_as_point(lam))
    return all(a <= b for a, b in zip(_centered_prefix_sums(xs), _centered_prefix_sums(ls)))


@dataclass
class HPolytope:
    """Constraints ``<normal, x> rel bound`` on points in fundamental coordinates."""

    constraints: list[tuple[RationalPoint, str, Fraction]] = field(default_factory=list)

    def contains(self, x) -> bool:
        x = _as_point(x)
        for normal, rel, bound in self.constraints:
            value = sum((a * b for a, b in zip(normal, x)), Fraction(0))
            if rel == "<=" and value > bound:
                return False
            if rel == ">=" and value < bound:
                return False
            if rel == "=" and value != bound:
                return False
        return True

    def dilate(self, m: int) -> HPolytope:
        return HPolytope([(nrm, rel, b * m) for nrm, rel, b in self.constraints])

    def lattice_points(self, lower: Sequence[int], upper: Sequence[int]) -> list[tuple[int, ...]]:
        """Integer points inside the box ``lower <= x <= upper`` that satisfy every constraint."""
        ranges = [range(lo, hi + 1) for lo, hi in zip(lower, upper)]
        return [p for p in product(*ranges) if self.contains(p)]


def p_plus(lam: Weight) -> HPolytope:
    n = lam.rank
    inv = inverse_cartan(n)
    c = fw_to_root(lam).coords
    cons = [(tuple(inv[i]), "<=", c[i]) for i in range(n)]
    cons += [(tuple(Fraction(int(j == i)) for j in range(n)), ">=", Fraction(0)) for i in range(n)]
    return HPolytope(cons)


def _dominant_box(lam: Weight) -> list[int]:
    # for dominant x the i-th root coordinate is at least inv[i][i] * x_i
    inv = inverse_cartan(lam.rank)
    c = fw_to_root(lam).coords
    return [floor(c[i] / inv[i][i]) for i in range(lam.rank)]


def ideal_lattice_points(lam: Weight) -> frozenset[Weight]:
    """Dominant weights of ``P(lam)`` in the coset of ``lam``, by scanning a box."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    k = coset_index(lam)
    out = set()
    for p in product(*(range(b + 1) for b in _dominant_box(lam))):
        w = Weight(p)
        if coset_index(w) == k and permutohedron_contains(lam, p):
            out.add(w)
    return frozenset(out)


def count_zone_slice(lam: Weight, zone: Zone) -> int:
    return sum(1 for mu in ideal_lattice_points(lam) if zone_of(mu) == zone)


def _to_sympy(rows) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in rows])


def _to_fraction(r) -> Fraction:
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


@lru_cache(maxsize=None)
def _p_plus_vertices(coords: tuple[int, ...]) -> tuple[RationalPoint, ...]:
    lam = Weight(coords)
    n = lam.rank
    poly = p_plus(lam)
    normals = [c[0] for c in poly.constraints]
    rhs = [c[2] for c in poly.constraints]
    found = set()
    for rows in combinations(range(2 * n), n):
        a = _to_sympy([normals[r] for r in rows])
        if a.det() == 0:
            continue
        b = _to_sympy([[rhs[r]] for r in rows])
        sol = tuple(_to_fraction(v) for v in a.LUsolve(b))
        if poly.contains(sol):
            found.add(sol)
    return tuple(sorted(found))


def p_plus_vertices(lam: Weight) -> list[RationalPoint]:
    """Vertices of ``P+(lam)`` from all nonsingular n-by-n subsystems of its inequalities."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if lam.rank > 4:
        raise ValueError("vertex enumeration is limited to rank at most 4")
    return list(_p_plus_vertices(lam.coords))


def root_denominators_divide(points: Iterable[RationalPoint], n: int) -> bool:
    """Whether every root coordinate of every point has denominator dividing ``(n+1)!``."""
    inv = inverse_cartan(n)
    bound = factorial(n + 1)
    for p in points:
        for row in inv:
            if bound % sum((a * b for a, b in zip(row, p)), Fraction(0)).denominator:
                return False
    return True


def translation_trick_check(lam: Weight, zone: Zone) -> VerificationReport:
    """Compare the zone slice of ``P+(lam)`` shifted by ``w(zone)`` with a face of ``P+(lam - w(zone))``.

    Needs ``lam - w(zone)`` dominant; lattice points are compared in the
    coset of ``lam - w(zone)``.
    """
    shift = zone.representative()
    base = lam - shift
    if not base.is_dominant():
        raise ValueError(f"{lam} minus {shift} is not dominant")
    report = VerificationReport(f"translation trick lambda={lam} zone={zone}")
    left = {mu - shift for mu in ideal_lattice_points(lam) if zone_of(mu) == zone}
    fixed = [j for j, v in enumerate(zone.pattern) if v != 2]
    right = {nu for nu in ideal_lattice_points(base) if all(nu[j] == 0 for j in fixed)}
    diff = sorted(left ^ right, key=lambda w: w.coords)
    report.add("lattice points agree", not diff, str(diff[0]) if diff else None)
    report.data["points"] = len(left)
    return report


def _in_hull_exact(p: RationalPoint, points: list[RationalPoint]) -> bool:
    """Membership of ``p`` in the convex hull of ``points``.

    A vertex solution of the feasibility LP picks at most n+1 points; the
    barycentric coordinates on those are then recomputed exactly.
    """
    pts = np.array([[float(c) for c in q] for q in points])
    n = len(p)
    a_eq = np.vstack([pts.T, np.ones(len(points))])
    b_eq = np.array([float(c) for c in p] + [1.0])
    res = linprog(np.zeros(len(points)), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs-ds")
    if res.status != 0:
        return False
    support = [k for k, v in enumerate(res.x) if v > 1e-9]
    mat = _to_sympy([[points[k][i] for k in support] for i in range(n)] + [[Fraction(1)] * len(support)])
    rhs = _to_sympy([[c] for c in p] + [[Fraction(1)]])
    try:
        sol, params = mat.gauss_jordan_solve(rhs)
    except ValueError:
        return False
    sol = sol.subs({t: 0 for t in params})
    return all(v >= 0 for v in sol)


def minkowski_check(z: Weight, y: Weight) -> VerificationReport:
    """``P+(z) + P+(y) = P+(z + y)`` at the level of vertices and of lattice points."""
    for w in (z, y):
        if not w.is_dominant():
            raise ValueError(f"{w} is not dominant")
    report = VerificationReport(f"minkowski z={z} y={y}")
    vz, vy, vzy = p_plus_vertices(z), p_plus_vertices(y), p_plus_vertices(z + y)
    target = p_plus(z + y)
    sums = {tuple(a + b for a, b in zip(p, q)) for p in vz for q in vy}
    outside = next((s for s in sorted(sums) if not target.contains(s)), None)
    report.add("vertex sums lie in P+(z+y)", outside is None, outside and [str(c) for c in outside])
    missing = next((v for v in vzy if v not in sums), None)
    report.add("vertices of P+(z+y) are vertex sums", missing is None, missing and [str(c) for c in missing])

    upper = _dominant_box(z + y)
    lattice = target.lattice_points([0] * z.rank, upper)
    hull = sorted(sums)
    stray = next((p for p in lattice if not _in_hull_exact(_as_point(p), hull)), None)
    report.add("lattice points of P+(z+y) lie in P+(z)+P+(y)", stray is None, stray)
    pz = p_plus(z).lattice_points([0] * z.rank, _dominant_box(z))
    py = p_plus(y).lattice_points([0] * y.rank, _dominant_box(y))
    lattice_set = set(lattice)
    bad = next((tuple(a + b for a, b in zip(p, q)) for p in pz for q in py
                if tuple(a + b for a, b in zip(p, q)) not in lattice_set), None)
    report.add("sums of lattice points lie in P+(z+y)", bad is None, bad)
    if z == y:
        doubled = {tuple(2 * c for c in v) for v in vz}
        report.add("P+(2z) = 2 P+(z)", doubled == set(vzy), None)
    report.data["lattice_points"] = len(lattice)
    return report


def orbit_size(mu: Weight) -> int:
    """Size of the Weyl orbit of a dominant weight."""
    n = mu.rank
    size = factorial(n + 1)
    run = 0
    for c in list(mu.coords) + [1]:
        if c == 0:
            run += 1
        else:
            size //= factorial(run + 1)
            run = 0
    return size


def dilation_counts(lam, m_max: int, box: tuple[Sequence[Fraction], Sequence[Fraction]] | None = None) -> list[int]:
    """``|mP & lattice|`` for ``m = 0..m_max``.

    For a weight, P is ``P(lam)`` counted in the coset ``m lam + Z Phi``;
    for an :class:`HPolytope` the lattice is ``Z^k`` and ``box`` bounds P.
    """
    if isinstance(lam, Weight):
        if not lam.is_dominant():
            raise ValueError(f"{lam} is not dominant")
        return [sum(orbit_size(mu) for mu in ideal(lam * m)) for m in range(m_max + 1)]
    if box is None:
        raise ValueError("a bounding box is needed for a general polytope")
    lo, hi = box
    out = []
    for m in range(m_max + 1):
        scaled = lam.dilate(m)
        out.append(len(scaled.lattice_points([floor(m * a) for a in lo], [ceil(m * b) for b in hi])))
    return out


def _monomials(k: int, degree: int) -> list[tuple[int, ...]]:
    return [e for e in product(range(degree + 1), repeat=k) if sum(e) <= degree]


@dataclass
class QuasiPolynomial:
    """One polynomial per residue class of the period lattice."""

    period: tuple[int, ...]
    degree: int
    pieces: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]

    def _key(self, point: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(p % q for p, q in zip(point, self.period))

    def __call__(self, point) -> Fraction:
        point = (point,) if isinstance(point, int) else tuple(point)
        poly = self.pieces[self._key(point)]
        total = Fraction(0)
        for exps, coef in poly.items():
            term = coef
            for x, e in zip(point, exps):
                term *= Fraction(x) ** e
            total += term
        return total

    def top_part(self, residue: tuple[int, ...] | None = None) -> dict[tuple[int, ...], Fraction]:
        residue = residue if residue is not None else next(iter(self.pieces))
        return {e: c for e, c in self.pieces[residue].items() if sum(e) == self.degree and c != 0}

    def leading_coefficient(self) -> Fraction:
        """For one variable: the coefficient of ``t^degree``, required to agree on every residue."""
        if len(self.period) != 1:
            raise ValueError("leading coefficient is defined here for one variable only")
        values = {poly.get((self.degree,), Fraction(0)) for poly in self.pieces.values()}
        if len(values) != 1:
            raise FitError(f"leading coefficients differ between residues: {sorted(values)}")
        return values.pop()

    def is_polynomial(self) -> bool:
        """Whether every residue class carries the same polynomial."""
        polys = [{e: c for e, c in p.items() if c} for p in self.pieces.values()]
        return all(p == polys[0] for p in polys)


def fit_quasipolynomial(samples, period, degree: int) -> QuasiPolynomial:
    """Exact interpolation, one polynomial of total degree ``degree`` per residue class.

    ``samples`` maps points (ints or integer tuples) or is a list indexed by
    ``m = 0, 1, ...``.  Every sample must be matched exactly.
    """
    if isinstance(samples, (list, tuple)):
        samples = {m: v for m, v in enumerate(samples)}
    data = {((p,) if isinstance(p, int) else tuple(p)): Fraction(v) for p, v in samples.items()}
    k = len(next(iter(data)))
    period = (period,) * k if isinstance(period, int) else tuple(period)
    monos = _monomials(k, degree)
    pieces = {}
    for residue in product(*(range(q) for q in period)):
        pts = [p for p in sorted(data) if tuple(a % q for a, q in zip(p, period)) == residue]
        if len(pts) < len(monos):
            raise FitError(f"residue {residue} has {len(pts)} samples, needs {len(monos)}")
        mat = sympy.Matrix([[sympy.prod([sympy.Integer(x) ** e for x, e in zip(p, exps)]) for exps in monos]
                            for p in pts])
        rhs = sympy.Matrix([sympy.Rational(data[p].numerator, data[p].denominator) for p in pts])
        if mat.rank() < len(monos):
            raise FitError(f"samples in residue {residue} do not determine a degree-{degree} polynomial")
        try:
            sol, params = mat.gauss_jordan_solve(rhs)
        except ValueError as exc:
            raise FitError(f"samples in residue {residue} are not interpolated by degree {degree}") from exc
        pieces[residue] = {e: _to_fraction(c) for e, c in zip(monos, sol)}
    return QuasiPolynomial(period, degree, pieces)


def fit_with_holdout(counts: Sequence[int], degree: int, period: int = 1, holdout: int = 2) -> tuple[QuasiPolynomial, bool]:
    """Fit on all but the last ``holdout`` counts, then report whether those are predicted."""
    train = list(counts[: len(counts) - holdout])
    qp = fit_quasipolynomial(train, period, degree)
    predicted = all(qp(m) == counts[m] for m in range(len(train), len(counts)))
    return qp, predicted


def ehrhart_polynomial(lam: Weight) -> QuasiPolynomial:
    """The Ehrhart polynomial of ``P(lam)`` with respect to the root lattice; checked on two extra dilations."""
    n = lam.rank
    counts = dilation_counts(lam, n + 2)
    qp, ok = fit_with_holdout(counts, n, 1)
    if not ok:
        raise FitError(f"Ehrhart fit for {lam} failed on held-out dilations")
    return qp


@lru_cache(maxsize=None)
def _relative_volume(coords: tuple[int, ...]) -> Fraction:
    return ehrhart_polynomial(Weight(coords)).leading_coefficient()


def relative_volume(lam: Weight) -> Fraction:
    """Volume of ``P(lam)`` in units of a fundamental cell of the root lattice."""
    return _relative_volume(lam.coords)


def top_component_check(a, direction: Weight, base: Weight, method: str = "enumerate") -> VerificationReport:
    """Fit ``|I_a(base + t direction)|`` in t and compare leading coefficients.

    ``a`` is one element or a list of elements.  The leading coefficients
    must agree with each other and with ``(n+1)!`` times the relative volume
    of ``P(direction)``.
    """
    from .paperboat import interval_size

    elements = list(a) if isinstance(a, (list, tuple)) else [a]
    n = base.rank
    if all(c == 0 for c in direction.coords):
        raise ValueError("direction must be nonzero")
    if not direction.is_dominant():
        raise ValueError("direction must be dominant to stay in the zone")
    if any(c < 2 for c in base.coords):
        raise ValueError(f"base {base} is not in the zone (2,...,2)")
    report = VerificationReport(f"top component along {direction} from {base}")
    expected = factorial(n + 1) * relative_volume(direction)
    steps = n + 3
    leading = {}
    for x in elements:
        counts = [interval_size(x, base + direction * t, method) for t in range(steps)]
        try:
            qp, ok = fit_with_holdout(counts, n, 1)
        except FitError as exc:
            report.add(f"fit for a={x}", False, str(exc))
            continue
        report.add(f"fit for a={x} predicts held-out samples", ok, counts)
        leading[str(x)] = qp.leading_coefficient()
    report.add("leading coefficient independent of a", len(set(leading.values())) <= 1,
               {k: str(v) for k, v in leading.items()})
    report.add("leading coefficient is (n+1)! relvol P(direction)",
               all(v == expected for v in leading.values()),
               {"expected": str(expected), "found": {k: str(v) for k, v in leading.items()}})
    report.data.update(method=method, expected=expected, leading=leading)
    return report


def _check_indices(n: int, rows: Sequence[int], cols: Sequence[int]) -> tuple[list[int], list[int]]:
    rows, cols = sorted(rows), sorted(cols)
    if len(rows) != len(cols):
        raise ValueError("a minor needs as many rows as columns")
    for idx in (rows, cols):
        if len(set(idx)) != len(idx) or any(not 1 <= i <= n for i in idx):
            raise ValueError(f"bad index set {idx} for rank {n}")
    return rows, cols


def cartan_minor(n: int, rows: Sequence[int], cols: Sequence[int]) -> int:
    rows, cols = _check_indices(n, rows, cols)
    if not rows:
        return 1
    a = cartan_matrix(n)
    return int(sympy.Matrix([[int(a[i - 1, j - 1]) for j in cols] for i in rows]).det())


def _partition(rows: list[int], cols: list[int]) -> list[int] | None:
    if not rows:
        return []
    if rows == cols:
        parts, run = [], 1
        for prev, cur in zip(rows, rows[1:]):
            if cur == prev + 1:
                run += 1
            else:
                parts.append(run)
                run = 1
        return parts + [run]
    u = next(k for k, (i, j) in enumerate(zip(rows, cols)) if i != j)
    if abs(rows[u] - cols[u]) != 1:
        return None
    left = _partition(rows[:u], cols[:u])
    right = _partition(rows[u + 1 :], cols[u + 1 :])
    if left is None or right is None:
        return None
    return left + right


def minor_partition_decomposition(n: int, rows: Sequence[int], cols: Sequence[int]) -> tuple[int, ...] | None:
    """A partition ``mu`` with ``|minor| = prod(mu_k + 1)``, or None when the minor vanishes.

    Follows the block structure: where the row and column sets first
    differ, the entry there is -1 (and the minor splits) or 0 (and it vanishes).
    """
    rows, cols = _check_indices(n, rows, cols)
    parts = _partition(rows, cols)
    if parts is None:
        return None
    return tuple(sorted(parts, reverse=True))


def cartan_minor_check(n: int) -> VerificationReport:
    """Every square minor of the Cartan matrix is 0 or a product ``prod(mu_k + 1)`` dividing ``(n+1)!``."""
    report = VerificationReport(f"cartan minors n={n}")
    bound = factorial(n + 1)
    count = 0
    for k in range(n + 1):
        for rows in combinations(range(1, n + 1), k):
            for cols in combinations(range(1, n + 1), k):
                count += 1
                det = cartan_minor(n, rows, cols)
                mu = minor_partition_decomposition(n, rows, cols)
                if mu is None:
                    ok = det == 0
                else:
                    prod = 1
                    for part in mu:
                        prod *= part + 1
                    ok = abs(det) == prod and len(mu) <= n + 1 - sum(mu) and bound % prod == 0
                if not ok:
                    report.add("partition law", False, {"rows": rows, "cols": cols, "det": det, "partition": mu})
                    return report
    report.add("partition law", True)
    report.data["minors"] = count
    return report


def inverse_cartan_minor_check(n: int) -> VerificationReport:
    """Every maximal minor of the inverse Cartan matrix stacked over the identity is 0 or ``k/(n+1)`` with ``k | (n+1)!``."""
    inv = inverse_cartan(n)
    stacked = [list(r) for r in inv] + [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    report = VerificationReport(f"inverse cartan minors n={n}")
    bound = factorial(n + 1)
    values = set()
    for rows in combinations(range(2 * n), n):
        det = _to_fraction(_to_sympy([stacked[r] for r in rows]).det())
        values.add(det)
        if det == 0:
            continue
        k = det * (n + 1)
        if k.denominator != 1 or bound % abs(k.numerator):
            report.add("minor is k/(n+1) with k dividing (n+1)!", False, {"rows": rows, "det": str(det)})
            return report
    report.add("minor is k/(n+1) with k dividing (n+1)!", True)
    report.data["values"] = sorted(values)
    return report


def shi_membership(x) -> bool:
    """Whether the alcove of ``x`` satisfies ``<p, alpha> >= 0`` or ``<= -1`` for every positive root."""
    from .affine import alcove_vertices

    verts = alcove_vertices(x)
    n = x.n
    bary = [sum((Fraction(v[k]) for v in verts), Fraction(0)) / (n + 1) for k in range(n)]
    for i, j in positive_roots(n):
        p = sum(bary[i - 1 : j], Fraction(0))
        if -1 < p < 0:
            return False
    return True
