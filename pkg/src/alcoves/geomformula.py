"""Interval sizes in rank 3 as combinations of face volumes of the permutohedron.

For a subset J of the simple roots, ``V_J(lam)`` is the Euclidean volume of
the face of ``P(lam)`` spanned by the orbit of ``lam`` under the parabolic
subgroup ``W_J``.  In rank 3 every interval size is

    |I_a(lam)| = sum_J mu_{J,a} V_J(lam)

for coefficients ``mu_{J,a}`` involving ``sqrt 2`` and ``sqrt 3``.  Those
coefficients are stored below and audited by :func:`verify_zone_identities`,
which expands the inclusion-exclusion over covering roots symbolically in
each zone.

>>> eval_formula_a3(1, Weight((1, 0, 0)))
Fraction(96, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, Sequence

import sympy

from .affine import AffinePermutation, f_elements
from .polytopes import relative_volume
from .report import VerificationReport
from .weights import Weight, Zone, all_zones, join_roots, phi_plus

__all__ = [
    "RadicalScalar",
    "GeoPolynomial",
    "SUBSETS_A3",
    "volume_poly_a3",
    "mu_a3",
    "formula_poly_a3",
    "eval_formula_a3",
    "verify_zone_identities",
    "face_blocks",
    "face_relative_volume",
    "face_covolume_squared",
    "inverse_sqrt",
    "GeometricFit",
    "fit_geometric_coeffs",
]


@dataclass(frozen=True)
class RadicalScalar:
    """``q0 + q1 sqrt2 + q2 sqrt3 + q3 sqrt6`` with rational q's."""

    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.q0, self.q1, self.q2, self.q3)

    @classmethod
    def coerce(cls, value) -> RadicalScalar:
        return value if isinstance(value, RadicalScalar) else cls(Fraction(value))

    def __add__(self, other) -> RadicalScalar:
        other = RadicalScalar.coerce(other)
        return RadicalScalar(*(a + b for a, b in zip(self.parts, other.parts)))

    __radd__ = __add__

    def __neg__(self) -> RadicalScalar:
        return RadicalScalar(*(-a for a in self.parts))

    def __sub__(self, other) -> RadicalScalar:
        return self + (-RadicalScalar.coerce(other))

    def __rsub__(self, other) -> RadicalScalar:
        return RadicalScalar.coerce(other) - self

    def __mul__(self, other) -> RadicalScalar:
        other = RadicalScalar.coerce(other)
        a0, a1, a2, a3 = self.parts
        b0, b1, b2, b3 = other.parts
        # sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
        return RadicalScalar(
            a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3,
            a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return self.q1 == self.q2 == self.q3 == 0

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} has a nonzero radical part")
        return self.q0

    def is_zero(self) -> bool:
        return not any(self.parts)

    def __str__(self) -> str:
        terms = []
        for q, r in zip(self.parts, ("", "sqrt2", "sqrt3", "sqrt6")):
            if q:
                terms.append(f"{q}{'*' + r if r else ''}")
        return " + ".join(terms) if terms else "0"


SQRT2 = RadicalScalar(q1=1)
SQRT3 = RadicalScalar(q2=1)

Monomial = tuple[int, ...]


@dataclass
class GeoPolynomial:
    """A polynomial in ``(x, y, z)`` with :class:`RadicalScalar` coefficients."""

    terms: dict[Monomial, RadicalScalar] = field(default_factory=dict)
    nvars: int = 3

    def __post_init__(self) -> None:
        self.terms = {e: RadicalScalar.coerce(c) for e, c in self.terms.items() if not RadicalScalar.coerce(c).is_zero()}

    @classmethod
    def constant(cls, c, nvars: int = 3) -> GeoPolynomial:
        return cls({(0,) * nvars: RadicalScalar.coerce(c)}, nvars)

    def __add__(self, other: GeoPolynomial) -> GeoPolynomial:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, RadicalScalar()) + c
        return GeoPolynomial(out, self.nvars)

    def scale(self, c) -> GeoPolynomial:
        c = RadicalScalar.coerce(c)
        return GeoPolynomial({e: c * v for e, v in self.terms.items()}, self.nvars)

    def __sub__(self, other: GeoPolynomial) -> GeoPolynomial:
        return self + other.scale(-1)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def homogeneous_part(self, d: int) -> GeoPolynomial:
        return GeoPolynomial({e: c for e, c in self.terms.items() if sum(e) == d}, self.nvars)

    def evaluate(self, point: Sequence) -> RadicalScalar:
        total = RadicalScalar()
        for e, c in self.terms.items():
            value = Fraction(1)
            for x, k in zip(point, e):
                value *= Fraction(x) ** k
            total = total + c * value
        return total

    def substitute(self, args: Sequence[tuple[int | None, Fraction]]) -> GeoPolynomial:
        """Replace variable k by ``x_{v} + c`` when ``args[k] = (v, c)``, or by ``c`` when ``v`` is None."""
        out = GeoPolynomial({}, self.nvars)
        for e, coef in self.terms.items():
            piece = GeoPolynomial.constant(coef, self.nvars)
            for (var, const), k in zip(args, e):
                piece = piece._times_power(var, Fraction(const), k)
            out = out + piece
        return out

    def _times_power(self, var: int | None, const: Fraction, k: int) -> GeoPolynomial:
        # multiply by (x_var + const)^k, expanded with binomial coefficients
        if var is None:
            return self.scale(const**k)
        out = GeoPolynomial({}, self.nvars)
        for j in range(k + 1):
            factor = comb(k, j) * const ** (k - j)
            shifted = {}
            for e, c in self.terms.items():
                e2 = list(e)
                e2[var] += j
                shifted[tuple(e2)] = c * factor
            out = out + GeoPolynomial(shifted, self.nvars)
        return out

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self) -> RadicalScalar:
        return self.terms.get((0,) * self.nvars, RadicalScalar())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GeoPolynomial) and (self - other).terms == {}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = "xyz" if self.nvars <= 3 else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k)
            parts.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _poly(entries: dict[Monomial, RadicalScalar | Fraction | int]) -> GeoPolynomial:
    return GeoPolynomial({e: RadicalScalar.coerce(c) for e, c in entries.items()})


SUBSETS_A3: tuple[frozenset[int], ...] = tuple(
    frozenset(s) for s in ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))
)

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)

_VOLUMES_A3: dict[frozenset[int], dict[Monomial, RadicalScalar | Fraction | int]] = {
    frozenset(): {(0, 0, 0): 1},
    frozenset({1}): {(1, 0, 0): SQRT2},
    frozenset({2}): {(0, 1, 0): SQRT2},
    frozenset({3}): {(0, 0, 1): SQRT2},
    frozenset({1, 2}): {(2, 0, 0): SQRT3 * _HALF, (1, 1, 0): SQRT3 * 2, (0, 2, 0): SQRT3 * _HALF},
    frozenset({1, 3}): {(1, 0, 1): 2},
    frozenset({2, 3}): {(0, 2, 0): SQRT3 * _HALF, (0, 1, 1): SQRT3 * 2, (0, 0, 2): SQRT3 * _HALF},
    frozenset({1, 2, 3}): {
        (3, 0, 0): _THIRD, (2, 1, 0): 2, (1, 2, 0): 4, (0, 3, 0): Fraction(4, 3),
        (2, 0, 1): 3, (1, 1, 1): 12, (0, 2, 1): 4, (1, 0, 2): 3, (0, 1, 2): 2, (0, 0, 3): _THIRD,
    },
}

# rows a_1..a_6, columns in the order of SUBSETS_A3; each entry is (rational, radical) meaning
# rational * radical with radical one of 1, sqrt2, sqrt3
_R, _S2, _S3 = RadicalScalar(1), SQRT2, SQRT3
_MU_A3: tuple[tuple[RadicalScalar, ...], ...] = tuple(
    tuple(_R * c if i in (0, 5, 7) else (_S2 * c if i in (1, 2, 3) else _S3 * c) for i, c in enumerate(row))
    for row in (
        (24, 22, 28, 22, 16, 36, 16, 12),
        (48, 40, 52, 40, 24, 60, 24, 12),
        (72, 52, 70, 58, 24, 72, 32, 12),
        (72, 58, 70, 52, 32, 72, 24, 12),
        (120, 82, 100, 82, 32, 96, 32, 12),
        (192, 112, 148, 112, 40, 108, 40, 12),
    )
)


def _subset(J: Iterable[int]) -> frozenset[int]:
    J = frozenset(J)
    if not J <= {1, 2, 3}:
        raise ValueError(f"{set(J)} is not a subset of {{1,2,3}}")
    return J


def volume_poly_a3(J: Iterable[int]) -> GeoPolynomial:
    """Volume of the face of ``P(x,y,z)`` spanned by the ``W_J``-orbit, as a polynomial."""
    return _poly(_VOLUMES_A3[_subset(J)])


def mu_a3(a: int, J: Iterable[int]) -> RadicalScalar:
    if not 1 <= a <= 6:
        raise ValueError("a must be an index in 1..6")
    return _MU_A3[a - 1][SUBSETS_A3.index(_subset(J))]


def formula_poly_a3(a: int) -> GeoPolynomial:
    total = GeoPolynomial()
    for J in SUBSETS_A3:
        total = total + volume_poly_a3(J).scale(mu_a3(a, J))
    return total


def eval_formula_a3(a: int, lam: Weight) -> Fraction:
    """``sum_J mu_{J,a} V_J(lam)``; the radicals must cancel."""
    if lam.rank != 3:
        raise ValueError("the formula is for rank 3")
    value = formula_poly_a3(a).evaluate(lam.coords)
    if not value.is_rational():
        raise ValueError(f"radicals do not cancel: {value}")
    return value.rational()


def verify_zone_identities(a: int, table=None) -> VerificationReport:
    """Per zone, expand ``sum_{J subset Phi+} (-1)^|J| F_a(lam - join J)`` and compare with ``c_a(Z)``.

    Coordinates equal to 2 in the zone pattern stay free variables; the
    others are fixed at the pattern value.  The constants come from
    :func:`alcoves.paperboat.build_zone_table` unless ``table`` is given.
    """
    from .paperboat import build_zone_table

    element = f_elements(3)[a - 1]
    table = table if table is not None else build_zone_table(element)
    formula = formula_poly_a3(a)
    report = VerificationReport(f"zone identities a{a}")
    for zone in all_zones(3):
        roots = sorted(phi_plus(zone.representative()))
        total = GeoPolynomial()
        for k in range(len(roots) + 1):
            for subset in combinations(roots, k):
                shift = join_roots(3, subset)
                args = [
                    (j, Fraction(-shift[j])) if zone.pattern[j] == 2 else (None, Fraction(zone.pattern[j] - shift[j]))
                    for j in range(3)
                ]
                term = formula.substitute(args)
                total = total + (term if k % 2 == 0 else term.scale(-1))
        residual = total - GeoPolynomial.constant(table[zone])
        report.add(f"zone {zone}", not residual.terms, {"zone": str(zone), "residual": str(residual)})
    return report


def face_blocks(J: Iterable[int]) -> list[list[int]]:
    """Maximal runs of consecutive indices in J."""
    blocks: list[list[int]] = []
    for j in sorted(J):
        if blocks and blocks[-1][-1] == j - 1:
            blocks[-1].append(j)
        else:
            blocks.append([j])
    return blocks


def face_relative_volume(lam: Weight, J: Iterable[int]) -> Fraction:
    """Volume of the ``W_J``-orbit face of ``P(lam)`` in units of its root-lattice cell.

    The face is a product of permutohedra, one per block of J, so the volume
    is the product of their Ehrhart leading coefficients.
    """
    vol = Fraction(1)
    for block in face_blocks(J):
        vol *= relative_volume(Weight(tuple(lam[j - 1] for j in block)))
    return vol


def face_covolume_squared(J: Iterable[int]) -> int:
    """Squared volume of a fundamental cell of the root lattice of ``W_J``."""
    out = 1
    for block in face_blocks(J):
        out *= len(block) + 1
    return out


def inverse_sqrt(d: int) -> RadicalScalar | None:
    """``1/sqrt(d)`` as a :class:`RadicalScalar` when the squarefree part of d is 1, 2, 3 or 6."""
    for f in (1, 2, 3, 6):
        if d % f == 0:
            s2 = d // f
            s = isqrt(s2)
            if s * s == s2:
                base = {1: RadicalScalar(1), 2: SQRT2, 3: SQRT3, 6: RadicalScalar(q3=1)}[f]
                return base * Fraction(1, s * f)
    return None


@dataclass
class GeometricFit:
    """Result of fitting interval sizes against face volumes.  Experimental: it proves nothing."""

    n: int
    subsets: list[frozenset[int]]
    relative_coeffs: dict[frozenset[int], Fraction] | None
    euclidean_coeffs: dict[frozenset[int], RadicalScalar | None] | None
    residual: list[Fraction]
    singular: bool
    label: str = "EXPERIMENTAL"

    @property
    def exact(self) -> bool:
        return not self.singular and all(r == 0 for r in self.residual)


def fit_geometric_coeffs(n: int, a, samples: Sequence[tuple[Weight, int]]) -> GeometricFit:
    """Least-squares solve (in exact arithmetic) for ``mu_J`` in ``|I| = sum_J mu_J V_J``.

    The unknowns are first found against relative volumes; dividing by the
    root-lattice covolume ``sqrt(prod(block + 1))`` gives Euclidean ones.
    ``a`` only labels the fit.
    """
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    rows = [[face_relative_volume(lam, J) for J in subsets] for lam, _ in samples]
    mat = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows])
    rhs = sympy.Matrix([size for _, size in samples])
    normal = mat.T * mat
    if normal.det() == 0:
        return GeometricFit(n, subsets, None, None, [], True)
    sol = normal.LUsolve(mat.T * rhs)
    rel = {J: Fraction(int(sympy.Rational(v).p), int(sympy.Rational(v).q)) for J, v in zip(subsets, sol)}
    residual = [Fraction(int(sympy.Rational(r).p), int(sympy.Rational(r).q)) for r in (rhs - mat * sol)]
    euclid = {}
    for J, c in rel.items():
        inv = inverse_sqrt(face_covolume_squared(J))
        euclid[J] = None if inv is None else inv * c
    return GeometricFit(n, subsets, rel, euclid, residual, False)
