"""
Interval sizes as sums of face volumes
======================================

In A3 each |I_a(lam)| is a combination of Euclidean volumes of faces of the
permutohedron P(lam) with coefficients in Q(sqrt 2, sqrt 3). This demo
evaluates the formula, checks it against enumeration, and recovers the
coefficients of a1 from data alone.
Run with ``python3 demos/geometric_formula.py``.
"""

from itertools import product

from alcoves.affine import f_elements
from alcoves.geomformula import SUBSETS_A3, eval_formula_a3, fit_geometric_coeffs, formula_poly_a3, mu_a3
from alcoves.paperboat import interval_size
from alcoves.weights import Weight

# the coefficients carry radicals, the volumes carry the matching radicals
for J in SUBSETS_A3:
    print(f"mu_a1{sorted(J)} = {mu_a3(1, J)}")

# and the combination is an ordinary polynomial with rational coefficients
print("\n|I_a1(lam)| =", formula_poly_a3(1))

# spot check against enumeration
for coords in [(0, 0, 0), (1, 0, 0), (2, 1, 1)]:
    lam = Weight(coords)
    print(f"lam={coords}: formula {eval_formula_a3(1, lam)}, enumeration {interval_size(f_elements(3)[0], lam)}")

# least squares over the face volumes gets the coefficients back exactly
samples = [(Weight(c), interval_size(f_elements(3)[0], Weight(c))) for c in product(range(3), repeat=3)]
fit = fit_geometric_coeffs(3, 1, samples)
print("\nfit exact:", fit.exact, "| matches table:", all(fit.euclidean_coeffs[J] == mu_a3(1, J) for J in SUBSETS_A3))
