"""
Counting lattice points in permutohedra
=======================================

Fits Ehrhart polynomials from dilation counts and compares the leading
coefficient of interval sizes along a ray with the relative volume.
Run with ``python3 demos/ehrhart_fits.py``.
"""

from alcoves.affine import f_elements
from alcoves.polytopes import dilation_counts, fit_with_holdout, relative_volume, top_component_check
from alcoves.weights import Weight

# the A2 hexagon P(rho): counts 1, 7, 19, 37, ...
rho = Weight((1, 1))
counts = dilation_counts(rho, 6)
print("A2 hexagon counts:", counts)

# fit a quadratic to the first dilations and predict the rest
qp, predicted = fit_with_holdout(counts, 2)
print("held-out dilations predicted:", predicted)
print("leading coefficient:", qp.leading_coefficient(), "relative volume:", relative_volume(rho))

# a non-regular weight in A3
lam = Weight((2, 0, 1))
qp, predicted = fit_with_holdout(dilation_counts(lam, 6), 3, holdout=2)
print(f"\nP{lam.coords}: fit predicts held-out counts: {predicted}, volume {relative_volume(lam)}")

# interval sizes along lam = base + m * direction grow like (n+1)! vol P(direction) m^n
report = top_component_check(list(f_elements(2)), Weight((1, 1)), Weight((2, 2)))
print("\nA2 growth along rho:", report.data["leading"], "expected", report.data["expected"])
print("all checks pass:", report.passed)
