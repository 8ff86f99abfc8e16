"""
Lower intervals of dominant alcoves and their Paper Boats
=========================================================

Walks through type A3: the six elements a1..a6, the alcoves theta_a(lam),
their lower Bruhat intervals, and how those intervals split into Paper Boats.
Run with ``python3 demos/intervals_and_boats.py``.
"""

from itertools import product

from alcoves.affine import f_elements, reduced_word, theta, theta_length
from alcoves.bruhat import lower_interval
from alcoves.paperboat import build_zone_table, interval_size, paper_boat, verify_tiling
from alcoves.weights import Weight, Zone

n = 3
F = f_elements(n)

# the six elements, as windows and reduced words
for k, a in enumerate(F, start=1):
    print(f"a{k}: window {a.window}, word {reduced_word(a)}")

# one dominant alcove and the size of everything below it
lam = Weight((1, 0, 0))
x = theta(F[0], lam)
print(f"\ntheta_a1{lam.coords} has window {x.window} and length {theta_length(F[0], lam)}")
print("lower interval size:", len(lower_interval(x)))

# the Paper Boat of (a, lam) is the part of the interval not below any smaller theta
print("Paper Boat size:", len(paper_boat(F[0], lam)))

# boats for all weights below lam tile the interval exactly
print("tiling holds:", verify_tiling(F[0], lam).passed)

# boat sizes only depend on which zone lam lies in, so a 27-entry table suffices
table = build_zone_table(F[4])
for pattern in [(0, 0, 0), (1, 1, 2), (2, 2, 2)]:
    print(f"a5 boat size in zone {''.join(map(str, pattern))}: {table[Zone(pattern)]}")

# the table gives interval sizes without enumerating anything
for coords in product(range(3), repeat=3):
    lam = Weight(coords)
    assert interval_size(F[4], lam, "weighted") == interval_size(F[4], lam)
print("weighted zone sums agree with enumeration on coordinates up to 2")
