"""Reference data for rank 3 and helpers that rebuild the same tables by computation.

Columns run over the zones ``(i1, i2, i3)`` in ``{0,1,2}^3`` with ``i1``
varying slowest.  Rows of the covering-root table are the positive roots;
rows of the Paper Boat table are the elements ``a_1 .. a_6``.
"""

from __future__ import annotations

from .affine import f_elements
from .paperboat import build_zone_table
from .weights import RootInterval, Zone, all_zones, phi_plus, positive_roots

__all__ = [
    "ROOT_LABELS_A3",
    "PHI_PLUS_A3",
    "C_PLUS_A3",
    "zone_label",
    "root_label",
    "phi_plus_table",
    "c_plus_table",
    "diff_tables",
]

ROOT_LABELS_A3: tuple[RootInterval, ...] = ((1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (1, 3))

# one character per zone column; '*' marks membership
PHI_PLUS_A3: dict[RootInterval, str] = {
    (1, 1): "..................*********",
    (2, 2): "......***......***......***",
    (3, 3): "..*..*..*..*..*..*..*..*..*",
    (1, 2): "............***............",
    (2, 3): "....*........*........*....",
    (1, 3): "..........*................",
}

C_PLUS_A3: tuple[tuple[int, ...], ...] = (
    (1, 4, 4, 6, 12, 12, 6, 12, 12, 4, 12, 12, 12, 24, 24, 12, 24, 24, 4, 12, 12, 12, 24, 24, 12, 24, 24),
    (2, 7, 6, 10, 17, 16, 8, 15, 14, 7, 18, 16, 17, 30, 28, 15, 28, 26, 6, 16, 14, 16, 28, 26, 14, 26, 24),
    (3, 10, 9, 13, 22, 22, 9, 18, 18, 9, 22, 21, 18, 33, 33, 15, 30, 30, 6, 16, 15, 15, 27, 27, 12, 24, 24),
    (3, 9, 6, 13, 18, 15, 9, 15, 12, 10, 22, 16, 22, 33, 27, 18, 30, 24, 9, 21, 15, 22, 33, 27, 18, 30, 24),
    (5, 14, 10, 18, 24, 22, 9, 16, 14, 14, 29, 24, 24, 37, 34, 16, 29, 26, 10, 24, 20, 22, 34, 32, 14, 26, 24),
    (8, 20, 12, 26, 31, 26, 14, 23, 18, 20, 36, 26, 31, 44, 36, 23, 38, 30, 12, 26, 18, 26, 36, 30, 18, 30, 24),
)


def zone_label(zone: Zone) -> str:
    return "".join(str(v) for v in zone.pattern)


def root_label(root: RootInterval) -> str:
    i, j = root
    return f"alpha{i}" if i == j else f"alpha{i}{j}" if j < 10 else f"alpha{i},{j}"


def phi_plus_table(n: int) -> dict[RootInterval, tuple[bool, ...]]:
    """Membership of each positive root in the covering set of each zone representative."""
    zones = all_zones(n)
    sets = [phi_plus(z.representative()) for z in zones]
    roots = ROOT_LABELS_A3 if n == 3 else tuple(positive_roots(n))
    return {r: tuple(r in s for s in sets) for r in roots}


def c_plus_table(n: int) -> list[tuple[int, ...]]:
    """Dominant Paper Boat sizes, one row per element of the negative parallelepiped set."""
    return [
        tuple(build_zone_table(a).dominant(z) for z in all_zones(n))
        for a in f_elements(n)
    ]


def _reference_phi_plus() -> dict[RootInterval, tuple[bool, ...]]:
    return {r: tuple(ch == "*" for ch in row) for r, row in PHI_PLUS_A3.items()}


def diff_tables(phi: dict[RootInterval, tuple[bool, ...]], cplus: list[tuple[int, ...]]) -> list[dict]:
    """Cells where computed rank-3 tables differ from the reference data."""
    zones = all_zones(3)
    out = []
    for root, row in _reference_phi_plus().items():
        for zone, want, got in zip(zones, row, phi[root]):
            if want != got:
                out.append({"table": "phi_plus", "row": root_label(root), "zone": zone_label(zone), "expected": want, "computed": got})
    for k, (want_row, got_row) in enumerate(zip(C_PLUS_A3, cplus), start=1):
        for zone, want, got in zip(zones, want_row, got_row):
            if want != got:
                out.append({"table": "c_plus", "row": f"a{k}", "zone": zone_label(zone), "expected": want, "computed": got})
    return out
