"""Command-line front end.

    alcoves group-info --n 3
    alcoves interval-size --n 3 --a 1 --lambda 1,0,0 --cross-check
    alcoves tables --n 3 --out tables/
    alcoves verify criterion --n 2 --len-bound 8

Exit status is 0 on success, 1 when a verification or cross-check fails and
2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from pathlib import Path
from typing import Any, Callable, Sequence

from .affine import ball, f_elements, length, omega, reduced_word, theta
from .bruhat import leq, subword_elements
from .report import Check, VerificationReport
from .weights import Weight, Zone, all_zones

FORMATS = ("json", "csv", "text")
METHODS = ("enumerate", "weighted", "geometric")
SUITES = ("criterion", "tiling", "zones", "recurrence", "weighted", "geom", "minkowski", "cartan", "ehrhart")

# exhaustive oracle comparison is only feasible for short elements
DEFAULT_CRITERION_LENGTH = {1: 10, 2: 8, 3: 6}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int = 3
    a: int | None = None
    weight: tuple[int, ...] | None = None
    suite: str | None = None
    method: str = "enumerate"
    fmt: str = "json"
    len_bound: int | None = None
    coord_bound: int | None = None
    cross_check: bool = False
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise UsageError("--n must be positive")
        if self.fmt not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        for name in ("len_bound", "coord_bound"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        if self.weight is not None and len(self.weight) != self.n:
            raise UsageError(f"--lambda needs {self.n} coordinates, got {len(self.weight)}")

    def params(self) -> dict:
        out: dict[str, Any] = {"n": self.n}
        for key in ("a", "suite", "len_bound", "coord_bound"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.weight is not None:
            out["lambda"] = list(self.weight)
        if self.command == "interval-size":
            out["method"] = self.method
            out["cross_check"] = self.cross_check
        return out


@dataclass
class Outcome:
    result: Any
    checks: list[Check] = field(default_factory=list)
    tables: dict[str, list[list[Any]]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, (Weight, Zone)):
        return list(obj.coords if isinstance(obj, Weight) else obj.pattern)
    if isinstance(obj, (set, frozenset)):
        return sorted((_jsonable(x) for x in obj), key=repr)
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    if hasattr(obj, "window"):
        return list(obj.window)
    return str(obj)


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _element(cfg: RunConfig):
    elements = f_elements(cfg.n)
    if cfg.a is None:
        raise UsageError("--a is required")
    if not 1 <= cfg.a <= len(elements):
        raise UsageError(f"--a must lie in 1..{len(elements)} for n={cfg.n}")
    return elements[cfg.a - 1]


def _dominant_weight(cfg: RunConfig) -> Weight:
    if cfg.weight is None:
        raise UsageError("--lambda is required")
    lam = Weight(cfg.weight)
    if not lam.is_dominant():
        raise UsageError(f"--lambda {lam} is not dominant")
    return lam


def _selected_elements(cfg: RunConfig):
    return [_element(cfg)] if cfg.a is not None else list(f_elements(cfg.n))


def _weights_up_to(n: int, bound: int) -> list[Weight]:
    return [Weight(c) for c in product(range(bound + 1), repeat=n)]


def cmd_group_info(cfg: RunConfig) -> Outcome:
    elements = f_elements(cfg.n)
    result = {
        "finite_weyl_group_order": factorial(cfg.n + 1),
        "omega_order": len(omega(cfg.n)),
        "parallelepiped_elements": [
            {"index": k, "window": list(a.window), "word": list(reduced_word(a)), "length": length(a)}
            for k, a in enumerate(elements, start=1)
        ],
        "zone_count": 3**cfg.n,
    }
    return Outcome(result)


def _interval_by(method: str, a, lam: Weight) -> int:
    from .geomformula import eval_formula_a3
    from .paperboat import interval_size

    if method == "geometric":
        value = eval_formula_a3(f_elements(3).index(a) + 1, lam)
        if value.denominator != 1:
            raise ValueError(f"geometric formula gave a non-integer {value}")
        return value.numerator
    return interval_size(a, lam, method)


def cmd_interval_size(cfg: RunConfig) -> Outcome:
    a, lam = _element(cfg), _dominant_weight(cfg)
    if cfg.method not in METHODS:
        raise UsageError(f"--method must be one of {', '.join(METHODS)}")
    if cfg.method == "geometric" and cfg.n != 3:
        raise UsageError("the geometric method exists only for n=3")
    size = _interval_by(cfg.method, a, lam)
    outcome = Outcome({"element": list(theta(a, lam).window), "size": size})
    if cfg.cross_check:
        sizes = {m: _interval_by(m, a, lam) for m in METHODS if m != "geometric" or cfg.n == 3}
        outcome.result["by_method"] = sizes
        agree = len(set(sizes.values())) == 1
        outcome.checks.append(Check("methods agree", agree, None if agree else sizes))
    return outcome


def _table_rows(n: int) -> tuple[list[list[Any]], list[list[Any]]]:
    from .tables import c_plus_table, phi_plus_table, root_label, zone_label

    labels = [zone_label(z) for z in all_zones(n)]
    phi = [["root", *labels]] + [
        [root_label(r), *("*" if flag else "" for flag in row)] for r, row in phi_plus_table(n).items()
    ]
    cplus = [["element", *labels]] + [[f"a{k}", *row] for k, row in enumerate(c_plus_table(n), start=1)]
    return phi, cplus


def cmd_tables(cfg: RunConfig) -> Outcome:
    from .tables import c_plus_table, diff_tables, phi_plus_table

    if cfg.n > 3 and (cfg.coord_bound is None or cfg.coord_bound < cfg.n):
        raise UsageError("tables beyond n=3 are expensive; pass --coord-bound N (>= n) to confirm")
    phi, cplus = _table_rows(cfg.n)
    outcome = Outcome({"zones": 3**cfg.n, "elements": len(cplus) - 1},
                      tables={"phi_plus": phi, "c_plus": cplus})
    if cfg.n == 3:
        diff = diff_tables(phi_plus_table(3), c_plus_table(3))
        outcome.tables["diff"] = [["table", "row", "zone", "expected", "computed"]] + [
            [d["table"], d["row"], d["zone"], d["expected"], d["computed"]] for d in diff
        ]
        outcome.result["diff_cells"] = len(diff)
        outcome.checks.append(Check("computed tables equal reference data", not diff, None if not diff else diff[:10]))
    return outcome


def _suite_criterion(cfg: RunConfig) -> VerificationReport:
    L = cfg.len_bound if cfg.len_bound is not None else DEFAULT_CRITERION_LENGTH.get(cfg.n, 4)
    elements = ball(cfg.n, L)
    report = VerificationReport(f"criterion n={cfg.n} len<={L}")
    disagreements = []
    for y in elements:
        below = subword_elements(y)
        for x in elements:
            if leq(x, y) != (x in below):
                disagreements.append({"x": list(x.window), "y": list(y.window), "criterion": leq(x, y)})
    report.add(f"criterion equals subword oracle on {len(elements)}^2 pairs", not disagreements, disagreements[:5])
    report.data["pairs"] = len(elements) ** 2
    return report


def _default_coord_bound(cfg: RunConfig, small: int, large: int) -> int:
    if cfg.coord_bound is not None:
        return cfg.coord_bound
    return small if cfg.n >= 3 else large


def _suite_tiling(cfg: RunConfig) -> VerificationReport:
    from .paperboat import verify_tiling

    bound = _default_coord_bound(cfg, 2, 3)
    report = VerificationReport(f"tiling n={cfg.n} coords<={bound}")
    for a in _selected_elements(cfg):
        for lam in _weights_up_to(cfg.n, bound):
            sub = verify_tiling(a, lam)
            report.add(f"a={a} lambda={lam}", sub.passed, None if sub.passed else _jsonable_checks(sub))
    return report


def _suite_zones(cfg: RunConfig) -> VerificationReport:
    from .paperboat import pb_size_dominant, verify_zone_constancy, zone_samples

    report = VerificationReport(f"zone constancy n={cfg.n}")
    deep = Zone((2,) * cfg.n)
    for a in _selected_elements(cfg):
        for zone in all_zones(cfg.n):
            sub = verify_zone_constancy(a, zone, zone_samples(zone, 5))
            report.add(f"a={a} zone={zone}", sub.passed, None if sub.passed else _jsonable_checks(sub))
        sizes = {str(lam): pb_size_dominant(a, lam) for lam in zone_samples(deep, 5)}
        ok = all(v == factorial(cfg.n + 1) for v in sizes.values())
        report.add(f"a={a} dominant size on zone {deep} is (n+1)!", ok, None if ok else sizes)
    return report


def _suite_recurrence(cfg: RunConfig) -> VerificationReport:
    from .paperboat import pb_size, pb_size_via_recurrence

    bound = _default_coord_bound(cfg, 2, 3)
    report = VerificationReport(f"recurrence n={cfg.n} coords<={bound}")
    for a in _selected_elements(cfg):
        for lam in _weights_up_to(cfg.n, bound):
            direct, rec = pb_size(a, lam), pb_size_via_recurrence(a, lam)
            report.add(f"a={a} lambda={lam}", direct == rec, {"direct": direct, "recurrence": rec})
    return report


def _suite_weighted(cfg: RunConfig) -> VerificationReport:
    from .paperboat import interval_size

    bound = _default_coord_bound(cfg, 2, 3)
    report = VerificationReport(f"weighted sum n={cfg.n} coords<={bound}")
    for a in _selected_elements(cfg):
        for lam in _weights_up_to(cfg.n, bound):
            direct, weighted = interval_size(a, lam), interval_size(a, lam, "weighted")
            report.add(f"a={a} lambda={lam}", direct == weighted, {"enumerate": direct, "weighted": weighted})
    return report


def _suite_geom(cfg: RunConfig) -> VerificationReport:
    from .geomformula import eval_formula_a3, verify_zone_identities
    from .paperboat import interval_size

    if cfg.n != 3:
        raise UsageError("the geom suite is defined for n=3 only")
    bound = cfg.coord_bound if cfg.coord_bound is not None else 3
    report = VerificationReport("geometric formula n=3")
    for k, a in enumerate(f_elements(3), start=1):
        if cfg.a is not None and k != cfg.a:
            continue
        report.extend(verify_zone_identities(k))
        bad = []
        for lam in _weights_up_to(3, bound):
            formula, direct = eval_formula_a3(k, lam), interval_size(a, lam, "weighted")
            if formula != direct:
                bad.append({"lambda": list(lam.coords), "formula": formula, "interval": direct})
        report.add(f"a{k} formula equals interval size for coords<={bound}", not bad, bad[:5])
    return report


def _suite_minkowski(cfg: RunConfig) -> VerificationReport:
    from .polytopes import minkowski_check

    if cfg.n > 3:
        raise UsageError("the minkowski suite runs for n <= 3")
    report = VerificationReport(f"minkowski n={cfg.n}")
    fundamentals = [Weight.fundamental(cfg.n, i) for i in range(1, cfg.n + 1)]
    pairs = [(z, y) for z in fundamentals for y in fundamentals]
    pairs += [(Weight.rho(cfg.n), Weight.zero(cfg.n)), (Weight.rho(cfg.n), Weight.rho(cfg.n))]
    for z, y in pairs:
        report.extend(minkowski_check(z, y))
    return report


def _suite_cartan(cfg: RunConfig) -> VerificationReport:
    from .polytopes import cartan_minor_check, inverse_cartan_minor_check

    report = VerificationReport(f"cartan n={cfg.n}")
    for k in range(1, cfg.n + 1):
        report.extend(cartan_minor_check(k))
        if k <= 4:
            report.extend(inverse_cartan_minor_check(k))
    return report


def _suite_ehrhart(cfg: RunConfig) -> VerificationReport:
    from .polytopes import HPolytope, dilation_counts, ehrhart_polynomial, fit_quasipolynomial, top_component_check

    report = VerificationReport(f"ehrhart n={cfg.n}")
    segment = HPolytope([((1,), ">=", 0), ((1,), "<=", Fraction(1, 2))])
    counts = dilation_counts(segment, 12, ((0,), (Fraction(1, 2),)))
    qp = fit_quasipolynomial(counts[:8], 2, 1)
    ok = all(qp(m) == m // 2 + 1 for m in range(len(counts)))
    report.add("segment [0,1/2] counts are floor(m/2)+1", ok, counts)
    if cfg.n > 3:
        raise UsageError("the ehrhart suite runs for n <= 3")
    lam = Weight.rho(cfg.n)
    try:
        poly = ehrhart_polynomial(lam)
        report.add(f"Ehrhart fit of P({lam}) predicts held-out dilations", True)
        report.data["relative_volume"] = poly.leading_coefficient()
    except Exception as exc:  # FitError, reported rather than raised
        report.add(f"Ehrhart fit of P({lam}) predicts held-out dilations", False, str(exc))
    base = Weight((2,) * cfg.n)
    report.extend(top_component_check(list(f_elements(cfg.n)), Weight.rho(cfg.n), base))
    return report


SUITE_RUNNERS: dict[str, Callable[[RunConfig], VerificationReport]] = {
    "criterion": _suite_criterion,
    "tiling": _suite_tiling,
    "zones": _suite_zones,
    "recurrence": _suite_recurrence,
    "weighted": _suite_weighted,
    "geom": _suite_geom,
    "minkowski": _suite_minkowski,
    "cartan": _suite_cartan,
    "ehrhart": _suite_ehrhart,
}


def _jsonable_checks(report: VerificationReport) -> list[dict]:
    return [c.to_dict() for c in report.checks if not c.passed][:3]


def cmd_verify(cfg: RunConfig) -> Outcome:
    if cfg.suite not in SUITE_RUNNERS:
        raise UsageError(f"unknown suite {cfg.suite!r}")
    report = SUITE_RUNNERS[cfg.suite](cfg)
    result = {"suite": cfg.suite, "passed": report.passed, "checks": len(report.checks)}
    if report.conjectural:
        result["label"] = "CONJECTURAL"
    return Outcome(result, checks=list(report.checks))


COMMANDS: dict[str, Callable[[RunConfig], Outcome]] = {
    "group-info": cmd_group_info,
    "interval-size": cmd_interval_size,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


def _csv_text(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([_jsonable(v) if not isinstance(v, (int, str)) else v for v in row])
    return buf.getvalue()


def render(cfg: RunConfig, outcome: Outcome) -> str:
    if cfg.fmt == "json":
        payload = {
            "command": cfg.command,
            "params": cfg.params(),
            "result": outcome.result,
            "checks": [c.to_dict() for c in outcome.checks],
        }
        if outcome.tables:
            payload["tables"] = outcome.tables
        return json.dumps(payload, indent=2, default=_jsonable) + "\n"
    if cfg.fmt == "csv":
        if outcome.tables:
            return "\n".join(_csv_text(rows) for rows in outcome.tables.values())
        rows = [["name", "status", "counterexample"]]
        rows += [[c.name, "pass" if c.passed else "fail",
                  "" if c.counterexample is None else json.dumps(c.counterexample, default=_jsonable)]
                 for c in outcome.checks]
        if not outcome.checks:
            rows = [["key", "value"]] + [[k, json.dumps(v, default=_jsonable)] for k, v in _flat(outcome.result)]
        return _csv_text(rows)
    lines = [f"{k}: {json.dumps(v, default=_jsonable)}" for k, v in _flat(outcome.result)]
    lines += [f"[{'pass' if c.passed else 'FAIL'}] {c.name}" for c in outcome.checks]
    return "\n".join(lines) + "\n"


def _flat(result: Any) -> list[tuple[str, Any]]:
    return list(result.items()) if isinstance(result, dict) else [("result", result)]


def write_tables(directory: Path, tables: dict[str, list[list[Any]]]) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for name, rows in tables.items():
        (directory / f"{name}.csv").write_text(_csv_text(rows), encoding="utf-8")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep its message format
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="rank (default 3)")
    common.add_argument("--a", type=int, help="1-based index into the negative parallelepiped set")
    common.add_argument("--lambda", dest="weight", type=parse_weight, help="dominant weight, e.g. 1,0,2")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default=None)
    common.add_argument("--len-bound", "--len", dest="len_bound", type=int, help="length bound for ball enumeration")
    common.add_argument("--coord-bound", dest="coord_bound", type=int, help="largest weight coordinate sampled")
    common.add_argument("--out", type=Path, help="write output here (a directory for tables)")

    parser = _Parser(prog="alcoves", description="Bruhat intervals of dominant affine permutations in type A.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("group-info", parents=[common], help="orders of the groups and the parallelepiped set")
    p = sub.add_parser("interval-size", parents=[common], help="size of the interval below theta_a(lambda)")
    p.add_argument("--method", choices=METHODS, default="enumerate")
    p.add_argument("--cross-check", action="store_true", help="run every applicable method and compare")
    sub.add_parser("tables", parents=[common], help="covering-root and Paper Boat tables as CSV")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fmt = args.fmt or ("csv" if args.command == "tables" else "json")
    return RunConfig(
        command=args.command,
        n=args.n,
        a=args.a,
        weight=args.weight,
        suite=getattr(args, "suite", None),
        method=getattr(args, "method", "enumerate"),
        fmt=fmt,
        len_bound=args.len_bound,
        coord_bound=args.coord_bound,
        cross_check=getattr(args, "cross_check", False),
        out=args.out,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        outcome = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"alcoves: error: {exc}", file=sys.stderr)
        return 2
    text = render(cfg, outcome)
    if cfg.out is not None and cfg.command == "tables" and outcome.tables:
        write_tables(cfg.out, outcome.tables)
        if cfg.fmt != "csv":
            (cfg.out / f"tables.{cfg.fmt}").write_text(text, encoding="utf-8")
    elif cfg.out is not None:
        cfg.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if outcome.passed else 1


if __name__ == "__main__":
    sys.exit(main())
