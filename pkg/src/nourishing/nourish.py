"""Closed-form nourishing numbers, the brute-force oracle, and reconciliation.

The nourishing number of a graph equals the order of a maximum clique, so the
oracle is exact clique search on the powered graph.  The formula side
transcribes the published piecewise values verbatim, with no corrections
applied even where a value is suspected wrong; the reconciliation engine's
whole point is surfacing formula/oracle disagreements, not patching them.

Split-graph variable naming: the clique order is ``c`` (the literature
overloads r for both clique order and power exponent), the exponent stays
``r``, ``l`` is the maximum number of independent vertices sharing one clique
neighbor, and ``s`` is the number of independent vertices.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from nourishing.families import FamilySpec, family_grid, generate
from nourishing.graphcore import diameter, max_clique, power

UNDEFINED = "undefined"


@dataclass(frozen=True)
class NourishingRecord:
    """One reconciliation cell: formula value vs brute-force clique value."""

    spec: FamilySpec
    r: int
    formula: Optional[int]
    oracle: int
    witness: tuple[int, ...]
    status: str  # agree | disagree | formula-undefined

    def csv_row(self) -> list[str]:
        return [
            self.spec.family,
            self.spec.params_str(),
            str(self.r),
            UNDEFINED if self.formula is None else str(self.formula),
            str(self.oracle),
            self.status,
            " ".join(map(str, self.witness)),
        ]

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "r": self.r,
            "formula": self.formula,
            "oracle": self.oracle,
            "witness": list(self.witness),
            "status": self.status,
        }


def formula_kappa(spec: FamilySpec, r: int) -> Optional[int]:
    """The published piecewise value for the r-th power, or None if no clause applies."""
    if r < 1:
        raise ValueError(f"power exponent must be >= 1, got {r}")
    f = spec.family
    if f == "path":
        m = spec["m"]
        return r + 1 if r < m else m + 1
    if f == "cycle":
        n = spec["n"]
        return r + 1 if r < n // 2 else n
    if f == "complete":
        return spec["n"]
    if f == "kmn":
        return 2 if r == 1 else spec["m"] + spec["n"]
    if f == "wheel":
        return 3 if r == 1 else spec["n"] + 1
    if f == "helm":
        n = spec["n"]
        return {1: 3, 2: n + 1, 3: n + 4}.get(r, 2 * n + 1)
    if f == "friendship":
        return 3 if r == 1 else 2 * spec["n"] + 1
    if f == "fan":
        return 3 if r == 1 else spec["m"] + spec["n"]
    if f == "split":
        c = spec["c"]
        s = len(spec.adj)
        if r == 1:
            dominating = any(len(set(nbrs)) == c for nbrs in spec.adj)
            return c + 1 if dominating else c
        if r == 2:
            shared = [0] * c
            for nbrs in spec.adj:
                for u in set(nbrs):
                    shared[u] += 1
            return c + max(shared)
        return c + s
    if f == "ksplit":
        return spec["c"] + 1 if r == 1 else spec["c"] + spec["s"]
    if f == "sun":
        n = spec["n"]
        half = n // 2
        if r < half:
            return 2 * r + 1
        if r == half:
            return 2 * (n - 1) if n % 2 else 2 * n - 1
        return 2 * n
    if f == "csun":
        n = spec["n"]
        return {1: n, 2: n + 1}.get(r, 2 * n)
    if f == "sunlet":
        n = spec["n"]
        half = n // 2
        if r < half + 1:
            return 2 * r
        if r == half + 1:
            return 2 * (n - 1) if n % 2 else 2 * n - 1
        return 2 * n
    return None


def oracle_kappa(spec: FamilySpec, r: int) -> tuple[int, tuple[int, ...]]:
    """Exact clique number of the r-th power, with one witness clique."""
    if r < 1:
        raise ValueError(f"power exponent must be >= 1, got {r}")
    witness = max_clique(power(generate(spec), r))
    return len(witness), witness


def reconcile_cell(cell: tuple[FamilySpec, int]) -> NourishingRecord:
    spec, r = cell
    oracle, witness = oracle_kappa(spec, r)
    formula = formula_kappa(spec, r)
    if formula is None:
        status = "formula-undefined"
    else:
        status = "agree" if formula == oracle else "disagree"
    return NourishingRecord(spec, r, formula, oracle, witness, status)


def _worker_count() -> int:
    env = os.environ.get("NOURISH_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def reconcile(cells: Iterable[tuple[FamilySpec, int]]) -> list[NourishingRecord]:
    """One record per cell, in input order regardless of evaluation order."""
    cells = list(cells)
    workers = min(_worker_count(), max(1, len(cells)))
    if workers == 1:
        return [reconcile_cell(c) for c in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(reconcile_cell, cells))


CSV_HEADER = ["family", "params", "r", "formula", "oracle", "status", "witness"]


def records_to_csv(records: Sequence[NourishingRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def records_to_json(records: Sequence[NourishingRecord]) -> str:
    return json.dumps([rec.to_json() for rec in records], indent=2) + "\n"


def _r_range_for(spec: FamilySpec) -> range:
    d = diameter(generate(spec))
    return range(1, int(d) + 2)


def _cells_with_default_r(specs: Iterable[FamilySpec]) -> list[tuple[FamilySpec, int]]:
    cells = []
    for spec in specs:
        cells.extend((spec, r) for r in _r_range_for(spec))
    return cells


def split_probe_specs() -> list[FamilySpec]:
    """Small deterministic split specs probing the split-formula clauses.

    Shapes per clique size: every independent vertex on one clique vertex
    (maximal sharing), a dominating independent vertex, and an independent
    vertex adjacent to several but not all clique vertices.
    """
    probes = [
        FamilySpec.make("split", c=1, adj=[(0,)]),
        FamilySpec.make("split", c=1, adj=[(0,), (0,)]),
        FamilySpec.make("split", c=2, adj=[(0,), (0,)]),
        FamilySpec.make("split", c=2, adj=[(0, 1), (0,)]),
        FamilySpec.make("split", c=3, adj=[(0,), (1,)]),
        FamilySpec.make("split", c=3, adj=[(0, 1, 2), (0,), (1,)]),
        FamilySpec.make("split", c=3, adj=[(0, 1), (1, 2), (0,)]),
        FamilySpec.make("split", c=4, adj=[(0, 1), (0, 1), (2,)]),
    ]
    return probes


def default_grid() -> list[tuple[FamilySpec, int]]:
    """The full default reconciliation grid.

    Parameters run from each family's minimum up to 10 and the exponent from
    1 to diameter+1, which covers every piecewise branch of every formula;
    split uses the fixed probe specs.
    """
    cells: list[tuple[FamilySpec, int]] = []
    for family, ranges in (
        ("path", {"m": range(1, 11)}),
        ("cycle", {"n": range(3, 11)}),
        ("complete", {"n": range(1, 11)}),
        ("kmn", {"m": range(1, 11), "n": range(1, 11)}),
        ("wheel", {"n": range(3, 11)}),
        ("helm", {"n": range(3, 11)}),
        ("friendship", {"n": range(1, 11)}),
        ("fan", {"m": range(1, 11), "n": range(1, 11)}),
        ("ksplit", {"c": range(1, 11), "s": range(1, 11)}),
        ("sun", {"n": range(3, 11)}),
        ("csun", {"n": range(3, 11)}),
        ("sunlet", {"n": range(3, 11)}),
    ):
        specs = [spec for spec, _ in family_grid(family, ranges, [1])]
        cells.extend(_cells_with_default_r(specs))
    cells.extend(_cells_with_default_r(split_probe_specs()))
    return cells


def acceptance_grid() -> list[tuple[FamilySpec, int]]:
    """The grid behind the checked-in golden table: families whose published
    formulas are believed exact, every parameter from the published tables."""
    cells: list[tuple[FamilySpec, int]] = []
    for family, ranges in (
        ("path", {"m": range(1, 11)}),
        ("cycle", {"n": range(3, 13)}),
        ("complete", {"n": range(1, 9)}),
        ("kmn", {"m": range(1, 7), "n": range(1, 7)}),
        ("friendship", {"n": range(1, 6)}),
        ("fan", {"m": range(1, 5), "n": range(2, 7)}),
    ):
        specs = [spec for spec, _ in family_grid(family, ranges, [1])]
        cells.extend(_cells_with_default_r(specs))
    return cells


def audit_grid() -> list[tuple[FamilySpec, int]]:
    """Known-divergence probe cells: wheel at n=3, r=1 and helms cubed."""
    cells: list[tuple[FamilySpec, int]] = [(FamilySpec.make("wheel", n=3), 1)]
    cells.extend((FamilySpec.make("helm", n=n), 3) for n in range(4, 9))
    return cells
