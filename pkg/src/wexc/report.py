"""Catalog-wide verification report.

Re-derives every recorded fact of every catalog entry from scratch and
renders the outcome three ways: PASS/FAIL lines on a stream, a CSV
table, and a pair of overview figures.  The report is the package's
self-check; it exits nonzero the moment any entry disagrees with its
recorded facts.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from pathlib import Path

from .catalog import CatalogEntry, catalog_entry, catalog_names
from .classify import (
    DEFAULT_CLASSIFICATION_CAP,
    check_weakly_exceptional,
    classify_action,
)
from .matgroup import MatGroup
from .repthy import monomial_exponents, semi_invariants

# coefficient vector of x*v - y*u in the degree-2 monomial basis
_QUADRIC = tuple(
    1 if e == (1, 0, 0, 1) else (-1 if e == (0, 1, 1, 0) else 0)
    for e in monomial_exponents(4, 2)
)


@dataclass(frozen=True)
class FactCheck:
    fact: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class EntryReport:
    name: str
    order: int
    checks: tuple[FactCheck, ...]
    seconds: float
    verdict_fields: dict

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[FactCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _group_for(name: str, cache: dict[str, MatGroup]) -> MatGroup:
    if name not in cache:
        cache[name] = catalog_entry(name).group()
    return cache[name]


def _same_elements(a: MatGroup, b: MatGroup) -> bool:
    if a.order != b.order:
        return False
    return all(b.index_of(m) is not None for m in a.generators)


def verify_entry(entry: CatalogEntry,
                 cache: dict[str, MatGroup] | None = None) -> EntryReport:
    """Recompute an entry's recorded facts; nothing is taken on trust.

    The classification cap is sized to the entry so large catalog
    members classify instead of bailing out.
    """
    cache = cache if cache is not None else {}
    start = time.monotonic()
    group = _group_for(entry.name, cache)
    verdict = check_weakly_exceptional(group, entry.dimension)
    computed: dict[str, object] = {
        "order": group.order,
        "transitive": verdict.transitive,
        "min_semi_invariant_degree": verdict.min_semi_invariant_degree,
        "weakly_exceptional": verdict.weakly_exceptional,
        "a5_flag": verdict.a5_flag,
        "witness": verdict.witness,
    }
    checks = []
    for fact, expected in entry.facts.items():
        if fact in computed:
            actual = computed[fact]
        elif fact == "action_class":
            cap = max(group.order, DEFAULT_CLASSIFICATION_CAP)
            actual = classify_action(group, cap=cap).kind
            computed[fact] = actual
        elif fact == "quadric_invariant":
            actual = any(
                ch.is_trivial and space.contains(_QUADRIC)
                for ch, space in semi_invariants(group, 2))
        elif fact == "same_group_as":
            other = _group_for(expected, cache)
            actual = expected if _same_elements(group, other) else \
                f"differs from {expected}"
        elif fact == "projective_order":
            actual = group.projective_order()
        elif fact == "projectively_simple":
            actual = group.projective_quotient().is_simple()
        else:
            actual = f"unknown fact {fact!r}"
        checks.append(FactCheck(fact, expected, actual))
    computed.setdefault("action_class", None)
    return EntryReport(entry.name, group.order, tuple(checks),
                       time.monotonic() - start, computed)


_CSV_FIELDS = (
    "name", "dimension", "order", "action_class", "transitive",
    "min_semi_invariant_degree", "weakly_exceptional", "a5_flag",
    "witness", "facts_checked", "facts_failed", "status", "seconds",
)


def _write_csv(path: Path, rows: list[tuple[CatalogEntry, EntryReport]]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=_CSV_FIELDS)
        writer.writeheader()
        for entry, rep in rows:
            v = rep.verdict_fields
            writer.writerow({
                "name": entry.name,
                "dimension": entry.dimension,
                "order": rep.order,
                "action_class": v["action_class"] or "",
                "transitive": v["transitive"],
                "min_semi_invariant_degree":
                    "" if v["min_semi_invariant_degree"] is None
                    else v["min_semi_invariant_degree"],
                "weakly_exceptional": v["weakly_exceptional"],
                "a5_flag": "" if v["a5_flag"] is None else v["a5_flag"],
                "witness": v["witness"] or "",
                "facts_checked": len(rep.checks),
                "facts_failed": len(rep.failures()),
                "status": "PASS" if rep.ok else "FAIL",
                "seconds": f"{rep.seconds:.2f}",
            })


def _render_figures(out_dir: Path,
                    rows: list[tuple[CatalogEntry, EntryReport]]) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    palette = {
        "Intransitive": "#999999",
        "ImprimitiveMonomial": "#1f77b4",
        "ImprimitiveNonMonomial": "#2ca02c",
        "Primitive": "#d62728",
        None: "#e0c040",
    }

    names = [entry.name.removeprefix("sl4/quadric/") for entry, _ in rows]
    orders = [rep.order for _, rep in rows]
    kinds = [rep.verdict_fields["action_class"] for _, rep in rows]
    colors = [palette.get(k, "#e0c040") for k in kinds]

    fig, ax = plt.subplots(figsize=(8, 0.28 * len(rows) + 1.2))
    ax.barh(range(len(rows)), orders, color=colors)
    ax.set_yticks(range(len(rows)), names, fontsize=6)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("group order")
    ax.set_title("catalog entries by order and action class")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c)
               for k, c in palette.items() if k]
    ax.legend(handles, [k for k in palette if k], fontsize=6, loc="lower right")
    fig.tight_layout()
    orders_png = out_dir / "orders.png"
    fig.savefig(orders_png, dpi=150)
    plt.close(fig)

    kinds_order = ["Intransitive", "ImprimitiveMonomial",
                   "ImprimitiveNonMonomial", "Primitive"]
    we_counts = {k: [0, 0] for k in kinds_order}
    for _, rep in rows:
        kind = rep.verdict_fields["action_class"]
        if kind in we_counts:
            we_counts[kind][bool(rep.verdict_fields["weakly_exceptional"])] += 1
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = range(len(kinds_order))
    no = [we_counts[k][0] for k in kinds_order]
    yes = [we_counts[k][1] for k in kinds_order]
    ax.bar(xs, no, label="not weakly exceptional", color="#1f77b4")
    ax.bar(xs, yes, bottom=no, label="weakly exceptional", color="#d62728")
    ax.set_xticks(list(xs), kinds_order, rotation=20, fontsize=7)
    ax.set_ylabel("entries")
    ax.set_title("verdicts by action class")
    ax.legend(fontsize=7)
    fig.tight_layout()
    verdicts_png = out_dir / "verdicts.png"
    fig.savefig(verdicts_png, dpi=150)
    plt.close(fig)

    return [orders_png, verdicts_png]


def run_report(out_dir, names=None, stream=None) -> int:
    """Verify entries (all by default), write artifacts, return 0/1.

    Prints one PASS/FAIL line per entry to ``stream`` as results come
    in, then writes results.csv and the overview figures to
    ``out_dir``.
    """
    import sys

    stream = stream if stream is not None else sys.stdout
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cache: dict[str, MatGroup] = {}
    rows: list[tuple[CatalogEntry, EntryReport]] = []
    for name in (names if names is not None else catalog_names()):
        entry = catalog_entry(name)
        rep = verify_entry(entry, cache)
        rows.append((entry, rep))
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status} {entry.name} ({len(rep.checks)} facts, "
              f"{rep.seconds:.2f}s)", file=stream, flush=True)
        for check in rep.failures():
            print(f"     {check.fact}: expected {check.expected!r}, "
                  f"got {check.actual!r}", file=stream)
    _write_csv(out_dir / "results.csv", rows)
    figures = _render_figures(out_dir, rows)
    failed = sum(0 if rep.ok else 1 for _, rep in rows)
    print(f"{len(rows) - failed}/{len(rows)} entries verified; wrote "
          f"{out_dir / 'results.csv'} and "
          f"{', '.join(str(f) for f in figures)}", file=stream)
    return 0 if failed == 0 else 1
