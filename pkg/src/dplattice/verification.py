"""End-to-end verification harness behind the `verify-all` command.

Runs every reproduction check in one pass, cheapest first, and returns
a structured report.  The group enumeration dominates the runtime and
can be skipped for a quick pass.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from . import arithmetic, registry, weyl
from .configuration import DEGREE2_TYPES, orbit_fingerprint
from .contraction_catalog import CATALOG, catalog_key, matches_catalog
from .curves import (
    classes_meeting,
    derive_pair_curves,
    eckardt_quadruples,
    free_minus_one_curves,
    pair_classes,
    reduce_to_minus_one,
)
from .derivations import derive_configuration
from .enumeration import catalog, exceptional_classes, iter_named_pairs, root_classes
from .lattice import SurfaceLattice
from .table_reference import expected_product

ECKARDT_QUADRUPLE_COUNT = 630
DELTA2_SIZE = 4032
DELTA3_SIZE = 362880


@dataclass
class CheckResult:
    name: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"{mark}  {self.name}: expected {self.expected!r}, computed {self.computed!r}"


@dataclass
class RunReport:
    command: str
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, expected, computed):
        self.checks.append(CheckResult(name, expected, computed))

    def lines(self):
        out = [c.line() for c in self.checks]
        status = "all checks passed" if self.ok else "FAILURES PRESENT"
        out.append(
            f"{len([c for c in self.checks if c.ok])}/{len(self.checks)} ok, "
            f"{self.seconds:.1f}s: {status}"
        )
        return out


def check_class_counts(report: RunReport):
    report.add("exceptional classes at rank 7", 56, len(exceptional_classes(SurfaceLattice(7))))
    report.add("roots at rank 7", 126, len(root_classes(SurfaceLattice(7))))
    rank8 = exceptional_classes(SurfaceLattice(8))
    report.add("exceptional classes at rank 8", 240, len(rank8))
    lat8 = SurfaceLattice(8)
    twist = -2 * lat8.canonical_class()
    report.add(
        "rank-8 classes closed under E -> -2K-E",
        True,
        all(twist - e in set(rank8) for e in rank8),
    )


def check_tables(report: RunReport):
    cat = catalog(7)
    mismatches = sum(
        1
        for kind in ("pre-pre", "root-root", "pre-root")
        for nx, ny, v in iter_named_pairs(cat, kind)
        if expected_product(nx, ny) != v
    )
    report.add("intersection table cells mismatching", 0, mismatches)


def check_value_ranges(report: RunReport):
    cat = catalog(7)
    lat = cat.lattice
    exc = cat.exceptional
    g = cat.gram_exceptional
    distinct = {
        g[i][j] for i in range(56) for j in range(56) if i != j
    }
    report.add("products of distinct exceptional classes", {0, 1, 2}, distinct)
    mixed = {v for row in cat.gram_mixed for v in row}
    report.add("exceptional x root products", {-1, 0, 1}, mixed)
    rr = {cat.gram_roots[i][j] for i in range(126) for j in range(126)}
    report.add("root pair products", {-2, -1, 0, 1, 2}, rr)
    minus_k = -lat.canonical_class()
    pair_sum = all(
        (g[i][j] == 2) == (exc[i] + exc[j] == minus_k)
        for i in range(56)
        for j in range(56)
    )
    report.add("product 2 iff classes sum to -K", True, pair_sum)


def check_root_stars(report: RunReport):
    cat = catalog(7)
    lat = cat.lattice
    minus_k = -lat.canonical_class()
    sizes = set()
    pairing_ok = True
    for f in cat.roots:
        hits = classes_meeting(f, 1, cat)
        sizes.add(len(hits))
        hit_set = set(hits)
        for d in hits:
            partner = minus_k - f - d
            if partner == d or partner not in hit_set or lat.intersect(d, partner) != 1:
                pairing_ok = False
    report.add("classes meeting each root with value 1", {12}, sizes)
    report.add("fixed-point-free partner matching on each 12-set", True, pairing_ok)


def check_orthogonal_pairs(report: RunReport):
    cat = catalog(7)
    lat = cat.lattice
    minus_k = -lat.canonical_class()
    ok = True
    n = len(cat.roots)
    for i in range(n):
        for j in range(i + 1, n):
            f, g = cat.roots[i], cat.roots[j]
            if cat.gram_roots[i][j] != 0 or f == -g:
                continue
            d1, d2 = pair_classes(f, g, cat)
            if lat.intersect(d1, d2) != 0 or d1 + d2 != minus_k - f - g:
                ok = False
    report.add("orthogonal root pairs: two disjoint classes summing right", True, ok)
    explicit = {
        ("A'12", "A'34"): {"B13", "C24"},
        ("A'12", "B'123"): {"A2", "C23"},
        ("A'12", "B'345"): {"B16", "B17"},
        ("A'12", "C'3"): {"A2", "B13"},
        ("B'123", "B'145"): {"A1", "B67"},
        ("B'123", "C'1"): {"A2", "A3"},
    }
    got = {}
    for (na, nb), _ in explicit.items():
        d1, d2 = pair_classes(cat.named(na), cat.named(nb), cat)
        got[(na, nb)] = {cat.name_of(d1), cat.name_of(d2)}
    report.add("explicit orthogonal-pair classes", explicit, got)


def check_choice_independence(report: RunReport):
    ok = True
    for ts, variant in registry.all_entries():
        cfg = registry.representative(ts, variant)
        if cfg.delta < 2:
            continue
        for ci in range(cfg.delta):
            for cj in range(ci + 1, cfg.delta):
                baseline = derive_pair_curves(cfg, ci, cj)
                cat = catalog(7)
                for fi in cfg.components[ci]:
                    for fj in cfg.components[cj]:
                        f = cfg.simple_roots[fi]
                        g = cfg.simple_roots[fj]
                        d1, d2 = pair_classes(f, g, cat)
                        e1, _ = reduce_to_minus_one(d1, cfg)
                        e2, _ = reduce_to_minus_one(d2, cfg)
                        if frozenset((e1, e2)) != baseline:
                            ok = False
    report.add("pair derivation independent of root choices", True, ok)


def check_free_curve_counts(report: RunReport):
    counts = {}
    for case, expected in ((1, 32), (2, 20), (3, 8)):
        cfg = registry.minimal_case_configuration(case)
        counts[case] = len(free_minus_one_curves(cfg))
    report.add("free curve counts for cases 1/2/3", {1: 32, 2: 20, 3: 8}, counts)
    report.add(
        "required point counts via quarter bound",
        {1: 9, 2: 6, 3: 3},
        {c: arithmetic.required_point_count(c) for c in (1, 2, 3)},
    )
    report.add(
        "generalized Eckardt quadruples",
        ECKARDT_QUADRUPLE_COUNT,
        len(eckardt_quadruples(catalog(7))),
    )


def check_derivation_catalog(report: RunReport):
    failures = []
    for ts, variant in registry.all_entries():
        cases = [dict()]
        if ts == "A2":
            cases = [dict(), dict(a2_conjugate=(0,))]
        if (ts, variant) == ("4A1", "no-triple-curve"):
            cases = [dict(), dict(orbits=[(0, 1), (2, 3)]), dict(orbits=[(0, 1, 2, 3)])]
        for kw in cases:
            cfg = registry.representative(ts, variant, **kw)
            derived = derive_configuration(cfg)
            key = catalog_key(cfg, variant)
            if key not in CATALOG or not matches_catalog(derived, CATALOG[key]):
                failures.append(key)
    report.add("derivations matching the reference diagrams", [], failures)
    counts = {}
    for ts in ("5A1", "6A1", "7A1"):
        d = derive_configuration(registry.representative(ts))
        counts[ts] = (len(d.curves), d.target_degree)
    report.add(
        "high-delta contraction counts and degrees",
        {"5A1": (2, 4), "6A1": (4, 6), "7A1": (7, 9)},
        counts,
    )


def check_weyl(report: RunReport, cache_dir=None):
    cat = catalog(7)
    group = weyl.generate_group(cat, cache_dir=cache_dir)
    report.add("group order", weyl.GROUP_ORDER, group.order)
    d1, d2, d3 = weyl.delta_sets(cat, group)
    report.add("sizes of the root tuple sets", (126, DELTA2_SIZE, DELTA3_SIZE),
               (len(d1), len(d2), len(d3)))
    for name, s in (("roots", d1), ("product-1 pairs", d2), ("cyclic 4-tuples", d3)):
        report.add(f"transitivity on {name}", True,
                   weyl.verify_transitivity(group, s))
    report.add("traces fixing a root",
               {-4, -2, -1, 0, 1, 2, 3, 4, 5, 6, 8},
               weyl.trace_set(group, "fix-root"))
    report.add("traces swapping a product-1 pair",
               {-4, -2, -1, 0, 1, 2},
               weyl.trace_set(group, "swap-pair"))
    report.add("traces cycling a 4-tuple", {0, 2},
               weyl.trace_set(group, "cycle-quad", witness=d3[0]))
    return group


def check_thresholds(report: RunReport):
    report.add(
        "unirationality thresholds",
        {1: 9, 2: 8, 3: 4},
        {c: arithmetic.unirationality_threshold(c) for c in (1, 2, 3)},
    )
    report.add(
        "largest failing prime powers",
        {1: False, 2: False, 3: False},
        {
            1: arithmetic.off_ramification_lower_bound(8, 1, True) >= 9,
            2: arithmetic.off_ramification_lower_bound(7, 2, False) >= 6,
            3: arithmetic.off_ramification_lower_bound(3, 3, False) >= 3,
        },
    )
    waypoints = {
        (9, 1, False): 14,
        (16, 1, True): 144,
        (9, 2, False): 24,
        (8, 2, True): 16,
        (5, 3, False): 14,
        (4, 3, True): 8,
    }
    report.add(
        "off-ramification waypoints",
        waypoints,
        {
            k: arithmetic.off_ramification_lower_bound(*k)
            for k in waypoints
        },
    )


def verify_all(skip_weyl: bool = False, cache_dir: str | None = None) -> RunReport:
    """Run every reproduction check; cheap lattice checks first."""
    report = RunReport(command="verify-all")
    t0 = time.time()
    check_class_counts(report)
    check_tables(report)
    check_value_ranges(report)
    check_root_stars(report)
    check_orthogonal_pairs(report)
    check_choice_independence(report)
    check_free_curve_counts(report)
    check_derivation_catalog(report)
    check_thresholds(report)
    if not skip_weyl:
        group = check_weyl(report, cache_dir=cache_dir)
        mins = {1: -4, 2: -4, 3: 0}
        computed = {
            1: min(weyl.trace_set(group, "fix-root")),
            2: min(weyl.trace_set(group, "swap-pair")),
            3: min(weyl.trace_set(group, "cycle-quad")),
        }
        report.add("trace minima feeding the point bounds", mins, computed)
    report.seconds = time.time() - t0
    return report
