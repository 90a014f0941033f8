"""Per-type curve derivations and contraction targets.

Given a valid configuration, this module derives the canonical set of
(-1)-curves that the singular points determine, decides minimality for
the three exceptional cases, and computes the blow-down target.  The
dispatch follows the number of singular points:

  delta = 1   terminal-leaf pair derivation (six curves for a split A2,
              three leaf pairs for D4); a lone A1, or an A2 whose two
              roots are conjugate, is minimal
  delta = 2   the pair of curves meeting both components
  delta = 3   all three component pairs, deduplicated
  delta = 4   the unique triple-contact curve when one exists; for 4A1
              without one, the Galois orbit partition decides between a
              six-curve, a two-curve, or a minimal outcome
  delta >= 5  all triple-contact curves (two, four, or seven)

The derived vertices and product-1 edges form a small bipartite-tagged
graph that can be compared with the classification diagrams in
`contraction_catalog`.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .lattice import DivisorClass, LatticeError, SurfaceLattice
from .enumeration import catalog
from .configuration import (
    Configuration,
    InvalidConfigurationError,
    SMOOTH,
    SingularityType,
    classify_dynkin,
    validate_configuration,
)
from .contraction import BlowDownResult, blow_down
from .curves import (
    classes_meeting,
    derive_pair_curves,
    pair_classes,
    reduce_to_minus_one,
    triple_a1_curves,
)

#: labels for the three possibly-minimal cases: a single A1, an A2 with
#: conjugate roots, and a 4A1 with all four singular points conjugate.
MINIMAL_CASES = {1: "A1", 2: "conjugate-A2", 3: "conjugate-4A1"}


@dataclass
class DerivedGraph:
    """Derived curves, product-1 incidence, and the contraction target."""

    configuration: Configuration
    curves: tuple[DivisorClass, ...]
    minimal: bool
    minimal_case: int | None
    target_degree: int | None
    target_type: SingularityType | None
    blowdown: BlowDownResult | None

    @property
    def contraction_set(self) -> tuple[DivisorClass, ...]:
        return () if self.minimal else self.curves

    def root_edges(self):
        lat = self.configuration.lattice
        roots = self.configuration.simple_roots
        return [
            (i, j)
            for i in range(len(roots))
            for j in range(i + 1, len(roots))
            if lat.intersect(roots[i], roots[j]) == 1
        ]

    def curve_edges(self):
        """(curve index, root index) pairs with product 1."""
        lat = self.configuration.lattice
        roots = self.configuration.simple_roots
        return [
            (ci, ri)
            for ci, c in enumerate(self.curves)
            for ri, f in enumerate(roots)
            if lat.intersect(c, f) == 1
        ]

    def as_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for i in range(len(self.configuration.simple_roots)):
            g.add_node(("root", i), kind="root")
        for ci in range(len(self.curves)):
            g.add_node(("curve", ci), kind="curve")
        for i, j in self.root_edges():
            g.add_edge(("root", i), ("root", j))
        for ci, ri in self.curve_edges():
            g.add_edge(("curve", ci), ("root", ri))
        return g

    def to_dot(self) -> str:
        """DOT text; roots drawn as circles, derived curves as points."""
        lines = ["graph derived {"]
        cfg = self.configuration
        for i in range(len(cfg.simple_roots)):
            lines.append(f'  r{i} [shape=circle, label="F{i}"];')
        for ci in range(len(self.curves)):
            lines.append(f'  e{ci} [shape=point, label="E{ci}"];')
        for i, j in self.root_edges():
            lines.append(f"  r{i} -- r{j};")
        for ci, ri in self.curve_edges():
            lines.append(f"  e{ci} -- r{ri};")
        lines.append("}")
        return "\n".join(lines)


def _arms(cfg: Configuration, comp: tuple[int, ...]):
    """Arms of a single Dynkin component, as index paths from the branch
    vertex (path graphs return None)."""
    lat = cfg.lattice
    roots = cfg.simple_roots
    adj = {
        i: [j for j in comp if j != i and lat.intersect(roots[i], roots[j]) == 1]
        for i in comp
    }
    branch = [i for i in comp if len(adj[i]) == 3]
    if not branch:
        return None, adj
    b = branch[0]
    arms = []
    for start in adj[b]:
        path = [start]
        prev, cur = b, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        arms.append(path)
    arms.sort(key=len)
    return (b, arms), adj


def terminal_leaf_pair(cfg: Configuration, comp_index: int = 0):
    """The two marked terminal roots of a single component of rank >= 3.

    A_n takes the two path ends; D_n (n >= 5) the two fork leaves; E6
    the ends of its two long arms; E7 the ends of its two longest arms.
    D4 has no distinguished pair (its derivation uses all three leaves).
    """
    comp = cfg.components[comp_index]
    letter, n = cfg.component_labels[comp_index]
    if (letter, n) in (("A", 1), ("A", 2), ("D", 4)):
        raise LatticeError(f"no terminal pair for component of type {letter}{n}")
    branch_info, adj = _arms(cfg, comp)
    if letter == "A":
        ends = [i for i in comp if len(adj[i]) == 1]
        assert len(ends) == 2
        return tuple(cfg.simple_roots[i] for i in sorted(ends))
    b, arms = branch_info
    if letter == "D":
        forks = [a[-1] for a in arms if len(a) == 1]
        assert len(forks) == 2
        return tuple(cfg.simple_roots[i] for i in sorted(forks))
    # E6 has arms (1, 2, 2); E7 has (1, 2, 3); take the two longest ends.
    ends = [arms[-2][-1], arms[-1][-1]]
    return tuple(cfg.simple_roots[i] for i in sorted(ends))


def _reduce_pair(cfg: Configuration, F: DivisorClass, G: DivisorClass):
    cat = catalog(cfg.lattice.rank)
    d1, d2 = pair_classes(F, G, cat)
    e1, _ = reduce_to_minus_one(d1, cfg)
    e2, _ = reduce_to_minus_one(d2, cfg)
    return {e1, e2}


def _derive_single_component(cfg: Configuration):
    """Curves for delta = 1 (types A3..E7 and D4; A1/A2 handled upstream)."""
    letter, n = cfg.component_labels[0]
    if (letter, n) == ("D", 4):
        comp = cfg.components[0]
        _, adj = _arms(cfg, comp)
        leaves = sorted(i for i in comp if len(adj[i]) == 1)
        assert len(leaves) == 3
        curves: set[DivisorClass] = set()
        for a in range(3):
            for b in range(a + 1, 3):
                curves |= _reduce_pair(
                    cfg, cfg.simple_roots[leaves[a]], cfg.simple_roots[leaves[b]]
                )
        return curves
    F, G = terminal_leaf_pair(cfg, 0)
    return _reduce_pair(cfg, F, G)


def _derive_split_a2(cfg: Configuration):
    """The six disjoint curves meeting the first root of a split A2."""
    cat = catalog(cfg.lattice.rank)
    lat = cfg.lattice
    f1, f2 = cfg.simple_roots
    curves = [
        d for d in classes_meeting(f1, 1, cat) if lat.intersect(d, f2) == 0
    ]
    assert len(curves) == 6
    return set(curves)


def _derive_4a1(cfg: Configuration):
    """Case split for 4A1: returns (curves, minimal_case)."""
    triple = triple_a1_curves(cfg)
    if triple:
        assert len(triple) == 1
        return set(triple), None
    singletons = [o for o in cfg.orbit_partition if len(o) == 1]
    if singletons:
        fixed = min(singletons)[0]
        curves: set[DivisorClass] = set()
        for cj in range(cfg.delta):
            if cj != fixed:
                curves |= derive_pair_curves(cfg, fixed, cj)
        return curves, None
    pairs = [o for o in cfg.orbit_partition if len(o) == 2]
    if pairs:
        ci, cj = min(pairs)
        return derive_pair_curves(cfg, ci, cj), None
    return set(), 3


def derive_configuration(cfg: Configuration) -> DerivedGraph:
    """Derive the canonical contractible curves and the blow-down target.

    Raises InvalidConfigurationError on an invalid configuration.  The
    result is minimal exactly in the three exceptional cases; otherwise
    the derived curves are pairwise disjoint and their contraction is
    computed.
    """
    errors = validate_configuration(cfg)
    if errors:
        raise InvalidConfigurationError("; ".join(errors))
    lat = cfg.lattice
    delta = cfg.delta
    minimal_case = None
    curves: set[DivisorClass] = set()

    if delta == 1:
        label = cfg.component_labels[0]
        if label == ("A", 1):
            minimal_case = 1
        elif label == ("A", 2):
            if 0 in cfg.a2_conjugate_components:
                minimal_case = 2
            else:
                curves = _derive_split_a2(cfg)
        else:
            curves = _derive_single_component(cfg)
    elif delta == 2:
        curves = derive_pair_curves(cfg, 0, 1)
    elif delta == 3:
        for i in range(3):
            for j in range(i + 1, 3):
                curves |= derive_pair_curves(cfg, i, j)
    elif delta == 4:
        if cfg.type_label == SingularityType.parse("4A1"):
            curves, minimal_case = _derive_4a1(cfg)
        else:
            triple = triple_a1_curves(cfg)
            assert len(triple) == 1
            curves = set(triple)
    else:
        curves = set(triple_a1_curves(cfg))

    if minimal_case is not None:
        return DerivedGraph(cfg, (), True, minimal_case, None, None, None)

    ordered = tuple(sorted(curves))
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            assert lat.intersect(ordered[i], ordered[j]) == 0
    surviving = [
        f
        for f in cfg.simple_roots
        if all(lat.intersect(f, e) == 0 for e in ordered)
    ]
    target_type = classify_dynkin(lat, surviving) if surviving else SMOOTH
    bd = blow_down(lat, ordered)
    for f in surviving:
        img = bd.push(f)
        assert bd.lattice.self_intersection(img) == -2
    return DerivedGraph(
        cfg,
        ordered,
        False,
        None,
        bd.degree,
        target_type,
        bd,
    )
