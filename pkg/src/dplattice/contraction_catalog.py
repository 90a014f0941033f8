"""Reference table of derivation outcomes for every singularity type.

Each entry fixes, up to tagged-graph isomorphism, the incidence diagram
of simple roots (circles) and derived curves (bullets), together with
the degree and singularity type of the blow-down image.  Root vertices
are numbered locally per entry; `root_edges` are the product-1 pairs
among roots and each curve is given by the set of root indices it
meets.  Minimal entries have no curves and carry the case number of the
exceptional configuration instead of a target.

Keys are (type, variant, tag); `tag` distinguishes outcomes that depend
on data beyond the root set: the A2 entries split on whether the two
roots are conjugate, and the no-triple-curve 4A1 entries split on the
orbit partition shape.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx


@dataclass(frozen=True)
class CatalogEntry:
    n_roots: int
    root_edges: tuple
    curves: tuple
    target: tuple | None  # (degree, type display)
    minimal_case: int | None = None


def _path(n, offset=0):
    return tuple((offset + i, offset + i + 1) for i in range(n - 1))


CATALOG = {
    # one singular point
    ("A1", None, None): CatalogEntry(1, (), (), None, 1),
    ("A2", None, "split"): CatalogEntry(2, ((0, 1),), ((0,),) * 6, (8, "A1")),
    ("A2", None, "conjugate"): CatalogEntry(2, ((0, 1),), (), None, 2),
    ("A3", None, None): CatalogEntry(3, _path(3), ((1,), (1,)), (4, "2A1")),
    ("A4", None, None): CatalogEntry(4, _path(4), ((1,), (2,)), (4, "2A1")),
    ("A5", "single-curve", None): CatalogEntry(5, _path(5), ((2,),), (3, "2A2")),
    ("A5", "two-curve", None): CatalogEntry(5, _path(5), ((1,), (3,)), (4, "3A1")),
    ("A6", None, None): CatalogEntry(6, _path(6), ((1,), (4,)), (4, "2A1+A2")),
    ("A7", None, None): CatalogEntry(7, _path(7), ((1,), (5,)), (4, "2A1+A3")),
    ("D4", None, None): CatalogEntry(
        4, ((0, 3), (1, 3), (2, 3)),
        ((0,), (0,), (1,), (1,), (2,), (2,)), (8, "A1")),
    ("D5", None, None): CatalogEntry(
        5, ((0, 2), (1, 2), (2, 3), (3, 4)), ((4,), (4,)), (4, "D4")),
    ("D6", None, None): CatalogEntry(
        6, ((0, 2), (1, 2), (2, 3), (3, 4), (4, 5)), ((5,), (5,)), (4, "D5")),
    ("E6", None, None): CatalogEntry(
        6, _path(5) + ((2, 5),), ((0,), (4,)), (4, "D4")),
    ("E7", None, None): CatalogEntry(
        7, _path(6) + ((2, 6),), ((5,),), (3, "E6")),
    # two singular points
    ("2A1", None, None): CatalogEntry(2, (), ((0, 1), (0, 1)), (4, "smooth")),
    ("A1+A2", None, None): CatalogEntry(
        3, ((1, 2),), ((0, 1), (0, 2)), (4, "smooth")),
    ("A1+A3", "single-curve", None): CatalogEntry(
        4, _path(3, 1), ((0, 2),), (3, "2A1")),
    ("A1+A3", "two-curve", None): CatalogEntry(
        4, _path(3, 1), ((0, 1), (0, 3)), (4, "A1")),
    ("A1+A4", None, None): CatalogEntry(
        5, _path(4, 1), ((0, 1), (0, 4)), (4, "A2")),
    ("A1+A5", "free-curves", None): CatalogEntry(
        6, _path(5, 1), ((0, 1), (0, 5)), (4, "A3")),
    ("A1+A5", "no-free-curves", None): CatalogEntry(
        6, _path(5, 1), ((0, 1), (0, 5)), (4, "A3")),
    ("A1+D4", None, None): CatalogEntry(
        5, ((1, 2), (2, 3), (2, 4)), ((0, 1),), (3, "A3")),
    ("A1+D5", None, None): CatalogEntry(
        6, ((1, 3), (2, 3), (3, 4), (4, 5)), ((0, 5),), (3, "D4")),
    ("A1+D6", None, None): CatalogEntry(
        7, ((1, 3), (2, 3), (3, 4), (4, 5), (5, 6)), ((0, 6),), (3, "D5")),
    ("2A2", None, None): CatalogEntry(
        4, ((0, 1), (2, 3)), ((0, 2), (1, 3)), (4, "smooth")),
    ("A2+A3", None, None): CatalogEntry(
        5, ((0, 1), (2, 3), (3, 4)), ((0, 2), (1, 4)), (4, "A1")),
    ("A2+A4", None, None): CatalogEntry(
        6, ((0, 1),) + _path(4, 2), ((0, 2), (1, 5)), (4, "A2")),
    ("A2+A5", None, None): CatalogEntry(
        7, ((0, 1),) + _path(5, 2), ((0, 2), (1, 6)), (4, "A3")),
    ("2A3", None, None): CatalogEntry(
        6, _path(3) + _path(3, 3), ((0, 3), (2, 5)), (4, "2A1")),
    # three singular points
    ("3A1", "single-curve", None): CatalogEntry(
        3, (), ((0, 1, 2),), (3, "smooth")),
    ("3A1", "six-curve", None): CatalogEntry(
        3, (), ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)), (8, "smooth")),
    ("2A1+A2", None, None): CatalogEntry(
        4, ((2, 3),),
        ((0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3)), (8, "smooth")),
    ("2A1+A3", "six-curve", None): CatalogEntry(
        5, _path(3, 2),
        ((0, 1), (0, 1), (0, 2), (0, 4), (1, 2), (1, 4)), (8, "A1")),
    ("2A1+A3", "five-curve", None): CatalogEntry(
        5, _path(3, 2),
        ((0, 1), (0, 1), (0, 3), (1, 2), (1, 4)), (7, "smooth")),
    ("2A1+D4", None, None): CatalogEntry(
        6, ((2, 4), (3, 4), (4, 5)),
        ((0, 1), (0, 1), (0, 2), (1, 3)), (6, "A2")),
    ("A1+2A2", None, None): CatalogEntry(
        5, ((1, 2), (3, 4)),
        ((0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)), (8, "smooth")),
    ("A1+A2+A3", None, None): CatalogEntry(
        6, ((1, 2),) + _path(3, 3),
        ((0, 1), (0, 2), (0, 4), (1, 3), (2, 5)), (7, "smooth")),
    ("A1+2A3", None, None): CatalogEntry(
        7, _path(3, 1) + _path(3, 4),
        ((0, 2), (0, 5), (1, 4), (3, 6)), (6, "smooth")),
    ("3A2", None, None): CatalogEntry(
        6, ((0, 1), (2, 3), (4, 5)),
        ((0, 2), (1, 3), (1, 5), (0, 4), (3, 4), (2, 5)), (8, "smooth")),
    # four singular points
    ("3A1+A2", None, None): CatalogEntry(
        5, ((3, 4),), ((0, 1, 2),), (3, "A2")),
    ("3A1+A3", None, None): CatalogEntry(
        6, _path(3, 3), ((0, 1, 2),), (3, "A3")),
    ("3A1+D4", None, None): CatalogEntry(
        7, ((3, 6), (4, 6), (5, 6)), ((0, 1, 2),), (3, "D4")),
    ("4A1", "triple-curve", None): CatalogEntry(
        4, (), ((0, 1, 2),), (3, "A1")),
    ("4A1", "no-triple-curve", "singleton-orbit"): CatalogEntry(
        4, (),
        ((0, 3), (0, 3), (1, 3), (1, 3), (2, 3), (2, 3)), (8, "smooth")),
    ("4A1", "no-triple-curve", "paired-orbits"): CatalogEntry(
        4, (), ((0, 1), (0, 1)), (4, "2A1")),
    ("4A1", "no-triple-curve", "one-orbit"): CatalogEntry(4, (), (), None, 3),
    # five or more singular points
    ("5A1", None, None): CatalogEntry(
        5, (), ((0, 1, 2), (2, 3, 4)), (4, "smooth")),
    ("6A1", None, None): CatalogEntry(
        6, (), ((0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)), (6, "smooth")),
    ("7A1", None, None): CatalogEntry(
        7, (),
        ((0, 1, 4), (0, 2, 6), (0, 3, 5), (1, 2, 5), (1, 3, 6), (2, 3, 4),
         (4, 5, 6)), (9, "smooth")),
}


def entry_graph(entry: CatalogEntry) -> nx.Graph:
    g = nx.Graph()
    for i in range(entry.n_roots):
        g.add_node(("root", i), kind="root")
    for ci, hits in enumerate(entry.curves):
        g.add_node(("curve", ci), kind="curve")
        for ri in hits:
            g.add_edge(("curve", ci), ("root", ri))
    for i, j in entry.root_edges:
        g.add_edge(("root", i), ("root", j))
    return g


def matches_catalog(derived, entry: CatalogEntry) -> bool:
    """Tagged-graph isomorphism plus target agreement."""
    if entry.minimal_case is not None or derived.minimal:
        return (
            derived.minimal
            and entry.minimal_case == derived.minimal_case
            and not derived.curves
        )
    if (derived.target_degree, str(derived.target_type)) != entry.target:
        return False
    return nx.is_isomorphic(
        derived.as_networkx(),
        entry_graph(entry),
        node_match=lambda a, b: a["kind"] == b["kind"],
    )


def catalog_key(cfg, variant=None) -> tuple:
    """The catalog key for a configuration under a registry variant tag.

    The tag encodes the extra data some outcomes depend on: conjugacy of
    the two A2 roots, and the orbit partition shape for a 4A1 without a
    triple-contact curve.
    """
    ts = cfg.type_label.display()
    tag = None
    if ts == "A2":
        tag = "conjugate" if 0 in cfg.a2_conjugate_components else "split"
    if (ts, variant) == ("4A1", "no-triple-curve"):
        sizes = sorted(len(o) for o in cfg.orbit_partition)
        if sizes == [4]:
            tag = "one-orbit"
        elif sizes == [2, 2]:
            tag = "paired-orbits"
        else:
            tag = "singleton-orbit"
    return (ts, variant, tag)
