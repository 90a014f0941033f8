"""Curve calculus on a configuration: honesty, reduction, derivations.

An exceptional class is an actual (-1)-curve for a given configuration
exactly when it meets every simple root nonnegatively; otherwise it
splits off simple roots one at a time until it does.  Two disjoint
roots determine exactly two exceptional classes meeting both with
value 1, and reducing those yields the (-1)-curves attached to a pair
of singular points.  These building blocks drive the per-type
contraction derivations in `derivations`.
"""

from __future__ import annotations

import itertools
from collections import Counter

from .lattice import DivisorClass, LatticeError, SurfaceLattice
from .enumeration import ClassCatalog, catalog
from .configuration import Configuration


class ReductionError(LatticeError):
    """Reduction failed to terminate within the positive-root budget."""


def _require_exceptional(lat: SurfaceLattice, D: DivisorClass):
    if not lat.is_exceptional_class(D):
        raise LatticeError(f"{D!r} is not an exceptional class")


def is_minus_one_curve(D: DivisorClass, cfg: Configuration) -> bool:
    """True iff D meets every simple root of cfg nonnegatively."""
    lat = cfg.lattice
    _require_exceptional(lat, D)
    return all(lat.intersect(D, f) >= 0 for f in cfg.simple_roots)


def reduce_to_minus_one(D: DivisorClass, cfg: Configuration):
    """Split D into its (-1)-curve part and the removed simple roots.

    While some simple root has product -1 with the running class, the
    lowest-indexed such root is subtracted (the terminal class does not
    depend on this choice).  Returns (E, removed) with
    D == E + sum(removed); 63 iterations (the positive root count of
    E7) is a hard cap that is never reached on valid input.
    """
    lat = cfg.lattice
    _require_exceptional(lat, D)
    cur = D
    removed: list[DivisorClass] = []
    for _ in range(63 + 1):
        neg = next(
            (f for f in cfg.simple_roots if lat.intersect(cur, f) == -1), None
        )
        if neg is None:
            total = cur
            for f in removed:
                total = total + f
            assert total == D
            return cur, tuple(removed)
        removed.append(neg)
        cur = cur - neg
    raise ReductionError(f"reduction of {D!r} did not terminate")


def classes_meeting(F: DivisorClass, value: int, cat: ClassCatalog):
    """Exceptional classes D with D . F == value (value in -1, 0, 1)."""
    if not cat.lattice.is_root(F):
        raise LatticeError(f"{F!r} is not a root")
    inter = cat.lattice.intersect
    return [d for d in cat.exceptional if inter(d, F) == value]


def pair_classes(F: DivisorClass, G: DivisorClass, cat: ClassCatalog):
    """The two exceptional classes meeting two disjoint roots with value 1.

    They are disjoint and sum to -K - F - G.  Returned sorted.
    """
    lat = cat.lattice
    if F == G or F == -G:
        raise LatticeError("roots must be distinct up to sign")
    if lat.intersect(F, G) != 0:
        raise LatticeError(f"roots {F!r} and {G!r} are not orthogonal")
    inter = lat.intersect
    hits = [d for d in cat.exceptional if inter(d, F) == 1 and inter(d, G) == 1]
    assert len(hits) == 2
    d1, d2 = sorted(hits)
    assert inter(d1, d2) == 0
    assert d1 + d2 == -lat.canonical_class() - F - G
    return d1, d2


def derive_pair_curves(cfg: Configuration, comp_i: int, comp_j: int) -> frozenset:
    """The (-1)-curves attached to a pair of distinct singular points.

    Picks one root from each component, takes the two classes meeting
    both, and reduces each; the result is independent of the choice of
    roots.  The two curves are disjoint or equal, so the result is a
    one- or two-element set.
    """
    if comp_i == comp_j:
        raise LatticeError("components must be distinct")
    cat = catalog(cfg.lattice.rank)
    F = cfg.simple_roots[cfg.components[comp_i][0]]
    G = cfg.simple_roots[cfg.components[comp_j][0]]
    d1, d2 = pair_classes(F, G, cat)
    e1, _ = reduce_to_minus_one(d1, cfg)
    e2, _ = reduce_to_minus_one(d2, cfg)
    assert cfg.lattice.intersect(e1, e2) in (0, -1)
    if cfg.lattice.intersect(e1, e2) == -1:
        assert e1 == e2
    return frozenset((e1, e2))


def triple_a1_curves(cfg: Configuration):
    """(-1)-curves meeting exactly three simple roots, all isolated.

    Each such curve E satisfies 2E == -K - F1 - F2 - F3 for its three
    roots, which are necessarily pairwise-orthogonal A1 components.
    Returned in catalog order.
    """
    lat = cfg.lattice
    cat = catalog(lat.rank)
    isolated = {
        cfg.simple_roots[i]
        for ci in cfg.isolated_components()
        for i in cfg.components[ci]
    }
    out = []
    for d in cat.exceptional:
        hits = [f for f in cfg.simple_roots if lat.intersect(d, f) == 1]
        if len(hits) != 3:
            continue
        if not is_minus_one_curve(d, cfg):
            continue
        assert all(f in isolated for f in hits)
        assert 2 * d == -lat.canonical_class() - hits[0] - hits[1] - hits[2]
        out.append(d)
    return out


def free_minus_one_curves(cfg: Configuration):
    """(-1)-curves orthogonal to every simple root, in catalog order."""
    lat = cfg.lattice
    cat = catalog(lat.rank)
    return [
        d
        for d in cat.exceptional
        if all(lat.intersect(d, f) == 0 for f in cfg.simple_roots)
    ]


def eckardt_quadruples(cat: ClassCatalog):
    """All 4-sets of exceptional classes with pairwise product 1.

    Four (-1)-curves through one point pairwise meet with multiplicity
    one and sum to -2K; no fifth curve can join such a set.  Returns
    sorted 4-tuples.
    """
    n = len(cat.exceptional)
    gram = cat.gram_exceptional
    neighbors = [
        frozenset(j for j in range(n) if gram[i][j] == 1) for i in range(n)
    ]
    minus_2k = -2 * cat.lattice.canonical_class()
    quads = []
    for i in range(n):
        for j in sorted(neighbors[i]):
            if j <= i:
                continue
            common_ij = neighbors[i] & neighbors[j]
            for k in sorted(common_ij):
                if k <= j:
                    continue
                for l in sorted(common_ij & neighbors[k]):
                    if l <= k:
                        continue
                    quad = (i, j, k, l)
                    total = DivisorClass([0] * cat.lattice.dim)
                    for t in quad:
                        total = total + cat.exceptional[t]
                    assert total == minus_2k
                    # no fifth pairwise-product-1 class exists
                    assert not (common_ij & neighbors[k] & neighbors[l])
                    quads.append(tuple(cat.exceptional[t] for t in quad))
    return quads
