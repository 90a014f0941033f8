"""Enumeration of exceptional and root classes, and the named rank-7 catalog.

An exceptional class satisfies c*c = c*K = -1 with a0 >= 0; a root
satisfies c*c = -2, c*K = 0 (both signs kept).  At rank 7 there are 56
exceptional classes and 126 roots, falling into the coefficient families

    A_i  = l_i                          A'_{ij}  = l_i - l_j
    B_ij = l0 - l_i - l_j               B'_{ijk} = l0 - l_i - l_j - l_k
    C_ij = 2l0 - sum l + l_i + l_j      C'_i     = 2l0 - sum l + l_i
    D_i  = 3l0 - sum l - l_i

The search is exhaustive within the Cauchy-Schwarz bound on a0 derived
per rank, so it works uniformly for ranks 0..8 (240 exceptional classes
and 240 roots at rank 8).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import isqrt

from .lattice import DivisorClass, LatticeError, SurfaceLattice


def _tail_solutions(k, total, square_total, bound):
    """Integer k-tuples with the given sum and sum of squares, |entry| <= bound."""
    if square_total < 0 or total * total > k * square_total:
        return
    if k == 0:
        if total == 0 and square_total == 0:
            yield ()
        return
    b = min(bound, isqrt(square_total))
    for v in range(-b, b + 1):
        for rest in _tail_solutions(k - 1, total - v, square_total - v * v, bound):
            yield (v,) + rest


def _classes_with(lat: SurfaceLattice, self_int: int, kdeg: int, a0_min=None):
    """All classes c with c*c = self_int and c*K = kdeg, a0 >= a0_min if given.

    Constraints on the tail (a1..ar): sum = -3*a0 - kdeg and sum of
    squares = a0^2 - self_int; Cauchy-Schwarz bounds the feasible a0.
    """
    r = lat.rank
    out = []
    for a0 in range(-70, 71):
        if a0_min is not None and a0 < a0_min:
            continue
        sq = a0 * a0 - self_int
        s = -3 * a0 - kdeg
        if sq < 0 or s * s > r * sq:
            continue
        for tail in _tail_solutions(r, s, sq, isqrt(sq)):
            out.append(DivisorClass((a0,) + tail))
    return out


def exceptional_classes(lat: SurfaceLattice) -> list[DivisorClass]:
    """All classes with c*c = c*K = -1 and a0 >= 0, lexicographically sorted."""
    found = sorted(_classes_with(lat, -1, -1, a0_min=0))
    for c in found:
        assert lat.is_exceptional_class(c)
    return found


def root_classes(lat: SurfaceLattice) -> list[DivisorClass]:
    """All classes with c*c = -2 and c*K = 0, both signs, sorted."""
    found = sorted(_classes_with(lat, -2, 0))
    for c in found:
        assert lat.is_root(c)
    return found


# ---------------------------------------------------------------------------
# symbolic names at rank 7


def _rank7_exceptional_names():
    names = {}
    base = [0] * 8
    for i in range(1, 8):
        c = [0] * 8
        c[i] = 1
        names[f"A{i}"] = DivisorClass(c)
    for i, j in itertools.combinations(range(1, 8), 2):
        c = [1] + [0] * 7
        c[i] = c[j] = -1
        names[f"B{i}{j}"] = DivisorClass(c)
    for i, j in itertools.combinations(range(1, 8), 2):
        c = [2] + [-1] * 7
        c[i] = c[j] = 0
        names[f"C{i}{j}"] = DivisorClass(c)
    for i in range(1, 8):
        c = [3] + [-1] * 7
        c[i] = -2
        names[f"D{i}"] = DivisorClass(c)
    return names


def _rank7_root_names():
    names = {}
    for i, j in itertools.permutations(range(1, 8), 2):
        c = [0] * 8
        c[i], c[j] = 1, -1
        names[f"A'{i}{j}"] = DivisorClass(c)
    for i, j, k in itertools.combinations(range(1, 8), 3):
        c = [1] + [0] * 7
        c[i] = c[j] = c[k] = -1
        names[f"B'{i}{j}{k}"] = DivisorClass(c)
        names[f"-B'{i}{j}{k}"] = -names[f"B'{i}{j}{k}"]
    for i in range(1, 8):
        c = [2] + [-1] * 7
        c[i] = 0
        names[f"C'{i}"] = DivisorClass(c)
        names[f"-C'{i}"] = -names[f"C'{i}"]
    return names


def _family_of(name: str) -> str:
    if name.startswith("-"):
        name = name[1:]
    return name[0] + ("'" if name[1] == "'" else "")


def _indices_of(name: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in name if ch.isdigit())


EXCEPTIONAL_FAMILIES = ("A", "B", "C", "D")
ROOT_FAMILIES = ("A'", "B'", "C'")


class ClassCatalog:
    """Exceptional classes and roots of one lattice, with fast product tables.

    Lists are duplicate-free and lexicographically ordered; at rank 7 the
    symbolic names above are attached and `name_index` maps each name to
    its list position.
    """

    def __init__(self, lat: SurfaceLattice):
        self.lattice = lat
        self.exceptional = tuple(exceptional_classes(lat))
        self.roots = tuple(root_classes(lat))
        self.exceptional_index = {c: i for i, c in enumerate(self.exceptional)}
        self.root_index = {c: i for i, c in enumerate(self.roots)}
        inter = lat.intersect
        self.gram_exceptional = tuple(
            tuple(inter(a, b) for b in self.exceptional) for a in self.exceptional
        )
        self.gram_roots = tuple(
            tuple(inter(a, b) for b in self.roots) for a in self.roots
        )
        self.gram_mixed = tuple(
            tuple(inter(d, r) for r in self.roots) for d in self.exceptional
        )
        self.class_names: dict[DivisorClass, str] = {}
        self.name_index: dict[str, int] = {}
        if lat.rank == 7:
            exc_names = _rank7_exceptional_names()
            root_names = _rank7_root_names()
            assert set(exc_names.values()) == set(self.exceptional)
            assert set(root_names.values()) == set(self.roots)
            for name, c in exc_names.items():
                self.class_names[c] = name
                self.name_index[name] = self.exceptional_index[c]
            for name, c in root_names.items():
                self.class_names[c] = name
                self.name_index[name] = self.root_index[c]

    def named(self, name: str) -> DivisorClass:
        if name in self.name_index:
            fam = _family_of(name)
            seq = self.roots if fam in ROOT_FAMILIES else self.exceptional
            return seq[self.name_index[name]]
        raise KeyError(f"unknown class name {name!r}")

    def name_of(self, c: DivisorClass) -> str:
        return self.class_names.get(c) or repr(c)

    def family_members(self, family: str) -> list[tuple[str, DivisorClass]]:
        """Named members of one coefficient family, in name order.

        Root families list only the a0 >= 0 representatives (84 classes),
        matching the family definitions; negated classes carry a leading
        minus in their name and are excluded here.
        """
        if family not in EXCEPTIONAL_FAMILIES + ROOT_FAMILIES:
            raise KeyError(f"unknown family {family!r}")
        out = []
        for name in self.name_index:
            if name.startswith("-"):
                continue
            if _family_of(name) == family:
                out.append((name, self.named(name)))
        out.sort(key=lambda item: _indices_of(item[0]))
        return out


@lru_cache(maxsize=None)
def catalog(rank: int = 7) -> ClassCatalog:
    return ClassCatalog(SurfaceLattice(rank))


# ---------------------------------------------------------------------------
# intersection tables


def _overlap_pattern(fam_x, idx_x, fam_y, idx_y):
    """Index-overlap signature of an ordered pair of named classes.

    Membership vectors are sorted for families with unordered index sets;
    the A' family keeps its (i, j) order, and an A' x A' pair additionally
    records the positional equalities, since l_i - l_j is orientation
    sensitive.
    """
    mx = tuple(a in idx_y for a in idx_x)
    my = tuple(b in idx_x for b in idx_y)
    if fam_x != "A'":
        mx = tuple(sorted(mx))
    if fam_y != "A'":
        my = tuple(sorted(my))
    diag = None
    if fam_x == "A'" and fam_y == "A'":
        diag = (
            idx_x[0] == idx_y[0],
            idx_x[0] == idx_y[1],
            idx_x[1] == idx_y[0],
            idx_x[1] == idx_y[1],
        )
    return (mx, my, diag)


def intersection_table(cat: ClassCatalog, left_family: str, right_family: str):
    """Partition of index patterns with the constant product on each part.

    Evaluates every ordered pair of the two families exhaustively, groups
    by overlap pattern, and checks the product is constant per pattern.
    Raises if a pattern shows two different values, so a successful return
    certifies that the product depends only on the index pattern.
    """
    if cat.lattice.rank != 7:
        raise LatticeError("named families exist only at rank 7")
    inter = cat.lattice.intersect
    table: dict[tuple, int] = {}
    for name_x, x in cat.family_members(left_family):
        for name_y, y in cat.family_members(right_family):
            pat = _overlap_pattern(
                left_family, _indices_of(name_x), right_family, _indices_of(name_y)
            )
            v = inter(x, y)
            if pat in table and table[pat] != v:
                raise AssertionError(
                    f"pattern {pat} of {left_family} x {right_family} is not constant"
                )
            table[pat] = v
    return table


def iter_named_pairs(cat: ClassCatalog, kind: str):
    """Ordered named pairs for table emission.

    kind: 'pre-pre' (56 x 56), 'root-root' (84 x 84 nonnegative
    representatives), or 'pre-root' (56 x 84).
    """
    pre = [item for fam in EXCEPTIONAL_FAMILIES for item in cat.family_members(fam)]
    roots = [item for fam in ROOT_FAMILIES for item in cat.family_members(fam)]
    if kind == "pre-pre":
        left, right = pre, pre
    elif kind == "root-root":
        left, right = roots, roots
    elif kind == "pre-root":
        left, right = pre, roots
    else:
        raise KeyError(f"unknown pair kind {kind!r}")
    inter = cat.lattice.intersect
    for name_x, x in left:
        for name_y, y in right:
            yield name_x, name_y, inter(x, y)
