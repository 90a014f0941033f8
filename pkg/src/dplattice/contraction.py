"""Blow-down of disjoint contractible classes to a smaller surface lattice.

Contracting m pairwise-disjoint classes with c*c = c*K = -1 identifies
the orthogonal complement of their span with the Picard lattice of a
surface of degree (9 - r) + m.  The complement is computed by moving
each curve to the last basis vector with integral reflections and then
dropping that coordinate, so the change of basis is unimodular and the
resulting projection matrix is returned for reproducibility.

One genuine special case: a rank-1 target can be the even hyperbolic
plane (the Picard lattice of a quadric surface) rather than Z^{1,1}.
This happens exactly when the last curve reduces to l0 - l1 - l2 in the
rank-2 lattice; the result then carries a QuadricLattice.
"""

from __future__ import annotations

from .lattice import ContractionError, DivisorClass, SurfaceLattice
from .enumeration import root_classes


class QuadricLattice:
    """Even unimodular lattice of signature (1,1): basis u, v with
    u*u = v*v = 0 and u*v = 1.  Canonical class -2u - 2v, degree 8."""

    rank = 1
    degree = 8

    def intersect(self, a: DivisorClass, b: DivisorClass) -> int:
        x, y = a.coeffs, b.coeffs
        if len(x) != 2 or len(y) != 2:
            raise ContractionError("QuadricLattice classes have two coordinates")
        return x[0] * y[1] + x[1] * y[0]

    def canonical_class(self) -> DivisorClass:
        return DivisorClass((-2, -2))

    def self_intersection(self, c: DivisorClass) -> int:
        return self.intersect(c, c)

    def __eq__(self, other):
        return isinstance(other, QuadricLattice)

    def __hash__(self):
        return hash("QuadricLattice")

    def __repr__(self):
        return "QuadricLattice()"


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_vec(m, v):
    return [sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m))]


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _reflection_matrix(lat: SurfaceLattice, root: DivisorClass):
    """Matrix of x -> x + (x . root) root in the l-basis."""
    n = lat.dim
    g = [root.coeffs[0]] + [-c for c in root.coeffs[1:]]
    m = _identity(n)
    for i in range(n):
        for j in range(n):
            m[i][j] += root.coeffs[i] * g[j]
    return m


def _reduce_to_last(lat: SurfaceLattice, e: DivisorClass):
    """Reflection roots moving the contractible class e to l_rank.

    While a0 > 0, reflecting in the root of most negative product (the
    root has a0 > 0) strictly decreases a0.  At a0 = 0 the class is some
    l_i and a coordinate swap finishes.
    """
    roots = [r for r in root_classes(lat) if r.coeffs[0] > 0]
    steps = []
    cur = e
    while cur.coeffs[0] != 0:
        candidates = [(lat.intersect(cur, r), r) for r in roots]
        candidates = [(p, r) for p, r in candidates if p < 0]
        if not candidates:
            raise ContractionError(f"cannot reduce {cur!r}: no descending reflection")
        _, best = min(candidates)
        steps.append(best)
        cur = lat.reflect(cur, best)
    i = next(t for t, c in enumerate(cur.coeffs) if c == 1)
    if i != lat.rank:
        swap = DivisorClass(
            [0] + [1 if t == i else -1 if t == lat.rank else 0 for t in range(1, lat.dim)]
        )
        steps.append(swap)
        cur = lat.reflect(cur, swap)
    assert cur == lat.basis_vector(lat.rank)
    return steps


class BlowDownResult:
    """Target lattice plus the integral projection onto it.

    `matrix` has shape (target dim) x (source dim); `push` applies it.
    Products are preserved for classes orthogonal to every contracted
    curve, and the canonical class pushes to the target canonical class.
    """

    def __init__(self, source, lattice, matrix):
        self.source = source
        self.lattice = lattice
        self.matrix = tuple(tuple(row) for row in matrix)

    @property
    def degree(self) -> int:
        return self.lattice.degree

    def push(self, c: DivisorClass) -> DivisorClass:
        self.source.check_class(c)
        return DivisorClass(_mat_vec(self.matrix, list(c.coeffs)))


def blow_down(lat: SurfaceLattice, curves) -> BlowDownResult:
    """Contract pairwise-disjoint classes with c*c = c*K = -1.

    Returns the lattice of rank r - m together with the projection map.
    An empty curve list returns the identity on the source lattice.
    """
    curves = list(curves)
    for c in curves:
        lat.check_class(c)
        if lat.self_intersection(c) != -1 or lat.k_degree(c) != -1:
            raise ContractionError(f"{c!r} is not a contractible (-1)-class")
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if lat.intersect(curves[i], curves[j]) != 0:
                raise ContractionError(
                    f"classes {curves[i]!r} and {curves[j]!r} are not disjoint"
                )
    if len(curves) > lat.rank:
        raise ContractionError("more curves than the rank allows")

    transform = _identity(lat.dim)
    cur_lat = lat
    for idx, c in enumerate(curves):
        e = DivisorClass(_mat_vec(transform, list(c.coeffs)))
        if cur_lat.rank == 2 and e.coeffs == (1, -1, -1):
            # Only possible for the final curve; the complement is even.
            assert idx == len(curves) - 1
            transform = _mat_mul([[1, 1, 0], [1, 0, 1]], transform)
            result = BlowDownResult(lat, QuadricLattice(), transform)
            assert result.push(lat.canonical_class()) == DivisorClass((-2, -2))
            return result
        for root in _reduce_to_last(cur_lat, e):
            transform = _mat_mul(_reflection_matrix(cur_lat, root), transform)
        drop = [
            [1 if i == j else 0 for j in range(cur_lat.dim)]
            for i in range(cur_lat.dim - 1)
        ]
        transform = _mat_mul(drop, transform)
        cur_lat = SurfaceLattice(cur_lat.rank - 1)

    result = BlowDownResult(lat, cur_lat, transform)
    assert result.push(lat.canonical_class()) == cur_lat.canonical_class()
    return result
