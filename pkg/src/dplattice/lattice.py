"""Exact integer model of the Picard lattice of a blown-up projective plane.

The lattice Z^{1,r} has basis l0, l1, ..., lr and intersection form
diag(1, -1, ..., -1).  The canonical class is K = -3*l0 + l1 + ... + lr,
so K*K = 9 - r is the degree of the surface.  Every operation here is
plain integer arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations


class LatticeError(ValueError):
    """Rank out of range or dimension mismatch between lattice and class."""


class InvalidRootError(LatticeError):
    """Reflection requested in a class of self-intersection != -2."""


class ContractionError(LatticeError):
    """blow_down received classes that cannot be contracted together."""


class DivisorClass:
    """Integer vector a0*l0 + a1*l1 + ... + ar*lr.

    Immutable and hashable; arithmetic is componentwise and exact.
    Ordering is lexicographic on the coefficient tuple, which is the
    ordering used by all enumerations in this package.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    @property
    def rank(self) -> int:
        return len(self.coeffs) - 1

    @property
    def a0(self) -> int:
        return self.coeffs[0]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise LatticeError("cannot add classes of different rank")
        return DivisorClass(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise LatticeError("cannot subtract classes of different rank")
        return DivisorClass(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-a for a in self.coeffs)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * a for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, DivisorClass) and self.coeffs == other.coeffs

    def __lt__(self, other: "DivisorClass"):
        return self.coeffs < other.coeffs

    def __le__(self, other: "DivisorClass"):
        return self.coeffs <= other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DivisorClass{self.coeffs}"


class SurfaceLattice:
    """The lattice Z^{1,r} for a surface of degree 9 - r, with 0 <= r <= 8."""

    __slots__ = ("rank",)

    def __init__(self, rank: int):
        if not isinstance(rank, int) or not 0 <= rank <= 8:
            raise LatticeError(f"rank must be an integer in 0..8, got {rank!r}")
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("SurfaceLattice is immutable")

    @property
    def degree(self) -> int:
        return 9 - self.rank

    @property
    def dim(self) -> int:
        return self.rank + 1

    def __eq__(self, other):
        return isinstance(other, SurfaceLattice) and self.rank == other.rank

    def __hash__(self):
        return hash(("SurfaceLattice", self.rank))

    def __repr__(self):
        return f"SurfaceLattice(rank={self.rank})"

    def basis_vector(self, i: int) -> DivisorClass:
        """The class l_i, for 0 <= i <= rank."""
        if not 0 <= i <= self.rank:
            raise LatticeError(f"basis index {i} out of range for rank {self.rank}")
        return DivisorClass(1 if j == i else 0 for j in range(self.dim))

    def canonical_class(self) -> DivisorClass:
        return DivisorClass([-3] + [1] * self.rank)

    def check_class(self, c: DivisorClass) -> None:
        if len(c.coeffs) != self.dim:
            raise LatticeError(
                f"class of length {len(c.coeffs)} does not fit lattice of rank {self.rank}"
            )

    def intersect(self, a: DivisorClass, b: DivisorClass) -> int:
        """a0*b0 - a1*b1 - ... - ar*br."""
        self.check_class(a)
        self.check_class(b)
        x, y = a.coeffs, b.coeffs
        return x[0] * y[0] - sum(x[i] * y[i] for i in range(1, len(x)))

    def self_intersection(self, c: DivisorClass) -> int:
        return self.intersect(c, c)

    def k_degree(self, c: DivisorClass) -> int:
        """Intersection with the canonical class."""
        self.check_class(c)
        return -3 * c.coeffs[0] - sum(c.coeffs[1:])

    def is_root(self, c: DivisorClass) -> bool:
        return self.self_intersection(c) == -2 and self.k_degree(c) == 0

    def is_exceptional_class(self, c: DivisorClass) -> bool:
        """Self-intersection -1, canonical degree -1, nonnegative l0 part."""
        return (
            self.self_intersection(c) == -1
            and self.k_degree(c) == -1
            and c.coeffs[0] >= 0
        )

    def reflect(self, x: DivisorClass, root: DivisorClass) -> DivisorClass:
        """Reflection s_root(x) = x + (x . root) root.

        Fixes the canonical class and preserves the intersection form; an
        involution on the lattice.
        """
        if not self.is_root(root):
            raise InvalidRootError(f"{root!r} is not a root of {self!r}")
        return x + self.intersect(x, root) * root
