"""Full enumeration of the lattice automorphism group fixing K at rank 7.

The group is generated by the seven simple reflections in the roots
l1-l2, ..., l6-l7 and l0-l1-l2-l3 and has order 2,903,040.  Elements
are stored as permutations of the 126 roots (one byte per entry, ~366MB
for the whole group); the matrix action on the full lattice is
reconstructed exactly on demand.  Enumeration is a breadth-first
closure by word length: products of a level with the generators land in
the adjacent levels only, so deduplication needs just the previous
level.  Levels are sorted bytewise, making the element order
reproducible, and the table can be cached on disk.

Traces are computed from the permutation alone: expanding the images of
the seven basis roots in root coordinates gives the trace on the
orthogonal complement of K, and K itself contributes 1.
"""

from __future__ import annotations

import hashlib
import os
import struct
from fractions import Fraction

import numpy as np

from .lattice import DivisorClass, LatticeError
from .enumeration import ClassCatalog, catalog

GROUP_ORDER = 2_903_040
CACHE_MAGIC = b"DPLWEYL1"
CACHE_VERSION = 1
CACHE_ENV = "DPL_CACHE_DIR"

SIMPLE_ROOT_NAMES = ("A'12", "A'23", "A'34", "A'45", "A'56", "A'67", "B'123")


def _void_rows(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    return a.view(np.dtype((np.void, a.shape[1]))).reshape(-1)


def _fraction_inverse(m):
    """Inverse of a square Fraction matrix by Gauss-Jordan elimination."""
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[col])]
    return [row[n:] for row in a]


def _simple_reflection_perms(cat: ClassCatalog) -> np.ndarray:
    lat = cat.lattice
    perms = []
    for name in SIMPLE_ROOT_NAMES:
        root = cat.named(name)
        perm = [cat.root_index[lat.reflect(r, root)] for r in cat.roots]
        perms.append(perm)
    return np.array(perms, dtype=np.uint8)


def _root_coordinates(cat: ClassCatalog) -> np.ndarray:
    """Integer coordinates of every root in the simple-root basis."""
    lat = cat.lattice
    basis = [cat.named(n) for n in SIMPLE_ROOT_NAMES]
    n = len(basis)
    gram = [[Fraction(lat.intersect(a, b)) for b in basis] for a in basis]
    coords = []
    for r in cat.roots:
        rhs = [Fraction(lat.intersect(r, b)) for b in basis]
        # Gaussian elimination over the rationals; the Gram matrix of a
        # simple system is invertible.
        a = [row[:] + [rhs[i]] for i, row in enumerate(gram)]
        for col in range(n):
            piv = next(i for i in range(col, n) if a[i][col] != 0)
            a[col], a[piv] = a[piv], a[col]
            inv = 1 / a[col][col]
            a[col] = [v * inv for v in a[col]]
            for i in range(n):
                if i != col and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [v - f * w for v, w in zip(a[i], a[col])]
        x = [a[i][n] for i in range(n)]
        assert all(v.denominator == 1 for v in x)
        total = DivisorClass([0] * lat.dim)
        for v, b in zip(x, basis):
            total = total + int(v) * b
        assert total == r
        coords.append([int(v) for v in x])
    return np.array(coords, dtype=np.int8)


class WeylElement:
    """One group element, held as a permutation of the root list."""

    def __init__(self, cat: ClassCatalog, perm):
        self.catalog = cat
        self.perm = np.asarray(perm, dtype=np.uint8)
        self._matrix = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and np.array_equal(
            self.perm, other.perm
        )

    def __hash__(self):
        return hash(self.perm.tobytes())

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition: (self * other)(x) = self(other(x))."""
        return WeylElement(self.catalog, self.perm[other.perm])

    @property
    def matrix(self):
        """Exact matrix on lattice coordinates, solved from the images of
        K and the seven simple roots (M B = images, so M = images B^-1,
        computed over the rationals and verified integral)."""
        if self._matrix is None:
            cat = self.catalog
            lat = cat.lattice
            basis = [lat.canonical_class()] + [
                cat.named(n) for n in SIMPLE_ROOT_NAMES
            ]
            images = [lat.canonical_class()] + [
                cat.roots[self.perm[cat.root_index[cat.named(n)]]]
                for n in SIMPLE_ROOT_NAMES
            ]
            n = lat.dim
            binv = _fraction_inverse(
                [[Fraction(basis[j].coeffs[i]) for j in range(n)] for i in range(n)]
            )
            imat = [[Fraction(images[j].coeffs[i]) for j in range(n)] for i in range(n)]
            mat = []
            for i in range(n):
                row = []
                for j in range(n):
                    v = sum(imat[i][k] * binv[k][j] for k in range(n))
                    assert v.denominator == 1
                    row.append(int(v))
                mat.append(tuple(row))
            self._matrix = tuple(mat)
        return self._matrix

    def apply(self, c: DivisorClass) -> DivisorClass:
        m = self.matrix
        return DivisorClass(
            sum(m[i][j] * c.coeffs[j] for j in range(len(c.coeffs)))
            for i in range(len(m))
        )

    def trace(self) -> int:
        return sum(self.matrix[i][i] for i in range(len(self.matrix)))


def trace(g: WeylElement) -> int:
    return g.trace()


class WeylGroup:
    """The enumerated group: permutation table, traces, and generators."""

    def __init__(self, cat: ClassCatalog, perms: np.ndarray):
        self.catalog = cat
        self.perms = perms
        self.generator_perms = _simple_reflection_perms(cat)
        coords = _root_coordinates(cat)
        basis_idx = np.array(
            [cat.root_index[cat.named(n)] for n in SIMPLE_ROOT_NAMES]
        )
        images = perms[:, basis_idx].astype(np.int32)
        self.traces = (
            1
            + sum(
                coords[images[:, i], i].astype(np.int32)
                for i in range(len(basis_idx))
            )
        ).astype(np.int16)

    @property
    def order(self) -> int:
        return len(self.perms)

    @property
    def generators(self):
        return [WeylElement(self.catalog, p) for p in self.generator_perms]

    def element(self, i: int) -> WeylElement:
        return WeylElement(self.catalog, self.perms[i])

    def __len__(self):
        return len(self.perms)


def _closure_levels(gens: np.ndarray):
    """Breadth-first closure by word length.

    Right-multiplying a length-l element by a generator gives length
    l - 1 or l + 1, so removing the previous level from the candidate
    products leaves exactly the next level.
    """
    n = gens.shape[1]
    identity = np.arange(n, dtype=np.uint8)[None, :]
    levels = [identity]
    gen_list = [g.astype(np.intp) for g in gens]
    prev = identity
    cur = np.unique(gens, axis=0)
    while len(cur):
        levels.append(cur)
        cand = np.vstack([cur[:, g] for g in gen_list])
        cand_v = _void_rows(cand)
        uniq_v, first = np.unique(cand_v, return_index=True)
        keep = ~np.isin(uniq_v, _void_rows(prev), assume_unique=True)
        prev, cur = cur, cand[first[keep]]
    return levels


def _generator_digest(gens: np.ndarray) -> bytes:
    return hashlib.blake2b(gens.tobytes(), digest_size=16).digest()


def _cache_path(cache_dir: str, gens: np.ndarray) -> str:
    return os.path.join(
        cache_dir, f"weyl-e7-{_generator_digest(gens).hex()}.bin"
    )


def save_cache(path: str, gens: np.ndarray, perms: np.ndarray) -> None:
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<I", CACHE_VERSION))
        fh.write(_generator_digest(gens))
        fh.write(struct.pack("<Q", len(perms)))
        fh.write(np.ascontiguousarray(perms).tobytes())


def load_cache(path: str, gens: np.ndarray):
    with open(path, "rb") as fh:
        if fh.read(len(CACHE_MAGIC)) != CACHE_MAGIC:
            raise LatticeError(f"{path}: not a group cache file")
        (version,) = struct.unpack("<I", fh.read(4))
        if version != CACHE_VERSION:
            raise LatticeError(f"{path}: unsupported cache version {version}")
        if fh.read(16) != _generator_digest(gens):
            raise LatticeError(f"{path}: cache built from other generators")
        (count,) = struct.unpack("<Q", fh.read(8))
        data = np.fromfile(fh, dtype=np.uint8, count=count * gens.shape[1])
    return data.reshape(count, gens.shape[1])


def generate_group(cat: ClassCatalog | None = None, cache_dir: str | None = None,
                   use_cache: bool = True) -> WeylGroup:
    """Enumerate the whole group (or load it from the cache directory).

    The cache directory defaults to the DPL_CACHE_DIR environment
    variable; without one the table is rebuilt in memory each time.
    """
    if cat is None:
        cat = catalog(7)
    if cat.lattice.rank != 7:
        raise LatticeError("group enumeration is defined for rank 7")
    gens = _simple_reflection_perms(cat)
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    path = _cache_path(cache_dir, gens) if cache_dir else None
    if use_cache and path and os.path.exists(path):
        return WeylGroup(cat, load_cache(path, gens))
    levels = _closure_levels(gens)
    perms = np.vstack(levels)
    if use_cache and path:
        os.makedirs(cache_dir, exist_ok=True)
        save_cache(path, gens, perms)
    return WeylGroup(cat, perms)


_shared: dict[bool, WeylGroup] = {}


def shared_group() -> WeylGroup:
    """Process-wide singleton, built on first use."""
    if True not in _shared:
        _shared[True] = generate_group()
    return _shared[True]


# ---------------------------------------------------------------------------
# root tuple sets and transitivity


def delta_sets(cat: ClassCatalog, group: WeylGroup, chunk: int = 131072,
               threads: int = 1):
    """Root index sets: all roots, product-1 ordered pairs, and ordered
    orthogonal 4-tuples (r, gr, g^2 r, g^3 r) cyclically permuted by some
    group element.

    The 4-tuples are found in one pass over the whole group: for each
    element and each root of period four, orthogonality of the orbit
    needs only r . gr = 0 and r . g^2 r = 0, the rest follows by
    invariance of the product.
    """
    n = len(cat.roots)
    delta1 = tuple(range(n))
    gram = np.array(cat.gram_roots, dtype=np.int8)
    delta2 = tuple(
        (i, j) for i in range(n) for j in range(n) if gram[i, j] == 1
    )
    ortho = gram == 0
    idx = np.arange(n)
    perms = group.perms

    def scan(start):
        c1 = perms[start : start + chunk].astype(np.int16)
        c2 = np.take_along_axis(c1, c1, axis=1)
        c3 = np.take_along_axis(c1, c2, axis=1)
        c4 = np.take_along_axis(c1, c3, axis=1)
        mask = (
            (c4 == idx)
            & (c1 != idx)
            & (c2 != idx)
            & ortho[idx[None, :], c1]
            & ortho[idx[None, :], c2]
        )
        rows, cols = np.nonzero(mask)
        found = np.stack(
            [cols, c1[rows, cols], c2[rows, cols], c3[rows, cols]], axis=1
        )
        return np.unique(found, axis=0)

    starts = range(0, len(perms), chunk)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            pieces = list(pool.map(scan, starts))
    else:
        pieces = [scan(s) for s in starts]
    quads = {
        tuple(int(v) for v in quad) for piece in pieces for quad in piece
    }
    return delta1, delta2, tuple(sorted(quads))


def verify_transitivity(group: WeylGroup, which, seed=None) -> bool:
    """Orbit of one seed under the generators equals the whole set.

    `which` is one of the tuples returned by delta_sets (or the strings
    'd1', 'd2', 'd3' with sets recomputed as needed).
    """
    gens = [g.astype(np.intp) for g in group.generator_perms]
    if isinstance(which, str):
        cat = group.catalog
        d1, d2, d3 = delta_sets(cat, group)
        which = {"d1": d1, "d2": d2, "d3": d3}[which]
    universe = set(which)
    start = seed if seed is not None else next(iter(sorted(universe)))
    frontier = [start]
    seen = {start}
    while frontier:
        state = frontier.pop()
        for g in gens:
            image = (
                int(g[state])
                if isinstance(state, int)
                else tuple(int(g[s]) for s in state)
            )
            if image not in seen:
                if image not in universe:
                    return False
                seen.add(image)
                frontier.append(image)
    return seen == universe


TRACE_FILTERS = ("fix-root", "swap-pair", "cycle-quad")


def trace_set(group: WeylGroup, kind: str, witness=None) -> set[int]:
    """Set of traces over all elements satisfying a pointwise condition.

    fix-root: g(r) = r for a root r (default: the first root).
    swap-pair: g exchanges the two roots of a product-1 pair.
    cycle-quad: g cyclically permutes an orthogonal 4-tuple.
    The answer is independent of the witness by transitivity.
    """
    perms = group.perms
    if kind == "fix-root":
        r = witness if witness is not None else 0
        mask = perms[:, r] == r
    elif kind == "swap-pair":
        if witness is None:
            cat = group.catalog
            witness = next(
                (i, j)
                for i in range(len(cat.roots))
                for j in range(len(cat.roots))
                if cat.gram_roots[i][j] == 1
            )
        a, b = witness
        mask = (perms[:, a] == b) & (perms[:, b] == a)
    elif kind == "cycle-quad":
        if witness is None:
            _, _, d3 = delta_sets(group.catalog, group)
            witness = d3[0]
        a, b, c, d = witness
        mask = (
            (perms[:, a] == b)
            & (perms[:, b] == c)
            & (perms[:, c] == d)
            & (perms[:, d] == a)
        )
    else:
        raise LatticeError(f"unknown trace filter {kind!r}")
    if not mask.any():
        raise LatticeError(f"no group element satisfies {kind} at {witness!r}")
    return {int(t) for t in np.unique(group.traces[mask])}
