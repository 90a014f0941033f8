"""Singularity configurations: root sets, ADE typing, and orbit invariants.

A configuration models the irreducible (-2)-curves of a degree-2 weak
del Pezzo surface as a set of roots whose pairwise products lie in
{0, 1}.  Product-1 adjacency decomposes the set into connected
components; each component must be a Dynkin diagram of type A, D or E,
and the resulting multiset of labels is the singularity type.  At most
7 components fit, and only 40 type multisets occur.

Galois data is carried as a partition of the components into orbits,
plus a flag per A2 component recording whether its two roots are
conjugate; that is exactly the information the minimality and point
count arguments consume.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .lattice import DivisorClass, LatticeError, SurfaceLattice
from .enumeration import catalog


class InvalidConfigurationError(LatticeError):
    """Root set is not a disjoint union of ADE Dynkin diagrams."""


@dataclass(frozen=True, order=True)
class SingularityType:
    """Multiset of ADE labels, e.g. {A1, A3} displayed as 'A1+A3'."""

    labels: tuple[tuple[str, int], ...]  # sorted (letter, index) pairs

    @staticmethod
    def of(*labels) -> "SingularityType":
        parsed = []
        for item in labels:
            if isinstance(item, tuple):
                parsed.append((item[0], int(item[1])))
            else:
                m = re.fullmatch(r"([ADE])(\d+)", item)
                if not m:
                    raise ValueError(f"bad ADE label {item!r}")
                parsed.append((m.group(1), int(m.group(2))))
        return SingularityType(tuple(sorted(parsed)))

    @staticmethod
    def parse(text: str) -> "SingularityType":
        """Parse display form like '2A1+A3', 'D4' or 'smooth'."""
        text = text.strip()
        if text in ("smooth", ""):
            return SMOOTH
        labels = []
        for part in text.split("+"):
            m = re.fullmatch(r"(\d*)([ADE])(\d+)", part.strip())
            if not m:
                raise ValueError(f"cannot parse singularity type {text!r}")
            count = int(m.group(1)) if m.group(1) else 1
            labels.extend([(m.group(2), int(m.group(3)))] * count)
        return SingularityType(tuple(sorted(labels)))

    @property
    def total_rank(self) -> int:
        return sum(n for _, n in self.labels)

    @property
    def component_count(self) -> int:
        return len(self.labels)

    def display(self) -> str:
        if not self.labels:
            return "smooth"
        parts = []
        for (letter, n), group in itertools.groupby(self.labels):
            count = len(list(group))
            parts.append((f"{count}" if count > 1 else "") + f"{letter}{n}")
        return "+".join(parts)

    def __str__(self):
        return self.display()


SMOOTH = SingularityType(())

# The 40 singularity types occurring on RDP del Pezzo surfaces of degree 2,
# grouped by number of singular points.
DEGREE2_TYPES: tuple[SingularityType, ...] = tuple(
    SingularityType.parse(s)
    for s in (
        "A1 A2 A3 A4 A5 A6 A7 D4 D5 D6 E6 E7".split()
        + "2A1 A1+A2 A1+A3 A1+A4 A1+A5 A1+D4 A1+D5 A1+D6 2A2 A2+A3 A2+A4 A2+A5 2A3".split()
        + "3A1 2A1+A2 2A1+A3 2A1+D4 A1+2A2 A1+A2+A3 A1+2A3 3A2".split()
        + "4A1 3A1+A2 3A1+A3 3A1+D4".split()
        + ["5A1", "6A1", "7A1"]
    )
)
assert len(DEGREE2_TYPES) == 40


def _component_type(adj: dict[int, set[int]], verts: list[int]) -> tuple[str, int]:
    """ADE label of one connected product-1 graph, or raise."""
    n = len(verts)
    degs = {v: len(adj[v]) for v in verts}
    edge_count = sum(degs.values()) // 2
    if edge_count != n - 1:
        raise InvalidConfigurationError("component contains a cycle")
    if max(degs.values(), default=0) <= 2:
        return ("A", n)
    branch = [v for v in verts if degs[v] >= 3]
    if len(branch) != 1 or degs[branch[0]] != 3:
        raise InvalidConfigurationError("component has a vertex of degree >= 4 "
                                        "or multiple branch vertices")
    b = branch[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms == [1, 2, 2]:
        return ("E", 6)
    if arms == [1, 2, 3]:
        return ("E", 7)
    if arms == [1, 2, 4]:
        return ("E", 8)
    raise InvalidConfigurationError(f"tree with arm lengths {arms} is not ADE")


def dynkin_components(lat: SurfaceLattice, roots):
    """Connected components of the product-1 graph with their ADE labels.

    Returns (components, labels) where components are tuples of indices
    into `roots`, ordered by smallest member.  Raises on pairwise
    products outside {0, 1} or non-Dynkin component shapes.
    """
    roots = list(roots)
    for r in roots:
        if not lat.is_root(r):
            raise InvalidConfigurationError(f"{r!r} is not a root")
    if len(set(roots)) != len(roots):
        raise InvalidConfigurationError("duplicate roots")
    adj: dict[int, set[int]] = {i: set() for i in range(len(roots))}
    for i, j in itertools.combinations(range(len(roots)), 2):
        p = lat.intersect(roots[i], roots[j])
        if p == 1:
            adj[i].add(j)
            adj[j].add(i)
        elif p != 0:
            raise InvalidConfigurationError(
                f"roots {roots[i]!r}, {roots[j]!r} have product {p}; "
                "irreducible curves meet with 0 or 1"
            )
    seen: set[int] = set()
    components, labels = [], []
    for i in range(len(roots)):
        if i in seen:
            continue
        stack, comp = [i], []
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            comp.append(v)
            stack.extend(adj[v] - seen)
        comp.sort()
        components.append(tuple(comp))
        labels.append(_component_type(adj, comp))
    order = sorted(range(len(components)), key=lambda t: components[t][0])
    return [components[t] for t in order], [labels[t] for t in order]


def classify_dynkin(lat: SurfaceLattice, roots) -> SingularityType:
    _, labels = dynkin_components(lat, roots)
    return SingularityType(tuple(sorted(labels)))


class Configuration:
    """An immutable root set with component data and Galois orbit partition."""

    def __init__(self, lat: SurfaceLattice, roots, orbits=None, a2_conjugate=()):
        self.lattice = lat
        self.simple_roots: tuple[DivisorClass, ...] = tuple(roots)
        comps, labels = dynkin_components(lat, self.simple_roots)
        self.components: tuple[tuple[int, ...], ...] = tuple(comps)
        self.component_labels: tuple[tuple[str, int], ...] = tuple(labels)
        self.type_label = SingularityType(tuple(sorted(labels)))
        if orbits is None:
            orbits = [(i,) for i in range(len(comps))]
        self.orbit_partition: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(orbit)) for orbit in orbits
        )
        self.a2_conjugate_components: tuple[int, ...] = tuple(sorted(a2_conjugate))

    @property
    def delta(self) -> int:
        """Number of singular points (= components)."""
        return len(self.components)

    def component_roots(self, ci: int) -> tuple[DivisorClass, ...]:
        return tuple(self.simple_roots[i] for i in self.components[ci])

    def isolated_components(self) -> tuple[int, ...]:
        """Indices of the A1 components (roots meeting no other root)."""
        return tuple(
            ci for ci, lab in enumerate(self.component_labels) if lab == ("A", 1)
        )

    def __repr__(self):
        return (
            f"Configuration({self.type_label}, {len(self.simple_roots)} roots, "
            f"orbits={self.orbit_partition})"
        )

    def to_json_dict(self) -> dict:
        return {
            "roots": [list(r.coeffs) for r in self.simple_roots],
            "orbits": [list(o) for o in self.orbit_partition],
            "a2_conjugate_components": list(self.a2_conjugate_components),
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Configuration":
        roots = [DivisorClass(c) for c in data["roots"]]
        if not roots:
            raise InvalidConfigurationError("empty configuration")
        lat = SurfaceLattice(len(roots[0].coeffs) - 1)
        return Configuration(
            lat,
            roots,
            orbits=data.get("orbits"),
            a2_conjugate=data.get("a2_conjugate_components", ()),
        )


def validate_configuration(cfg: Configuration) -> list[str]:
    """Structured list of invariant violations; empty means valid.

    Construction already rejects non-root members, products outside
    {0, 1} and non-Dynkin components, so this re-checks those cheaply
    and adds the degree-2 constraints: at most 7 components, a type in
    the 40-entry catalog, and a consistent orbit partition.
    """
    errors = []
    lat = cfg.lattice
    for r in cfg.simple_roots:
        if not lat.is_root(r):
            errors.append(f"{r!r} is not a root")
    for a, b in itertools.combinations(cfg.simple_roots, 2):
        if lat.intersect(a, b) not in (0, 1):
            errors.append(f"product of {a!r} and {b!r} outside {{0, 1}}")
    if cfg.delta > 7:
        errors.append(f"{cfg.delta} components; at most 7 are possible")
    if lat.rank == 7 and cfg.type_label not in DEGREE2_TYPES:
        errors.append(f"type {cfg.type_label} is not one of the 40 degree-2 types")
    flat = sorted(i for orbit in cfg.orbit_partition for i in orbit)
    if flat != list(range(cfg.delta)):
        errors.append("orbit partition does not partition the component indices")
    else:
        for orbit in cfg.orbit_partition:
            kinds = {cfg.component_labels[i] for i in orbit}
            if len(kinds) > 1:
                errors.append(
                    f"orbit {orbit} mixes component types {sorted(kinds)}"
                )
    for ci in cfg.a2_conjugate_components:
        if ci >= cfg.delta or cfg.component_labels[ci] != ("A", 2):
            errors.append(f"a2_conjugate flag on non-A2 component {ci}")
    return errors


@dataclass(frozen=True)
class Fingerprint:
    """Weyl-invariant signature of a configuration.

    For each exceptional class, the multiset of its products against the
    simple roots; the fingerprint is the multiset of these multisets.
    Applying any lattice automorphism permutes the exceptional classes
    and the roots, so both multisets are unchanged.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def free_curve_count(self) -> int:
        """Exceptional classes orthogonal to every simple root."""
        return sum(1 for row in self.rows if all(v == 0 for v in row))

    def __str__(self):
        import hashlib

        h = hashlib.blake2b(repr(self.rows).encode(), digest_size=8)
        return f"Fingerprint({h.hexdigest()})"


def orbit_fingerprint(cfg: Configuration) -> Fingerprint:
    cat = catalog(cfg.lattice.rank)
    inter = cfg.lattice.intersect
    rows = sorted(
        tuple(sorted(inter(d, f) for f in cfg.simple_roots)) for d in cat.exceptional
    )
    return Fingerprint(tuple(rows))
