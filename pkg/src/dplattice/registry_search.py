"""Exhaustive enumeration of root sets realizing each singularity type.

Used to build (and in tests, to regenerate) the representative registry.
Enumeration is exhaustive up to lattice symmetry: the largest component
is pinned to a fixed product-1 root pair, which reaches every orbit
because the automorphism group acts transitively on such pairs; types
made of A1 components alone are enumerated in full.  Sets are grouped
into orbit classes by the Weyl-invariant fingerprint.
"""

from __future__ import annotations

import numpy as np

from .lattice import SurfaceLattice
from .enumeration import ClassCatalog, catalog
from .configuration import Configuration, SingularityType


class _Enumerator:
    def __init__(self, cat: ClassCatalog):
        self.cat = cat
        self.nroots = len(cat.roots)
        self.gram = cat.gram_roots
        self.neg = {i: cat.root_index[-r] for i, r in enumerate(cat.roots)}
        ecoef = np.array([c.coeffs for c in cat.exceptional], dtype=np.int64)
        rcoef = np.array([r.coeffs for r in cat.roots], dtype=np.int64)
        sign = np.diag([1] + [-1] * cat.lattice.rank)
        self.mix = (ecoef @ sign) @ rcoef.T
        a = cat.root_index[cat.named("A'12")]
        b = cat.root_index[cat.named("A'23")]
        self.edge = (a, b)

    def fingerprint_key(self, idxs) -> bytes:
        m = np.sort(self.mix[:, list(idxs)], axis=1)
        return m[np.lexsort(m.T[::-1])].tobytes()

    def _grow(self, seed, n, blocked):
        """Connected product-1 trees of n roots containing the seed,
        orthogonal to `blocked`; memoized on the partial set."""
        gram, neg = self.gram, self.neg
        results, seen = set(), set()

        def rec(chosen):
            if chosen in seen:
                return
            seen.add(chosen)
            if len(chosen) == n:
                results.add(tuple(sorted(chosen)))
                return
            for j in range(self.nroots):
                if j in blocked or neg[j] in blocked:
                    continue
                if j in chosen or neg[j] in chosen:
                    continue
                if any(gram[j][c] not in (0, 1) for c in chosen):
                    continue
                if any(gram[j][b] != 0 for b in blocked):
                    continue
                if sum(1 for c in chosen if gram[j][c] == 1) == 1:
                    rec(chosen | {j})

        rec(frozenset(seed))
        return results

    def _component_shape(self, comp):
        try:
            c = Configuration(self.cat.lattice, [self.cat.roots[i] for i in comp])
        except Exception:
            return None
        return c.type_label.labels

    def type_sets(self, T: SingularityType):
        """All root-index sets whose configuration has type T.

        Components of equal shape are produced in ascending order of
        their smallest index; the anchored first component is exempt.
        """
        gram, neg = self.gram, self.neg
        comps = sorted(T.labels, key=lambda ln: (-ln[1], ln[0]))
        results = set()

        def build(k, chosen, min_start):
            if k == len(comps):
                results.add(tuple(sorted(chosen)))
                return
            letter, n = comps[k]
            blocked = set(chosen)
            if n == 1:
                lo = min_start.get(("A", 1), 0)
                for j in range(lo, self.nroots):
                    if j in blocked or neg[j] in blocked:
                        continue
                    if all(gram[j][c] == 0 for c in blocked):
                        ms = dict(min_start)
                        ms[("A", 1)] = j + 1
                        build(k + 1, chosen + [j], ms)
                return
            if k == 0:
                for comp in self._grow(self.edge, n, blocked):
                    if self._component_shape(comp) == ((letter, n),):
                        build(k + 1, chosen + list(comp), dict(min_start))
                return
            lo = min_start.get((letter, n), 0)
            seeds = []
            for a in range(self.nroots):
                if a in blocked or neg[a] in blocked:
                    continue
                if any(gram[a][c] != 0 for c in blocked):
                    continue
                for b in range(self.nroots):
                    if b == a or b in blocked or neg[b] in blocked or neg[b] == a:
                        continue
                    if gram[a][b] != 1:
                        continue
                    if any(gram[b][c] != 0 for c in blocked):
                        continue
                    seeds.append((a, b))
            done = set()
            for seed in seeds:
                for comp in self._grow(seed, n, blocked):
                    if comp in done:
                        continue
                    done.add(comp)
                    if min(comp) < lo:
                        continue
                    if self._component_shape(comp) != ((letter, n),):
                        continue
                    ms = dict(min_start)
                    ms[(letter, n)] = min(comp) + 1
                    build(k + 1, chosen + list(comp), ms)

        build(0, [], {})
        return results


def enumerate_type(type_label, rank: int = 7):
    """(set count, orbit classes) for one singularity type.

    Classes are returned as a dict keyed by fingerprint bytes, each value
    the list of member index-sets found.
    """
    if isinstance(type_label, str):
        type_label = SingularityType.parse(type_label)
    enum = _Enumerator(catalog(rank))
    sets = enum.type_sets(type_label)
    classes: dict[bytes, list] = {}
    for s in sorted(sets):
        classes.setdefault(enum.fingerprint_key(s), []).append(s)
    return len(sets), classes
