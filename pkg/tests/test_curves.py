import itertools
import random

import pytest

from dplattice import registry
from dplattice.configuration import Configuration
from dplattice.curves import (
    classes_meeting,
    derive_pair_curves,
    eckardt_quadruples,
    free_minus_one_curves,
    is_minus_one_curve,
    pair_classes,
    reduce_to_minus_one,
    triple_a1_curves,
)
from dplattice.lattice import LatticeError, SurfaceLattice


@pytest.fixture
def lat():
    return SurfaceLattice(7)


def cfg_of(cat, *names, **kw):
    return Configuration(SurfaceLattice(7), [cat.named(n) for n in names], **kw)


class TestHonesty:
    def test_blocked_class(self, cat7):
        cfg = cfg_of(cat7, "A'12", "A'23")
        assert not is_minus_one_curve(cat7.named("A2"), cfg)

    def test_empty_configuration(self, lat, cat7):
        cfg = Configuration(lat, [cat7.named("A'12")])
        smooth_like = Configuration(lat, [])
        for d in cat7.exceptional:
            assert is_minus_one_curve(d, smooth_like)

    def test_survivor(self, cat7):
        cfg = cfg_of(cat7, "A'12", "A'34")
        assert is_minus_one_curve(cat7.named("B13"), cfg)

    def test_requires_exceptional_class(self, cat7):
        cfg = cfg_of(cat7, "A'12")
        with pytest.raises(LatticeError):
            is_minus_one_curve(cat7.named("A'34"), cfg)


class TestReduce:
    def test_single_step(self, cat7):
        cfg = cfg_of(cat7, "A'12", "A'23")
        e, removed = reduce_to_minus_one(cat7.named("A2"), cfg)
        assert e == cat7.named("A3")
        assert removed == (cat7.named("A'23"),)

    def test_idempotent_on_honest(self, cat7):
        cfg = cfg_of(cat7, "A'12", "A'34")
        e, removed = reduce_to_minus_one(cat7.named("B13"), cfg)
        assert e == cat7.named("B13") and removed == ()

    def test_decomposition_identity_randomized(self, cat7):
        lat = cat7.lattice
        rng = random.Random(5)
        entries = registry.all_entries()
        for _ in range(1000):
            ts, variant = rng.choice(entries)
            cfg = registry.representative(ts, variant)
            d = rng.choice(cat7.exceptional)
            e, removed = reduce_to_minus_one(d, cfg)
            total = e
            for f in removed:
                total = total + f
            assert total == d
            assert is_minus_one_curve(e, cfg)
            assert lat.self_intersection(e) == -1 and lat.k_degree(e) == -1

    def test_order_independence_randomized(self, cat7):
        # subtract in random order instead of first-found; terminal class agrees
        rng = random.Random(17)
        entries = registry.all_entries()
        lat = cat7.lattice
        for _ in range(1000):
            ts, variant = rng.choice(entries)
            cfg = registry.representative(ts, variant)
            d = rng.choice(cat7.exceptional)
            e, _ = reduce_to_minus_one(d, cfg)
            cur = d
            for _ in range(64):
                negs = [f for f in cfg.simple_roots if lat.intersect(cur, f) == -1]
                if not negs:
                    break
                cur = cur - rng.choice(negs)
            assert cur == e

    def test_component_tracking(self, cat7):
        # the reduced curve still meets the component its source touched
        lat = cat7.lattice
        for ts, variant in registry.all_entries():
            cfg = registry.representative(ts, variant)
            for ci, comp in enumerate(cfg.components):
                comp_roots = [cfg.simple_roots[i] for i in comp]
                for f in comp_roots:
                    for d in classes_meeting(f, 1, cat7):
                        e, _ = reduce_to_minus_one(d, cfg)
                        assert any(lat.intersect(e, g) == 1 for g in comp_roots)
                    break  # one root per component keeps this affordable


class TestMeeting:
    def test_counts(self, cat7):
        for f in cat7.roots:
            assert len(classes_meeting(f, 1, cat7)) == 12
            assert len(classes_meeting(f, -1, cat7)) == 12
            assert len(classes_meeting(f, 0, cat7)) == 32

    def test_explicit_star(self, cat7):
        names = {cat7.name_of(d) for d in classes_meeting(cat7.named("A'12"), 1, cat7)}
        assert names == {
            "A2", "B13", "B14", "B15", "B16", "B17",
            "C23", "C24", "C25", "C26", "C27", "D1",
        }

    def test_star_pairing(self, cat7):
        lat = cat7.lattice
        minus_k = -lat.canonical_class()
        for f in cat7.roots:
            hits = classes_meeting(f, 1, cat7)
            hit_set = set(hits)
            for d in hits:
                partner = minus_k - f - d
                assert partner in hit_set
                assert partner != d
                assert lat.intersect(d, partner) == 1


class TestPairs:
    def test_all_orthogonal_pairs(self, cat7):
        lat = cat7.lattice
        minus_k = -lat.canonical_class()
        n = len(cat7.roots)
        for i in range(n):
            for j in range(i + 1, n):
                f, g = cat7.roots[i], cat7.roots[j]
                if cat7.gram_roots[i][j] != 0 or f == -g:
                    continue
                d1, d2 = pair_classes(f, g, cat7)
                assert lat.intersect(d1, d2) == 0
                assert d1 + d2 == minus_k - f - g

    def test_explicit_pairs(self, cat7):
        expected = {
            ("A'12", "A'34"): {"B13", "C24"},
            ("A'12", "B'123"): {"A2", "C23"},
            ("A'12", "B'345"): {"B16", "B17"},
            ("A'12", "C'3"): {"A2", "B13"},
            ("B'123", "B'145"): {"A1", "B67"},
            ("B'123", "C'1"): {"A2", "A3"},
        }
        for (na, nb), want in expected.items():
            d1, d2 = pair_classes(cat7.named(na), cat7.named(nb), cat7)
            assert {cat7.name_of(d1), cat7.name_of(d2)} == want

    def test_rejects_non_orthogonal(self, cat7):
        with pytest.raises(LatticeError):
            pair_classes(cat7.named("A'12"), cat7.named("A'23"), cat7)
        with pytest.raises(LatticeError):
            pair_classes(cat7.named("A'12"), cat7.named("-A'12")
                         if "-A'12" in cat7.name_index else -cat7.named("A'12"),
                         cat7)


class TestDerivePairs:
    def test_choice_independence_everywhere(self, cat7):
        lat = cat7.lattice
        for ts, variant in registry.all_entries():
            cfg = registry.representative(ts, variant)
            for ci, cj in itertools.combinations(range(cfg.delta), 2):
                results = set()
                for fi in cfg.components[ci]:
                    for fj in cfg.components[cj]:
                        d1, d2 = pair_classes(
                            cfg.simple_roots[fi], cfg.simple_roots[fj], cat7
                        )
                        e1, _ = reduce_to_minus_one(d1, cfg)
                        e2, _ = reduce_to_minus_one(d2, cfg)
                        results.add(frozenset((e1, e2)))
                assert len(results) == 1
                assert next(iter(results)) == derive_pair_curves(cfg, ci, cj)

    def test_two_a1(self, cat7):
        cfg = cfg_of(cat7, "A'12", "A'34")
        assert derive_pair_curves(cfg, 0, 1) == {
            cat7.named("B13"),
            cat7.named("C24"),
        }

    def test_curves_of_component_sharing_pairs_disjoint(self, cat7):
        # curves attached to two pairs of singular points with a common
        # point never meet; pairs with all four points distinct may
        lat = cat7.lattice
        for ts, variant in registry.all_entries():
            cfg = registry.representative(ts, variant)
            derived = {
                (ci, cj): derive_pair_curves(cfg, ci, cj)
                for ci, cj in itertools.combinations(range(cfg.delta), 2)
            }
            for (p1, c1s), (p2, c2s) in itertools.combinations(derived.items(), 2):
                if not set(p1) & set(p2):
                    continue
                for a in c1s:
                    for b in c2s:
                        assert lat.intersect(a, b) == 0 or a == b

    def test_a1_pair_has_honest_member(self, cat7):
        # for two isolated roots, at least one of the two classes is honest
        for ts, variant in registry.all_entries():
            cfg = registry.representative(ts, variant)
            isolated = cfg.isolated_components()
            for ci, cj in itertools.combinations(isolated, 2):
                f = cfg.simple_roots[cfg.components[ci][0]]
                g = cfg.simple_roots[cfg.components[cj][0]]
                d1, d2 = pair_classes(f, g, cat7)
                assert is_minus_one_curve(d1, cfg) or is_minus_one_curve(d2, cfg)


class TestTripleCurves:
    def test_counts_on_high_delta(self):
        assert len(triple_a1_curves(registry.representative("5A1"))) == 2
        assert len(triple_a1_curves(registry.representative("6A1"))) == 4
        assert len(triple_a1_curves(registry.representative("7A1"))) == 7

    def test_4a1_variants(self):
        with_curve = registry.representative("4A1", "triple-curve")
        without = registry.representative("4A1", "no-triple-curve")
        assert len(triple_a1_curves(with_curve)) == 1
        assert triple_a1_curves(without) == []

    def test_only_three_roots_met(self, cat7):
        lat = cat7.lattice
        for ts in ("5A1", "6A1", "7A1"):
            cfg = registry.representative(ts)
            for e in triple_a1_curves(cfg):
                hits = [f for f in cfg.simple_roots if lat.intersect(e, f) != 0]
                assert len(hits) == 3

    def test_two_triple_curves_share_one_root(self, cat7):
        lat = cat7.lattice
        for ts in ("5A1", "6A1", "7A1"):
            cfg = registry.representative(ts)
            curves = triple_a1_curves(cfg)
            for a, b in itertools.combinations(curves, 2):
                assert lat.intersect(a, b) == 0
                sa = {f for f in cfg.simple_roots if lat.intersect(a, f) == 1}
                sb = {f for f in cfg.simple_roots if lat.intersect(b, f) == 1}
                assert len(sa & sb) == 1

    def test_six_a1_root_degrees(self, cat7):
        lat = cat7.lattice
        cfg = registry.representative("6A1")
        curves = triple_a1_curves(cfg)
        for f in cfg.simple_roots:
            assert sum(1 for e in curves if lat.intersect(e, f) == 1) == 2

    def test_seven_a1_root_degrees(self, cat7):
        lat = cat7.lattice
        cfg = registry.representative("7A1")
        curves = triple_a1_curves(cfg)
        for f in cfg.simple_roots:
            assert sum(1 for e in curves if lat.intersect(e, f) == 1) == 3


class TestFreeCurves:
    def test_case_counts(self):
        assert len(free_minus_one_curves(registry.minimal_case_configuration(1))) == 32
        assert len(free_minus_one_curves(registry.minimal_case_configuration(2))) == 20
        assert len(free_minus_one_curves(registry.minimal_case_configuration(3))) == 8


class TestEckardt:
    def test_census(self, cat7):
        quads = eckardt_quadruples(cat7)
        assert len(quads) == 630

    def test_quadruples_sum_to_minus_2k(self, cat7):
        lat = cat7.lattice
        target = -2 * lat.canonical_class()
        for quad in eckardt_quadruples(cat7):
            total = quad[0]
            for c in quad[1:]:
                total = total + c
            assert total == target
