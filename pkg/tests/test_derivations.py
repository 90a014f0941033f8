import itertools
import random

import pytest

from dplattice import registry
from dplattice.configuration import Configuration, InvalidConfigurationError
from dplattice.contraction import QuadricLattice
from dplattice.contraction_catalog import CATALOG, catalog_key, matches_catalog
from dplattice.curves import reduce_to_minus_one, pair_classes
from dplattice.derivations import derive_configuration, terminal_leaf_pair
from dplattice.lattice import SurfaceLattice


def galois_cases(ts, variant):
    if ts == "A2":
        return [dict(), dict(a2_conjugate=(0,))]
    if (ts, variant) == ("4A1", "no-triple-curve"):
        return [dict(), dict(orbits=[(0, 1), (2, 3)]), dict(orbits=[(0, 1, 2, 3)])]
    return [dict()]


def all_cases():
    for ts, variant in registry.all_entries():
        for kw in galois_cases(ts, variant):
            yield ts, variant, kw


@pytest.mark.parametrize(
    "ts,variant,kw",
    list(all_cases()),
    ids=lambda v: str(v).replace(" ", "") if not isinstance(v, str) else v,
)
def test_catalog_totality(ts, variant, kw):
    cfg = registry.representative(ts, variant, **kw)
    derived = derive_configuration(cfg)
    key = catalog_key(cfg, variant)
    assert key in CATALOG, key
    assert matches_catalog(derived, CATALOG[key]), key


def test_every_catalog_entry_reachable():
    reachable = {
        catalog_key(registry.representative(ts, variant, **kw), variant)
        for ts, variant, kw in all_cases()
    }
    assert reachable == set(CATALOG)


class TestMinimalCases:
    def test_lone_a1(self):
        d = derive_configuration(registry.minimal_case_configuration(1))
        assert d.minimal and d.minimal_case == 1 and d.contraction_set == ()

    def test_conjugate_a2(self):
        d = derive_configuration(registry.minimal_case_configuration(2))
        assert d.minimal and d.minimal_case == 2

    def test_split_a2_not_minimal(self):
        d = derive_configuration(registry.representative("A2"))
        assert not d.minimal and len(d.curves) == 6

    def test_conjugate_4a1(self):
        d = derive_configuration(registry.minimal_case_configuration(3))
        assert d.minimal and d.minimal_case == 3

    def test_4a1_with_curve_contracts_despite_conjugation(self):
        cfg = registry.representative(
            "4A1", "triple-curve", orbits=[(0, 1, 2, 3)]
        )
        d = derive_configuration(cfg)
        assert not d.minimal and len(d.curves) == 1


class TestTargets:
    @pytest.mark.parametrize(
        "ts,expect",
        [
            ("2A3", (4, "2A1")),
            ("A1+D6", (3, "D5")),
            ("E7", (3, "E6")),
            ("A6", (4, "2A1+A2")),
            ("3A1+D4", (3, "D4")),
        ],
    )
    def test_specific_targets(self, ts, expect):
        d = derive_configuration(registry.representative(ts))
        assert (d.target_degree, str(d.target_type)) == expect

    def test_blowdown_consistency(self):
        for ts, variant, kw in all_cases():
            d = derive_configuration(registry.representative(ts, variant, **kw))
            if d.minimal:
                assert d.blowdown is None
                continue
            assert d.blowdown.degree == d.target_degree
            assert d.target_degree == 2 + len(d.curves)

    def test_degree8_targets_are_quadric_like(self):
        for ts in ("3A2", "2A1+A2", "A1+2A2"):
            d = derive_configuration(registry.representative(ts))
            assert isinstance(d.blowdown.lattice, QuadricLattice)


class TestTerminalPair:
    def test_chain_ends(self, cat7):
        cfg = registry.representative("A4")
        f, g = terminal_leaf_pair(cfg, 0)
        lat = cfg.lattice
        for t in (f, g):
            assert sum(1 for r in cfg.simple_roots
                       if r != t and lat.intersect(t, r) == 1) == 1

    def test_fork_leaves_for_d5(self, cat7):
        cfg = registry.representative("D5")
        f, g = terminal_leaf_pair(cfg, 0)
        lat = cfg.lattice
        # both marked roots hang off the same branch vertex
        (common_f,) = [r for r in cfg.simple_roots if lat.intersect(f, r) == 1]
        (common_g,) = [r for r in cfg.simple_roots if lat.intersect(g, r) == 1]
        assert common_f == common_g

    def test_rejected_for_small_types(self):
        for ts in ("A1", "A2", "D4"):
            cfg = registry.representative(ts)
            with pytest.raises(Exception):
                terminal_leaf_pair(cfg, 0)

    def test_e7_derivation_choice_independent(self, cat7):
        # any two of the three leaves give the same single curve
        cfg = registry.representative("E7")
        lat = cfg.lattice
        leaves = [
            r
            for r in cfg.simple_roots
            if sum(1 for s in cfg.simple_roots if s != r and lat.intersect(r, s) == 1) == 1
        ]
        assert len(leaves) == 3
        results = set()
        for f, g in itertools.combinations(leaves, 2):
            d1, d2 = pair_classes(f, g, cat7)
            e1, _ = reduce_to_minus_one(d1, cfg)
            e2, _ = reduce_to_minus_one(d2, cfg)
            results.add(frozenset((e1, e2)))
        assert len(results) == 1
        (curves,) = results
        assert len(curves) == 1


class TestInvalidInput:
    def test_invalid_configuration_rejected(self, cat7):
        lat = SurfaceLattice(7)
        cfg = Configuration(
            lat,
            [cat7.named("A'12"), cat7.named("A'34")],
            orbits=[(0,)],
        )
        with pytest.raises(InvalidConfigurationError):
            derive_configuration(cfg)


class TestChainIdentities:
    def test_terminal_pair_classes_contain_interior(self, cat7):
        # for a single component, the two classes attached to the marked
        # leaves contain every other root of the component: subtracting
        # the full root sum except the leaves still leaves a valid class
        lat = SurfaceLattice(7)
        for ts in ("A3", "A4", "A5", "A6", "A7", "D5", "D6", "E6", "E7"):
            for variant in registry.variants_of(ts):
                cfg = registry.representative(ts, variant)
                f, g = terminal_leaf_pair(cfg, 0)
                d1, d2 = pair_classes(f, g, cat7)
                interior = [r for r in cfg.simple_roots if r not in (f, g)]
                for d in (d1, d2):
                    assert any(lat.intersect(d, r) == -1 for r in cfg.simple_roots)
                    rest = d
                    for r in interior:
                        rest = rest - r
                    assert lat.self_intersection(rest) == -1
                    assert lat.k_degree(rest) == -1
                    assert rest.coeffs[0] >= 0

    def test_reduction_removes_only_component_roots(self, cat7):
        rng = random.Random(3)
        for ts in ("A5", "D6", "E7"):
            cfg = registry.representative(ts)
            for _ in range(50):
                d = rng.choice(cat7.exceptional)
                _, removed = reduce_to_minus_one(d, cfg)
                assert set(removed) <= set(cfg.simple_roots)
