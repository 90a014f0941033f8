import pytest

from dplattice import arithmetic as ar


class TestPrimePowers:
    def test_small_list(self):
        assert [q for q, _ in ar.prime_powers_up_to(10)] == [2, 3, 4, 5, 7, 8, 9]

    def test_characteristics(self):
        table = dict(ar.prime_powers_up_to(30))
        assert table[4] == 2 and table[9] == 3 and table[27] == 3 and table[25] == 5

    def test_six_excluded(self):
        assert 6 not in dict(ar.prime_powers_up_to(10))

    def test_non_prime_power_rejected(self):
        for bad in (1, 6, 12, 100):
            assert not ar.is_prime_power(bad)
            with pytest.raises(ar.ArithmeticInputError):
                ar.min_surface_points(bad, 1)

    def test_characteristic_of(self):
        assert ar.characteristic_of(128) == 2
        assert ar.characteristic_of(343) == 7
        assert ar.characteristic_of(10007) == 10007


class TestBounds:
    def test_min_surface_points(self):
        assert ar.min_surface_points(9, 1) == 37
        assert ar.min_surface_points(9, 2) == 46
        assert ar.min_surface_points(4, 3) == 17

    def test_ramification_exact_values(self):
        assert ar.ramification_point_bound(9, 1, False).ceil() == 23
        assert ar.ramification_point_bound(8, 2, True).ceil() == 17
        assert ar.ramification_point_bound(4, 3, True).ceil() == 9

    def test_ramification_sqrt_ceiling(self):
        # 4*sqrt(7) = sqrt(112) is irrational: ceiling is 11
        b = ar.ramification_point_bound(7, 1, False)
        assert (b.a, b.b) == (9, 4)
        assert b.ceil() == 9 + 11

    def test_char_flag_consistency(self):
        with pytest.raises(ar.ArithmeticInputError):
            ar.ramification_point_bound(9, 1, True)
        with pytest.raises(ar.ArithmeticInputError):
            ar.ramification_point_bound(8, 1, False)

    def test_waypoints(self):
        expected = {
            (9, 1, False): 14,
            (16, 1, True): 144,
            (9, 2, False): 24,
            (8, 2, True): 16,
            (5, 3, False): 14,
            (4, 3, True): 8,
        }
        for (q, case, char2), value in expected.items():
            assert ar.off_ramification_lower_bound(q, case, char2) == value

    def test_required_points(self):
        assert [ar.required_point_count(c) for c in (1, 2, 3)] == [9, 6, 3]

    def test_required_matches_free_curves(self):
        for case in (1, 2, 3):
            c = ar.CASES[case]
            assert c.required_points == c.free_curves // 4 + 1


class TestThresholds:
    def test_values(self):
        assert ar.unirationality_threshold(1) == 9
        assert ar.unirationality_threshold(2) == 8
        assert ar.unirationality_threshold(3) == 4

    def test_boundary_failures(self):
        assert ar.off_ramification_lower_bound(8, 1, True) < 9
        assert ar.off_ramification_lower_bound(7, 2, False) < 6
        assert ar.off_ramification_lower_bound(3, 3, False) < 3

    def test_all_pass_above_threshold(self):
        thresholds = {1: 9, 2: 8, 3: 4}
        for case, q0 in thresholds.items():
            need = ar.required_point_count(case)
            for q, p in ar.prime_powers_up_to(1000):
                if q >= q0:
                    assert ar.off_ramification_lower_bound(q, case, p == 2) >= need

    def test_monotone_within_characteristic(self):
        for case in (1, 2, 3):
            for char2 in (False, True):
                values = [
                    ar.off_ramification_lower_bound(q, case, p == 2)
                    for q, p in ar.prime_powers_up_to(5000)
                    if (p == 2) == char2 and q >= 5
                ]
                assert values == sorted(values)

    def test_exceptional_case_constants(self):
        assert {c: ar.CASES[c].min_trace for c in (1, 2, 3)} == {1: -4, 2: -4, 3: 0}
        assert ar.CASES[1].count_drops_by_q
        assert not ar.CASES[2].count_drops_by_q


class TestCrossModule:
    def test_min_trace_matches_group(self, group, deltas):
        from dplattice import weyl

        _, _, d3 = deltas
        assert ar.CASES[1].min_trace == min(weyl.trace_set(group, "fix-root"))
        assert ar.CASES[2].min_trace == min(weyl.trace_set(group, "swap-pair"))
        assert ar.CASES[3].min_trace == min(
            weyl.trace_set(group, "cycle-quad", witness=d3[0])
        )

    def test_free_curve_link(self):
        from dplattice import registry
        from dplattice.curves import free_minus_one_curves

        for case in (1, 2, 3):
            cfg = registry.minimal_case_configuration(case)
            assert ar.CASES[case].free_curves == len(free_minus_one_curves(cfg))
