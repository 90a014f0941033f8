import random

import pytest

from dplattice.contraction import QuadricLattice, blow_down
from dplattice.enumeration import catalog
from dplattice.lattice import ContractionError, DivisorClass, SurfaceLattice


@pytest.fixture
def lat():
    return SurfaceLattice(7)


def test_two_curve_contraction(lat, cat7):
    res = blow_down(lat, [cat7.named("B13"), cat7.named("C24")])
    assert res.lattice == SurfaceLattice(5)
    assert res.degree == 4
    assert res.push(lat.canonical_class()) == res.lattice.canonical_class()


def test_empty_contraction_is_identity(lat):
    res = blow_down(lat, [])
    assert res.lattice == lat
    identity = tuple(
        tuple(1 if i == j else 0 for j in range(8)) for i in range(8)
    )
    assert res.matrix == identity


def test_orthogonal_root_projects_to_root(lat, cat7):
    curves = [cat7.named("B13"), cat7.named("C24")]
    res = blow_down(lat, curves)
    for r in cat7.roots:
        if all(lat.intersect(r, c) == 0 for c in curves):
            assert res.lattice.self_intersection(res.push(r)) == -2


def test_product_preserved_on_orthogonal_complement(lat, cat7):
    curves = [cat7.named("B13"), cat7.named("C24")]
    res = blow_down(lat, curves)
    rng = random.Random(11)
    ortho_roots = [
        r for r in cat7.roots if all(lat.intersect(r, c) == 0 for c in curves)
    ]
    zero = DivisorClass([0] * 8)
    checked = 0
    for _ in range(1000):
        a, b = zero, zero
        for _ in range(4):
            a = a + rng.randint(-2, 2) * rng.choice(ortho_roots)
            b = b + rng.randint(-2, 2) * rng.choice(ortho_roots)
        assert all(lat.intersect(a, c) == 0 for c in curves)
        assert lat.intersect(a, b) == res.lattice.intersect(res.push(a), res.push(b))
        checked += 1
    assert checked == 1000


def test_rejects_non_disjoint(lat, cat7):
    with pytest.raises(ContractionError):
        blow_down(lat, [cat7.named("A1"), cat7.named("B12")])


def test_rejects_non_exceptional(lat, cat7):
    with pytest.raises(ContractionError):
        blow_down(lat, [cat7.named("A'12")])


def test_full_contraction_to_plane(lat):
    curves = [lat.basis_vector(i) for i in range(1, 8)]
    res = blow_down(lat, curves)
    assert res.lattice == SurfaceLattice(0)
    assert res.degree == 9


def test_even_rank_one_target(lat, cat7):
    curves = [lat.basis_vector(i) for i in range(3, 8)] + [cat7.named("B12")]
    res = blow_down(lat, curves)
    assert isinstance(res.lattice, QuadricLattice)
    assert res.degree == 8
    k_img = res.push(lat.canonical_class())
    assert k_img == DivisorClass((-2, -2))
    assert res.lattice.self_intersection(k_img) == 8


def test_odd_rank_one_target(lat):
    # dropping six basis curves leaves the blow-up of the plane at a point
    curves = [lat.basis_vector(i) for i in range(2, 8)]
    res = blow_down(lat, curves)
    assert res.lattice == SurfaceLattice(1)
    assert res.degree == 8


def test_matrix_is_reproducible(lat, cat7):
    curves = [cat7.named("B13"), cat7.named("C24")]
    assert blow_down(lat, curves).matrix == blow_down(lat, curves).matrix
