import pytest

from engine.errors import CartanError, InputError
from engine.lie.roots import (
    all_ktypes_self_dual,
    build_root_datum,
    dual_ktype,
    is_dominant,
    longest_weyl_element,
    weyl_involution,
)
from engine.math.mat import ExactMatrix


@pytest.fixture(scope="module")
def so4(sl4):
    return build_root_datum(sl4, sl4.zero())


@pytest.fixture(scope="module")
def so6(sl6):
    return build_root_datum(sl6, sl6.zero())


def test_so4_roots(so4):
    assert so4.rank == 2
    assert sorted(so4.roots) == sorted([(1, 1), (1, -1), (-1, -1), (-1, 1)])
    assert sorted(so4.positive_roots) == [(1, -1), (1, 1)]
    assert len(so4.cartan) == 2
    assert so4.dim_borel == 4


def test_so4_longest_element_is_minus_identity(so4):
    assert longest_weyl_element(so4) == [[-1, 0], [0, -1]]
    assert all_ktypes_self_dual(so4)
    assert dual_ktype(so4, (2, 2)) == (2, 2)


def test_so6_duality_flips_last_coordinate(so6):
    assert sorted(so6.simple_roots) == sorted([(1, -1, 0), (0, 1, -1), (0, 1, 1)])
    assert dual_ktype(so6, (3, 2, 1)) == (3, 2, -1)
    assert dual_ktype(so6, (2, 2, -2)) == (2, 2, 2)
    assert not all_ktypes_self_dual(so6)


def test_dominance(so4):
    assert is_dominant(so4, (3, 1))
    assert is_dominant(so4, (3, -1))
    assert not is_dominant(so4, (1, 3))
    with pytest.raises(InputError):
        is_dominant(so4, (1, 2, 3))


def test_dual_of_non_dominant_raises(so4):
    with pytest.raises(InputError):
        dual_ktype(so4, (1, 3))


def test_grading_element_outside_cartan(sl4):
    x = sl4.coordinates(ExactMatrix(4, {(0, 2): 1, (2, 0): -1}))
    with pytest.raises(CartanError):
        build_root_datum(sl4, x)


def test_chevalley_pairs_bracket_to_their_coroot(sl4, so4):
    r = sl4
    for element in so4.chevalley:
        x = r.to_matrix(element.x_positive)
        y = r.to_matrix(element.x_negative)
        assert x.bracket(y) == r.to_matrix(element.h)


def test_weyl_involution_negates_cartan(sl4, so4):
    nu = weyl_involution(so4)
    for h in so4.cartan:
        assert nu(h) == tuple(-c for c in h)


def test_positive_system_makes_x_dominant(speh):
    rd = speh.pipeline.rd
    assert all(rd.x_value(root) >= 0 for root in rd.positive_roots)
    assert rd.levi_positive_roots() == [r for r in rd.positive_roots if rd.x_value(r) == 0]
