import random

import pytest

from conftest import SMALL_SPHERICAL
from engine.errors import DescriptorError, GradingError, InputError, PreconditionError
from engine.lie.roots import build_root_datum
from engine.math.mat import ExactMatrix
from engine.orbits.checks import (
    commutativity_check,
    gy_condition_check,
    resolution_dimension_check,
    small_exact_sequence_check,
)
from engine.orbits.descriptor import (
    OrbitDescriptor,
    representative,
    split_representative,
    unique_signed_rows,
    unitary_representative,
)
from engine.orbits.grading import bracket_compatible, grade, height, is_small
from engine.orbits.sphericity import CERTIFIED, is_spherical, orbit_dimension
from engine.orbits.triple import NormalTriple, complete_to_normal_triple


# descriptors
def test_descriptor_needs_exactly_one_kind():
    with pytest.raises(DescriptorError):
        OrbitDescriptor()
    with pytest.raises(DescriptorError):
        OrbitDescriptor(partition=(2, 2), signed=("+-", "+-"))


def test_descriptor_json():
    d = OrbitDescriptor.from_json({"signed": "+−+"})
    assert d.signed == ("+-+",)
    assert d.to_json() == {"signed": "+-+"}
    assert OrbitDescriptor.from_json({"partition": [2, 2], "label": "I"}).parts == (2, 2)
    with pytest.raises(DescriptorError):
        OrbitDescriptor.from_json({"signed": "++"})
    with pytest.raises(DescriptorError):
        OrbitDescriptor.from_json({"partition": [2, 2], "label": "III"})


def test_split_representative_is_symmetric_nilpotent():
    e = split_representative(4, (2, 2), "I")
    assert e == e.transpose()
    assert e.is_nilpotent()
    assert not e.is_zero()
    assert e.mul_mat(e).is_zero()


def test_labels_give_different_representatives():
    assert split_representative(6, (2, 2, 2), "I") != split_representative(6, (2, 2, 2), "II")


def test_partition_must_sum_to_n(sl4):
    with pytest.raises(DescriptorError):
        representative(sl4, OrbitDescriptor(partition=(3, 2)))


def test_label_only_for_very_even():
    with pytest.raises(DescriptorError):
        split_representative(4, (2, 1, 1), "I")


def test_unitary_representative_chain():
    e = unitary_representative(2, 1, ("+-+",))
    assert e == ExactMatrix(3, {(2, 1): 1, (0, 2): 1})


def test_signed_rows_from_partition():
    assert unique_signed_rows((3,), 2, 1) == ("+-+",)
    assert unique_signed_rows((3, 3, 3), 6, 3) == ("+-+", "+-+", "+-+")
    with pytest.raises(DescriptorError):
        unique_signed_rows((2, 1), 2, 1)


def test_zero_partition_gives_zero(sl4):
    e = representative(sl4, OrbitDescriptor(partition=(1, 1, 1, 1)))
    assert all(c.is_zero() for c in e)


# normal triples
def test_normal_triple_speh(sl4):
    e = representative(sl4, OrbitDescriptor(partition=(2, 2), label="I"))
    triple = complete_to_normal_triple(sl4, e)
    assert triple.check(sl4)
    assert sl4.in_k(triple.x)


def test_normal_triple_su21(su21):
    e = representative(su21, OrbitDescriptor(signed=("+-+",)))
    triple = complete_to_normal_triple(su21, e)
    assert triple.check(su21)
    assert su21.to_matrix(triple.x) == ExactMatrix.diagonal([2, -2, 0])


def test_zero_triple(sl4):
    triple = complete_to_normal_triple(sl4, sl4.zero())
    assert triple.is_zero()
    assert triple == NormalTriple(sl4.zero(), sl4.zero(), sl4.zero())


def test_triple_rejects_element_of_k(sl4):
    with pytest.raises(InputError):
        complete_to_normal_triple(sl4, sl4.basis_element(sl4.k_indices[0]))


# grading
def test_grading_needs_x_in_k(sl4):
    with pytest.raises(GradingError):
        grade(sl4, sl4.basis_element(sl4.p_indices[0]))


def test_speh_grading(speh):
    g = speh.pipeline.grading
    assert height(g) == 2
    assert is_small(g)
    assert len(g.V_tilde) == 3
    dims = g.dimensions()
    assert sum(d["g"] for d in dims.values()) == 15
    assert dims["2"]["p"] == 3


def test_su21_principal_has_height_four(analysed):
    g = analysed("su21_principal").pipeline.grading
    assert height(g) == 4
    assert g.k(4)
    assert is_small(g)


# sphericity
def test_speh_is_spherical(speh):
    flags = speh.pipeline.flags
    assert flags.spherical
    assert flags.dim_orbit == 4
    assert flags.dim_borel_k == 4
    assert flags.rank_r == 2


def test_zero_orbit_is_certified_spherical(sl4):
    rd = build_root_datum(sl4, sl4.zero())
    result = is_spherical(sl4, rd, sl4.zero(), random.Random(0))
    assert result.spherical
    assert result.certainty == CERTIFIED
    assert (result.dim_orbit, result.dim_borel) == (0, 4)


@pytest.mark.slow
def test_su63_small_not_spherical(analysed):
    a = analysed("su63_333")
    flags = a.pipeline.flags
    assert flags.small
    assert not flags.spherical
    assert flags.certainty == CERTIFIED
    assert (flags.dim_borel_k, flags.dim_orbit) == (26, 27)
    assert resolution_dimension_check(a.pipeline.grading, flags.dim_orbit)


def test_orbit_dimension_matches_flags(speh, sl4):
    assert orbit_dimension(sl4, speh.pipeline.triple.e) == speh.pipeline.flags.dim_orbit


# structural properties on every small spherical fixture
@pytest.mark.parametrize("name", SMALL_SPHERICAL)
def test_triple_axioms(analysed, name):
    p = analysed(name).pipeline
    assert p.triple.check(p.realization)


@pytest.mark.parametrize("name", SMALL_SPHERICAL)
def test_bracket_grading_compatibility(analysed, name):
    assert bracket_compatible(analysed(name).pipeline.grading)


@pytest.mark.parametrize("name", SMALL_SPHERICAL)
def test_graded_pieces_are_orthogonal(analysed, name):
    g = analysed(name).pipeline.grading
    r = g.realization
    for j in g.degrees:
        for n in g.degrees:
            for a in g.k(j):
                for b in g.p(n):
                    assert r.hermitian_form(a, b).is_zero()
            if j == n:
                continue
            for a in g.p(j):
                for b in g.p(n):
                    assert r.hermitian_form(a, b).is_zero()


@pytest.mark.parametrize("name", SMALL_SPHERICAL)
def test_exact_sequence(analysed, name):
    p = analysed(name).pipeline
    assert small_exact_sequence_check(p.grading, p.triple)


@pytest.mark.parametrize("name", SMALL_SPHERICAL)
def test_commutative_iff_height_two(analysed, name):
    g = analysed(name).pipeline.grading
    if height(g) == 0:
        return
    assert commutativity_check(g) == (height(g) == 2)


@pytest.mark.parametrize("name", SMALL_SPHERICAL)
def test_gy_condition(analysed, name):
    p = analysed(name).pipeline
    assert gy_condition_check(p.grading, p.triple.e)


@pytest.mark.parametrize("name", SMALL_SPHERICAL)
def test_resolution_dimension(analysed, name):
    p = analysed(name).pipeline
    assert resolution_dimension_check(p.grading, p.flags.dim_orbit)


def test_exact_sequence_needs_small_orbit(sl4):
    r = sl4
    e = representative(r, OrbitDescriptor(partition=(4,)))
    triple = complete_to_normal_triple(r, e)
    g = grade(r, triple.x)
    assert not is_small(g)
    with pytest.raises(PreconditionError):
        small_exact_sequence_check(g, triple)
