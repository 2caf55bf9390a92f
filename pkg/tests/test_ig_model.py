from fractions import Fraction

import pytest

from qcohom.errors import IndexOutOfRange, UnsupportedN
from qcohom.fields import QGeneric, QSpecialized
from qcohom.groebner import Ideal
from qcohom.ig_model import (
    PresentationSpec,
    Variant,
    build_relations,
    expected_counts,
    giambelli_det,
    grading_for,
    model_ideal,
    presentation_compat,
    sigma_in_ab,
    specialize_t,
    z_count,
    z_polynomial,
)
from qcohom.poly import Homogeneous, PolyRing, weighted_degree


def rel_set(n, variant, coeff=None):
    _, rels = build_relations(PresentationSpec(n, variant, coeff or QGeneric()))
    return rels


def test_expected_counts():
    assert [expected_counts(n).as_tuple() for n in (2, 3, 4)] == [
        (4, 3, 1, 2, 0),
        (12, 10, 2, 4, 1),
        (24, 21, 3, 6, 2),
    ]
    with pytest.raises(UnsupportedN):
        expected_counts(1)


def test_spec_validation():
    with pytest.raises(UnsupportedN):
        PresentationSpec(1, Variant.SigmaQuantum)
    assert PresentationSpec(2, "ABQuantum").variant is Variant.ABQuantum


def test_giambelli_det_matches_oracle():
    ring = PolyRing(("s1", "s2", "s3", "s4"))
    s1, s2, s3, s4 = ring.gens()
    assert giambelli_det(ring, 3, 3) == s1**3 - 2 * s1 * s2 + s3


def test_n2_relations():
    Rs = PolyRing(("s1", "s2"), QGeneric())
    s1, s2 = Rs.gens()
    q = Rs.q()
    assert rel_set(2, Variant.SigmaClassical) == [s1**2 - 2 * s2, s2**2]
    assert rel_set(2, Variant.SigmaQuantum) == [s1**2 - 2 * s2, s2**2 - q * s1]
    Rt = PolyRing(("s1", "s2", "t"), QGeneric())
    s1, s2, t = Rt.gens()
    q = Rt.q()
    assert rel_set(2, Variant.SigmaBigTauFirstOrder) == [s1**2 - 2 * s2 - q * t, s2**2 - q * s1]


def test_ab_relations_are_coefficients_of_ppq():
    # Coefficients of P(x)P(-x): [1, 0, 2a2 - a1^2, 0, a2^2] (sympy expansion).
    Ra = PolyRing(("a1", "a2"), QGeneric())
    a1, a2 = Ra.gens()
    q = Ra.q()
    assert rel_set(2, Variant.ABClassical) == [2 * a2 - a1**2, a2**2]
    assert rel_set(2, Variant.ABQuantum) == [2 * a2 - a1**2, a2**2 - q * a1]


def test_n3_quantum_relation():
    Rs = PolyRing(("s1", "s2", "s3", "s4"), QGeneric())
    s1, s2, s3, s4 = Rs.gens()
    rels = rel_set(3, Variant.SigmaQuantum)
    assert rels[-1] == s3**2 - 2 * s2 * s4 + Rs.q() * s1
    assert rels[0] == s1**3 - 2 * s1 * s2 + s3


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_relation_is_homogeneous(n):
    for v in Variant:
        mr, rels = build_relations(PresentationSpec(n, v, QGeneric()))
        for r in rels:
            assert isinstance(weighted_degree(r, mr.grading), Homogeneous), (v, str(r))


def test_grading_weights():
    g = grading_for(3, ("s1", "s4", "a2", "b1", "t"))
    assert [g.weight(v) for v in ("s1", "s4", "a2", "b1", "t")] == [1, 4, 2, 2, -1]
    assert g.q_weight == 5
    with pytest.raises(ValueError):
        grading_for(3, ("u",))


def test_sigma_in_ab():
    ring = PolyRing(("a1", "a2", "b1"))
    a1, a2, b1 = ring.gens()
    assert [sigma_in_ab(3, k, ring) for k in range(5)] == [
        ring.one(),
        -a1,
        a2 + b1,
        -a1 * b1,
        a2 * b1,
    ]
    with pytest.raises(IndexOutOfRange):
        sigma_in_ab(3, 5)


@pytest.mark.parametrize("n", [2, 3])
def test_presentation_compat(n):
    for coeff in (QSpecialized(), QSpecialized(Fraction(2)), QGeneric()):
        res = presentation_compat(n, coeff)
        assert res.well_defined
        assert res.q_twist == -1
        assert res.nonzero_residues[-1] == 0 and res.nonzero_residues[1] > 0
    assert presentation_compat(n, quantum=False).well_defined


def test_specialize_t():
    rels = rel_set(2, Variant.SigmaBigTauFirstOrder, QSpecialized())
    spec = specialize_t(rels, Fraction(3))
    ring = spec[0].ring
    assert ring.variables == ("s1", "s2")
    s1, s2 = ring.gens()
    assert spec[0] == s1**2 - 2 * s2 + 3  # q = -1
    assert Ideal(spec).dim() == 4


def test_model_ideal_is_shared():
    spec = PresentationSpec(2, Variant.ABQuantum)
    assert model_ideal(spec) is model_ideal(PresentationSpec(2, Variant.ABQuantum))


# -- z-count ---------------------------------------------------------------


def test_z_polynomial_degree():
    assert [z_polynomial(n).degree for n in (2, 3, 4)] == [16, 36, 64]


@pytest.mark.parametrize("n,ordered", [(2, 6), (3, 20), (4, 42)])
def test_z_count(n, ordered):
    zc = z_count(n)
    assert zc.ordered_pair_count == ordered == 2 * (n - 1) * (2 * n - 1)
    assert zc.point_count == ordered // 2


def test_z_count_rejects_small_n():
    with pytest.raises(UnsupportedN):
        z_count(1)
