"""Atlas normal forms, edge tables, and permutation fixtures."""

import pytest

from richelot.atlas import (AtlasError, indexed_splittings, normal_form,
                            partition_from_perms,
                            expected_permutation_actions,
                            type_ii_kernels, verify_case,
                            verify_permutation_fixtures)
from richelot.field import make_field
from richelot.genus2 import (Genus2Curve, RAType, clebsch_invariants,
                             splittings)
from richelot.graph import VertexKey
from richelot.poly import Poly


def test_indexed_splittings_bijection(ctx23):
    s, t = ctx23.from_int(3), ctx23.from_int(5)
    indexed = indexed_splittings(ctx23, s, t)
    assert len({sp.key() for sp in indexed}) == 15
    from richelot.atlas import curve_two_param
    C = curve_two_param(ctx23, s, t)
    assert {sp.key() for sp in splittings(C)} \
        == {sp.key() for sp in indexed}


def test_normal_form_cases(ctx23):
    C, _ = normal_form("V", ctx23)
    assert len(splittings(C)) == 15
    # C_V has the same canonical key as y^2 = x^6 + 1
    direct = Genus2Curve(Poly.from_ints(ctx23, [1, 0, 0, 0, 0, 0, 1]))
    assert VertexKey.jacobian(direct) == VertexKey.jacobian(C)
    C6, _ = normal_form("VI", ctx23)
    cp = clebsch_invariants(C6)
    assert cp.B.is_zero() and cp.C.is_zero() and cp.D.is_zero()


def test_normal_form_rejects_degenerate_params(ctx23):
    with pytest.raises(AtlasError):
        normal_form("I", ctx23, params=(ctx23.from_int(4),
                                        ctx23.from_int(4)))
    with pytest.raises(AtlasError):
        normal_form("III", ctx23, params=(ctx23.one,))


def test_type_ii_kernels_are_orbit_representatives():
    ctx = make_field(19)
    ks = type_ii_kernels(ctx)
    assert len({k.key() for k in ks}) == 3
    C = Genus2Curve(Poly.from_ints(ctx, [-1, 0, 0, 0, 0, 1]))
    all_keys = {sp.key() for sp in splittings(C)}
    for k in ks:
        assert k.key() in all_keys


def test_verify_case_type_v_exceptional_columns():
    for p in (11, 17, 29, 41, 23):
        rep = verify_case("V", make_field(p))
        assert rep.ok, rep.summary()


def test_verify_case_type_ii_includes_loop_at_19():
    rep = verify_case("II", make_field(19))
    assert rep.ok, rep.summary()
    assert "loop" in rep.observed


def test_verify_case_generic_products():
    for case in (RAType.PI, RAType.SIGMA, RAType.PI0, RAType.PI1728):
        rep = verify_case(case, make_field(23))
        assert rep.ok, rep.summary()


def test_permutation_fixture_shapes():
    for case in ("I", "III", "IV", "V", "VI"):
        perms = expected_permutation_actions(case)
        for pm in perms:
            assert sorted(pm.values()) == list(range(1, 16))
    # the fixture partitions carry the tabulated orbit sizes
    assert sorted(len(o) for o in partition_from_perms(
        expected_permutation_actions("IV"))) == [1, 1, 1, 3, 3, 3, 3]
    assert sorted(len(o) for o in partition_from_perms(
        expected_permutation_actions("VI"))) == [1, 4, 4, 6]


def test_verify_permutation_fixtures_all_cases(ctx23):
    for case in ("I", "III", "IV", "V", "VI"):
        rep = verify_permutation_fixtures(case, ctx23)
        assert rep.ok, rep.summary()


def test_atlas_error_on_unavailable_case():
    # zeta_5 is irrational over GF(23^2)
    with pytest.raises(AtlasError):
        normal_form("II", make_field(23))
