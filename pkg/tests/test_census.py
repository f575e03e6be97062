"""Census formulas and graph comparison."""

import pytest

from richelot.census import (CensusError, compare, epsilons,
                             expected_counts)
from richelot.elliptic import j_invariant
from richelot.field import make_field
from richelot.genus2 import RAType
from richelot.graph import build_graph


def test_epsilons_examples():
    assert epsilons(11) == (1, 0, 1, 0, 0)
    assert epsilons(13) == (0, 1, 0, 0, 1)
    assert epsilons(19)[3] == 1  # 19 = 4 mod 5
    assert epsilons(7) == (1, 1, 0, 0, 0)
    with pytest.raises(CensusError):
        epsilons(4)
    with pytest.raises(CensusError):
        epsilons(5)


def test_expected_counts_anchors():
    c11 = expected_counts(11).counts
    assert {t: n for t, n in c11.items() if n} == {
        RAType.IV: 1, RAType.V: 1, RAType.PI01728: 1,
        RAType.SIGMA0: 1, RAType.SIGMA1728: 1}
    c7 = expected_counts(7).counts
    assert {t: n for t, n in c7.items() if n} == {
        RAType.VI: 1, RAType.SIGMA1728: 1}
    c13 = expected_counts(13).counts
    assert {t: n for t, n in c13.items() if n} == {
        RAType.III: 1, RAType.IV: 1, RAType.VI: 1, RAType.SIGMA: 1}


def test_expected_counts_integrality_sweep():
    # the fractional coefficients must always clear
    from richelot.field import is_prime
    for p in range(7, 200):
        if is_prime(p):
            expected_counts(p)


def test_compare_pass_and_fault_injection():
    g = build_graph(make_field(11))
    rep = compare(g, expected_counts(11))
    assert rep.ok
    # remove one vertex: the report identifies the missing type
    victim = next(iter(g.vertices))
    removed_type = g.vertices[victim].ra_type
    del g.vertices[victim]
    rep2 = compare(g, expected_counts(11))
    assert not rep2.ok
    bad = [t for t, e, o in rep2.rows if e != o]
    assert bad == [removed_type]


def test_supersingular_j_count_identity():
    # N_p + eps1 + eps3 equals the number of distinct supersingular
    # j-invariants seen among product-vertex factors
    for p in (11, 13, 23, 29):
        e1, e2, e3, e5, n = epsilons(p)
        g = build_graph(make_field(p))
        js = set()
        for key, v in g.vertices.items():
            if key.kind == "product":
                js.add(j_invariant(v.representative.E1).key())
                js.add(j_invariant(v.representative.E2).key())
        assert len(js) == n + e1 + e3


def test_report_formats():
    g = build_graph(make_field(7))
    rep = compare(g, expected_counts(7))
    table = rep.as_table()
    assert "expected" in table and "total" in table
    doc = rep.as_json_dict()
    assert doc["ok"] and doc["p"] == 7 and len(doc["rows"]) == 14
