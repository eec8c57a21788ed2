import json

import pytest

import braidperm as bp


def test_permutation_basics():
    a = bp.Permutation.parse("(1,2)", 3)
    b = bp.Permutation.parse("(2,3)", 3)
    assert str(a * b) == "(1,2,3)"
    assert (a * b)(3) == 1
    assert bp.Permutation.parse("(1,2)(3,4)").images == [2, 1, 4, 3]
    assert bp.Permutation.parse("(1,2,3)(4,5)", 6).cycle_type() == [3, 2]


def test_catalog_and_classification():
    assert "nu6" in bp.catalog_names()
    nu = bp.named_hom("nu6")
    assert bp.is_valid(nu)
    assert str(nu.alpha()) == "(1,2,3)(4,5)"
    c = bp.classify(nu)
    assert c["transitive"] and not c["cyclic"]
    assert bp.hom_conjugacy(nu, bp.named_hom("kappa_mu6")) is not None
    assert bp.hom_conjugacy(bp.named_hom("mu", {"k": 6}), nu) is None


def test_json_roundtrip():
    h = bp.named_hom("model", {"j": 3, "k": 7})
    assert bp.hom_from_json(h.to_json()) == h
    assert json.loads(h.to_json())["n"] == 14


def test_census():
    recs = bp.census(3, 6, non_cyclic=True, transitive=True)
    assert len(recs) == 7
    assert all(bp.is_valid(h) and flags["transitive"] for h, flags in recs)
    assert len(bp.census(6, 6, non_cyclic=True)) == 2
    with pytest.raises(bp.BudgetExceeded):
        bp.census(3, 12)


def test_words():
    assert bp.words_equal(3, [1, 2, 1], [2, 1, 2])
    assert not bp.words_equal(3, [1], [2])
    assert str(bp.perm_image(4, [1, 2, 3])) == "(1,2,3,4)"
    assert bp.exponent_sum(3, [2, -1]) == 0


def test_cohomology():
    assert bp.h1("psi56", {"m": 4}) == [2, 4]
    assert bp.h1("mu", {"n": 5, "m": 3}) == [3, 3]
    assert bp.h1_of(bp.named_hom("nu6"), 5) == [5]
    assert bp.classify(bp.build_phi_xy(4, 5, 2, 1))["transitive"]


def test_retraction():
    r = bp.retraction(bp.named_hom("model", {"j": 3, "k": 7}), 2)
    assert r["t"] == 5
    assert r["omega"] == r["omega_star"] == bp.named_hom("mu", {"k": 5})
    assert r["g_relations_clean"]


def test_commutator_and_suites():
    recs = bp.census_bprime(5)
    assert len(recs) == 1 and recs[0]["image_order"] == 60
    checks = bp.run_suite("identities")
    assert checks and all(ok for _, _, ok, _ in checks)
