import pytest

from f4grad import weyl
from f4grad.exactmath import IntMatrix, UnsupportedOrder
from f4grad.f4lie import t_prime


def test_generators_are_reflections():
    for s in weyl.GENERATORS:
        M = IntMatrix.of(s)
        assert M.det() == -1
        assert M @ M == IntMatrix.identity(4)


def test_enumeration_and_indexing():
    W = weyl.generate_weyl()
    assert len(W) == 1152
    assert weyl.sigma(748).matrix == weyl.IDENTITY
    assert weyl.index_of(weyl.sigma(15).matrix) == 15
    flat = [tuple(v for r in w.matrix for v in r) for w in W]
    assert flat == sorted(flat)


def test_roots_permuted():
    from f4grad.f4lie import POSITIVE_ROOTS

    roots = set(POSITIVE_ROOTS) | {tuple(-c for c in r) for r in POSITIVE_ROOTS}
    for j in (1, 3, 15, 105, 405):
        w = weyl.sigma(j)
        assert {w.act_on_root(r) for r in roots} == roots


def test_classes():
    C = weyl.conjugacy_classes()
    assert len(C) == 25
    assert sum(c.size for c in C) == 1152
    assert tuple(c.representative for c in C) == weyl.REPRESENTATIVES


def test_inverse_index():
    for j in (3, 94, 491):
        k = weyl.inverse_index(j)
        assert weyl._mul(weyl.sigma(j).matrix, weyl.sigma(k).matrix) == weyl.IDENTITY


def test_fixed_subgroup_examples():
    assert weyl.fixed_subgroup_structure(15).describe() == "Z3^2"
    assert weyl.fixed_subgroup_structure(3).describe() == "Z4 x Z2"
    assert weyl.fixed_subgroup_structure(405).describe() == "Z2^4"
    assert weyl.fixed_subgroup_structure(105).describe() == "F^x x Z2^2"


def test_fixed_generators_are_fixed():
    for j in weyl.REPRESENTATIVES:
        for d, v in weyl.fixed_subgroup_generators(j):
            if d:
                img = weyl.torus_action(j, [x * (24 // d) for x in v])
                assert img == tuple(x * (24 // d) % 24 for x in v)


def test_stabilizers():
    assert weyl.stabilizer_indices([(8, 0, 16, 16), (0, 8, 8, 0)]) == {15, 748, 1075}
    assert weyl.stabilizer_indices([(12, 0, 12, 0), (0, 12, 12, 0)], [(0, 0, 0, 1)]) == {105, 748}


def test_lift_conjugates_torus_by_B():
    for j in (3, 15, 105):
        f = weyl.extend_to_automorphism(j)
        e = (1, 2, 3, 5)
        lhs = f.matrix @ t_prime(e).matrix @ f.inverse().matrix
        assert lhs == t_prime(weyl.torus_matrix(j).apply(e)).matrix


def test_lift_is_monomial_with_order_doubling():
    f = weyl.extend_to_automorphism(3)
    assert weyl.lift_is_monomial(f)
    assert f.order() == 8 and weyl.sigma(3).order == 4


def test_power_condition():
    assert weyl.lemma_power_check(15, samples=10)
    with pytest.raises(ValueError):
        weyl.lemma_power_check(105)


def test_surrogate_order():
    assert weyl.surrogate_order((0, 0, 0, 1)) in weyl.SURROGATE_ORDERS
    with pytest.raises(UnsupportedOrder):
        weyl.surrogate_order((10, 10, 10, 10))


def test_quasitorus_maps_commute():
    q = weyl.quasitorus_A(105)
    assert q.surrogate is not None
    for a in q.maps:
        for b in q.maps:
            assert weyl.commute(a, b)


def test_psi_not_in_normaliser():
    g = weyl.main_generators()
    assert not weyl.psi_in_torus_normalizer(g["g2"], g["g3"])


def test_appendix_rows_found_by_search():
    assert weyl.appendix_check(103)["ok"]
    assert weyl.appendix_realisers(485) == [468, 482]
