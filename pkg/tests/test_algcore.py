from flint import fmpq_mat

from f4grad.algcore import (
    AlgebraMap, AlgebraTable, derivation_space, fixed_subalgebra, is_automorphism,
    lie_algebra_from_matrices, lie_rank,
)
from f4grad.exactmath import ExactMatrix, I


def _sl2():
    def m(rows):
        return fmpq_mat(2, 2, [v for r in rows for v in r])

    e, f, h = m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]]), m([[1, 0], [0, -1]])
    return lie_algebra_from_matrices(["e", "f", "h"], [e, f, h])


def test_lie_algebra_from_matrices():
    L, coords = _sl2()
    assert L.flavor == "anticommutative-Lie" and L.check_flavor()
    # [e, f] = h
    assert L.product_basis(0, 1) == {2: 1}
    assert lie_rank(L) == 1


def test_derivations_of_sl2():
    L, _ = _sl2()
    assert len(derivation_space(L)) == 3


def test_automorphism_and_fixed_subalgebra():
    L, _ = _sl2()
    t = AlgebraMap(L, ExactMatrix.diagonal([-1, -1, 1]), "t")
    assert is_automorphism(t)
    assert fixed_subalgebra(L, [t]).dim == 1
    bad = AlgebraMap(L, ExactMatrix.diagonal([I, 1, 1]), "bad")
    assert not is_automorphism(bad)


def test_map_order_and_inverse():
    L, _ = _sl2()
    t = AlgebraMap(L, ExactMatrix.diagonal([I, -I, 1]), "t")
    assert t.order() == 4
    assert (t @ t.inverse()).matrix == ExactMatrix.identity(3)


def test_table_from_products_commutative():
    A = AlgebraTable.from_products(["a", "b"], lambda i, j: {0: 1} if i == j == 0 else {}, "commutative-Jordan")
    assert A.dim == 2
