from flint import fmpq

from f4grad.exactmath import (
    I, OMEGA, ROOTS, AbelianGroupDescriptor, CycNum, ExactMatrix, IntMatrix, UnsupportedOrder,
    lattice_quotient, multiplicative_kernel_generators, multiplicative_kernel_structure,
    root_of_unity, simultaneous_eigenspaces, smith_normal_form, solve,
)
import pytest


def test_roots_of_unity():
    z = ROOTS[1]
    assert z ** 24 == CycNum.coerce(1)
    assert z ** 12 == CycNum.coerce(-1)
    assert I * I == CycNum.coerce(-1)
    assert OMEGA ** 3 == CycNum.coerce(1) and OMEGA != CycNum.coerce(1)
    assert root_of_unity(1, 8) == ROOTS[3]
    assert ROOTS[5].root_exponent() == 5


def test_sqrt3_and_inverse():
    s = ROOTS[2] + ROOTS[22]
    assert s * s == CycNum.coerce(3)
    x = ROOTS[1] + CycNum.coerce(fmpq(2, 3))
    assert x * x.inverse() == CycNum.coerce(1)


def test_conjugation_is_inverse_on_roots():
    for k in range(24):
        assert ROOTS[k].conj() == ROOTS[(-k) % 24]


def test_matrix_rank_kernel_inverse():
    M = ExactMatrix.from_rows([[1, I, 0], [I, -1, 0], [0, 0, OMEGA]])
    assert M.rank() == 2
    K = M.kernel_basis()
    assert K.cols == 1 and (M @ K).is_zero()
    N = ExactMatrix.from_rows([[1, I], [0, OMEGA]])
    assert N @ N.inverse() == ExactMatrix.identity(2)


def test_solve():
    B = ExactMatrix.from_rows([[1, 0], [I, 1], [0, 2]])
    x = ExactMatrix.from_rows([[OMEGA], [3]])
    assert solve(B, B @ x) == x


def test_simultaneous_eigenspaces_diagonal():
    a = ExactMatrix.diagonal([1, -1, -1, 1])
    b = ExactMatrix.diagonal([1, 1, I, I])
    comps = simultaneous_eigenspaces([a, b])
    assert sorted(lab for lab, _ in comps) == [(0, 0), (0, 6), (12, 0), (12, 6)]
    assert sum(B.cols for _, B in comps) == 4


def test_smith_normal_form():
    M = IntMatrix.of([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    S, U, V = smith_normal_form(M)
    assert U @ M @ V == S
    assert [S.entries[i][i] for i in range(3)] == [2, 6, 12]


def test_lattice_quotient():
    assert lattice_quotient([[2, 0], [0, 3]], 2) == AbelianGroupDescriptor(0, (6,))
    assert lattice_quotient([[2, 0]], 2) == AbelianGroupDescriptor(1, (2,))
    assert lattice_quotient([], 3).describe() == "(F^x)^3"


def test_multiplicative_kernel():
    # t1^2 = 1 and t2 = t1: a single Z2
    M = IntMatrix.of([[2, 0], [1, -1]])
    assert multiplicative_kernel_structure(M) == AbelianGroupDescriptor(0, (2,))
    gens = multiplicative_kernel_generators(M)
    assert [d for d, _ in gens] == [2]


def test_unsupported_order_is_value_error():
    assert issubclass(UnsupportedOrder, ValueError)
    with pytest.raises(ValueError):
        root_of_unity(1, 5)
