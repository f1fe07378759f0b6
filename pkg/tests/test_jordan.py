import random

from flint import fmpq, fmpq_mat

from f4grad import jordan
from f4grad.algcore import is_automorphism
from f4grad.exactmath import CycNum, ExactMatrix
from f4grad.gradings import grading_type, universal_group
from f4grad.octonion import Octonion, f0, g2_torus


def _random_element(rng):
    return ExactMatrix.from_rows([[rng.randint(-2, 2)] for _ in range(27)])


def test_jordan_identity(albert):
    rng = random.Random(1)
    for _ in range(3):
        x, y = _random_element(rng), _random_element(rng)
        x2 = albert.multiply(x, x)
        assert albert.multiply(x, y) == albert.multiply(y, x)
        assert albert.multiply(albert.multiply(x2, y), x) == albert.multiply(x2, albert.multiply(y, x))


def test_idempotents_and_unit(albert):
    one = jordan.E(1) + jordan.E(2) + jordan.E(3)
    for i in (1, 2, 3):
        assert albert.multiply(jordan.E(i), jordan.E(i)) == jordan.E(i)
    rng = random.Random(2)
    x = _random_element(rng)
    assert albert.multiply(one, x) == x


def test_off_diagonal_product_sign(albert):
    u1, v1 = Octonion.basis("u1"), Octonion.basis("v1")
    got = albert.multiply(jordan.X(1, u1), jordan.X(1, v1))
    want = (jordan.E(2) + jordan.E(3)).scale(fmpq(-1, 2))
    assert got == want


def test_eval_element_matches_constructors():
    assert jordan.eval_element("E1 + X2(u1)") == jordan.E(1) + jordan.X(2, Octonion.basis("u1"))


def test_generic_norm_on_albert(albert):
    one = jordan.E(1) + jordan.E(2) + jordan.E(3)
    x = jordan.E(1) + jordan.E(2).scale(2) + jordan.E(3).scale(3)
    tr, q, n = jordan.generic_norm(albert, x, one)
    assert (tr, q, n) == (CycNum.coerce(6), CycNum.coerce(11), CycNum.coerce(6))


def test_permutation_automorphisms():
    assert is_automorphism(jordan.theta())
    assert is_automorphism(jordan.vartheta())
    assert jordan.theta().order() == 3


def test_extensions_are_automorphisms():
    for f in (g2_torus(1, -1), f0()):
        assert is_automorphism(jordan.hat_extend(f))
    assert is_automorphism(jordan.tau(-1, 0))
    assert is_automorphism(jordan.tau(0, 1))
    assert is_automorphism(jordan.in_s())


def test_albert_torus():
    t = jordan.albert_torus_roots((1, 2, 5, 7))
    assert is_automorphism(t)


def test_h3f_subalgebra():
    H = jordan.build_h3f()
    assert H.dim == 6 and H.check_flavor()
    for name, maps in jordan.h3f_automorphism_sets().items():
        for f in maps:
            assert is_automorphism(f), name


def test_tits_norm_agrees_with_exact():
    rng = random.Random(3)
    for _ in range(5):
        mats = [fmpq_mat(3, 3, [rng.randint(-3, 3) for _ in range(9)]) for _ in range(3)]
        assert jordan.tits_norm_exact(jordan.tits_vector(*mats)) == CycNum.coerce(jordan.tits_norm(*mats))


def test_tits_unit_norm():
    e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    z = [[0] * 3] * 3
    assert jordan.tits_norm_exact(jordan.tits_vector(e, z, z)) == CycNum.coerce(1)


def test_tits_algebra_is_jordan_with_f4_derivations():
    from f4grad.algcore import derivation_space

    T = jordan.build_tits()
    assert T.dim == 27 and T.check_flavor()
    assert len(derivation_space(T)) == 52


def test_tits_z33_grading():
    from f4grad.gradings import grading_from_automorphisms

    G = grading_from_automorphisms(jordan.build_tits(), jordan.tits_z33_automorphisms())
    assert grading_type(G) == (27,)
    assert universal_group(G).describe() == "Z3^3"
    assert all(not jordan.tits_norm_exact(B.column(0)).is_zero() for _, B in G.components)


def test_pauli_grading():
    G = jordan.pauli_grading()
    assert grading_type(G) == (9,)
    assert universal_group(G).describe() == "Z3^2"


def test_ztrescubo_route_is_recorded():
    info = jordan.ztrescubo_construction()
    assert info["route"] in ("theta*Psi_U", "diagonal-on-fixture")
    for f in info["maps"]:
        assert is_automorphism(f)
