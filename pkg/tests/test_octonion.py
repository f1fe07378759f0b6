import itertools

from f4grad.algcore import derivation_space, is_automorphism
from f4grad.exactmath import ExactMatrix
from f4grad.gradings import grading_type, universal_group
from f4grad.octonion import NAMES, Octonion, build_cayley, f0, g2_torus, octonion_z23_grading


def test_alternative_and_composition():
    base = [Octonion.basis(n) for n in NAMES]
    for x, y in itertools.product(base, repeat=2):
        assert (x * x) * y == x * (x * y)
        assert (x * y).norm() == x.norm() * y.norm()
    assert Octonion.one().norm() == 1


def test_mixed_element_norm_multiplicative():
    x = Octonion.of([1, 2, 0, 1, 0, -1, 3, 0])
    y = Octonion.of([0, 1, 1, 0, 2, 0, 0, 1])
    assert (x * y).norm() == x.norm() * y.norm()


def test_g2_is_derivation_algebra():
    assert len(derivation_space(build_cayley())) == 14


def test_z23_automorphisms():
    for f in (g2_torus(1, -1), g2_torus(-1, 1), f0()):
        assert is_automorphism(f)
        assert f.matrix @ f.matrix == ExactMatrix.identity(8)


def test_z23_grading_on_octonions():
    G = octonion_z23_grading()
    assert grading_type(G) == (8,)
    assert universal_group(G).describe() == "Z2^3"
