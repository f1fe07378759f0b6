from f4grad import f4lie
from f4grad.exactmath import ROOTS
from f4grad.gradings import grading_type
from f4grad.jordan import albert_torus


def test_root_coordinate_roundtrip():
    for r in f4lie.POSITIVE_ROOTS:
        assert f4lie.xyzu_to_root(f4lie.root_to_xyzu(r)) == r


def test_basis_roots():
    B = f4lie.build_f4_basis()
    assert B.roots[23] == (2, 3, 4, 2)
    assert B.roots[6] == (1, 1, 0, 0)
    assert B.root_of(0) == (0, 0, 0, 0)
    assert B.index_of_root((2, 3, 4, 2)) == 27


def test_structure_is_lie(f4):
    assert f4.dim == 52 and f4.check_flavor()


def test_cartan_matrix():
    assert f4lie.computed_cartan_matrix() == f4lie.CARTAN_MATRIX


def test_nonzero_pair_count():
    S = f4lie.nonzero_pairs()
    assert len(S) == 456
    assert len({tuple(sorted(p)) for p in S}) == 228


def test_ad_transfer_of_torus():
    t = albert_torus(ROOTS[1], ROOTS[2], ROOTS[5], ROOTS[7])
    assert f4lie.ad_transfer(t).matrix == f4lie.t_prime((1, 2, 5, 7)).matrix


def test_cartan_gradings():
    GJ, GL = f4lie.cartan_grading()
    assert grading_type(GJ) == (24, 0, 1)
    assert grading_type(GL) == (48, 0, 0, 1)
    assert GJ.is_closed() and GL.is_closed()
