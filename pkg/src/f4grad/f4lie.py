"""f4 = Der(J) in the basis B' = (h1, h2, h3, h4, b1, ..., b48)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from flint import fmpq, fmpq_mat

from .algcore import AlgebraMap, AlgebraTable, Coordinates, derivation_space, lie_algebra_from_matrices
from .exactmath import ROOTS, CycNum, ExactMatrix
from .jordan import ETA_EXPONENTS, build_albert


class DependentBasis(ValueError):
    pass


# b_k = [R_{w_i}, R_{w_j}], 1-indexed
B_PAIRS = [
    (1, 4), (1, 13), (6, 7), (8, 9), (2, 21), (1, 19), (7, 8), (1, 17),
    (2, 27), (5, 11), (2, 25), (1, 11), (5, 9), (1, 9), (4, 11), (5, 7),
    (1, 7), (4, 9), (2, 23), (4, 7), (1, 15), (9, 11), (7, 11), (7, 9),
    (1, 5), (1, 12), (9, 10), (6, 11), (2, 20), (1, 16), (10, 11), (1, 14),
    (2, 24), (4, 8), (2, 22), (1, 8), (4, 6), (1, 6), (5, 8), (4, 10),
    (1, 10), (5, 6), (2, 26), (5, 10), (1, 18), (6, 8), (8, 10), (6, 10),
]

# (factor, k, l): h = factor [b_k, b_l]
CARTAN_SPEC = [(4, 4, 28), (4, 27, 3), (8, 26, 2), (8, 25, 1)]

CARTAN_MATRIX = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]

POSITIVE_ROOTS = [
    (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 1), (0, 1, 1, 0),
    (1, 1, 0, 0), (1, 1, 1, 0), (0, 1, 1, 1), (0, 1, 2, 0), (1, 1, 1, 1), (0, 1, 2, 1),
    (1, 1, 2, 0), (1, 1, 2, 1), (0, 1, 2, 2), (1, 2, 2, 0), (1, 2, 2, 1), (1, 1, 2, 2),
    (1, 2, 3, 1), (1, 2, 2, 2), (1, 2, 3, 2), (1, 2, 4, 2), (1, 3, 4, 2), (2, 3, 4, 2),
]

F4_NAMES = ["h1", "h2", "h3", "h4"] + [f"b{k}" for k in range(1, 49)]


def xyzu_to_root(e: Sequence[int]) -> tuple[int, ...]:
    """Exponents (a, b, c, d) of x^a y^b z^c u^d to (m1..m4) with X^m1 Y^m2 Z^m3 U^m4.

    X = u^2/(x y^2 z), Y = yz, Z = 1/u, U = x.
    """
    a, b, c, d = e
    m1 = c - b
    m2 = 2 * c - b
    m4 = a + m1
    m3 = 2 * m1 - d
    return (m1, m2, m3, m4)


def root_to_xyzu(m: Sequence[int]) -> tuple[int, ...]:
    m1, m2, m3, m4 = m
    return (-m1 + m4, -2 * m1 + m2, -m1 + m2, 2 * m1 - m3)


def _bracket(a: fmpq_mat, b: fmpq_mat) -> fmpq_mat:
    return a * b - b * a


def right_mults() -> list[fmpq_mat]:
    return build_albert().left  # J is commutative, R_w = L_w


@dataclass
class F4Basis:
    matrices: list[fmpq_mat]          # 52 derivations of J
    algebra: AlgebraTable             # structure constants in B'
    coords: Coordinates
    roots: list[tuple[int, ...]]      # root of b_k (k = 1..48), index k-1

    def root_of(self, index: int) -> tuple[int, ...]:
        """Root label of basis element index (0..51); zero for the Cartan part."""
        return (0, 0, 0, 0) if index < 4 else self.roots[index - 4]

    def index_of_root(self, m: Sequence[int]) -> int:
        return 4 + self.roots.index(tuple(m))


@lru_cache(maxsize=None)
def build_f4_basis() -> F4Basis:
    R = right_mults()
    bs = [_bracket(R[i - 1], R[j - 1]) for i, j in B_PAIRS]
    for k, b in enumerate(bs):
        if b == fmpq_mat(27, 27):
            raise DependentBasis(f"b{k + 1} vanishes")
    hs = [_bracket(bs[k - 1], bs[l - 1]) * f for f, k, l in CARTAN_SPEC]
    mats = hs + bs
    try:
        L, coords = lie_algebra_from_matrices(F4_NAMES, mats)
    except ValueError as exc:
        raise DependentBasis(str(exc)) from exc
    roots = []
    for i, j in B_PAIRS:
        e = tuple(p + q for p, q in zip(ETA_EXPONENTS[i - 1], ETA_EXPONENTS[j - 1]))
        roots.append(xyzu_to_root(e))
    return F4Basis(mats, L, coords, roots)


def f4_algebra() -> AlgebraTable:
    return build_f4_basis().algebra


def cartan_values() -> list[list[fmpq]]:
    """values[k][a] = beta_k(h_a) from ad(h_a) b_k = beta_k(h_a) b_k (checked)."""
    B = build_f4_basis()
    L = B.algebra
    out = []
    for k in range(48):
        row = []
        for a in range(4):
            col = [L.left[a][r, 4 + k] for r in range(52)]
            v = col[4 + k]
            if any(col[r] for r in range(52) if r != 4 + k):
                raise DependentBasis(f"b{k + 1} is not a root vector")
            row.append(v)
        out.append(row)
    return out


def computed_cartan_matrix() -> list[list[int]]:
    """a_ij = alpha_i(h_j) with h_j the coroot of alpha_j, simple roots (b4, b3, b2, b1)."""
    B = build_f4_basis()
    L = B.algebra
    vals = cartan_values()
    simple = [4, 3, 2, 1]
    neg = [28, 27, 26, 25]
    out = []
    coroots = []
    for s, n in zip(simple, neg):
        # [b_s, b_n] lies in the Cartan span; scale it so alpha_s takes the value 2
        col = [L.left[3 + s][r, 3 + n] for r in range(52)]
        h = col[:4]
        val = sum(vals[s - 1][a] * h[a] for a in range(4))
        coroots.append([c * 2 / val for c in h])
    for s in simple:
        row = []
        for h in coroots:
            v = sum(vals[s - 1][a] * h[a] for a in range(4))
            if v.q != 1:
                raise ArithmeticError("non-integral Cartan entry")
            row.append(int(v.p))
        out.append(row)
    return out


def derivation_dimension() -> int:
    return len(derivation_space(build_albert()))


def commutator_span_dimension() -> int:
    R = right_mults()
    rows = []
    for i in range(27):
        for j in range(i + 1, 27):
            rows.append(_bracket(R[i], R[j]).entries())
    M = fmpq_mat(len(rows), 27 * 27, [v for r in rows for v in r])
    return M.rank()


def nonzero_pairs() -> list[tuple[int, int]]:
    """Ordered pairs (i, j), 1-indexed, with [R_wi, R_wj] != 0."""
    R = right_mults()
    Z = fmpq_mat(27, 27)
    return [(i + 1, j + 1) for i in range(27) for j in range(27) if _bracket(R[i], R[j]) != Z]


# ---------------------------------------------------------------------------
# Ad transfer and the torus


def ad_transfer(f: AlgebraMap) -> AlgebraMap:
    """d -> f d f^{-1} in the basis B'."""
    B = build_f4_basis()
    M = f.matrix
    Mi = M.inverse()
    cols = []
    for d in B.matrices:
        img = M @ ExactMatrix.rational(d) @ Mi
        cols.append(B.coords.of_exact(img))
    out = cols[0]
    for c in cols[1:]:
        out = out.hstack(c)
    return AlgebraMap(B.algebra, out, f"Ad({f.name})")


def torus_exponent_vectors() -> list[tuple[int, ...]]:
    """(x, y, z, u) exponents of the eigenvalue of t'_{xyzu} on each element of B'."""
    B = build_f4_basis()
    return [(0, 0, 0, 0)] * 4 + [root_to_xyzu(m) for m in B.roots]


def t_prime(exps: Sequence[int], n: int = 24, name: str | None = None) -> AlgebraMap:
    """t'_{xyzu} with x = zeta_n^exps[0] and so on, as a diagonal map on f4."""
    step = 24 // n
    diag = []
    for e in torus_exponent_vectors():
        k = sum(a * b for a, b in zip(e, exps)) * step
        diag.append(ROOTS[k % 24])
    return AlgebraMap(f4_algebra(), ExactMatrix.diagonal(diag), name or f"t'{tuple(exps)}/{n}")


def t_prime_values(vals: Sequence, name: str | None = None) -> AlgebraMap:
    """t'_{xyzu} for arbitrary nonzero scalars."""
    v = [CycNum.coerce(c) for c in vals]
    diag = []
    for e in torus_exponent_vectors():
        d = CycNum.coerce(1)
        for s, k in zip(v, e):
            d = d * (s ** k)
        diag.append(d)
    return AlgebraMap(f4_algebra(), ExactMatrix.diagonal(diag), name or f"t'{tuple(vals)}")


# ---------------------------------------------------------------------------
# Cartan grading


def cartan_grading():
    """Z^4 gradings on J and f4 labelled by root coordinates."""
    from .gradings import Grading

    J = build_albert()
    groups: dict[tuple[int, ...], list[int]] = {}
    for k, e in enumerate(ETA_EXPONENTS):
        groups.setdefault(xyzu_to_root(e), []).append(k)
    comps = [(lab, ExactMatrix.identity(27).submatrix(range(27), idx)) for lab, idx in groups.items()]
    GJ = Grading(J, comps, (0, 0, 0, 0), "cartan", algebra_name="J")
    B = build_f4_basis()
    groups = {}
    for k in range(52):
        groups.setdefault(B.root_of(k), []).append(k)
    comps = [(lab, ExactMatrix.identity(52).submatrix(range(52), idx)) for lab, idx in groups.items()]
    GL = Grading(B.algebra, comps, (0, 0, 0, 0), "cartan", algebra_name="f4")
    return GJ, GL
