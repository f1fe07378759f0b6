"""The split Cayley algebra C in the basis (e1, e2, u1, u2, u3, v1, v2, v3)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algcore import AlgebraMap, AlgebraTable
from .exactmath import ROOTS, CycNum, ExactMatrix

NAMES = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"]
E1, E2 = 0, 1
U = (2, 3, 4)
V = (5, 6, 7)
CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def _products() -> dict[tuple[int, int], dict[int, int]]:
    t: dict[tuple[int, int], dict[int, int]] = {}
    t[E1, E1] = {E1: 1}
    t[E2, E2] = {E2: 1}
    for j in range(3):
        t[E1, U[j]] = {U[j]: 1}
        t[U[j], E2] = {U[j]: 1}
        t[E2, V[j]] = {V[j]: 1}
        t[V[j], E1] = {V[j]: 1}
        t[U[j], V[j]] = {E1: 1}
        t[V[j], U[j]] = {E2: 1}
    for i, j, k in CYCLIC:
        t[U[i], U[j]] = {V[k]: 1}
        t[U[j], U[i]] = {V[k]: -1}
        t[V[i], V[j]] = {U[k]: -1}
        t[V[j], V[i]] = {U[k]: 1}
    return t


_TABLE = _products()


@lru_cache(maxsize=None)
def build_cayley() -> AlgebraTable:
    return AlgebraTable.from_products(NAMES, lambda i, j: _TABLE.get((i, j), {}), "alternative")


# conjugation: e1 <-> e2, u, v -> -u, -v
CONJ = ExactMatrix.from_rows([
    [0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, -1],
])


@dataclass(frozen=True)
class Octonion:
    coeffs: tuple[CycNum, ...]

    @classmethod
    def of(cls, coeffs: Sequence) -> "Octonion":
        if len(coeffs) != 8:
            raise ValueError("an octonion has 8 coordinates")
        return cls(tuple(CycNum.coerce(c) for c in coeffs))

    @classmethod
    def basis(cls, name: str) -> "Octonion":
        return cls.of([int(n == name) for n in NAMES])

    @classmethod
    def one(cls) -> "Octonion":
        return cls.of([1, 1, 0, 0, 0, 0, 0, 0])

    def __add__(self, o: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coeffs))

    def scale(self, s) -> "Octonion":
        s = CycNum.coerce(s)
        return Octonion(tuple(a * s for a in self.coeffs))

    def __mul__(self, o: "Octonion") -> "Octonion":
        out = [CycNum()] * 8
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                if b.is_zero():
                    continue
                for k, v in _TABLE.get((i, j), {}).items():
                    out[k] = out[k] + a * b * v
        return Octonion(tuple(out))

    def conj(self) -> "Octonion":
        c = self.coeffs
        return Octonion((c[1], c[0]) + tuple(-a for a in c[2:]))

    def is_scalar(self) -> bool:
        c = self.coeffs
        return c[0] == c[1] and all(a.is_zero() for a in c[2:])

    def norm(self) -> CycNum:
        p = self * self.conj()
        if not p.is_scalar():
            raise ArithmeticError("x xbar is not a scalar")
        return p.coeffs[0]

    def trace(self) -> CycNum:
        p = self + self.conj()
        if not p.is_scalar():
            raise ArithmeticError("x + xbar is not a scalar")
        return p.coeffs[0]

    def column(self) -> ExactMatrix:
        return ExactMatrix.from_rows([[c] for c in self.coeffs])

    @classmethod
    def from_column(cls, v: ExactMatrix) -> "Octonion":
        return cls(tuple(v[i, 0] for i in range(8)))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)


def polar(x: Octonion, y: Octonion) -> CycNum:
    """f(x, y) = (n(x+y) - n(x) - n(y)) / 2."""
    return ((x + y).norm() - x.norm() - y.norm()) * CycNum.coerce(1) / 2


def g2_torus(alpha, beta) -> AlgebraMap:
    a, b = CycNum.coerce(alpha), CycNum.coerce(beta)
    if a.is_zero() or b.is_zero():
        raise ValueError("torus parameters must be nonzero")
    diag = [1, 1, a, b, (a * b).inverse(), a.inverse(), b.inverse(), a * b]
    return AlgebraMap(build_cayley(), ExactMatrix.diagonal(diag), f"t[{alpha},{beta}]")


F0_ROWS = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0],
]


def f0() -> AlgebraMap:
    return AlgebraMap(build_cayley(), ExactMatrix.from_rows(F0_ROWS), "f0")


def z23_automorphisms() -> list[AlgebraMap]:
    return [g2_torus(1, -1), g2_torus(-1, 1), f0()]


def octonion_z23_grading():
    from .gradings import grading_from_automorphisms

    return grading_from_automorphisms(build_cayley(), z23_automorphisms(), name="octonion Z2^3")


# ---------------------------------------------------------------------------
# triality


def preserves_norm(M: ExactMatrix) -> bool:
    """n(Mx) = n(x) on the basis and on pairs of basis vectors."""
    cols = [Octonion.from_column(M.column(j)) for j in range(8)]
    base = [Octonion.basis(n) for n in NAMES]
    for i in range(8):
        if cols[i].norm() != base[i].norm():
            return False
        for j in range(i + 1, 8):
            if polar(cols[i], cols[j]) != polar(base[i], base[j]):
                return False
    return True


def verify_triality(U_: ExactMatrix, U1: ExactMatrix, U2: ExactMatrix) -> bool:
    """U(xy) = U1(x) U2(y) on all basis pairs, and all three preserve n."""
    cols = {name: [Octonion.from_column(M.column(j)) for j in range(8)] for name, M in (("U", U_), ("A", U1), ("B", U2))}
    for i in range(8):
        for j in range(8):
            prod = _TABLE.get((i, j), {})
            lhs = Octonion.of([0] * 8)
            for k, v in prod.items():
                lhs = lhs + cols["U"][k].scale(v)
            if lhs != cols["A"][i] * cols["B"][j]:
                return False
    return all(preserves_norm(M) for M in (U_, U1, U2))


def _left_mult(a: Octonion) -> ExactMatrix:
    C = build_cayley()
    return C.left_operator(a.column())


def _right_mult(a: Octonion) -> ExactMatrix:
    C = build_cayley()
    return C.right_operator(a.column())


def _is_monomial(M: ExactMatrix) -> bool:
    rows = M.tolist()
    for r in rows:
        if sum(not v.is_zero() for v in r) != 1:
            return False
    for j in range(M.cols):
        if sum(not rows[i][j].is_zero() for i in range(M.rows)) != 1:
            return False
    return True


def monomial_triality(U_: ExactMatrix, scalars: Sequence[CycNum] | None = None) -> tuple[ExactMatrix, ExactMatrix] | None:
    """Search monomial U1, U2 with U(xy) = U1(x) U2(y).

    Taking x = 1 gives U = L_a U2 with a = U1(1), and y = 1 gives U = R_b U1
    with b = U2(1).  A monomial U1 sends 1 = e1 + e2 to a combination of a
    hyperbolic pair, so a ranges over c e_p + d e_q for the pairs
    (e1, e2), (u_i, v_i) in both orders, with c, d from ``scalars``.
    """
    if scalars is None:
        scalars = [ROOTS[k] for k in range(0, 24, 6)]  # +-1, +-i
    pairs = [(0, 1), (1, 0)] + [(U[i], V[i]) for i in range(3)] + [(V[i], U[i]) for i in range(3)]
    U_cols = Octonion.from_column
    u_one = U_cols(U_.column(0) + U_.column(1))
    for p, q in pairs:
        for c in scalars:
            for d in scalars:
                coeffs = [0] * 8
                coeffs[p], coeffs[q] = c, d
                a = Octonion.of(coeffs)
                na = a.norm()
                if na.is_zero():
                    continue
                # L_a^{-1} = L_{abar} / n(a) in an alternative algebra
                U2 = _left_mult(a.conj()).scale(na.inverse()) @ U_
                b = Octonion.from_column(U2.column(0) + U2.column(1))
                nb = b.norm()
                if nb.is_zero():
                    continue
                U1 = _right_mult(b.conj()).scale(nb.inverse()) @ U_
                if not (_is_monomial(U1) and _is_monomial(U2)):
                    continue
                if verify_triality(U_, U1, U2):
                    return U1, U2
    return None
