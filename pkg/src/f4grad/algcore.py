"""Algebras given by rational structure constants, and the generic operations
on them: products, automorphism/derivation predicates, derivation algebras,
fixed subalgebras and Lie rank."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from flint import fmpq, fmpq_mat

from .exactmath import CycNum, ExactMatrix, solve

FLAVORS = ("commutative-Jordan", "associative", "alternative", "anticommutative-Lie", "commutative")


class NotClosedUnderBracket(ValueError):
    pass


class AlgebraTable:
    """Finite-dimensional algebra over Q by structure constants.

    ``left[i]`` is the matrix of x -> e_i x, so column j of it holds the
    coordinates of e_i e_j.
    """

    def __init__(self, names: Sequence[str], left: Sequence[fmpq_mat], flavor: str):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor}")
        self.basis_names = list(names)
        self.dim = len(names)
        self.left = list(left)
        self.flavor = flavor
        for m in self.left:
            if (m.nrows(), m.ncols()) != (self.dim, self.dim):
                raise ValueError("structure matrix of wrong size")

    @classmethod
    def from_products(cls, names: Sequence[str], prod, flavor: str) -> "AlgebraTable":
        """Build from prod(i, j) -> dict {k: rational} giving e_i e_j."""
        n = len(names)
        left = []
        for i in range(n):
            flat = [fmpq(0)] * (n * n)
            for j in range(n):
                for k, v in prod(i, j).items():
                    flat[k * n + j] = fmpq(v) if isinstance(v, int) else v
            left.append(fmpq_mat(n, n, flat))
        return cls(names, left, flavor)

    def c(self, i: int, j: int, k: int) -> fmpq:
        return self.left[i][k, j]

    def product_basis(self, i: int, j: int) -> dict[int, fmpq]:
        L = self.left[i]
        return {k: L[k, j] for k in range(self.dim) if L[k, j]}

    @cached_property
    def left_exact(self) -> list[ExactMatrix]:
        return [ExactMatrix.rational(m) for m in self.left]

    def left_operator(self, x: ExactMatrix) -> ExactMatrix:
        """Matrix of y -> x y, for a column vector x over Q(zeta24)."""
        n = self.dim
        coeffs = []
        for k in range(8):
            ck = x._c[k]
            if ck is None:
                coeffs.append(None)
                continue
            acc = fmpq_mat(n, n)
            for i in range(n):
                v = ck[i, 0]
                if v:
                    acc += self.left[i] * v
            coeffs.append(acc)
        return ExactMatrix(n, n, coeffs)

    def multiply(self, x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
        return self.left_operator(x) @ y

    def unit_vector(self, i: int) -> ExactMatrix:
        return ExactMatrix.rational(fmpq_mat(self.dim, 1, [int(k == i) for k in range(self.dim)]))

    def vector(self, coords: Sequence) -> ExactMatrix:
        return ExactMatrix.from_rows([[c] for c in coords])

    def check_flavor(self) -> bool:
        """Exhaustive identity check for the declared flavor."""
        n = self.dim
        L = self.left
        if self.flavor in ("commutative-Jordan", "commutative"):
            for i in range(n):
                for j in range(n):
                    if self.product_basis(i, j) != self.product_basis(j, i):
                        return False
            if self.flavor == "commutative":
                return True
            # Jordan identity (x^2 y) x = x^2 (y x) on basis elements and pair sums
            samples = [self.unit_vector(i) for i in range(n)]
            samples += [self.unit_vector(i) + self.unit_vector((i * 7 + 3) % n) for i in range(n)]
            for x in samples:
                Lx = self.left_operator(x)
                x2 = Lx @ x
                Lx2 = self.left_operator(x2)
                if Lx @ Lx2 != Lx2 @ Lx:
                    return False
            return True
        if self.flavor == "anticommutative-Lie":
            for i in range(n):
                for j in range(i, n):
                    a, b = self.product_basis(i, j), self.product_basis(j, i)
                    if {k: -v for k, v in a.items()} != b:
                        return False
            # Jacobi: ad is a representation, ad[e_i, e_j] = [ad e_i, ad e_j]
            for i in range(n):
                for j in range(i + 1, n):
                    lhs = fmpq_mat(n, n)
                    for k, v in self.product_basis(i, j).items():
                        lhs += L[k] * v
                    if lhs != L[i] * L[j] - L[j] * L[i]:
                        return False
            return True
        if self.flavor == "associative":
            for i in range(n):
                for j in range(n):
                    lhs = fmpq_mat(n, n)
                    for k, v in self.product_basis(i, j).items():
                        lhs += L[k] * v
                    if lhs != L[i] * L[j]:
                        return False
            return True
        # alternative: (xx)y = x(xy) and (yx)x = y(xx) on basis elements and sums
        vecs = [self.unit_vector(i) for i in range(n)]
        vecs += [vecs[i] + vecs[j] for i in range(n) for j in range(i + 1, n)]
        for x in vecs:
            Lx = self.left_operator(x)
            xx = Lx @ x
            if self.left_operator(xx) != Lx @ Lx:
                return False
            # right alternativity through the right operator
            Rx = self.right_operator(x)
            if self.right_operator(xx) != Rx @ Rx:
                return False
        return True

    def right_operator(self, x: ExactMatrix) -> ExactMatrix:
        """Matrix of y -> y x."""
        n = self.dim
        cols = []
        for j in range(n):
            cols.append(self.left_operator(self.unit_vector(j)) @ x)
        out = cols[0]
        for c in cols[1:]:
            out = out.hstack(c)
        return out

    def __repr__(self):
        return f"AlgebraTable(dim={self.dim}, flavor={self.flavor})"


@dataclass
class AlgebraMap:
    algebra: AlgebraTable
    matrix: ExactMatrix
    name: str = ""

    def __post_init__(self):
        n = self.algebra.dim
        if (self.matrix.rows, self.matrix.cols) != (n, n):
            raise ValueError("map size does not match the algebra")

    def compose(self, other: "AlgebraMap", name: str = "") -> "AlgebraMap":
        return AlgebraMap(self.algebra, self.matrix @ other.matrix, name or f"{self.name}*{other.name}")

    def __matmul__(self, other: "AlgebraMap") -> "AlgebraMap":
        return self.compose(other)

    def inverse(self) -> "AlgebraMap":
        return AlgebraMap(self.algebra, self.matrix.inverse(), f"{self.name}^-1")

    def power(self, k: int) -> "AlgebraMap":
        return AlgebraMap(self.algebra, self.matrix.power(k), f"{self.name}^{k}")

    def order(self) -> int:
        return self.matrix.order()

    def apply(self, v: ExactMatrix) -> ExactMatrix:
        return self.matrix @ v


def is_automorphism(f: AlgebraMap) -> bool:
    A, M = f.algebra, f.matrix
    if M.rank() != A.dim:
        return False
    for i in range(A.dim):
        img = M.column(i)
        # f(e_i y) = f(e_i) f(y) for all y:  M L_i = L_{f(e_i)} M
        if M @ A.left_exact[i] != A.left_operator(img) @ M:
            return False
    return True


def is_derivation(d: AlgebraMap) -> bool:
    A, D = d.algebra, d.matrix
    for i in range(A.dim):
        if D @ A.left_exact[i] - A.left_exact[i] @ D != A.left_operator(D.column(i)):
            return False
    return True


def _rational_rows(mat: fmpq_mat) -> list[list[fmpq]]:
    c = mat.ncols()
    e = mat.entries()
    return [e[i * c:(i + 1) * c] for i in range(mat.nrows())]


def derivation_space(A: AlgebraTable) -> list[fmpq_mat]:
    """Basis of Der(A) by solving d(e_i e_j) = d(e_i)e_j + e_i d(e_j) exactly.

    Unknowns are the entries d[a, b] (index a*n + b).  Equations are added one
    generator i at a time and kept in reduced form.
    """
    n = A.dim
    N = n * n
    kept: list[list[fmpq]] = []
    for i in range(A.dim):
        Li = A.left[i]
        rows = []
        # entry (r, j) of  D L_i - L_i D - sum_k D[k, i] L_k
        Le = [Li[r, k] for r in range(n) for k in range(n)]
        for r in range(n):
            for j in range(n):
                row = {}
                for k in range(n):
                    v = Li[k, j]
                    if v:
                        row[r * n + k] = row.get(r * n + k, 0) + v
                    w = Le[r * n + k]
                    if w:
                        row[k * n + j] = row.get(k * n + j, 0) - w
                    u = A.left[k][r, j]
                    if u:
                        row[k * n + i] = row.get(k * n + i, 0) - u
                if any(row.values()):
                    dense = [fmpq(0)] * N
                    for key, v in row.items():
                        dense[key] = v
                    rows.append(dense)
        if not rows:
            continue
        stack = kept + rows
        R, rank = fmpq_mat(len(stack), N, [v for r in stack for v in r]).rref()
        kept = _rational_rows(R)[:rank]
    if not kept:
        K = [fmpq_mat(n, n, [int(t == s) for t in range(N)]) for s in range(N)]
        return K
    R = fmpq_mat(len(kept), N, [v for r in kept for v in r])
    piv = []
    for r in kept:
        for j, v in enumerate(r):
            if v:
                piv.append(j)
                break
    free = [j for j in range(N) if j not in set(piv)]
    basis = []
    for f in free:
        vec = [fmpq(0)] * N
        vec[f] = fmpq(1)
        for row, p in zip(kept, piv):
            vec[p] = -row[f]
        basis.append(fmpq_mat(n, n, vec))
    return basis


def lie_algebra_from_matrices(names: Sequence[str], mats: Sequence[fmpq_mat]) -> tuple[AlgebraTable, "Coordinates"]:
    """Lie algebra spanned by independent matrices, with the commutator bracket."""
    coords = Coordinates(mats)
    n = len(mats)
    left = []
    for i in range(n):
        flat = [fmpq(0)] * (n * n)
        for j in range(n):
            br = mats[i] * mats[j] - mats[j] * mats[i]
            c = coords.of(br)
            for k, v in enumerate(c):
                flat[k * n + j] = v
        left.append(fmpq_mat(n, n, flat))
    return AlgebraTable(names, left, "anticommutative-Lie"), coords


class Coordinates:
    """Coordinates of matrices with respect to an independent list of matrices."""

    def __init__(self, mats: Sequence[fmpq_mat]):
        self.mats = list(mats)
        self.n = len(mats)
        r, c = mats[0].nrows(), mats[0].ncols()
        self.shape = (r, c)
        flat = [m.entries() for m in mats]
        M = fmpq_mat(self.n, r * c, [v for f in flat for v in f])
        # pivot columns of the stacked flattened matrices give a set of
        # entry positions on which the coordinate map is invertible
        Rt, rk = M.rref()
        if rk != self.n:
            raise ValueError("dependent matrix list")
        pos = []
        et = Rt.entries()
        cols = r * c
        for i in range(rk):
            for j in range(cols):
                if et[i * cols + j]:
                    pos.append(j)
                    break
        self.positions = pos
        P = fmpq_mat(self.n, self.n, [flat[k][p] for p in pos for k in range(self.n)])
        self.pinv = P.inv()
        self.matrix = M  # rows are flattened basis matrices

    def of(self, m: fmpq_mat, check: bool = True) -> list[fmpq]:
        e = m.entries()
        v = fmpq_mat(self.n, 1, [e[p] for p in self.positions])
        c = self.pinv * v
        out = [c[k, 0] for k in range(self.n)]
        if check:
            acc = fmpq_mat(*self.shape)
            for k, a in enumerate(out):
                if a:
                    acc += self.mats[k] * a
            if acc != m:
                raise ValueError("matrix not in the span")
        return out

    def of_exact(self, m: ExactMatrix, check: bool = True) -> ExactMatrix:
        """Coordinate column (over Q(zeta24)) of an exact matrix in the span."""
        coeffs = []
        for k in range(8):
            ck = m._c[k]
            if ck is None:
                coeffs.append(None)
                continue
            coeffs.append(fmpq_mat(self.n, 1, self.of(ck, check)))
        return ExactMatrix(self.n, 1, coeffs)

    def combine(self, coords: ExactMatrix) -> ExactMatrix:
        """Matrix sum_k coords[k] * mats[k]."""
        r, c = self.shape
        out = []
        for k in range(8):
            ck = coords._c[k]
            if ck is None:
                out.append(None)
                continue
            acc = fmpq_mat(r, c)
            for i in range(self.n):
                v = ck[i, 0]
                if v:
                    acc += self.mats[i] * v
            out.append(acc)
        return ExactMatrix(r, c, out)


# ---------------------------------------------------------------------------
# subalgebras


@dataclass
class Subalgebra:
    """Span of the columns of ``basis`` inside ``ambient``."""

    ambient: AlgebraTable
    basis: ExactMatrix
    structure: list[ExactMatrix] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def certify(self) -> "Subalgebra":
        """Fill ``structure`` with the restricted left operators or raise."""
        ops = []
        for a in range(self.dim):
            op = self.ambient.left_operator(self.basis.column(a))
            try:
                ops.append(solve(self.basis, op @ self.basis))
            except ValueError as exc:
                raise NotClosedUnderBracket(f"product with basis element {a} leaves the span") from exc
        self.structure = ops
        return self

    def is_abelian(self) -> bool:
        return all(m.is_zero() for m in self.structure)


def subalgebra(ambient: AlgebraTable, basis: ExactMatrix) -> Subalgebra:
    return Subalgebra(ambient, basis).certify()


def fixed_subalgebra(L: AlgebraTable, maps: Sequence[AlgebraMap]) -> Subalgebra:
    n = L.dim
    if not maps:
        return subalgebra(L, ExactMatrix.identity(n))
    ident = ExactMatrix.identity(n)
    stack = maps[0].matrix - ident
    for f in maps[1:]:
        stack = stack.vstack(f.matrix - ident)
    return subalgebra(L, stack.kernel_basis())


SAMPLES = (
    lambda k: k + 1,
    lambda k: (k + 1) ** 2,
    lambda k: 2 ** k,
)


def lie_rank(L: AlgebraTable | Subalgebra) -> int:
    """Minimal centralizer dimension over three structured sample elements."""
    if isinstance(L, AlgebraTable):
        L = subalgebra(L, ExactMatrix.identity(L.dim))
    elif not L.structure and L.dim:
        L.certify()
    d = L.dim
    if d == 0:
        return 0
    best = d
    for s in SAMPLES:
        ad = ExactMatrix.zeros(d, d)
        for a in range(d):
            ad = ad + L.structure[a].scale(s(a))
        best = min(best, ad.kernel_basis().cols)
    return best
