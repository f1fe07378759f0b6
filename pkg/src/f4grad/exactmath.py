"""Exact arithmetic over Q(zeta24), dense matrices over that field, and
integer lattice tools (Smith normal form and multiplicative kernels).

Field elements are residues modulo the 24th cyclotomic polynomial
x^8 - x^4 + 1.  Matrices keep one rational coefficient matrix per power of
zeta, so products reduce to a handful of rational matrix products done by
FLINT.  Row reduction goes through the realification over Q: the rref of the
realified matrix is the realification of the rref over the field, so the
field rref can be read back from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat

DEG = 8
ORDER = 24


class UnsupportedOrder(ValueError):
    pass


class CommutatorNonzero(ValueError):
    pass


class EigenvalueOutsideCandidates(ValueError):
    pass


def _q(v) -> fmpq:
    if isinstance(v, fmpq):
        return v
    if isinstance(v, Fraction):
        return fmpq(v.numerator, v.denominator)
    if isinstance(v, int):
        return fmpq(v)
    raise TypeError(f"cannot read {v!r} as a rational")


def _reduce(p: list) -> list:
    # x^8 = x^4 - 1
    for d in range(len(p) - 1, DEG - 1, -1):
        top = p[d]
        if top:
            p[d - 4] += top
            p[d - 8] -= top
    return p[:DEG]


class CycNum:
    """Element of Q(zeta24) stored as 8 rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence = (0,) * DEG):
        c = [_q(v) for v in coeffs]
        if len(c) > DEG:
            c = _reduce(c)
        c += [fmpq(0)] * (DEG - len(c))
        self.c = tuple(c)

    @classmethod
    def zeta(cls, k: int = 1) -> "CycNum":
        return ROOTS[k % ORDER]

    @classmethod
    def coerce(cls, v) -> "CycNum":
        if isinstance(v, CycNum):
            return v
        return cls((v,))

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __add__(self, o):
        o = CycNum.coerce(o)
        return CycNum([a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum([-a for a in self.c])

    def __sub__(self, o):
        return self + (-CycNum.coerce(o))

    def __rsub__(self, o):
        return CycNum.coerce(o) - self

    def __mul__(self, o):
        if not isinstance(o, CycNum):
            try:
                q = _q(o)
            except TypeError:
                return NotImplemented
            return CycNum([a * q for a in self.c])
        p = [fmpq(0)] * (2 * DEG - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        p[i + j] += a * b
        return CycNum(_reduce(p))

    __rmul__ = __mul__

    def mult_matrix(self) -> fmpq_mat:
        """Matrix of y -> self*y on the power basis."""
        cols = [(self * ROOTS[k]).c for k in range(DEG)]
        return fmpq_mat(DEG, DEG, [cols[j][i] for i in range(DEG) for j in range(DEG)])

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(zeta24)")
        rhs = fmpq_mat(DEG, 1, [1] + [0] * (DEG - 1))
        sol = self.mult_matrix().solve(rhs)
        return CycNum([sol[i, 0] for i in range(DEG)])

    def __truediv__(self, o):
        return self * CycNum.coerce(o).inverse()

    def __rtruediv__(self, o):
        return CycNum.coerce(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "CycNum":
        """Complex conjugation zeta -> zeta^-1."""
        out = ZERO
        for k, a in enumerate(self.c):
            if a:
                out = out + ROOTS[-k % ORDER] * a
        return out

    def __eq__(self, o):
        try:
            o = CycNum.coerce(o)
        except TypeError:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def root_exponent(self) -> int | None:
        """k with self == zeta24^k, or None."""
        return _ROOT_INDEX.get(self.c)

    def __repr__(self):
        if self.is_rational():
            return str(self.c[0])
        k = self.root_exponent()
        if k is not None:
            return f"z^{k}"
        terms = [f"{a}*z^{k}" if k else str(a) for k, a in enumerate(self.c) if a]
        return "(" + " + ".join(terms) + ")"


def _power_basis_root(k: int) -> tuple:
    p = [fmpq(0)] * ORDER
    p[k] = fmpq(1)
    return tuple(_reduce(p))


ROOTS: list[CycNum] = []
for _k in range(ORDER):
    _obj = object.__new__(CycNum)
    _obj.c = _power_basis_root(_k)
    ROOTS.append(_obj)
_ROOT_INDEX = {r.c: k for k, r in enumerate(ROOTS)}
ZERO = CycNum()
ONE = CycNum((1,))
I = ROOTS[6]
OMEGA = ROOTS[8]
XI = ROOTS[3]
SQRT3 = ROOTS[2] + ROOTS[22]

# column structure of multiplication by zeta^m: list of (row, col, sign)
_ZETA_BLOCKS = []
for _m in range(DEG):
    _mm = ROOTS[_m].mult_matrix()
    _ZETA_BLOCKS.append([(i, j, _mm[i, j]) for i in range(DEG) for j in range(DEG) if _mm[i, j]])


def root_of_unity(k: int, n: int = ORDER) -> CycNum:
    """Primitive-power root exp(2 pi i k / n); n must divide 24."""
    if ORDER % n:
        raise UnsupportedOrder(f"order {n} does not divide {ORDER}")
    return ROOTS[(k * (ORDER // n)) % ORDER]


def scalar(v) -> CycNum:
    return CycNum.coerce(v)


# ---------------------------------------------------------------------------
# matrices


def _zero_mat(r: int, c: int) -> fmpq_mat:
    return fmpq_mat(r, c)


def _is_zero_mat(m: fmpq_mat) -> bool:
    return not any(m.entries())


class ExactMatrix:
    """Dense matrix over Q(zeta24); immutable by convention."""

    __slots__ = ("rows", "cols", "_c")

    def __init__(self, rows: int, cols: int, coeffs: Sequence[fmpq_mat | None] | None = None):
        self.rows = rows
        self.cols = cols
        if coeffs is None:
            coeffs = [None] * DEG
        cs = list(coeffs)
        for k, m in enumerate(cs):
            if m is not None and _is_zero_mat(m):
                cs[k] = None
        self._c = cs

    # construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = [[fmpq(0)] * (r * c) for _ in range(DEG)]
        used = [False] * DEG
        for i, row in enumerate(rows):
            if len(row) != c:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = CycNum.coerce(v)
                for k, a in enumerate(v.c):
                    if a:
                        flat[k][i * c + j] = a
                        used[k] = True
        return cls(r, c, [fmpq_mat(r, c, flat[k]) if used[k] else None for k in range(DEG)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "ExactMatrix":
        return cls.from_rows(list(zip(*cols))).copy() if cols else cls(0, 0)

    @classmethod
    def rational(cls, m: fmpq_mat) -> "ExactMatrix":
        return cls(m.nrows(), m.ncols(), [m] + [None] * (DEG - 1))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        m = fmpq_mat(n, n)
        for i in range(n):
            m[i, i] = 1
        return cls.rational(m)

    @classmethod
    def zeros(cls, r: int, c: int) -> "ExactMatrix":
        return cls(r, c)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls.from_rows([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, list(self._c))

    # access ------------------------------------------------------------

    def coeff(self, k: int) -> fmpq_mat:
        m = self._c[k]
        return m if m is not None else _zero_mat(self.rows, self.cols)

    def __getitem__(self, ij) -> CycNum:
        i, j = ij
        return CycNum([m[i, j] if m is not None else 0 for m in self._c])

    def tolist(self) -> list[list[CycNum]]:
        ents = [m.entries() if m is not None else None for m in self._c]
        out = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                p = i * self.cols + j
                row.append(CycNum([e[p] if e is not None else 0 for e in ents]))
            out.append(row)
        return out

    def column(self, j: int) -> "ExactMatrix":
        return self.submatrix(range(self.rows), [j])

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "ExactMatrix":
        rows, cols = list(rows), list(cols)
        out = []
        for m in self._c:
            if m is None:
                out.append(None)
                continue
            e = m.entries()
            c = self.cols
            out.append(fmpq_mat(len(rows), len(cols), [e[i * c + j] for i in rows for j in cols]))
        return ExactMatrix(len(rows), len(cols), out)

    def is_rational(self) -> bool:
        return all(m is None for m in self._c[1:])

    def is_zero(self) -> bool:
        return all(m is None for m in self._c)

    def nonzero_coeffs(self) -> list[int]:
        return [k for k, m in enumerate(self._c) if m is not None]

    # arithmetic -------------------------------------------------------

    def __add__(self, o: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(o)
        return ExactMatrix(self.rows, self.cols, [_madd(a, b) for a, b in zip(self._c, o._c)])

    def __sub__(self, o: "ExactMatrix") -> "ExactMatrix":
        return self + (-o)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [None if m is None else -m for m in self._c])

    def _check_shape(self, o):
        if (self.rows, self.cols) != (o.rows, o.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {o.rows}x{o.cols}")

    def scale(self, s) -> "ExactMatrix":
        s = CycNum.coerce(s)
        p: list = [None] * (2 * DEG - 1)
        for a, sa in enumerate(s.c):
            if not sa:
                continue
            for b, m in enumerate(self._c):
                if m is not None:
                    p[a + b] = _madd(p[a + b], m * sa)
        return ExactMatrix(self.rows, self.cols, _reduce_mats(p))

    def __mul__(self, o):
        if isinstance(o, ExactMatrix):
            return self.matmul(o)
        return self.scale(o)

    __rmul__ = scale

    def __matmul__(self, o: "ExactMatrix") -> "ExactMatrix":
        return self.matmul(o)

    def matmul(self, o: "ExactMatrix") -> "ExactMatrix":
        if self.cols != o.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {o.rows}x{o.cols}")
        p: list = [None] * (2 * DEG - 1)
        for a, ma in enumerate(self._c):
            if ma is None:
                continue
            for b, mb in enumerate(o._c):
                if mb is not None:
                    p[a + b] = _madd(p[a + b], ma * mb)
        return ExactMatrix(self.rows, o.cols, _reduce_mats(p))

    def __eq__(self, o) -> bool:
        if not isinstance(o, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (o.rows, o.cols):
            return False
        return all(
            (a is None and b is None) or (a is not None and b is not None and a == b)
            for a, b in zip(self._c, o._c)
        )

    __hash__ = None  # type: ignore[assignment]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, [None if m is None else m.transpose() for m in self._c])

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def hstack(self, o: "ExactMatrix") -> "ExactMatrix":
        if self.rows != o.rows:
            raise ValueError("row mismatch in hstack")
        out = []
        for a, b in zip(self._c, o._c):
            if a is None and b is None:
                out.append(None)
                continue
            ea = a.entries() if a is not None else [0] * (self.rows * self.cols)
            eb = b.entries() if b is not None else [0] * (o.rows * o.cols)
            flat = []
            for i in range(self.rows):
                flat.extend(ea[i * self.cols:(i + 1) * self.cols])
                flat.extend(eb[i * o.cols:(i + 1) * o.cols])
            out.append(fmpq_mat(self.rows, self.cols + o.cols, flat))
        return ExactMatrix(self.rows, self.cols + o.cols, out)

    def vstack(self, o: "ExactMatrix") -> "ExactMatrix":
        return self.T.hstack(o.T).T

    def power(self, n: int) -> "ExactMatrix":
        if n < 0:
            return self.inverse().power(-n)
        out, base = ExactMatrix.identity(self.rows), self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def order(self, limit: int = ORDER) -> int:
        """Multiplicative order, required to divide 24."""
        ident = ExactMatrix.identity(self.rows)
        p = self
        for k in range(1, limit + 1):
            if p == ident:
                if ORDER % k:
                    raise UnsupportedOrder(f"map of order {k} does not fit in Q(zeta24)")
                return k
            p = p @ self
        raise UnsupportedOrder(f"map order exceeds {limit} or is infinite")

    # elimination -------------------------------------------------------

    def realify(self) -> fmpq_mat:
        """Rational 8r x 8c matrix of the map on Q-coordinates (entry-major)."""
        r, c = self.rows, self.cols
        C = DEG * c
        flat = [0] * (DEG * r * C)
        for m, mat in enumerate(self._c):
            if mat is None:
                continue
            blk = _ZETA_BLOCKS[m]
            for p, v in enumerate(mat.entries()):
                if not v:
                    continue
                i, j = divmod(p, c)
                base = DEG * i * C + DEG * j
                for a, b, s in blk:
                    flat[base + a * C + b] += v * s
        return fmpq_mat(DEG * r, C, flat)

    def rref(self) -> tuple["ExactMatrix", list[int]]:
        R, rank = self.realify().rref()
        if rank % DEG:
            raise ArithmeticError("realified rank not a multiple of 8")
        d = rank // DEG
        e = R.entries()
        C = DEG * self.cols
        pivots = []
        for i in range(d):
            row = DEG * i * C
            for j in range(self.cols):
                if any(e[row + DEG * j + t] for t in range(DEG)):
                    pivots.append(j)
                    break
        coeffs = []
        for m in range(DEG):
            flat = [e[(DEG * i + m) * C + DEG * j] for i in range(self.rows) for j in range(self.cols)]
            coeffs.append(fmpq_mat(self.rows, self.cols, flat))
        return ExactMatrix(self.rows, self.cols, coeffs), pivots

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        if self.is_rational():
            return self.coeff(0).rank()
        return self.realify().rank() // DEG

    def kernel_basis(self) -> "ExactMatrix":
        """Columns form a basis of the right null space."""
        n = self.cols
        if self.rows == 0:
            return ExactMatrix.identity(n)
        if self.is_rational():
            R, rank = self.coeff(0).rref()
            R = ExactMatrix.rational(R)
            pivots = _rational_pivots(R.coeff(0), rank)
        else:
            R, pivots = self.rref()
        free = [j for j in range(n) if j not in set(pivots)]
        out = [[fmpq(0)] * (n * len(free)) for _ in range(DEG)]
        coeff_e = [R._c[m].entries() if R._c[m] is not None else None for m in range(DEG)]
        for col, f in enumerate(free):
            out[0][f * len(free) + col] = fmpq(1)
            for i, p in enumerate(pivots):
                for m in range(DEG):
                    e = coeff_e[m]
                    if e is not None:
                        v = e[i * n + f]
                        if v:
                            out[m][p * len(free) + col] = -v
        return ExactMatrix(n, len(free), [fmpq_mat(n, len(free), o) for o in out])

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        if self.is_rational():
            return ExactMatrix.rational(self.coeff(0).inv())
        inv = self.realify().inv()
        e = inv.entries()
        C = DEG * n
        coeffs = [fmpq_mat(n, n, [e[(DEG * i + m) * C + DEG * j] for i in range(n) for j in range(n)]) for m in range(DEG)]
        return ExactMatrix(n, n, coeffs)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, coeffs={self.nonzero_coeffs()})"


def _rational_pivots(R: fmpq_mat, rank: int) -> list[int]:
    e = R.entries()
    c = R.ncols()
    piv = []
    for i in range(rank):
        for j in range(c):
            if e[i * c + j]:
                piv.append(j)
                break
    return piv


def _madd(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def _reduce_mats(p: list) -> list:
    for d in range(len(p) - 1, DEG - 1, -1):
        top = p[d]
        if top is not None:
            p[d - 4] = _madd(p[d - 4], top)
            p[d - 8] = _madd(p[d - 8], -top)
    return p[:DEG]


def kernel(M: ExactMatrix) -> list[list[CycNum]]:
    """Exact basis of the right null space, as a list of vectors."""
    K = M.kernel_basis()
    cols = K.tolist()
    return [[cols[i][j] for i in range(K.rows)] for j in range(K.cols)]


def solve(B: ExactMatrix, V: ExactMatrix) -> ExactMatrix:
    """X with B X = V, for B of full column rank and V inside its column span."""
    d = B.cols
    R, piv = B.hstack(V).rref()
    if piv[:d] != list(range(d)) or len(piv) > d:
        raise ValueError("right-hand side not in the column span, or basis dependent")
    return R.submatrix(range(d), range(d, d + V.cols))


def column_space_basis(M: ExactMatrix) -> ExactMatrix:
    """Canonical basis (rref of the transpose, transposed back)."""
    R, piv = M.T.rref()
    return R.submatrix(range(len(piv)), range(M.rows)).T


def restrict(M: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Matrix of M on the invariant subspace spanned by the columns of B."""
    return solve(B, M @ B)


def simultaneous_eigenspaces(
    maps: Sequence[ExactMatrix],
    candidates: Sequence[CycNum] | None = None,
    check_commute: bool = True,
) -> list[tuple[tuple[int, ...], ExactMatrix]]:
    """Joint eigenspace decomposition of commuting diagonalizable maps.

    Labels are tuples of exponents k with eigenvalue zeta24^k; each component
    is returned as a matrix whose columns span it.  With no candidates given,
    each map's order is computed and only its order-th roots are tried.
    """
    if not maps:
        return []
    n = maps[0].rows
    if check_commute:
        for a in range(len(maps)):
            for b in range(a + 1, len(maps)):
                if maps[a] @ maps[b] != maps[b] @ maps[a]:
                    raise CommutatorNonzero(f"maps {a} and {b} do not commute")
    comps: list[tuple[tuple[int, ...], ExactMatrix]] = [((), ExactMatrix.identity(n))]
    for idx, M in enumerate(maps):
        if candidates is None:
            step = ORDER // M.order()
            cand = [k for k in range(0, ORDER, step)]
        else:
            cand = []
            for c in candidates:
                k = CycNum.coerce(c).root_exponent()
                if k is None:
                    raise EigenvalueOutsideCandidates(f"candidate {c!r} is not a 24th root of unity")
                cand.append(k)
        nxt = []
        for label, B in comps:
            Mr = restrict(M, B)
            d = B.cols
            got = 0
            ident = ExactMatrix.identity(d)
            for k in cand:
                K = (Mr - ident.scale(ROOTS[k])).kernel_basis()
                if K.cols:
                    nxt.append((label + (k,), B @ K))
                    got += K.cols
                    if got == d:
                        break
            if got != d:
                raise EigenvalueOutsideCandidates(f"map {idx} has eigenvalues outside the candidate set")
        comps = nxt
    return comps


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __matmul__(self, o: "IntMatrix") -> "IntMatrix":
        oc = list(zip(*o.entries))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in oc) for r in self.entries))

    def __sub__(self, o: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, o.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.entries))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def row_apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Row vector times matrix."""
        return tuple(sum(v[i] * self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))

    def det(self) -> int:
        return int(fmpq_mat(self.rows, self.cols, [v for r in self.entries for v in r]).det())

    def inverse(self) -> "IntMatrix":
        inv = fmpq_mat(self.rows, self.cols, [v for r in self.entries for v in r]).inv()
        rows = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                v = inv[i, j]
                if v.q != 1:
                    raise ValueError("matrix is not unimodular")
                row.append(int(v.p))
            rows.append(row)
        return IntMatrix.of(rows)

    def order(self, limit: int = 100) -> int:
        ident = IntMatrix.identity(self.rows)
        p = self
        for k in range(1, limit + 1):
            if p == ident:
                return k
            p = p @ self
        raise ValueError("order not found")

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """(S, U, V) with S = U M V diagonal, nonnegative, d_i | d_{i+1}."""
    A = M.tolist()
    m, n = M.rows, M.cols
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A,):
            for r in R:
                r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            rest = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, i, j = min(rest)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p]
            if bad:
                add_row(t, bad[0][0], 1)
                continue
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return IntMatrix.of(A), IntMatrix.of(U), IntMatrix.of(V)


def elementary_divisors(M: IntMatrix) -> list[int]:
    S, _, _ = smith_normal_form(M)
    return [S.entries[i][i] for i in range(min(S.rows, S.cols))]


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """(F^x)^torus_rank x prod Z_{d_i}; for grading groups the free part reads as Z."""

    torus_rank: int
    invariant_factors: tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return self.torus_rank == 0 and not self.invariant_factors

    def order(self) -> int | None:
        if self.torus_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def describe(self, free: str = "F^x") -> str:
        if self.is_trivial():
            return "{1}"
        parts = []
        if self.torus_rank:
            base = f"({free})" if "^" in free else free
            parts.append(free if self.torus_rank == 1 else f"{base}^{self.torus_rank}")
        counts: dict[int, int] = {}
        for d in self.invariant_factors:
            counts[d] = counts.get(d, 0) + 1
        for d in sorted(counts, reverse=True):
            parts.append(f"Z{d}" if counts[d] == 1 else f"Z{d}^{counts[d]}")
        return " x ".join(parts)


def lattice_quotient(relations: Sequence[Sequence[int]], n: int) -> AbelianGroupDescriptor:
    """Structure of Z^n modulo the span of the given row vectors."""
    if not relations:
        return AbelianGroupDescriptor(n, ())
    ds = elementary_divisors(IntMatrix.of(relations))
    nz = [d for d in ds if d]
    return AbelianGroupDescriptor(n - len(nz), tuple(d for d in nz if d > 1))


def multiplicative_kernel_structure(M: IntMatrix) -> AbelianGroupDescriptor:
    """Structure of {t in (F^x)^n : prod_j t_j^{M_ij} = 1 for every row i}."""
    return lattice_quotient(M.tolist(), M.cols)


def multiplicative_kernel_generators(M: IntMatrix) -> list[tuple[int, tuple[int, ...]]]:
    """Generators (d, v) of the solution group: t = c^v with c of order d (d = 0: free c)."""
    S, _, V = smith_normal_form(M)
    n = M.cols
    out = []
    for i in range(n):
        d = S.entries[i][i] if i < min(S.rows, S.cols) else 0
        if d == 1:
            continue
        out.append((d, tuple(V.entries[j][i] for j in range(n))))
    return out
