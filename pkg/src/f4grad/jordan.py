"""The Albert algebra J = H3(C), the subalgebra H3(F), the Tits model on
M3(F)^3, and the automorphisms used to grade them.

Coordinates on J are (alpha, beta, gamma, o1, o2, o3) for the Hermitian
matrix [[alpha, o1, o2], [o1bar, beta, o3], [o2bar, o3bar, gamma]].  With
a^(1): o3 = a, a^(2): o2 = abar, a^(3): o1 = a, these 27 coordinates are
exactly the coefficients on the standard basis B (E1, E2, E3, the eight
x^(3), the eight signed x^(2), the eight x^(1)).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from flint import fmpq, fmpq_mat

from .algcore import AlgebraMap, AlgebraTable, is_automorphism
from .exactmath import I, OMEGA, ROOTS, SQRT3, CycNum, ExactMatrix, restrict, solve
from .octonion import NAMES as ONAMES
from .octonion import Octonion, build_cayley, f0, g2_torus

HALF = Fraction(1, 2)


class NotAutomorphism(ValueError):
    pass


class NotSpecialOrthogonal(ValueError):
    pass


J_NAMES = (
    ["E1", "E2", "E3"]
    + [f"{n}^(3)" for n in ONAMES]
    + ["e2^(2)", "e1^(2)", "-u1^(2)", "-u2^(2)", "-u3^(2)", "-v1^(2)", "-v2^(2)", "-v3^(2)"]
    + [f"{n}^(1)" for n in ONAMES]
)

# o-blocks: o1 -> slots 3..10, o2 -> 11..18, o3 -> 19..26
_BLOCK = {1: 3, 2: 11, 3: 19}


def _zero_oct() -> Octonion:
    return Octonion.of([0] * 8)


def _decode(v: Sequence[CycNum]) -> list[list[Octonion]]:
    """Hermitian octonionic matrix of a coordinate vector."""
    one = Octonion.one()
    a, b, c = (one.scale(v[k]) for k in range(3))
    o = [Octonion(tuple(v[_BLOCK[k]:_BLOCK[k] + 8])) for k in (1, 2, 3)]
    return [
        [a, o[0], o[1]],
        [o[0].conj(), b, o[2]],
        [o[1].conj(), o[2].conj(), c],
    ]


def _encode(X: list[list[Octonion]]) -> list[CycNum]:
    out = []
    for k in range(3):
        d = X[k][k]
        if not d.is_scalar():
            raise ArithmeticError("diagonal entry is not a scalar")
        out.append(d.coeffs[0])
    for (r, s) in ((0, 1), (0, 2), (1, 2)):
        out.extend(X[r][s].coeffs)
    return out


def _matmul(X, Y):
    out = []
    for r in range(3):
        row = []
        for s in range(3):
            acc = _zero_oct()
            for t in range(3):
                acc = acc + X[r][t] * Y[t][s]
            row.append(acc)
        out.append(row)
    return out


def jordan_product_coords(x: Sequence[CycNum], y: Sequence[CycNum]) -> list[CycNum]:
    X, Y = _decode(x), _decode(y)
    P, Q = _matmul(X, Y), _matmul(Y, X)
    S = [[(P[r][s] + Q[r][s]).scale(HALF) for s in range(3)] for r in range(3)]
    return _encode(S)


def _unit(k: int, n: int = 27) -> list[CycNum]:
    return [CycNum.coerce(int(t == k)) for t in range(n)]


@lru_cache(maxsize=None)
def build_albert() -> AlgebraTable:
    def prod(i, j):
        p = jordan_product_coords(_unit(i), _unit(j))
        return {k: v.c[0] for k, v in enumerate(p) if not v.is_zero()}

    return AlgebraTable.from_products(J_NAMES, prod, "commutative-Jordan")


# ---------------------------------------------------------------------------
# elements


def E(i: int) -> ExactMatrix:
    return build_albert().unit_vector(i - 1)


def X(k: int, o: Octonion) -> ExactMatrix:
    """o^(k) as a coordinate column."""
    coords = [CycNum()] * 27
    src = o.conj() if k == 2 else o
    blk = _BLOCK[{1: 3, 2: 2, 3: 1}[k]]
    for t in range(8):
        coords[blk + t] = src.coeffs[t]
    return ExactMatrix.from_rows([[c] for c in coords])


def part(v: ExactMatrix, k: int) -> Octonion:
    """The octonion a with a^(k) the x^(k)-part of v."""
    blk = _BLOCK[{1: 3, 2: 2, 3: 1}[k]]
    o = Octonion(tuple(v[blk + t, 0] for t in range(8)))
    return o.conj() if k == 2 else o


def _oct_names() -> dict[str, Octonion]:
    d = {n: Octonion.basis(n) for n in ONAMES}
    d["one"] = Octonion.one()
    return d


def _octonion_ops():
    # scalar * octonion through __rmul__
    def rmul(self, s):
        return self.scale(s)

    Octonion.__rmul__ = rmul  # type: ignore[attr-defined]


_octonion_ops()


def eval_element(expr: str, extra: dict | None = None) -> ExactMatrix:
    """Evaluate a fixture expression such as "-i*X3(u2+v2) + X2(u2+v2)"."""
    ns = dict(_oct_names())
    ns.update(
        E1=E(1), E2=E(2), E3=E(3),
        X1=lambda o: X(1, o), X2=lambda o: X(2, o), X3=lambda o: X(3, o),
        i=I, w=OMEGA,
    )
    if extra:
        ns.update(extra)
    return eval(expr, {"__builtins__": {}}, ns)  # noqa: S307  (constant fixture strings only)


# ---------------------------------------------------------------------------
# automorphisms


def _map_from_images(images: Callable[[int], ExactMatrix], name: str) -> AlgebraMap:
    J = build_albert()
    cols = [images(k) for k in range(27)]
    M = cols[0]
    for c in cols[1:]:
        M = M.hstack(c)
    return AlgebraMap(J, M, name)


ETA_EXPONENTS = [
    # exponents of (alpha, beta, gamma, delta) for each slot of B
    (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0),
    (1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (-1, -1, -1, 2),
    (0, -1, 0, 0), (0, 0, -1, 0), (1, 1, 1, -2),
    (0, 0, 0, 1), (0, 0, 0, -1), (1, 1, 0, -1), (1, 0, 1, -1), (0, -1, -1, 1),
    (-1, -1, 0, 1), (-1, 0, -1, 1), (0, 1, 1, -1),
    (-1, 0, 0, 1), (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1), (-1, -1, -1, 1),
    (0, -1, 0, 1), (0, 0, -1, 1), (1, 1, 1, -1),
]


def albert_torus(alpha, beta, gamma, delta) -> AlgebraMap:
    vals = [CycNum.coerce(v) for v in (alpha, beta, gamma, delta)]
    if any(v.is_zero() for v in vals):
        raise ValueError("torus parameters must be nonzero")
    diag = []
    for ex in ETA_EXPONENTS:
        d = CycNum.coerce(1)
        for v, e in zip(vals, ex):
            d = d * (v ** e)
        diag.append(d)
    return AlgebraMap(build_albert(), ExactMatrix.diagonal(diag), f"t[{alpha},{beta},{gamma},{delta}]")


def albert_torus_roots(exps: Sequence[int], n: int = 24) -> AlgebraMap:
    """t with coordinates zeta_n^exps."""
    vals = [ROOTS[(e * (24 // n)) % 24] for e in exps]
    return albert_torus(*vals)


def hat_extend(f: AlgebraMap) -> AlgebraMap:
    if f.algebra is not build_cayley() or not is_automorphism(f):
        raise NotAutomorphism(f"{f.name} is not an automorphism of C")
    M = f.matrix

    def img(k):
        if k < 3:
            return build_albert().unit_vector(k)
        blk = (k - 3) // 8 + 1
        kk = {1: 3, 2: 2, 3: 1}[blk]
        src = Octonion.basis(ONAMES[(k - 3) % 8])
        if kk == 2:
            # basis slot holds o2 = basis octonion, i.e. element (conj b)^(2)
            a = src.conj()
        else:
            a = src
        fa = Octonion.from_column(M @ a.column())
        return X(kk, fa)

    return _map_from_images(img, f"hat({f.name})")


def _scalar_matrix(p: Sequence[Sequence]) -> list[list[CycNum]]:
    return [[CycNum.coerce(v) for v in row] for row in p]


def so3_extend(p: Sequence[Sequence], name: str = "In(p)") -> AlgebraMap:
    P = _scalar_matrix(p)
    Pm = ExactMatrix.from_rows(P)
    if Pm @ Pm.T != ExactMatrix.identity(3):
        raise NotSpecialOrthogonal("p p^t != 1")
    det = (P[0][0] * (P[1][1] * P[2][2] - P[1][2] * P[2][1])
           - P[0][1] * (P[1][0] * P[2][2] - P[1][2] * P[2][0])
           + P[0][2] * (P[1][0] * P[2][1] - P[1][1] * P[2][0]))
    if det != 1:
        raise NotSpecialOrthogonal("det p != 1")

    def img(k):
        Xm = _decode(_unit(k))
        out = []
        for r in range(3):
            row = []
            for s in range(3):
                acc = _zero_oct()
                for a in range(3):
                    for b in range(3):
                        c = P[r][a] * P[s][b]
                        if not c.is_zero():
                            acc = acc + Xm[a][b].scale(c)
                row.append(acc)
            out.append(row)
        return ExactMatrix.from_rows([[c] for c in _encode(out)])

    return _map_from_images(img, name)


def p_matrix(alpha, beta) -> list[list[CycNum]]:
    a, b = CycNum.coerce(alpha), CycNum.coerce(beta)
    return [[1, 0, 0], [0, a, b], [0, -b, a]]


def tau(alpha, beta, name: str | None = None) -> AlgebraMap:
    return so3_extend(p_matrix(alpha, beta), name or f"tau[{alpha},{beta}]")


def tau_from_z(z: CycNum) -> AlgebraMap:
    """tau_{alpha,beta} with alpha + i beta = z."""
    zi = z.inverse()
    alpha = (z + zi) * HALF
    beta = (z - zi) / (I * 2)
    return tau(alpha, beta, f"tau[z={z}]")


S_MATRIX = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]


def in_s() -> AlgebraMap:
    return so3_extend(S_MATRIX, "In(s)")


def _permuting_map(perm_E: Sequence[int], perm_x: dict[int, int], name: str) -> AlgebraMap:
    """E_i -> E_perm(i); x^(k) -> x^(perm_x[k])."""

    def img(k):
        if k < 3:
            return E(perm_E[k] + 1)
        blk = (k - 3) // 8
        kk = {0: 3, 1: 2, 2: 1}[blk]
        v = build_albert().unit_vector(k)
        a = part(v, kk)
        return X(perm_x[kk], a)

    return _map_from_images(img, name)


def theta() -> AlgebraMap:
    return _permuting_map([1, 2, 0], {1: 2, 2: 3, 3: 1}, "theta")


def vartheta() -> AlgebraMap:
    """Swap E1, E2 and x^(1), x^(2), fix E3.

    Taken literally (x^(3) fixed, no conjugation) the map is not an
    automorphism; conjugating every octonion part repairs it.
    """

    def img(k):
        if k < 3:
            return E([2, 1, 3][k])
        kk = {0: 3, 1: 2, 2: 1}[(k - 3) // 8]
        a = part(build_albert().unit_vector(k), kk)
        return X({1: 2, 2: 1, 3: 3}[kk], a.conj())

    return _map_from_images(img, "vartheta")


def psi(U: ExactMatrix, U1: ExactMatrix, U2: ExactMatrix) -> AlgebraMap:
    """Psi_U: x^(1) -> U(x)^(1), x^(2) -> U''(x)^(2), x^(3) -> U'(x)^(3)."""
    f = {1: U, 2: U2, 3: U1}

    def img(k):
        if k < 3:
            return E(k + 1)
        blk = (k - 3) // 8
        kk = {0: 3, 1: 2, 2: 1}[blk]
        a = part(build_albert().unit_vector(k), kk)
        return X(kk, Octonion.from_column(f[kk] @ a.column()))

    return _map_from_images(img, "Psi_U")


U_ROWS = [
    [0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
]


# ---------------------------------------------------------------------------
# H3(F)


H3F_NAMES = ["E1", "E2", "E3", "1^(1)", "1^(2)", "1^(3)"]


@lru_cache(maxsize=None)
def h3f_embedding() -> ExactMatrix:
    one = Octonion.one()
    cols = [E(1), E(2), E(3), X(1, one), X(2, one), X(3, one)]
    M = cols[0]
    for c in cols[1:]:
        M = M.hstack(c)
    return M


@lru_cache(maxsize=None)
def build_h3f() -> AlgebraTable:
    J = build_albert()
    B = h3f_embedding()
    left = []
    for a in range(6):
        op = solve(B, J.left_operator(B.column(a)) @ B)
        left.append(op.coeff(0))
    return AlgebraTable(H3F_NAMES, left, "commutative-Jordan")


def to_h3f(v: ExactMatrix) -> ExactMatrix:
    return solve(h3f_embedding(), v)


def restrict_to_h3f(f: AlgebraMap) -> AlgebraMap:
    return AlgebraMap(build_h3f(), restrict(f.matrix, h3f_embedding()), f.name)


def h3f_automorphism_sets() -> dict[str, list[AlgebraMap]]:
    z = ROOTS[3]
    sets = {
        "gr1": [tau_from_z(z)],
        "gr2": [tau(-1, 0)],
        "gr3": [tau(-HALF, SQRT3 * HALF)],
        "gr4": [tau(0, 1)],
        "gr5": [tau(-1, 0), in_s()],
    }
    return {k: [restrict_to_h3f(f) for f in v] for k, v in sets.items()}


def h3f_gradings():
    from .gradings import grading_from_automorphisms

    return [grading_from_automorphisms(build_h3f(), maps, name=k) for k, maps in h3f_automorphism_sets().items()]


# ---------------------------------------------------------------------------
# Tits construction on A = M3(F)


A_NAMES = [f"e{a}{b}" for a in (1, 2, 3) for b in (1, 2, 3)]
TITS_NAMES = [f"{s}.{n}" for s in "abc" for n in A_NAMES]


def _m(x) -> fmpq_mat:
    return x if isinstance(x, fmpq_mat) else fmpq_mat(3, 3, x)


def _tr(x: fmpq_mat) -> fmpq:
    return x[0, 0] + x[1, 1] + x[2, 2]


def _qa(x: fmpq_mat) -> fmpq:
    return (-x[0, 1] * x[1, 0] + x[0, 0] * x[1, 1] - x[0, 2] * x[2, 0]
            - x[1, 2] * x[2, 1] + x[0, 0] * x[2, 2] + x[1, 1] * x[2, 2])


_ID3 = fmpq_mat(3, 3, [1, 0, 0, 0, 1, 0, 0, 0, 1])


def sharp(x: fmpq_mat) -> fmpq_mat:
    return x * x - x * _tr(x) + _ID3 * _qa(x)


def cross(x: fmpq_mat, y: fmpq_mat) -> fmpq_mat:
    return sharp(x + y) - sharp(x) - sharp(y)


def star(x: fmpq_mat) -> fmpq_mat:
    return _ID3 * (_tr(x) / 2) - x * fmpq(1, 2)


def _jdot(x: fmpq_mat, y: fmpq_mat) -> fmpq_mat:
    return (x * y + y * x) * fmpq(1, 2)


def tits_product(p, q):
    a1, b1, c1 = p
    a2, b2, c2 = q
    h = fmpq(1, 2)
    return (
        _jdot(a1, a2) + star(b1 * c2) + star(b2 * c1),
        star(a1) * b2 + star(a2) * b1 + cross(c1, c2) * h,
        c2 * star(a1) + c1 * star(a2) + cross(b1, b2) * h,
    )


def _tits_unit(k: int):
    mats = [fmpq_mat(3, 3) for _ in range(3)]
    mats[k // 9][(k % 9) // 3, k % 3] = 1
    return tuple(mats)


def _tits_coords(t) -> dict[int, fmpq]:
    out = {}
    for s in range(3):
        for r in range(3):
            for c in range(3):
                v = t[s][r, c]
                if v:
                    out[9 * s + 3 * r + c] = v
    return out


@lru_cache(maxsize=None)
def build_tits() -> AlgebraTable:
    return AlgebraTable.from_products(
        TITS_NAMES, lambda i, j: _tits_coords(tits_product(_tits_unit(i), _tits_unit(j))), "commutative-Jordan"
    )


@lru_cache(maxsize=None)
def build_m3() -> AlgebraTable:
    def prod(i, j):
        a, b = divmod(i, 3)
        c, d = divmod(j, 3)
        return {3 * a + d: 1} if b == c else {}

    return AlgebraTable.from_products(A_NAMES, prod, "associative")


def tits_norm(a: fmpq_mat, b: fmpq_mat, c: fmpq_mat) -> fmpq:
    return a.det() + b.det() + c.det() - _tr(a * b * c)


def _det3(m) -> CycNum:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def tits_norm_exact(v: ExactMatrix) -> CycNum:
    """N(a, b, c) for a coordinate column over Q(zeta24)."""
    a, b, c = ([[v[9 * s + 3 * r + q, 0] for q in range(3)] for r in range(3)] for s in range(3))

    def mul(x, y):
        return [[x[r][0] * y[0][q] + x[r][1] * y[1][q] + x[r][2] * y[2][q] for q in range(3)] for r in range(3)]

    abc = mul(mul(a, b), c)
    return _det3(a) + _det3(b) + _det3(c) - (abc[0][0] + abc[1][1] + abc[2][2])


def tits_vector(a, b, c) -> ExactMatrix:
    vals = []
    for m in (a, b, c):
        for r in range(3):
            for s in range(3):
                vals.append(m[r][s] if isinstance(m, list) else m[r, s])
    return ExactMatrix.from_rows([[v] for v in vals])


def generic_norm(T: AlgebraTable, x: ExactMatrix, unit: ExactMatrix) -> tuple[CycNum, CycNum, CycNum]:
    """(Tr, Q, N) from x^3 - Tr x^2 + Q x - N 1 = 0, solved in the span of 1, x, x^2."""
    x2 = T.multiply(x, x)
    x3 = T.multiply(x, x2)
    B = x2.hstack(-x).hstack(unit)
    sol = solve(B, x3)
    return sol[0, 0], sol[1, 0], sol[2, 0]


def inner_m3(p: Sequence[Sequence], name: str) -> AlgebraMap:
    """In(p): x -> p x p^{-1} on A = M3(F)."""
    P = ExactMatrix.from_rows(_scalar_matrix(p))
    Pi = P.inverse()
    cols = []
    for k in range(9):
        Ek = ExactMatrix.from_rows([[int(3 * r + s == k) for s in range(3)] for r in range(3)])
        img = P @ Ek @ Pi
        cols.append(ExactMatrix.from_rows([[img[r, s]] for r in range(3) for s in range(3)]))
    M = cols[0]
    for c in cols[1:]:
        M = M.hstack(c)
    return AlgebraMap(build_m3(), M, name)


def bullet(f: AlgebraMap) -> AlgebraMap:
    """f^bullet(x, y, z) = (f(x), f(y), f(z)) on the Tits algebra."""
    M = f.matrix
    Z = ExactMatrix.zeros(9, 9)
    top = M.hstack(Z).hstack(Z)
    mid = Z.hstack(M).hstack(Z)
    bot = Z.hstack(Z).hstack(M)
    return AlgebraMap(build_tits(), top.vstack(mid).vstack(bot), f"{f.name}*")


def pauli_maps() -> list[AlgebraMap]:
    p = [[1, 0, 0], [0, OMEGA, 0], [0, 0, OMEGA * OMEGA]]
    q = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    return [inner_m3(p, "In(p)"), inner_m3(q, "In(q)")]


def tits_phi() -> AlgebraMap:
    diag = [1] * 9 + [OMEGA] * 9 + [OMEGA * OMEGA] * 9
    return AlgebraMap(build_tits(), ExactMatrix.diagonal(diag), "phi")


def tits_z33_automorphisms() -> list[AlgebraMap]:
    f, g = pauli_maps()
    return [bullet(f), bullet(g), tits_phi()]


def pauli_grading():
    from .gradings import grading_from_automorphisms

    return grading_from_automorphisms(build_m3(), pauli_maps(), name="pauli")


# ---------------------------------------------------------------------------
# fixtures


def _eps(template: str) -> list[tuple[str, str]]:
    return [("1", template.replace("eps", "1")), ("-1", template.replace("eps", "(-1)"))]


def _pm(label: str, spans: Sequence[str]):
    """Expand a label ending in 'e' over eps = +-1 (entries written 000eps)."""
    out = []
    for sign, lab in ((1, "1"), (-1, "-1")):
        sub = [s.replace("eps", str(sign) if sign > 0 else "(-1)") for s in spans]
        out.append((tuple(int(c) for c in label[:-1]) + (sign,), sub))
    return out


def _lab(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


def _fixture_nt1():
    comps = [((0, 0, 0, 0), ["E1", "E2 + E3"])]
    tmpl = {
        "000": ("-i*eps*X3(one) + X2(one)", None),
        "001": ("i*eps*X3(e1 - e2) + X2(e1 - e2)", "X1(-e1 + e2)"),
        "010": ("-i*eps*X3(u2 + v2) - X2(u2 + v2)", "X1(u2 + v2)"),
        "100": ("-i*eps*X3(u1 + v1) - X2(u1 + v1)", "X1(u1 + v1)"),
        "011": ("i*eps*X3(u2 - v2) + X2(u2 - v2)", "X1(u2 - v2)"),
        "110": ("i*eps*X3(u3 - v3) + X2(u3 - v3)", "X1(u3 - v3)"),
        "101": ("i*eps*X3(u1 - v1) + X2(u1 - v1)", "X1(u1 - v1)"),
        "111": ("-i*eps*X3(u3 + v3) - X2(u3 + v3)", "X1(u3 + v3)"),
    }
    for key, (eps_span, zero_span) in tmpl.items():
        comps += _pm(key + "e", [eps_span])
        if zero_span:
            comps.append((_lab(key) + (0,), [zero_span]))
    comps.append(((0, 0, 0, 2), ["-i*(E2 - E3) + X1(one)"]))
    comps.append(((0, 0, 0, -2), ["-i*(E2 - E3) - X1(one)"]))
    return comps


def _table(rows: Sequence[tuple[str, Sequence[str]]]):
    return [(_lab(k), list(v)) for k, v in rows]


FIXTURE_SPECS: dict[str, dict] = {}


def _register(name, algebra, orders, comps, expected_type, group):
    FIXTURE_SPECS[name] = dict(algebra=algebra, orders=tuple(orders), comps=comps, type=tuple(expected_type), group=group)


_register("grad1", "J", (2, 2, 2), _table([
    ("000", ["E1", "E2", "E3", "X3(one)", "X2(one)", "X1(one)"]),
    ("001", ["X3(-e1 + e2)", "X2(-e1 + e2)", "X1(-e1 + e2)"]),
    ("010", ["X3(u2 + v2)", "X2(u2 + v2)", "X1(u2 + v2)"]),
    ("100", ["X3(u1 + v1)", "X2(u1 + v1)", "X1(u1 + v1)"]),
    ("011", ["X3(-u2 + v2)", "X2(-u2 + v2)", "X1(-u2 + v2)"]),
    ("101", ["X3(-u1 + v1)", "X2(-u1 + v1)", "X1(-u1 + v1)"]),
    ("110", ["X3(-u3 + v3)", "X2(-u3 + v3)", "X1(-u3 + v3)"]),
    ("111", ["X3(u3 + v3)", "X2(u3 + v3)", "X1(u3 + v3)"]),
]), (0, 0, 7, 0, 0, 1), "Z2^3")

_register("nt1", "J", (2, 2, 2, 0), _fixture_nt1(), (25, 1), "Z2^3 x Z")

_register("nt2", "J", (2, 2, 2, 2), _table([
    ("0000", ["E1", "E2", "E3", "X1(one)"]),
    ("0001", ["X3(one)", "X2(one)"]),
    ("0010", ["X1(e1 - e2)"]),
    ("0100", ["X1(u2 + v2)"]),
    ("1000", ["X1(u1 + v1)"]),
    ("1100", ["X1(u3 - v3)"]),
    ("1010", ["X1(u1 - v1)"]),
    ("1001", ["X3(u1 + v1)", "X2(u1 + v1)"]),
    ("0110", ["X1(-u2 + v2)"]),
    ("0101", ["X3(u2 + v2)", "X2(u2 + v2)"]),
    ("0011", ["X3(e1 - e2)", "X2(e1 - e2)"]),
    ("1110", ["X1(u3 + v3)"]),
    ("1101", ["X3(u3 - v3)", "X2(u3 - v3)"]),
    ("1011", ["X3(u1 - v1)", "X2(u1 - v1)"]),
    ("0111", ["X3(u2 - v2)", "X2(-u2 + v2)"]),
    ("1111", ["X3(u3 + v3)", "X2(u3 + v3)"]),
]), (7, 8, 0, 1), "Z2^4")

_register("nt3", "J", (2, 2, 2, 3), _table([
    ("0000", ["E1", "E2 + E3"]),
    ("1000", ["X1(u1 + v1)"]),
    ("0100", ["X1(u2 + v2)"]),
    ("0010", ["X1(e1 - e2)"]),
    ("0110", ["X1(u2 - v2)"]),
    ("1010", ["X1(u1 - v1)"]),
    ("1100", ["X1(u3 - v3)"]),
    ("1110", ["X1(u3 + v3)"]),
    ("0001", ["-i*X3(one) + X2(one)", "i*E2 - i*E3 + X1(one)"]),
    ("1001", ["i*X3(u3 + v3) - X2(u3 + v3)"]),
    ("0101", ["i*X3(u2 + v2) + X2(u2 + v2)"]),
    ("0011", ["i*X3(e1 - e2) + X2(e1 - e2)"]),
    ("0111", ["i*X3(u2 - v2) + X2(u2 - v2)"]),
    ("1011", ["i*X3(u1 - v1) + X2(u1 - v1)"]),
    ("1101", ["i*X3(u3 - v3) + X2(u3 - v3)"]),
    ("1111", ["i*X3(u3 + v3) + X2(u3 + v3)"]),
    ("0002", ["i*X3(one) + X2(one)", "i*E2 - i*E3 - X1(one)"]),
    ("1002", ["i*X3(u1 + v1) - X2(u1 + v1)"]),
    ("0102", ["i*X3(u2 + v2) - X2(u2 + v2)"]),
    ("0012", ["-i*X3(e1 - e2) + X2(e1 - e2)"]),
    ("0112", ["i*X3(u2 - v2) - X2(u2 - v2)"]),
    ("1012", ["-i*X3(u1 - v1) + X2(u1 - v1)"]),
    ("1102", ["i*X3(u3 - v3) - X2(u3 - v3)"]),
    ("1112", ["i*X3(u3 + v3) - X2(u3 + v3)"]),
]), (21, 3), "Z2^3 x Z3")

_register("nt4", "J", (2, 2, 2, 4), _table([
    ("0000", ["E1", "E2 + E3"]),
    ("1000", ["X1(u1 + v1)"]),
    ("0100", ["X1(u2 + v2)"]),
    ("0010", ["X1(e1 - e2)"]),
    ("0110", ["X1(u2 - v2)"]),
    ("1010", ["X1(u1 - v1)"]),
    ("1100", ["X1(u3 - v3)"]),
    ("1110", ["X1(u3 + v3)"]),
    ("0001", ["-i*X3(one) + X2(one)"]),
    ("1001", ["i*X3(u1 + v1) + X2(u1 + v1)"]),
    ("0101", ["i*X3(u2 + v2) + X2(u2 + v2)"]),
    ("0011", ["i*X3(e1 - e2) + X2(e1 - e2)"]),
    ("0111", ["i*X3(u2 - v2) + X2(u2 - v2)"]),
    ("1011", ["i*X3(u1 - v1) + X2(u1 - v1)"]),
    ("1101", ["i*X3(u3 - v3) + X2(u3 - v3)"]),
    ("1111", ["i*X3(u3 + v3) + X2(u3 + v3)"]),
    ("0002", ["E3 - E2", "X1(one)"]),
    ("0003", ["i*X3(one) + X2(one)"]),
    ("1003", ["i*X3(u1 + v1) - X2(u1 + v1)"]),
    ("0103", ["i*X3(u2 + v2) - X2(u2 + v2)"]),
    ("0013", ["-i*X3(e1 - e2) + X2(e1 - e2)"]),
    ("0113", ["-i*X3(u2 - v2) + X2(u2 - v2)"]),
    ("1013", ["-i*X3(u1 - v1) + X2(u1 - v1)"]),
    ("1103", ["-i*X3(u3 - v3) + X2(u3 - v3)"]),
    ("1113", ["i*X3(u3 + v3) - X2(u3 + v3)"]),
]), (23, 2), "Z2^3 x Z4")

_register("nt5", "J", (2, 2, 2, 2, 2), _table([
    ("00000", ["E1", "E2 + E3", "X1(one)"]),
    ("00010", ["-X3(one) + X2(one)"]),
    ("00001", ["E3 - E2"]),
    ("10010", ["X3(u1 + v1) + X2(u1 + v1)"]),
    ("10001", ["X1(u1 + v1)"]),
    ("01010", ["X3(u2 + v2) + X2(u2 + v2)"]),
    ("01001", ["X1(u2 + v2)"]),
    ("00110", ["X3(e1 - e2) + X2(e1 - e2)"]),
    ("00101", ["X1(-e1 + e2)"]),
    ("00011", ["X3(one) + X2(one)"]),
    ("00111", ["X3(e2 - e1) + X2(e1 - e2)"]),
    ("01011", ["X3(u2 + v2) - X2(u2 + v2)"]),
    ("01101", ["X1(u2 - v2)"]),
    ("01110", ["X3(u2 - v2) + X2(u2 - v2)"]),
    ("01111", ["X3(-u2 + v2) + X2(u2 - v2)"]),
    ("10011", ["X3(u1 + v1) - X2(u1 + v1)"]),
    ("10101", ["X1(u1 - v1)"]),
    ("10110", ["X3(u1 - v1) + X2(u1 - v1)"]),
    ("10111", ["X3(-u1 + v1) + X2(u1 - v1)"]),
    ("11001", ["X1(u3 - v3)"]),
    ("11010", ["X3(u3 - v3) + X2(u3 - v3)"]),
    ("11011", ["X3(-u3 + v3) + X2(u3 - v3)"]),
    ("11101", ["X1(u3 + v3)"]),
    ("11110", ["X3(-u3 - v3) - X2(u3 + v3)"]),
    ("11111", ["X3(u3 + v3) - X2(u3 + v3)"]),
]), (24, 0, 1), "Z2^5")

_register("coar", "J", (2, 2, 4), _table([
    ("000", ["E1", "E2 + E3", "X1(e2 - e1)"]),
    ("001", ["-i*X3(e1) + X2(e2)", "-i*X3(e2) + X2(e1)"]),
    ("002", ["E3 - E2", "X1(one)"]),
    ("003", ["i*X3(e1) + X2(e2)", "i*X3(e2) + X2(e1)"]),
    ("010", ["X1(u2)", "X1(v2)"]),
    ("011", ["-i*X3(u2) - X2(u2)", "-i*X3(v2) - X2(v2)"]),
    ("013", ["i*X3(u2) - X2(u2)", "i*X3(v2) - X2(v2)"]),
    ("100", ["X1(u1)", "X1(v1)"]),
    ("101", ["-i*X3(u1) - X2(u1)", "-i*X3(v1) - X2(v1)"]),
    ("103", ["i*X3(u1) - X2(u1)", "i*X3(v1) - X2(v1)"]),
    ("110", ["X1(u3)", "X1(v3)"]),
    ("111", ["-i*X3(u3) - X2(u3)", "-i*X3(v3) - X2(v3)"]),
    ("113", ["i*X3(u3) - X2(u3)", "i*X3(v3) - X2(v3)"]),
]), (0, 12, 1), "Z2^2 x Z4")

_register("ztrescubo", "J", (3, 3, 3), _table([
    ("000", ["E1 + E2 + E3"]),
    ("001", ["w*E1 + w**2*E2 + E3"]),
    ("002", ["w**2*E1 + w*E2 + E3"]),
    ("010", ["X3(u3) + X2(e1) + X1(v3)"]),
    ("011", ["w**2*X3(u3) + w*X2(e1) + X1(v3)"]),
    ("012", ["w*X3(u3) + w**2*X2(e1) + X1(v3)"]),
    ("020", ["X3(v3) - X2(e2) + X1(u3)"]),
    ("021", ["w**2*X3(v3) - w*X2(e2) + X1(u3)"]),
    ("022", ["w*X3(v3) - w**2*X2(e2) + X1(u3)"]),
    ("100", ["-X3(v2) - X2(u2) + X1(e1)"]),
    ("101", ["-w**2*X3(v2) - w*X2(u2) + X1(e1)"]),
    ("102", ["-w*X3(v2) - w**2*X2(u2) + X1(e1)"]),
    ("110", ["X3(e2) - X2(u1) + X2(v1)"]),
    ("111", ["w**2*X3(e2) - w*X2(u1) + X1(v1)"]),
    ("112", ["w*X3(e2) - w**2*X2(u1) + X1(v1)"]),
    ("120", ["X3(v1) + X2(v3) + X1(v2)"]),
    ("121", ["w**2*X3(v1) + w*X2(v3) + X1(v2)"]),
    ("122", ["w*X3(v1) + w**2*X2(v3) + X1(v2)"]),
    ("200", ["X3(u2) + X2(v2) + X1(e2)"]),
    ("201", ["w**2*X3(u2) + w*X2(v2) + X1(e2)"]),
    ("202", ["w*X3(u2) + w**2*X2(v2) + X1(e2)"]),
    ("210", ["X3(u1) + X2(u3) + X1(u2)"]),
    ("211", ["w**2*X3(u1) + w*X2(u3) + X1(u2)"]),
    ("212", ["w*X3(u1) + w**2*X2(u3) + X1(u2)"]),
    ("220", ["-X3(e1) - X2(v1) + X1(u1)"]),
    ("221", ["-w**2*X3(e1) - w*X2(v1) + X1(u1)"]),
    ("222", ["-w*X3(e1) - w**2*X2(v1) + X1(u1)"]),
]), (27,), "Z3^3")

# H3(F) gradings, written in J coordinates; labels are exponents of z
_register("gr1", "H3F", (0,), [
    ((0,), ["E1", "E2 + E3"]),
    ((1,), ["-i*X3(one) + X2(one)"]),
    ((-1,), ["i*X3(one) + X2(one)"]),
    ((2,), ["-i*E2 + i*E3 + X1(one)"]),
    ((-2,), ["i*E2 - i*E3 + X1(one)"]),
], (4, 1), "Z")
_register("gr2", "H3F", (2,), _table([
    ("0", ["E1", "E2", "E3", "X1(one)"]),
    ("1", ["X2(one)", "X3(one)"]),
]), (0, 1, 0, 1), "Z2")
_register("gr3", "H3F", (3,), _table([
    ("0", ["E1", "E2 + E3"]),
    ("1", ["X2(one) - i*X3(one)", "i*E2 - i*E3 + X1(one)"]),
    ("2", ["X2(one) + i*X3(one)", "-i*E2 + i*E3 + X1(one)"]),
]), (0, 3), "Z3")
_register("gr4", "H3F", (4,), _table([
    ("0", ["E1", "E2 + E3"]),
    ("1", ["-i*X3(one) + X2(one)"]),
    ("3", ["i*X3(one) + X2(one)"]),
    ("2", ["E2 - E3", "X1(one)"]),
]), (2, 2), "Z4")
_register("gr5", "H3F", (2, 2), _table([
    ("00", ["E1", "E2 + E3", "X1(one)"]),
    ("01", ["X2(one) - X3(one)"]),
    ("10", ["E2 - E3"]),
    ("11", ["X2(one) + X3(one)"]),
]), (3, 0, 1), "Z2^2")
_register("gr5-normal", "H3F", (2, 2), _table([
    ("00", ["E1", "E2", "E3"]),
    ("01", ["X1(one)"]),
    ("10", ["X2(one)"]),
    ("11", ["X3(one)"]),
]), (3, 0, 1), "Z2^2")

PAULI_FIXTURE = _table([
    ("00", ["e11 + e22 + e33"]),
    ("01", ["w**2*e11 - w*e22 + e33"]),
    ("02", ["-w*e11 + w**2*e22 + e33"]),
    ("10", ["e13 + e21 + e32"]),
    ("11", ["w**2*e13 - w*e21 + e32"]),
    ("12", ["-w*e13 + w**2*e21 + e32"]),
    ("20", ["e12 + e23 + e31"]),
    ("21", ["w**2*e12 - w*e23 + e31"]),
    ("22", ["-w*e12 + w**2*e23 + e31"]),
])


def eval_m3(expr: str) -> ExactMatrix:
    A = build_m3()
    ns = {n: A.unit_vector(k) for k, n in enumerate(A_NAMES)}
    ns["w"] = OMEGA
    return eval(expr, {"__builtins__": {}}, ns)  # noqa: S307


def albert_automorphism_sets() -> dict[str, list[AlgebraMap]]:
    """Constructive generating sets for the eight nontoral Albert gradings."""
    base = [hat_extend(g2_torus(1, -1)), hat_extend(g2_torus(-1, 1)), hat_extend(f0())]
    z8 = ROOTS[3]
    return {
        "grad1": base,
        "nt1": base + [tau_from_z(z8)],
        "nt2": base + [tau(-1, 0)],
        "nt3": base + [tau(-HALF, SQRT3 * HALF)],
        "nt4": base + [tau(0, 1)],
        "nt5": base + [tau(-1, 0), in_s()],
        "coar": base[:2] + [tau(0, 1)],
        "ztrescubo": ztrescubo_automorphisms(),
    }


@lru_cache(maxsize=None)
def ztrescubo_triality():
    """Monomial triality partners of the printed U, or None."""
    from .octonion import monomial_triality

    U = ExactMatrix.from_rows(U_ROWS)
    return monomial_triality(U)


def ztrescubo_phi() -> AlgebraMap | None:
    found = ztrescubo_triality()
    if found is None:
        return None
    U = ExactMatrix.from_rows(U_ROWS)
    return theta().compose(psi(U, *found), "theta*Psi_U")


def _commute(f: AlgebraMap, g: AlgebraMap) -> bool:
    return f.matrix @ g.matrix == g.matrix @ f.matrix


def diagonal_on_fixture(vectors: Sequence[ExactMatrix], exponents: Sequence[int], name: str) -> AlgebraMap:
    """The map with eigenvector vectors[k] and eigenvalue zeta24^exponents[k]."""
    P = vectors[0]
    for v in vectors[1:]:
        P = P.hstack(v)
    D = ExactMatrix.diagonal([ROOTS[e % 24] for e in exponents])
    return AlgebraMap(build_albert(), P @ D @ P.inverse(), name)


@lru_cache(maxsize=None)
def ztrescubo_construction() -> dict:
    """Generators for the Z3^3 grading and a record of how the third was obtained."""
    w = OMEGA
    t1 = albert_torus(w * w, w * w, w * w, 1)
    t2 = albert_torus(w * w, w, 1, w * w)
    info: dict = {"triality_found": ztrescubo_triality() is not None}
    phi = ztrescubo_phi()
    if phi is not None:
        info["phi_is_automorphism"] = is_automorphism(phi)
        info["phi_commutes"] = _commute(phi, t1) and _commute(phi, t2)
        if info["phi_is_automorphism"] and info["phi_commutes"]:
            info["route"] = "theta*Psi_U"
            info["maps"] = [t1, t2, phi]
            return info
    from .gradings import corrected_fixture

    comps, errata = corrected_fixture("ztrescubo")
    vecs, exps = [], []
    for lab, exprs in comps:
        for e in exprs:
            vecs.append(eval_element(e))
            exps.append(8 * lab[2])
    diag = diagonal_on_fixture(vecs, exps, "phi(fixture)")
    if not is_automorphism(diag):
        raise NotAutomorphism("diagonal-on-fixture map is not an automorphism")
    info["route"] = "diagonal-on-fixture"
    info["errata"] = errata
    info["maps"] = [t1, t2, diag]
    return info


def ztrescubo_automorphisms() -> list[AlgebraMap]:
    return ztrescubo_construction()["maps"]
