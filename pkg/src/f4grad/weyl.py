"""The Weyl group W(F4): enumeration, classes, torus action and lifts to Aut(f4)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algcore import AlgebraMap, is_automorphism
from .exactmath import (
    AbelianGroupDescriptor,
    ExactMatrix,
    IntMatrix,
    UnsupportedOrder,
    multiplicative_kernel_generators,
    multiplicative_kernel_structure,
)
from .f4lie import POSITIVE_ROOTS, build_f4_basis, f4_algebra, t_prime


class PropagationInconsistency(RuntimeError):
    pass


S1 = ((-1, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
S2 = ((1, 1, 0, 0), (0, -1, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1))
S3 = ((1, 0, 0, 0), (0, 1, 2, 0), (0, 0, -1, 0), (0, 0, 1, 1))
S4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (0, 0, 0, -1))
GENERATORS = (S1, S2, S3, S4)

M_MATRIX = ((0, 0, 0, 1), (-1, -1, -2, -1), (1, 2, 2, 1), (0, 0, -1, 0))

REPRESENTATIVES = (1, 2, 3, 4, 7, 8, 9, 10, 14, 15, 28, 30, 42, 55, 56, 78, 103,
                   104, 105, 106, 110, 114, 142, 405, 748)

Mat = tuple[tuple[int, ...], ...]


def _mul(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)) for i in range(4))


IDENTITY: Mat = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def _order(a: Mat) -> int:
    p, k = a, 1
    while p != IDENTITY:
        p = _mul(p, a)
        k += 1
    return k


@dataclass(frozen=True)
class WeylElement:
    matrix: Mat
    index: int

    @property
    def order(self) -> int:
        return _order(self.matrix)

    def act_on_root(self, r: Sequence[int]) -> tuple[int, ...]:
        """Row-vector action: sigma(alpha_i) is row i of the matrix."""
        return tuple(sum(r[i] * self.matrix[i][j] for i in range(4)) for j in range(4))


CACHE_VERSION = "weyl-f4-v1"


def _cache_path():
    import os
    from pathlib import Path

    d = os.environ.get("GRADINGS_CACHE_DIR")
    return Path(d) / f"{CACHE_VERSION}.txt" if d else None


def _read_cache() -> list[Mat] | None:
    path = _cache_path()
    if path is None or not path.exists():
        return None
    lines = path.read_text().split("\n")
    if lines[0] != CACHE_VERSION:
        return None
    out = []
    for line in lines[1:]:
        if line.strip():
            v = [int(x) for x in line.split()]
            out.append(tuple(tuple(v[4 * r:4 * r + 4]) for r in range(4)))
    return out if len(out) == 1152 else None


def _write_cache(mats: list[Mat]) -> None:
    path = _cache_path()
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    body = "\n".join(" ".join(str(v) for row in m for v in row) for m in mats)
    path.write_text(f"{CACHE_VERSION}\n{body}\n")


@lru_cache(maxsize=None)
def generate_weyl() -> list[WeylElement]:
    """All 1152 elements, sorted lexicographically by their row-major entries, 1-indexed."""
    cached = _read_cache()
    if cached is not None:
        return [WeylElement(m, k + 1) for k, m in enumerate(cached)]
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for s in GENERATORS:
                for h in (_mul(g, s), _mul(s, g)):
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
        frontier = nxt
    ordered = sorted(seen, key=lambda m: tuple(v for row in m for v in row))
    _write_cache(ordered)
    return [WeylElement(m, k + 1) for k, m in enumerate(ordered)]


@lru_cache(maxsize=None)
def _index() -> dict[Mat, int]:
    return {w.matrix: w.index for w in generate_weyl()}


def sigma(j: int) -> WeylElement:
    return generate_weyl()[j - 1]


def index_of(m: Mat) -> int:
    return _index()[tuple(tuple(r) for r in m)]


def inverse_index(j: int) -> int:
    m = sigma(j).matrix
    return next(w.index for w in generate_weyl() if _mul(w.matrix, m) == IDENTITY)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    size: int
    order: int
    members: tuple[int, ...]


@lru_cache(maxsize=None)
def conjugacy_classes() -> list[ConjugacyClass]:
    W = generate_weyl()
    idx = _index()
    done: set[Mat] = set()
    out = []
    for w in W:
        if w.matrix in done:
            continue
        orbit = {w.matrix}
        frontier = [w.matrix]
        while frontier:
            nxt = []
            for g in frontier:
                for s in GENERATORS:  # simple reflections are involutions
                    h = _mul(_mul(s, g), s)
                    if h not in orbit:
                        orbit.add(h)
                        nxt.append(h)
            frontier = nxt
        done |= orbit
        members = tuple(sorted(idx[m] for m in orbit))
        out.append(ConjugacyClass(members[0], len(members), w.order, members))
    out.sort(key=lambda c: c.representative)
    return out


def order_statistics() -> dict[int, tuple[int, int]]:
    """order -> (number of elements, number of classes)."""
    stats: dict[int, list[int]] = {}
    for c in conjugacy_classes():
        s = stats.setdefault(c.order, [0, 0])
        s[0] += c.size
        s[1] += 1
    return {k: (v[0], v[1]) for k, v in sorted(stats.items())}


# ---------------------------------------------------------------------------
# torus action


@lru_cache(maxsize=None)
def torus_matrix(j: int) -> IntMatrix:
    """B = m sigma_j m^{-1}; sigma . t'_{xyzu} has exponents B (a, b, c, d)^t."""
    m = IntMatrix.of(M_MATRIX)
    return m @ IntMatrix.of(sigma(j).matrix) @ m.inverse()


def torus_action(j: int, exps: Sequence[int], n: int = 24) -> tuple[int, ...]:
    """Exponents (mod n) of sigma_j . t for t = zeta_n^exps."""
    return tuple(v % n if n else v for v in torus_matrix(j).apply(exps))


def fixed_subgroup_structure(j: int) -> AbelianGroupDescriptor:
    return multiplicative_kernel_structure(torus_matrix(j) - IntMatrix.identity(4))


def fixed_subgroup_generators(j: int) -> list[tuple[int, tuple[int, ...]]]:
    return multiplicative_kernel_generators(torus_matrix(j) - IntMatrix.identity(4))


TABLON = {
    1: (1, (2,)), 2: (0, (2,)), 3: (0, (4, 2)), 4: (1, ()), 7: (2, ()), 8: (1, ()),
    9: (1, ()), 10: (0, ()), 14: (0, (2, 2)), 15: (0, (3, 3)), 28: (2, ()), 30: (1, ()),
    42: (1, (2, 2)), 55: (3, ()), 56: (2, ()), 78: (0, ()), 103: (2, (2,)), 104: (1, (2,)),
    105: (1, (2, 2)), 106: (0, (2, 2)), 110: (0, (2, 2)), 114: (2, ()), 142: (3, ()),
    405: (0, (2, 2, 2, 2)), 748: (4, ()),
}


def stabilizer_indices(points: Sequence[Sequence[int]] = (), cocharacters: Sequence[Sequence[int]] = (),
                       n: int = 24) -> set[int]:
    """Indices i with sigma_i . t = t for all the given torus points.

    ``points`` are exponent vectors of zeta_n; ``cocharacters`` stand for
    one-parameter families u -> u^lambda with u generic, fixed iff B lambda = lambda.
    """
    out = set()
    for w in generate_weyl():
        B = torus_matrix(w.index)
        ok = all(tuple((a - b) % n for a, b in zip(B.apply(p), p)) == (0,) * 4 for p in points)
        ok = ok and all(B.apply(c) == tuple(c) for c in cocharacters)
        if ok:
            out.add(w.index)
    return out


# ---------------------------------------------------------------------------
# lifts to Aut(f4)


def _root_index() -> dict[tuple[int, ...], int]:
    B = build_f4_basis()
    return {r: 4 + k for k, r in enumerate(B.roots)}


def _unit(k: int) -> ExactMatrix:
    return f4_algebra().unit_vector(k)


def _bracket(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return f4_algebra().multiply(x, y)


def _coefficient(v: ExactMatrix, k: int):
    c = v[k, 0]
    if c.is_zero():
        raise PropagationInconsistency("vanishing structure constant")
    return c


def _normalized_partner(x: ExactMatrix, neg_index: int) -> ExactMatrix:
    """c v_{-alpha} with [[x, c v], x] = 2x."""
    y = _unit(neg_index)
    t = _bracket(_bracket(x, y), x)
    # t = lam x; find lam from any nonzero coordinate of x
    for r in range(x.rows):
        if not x[r, 0].is_zero():
            lam = t[r, 0] / x[r, 0]
            break
    if lam.is_zero():
        raise PropagationInconsistency("degenerate sl2 triple")
    return y.scale(2 / lam)


def _add(a, b):
    return tuple(p + q for p, q in zip(a, b))


def _sub(a, b):
    return tuple(p - q for p, q in zip(a, b))


_SIMPLE = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


@lru_cache(maxsize=None)
def extend_to_automorphism(j: int) -> AlgebraMap:
    """The lift sigma~_j, normalised so that sigma~ t'(e) sigma~^-1 = t'(B_j e).

    With roots acted on as rows, that relation holds for the lift sending
    x_{alpha_i} to v_{w(alpha_i)} with w = sigma_j^-1.
    """
    f = propagate_lift(inverse_index(j))
    return AlgebraMap(f.algebra, f.matrix, f"sigma~{j}")


@lru_cache(maxsize=None)
def propagate_lift(j: int) -> AlgebraMap:
    """Automorphism with x_{alpha_i} -> v_{sigma_j(alpha_i)}, extended through brackets."""
    w = sigma(j)
    ridx = _root_index()
    pos = sorted(POSITIVE_ROOTS, key=lambda r: (sum(r), r))
    posset = set(pos)
    img: dict[int, ExactMatrix] = {}
    xs, ys, Xs, Ys = [], [], [], []
    for a in _SIMPLE:
        neg = tuple(-v for v in a)
        x = _unit(ridx[a])
        y = _normalized_partner(x, ridx[neg])
        sa = w.act_on_root(a)
        X = _unit(ridx[sa])
        Y = _normalized_partner(X, ridx[tuple(-v for v in sa)])
        xs.append(x), ys.append(y), Xs.append(X), Ys.append(Y)
        img[ridx[a]] = X
        # y = c v_{-a}
        c = _coefficient(y, ridx[neg])
        img[ridx[neg]] = Ys[-1].scale(1 / c)
    for r in pos:
        if r in _SIMPLE:
            continue
        i = next(i for i in range(4) if _sub(r, _SIMPLE[i]) in posset)
        lower = _sub(r, _SIMPLE[i])
        br = _bracket(_unit(ridx[lower]), xs[i])
        c0 = _coefficient(br, ridx[r])
        img[ridx[r]] = _bracket(img[ridx[lower]], Xs[i]).scale(1 / c0)
        nl, nr = tuple(-v for v in lower), tuple(-v for v in r)
        br = _bracket(_unit(ridx[nl]), ys[i])
        c1 = _coefficient(br, ridx[nr])
        img[ridx[nr]] = _bracket(img[ridx[nl]], Ys[i]).scale(1 / c1)
    # Cartan part through h_i' = [x_i, y_i]
    H = _bracket(xs[0], ys[0])
    Himg = _bracket(Xs[0], Ys[0])
    for i in range(1, 4):
        H = H.hstack(_bracket(xs[i], ys[i]))
        Himg = Himg.hstack(_bracket(Xs[i], Ys[i]))
    Hc = H.submatrix(range(4), range(4))
    coeffs = Hc.inverse()  # column k: h_k in terms of the h_i'
    for k in range(4):
        v = Himg @ coeffs.column(k)
        img[k] = v
    M = img[0]
    for k in range(1, 52):
        M = M.hstack(img[k])
    f = AlgebraMap(f4_algebra(), M, f"lift({j})")
    if not is_automorphism(f):
        raise PropagationInconsistency(f"lift of sigma_{j} is not an automorphism")
    return f


def lift_is_monomial(f: AlgebraMap) -> bool:
    M = f.matrix
    for r in range(4, 52):
        if sum(not M[r, c].is_zero() for c in range(4, 52)) != 1:
            return False
        if any(not M[r, c].is_zero() for c in range(4)):
            return False
    for c in range(4, 52):
        if sum(not M[r, c].is_zero() for r in range(4, 52)) != 1:
            return False
    return True


def cartan_block(f: AlgebraMap) -> list[list]:
    return [[f.matrix[r, c] for c in range(4)] for r in range(4)]


# ---------------------------------------------------------------------------
# quasitori A(j, t)

SURROGATE_ORDERS = (8, 12, 24)


def _spread(v: Sequence[int]) -> int:
    from .f4lie import torus_exponent_vectors

    vals = [sum(a * b for a, b in zip(e, v)) for e in torus_exponent_vectors()]
    return max(vals) - min(vals)


def surrogate_order(v: Sequence[int]) -> int:
    """Smallest allowed n with all eigenvalue exponents of t'_{c^v} separated mod n."""
    s = _spread(v)
    for n in SURROGATE_ORDERS:
        if s < n:
            return n
    raise UnsupportedOrder(f"spread {s} needs a surrogate of order above 24")


@dataclass
class QuasitorusSpec:
    weyl_index: int
    torus_generators: list[AlgebraMap]
    lifted: AlgebraMap
    surrogate: tuple[int, tuple[int, ...]] | None = None

    @property
    def maps(self) -> list[AlgebraMap]:
        return [self.lifted] + self.torus_generators


def torus_generator_maps(j: int) -> tuple[list[AlgebraMap], tuple[int, tuple[int, ...]] | None]:
    out, sur = [], None
    for d, v in fixed_subgroup_generators(j):
        if d == 0:
            n = surrogate_order(v)
            out.append(t_prime(v, n, f"t'(zeta{n}^{v})"))
            sur = (n, v)
            continue
        if 24 % d:
            raise UnsupportedOrder(f"order {d} does not divide 24")
        out.append(t_prime(v, d, f"t'(zeta{d}^{v})"))
    return out, sur


def quasitorus_A(j: int, t: Sequence[int] | None = None) -> QuasitorusSpec:
    """Generators of A(j, t); t given as zeta24 exponents (None for the identity)."""
    gens, sur = torus_generator_maps(j)
    lift = extend_to_automorphism(j)
    if t is not None and any(t):
        lift = lift.compose(t_prime(t), f"sigma~{j} t'{tuple(t)}")
    return QuasitorusSpec(j, gens, lift, sur)


def commute(f: AlgebraMap, g: AlgebraMap) -> bool:
    return f.matrix @ g.matrix == g.matrix @ f.matrix


def psi_in_torus_normalizer(g2: AlgebraMap, g3: AlgebraMap) -> bool:
    """Whether an element of N(T) could send g2 to g3.

    N(T) maps the diagonal group onto itself, so g2 (diagonal) can only go to
    a diagonal map; False whenever g3 is not diagonal.
    """
    M = g3.matrix
    return all(M[r, c].is_zero() for r in range(52) for c in range(52) if r != c)


# ---------------------------------------------------------------------------
# the quasitori in the classification rows


def main_generators() -> dict[str, AlgebraMap]:
    """g1 = t'(-1,1,-1,1), g2 = t'(1,-1,-1,1), g3 = sigma~105, g4 = t'(1,1,1,-1)."""
    return {
        "g1": t_prime((12, 0, 12, 0), name="g1"),
        "g2": t_prime((0, 12, 12, 0), name="g2"),
        "g3": extend_to_automorphism(105),
        "g4": t_prime((0, 0, 0, 12), name="g4"),
    }


# name -> (group description, type); free factors use a surrogate root of unity
MAIN_ROWS = {
    "I": ("Z3^3", (0, 26)),
    "II": ("Z2^3 x Z", (31, 0, 7)),
    "II.1": ("Z2^3", (0, 0, 1, 0, 0, 0, 7)),
    "II.2": ("Z2^4", (1, 8, 0, 0, 7)),
    "II.3.1": ("Z2^3 x Z3", (3, 14, 7)),
    "II.3.2": ("Z2^3 x Z4", (17, 7, 7)),
    "II.4.1": ("Z2^2 x Z4", (0, 8, 2, 0, 6)),
    "II.4.2": ("Z2^2 x Z8", (19, 6, 7)),
    "III": ("Z2^5", (24, 0, 0, 7)),
}


def main_row_maps(row: str) -> list[AlgebraMap]:
    g = main_generators()
    base = [g["g3"], g["g1"], g["g2"]]
    if row == "I":
        return quasitorus_A(15).maps
    if row == "III":
        return quasitorus_A(405).maps
    if row == "II":
        n = surrogate_order((0, 0, 0, 1))
        return base + [t_prime((0, 0, 0, 1), n, f"t'(1,1,1,zeta{n})")]
    if row == "II.1":
        return base
    if row == "II.2":
        return base + [g["g4"]]
    if row == "II.3.1":
        return base + [t_prime((0, 0, 0, 8), name="t'(1,1,1,w)")]
    if row == "II.3.2":
        return base + [t_prime((0, 0, 0, 6), name="t'(1,1,1,i)")]
    if row in ("II.4.1", "II.4.2"):
        e = 6 if row == "II.4.1" else 3
        rho = t_prime((0, 0, 0, e), name=f"t'(1,1,1,zeta24^{e})")
        return [g["g1"], g["g2"], g["g3"].compose(rho, "g3*rho")]
    raise KeyError(row)


# f -> images of (g1, g2, g3) under conjugation, as words in g1..g4
APPENDIX_ROWS = {
    94: (("g1", "g2"), ("g2", "g4"), ("g3",)),
    103: (("g1", "g4"), ("g2",), ("g3",)),
    468: (("g2",), ("g1",), ("g3",)),
    485: (("g2",), ("g1",), ("g3", "g4")),
    491: (("g1", "g2"), ("g1", "g4"), ("g3", "g4")),
}


def _word(g: dict[str, AlgebraMap], w: Sequence[str]) -> ExactMatrix:
    M = g[w[0]].matrix
    for s in w[1:]:
        M = M @ g[s].matrix
    return M


def _diag_exponents(M: ExactMatrix) -> list[int] | None:
    out = []
    for r in range(M.rows):
        for c in range(M.cols):
            if r != c and not M[r, c].is_zero():
                return None
        k = M[r, r].root_exponent()
        if k is None:
            return None
        out.append(k)
    return out


def _torus_solutions(ks: Sequence[int]) -> set[tuple[int, ...]]:
    """x in (Z/24)^4 with t'(zeta24^x) = diag(zeta24^ks)."""
    from itertools import product

    from .f4lie import torus_exponent_vectors

    vecs = torus_exponent_vectors()
    ridx = _root_index()
    simple = [vecs[ridx[a]] for a in _SIMPLE]
    ks_s = [ks[ridx[a]] for a in _SIMPLE]
    out = set()
    for x in product(range(24), repeat=4):
        if all(sum(p * q for p, q in zip(v, x)) % 24 == k for v, k in zip(simple, ks_s)):
            if all(sum(p * q for p, q in zip(v, x)) % 24 == k for v, k in zip(vecs, ks)):
                out.add(x)
    return out


@lru_cache(maxsize=None)
def appendix_lift(j: int, row: int | None = None) -> tuple[AlgebraMap | None, dict]:
    """A lift f of sigma_j realising the tabulated images of g1, g2, g3.

    Candidates are sigma~_j t'(e) with e in (Z/24)^4; t'(e) does not change
    the images of g1, g2 and moves the image of g3 by t'(B_j (I - B_105) e).
    """
    from itertools import product

    g = main_generators()
    targets = [_word(g, w) for w in APPENDIX_ROWS[row or j]]
    report: dict = {"j": j, "row": row or j, "fixes_t_1_1_1_u": torus_matrix(j).apply((0, 0, 0, 1)) == (0, 0, 0, 1)}
    K = IntMatrix.identity(4) - torus_matrix(105)
    F = extend_to_automorphism(j)
    Fi = F.inverse()
    imgs = [F.matrix @ g[k].matrix @ Fi.matrix for k in ("g1", "g2", "g3")]
    report["torus_images"] = [imgs[0] == targets[0], imgs[1] == targets[1]]
    if all(report["torus_images"]):
        ks = _diag_exponents(targets[2] @ imgs[2].inverse())
        xs = _torus_solutions(ks) if ks is not None else set()
        M = torus_matrix(j) @ K
        for e in product(range(24), repeat=4):
            if tuple(v % 24 for v in M.apply(e)) in xs:
                f = F.compose(t_prime(e), f"sigma~{j} t'{e}")
                fi = f.inverse()
                ok = all(f.matrix @ g[k].matrix @ fi.matrix == T
                         for k, T in zip(("g1", "g2", "g3"), targets))
                if ok:
                    report.update(torus=e, ok=report["fixes_t_1_1_1_u"])
                    return f, report
    report.update(torus=None, ok=False)
    return None, report


def appendix_check(j: int) -> dict:
    return appendix_lift(j)[1]


def appendix_realisers(row: int) -> list[int]:
    """All j for which some lift of sigma_j realises the tabulated row."""
    m = lambda v: tuple(x % 24 for x in v)
    g_exps = {"g1": (12, 0, 12, 0), "g2": (0, 12, 12, 0), "g4": (0, 0, 0, 12)}
    want = [m(map(sum, zip(*(g_exps[k] for k in w)))) for w in APPENDIX_ROWS[row][:2]]
    out = []
    for w in generate_weyl():
        B = torus_matrix(w.index)
        if B.apply((0, 0, 0, 1)) != (0, 0, 0, 1):
            continue
        if [m(B.apply(g_exps["g1"])), m(B.apply(g_exps["g2"]))] != want:
            continue
        if appendix_lift(w.index, row)[1]["ok"]:
            out.append(w.index)
    return out


def lemma_power_check(j: int, samples: int = 10, seed: int = 0) -> bool:
    """(sigma~_j t)^m = sigma~_j^m for t in the finite group T^{sigma_j}, m = order(sigma_j)."""
    import random

    rng = random.Random(seed)
    gens = fixed_subgroup_generators(j)
    if any(d == 0 for d, _ in gens):
        raise ValueError("T^sigma is not finite")
    f = extend_to_automorphism(j)
    m = sigma(j).order
    target = f.matrix.power(m)
    for _ in range(samples):
        e = [0, 0, 0, 0]
        for d, v in gens:
            k = rng.randrange(d) * (24 // d)
            e = [a + k * b for a, b in zip(e, v)]
        t = t_prime(tuple(x % 24 for x in e))
        if (f.matrix @ t.matrix).power(m) != target:
            return False
    return True


def two_generator_pairs(count: int = 20, seed: int = 0) -> list[tuple[AlgebraMap, AlgebraMap]]:
    """Deterministic commuting pairs (sigma~_j t'(a), t'(b)) with b fixed by sigma_j."""
    import random

    rng = random.Random(seed)
    out = []
    js = list(REPRESENTATIVES)
    while len(out) < count:
        j = js[len(out) % len(js)]
        b = [0, 0, 0, 0]
        for d, v in fixed_subgroup_generators(j):
            step = rng.randrange(24) if d == 0 else rng.randrange(d) * (24 // d) if 24 % d == 0 else 0
            b = [p + step * q for p, q in zip(b, v)]
        a = tuple(rng.randrange(0, 24, 6) for _ in range(4))
        f = extend_to_automorphism(j).compose(t_prime(a), f"sigma~{j} t'{a}")
        g = t_prime(tuple(x % 24 for x in b))
        if not commute(f, g):
            raise PropagationInconsistency(f"pair for sigma_{j} does not commute")
        out.append((f, g))
    return out
