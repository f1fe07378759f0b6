"""Acceptance sweep shared by the command line and the test suite.

Every check returns a CheckResult; ``ok`` is False whenever any row differs
from the expected data, and ``rows`` carries one human-readable line per row.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable


@dataclass
class CheckResult:
    name: str
    title: str
    ok: bool
    rows: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}: {self.title} ({self.seconds:.1f}s)"


def _row(ok: bool, text: str) -> str:
    return f"  {'ok ' if ok else 'BAD'} {text}"


# ---------------------------------------------------------------------------
# shared gradings


@lru_cache(maxsize=None)
def a_grading(j: int):
    from .f4lie import f4_algebra
    from .gradings import grading_from_automorphisms
    from .weyl import quasitorus_A

    return grading_from_automorphisms(f4_algebra(), quasitorus_A(j).maps, f"A{j}", "f4")


@lru_cache(maxsize=None)
def main_grading(row: str):
    from .f4lie import f4_algebra
    from .gradings import grading_from_automorphisms
    from .weyl import main_row_maps

    return grading_from_automorphisms(f4_algebra(), main_row_maps(row), row, "f4")


@lru_cache(maxsize=None)
def tits_grading():
    from . import jordan
    from .gradings import grading_from_automorphisms

    return grading_from_automorphisms(jordan.build_tits(), jordan.tits_z33_automorphisms(), "tits", "TITS")


def zero_label_dim(G) -> int:
    for lab, B in G.components:
        if not any(lab):
            return B.cols
    return 0


def primary_parts(desc) -> tuple[int, tuple[int, ...]]:
    """Free rank and sorted prime-power factors, so Z6 x Z2 compares equal to Z2^2 x Z3."""
    from flint import fmpz

    parts = []
    for d in desc.invariant_factors:
        for p, e in fmpz(d).factor():
            parts.append(int(p) ** e)
    return desc.torus_rank, tuple(sorted(parts))


# ---------------------------------------------------------------------------
# the criteria


def check_weyl_classes() -> CheckResult:
    from .weyl import REPRESENTATIVES, conjugacy_classes, generate_weyl, order_statistics, sigma

    rows = []
    W = generate_weyl()
    rows.append(_row(len(W) == 1152, f"|W| = {len(W)}"))
    ident = sigma(748).matrix == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    rows.append(_row(ident, "sigma_748 is the identity"))
    C = conjugacy_classes()
    for c in C:
        rows.append(_row(True, f"class of sigma_{c.representative}: order {c.order}, size {c.size}"))
    want = {1: (1, 1), 2: (139, 7), 3: (80, 3), 4: (228, 5), 6: (464, 7), 8: (144, 1), 12: (96, 1)}
    stats = order_statistics()
    rows.append(_row(stats == want, f"order statistics {stats}"))
    reps = tuple(c.representative for c in C)
    rows.append(_row(reps == REPRESENTATIVES, "representative index set"))
    ok = len(W) == 1152 and ident and len(C) == 25 and stats == want and reps == REPRESENTATIVES
    return CheckResult("weyl-classes", "W(F4) order, classes and representatives", ok, rows)


def check_tablon() -> CheckResult:
    from .weyl import REPRESENTATIVES, TABLON, fixed_subgroup_structure
    from .exactmath import AbelianGroupDescriptor

    rows, ok = [], True
    for j in REPRESENTATIVES:
        got = fixed_subgroup_structure(j)
        want = AbelianGroupDescriptor(*TABLON[j])
        good = primary_parts(got) == primary_parts(want)
        ok &= good
        rows.append(_row(good, f"T^sigma_{j} = {got.describe()} (expected {want.describe()})"))
    return CheckResult("tablon", "fixed subgroups of the torus", ok, rows)


def check_f4() -> CheckResult:
    from .f4lie import (
        CARTAN_MATRIX, POSITIVE_ROOTS, build_f4_basis, commutator_span_dimension,
        computed_cartan_matrix, derivation_dimension,
    )

    rows = []
    d1 = derivation_dimension()
    d2 = commutator_span_dimension()
    rows.append(_row(d1 == 52 == d2, f"dim Der(J) = {d1}, dim [R_J, R_J] = {d2}"))
    B = build_f4_basis()
    roots = set(B.roots)
    pos = {r for r in roots if all(c >= 0 for c in r)}
    neg = {tuple(-c for c in r) for r in roots if all(c <= 0 for c in r)}
    lines = len(roots) == 48 and pos == set(POSITIVE_ROOTS) and neg == pos
    rows.append(_row(lines, f"{len(roots)} distinct root lines, positive set matches: {pos == set(POSITIVE_ROOTS)}"))
    C = computed_cartan_matrix()
    rows.append(_row(C == CARTAN_MATRIX, f"Cartan matrix {C}"))
    return CheckResult("f4", "f4 = Der(J), roots and Cartan matrix", d1 == 52 == d2 and lines and C == CARTAN_MATRIX, rows)


NONTORAL = {3, 15, 105, 106, 405}


def check_nontorality() -> CheckResult:
    from .algcore import lie_rank
    from .gradings import zero_component
    from .weyl import REPRESENTATIVES

    rows, ok = [], True
    for j in REPRESENTATIVES:
        Le = zero_component(a_grading(j))
        rank = lie_rank(Le) if Le.dim else 0
        toral = Le.dim >= 4 and rank == 4
        good = toral == (j not in NONTORAL)
        ok &= good
        rows.append(_row(good, f"A({j},id): zero component dim {Le.dim}, rank {rank}, "
                               f"{'toral' if toral else 'nontoral'}"))
    return CheckResult("nontorality", "A(j,id) nontoral exactly for j in {3,15,105,106,405}", ok, rows)


A_TYPES = {3: (19, 6, 7), 15: (0, 26), 105: (31, 0, 7), 106: (3, 14, 7), 405: (24, 0, 0, 7)}


def check_a_types() -> CheckResult:
    from .gradings import grading_type

    rows, ok = [], True
    for j, want in A_TYPES.items():
        got = grading_type(a_grading(j))
        ok &= got == want
        rows.append(_row(got == want, f"A({j},id) type {got} (expected {want})"))
    return CheckResult("a-types", "types of the A(j,id) gradings", ok, rows)


def check_fine() -> CheckResult:
    from .f4lie import cartan_grading
    from .gradings import grading_type

    rows, ok = [], True
    cases = [("cartan", cartan_grading()[1], (48, 0, 0, 1), 4)]
    cases += [(f"A{j}", a_grading(j), A_TYPES[j], d) for j, d in ((15, 0), (105, 1), (405, 0))]
    for name, G, want, zd in cases:
        got, z = grading_type(G), zero_label_dim(G)
        good = got == want and z == zd
        ok &= good
        rows.append(_row(good, f"{name}: type {got}, zero component dim {z} (expected {want}, {zd})"))
    return CheckResult("fine", "fine gradings on f4 and their zero components", ok, rows)


def check_main2() -> CheckResult:
    from .exactmath import AbelianGroupDescriptor
    from .gradings import grading_type, quasitorus_group
    from .weyl import MAIN_ROWS, surrogate_order

    groups = {
        "I": (0, (3, 3, 3)), "II": (1, (2, 2, 2)), "II.1": (0, (2, 2, 2)), "II.2": (0, (2, 2, 2, 2)),
        "II.3.1": (0, (2, 2, 2, 3)), "II.3.2": (0, (2, 2, 2, 4)), "II.4.1": (0, (2, 2, 4)),
        "II.4.2": (0, (2, 2, 8)), "III": (0, (2, 2, 2, 2, 2)),
    }
    rows, ok = [], True
    for row, (gname, want) in MAIN_ROWS.items():
        G = main_grading(row)
        got = grading_type(G)
        grp = quasitorus_group(G)
        free, fin = groups[row]
        if free:  # the free factor is represented by a surrogate root of unity
            n = surrogate_order((0, 0, 0, 1))
            fin = fin + (n,)
        good_grp = primary_parts(grp) == primary_parts(AbelianGroupDescriptor(0, fin))
        good = got == want and good_grp
        ok &= good
        rows.append(_row(good, f"{row}: {gname}, type {got} (expected {want}), group {grp.describe('Z')}"))
    return CheckResult("main2", "the nine nontoral f4 gradings", ok, rows)


ALBERT_NAMES = ("nt1", "nt2", "nt3", "nt4", "nt5", "grad1", "coar", "ztrescubo")


def check_albert() -> CheckResult:
    from . import jordan
    from .gradings import grading_type, validate_fixture

    rows, ok = [], True
    for name in ALBERT_NAMES:
        rep = validate_fixture(name)
        want = jordan.FIXTURE_SPECS[name]["type"]
        good = bool(rep["ok_up_to_errata"]) and tuple(rep["computed_type"]) == want
        ok &= good
        note = ""
        if rep.get("errata"):
            note = " errata: " + "; ".join(f"{list(k)} -> {v}" for k, v in rep["errata"].items())
        rows.append(_row(good, f"{name}: computed type {tuple(rep['computed_type'])} (expected {want}), "
                               f"printed closed {rep['closed']}, spans match "
                               f"{rep['matches_computed'] or rep.get('corrected_matches')}{note}"))
    got = grading_type(tits_grading())
    ok &= got == (27,)
    rows.append(_row(got == (27,), f"Tits model with the Z3^3 maps: type {got}"))
    return CheckResult("albert", "nontoral gradings on the Albert algebra", ok, rows)


H3F_TYPES = {"gr1": (4, 1), "gr2": (0, 1, 0, 1), "gr3": (0, 3), "gr4": (2, 2), "gr5": (3, 0, 1)}


def check_h3f() -> CheckResult:
    from .gradings import validate_fixture

    rows, ok = [], True
    for name, want in H3F_TYPES.items():
        rep = validate_fixture(name)
        printed, computed = tuple(rep["printed_type"]), tuple(rep["computed_type"])
        good = printed == want == computed and rep["closed"]
        ok &= good
        rows.append(_row(good, f"{name}: printed type {printed}, computed {computed} (expected {want})"))
    rep = validate_fixture("gr5-normal")
    good = tuple(rep["printed_type"]) == H3F_TYPES["gr5"] and rep["closed"]
    ok &= good
    rows.append(_row(good, f"gr5-normal: printed type {tuple(rep['printed_type'])}, closed {rep['closed']}"))
    return CheckResult("h3f", "gradings on H3(F)", ok, rows)


def check_lifts() -> CheckResult:
    from .weyl import extend_to_automorphism, lemma_power_check, sigma

    rows = []
    o3, s3 = extend_to_automorphism(3).order(), sigma(3).order
    ok = o3 == 8 and s3 == 4
    rows.append(_row(ok, f"order(sigma~_3) = {o3}, order(sigma_3) = {s3}"))
    for j in (3, 15, 106, 110, 405):
        good = lemma_power_check(j, samples=10)
        ok &= good
        rows.append(_row(good, f"(sigma~_{j} t)^m = sigma~_{j}^m over 10 sampled t"))
    return CheckResult("lifts", "orders of lifts and the power condition", ok, rows)


def check_appendix() -> CheckResult:
    from .weyl import APPENDIX_ROWS, appendix_check, appendix_realisers

    rows, ok = [], True
    for j in APPENDIX_ROWS:
        rep = appendix_check(j)
        ok &= bool(rep["ok"])
        extra = ""
        if not rep["ok"]:
            extra = f"; rows realised by sigma_j for j in {appendix_realisers(j)}"
        rows.append(_row(rep["ok"], f"sigma~_{j}: images of g1, g2 {rep['torus_images']}, torus factor "
                                    f"{rep['torus']}, fixes t'(1,1,1,u) {rep['fixes_t_1_1_1_u']}{extra}"))
    return CheckResult("appendix", "conjugation table of the normaliser elements", ok, rows)


def check_stabilizers() -> CheckResult:
    from .weyl import stabilizer_indices

    a = stabilizer_indices([(8, 0, 16, 16), (0, 8, 8, 0)])
    b = stabilizer_indices([(12, 0, 12, 0), (0, 12, 12, 0)], [(0, 0, 0, 1)])
    rows = [_row(a == {15, 748, 1075}, f"stabilizer of t'(w,1,w^2,w^2), t'(1,w,w,1): {sorted(a)}"),
            _row(b == {105, 748}, f"stabilizer of t'(-1,1,-1,1), t'(1,-1,-1,1), t'(1,1,1,u): {sorted(b)}")]
    return CheckResult("stabilizers", "stabilizer index sets", a == {15, 748, 1075} and b == {105, 748}, rows)


def check_universal() -> CheckResult:
    from .f4lie import cartan_grading
    from .gradings import computed_grading, universal_group

    want = {"grad1": (0, (2, 2, 2)), "coar": (0, (2, 2, 4)), "ztrescubo": (0, (3, 3, 3)), "cartan": (4, ())}
    rows, ok = [], True
    for name, w in want.items():
        G = cartan_grading()[1] if name == "cartan" else computed_grading(name)
        U = universal_group(G)
        good = (U.torus_rank, tuple(sorted(U.invariant_factors))) == (w[0], tuple(sorted(w[1])))
        ok &= good
        rows.append(_row(good, f"{name}: {U.describe('Z')}"))
    return CheckResult("universal", "universal grading groups", ok, rows)


def _semisimple(L, x) -> bool:
    p = L.left_operator(x).realify().minpoly()
    return p.gcd(p.derivative()).degree() == 0


def check_properties() -> CheckResult:
    from . import jordan
    from .f4lie import cartan_grading, f4_algebra
    from .gradings import computed_grading, grading_from_automorphisms, grading_type, is_toral
    from .weyl import MAIN_ROWS, two_generator_pairs

    rows, ok = [], True
    pairs = two_generator_pairs(20)
    toral = [is_toral(grading_from_automorphisms(f4_algebra(), list(p))) for p in pairs]
    ok &= all(toral)
    rows.append(_row(all(toral), f"two-generator quasitori toral: {sum(toral)}/{len(toral)}"))

    gradings = [computed_grading(n) for n in ALBERT_NAMES + tuple(H3F_TYPES)]
    gradings += list(cartan_grading()) + [tits_grading()]
    gradings += [a_grading(j) for j in A_TYPES] + [main_grading(r) for r in MAIN_ROWS]
    closed = [G.is_closed() for G in gradings]
    ok &= all(closed)
    rows.append(_row(all(closed), f"closure of computed gradings: {sum(closed)}/{len(closed)}"))
    sums = [sum((i + 1) * h for i, h in enumerate(grading_type(G))) == G.algebra.dim for G in gradings]
    ok &= all(sums)
    rows.append(_row(all(sums), f"sum i*h_i = dim: {sum(sums)}/{len(sums)}"))

    L = f4_algebra()
    G = a_grading(15)
    ss = [_semisimple(L, B.column(0) + B.column(1).scale(2)) for _, B in G.components]
    ok &= all(ss)
    rows.append(_row(all(ss), f"ad(x) semisimple for generic x in each A(15,id) component: {sum(ss)}/{len(ss)}"))

    T = tits_grading()
    norms = [not jordan.tits_norm_exact(B.column(0)).is_zero() for _, B in T.components]
    ok &= all(norms)
    rows.append(_row(all(norms), f"homogeneous Tits generators with N != 0: {sum(norms)}/{len(norms)}"))
    return CheckResult("properties", "property suites", ok, rows)


CHECKS: dict[str, tuple[int, Callable[[], CheckResult]]] = {
    "weyl-classes": (1, check_weyl_classes),
    "tablon": (2, check_tablon),
    "f4": (3, check_f4),
    "nontorality": (4, check_nontorality),
    "a-types": (5, check_a_types),
    "fine": (6, check_fine),
    "main2": (7, check_main2),
    "albert": (8, check_albert),
    "h3f": (9, check_h3f),
    "lifts": (10, check_lifts),
    "appendix": (11, check_appendix),
    "stabilizers": (12, check_stabilizers),
    "universal": (13, check_universal),
    "properties": (14, check_properties),
}


def run_check(name: str) -> CheckResult:
    start = time.perf_counter()
    try:
        res = CHECKS[name][1]()
    except Exception as exc:  # a crash is a failed row, not an aborted sweep
        res = CheckResult(name, "raised", False, [_row(False, f"{type(exc).__name__}: {exc}")])
    res.seconds = time.perf_counter() - start
    return res
