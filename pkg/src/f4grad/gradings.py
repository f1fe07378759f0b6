"""Gradings: decomposition, type, universal group, closure, coarsening,
torality and fixture comparison."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from .algcore import AlgebraMap, AlgebraTable
from .exactmath import (
    AbelianGroupDescriptor,
    CycNum,
    ExactMatrix,
    IntMatrix,
    lattice_quotient,
    smith_normal_form,
    simultaneous_eigenspaces,
)


class NotHomomorphic(ValueError):
    pass


class NotAGrading(ValueError):
    pass


class FixtureMismatch(ValueError):
    def __init__(self, name: str, report: dict):
        super().__init__(f"fixture {name} fails validation: {report.get('closure_failures')}")
        self.report = report


Label = tuple[int, ...]


def _hstack(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    M = mats[0]
    for m in mats[1:]:
        M = M.hstack(m)
    return M


def add_labels(a: Label, b: Label, orders: Sequence[int]) -> Label:
    return tuple((x + y) % o if o else x + y for x, y, o in zip(a, b, orders))


def canonical_label(a: Label, orders: Sequence[int]) -> Label:
    return tuple(x % o if o else x for x, o in zip(a, orders))


@dataclass
class Grading:
    algebra: AlgebraTable
    components: list[tuple[Label, ExactMatrix]]
    orders: tuple[int, ...]
    name: str = ""
    provenance: list[AlgebraMap] = field(default_factory=list)
    algebra_name: str = ""

    def __post_init__(self):
        self.components = [(canonical_label(l, self.orders), B) for l, B in self.components]
        self.components.sort(key=lambda c: c[0])
        labels = [l for l, _ in self.components]
        if len(set(labels)) != len(labels):
            raise NotAGrading("repeated label")

    @property
    def labels(self) -> list[Label]:
        return [l for l, _ in self.components]

    @property
    def dims(self) -> list[int]:
        return [B.cols for _, B in self.components]

    def component(self, label: Label) -> ExactMatrix | None:
        label = canonical_label(label, self.orders)
        for l, B in self.components:
            if l == label:
                return B
        return None

    def is_decomposition(self) -> bool:
        """Components are independent and fill the algebra."""
        if sum(self.dims) != self.algebra.dim:
            return False
        return _hstack([B for _, B in self.components]).rank() == self.algebra.dim

    @cached_property
    def incidence(self) -> dict[tuple[int, int], frozenset[int]]:
        """(a, b) -> indices of components met by V_a V_b (empty when zero)."""
        if not self.is_decomposition():
            raise NotAGrading("components do not form a direct decomposition")
        A = self.algebra
        P = _hstack([B for _, B in self.components])
        Pinv = P.inverse()
        owner = []
        for idx, (_, B) in enumerate(self.components):
            owner += [idx] * B.cols
        starts = []
        s = 0
        for d in self.dims:
            starts.append(s)
            s += d
        commutative = A.flavor in ("commutative-Jordan", "commutative", "anticommutative-Lie")
        out: dict[tuple[int, int], frozenset[int]] = {}
        ops = [Pinv @ A.left_operator(P.column(k)) @ P for k in range(P.cols)]
        n = len(self.components)
        for a in range(n):
            for b in range(n):
                if commutative and b < a:
                    out[a, b] = out[b, a]
                    continue
                hit = set()
                for x in range(starts[a], starts[a] + self.dims[a]):
                    T = ops[x]
                    sub = T.submatrix(range(T.rows), range(starts[b], starts[b] + self.dims[b]))
                    for r in range(sub.rows):
                        if owner[r] in hit:
                            continue
                        if any(not sub[r, c].is_zero() for c in range(sub.cols)):
                            hit.add(owner[r])
                out[a, b] = frozenset(hit)
        return out

    def closure_failures(self) -> list[tuple[Label, Label]]:
        bad = []
        labels = self.labels
        pos = {l: i for i, l in enumerate(labels)}
        for (a, b), hit in self.incidence.items():
            if not hit:
                continue
            target = pos.get(add_labels(labels[a], labels[b], self.orders))
            if target is None or hit != {target}:
                bad.append((labels[a], labels[b]))
        return bad

    def is_closed(self) -> bool:
        return not self.closure_failures()


def grading_from_automorphisms(A: AlgebraTable, maps: Sequence[AlgebraMap], name: str = "",
                               algebra_name: str = "") -> Grading:
    """Joint eigenspaces; labels are zeta24 exponents, one slot per map."""
    maps = list(maps)
    if not maps:
        comps = [((), ExactMatrix.identity(A.dim))]
    else:
        comps = simultaneous_eigenspaces([f.matrix for f in maps])
    return Grading(A, comps, (24,) * len(maps), name, maps, algebra_name)


def grading_type(G: Grading) -> tuple[int, ...]:
    top = max(G.dims)
    h = [0] * top
    for d in G.dims:
        h[d - 1] += 1
    return tuple(h)


def universal_group(G: Grading) -> AbelianGroupDescriptor:
    n = len(G.components)
    rels = []
    for (a, b), hit in G.incidence.items():
        if not hit:
            continue
        if len(hit) != 1:
            raise NotAGrading(f"product of components {a}, {b} is not homogeneous")
        (k,) = hit
        r = [0] * n
        r[a] += 1
        r[b] += 1
        r[k] -= 1
        rels.append(r)
    return lattice_quotient(rels, n)


def quasitorus_group(G: Grading) -> AbelianGroupDescriptor:
    """Group generated by the automorphisms that produced G, read off its labels.

    Words w in the generators act trivially iff labels . w = 0 (mod the slot
    orders); the generated group is Z^k modulo those words.
    """
    from math import gcd

    k = len(G.orders)
    if not k:
        return AbelianGroupDescriptor(0, ())
    n = 0
    for o in G.orders:
        if not o:
            raise ValueError("free label slots have no finite quasitorus group")
        n = o if not n else n * o // gcd(n, o)
    rows = [[c * (n // o) for c, o in zip(lab, G.orders)] for lab in G.labels]
    S, _, _ = smith_normal_form(IntMatrix.of(rows))
    ds = [S.entries[i][i] if i < min(S.rows, S.cols) else 0 for i in range(k)]
    return lattice_quotient([[n // gcd(d, n) if i == j else 0 for j in range(k)] for i, d in enumerate(ds)], k)


def coarsen(G: Grading, matrix: Sequence[Sequence[int]], orders: Sequence[int], name: str = "") -> Grading:
    """Push labels through the homomorphism given by an integer matrix.

    Target slot i gets sum_j matrix[i][j] * label[j] reduced mod orders[i]
    (no reduction for 0).  Well-definedness on the source group is checked.
    """
    for i, row in enumerate(matrix):
        for j, m in enumerate(row):
            o = G.orders[j]
            t = orders[i]
            if o == 0 or m == 0:
                continue
            if t == 0 or (m * o) % t:
                raise NotHomomorphic(f"slot {j} of order {o} cannot map with coefficient {m} into order {t}")
    merged: dict[Label, list[ExactMatrix]] = {}
    for lab, B in G.components:
        img = tuple(sum(m * x for m, x in zip(row, lab)) for row in matrix)
        img = canonical_label(img, orders)
        merged.setdefault(img, []).append(B)
    comps = [(l, _hstack(Bs)) for l, Bs in merged.items()]
    out = Grading(G.algebra, comps, tuple(orders), name or f"{G.name}/coarse", G.provenance, G.algebra_name)
    if not out.is_closed():
        raise NotHomomorphic("coarsened decomposition is not closed")
    return out


def relabel(G: Grading, f: Callable[[Label], Label], orders: Sequence[int], name: str = "") -> Grading:
    """Merge components through an arbitrary label function (closure re-checked by the caller)."""
    merged: dict[Label, list[ExactMatrix]] = {}
    for lab, B in G.components:
        merged.setdefault(canonical_label(f(lab), orders), []).append(B)
    return Grading(G.algebra, [(l, _hstack(Bs)) for l, Bs in merged.items()], tuple(orders),
                   name or G.name, G.provenance, G.algebra_name)


# ---------------------------------------------------------------------------
# span comparison


def canonical_span(B: ExactMatrix) -> ExactMatrix:
    R, piv = B.T.rref()
    return R.submatrix(range(len(piv)), range(R.cols))


def match_components(G: Grading, H: Grading) -> tuple[list[tuple[Label, Label]], list[Label], list[Label]]:
    """Pairs (label in G, label in H) with equal spans, plus the unmatched labels."""
    canon_h = [(l, canonical_span(B)) for l, B in H.components]
    used = set()
    pairs, left = [], []
    for l, B in G.components:
        c = canonical_span(B)
        hit = None
        for k, (m, d) in enumerate(canon_h):
            if k not in used and d.rows == c.rows and d == c:
                hit = k
                break
        if hit is None:
            left.append(l)
        else:
            used.add(hit)
            pairs.append((l, canon_h[hit][0]))
    right = [m for k, (m, _) in enumerate(canon_h) if k not in used]
    return pairs, left, right


def same_decomposition(G: Grading, H: Grading) -> bool:
    _, l, r = match_components(G, H)
    return not l and not r


# ---------------------------------------------------------------------------
# torality


def zero_component(G: Grading):
    """The identity-label component (common fixed space) as a Lie subalgebra of f4."""
    from .algcore import fixed_subalgebra
    from .f4lie import ad_transfer, f4_algebra

    maps = G.provenance
    if G.algebra.flavor != "anticommutative-Lie":
        maps = [ad_transfer(f) for f in maps]
    return fixed_subalgebra(f4_algebra(), maps)


def is_toral(G: Grading) -> bool:
    from .algcore import lie_rank

    Le = zero_component(G)
    if Le.dim < 4:
        return False
    return lie_rank(Le) == 4


# ---------------------------------------------------------------------------
# fixtures


def _fixture_components(name: str):
    from . import jordan

    spec = jordan.FIXTURE_SPECS[name]
    comps = []
    for lab, exprs in spec["comps"]:
        vecs = [jordan.eval_element(e) for e in exprs]
        if spec["algebra"] == "H3F":
            vecs = [jordan.to_h3f(v) for v in vecs]
        comps.append((lab, _hstack(vecs)))
    return spec, comps


def fixture_grading(name: str, overrides: dict | None = None) -> Grading:
    from . import jordan

    if name == "pauli":
        comps = [(lab, _hstack([jordan.eval_m3(e) for e in exprs])) for lab, exprs in jordan.PAULI_FIXTURE]
        return Grading(jordan.build_m3(), comps, (3, 3), "pauli (printed)", algebra_name="M3")
    spec = jordan.FIXTURE_SPECS[name]
    comps = []
    for lab, exprs in spec["comps"]:
        exprs = (overrides or {}).get(lab, exprs)
        vecs = [jordan.eval_element(e) for e in exprs]
        if spec["algebra"] == "H3F":
            vecs = [jordan.to_h3f(v) for v in vecs]
        comps.append((lab, _hstack(vecs)))
    A = jordan.build_albert() if spec["algebra"] == "J" else jordan.build_h3f()
    return Grading(A, comps, spec["orders"], f"{name} (printed)", algebra_name=spec["algebra"])


def computed_grading(name: str) -> Grading:
    """The grading produced by the constructive automorphism set for a preset."""
    from . import jordan

    if name == "pauli":
        return jordan.pauli_grading()
    if name in ("gr1", "gr2", "gr3", "gr4", "gr5", "gr5-normal"):
        maps = jordan.h3f_automorphism_sets()["gr5" if name == "gr5-normal" else name]
        return grading_from_automorphisms(jordan.build_h3f(), maps, name, "H3F")
    maps = jordan.albert_automorphism_sets()[name]
    return grading_from_automorphisms(jordan.build_albert(), maps, name, "J")


def _mutations(expr: str):
    """Single edits of a fixture expression: swap a basis name, a slot index or a sign."""
    import re

    onames = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"]
    toks = list(re.finditer(r"X[123]|[euv][123]|[+-]", expr))
    for t in toks:
        s, e = t.span()
        word = t.group()
        if word in "+-":
            yield expr[:s] + ("-" if word == "+" else "+") + expr[e:]
        elif word[0] == "X":
            for k in "123":
                if k != word[1]:
                    yield expr[:s] + "X" + k + expr[e:]
        else:
            for n in onames:
                if n != word:
                    yield expr[:s] + n + expr[e:]
    # family substitution: renumber every u_k, v_k at once
    for a in "123":
        for b in "123":
            if a != b and (f"u{a}" in expr or f"v{a}" in expr):
                yield expr.replace(f"u{a}", f"u{b}").replace(f"v{a}", f"v{b}")
    # leading sign on an expression without one
    if not expr.lstrip().startswith("-"):
        yield "-" + expr


def _suspects(F: Grading) -> list[Label]:
    """Labels most likely to carry a transcription error."""
    canon = [(l, canonical_span(B)) for l, B in F.components]
    dup = []
    for a in range(len(canon)):
        for b in range(len(canon)):
            if a != b and canon[a][1].rows == canon[b][1].rows and canon[a][1] == canon[b][1]:
                dup.append(canon[a][0])
    if dup:
        return sorted(set(dup))
    if not F.is_decomposition():
        return F.labels
    count: dict[Label, int] = {}
    for a, b in F.closure_failures():
        count[a] = count.get(a, 0) + 1
        count[b] = count.get(b, 0) + 1
    return sorted(count, key=lambda l: (-count[l], l))


def _acceptable(name: str, overrides: dict) -> bool:
    try:
        F = fixture_grading(name, overrides)
    except Exception:  # noqa: BLE001  malformed mutation
        return False
    return F.is_decomposition() and F.is_closed()


def _erratum_search(name: str, suspects: Sequence[Label], targets: Sequence[ExactMatrix] | None,
                    depth: int = 2) -> dict[Label, list[str]]:
    """Smallest single-component edit restoring closure.

    With target spans (from an independent computation) mutations up to the
    given depth are filtered by span first; without them only single edits
    are tried, each checked by full closure.
    """
    from . import jordan

    spec = jordan.FIXTURE_SPECS[name]
    lookup = dict(spec["comps"])
    canon_targets = [canonical_span(t) for t in targets] if targets else None
    if canon_targets is None:
        depth = 1
    for lab in suspects:
        exprs = lookup[lab]
        for pos, expr in enumerate(exprs):
            frontier, seen = [expr], {expr}
            for _ in range(depth):
                nxt = []
                for cur in frontier:
                    for m in _mutations(cur):
                        if m in seen:
                            continue
                        seen.add(m)
                        nxt.append(m)
                        trial = list(exprs)
                        trial[pos] = m
                        if canon_targets is not None:
                            try:
                                vecs = [jordan.eval_element(e) for e in trial]
                            except Exception:  # noqa: BLE001
                                continue
                            if spec["algebra"] == "H3F":
                                vecs = [jordan.to_h3f(v) for v in vecs]
                            c = canonical_span(_hstack(vecs))
                            if not any(t.rows == c.rows and t == c for t in canon_targets):
                                continue
                        if _acceptable(name, {lab: trial}):
                            return {lab: trial}
                frontier = nxt
    return {}


def corrected_fixture(name: str):
    """Printed components with the erratum correction (if any) applied, plus the errata found."""
    from . import jordan

    spec = jordan.FIXTURE_SPECS[name]
    F = fixture_grading(name)
    if F.is_decomposition() and F.is_closed():
        return spec["comps"], {}
    errata = _erratum_search(name, _suspects(F), None)
    return [(l, errata.get(l, e)) for l, e in spec["comps"]], errata


def validate_fixture(name: str, search_errata: bool = True) -> dict:
    """Closure and span checks of a printed fixture against the computed grading."""
    from . import jordan

    spec = jordan.FIXTURE_SPECS[name]
    F = fixture_grading(name)
    report: dict = dict(name=name, algebra=spec["algebra"], expected_type=list(spec["type"]))
    report["independent"] = F.is_decomposition()
    report["printed_type"] = list(grading_type(F))
    closed = report["independent"] and F.is_closed()
    report["closure_failures"] = (
        [[list(a), list(b)] for a, b in F.closure_failures()] if report["independent"] else "dependent spans"
    )
    G = computed_grading(name)
    report["computed_type"] = list(grading_type(G))
    report["errata"] = {}
    if name == "gr5-normal":
        # printed in a different but isomorphic form; only the type is compared
        report["matches_computed"] = None
    else:
        _, bad_f, unmatched_g = match_components(F, G)
        report["matches_computed"] = not bad_f and not unmatched_g
        if search_errata and (not closed or bad_f):
            targets = [G.component(l) for l in unmatched_g] or None
            suspects = sorted(set(bad_f) | set(_suspects(F))) if not closed else bad_f
            errata = _erratum_search(name, suspects, targets)
            report["errata"] = {"".join(map(str, k)): v for k, v in errata.items()}
            if errata:
                fixed = fixture_grading(name, errata)
                report["corrected_closed"] = fixed.is_decomposition() and fixed.is_closed()
                _, l2, r2 = match_components(fixed, G)
                report["corrected_matches"] = not l2 and not r2
    report["closed"] = closed
    report["ok"] = bool(closed and tuple(report["printed_type"]) == spec["type"]
                        and tuple(report["computed_type"]) == spec["type"]
                        and report["matches_computed"] is not False)
    report["ok_up_to_errata"] = bool(report["ok"] or (
        report.get("corrected_closed") and report.get("corrected_matches")
        and tuple(report["computed_type"]) == spec["type"]))
    return report


def albert_grading_presets(strict: bool = False) -> dict[str, dict]:
    """Printed fixtures with their automorphism sets and validation reports."""
    from . import jordan

    sets = jordan.albert_automorphism_sets()
    out = {}
    for name in ("nt1", "nt2", "nt3", "nt4", "nt5", "grad1", "coar", "ztrescubo"):
        rep = validate_fixture(name)
        if strict and not rep["closed"]:
            raise FixtureMismatch(name, rep)
        out[name] = dict(fixture=jordan.FIXTURE_SPECS[name], automorphisms=sets[name], report=rep)
    return out


# ---------------------------------------------------------------------------
# reports


def _num(c: CycNum) -> str:
    return repr(c)


def to_report(G: Grading, toral: bool | None = None) -> dict:
    grp = universal_group(G)
    return dict(
        algebra=G.algebra_name or repr(G.algebra),
        name=G.name,
        group=dict(free_rank=grp.torus_rank, factors=list(grp.invariant_factors)),
        type=list(grading_type(G)),
        toral=toral,
        provenance=[f.name for f in G.provenance],
        components=[
            dict(label=list(l), dim=B.cols, basis=[[_num(B[r, c]) for r in range(B.rows)] for c in range(B.cols)])
            for l, B in G.components
        ],
    )


def to_json(G: Grading, toral: bool | None = None) -> str:
    return json.dumps(to_report(G, toral), indent=2, sort_keys=True)
