"""Command line: Weyl tables, grading presets, the acceptance sweep and algebra dumps."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence, TextIO

ALBERT_PRESETS = ("nt1", "nt2", "nt3", "nt4", "nt5", "grad1", "coar", "ztrescubo")
H3F_PRESETS = ("gr1", "gr2", "gr3", "gr4", "gr5")
A_PRESETS = ("A3", "A15", "A105", "A106", "A405")
MAIN_PRESETS = ("I", "II", "II.1", "II.2", "II.3.1", "II.3.2", "II.4.1", "II.4.2", "III")
PRESETS = (ALBERT_PRESETS + H3F_PRESETS + ("pauli", "tits", "cartan", "cartan-J") + A_PRESETS
           + tuple(f"main2-{r}" for r in MAIN_PRESETS))
ALGEBRAS = ("C", "J", "H3F", "TITS", "F4")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# torus points


_TOKEN = re.compile(r"^(-?)(?:zeta(\d+)\^(-?\d+)|w\^?2|w|i|1|u)$")


def parse_torus_point(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """'x,y,z,u' -> (zeta24 exponents, cocharacter); a 'u' slot is a generic scalar."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError(f"expected four comma-separated entries, got {text!r}")
    exps, coch = [], []
    for p in parts:
        m = _TOKEN.match(p)
        if not m:
            raise UsageError(f"cannot read torus entry {p!r} (use 1, -1, i, w, w^2, zetaN^k or u)")
        body = p.lstrip("-")
        if body == "u":
            e, c = 0, 1
        elif body == "1":
            e, c = 0, 0
        elif body == "i":
            e, c = 6, 0
        elif body == "w":
            e, c = 8, 0
        elif body in ("w2", "w^2"):
            e, c = 16, 0
        else:
            n, k = int(m.group(2)), int(m.group(3))
            if n == 0 or 24 % n:
                raise UsageError(f"root order {n} does not divide 24")
            e, c = k * (24 // n), 0
        if m.group(1):
            if c:
                raise UsageError("a generic entry cannot carry a sign")
            e += 12
        exps.append(e % 24)
        coch.append(c)
    return tuple(exps), tuple(coch)


# ---------------------------------------------------------------------------
# commands


def _emit(out: TextIO, payload, as_json: bool, table: Sequence[str]):
    if as_json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(table) + "\n")


def cmd_weyl_classes(args, out) -> int:
    from .weyl import conjugacy_classes

    C = conjugacy_classes()
    rows = [dict(representative=c.representative, order=c.order, size=c.size) for c in C]
    table = [f"{'rep':>5} {'order':>5} {'size':>5}"]
    table += [f"{r['representative']:>5} {r['order']:>5} {r['size']:>5}" for r in rows]
    _emit(out, rows, args.json, table)
    return 0


def cmd_weyl_fixed(args, out) -> int:
    from .weyl import fixed_subgroup_generators, fixed_subgroup_structure, torus_matrix

    if not 1 <= args.j <= 1152:
        raise UsageError("j must lie in 1..1152")
    d = fixed_subgroup_structure(args.j)
    gens = fixed_subgroup_generators(args.j)
    payload = dict(j=args.j, torus_rank=d.torus_rank, invariant_factors=list(d.invariant_factors),
                   description=d.describe(), torus_matrix=torus_matrix(args.j).tolist(),
                   generators=[dict(order=o, exponents=list(v)) for o, v in gens])
    table = [f"T^sigma_{args.j} = {d.describe()}"]
    table += [f"  generator c^{list(v)} with c of order {o if o else 'infinity'}" for o, v in gens]
    _emit(out, payload, args.json, table)
    return 0


def cmd_weyl_stabilizer(args, out) -> int:
    from .weyl import stabilizer_indices

    points, cochs = [], []
    for t in args.t:
        e, c = parse_torus_point(t)
        points.append(e)
        if any(c):
            cochs.append(c)
    idx = sorted(stabilizer_indices(points, cochs))
    _emit(out, dict(points=args.t, stabilizer=idx), args.json, [" ".join(map(str, idx))])
    return 0


def build_preset(name: str):
    """(grading, toral flag or None) for a preset name."""
    from .gradings import computed_grading, is_toral

    if name in ALBERT_PRESETS:
        G = computed_grading(name)
        return G, is_toral(G)
    if name in H3F_PRESETS or name == "pauli":
        return computed_grading(name), None
    if name == "tits":
        from .verify import tits_grading

        return tits_grading(), None
    if name in ("cartan", "cartan-J"):
        from .f4lie import cartan_grading

        GJ, GL = cartan_grading()
        return (GL if name == "cartan" else GJ), True
    if name in A_PRESETS:
        from .verify import a_grading

        G = a_grading(int(name[1:]))
        return G, is_toral(G)
    if name.startswith("main2-"):
        from .verify import main_grading

        G = main_grading(name[len("main2-"):])
        return G, is_toral(G)
    raise UsageError(f"unknown preset {name}")


def cmd_grade(args, out) -> int:
    from .gradings import grading_type, to_report, universal_group

    G, toral = build_preset(args.preset)
    if args.json:
        out.write(json.dumps(to_report(G, toral), indent=2, sort_keys=True) + "\n")
        return 0
    U = universal_group(G)
    lines = [f"preset {args.preset} on {G.algebra_name}",
             f"type {grading_type(G)}",
             f"universal group {U.describe('Z')}",
             f"toral {toral if toral is not None else 'n/a'}",
             f"{len(G.components)} components"]
    lines += [f"  {list(lab)}: dim {B.cols}" for lab, B in G.components]
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    from .verify import CHECKS, run_check

    names = list(CHECKS) if args.all else [args.table]
    if args.table and args.table not in CHECKS:
        raise UsageError(f"unknown table {args.table}; choose from {', '.join(CHECKS)}")
    ok = True
    for n in names:
        r = run_check(n)
        ok &= r.ok
        out.write(r.line() + "\n")
        if args.table or not r.ok:
            out.write("\n".join(r.rows) + "\n")
        out.flush()
    return 0 if ok else 1


def _algebra(name: str):
    if name == "C":
        from .octonion import build_cayley

        return build_cayley()
    if name == "J":
        from .jordan import build_albert

        return build_albert()
    if name == "H3F":
        from .jordan import build_h3f

        return build_h3f()
    if name == "TITS":
        from .jordan import build_tits

        return build_tits()
    from .f4lie import f4_algebra

    return f4_algebra()


def cmd_algebra_dump(args, out) -> int:
    A = _algebra(args.name)
    names = A.basis_names
    entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in sorted(A.product_basis(i, j).items()):
                entries.append((names[i], names[j], names[k], str(c)))
    payload = dict(name=args.name, flavor=A.flavor, basis=names,
                   products=[dict(left=a, right=b, target=t, coefficient=c) for a, b, t, c in entries])
    table = [f"{args.name}: dim {A.dim}, {A.flavor}", "basis " + " ".join(names)]
    table += [f"{a} * {b} : {c} {t}" for a, b, t, c in entries]
    _emit(out, payload, args.json, table)
    return 0


# ---------------------------------------------------------------------------
# parser


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="f4grad", description="Gradings on the Albert algebra and f4.")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weyl", help="Weyl group tables")
    wsub = w.add_subparsers(dest="weyl_command", required=True)
    c = wsub.add_parser("classes", help="conjugacy classes (representative, order, size)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_weyl_classes)
    f = wsub.add_parser("fixed", help="fixed subgroup of the torus under sigma_j")
    f.add_argument("--j", type=int, required=True)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_weyl_fixed)
    s = wsub.add_parser("stabilizer", help="indices fixing the given torus points")
    s.add_argument("--t", action="append", required=True, metavar="x,y,z,u")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_weyl_stabilizer)

    g = sub.add_parser("grade", help="compute a preset grading")
    g.add_argument("--preset", required=True, choices=PRESETS)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_grade)

    v = sub.add_parser("verify", help="run acceptance checks")
    grp = v.add_mutually_exclusive_group(required=True)
    grp.add_argument("--all", action="store_true")
    grp.add_argument("--table")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("algebra", help="structure constants")
    asub = a.add_subparsers(dest="algebra_command", required=True)
    d = asub.add_parser("dump")
    d.add_argument("--name", required=True, choices=ALGEBRAS)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_algebra_dump)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
