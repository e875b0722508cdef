"""Command line front end.

Exit codes: 0 success, 2 parse/usage errors, 3 domain errors (zero or unit
ideal, squarefree required, ...), 4 verification mismatches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .combinat import (
    MonomialIdeal,
    alexander_dual,
    delta_alpha,
    format_ideal,
    format_monomial,
    full_subcomplex,
    members,
    radical,
    stanley_reisner_complex,
    t_complex,
)
from .errors import ArgumentError, ConsistencyError, DimensionMismatch, DomainError, MonolcError, ResourceLimitError
from .homology import cohomology_dims
from .linalg import Field
from .localcoh import (
    ext_piece,
    ext_piece_general,
    hilbert_function_box,
    hilbert_series_closed_form,
    lc_piece,
    multiplication_map,
)
from .parse import IdealSpec, ParseError, field_text, parse_box, parse_degree, parse_ideal_file
from .structure import associated_primes, betti_diagram, check_betti_inequality, filtration_quotients, minimal_associated_primes
from .verify import random_corpus, verify_ideal

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 2, 3, 4
WORKERS_ENV = "MONOLC_WORKERS"

COMMANDS = ("dual", "complex", "betti", "lc", "ext", "mult", "filtration", "ass", "hilbert", "check", "verify")


class Mismatch(Exception):
    """A verification failure; carries the output document."""

    def __init__(self, results):
        self.results = results


# ---------------------------------------------------------------------------
# formatting helpers


class Ctx:
    def __init__(self, spec: IdealSpec, field: Field):
        self.spec = spec
        self.field = field
        self.names = list(spec.vars)
        self.ideal = spec.ideal()

    def mono(self, m) -> str:
        return format_monomial(m, self.names)

    def varset(self, mask: int) -> list[str]:
        return [self.names[j] for j in members(mask)]

    def prime(self, mask: int) -> str:
        return "(" + ",".join(self.varset(mask)) + ")"

    def deg(self, alpha) -> str:
        return "(" + ",".join(str(a) for a in alpha) + ")"


def _facets(cx, labels) -> Optional[list[list[str]]]:
    if cx.is_void:
        return None
    return [[labels[v] for v in f] for f in cx.sorted_facets()]


def _facets_text(facets) -> str:
    if facets is None:
        return "void"
    return " ".join("{" + ",".join(f) + "}" for f in facets)


def _dims_json(dims: dict[int, int]) -> dict[str, int]:
    return {str(q): d for q, d in sorted(dims.items())}


# ---------------------------------------------------------------------------
# commands: each returns (results, text)


def cmd_dual(ctx: Ctx, args):
    dual = alexander_dual(ctx.ideal)
    # ascending lex order, smallest generator first
    gens = [ctx.mono(g) for g in sorted(dual.gens)]
    return {"generators": gens}, " ".join(gens)


def cmd_complex(ctx: Ctx, args):
    B = ctx.ideal
    if args.alpha is not None:
        alpha = parse_degree(args.alpha, B.n)
        cx = delta_alpha(B, alpha)
        label = f"Delta_alpha, alpha={ctx.deg(alpha)}"
        labels = ctx.names
    elif args.t:
        I = _support_arg(ctx, args.support)
        cx = t_complex(B, I)
        labels = [ctx.mono(g) for g in B.gens]
        label = f"T_I, I={{{','.join(ctx.varset(I))}}} (vertices are generators)"
    else:
        cx = stanley_reisner_complex(B)
        label = "Delta"
        if args.support is not None:
            I = _support_arg(ctx, args.support)
            cx = full_subcomplex(cx, I)
            label = f"Delta_I, I={{{','.join(ctx.varset(I))}}}"
        labels = ctx.names
    facets = _facets(cx, labels)
    dims = cohomology_dims(cx, ctx.field)
    results = {"complex": label, "facets": facets, "reduced_cohomology": _dims_json(dims)}
    lines = [f"{label}: {_facets_text(facets)}"]
    lines.append("reduced cohomology: " + (", ".join(f"H^{q}={d}" for q, d in sorted(dims.items())) or "0"))
    return results, "\n".join(lines)


def _support_arg(ctx: Ctx, text: Optional[str]) -> int:
    if text is None:
        return (1 << ctx.ideal.n) - 1
    mask = 0
    for name in (t.strip() for t in text.replace(",", " ").split()):
        mask |= 1 << _var_index(ctx, name)
    return mask


def _var_index(ctx: Ctx, name: str) -> int:
    if name in ctx.names:
        return ctx.names.index(name)
    if name.isdigit() and 0 <= int(name) < len(ctx.names):
        return int(name)
    raise ParseError(f"unknown variable {name!r}", "--var")


def cmd_betti(ctx: Ctx, args):
    I = ctx.ideal if args.of == "ideal" else alexander_dual(ctx.ideal)
    table = betti_diagram(I, ctx.field)
    diagram = table.diagram()
    entries = []
    for (row, col), items in sorted(diagram.items()):
        for alpha, b in items:
            entries.append({"row": row, "column": col, "alpha": list(alpha), "beta": b})
    columns = {}
    for col, rows in sorted(table.column_view().items()):
        columns[str(col)] = {str(r): [[list(a), b] for a, b in v] for r, v in sorted(rows.items())}
    results = {"ideal": format_ideal(I, ctx.names), "entries": entries, "columns": columns}
    return results, _betti_text(ctx, I, table)


def _betti_text(ctx: Ctx, I: MonomialIdeal, table) -> str:
    totals = table.totals()
    if not totals:
        return f"Betti diagram of {format_ideal(I, ctx.names)}: zero"
    rows = range(min(r for r, _ in totals), max(r for r, _ in totals) + 1)
    cols = range(0, max(c for _, c in totals) + 1)
    width = max(len(str(v)) for v in totals.values()) + 1
    lines = [f"Betti diagram of {format_ideal(I, ctx.names)} (row i, column j: |alpha| = i + j)"]
    lines.append("      " + "".join(f"{c:>{width}}" for c in cols))
    for r in rows:
        lines.append(f"{r:>4}: " + "".join(f"{totals.get((r, c), '.'):>{width}}" for c in cols))
    lines.append("")
    for (r, c), items in sorted(table.diagram().items()):
        summands = " + ".join(
            (f"{b}*" if b > 1 else "") + "R(-" + ctx.mono(a) + ")" for a, b in items
        )
        lines.append(f"  [{r},{c}] {summands}")
    return "\n".join(lines)


def _lc_ideal(ctx: Ctx) -> MonomialIdeal:
    # local cohomology only depends on the radical
    return ctx.ideal if ctx.ideal.squarefree else radical(ctx.ideal)


def cmd_lc(ctx: Ctx, args):
    B = _lc_ideal(ctx)
    alpha = parse_degree(args.alpha, B.n)
    piece = lc_piece(B, args.i, alpha, ctx.field)
    return _piece_output(ctx, "H", piece, note=None if ctx.ideal.squarefree else "computed at the radical")


def cmd_ext(ctx: Ctx, args):
    B = ctx.ideal
    alpha = parse_degree(args.alpha, B.n)
    if B.squarefree and not args.general:
        piece = ext_piece(B, args.i, alpha, ctx.field)
    else:
        piece = ext_piece_general(B, args.i, alpha, ctx.field)
    return _piece_output(ctx, "Ext", piece)


def _piece_output(ctx: Ctx, what: str, piece, note=None):
    results = {"i": piece.i, "alpha": list(piece.degree), "dim": piece.dim}
    if piece.basis is not None:
        results["complex_facets"] = _facets(piece.basis.complex, ctx.names)
        results["cochain_degree"] = piece.basis.degree
        results["num_faces"] = len(piece.basis.faces)
        results["num_next_faces"] = len(piece.basis.next_faces)
    if note:
        results["note"] = note
    return results, str(piece.dim)


def cmd_mult(ctx: Ctx, args):
    B = ctx.ideal
    alpha = parse_degree(args.alpha, B.n)
    l = _var_index(ctx, args.var)
    M = multiplication_map(B, args.i, alpha, l, ctx.field)
    target = tuple(a + (j == l) for j, a in enumerate(alpha))
    results = {
        "i": args.i,
        "alpha": list(alpha),
        "target": list(target),
        "var": ctx.names[l],
        "shape": [M.nrows, M.ncols],
        "matrix": M.tolist(),
        "invertible": M.is_invertible(),
    }
    head = f"nu_{ctx.names[l]}: H^{args.i}_{ctx.deg(alpha)} -> H^{args.i}_{ctx.deg(target)}  ({M.nrows}x{M.ncols})"
    body = "\n".join("  [" + " ".join(f"{x:>3}" for x in r) + " ]" for r in M.tolist())
    return results, head + ("\n" + body if body else "")


def cmd_filtration(ctx: Ctx, args):
    rep = filtration_quotients(ctx.ideal, args.i, ctx.field)
    layers = []
    lines = [f"filtration of Ext^{args.i}(R/B,R), B = {format_ideal(ctx.ideal, ctx.names)}"]
    for l, layer in enumerate(rep.layers):
        layers.append([{"alpha": list(a), "prime": ctx.varset(_supp(a)), "multiplicity": m} for a, m in layer])
        if layer:
            parts = [(f"{m}*" if m > 1 else "") + f"R/{ctx.prime(_supp(a))}{ctx.deg(a)}" for a, m in layer]
            lines.append(f"  M_{l}/M_{l - 1} = " + " + ".join(parts) if l else f"  M_0 = {' + '.join(parts)}")
        else:
            lines.append(f"  M_{l}/M_{l - 1} = 0" if l else "  M_0 = 0")
    return {"i": args.i, "layers": layers}, "\n".join(lines)


def _supp(alpha) -> int:
    return sum(1 << j for j, a in enumerate(alpha) if a)


def cmd_ass(ctx: Ctx, args):
    if args.minimal:
        primes = minimal_associated_primes(ctx.ideal, args.i, ctx.field)
    else:
        primes = associated_primes(ctx.ideal, args.i, ctx.field)
    items = [ctx.varset(F) for F in primes]
    results = {"i": args.i, "minimal": bool(args.minimal), "primes": items}
    return results, " ".join(ctx.prime(F) for F in primes) or "(none)"


def cmd_hilbert(ctx: Ctx, args):
    B = ctx.ideal
    if args.closed_form:
        terms = hilbert_series_closed_form(B, args.i, ctx.field)
        out = [
            {"alpha": list(t.alpha), "free": ctx.varset(t.free), "multiplicity": t.multiplicity}
            for t in terms
        ]
        lines = [f"Hilbert series of Ext^{args.i}(R/B,R) = sum of {len(terms)} terms"]
        for t in terms:
            num = " ".join(f"t_{ctx.names[j]}^-1" for j in members(_supp(t.alpha))) or "1"
            den = "".join(f"(1-t_{v})" for v in ctx.varset(t.free))
            mult = f"{t.multiplicity}*" if t.multiplicity > 1 else ""
            lines.append(f"  {mult}{num}" + (f" / {den}" if den else ""))
        return {"i": args.i, "kind": "ext", "terms": out}, "\n".join(lines)
    kind = "ext" if args.ext else "lc"
    lo, hi = parse_box(args.box, B.n) if args.box else ((-1,) * B.n, (1,) * B.n)
    table = hilbert_function_box(B, args.i, lo, hi, ctx.field, kind=kind)
    rows = [[list(a), d] for a, d in sorted(table.items())]
    nonzero = [(a, d) for a, d in sorted(table.items()) if d]
    what = "Ext^{}(R/B,R)".format(args.i) if kind == "ext" else f"H^{args.i}_B(R)"
    lines = [f"{what} on box {ctx.deg(lo)}..{ctx.deg(hi)}: {len(nonzero)} of {len(table)} degrees nonzero"]
    lines += [f"  {ctx.deg(a)}  {d}" for a, d in nonzero]
    return {"i": args.i, "kind": kind, "lo": list(lo), "hi": list(hi), "values": rows}, "\n".join(lines)


def cmd_check(ctx: Ctx, args):
    rep = check_betti_inequality(ctx.ideal, ctx.field)
    rows = [
        {
            "i": r.i,
            "alpha": list(r.alpha),
            "lhs": r.lhs,
            "rhs": r.rhs,
            "extremal": r.dual_extremal,
            "equality": r.equality_holds,
            "violation": r.violation,
        }
        for r in rep.rows
        if r.lhs or r.rhs or r.violation
    ]
    extremal = [
        {"i": r.i, "alpha": list(r.alpha), "value": r.lhs, "dual_value": r.dual_value}
        for r in rep.extremal_matches()
    ]
    results = {"rows": rows, "extremal": extremal, "violations": len(rep.violations)}
    lines = ["  i  alpha            lhs  rhs  extremal  equal"]
    for r in rows:
        flag = "  <-- VIOLATION" if r["violation"] else ""
        lines.append(
            f"  {r['i']:<2} {ctx.deg(r['alpha']):<16} {r['lhs']:>3}  {r['rhs']:>3}  {str(r['extremal']):<8}  {r['equality']}{flag}"
        )
    lines.append(f"extremal pairs of B^v matched in B: {len(extremal)}")
    lines.append(f"violations: {len(rep.violations)}")
    if rep.violations:
        raise Mismatch((results, "\n".join(lines)))
    return results, "\n".join(lines)


def cmd_verify(ctx: Ctx, args):
    ideals = [("input", ctx.ideal)]
    if args.random:
        for k, B in enumerate(random_corpus(args.seed, args.random, args.n_max, args.max_gens)):
            ideals.append((f"random[{k}]", B))
    workers = _workers()
    jobs = [(B, ctx.field, args.dmax, args.seed) for _, B in ideals]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_verify_job, jobs))
    else:
        reports = [_verify_job(j) for j in jobs]
    out = []
    lines = []
    bad = 0
    for (name, B), rep in zip(ideals, reports):
        labels = ctx.names if B.n == len(ctx.names) else None
        entry = {
            "name": name,
            "ideal": format_ideal(B, labels),
            "checks": dict(sorted(rep.counts.items())),
            "mismatches": [str(m) for m in rep.mismatches],
        }
        out.append(entry)
        status = "ok" if rep.ok else f"{len(rep.mismatches)} MISMATCHES"
        lines.append(f"{name:<12} {entry['ideal']:<40} {sum(rep.counts.values()):>7} checks  {status}")
        lines.extend(f"    {m}" for m in rep.mismatches[:20])
        bad += not rep.ok
    results = {"ideals": out, "failed": bad}
    lines.append(f"{len(ideals) - bad}/{len(ideals)} ideals verified")
    if bad:
        raise Mismatch((results, "\n".join(lines)))
    return results, "\n".join(lines)


def _verify_job(job):
    B, field, dmax, seed = job
    return verify_ideal(B, field, d_max=dmax, seed=seed)


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# argument handling

_VALUE_FLAGS = ("--alpha", "--box")


def _normalise_argv(argv: Sequence[str]) -> list[str]:
    """Move global flags given before the subcommand behind it, and glue negative values.

    ``--alpha -1,0`` becomes ``--alpha=-1,0`` so argparse does not read it as a flag.
    """
    argv = list(argv)
    leading = []
    while argv and argv[0] not in COMMANDS and argv[0] not in ("-h", "--help"):
        tok = argv.pop(0)
        leading.append(tok)
        if tok == "--field" and argv:
            leading.append(argv.pop(0))
    if argv:
        argv = argv[:1] + leading + argv[1:]
    else:
        argv = leading
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="ideal description file")
    common.add_argument("--json", action="store_true", help="emit a machine-readable JSON document")
    common.add_argument("--field", help="override the field: 'rational' or 'gf <p>'")

    parser = argparse.ArgumentParser(prog="monolc", description="Local cohomology and Ext modules of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("dual", parents=[common], help="Alexander dual generators")

    p = sub.add_parser("complex", parents=[common], help="the complex Delta (or Delta_I, T_I, Delta_alpha)")
    p.add_argument("--support", help="variables of I, e.g. 'a,c'")
    p.add_argument("--t", action="store_true", help="show T_I on the generators instead of Delta_I")
    p.add_argument("--alpha", help="show Delta_alpha for this degree")

    p = sub.add_parser("betti", parents=[common], help="multigraded Betti diagram")
    p.add_argument("--of", choices=("ideal", "dual"), default="ideal")

    for name, helptext in (("lc", "dimension of H^i_B(R)_alpha"), ("ext", "dimension of Ext^i(R/B,R)_alpha")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--i", type=int, required=True)
        p.add_argument("--alpha", required=True, help="comma-separated degree")
        if name == "ext":
            p.add_argument("--general", action="store_true", help="use Delta_alpha even for squarefree ideals")

    p = sub.add_parser("mult", parents=[common], help="matrix of multiplication by a variable")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--var", required=True)

    p = sub.add_parser("filtration", parents=[common], help="filtration subquotients of Ext^i(R/B,R)")
    p.add_argument("--i", type=int, required=True)

    p = sub.add_parser("ass", parents=[common], help="associated primes of Ext^i(R/B,R)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--minimal", action="store_true", help="minimal primes from Betti numbers only")

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function on a box, or the closed form")
    p.add_argument("--i", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--box", help="lo..hi, e.g. -1..2 or -1,-1,0..1,1,2")
    g.add_argument("--closed-form", action="store_true")
    p.add_argument("--ext", action="store_true", help="tabulate Ext^i(R/B,R) instead of H^i_B(R)")

    sub.add_parser("check", parents=[common], help="Betti inequality and extremal equality between B and its dual")

    p = sub.add_parser("verify", parents=[common], help="run the oracle-equivalence suite")
    p.add_argument("--dmax", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0, metavar="N", help="also verify N random ideals")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--max-gens", type=int, default=5)
    return parser


HANDLERS = {
    "dual": cmd_dual,
    "complex": cmd_complex,
    "betti": cmd_betti,
    "lc": cmd_lc,
    "ext": cmd_ext,
    "mult": cmd_mult,
    "filtration": cmd_filtration,
    "ass": cmd_ass,
    "hilbert": cmd_hilbert,
    "check": cmd_check,
    "verify": cmd_verify,
}


def render_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_normalise_argv(argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    code = EXIT_OK
    try:
        spec = parse_ideal_file(args.file)
        field = Field.parse(args.field) if args.field else spec.field
        ctx = Ctx(spec, field)
        try:
            results, text = HANDLERS[args.command](ctx, args)
        except Mismatch as exc:
            results, text = exc.results
            code = EXIT_MISMATCH
    except (ParseError, ArgumentError, DimensionMismatch) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except (DomainError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=stderr)
        return EXIT_MISMATCH
    except MonolcError as exc:
        print(f"error: {exc}", file=stderr)
        return 1

    if args.json:
        doc = {
            "command": args.command,
            "input_hash": spec.digest(),
            "field": field_text(field),
            "results": results,
        }
        stdout.write(render_json(doc))
    else:
        stdout.write(text + "\n")
    return code


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
