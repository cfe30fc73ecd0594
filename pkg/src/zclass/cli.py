"""Command-line front end.

Subcommands: table, count, verify, poly, forms, hyperbolic.  Output is TSV by
default, JSON (validating against schema/output.schema.json) with
--format json.  Exit status: 0 success, 1 verification mismatch, 2 usage or
bounds error.  All output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import ff, group, hermitian, linalg, matio, poly, series, zcount
from .errors import BoundExceededError

KIND_BY_FLAG = {"gl": "general_linear", "u": "unitary"}


@dataclass
class RunConfig:
    command: str
    fmt: str
    seed: int
    bound: int | None


def _emit(cfg: RunConfig, params: dict, result: dict, tsv_lines: list[str]) -> None:
    if cfg.fmt == "json":
        doc = {"command": cfg.command, "params": params, "result": result}
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        for line in tsv_lines:
            print(line)


def _field_spec_for(q: int) -> ff.FieldSpec:
    p, e = zcount._prime_power(q)
    return ff.field_make(p, e)


def _poly_text(f: poly.Poly) -> str:
    return ",".join(str(c) for c in f.coeffs)


def _parse_poly(text: str) -> poly.Poly:
    try:
        coeffs = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError("polynomial must be comma-separated coefficient indices") from None
    return poly.poly_make(coeffs)


# ---------------------------------------------------------------------------


def _cmd_table(cfg: RunConfig, args) -> int:
    fns = {"c": series.z_series, "r": series.z_real_series, "fq": series.z_fq_series}
    values = list(fns[args.field](args.max_n).coeffs[1:])
    params = {"field": args.field, "max_n": args.max_n}
    result = {"field": args.field, "counts": values}
    lines = [f"{n}\t{v}" for n, v in enumerate(values, start=1)]
    _emit(cfg, params, result, lines)
    return 0


def _cmd_count(cfg: RunConfig, args) -> int:
    kind = KIND_BY_FLAG[args.group]
    if args.realizable:
        if args.q is None:
            raise ValueError("--realizable needs --q")
        value = zcount.count_realizable(args.n, args.q, kind, args.kind)
    elif args.kind == "semisimple":
        value = zcount.count_semisimple(args.n)
    elif args.kind == "unipotent":
        value = zcount.count_unipotent(args.n)
    else:
        value = (len(zcount.enumerate_types_gl(args.n)) if args.group == "gl"
                 else len(zcount.enumerate_types_u(args.n)))
    params = {"group": args.group, "n": args.n, "q": args.q,
              "kind": args.kind, "realizable": bool(args.realizable)}
    _emit(cfg, params, {"count": value}, [f"count\t{value}"])
    return 0


def _build_group(args, spec):
    kind = KIND_BY_FLAG[args.group]
    if kind == "general_linear":
        return group.build_general_linear(args.n, spec, bound=args.bound)
    return group.build_unitary(args.n, spec, bound=args.bound)


def _cmd_verify(cfg: RunConfig, args) -> int:
    if args.element_file:
        spec, mat = matio.read_matrix_file(args.element_file)
        n = mat.shape[0]
        wall = group.wall_membership(spec, n, mat, bound=args.bound)
        direct = _class_meets_unitary(spec, n, mat, bound=args.bound)
        ok = wall == direct
        status = "OK" if ok else "MISMATCH"
        params = {"group": args.group, "n": n, "q": spec.q, "kind": args.kind,
                  "element_file": True}
        result = {"wall": wall, "direct": direct, "ok": ok}
        line = (f"group=u n={n} q={spec.q} wall={str(wall).lower()} "
                f"direct={str(direct).lower()} {status}")
        _emit(cfg, params, result, [line])
        return 0 if ok else 1

    if args.q is None:
        raise ValueError("verify needs --q")
    spec = _field_spec_for(args.q)
    kind = KIND_BY_FLAG[args.group]
    table = _build_group(args, spec)
    brute = group.z_class_count(table, restrict=args.kind)
    formula = zcount.count_realizable(args.n, args.q, kind, args.kind)
    ok = brute == formula
    status = "OK" if ok else "MISMATCH"
    params = {"group": args.group, "n": args.n, "q": args.q, "kind": args.kind}
    result = {"brute": brute, "formula": formula, "ok": ok}
    line = (f"group={args.group} n={args.n} q={args.q} kind={args.kind} "
            f"brute={brute} formula={formula} {status}")
    _emit(cfg, params, result, [line])
    return 0 if ok else 1


def _class_meets_unitary(spec, n, mat, bound=None):
    """Does the GL_n(q^2) class of mat contain a unitary element, directly."""
    tab = group._gl_extension_table(spec, n, bound)
    classes = group.conjugacy_classes(tab)
    cid = int(classes.class_id[tab.index_of(mat)])
    members = np.nonzero(classes.class_id == cid)[0]
    mask = group._unitary_mask(spec, tab.elems[members],
                               linalg.identity(n))
    return bool(mask.any())


def _cmd_poly(cfg: RunConfig, args) -> int:
    spec = _field_spec_for(args.q)
    if args.action == "selfurec":
        if args.degree is None:
            raise ValueError("selfurec needs --degree")
        polys = poly.enumerate_irreducibles(
            spec, args.degree, filter="self_u_reciprocal",
            bound=args.bound or poly.DEFAULT_POLY_BOUND)
        params = {"action": "selfurec", "q": args.q, "degree": args.degree,
                  "list": bool(args.list)}
        result = {"count": len(polys)}
        lines = [f"count\t{len(polys)}"]
        if args.list:
            result["polys"] = [_poly_text(f) for f in polys]
            lines += [f"poly\t{_poly_text(f)}" for f in polys]
        _emit(cfg, params, result, lines)
        return 0
    if args.input is None:
        raise ValueError(f"{args.action} needs --input")
    f = _parse_poly(args.input)
    if args.action == "tilde":
        out = poly.u_reciprocal(spec, f)
        params = {"action": "tilde", "q": args.q, "input": _poly_text(f)}
        _emit(cfg, params, {"output": _poly_text(out)}, [f"tilde\t{_poly_text(out)}"])
        return 0
    fact = poly.self_urec_factorize(spec, f,
                                    bound=args.bound or poly.DEFAULT_POLY_BOUND)
    params = {"action": "factor", "q": args.q, "input": _poly_text(f)}
    result = {
        "self_factors": [{"poly": _poly_text(g), "multiplicity": m}
                         for g, m in fact.self_factors],
        "pair_factors": [{"poly": _poly_text(g), "partner": _poly_text(gt),
                          "multiplicity": m}
                         for g, gt, m in fact.pair_factors],
    }
    lines = [f"self\t{_poly_text(g)}\t{m}" for g, m in fact.self_factors]
    lines += [f"pair\t{_poly_text(g)}\t{_poly_text(gt)}\t{m}"
              for g, gt, m in fact.pair_factors]
    _emit(cfg, params, result, lines)
    return 0


def _cmd_forms(cfg: RunConfig, args) -> int:
    spec, gram = matio.read_matrix_file(args.gram[0])
    form = hermitian.hermitian_validate(spec, gram)
    if args.action == "canonicalize":
        witness, _ = hermitian.hermitian_diagonalize(spec, form)
        params = {"action": "canonicalize", "gram": "file"}
        result = {"n": form.n, "p": spec.p, "e": spec.e,
                  "witness": [[int(x) for x in row] for row in witness]}
        lines = matio.format_matrix(spec, witness).rstrip("\n").split("\n")
        _emit(cfg, params, result, lines)
        return 0
    if len(args.gram) != 2:
        raise ValueError("equivalent needs two Gram files")
    spec2, gram2 = matio.read_matrix_file(args.gram[1])
    if spec2 is not spec:
        raise ValueError("Gram files live over different fields")
    form2 = hermitian.hermitian_validate(spec, gram2)
    eq = hermitian.hermitian_equivalent(spec, form, form2)
    params = {"action": "equivalent", "gram": "file"}
    _emit(cfg, params, {"equivalent": eq}, [f"equivalent\t{str(eq).lower()}"])
    return 0


def _cmd_hyperbolic(cfg: RunConfig, args) -> int:
    counts = zcount.hyperbolic_counts(args.n)
    compact = zcount.compact_unitary_count(args.n + 1)
    params = {"n": args.n}
    result = {"elliptic": counts["elliptic"], "hyperbolic": counts["hyperbolic"],
              "parabolic": counts.get("parabolic"), "compact": compact}
    lines = [f"elliptic\t{counts['elliptic']}", f"hyperbolic\t{counts['hyperbolic']}"]
    if "parabolic" in counts:
        lines.append(f"parabolic\t{counts['parabolic']}")
    lines.append(f"compact\t{compact}")
    _emit(cfg, params, result, lines)
    return 0


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zclass",
                                 description="z-class counting and verification "
                                             "in finite GL_n and U_n")
    ap.add_argument("--format", choices=["tsv", "json"], default="tsv")
    ap.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="generating-function table rows")
    t.add_argument("--field", choices=["c", "r", "fq"], required=True)
    t.add_argument("--max-n", type=int, default=10)

    c = sub.add_parser("count", help="closed-form type counts")
    c.add_argument("--group", choices=["gl", "u"], required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int)
    c.add_argument("--realizable", action="store_true")
    c.add_argument("--kind", choices=["all", "semisimple", "unipotent"],
                   default="all")

    v = sub.add_parser("verify", help="brute force against the formulas")
    v.add_argument("--group", choices=["gl", "u"], default="u")
    v.add_argument("--n", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--kind", choices=["all", "semisimple", "unipotent"],
                   default="all")
    v.add_argument("--bound", type=int)
    v.add_argument("--element-file")

    p = sub.add_parser("poly", help="polynomial utilities over F_{q^2}")
    p.add_argument("action", choices=["selfurec", "tilde", "factor"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--input")
    p.add_argument("--list", action="store_true")
    p.add_argument("--bound", type=int)

    f = sub.add_parser("forms", help="hermitian Gram matrix utilities")
    f.add_argument("action", choices=["canonicalize", "equivalent"])
    f.add_argument("--gram", nargs="+", required=True)

    h = sub.add_parser("hyperbolic", help="rank-one and compact z-class counts")
    h.add_argument("--n", type=int, required=True)
    return ap


_DISPATCH = {
    "table": _cmd_table,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "poly": _cmd_poly,
    "forms": _cmd_forms,
    "hyperbolic": _cmd_hyperbolic,
}


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    cfg = RunConfig(command=args.command, fmt=args.format, seed=args.seed,
                    bound=getattr(args, "bound", None))
    try:
        return _DISPATCH[args.command](cfg, args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
