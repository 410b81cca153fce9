"""Command-line interface: ``affsieve <subcommand> [options]``.

Exit status is 0 when every requested check passes, 1 when a verification
fails, and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from . import actions, cartan, formulas, qpoly, sieving, weights
from .cartan import FAMILIES, NOTATION, affine_type, datum, supported_types

FORMATS = ("text", "json", "csv")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# helpers

def _type(args, required=True):
    if args.family is None:
        if required:
            raise UsageError("--family is required")
        return None
    return affine_type(args.family, args.rank)


def _level(args):
    if args.level is None:
        raise UsageError("--level is required")
    if args.level < 0:
        raise UsageError("--level must be nonnegative")
    return args.level


def _levels(args):
    if args.level is not None:
        return [_level(args)]
    if args.max_level is None:
        raise UsageError("give --level or --max-level")
    return list(range(0, args.max_level + 1))


def _element(t, text):
    parts = [int(x) for x in text.split(",")]
    if weights.is_bicyclic(t):
        if len(parts) != 2:
            raise UsageError(f"{t} carries the group C2 x C2; give the element as j1,j2")
        return tuple(x % 2 for x in parts)
    if len(parts) != 1:
        raise UsageError(f"{t} carries a cyclic group; give the element as one integer")
    return parts[0] % datum(t).group_order


def _payload(t, level, results, **extra):
    out = {"type": t.family if t else None, "rank": t.rank if t else None, "level": level, "results": results}
    out.update(extra)
    return out


def _weight_record(t, m):
    return {"coeffs": list(m), "weight": weights.format_weight(m), "ev": list(weights.s_evaluation(t, m))}


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, ok)

def cmd_enumerate(args):
    t, level = _type(args), _level(args)
    rows = [_weight_record(t, m) for m in weights.enumerate_level(t, level)]
    return _payload(t, level, rows), True


def cmd_classes(args):
    t, level = _type(args), _level(args)
    d = datum(t)
    indices = [args.index] if args.index is not None else (list(d.dr_indices) if level else [0])
    rows = []
    for i in indices:
        rep = weights.representative(t, level, i)
        members = weights.equivalence_class(t, level, rep)
        rows.append({"index": i, "representative": weights.format_weight(rep), "size": len(members),
                     "members": [weights.format_weight(m) for m in members]})
    return _payload(t, level, rows), True


def cmd_count(args):
    t, level = _type(args), _level(args)
    d = datum(t)
    indices = [args.index] if args.index is not None else (list(d.dr_indices) if level else [0])
    rows, ok = [], True
    for i in indices:
        rep = weights.representative(t, level, i)
        closed = formulas.count_closed(t, level, i)
        binomial = formulas.count_binomial(t, level, i) if t.family in formulas.BINOMIAL_FAMILIES else None
        oracle = weights.count_mx_oracle(t, rep)
        size = len(weights.equivalence_class(t, level, rep))
        agree = closed == oracle == size and binomial in (None, closed)
        ok &= agree
        rows.append({"index": i, "representative": weights.format_weight(rep), "closed": closed,
                     "binomial": binomial, "oracle": oracle, "class_size": size, "agree": agree})
    return _payload(t, level, rows), ok


def cmd_orbits(args):
    t, level = _type(args), _level(args)
    dec = actions.decompose_orbits(t, level, model=args.model)
    rows = [{"representative": weights.format_weight(o.representative), "size": len(o.members),
             "stabilizer_order": o.stabilizer_order, "members": [weights.format_weight(m) for m in o.members]}
            for o in dec.orbits]
    extra = {"model": args.model, "group_order": dec.group_order}
    if args.element is not None:
        g = _element(t, args.element)
        extra["element"] = list(g) if isinstance(g, tuple) else g
        extra["fixed"] = actions.fixed_count(t, level, g)
    return _payload(t, level, rows, **extra), True


def _sweep_types(args, want_bicyclic):
    if args.family is not None:
        t = _type(args)
        if weights.is_bicyclic(t) != want_bicyclic:
            other = "bicsp-verify" if weights.is_bicyclic(t) else "csp-verify"
            raise UsageError(f"{t} is handled by {other}")
        return [t]
    top = args.max_rank if args.max_rank is not None else 6
    return [t for t in supported_types(top, min(top, 7)) if weights.is_bicyclic(t) == want_bicyclic]


def _verify(args, bicyclic):
    types = _sweep_types(args, bicyclic)
    rows, ok = [], True
    for t in types:
        for level in _levels(args):
            rep = sieving.verify_bicsp(t, level) if bicyclic else sieving.verify_csp(t, level)
            ok &= rep.passed
            rows.append(rep.to_dict())
    t = types[0] if len(types) == 1 else None
    return _payload(t, args.level, rows), ok


def cmd_csp(args):
    return _verify(args, False)


def cmd_bicsp(args):
    return _verify(args, True)


def cmd_poly(args):
    t, level = _type(args), _level(args)
    p = qpoly.weight_gen_poly(t, level)
    same = p == qpoly.series_coefficient(t, level)
    if isinstance(p, qpoly.BiQPolynomial):
        res = qpoly.reduce_mod_bicyclic(p)
        row = {"terms": [[i, j, c] for (i, j), c in p.terms],
               "residues": [[a, b, res[(a, b)]] for (a, b) in sorted(res)], "text": str(p)}
    else:
        row = {"coefficients": list(p.coeffs), "residues": list(qpoly.reduce_mod_cyclic(p, datum(t).group_order)),
               "text": str(p)}
    row["series_matches"] = same
    return _payload(t, level, [row]), same


def cmd_triangle(args):
    if args.label is None:
        raise UsageError(f"--label is required; one of {', '.join(formulas.TRIANGLES)}")
    tri = formulas.get_triangle(args.label)
    top = args.max_level if args.max_level is not None else 10
    rows = [{"s": s, "values": tri.row(s)} for s in range(top + 1)]
    return {"type": args.label, "rank": None, "level": None, "results": rows}, True


def cmd_duality(args):
    label = args.label
    if label == "frenkel":
        n, level = args.rank, _level(args)
        if n is None:
            raise UsageError("--rank is required")
        bad = formulas.frenkel_check(n, level)
        rows = [{"weight": list(m), "dual": list(dual)} for m, dual in bad]
        return {"type": "A1", "rank": n, "level": level, "results": rows, "passed": not bad}, not bad
    names = formulas.duality_identities()
    if label is not None and label not in names:
        raise UsageError(f"unknown identity {label!r}; expected one of {', '.join(names)} or frenkel")
    chosen = [label] if label else names
    if args.rank is not None and args.level is not None:
        points = [(args.rank, args.level)]
    else:
        top_n = args.max_rank if args.max_rank is not None else 6
        top_l = args.max_level if args.max_level is not None else 12
        points = [(n, level) for n in range(1, top_n + 1) for level in range(1, top_l + 1)]
    rows, ok = [], True
    for name in chosen:
        if args.index is not None:
            idx = [args.index]
        else:
            idx = [0, 1] if name in ("C1", "A2_odd") else [0]
        for n, level in points:
            for i in idx:
                rec = formulas.duality_check(name, n, level, i)
                if rec.applicable or len(points) == 1:
                    ok &= rec.passed
                    rows.append(rec.to_dict())
    return {"type": label, "rank": args.rank, "level": args.level, "results": rows}, ok


def cmd_sieving_set(args):
    t = _type(args)
    d = datum(t)
    derived = cartan.derive_sieving_set(t)
    rows, ok = [], True
    for name, vecs in (("convention", d.sieving_set), ("derived", derived)):
        v = cartan.validate_sieving_set(t, vecs)
        ok &= v.valid
        rows.append({"source": name, "vectors": [list(s) for s in vecs], "valid": v.valid,
                     "characterizes_root_lattice": v.characterizes_root_lattice,
                     "independent": v.independent, "distinct": v.distinct, "failures": list(v.failures)})
    same = cartan.span_mod(d.sieving_set, d.group_order) == cartan.span_mod(derived, d.group_order)
    ok &= same
    return _payload(t, None, rows, group_order=d.group_order, same_span=same), ok


COMMANDS: dict[str, tuple[Callable, str]] = {
    "enumerate": (cmd_enumerate, "list the level set"),
    "classes": (cmd_classes, "sieving classes of the distinguished representatives"),
    "count": (cmd_count, "compare formula counts with brute force"),
    "orbits": (cmd_orbits, "orbit decomposition under the group action"),
    "csp-verify": (cmd_csp, "verify cyclic sieving"),
    "bicsp-verify": (cmd_bicsp, "verify bicyclic sieving (D1, even rank)"),
    "poly": (cmd_poly, "sieving polynomial and its residues"),
    "triangle": (cmd_triangle, "emit a triangular array"),
    "duality": (cmd_duality, "check level-rank duality identities"),
    "sieving-set": (cmd_sieving_set, "derive and validate root-sieving sets"),
}


# ---------------------------------------------------------------------------
# rendering

def _csv(payload) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    results = payload["results"]
    if payload.get("type") in formulas.TRIANGLES:
        width = max((len(r["values"]) for r in results), default=0)
        w.writerow(["s"] + [f"c{k}" for k in range(width)])
        for r in results:
            w.writerow([r["s"]] + r["values"])
        return buf.getvalue()
    keys = []
    for r in results:
        for k in r:
            if k not in keys:
                keys.append(k)
    w.writerow(keys)
    for r in results:
        w.writerow([_cell(r.get(k)) for k in keys])
    return buf.getvalue()


def _cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return "" if v is None else v


def _text(payload) -> str:
    head = []
    if payload.get("type"):
        head.append(f"type {payload['type']}" + (f" rank {payload['rank']}" if payload.get("rank") else ""))
    if payload.get("level") is not None:
        head.append(f"level {payload['level']}")
    lines = [", ".join(head)] if head else []
    for r in payload["results"]:
        if "values" in r and "s" in r:
            lines.append(" ".join(str(v) for v in r["values"]))
        elif "elements" in r:
            verdict = "pass" if r["passed"] else "FAIL"
            lines.append(f"{r['family']} rank {r['rank']} level {r['level']} ({r['kind']}, |X|={r['size']}): {verdict}")
            for e in r["elements"]:
                if not e["passed"]:
                    lines.append(f"  element {e['element']}: fixed {e['fixed']} != evaluation {e['evaluation']}")
            for e in r["residues"]:
                if not e["passed"]:
                    lines.append(f"  residue {e['residue']}: sum {e['coefficient_sum']} != orbits {e['orbit_count']}")
        else:
            lines.append("  ".join(f"{k}={_cell(v)}" for k, v in r.items()))
    for k, v in payload.items():
        if k not in ("type", "rank", "level", "results"):
            lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


def render(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return _csv(payload)
    return _text(payload)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fams = ", ".join(f"{f} = {NOTATION[f]}" for f in FAMILIES)
    p = argparse.ArgumentParser(prog="affsieve", description="Dominant maximal weights and sieving for affine types.",
                                epilog=f"families: {fams}; aliases A2even, A2odd, E6, E7, E8, F4, G2")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--family")
        s.add_argument("--rank", type=int)
        s.add_argument("--level", type=int)
        s.add_argument("--index", type=int)
        s.add_argument("--element")
        s.add_argument("--label")
        s.add_argument("--model", choices=("permutation", "sagan"), default="permutation")
        s.add_argument("--format", choices=FORMATS, default="text")
        s.add_argument("--out")
        s.add_argument("--max-level", type=int)
        s.add_argument("--max-rank", type=int)
    return p


def execute(args) -> tuple[int, dict | None, str]:
    """Run a parsed invocation; returns ``(status, payload, rendered output)``."""
    func = COMMANDS[args.command][0]
    try:
        payload, ok = func(args)
    except AssertionError as exc:
        return 1, None, f"verification failure: {exc}\n"
    except (ValueError, NotImplementedError, KeyError) as exc:
        return 2, None, f"error: {exc}\n"
    return (0 if ok else 1), payload, render(payload, args.format)


def run(argv=None) -> tuple[int, str]:
    status, _, out = execute(build_parser().parse_args(argv))
    return status, out


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    status, payload, out = execute(args)
    if payload is not None and args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        (sys.stdout if payload is not None else sys.stderr).write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
