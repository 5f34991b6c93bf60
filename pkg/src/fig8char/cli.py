"""Command-line front end: classify, trace, construct, suite, symmetry.

Exit codes: 0 success or nonempty classification, 1 failing suite,
2 parse error, 3 empty classification, 4 relation failure, 5 excluded locus.
"""

from __future__ import annotations

import argparse
import json
import sys

from .components import classify
from .constructors import (
    ExcludedLocus,
    SlicePoint,
    dehn_rep,
    slice_rep,
    v0_family,
    v1_family,
    v2_family,
    xpr_rep,
    xtr_rep,
)
from .coords import (
    CharCoords,
    extract,
    extract_projective,
    mu3_act,
    orbit,
    sym_f,
    sym_h,
)
from .grp import ALPHABETS, RelationError, Representation, failing_relations
from .mat3 import Matrix
from .numtower import ParseError, QuadExt, format_elem, parse_elem
from .verify import UnknownSuite, list_suites, run_suite

__all__ = ["main", "main_entry", "read_repr", "repr_from_dict", "repr_to_dict", "write_repr"]

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_EMPTY, EXIT_RELATION, EXIT_EXCLUDED = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# representation files

def _modulus_of(values):
    for v in values:
        if isinstance(v, QuadExt):
            return v.D
    return None


def repr_to_dict(rep, normalized=True):
    """JSON-ready dictionary of a representation (see :func:`repr_from_dict`)."""
    entries = [x for m in rep.gens.values() for x in m.entries()]
    D = _modulus_of(entries)
    field = {"base": "Qzeta12"}
    if D is not None:
        field["sqrt"] = format_elem(D)
    return {
        "field": field,
        "alphabet": rep.alphabet,
        "normalized": normalized,
        "generators": {g: [[format_elem(x) for x in row] for row in m.rows]
                       for g, m in rep.gens.items()},
    }


def repr_from_dict(data):
    """Inverse of :func:`repr_to_dict`; returns ``(rep, normalized)``."""
    try:
        field = data["field"]
        if field.get("base") != "Qzeta12":
            raise CliError(f"unsupported base field {field.get('base')!r}", EXIT_PARSE)
        D = parse_elem(field["sqrt"]) if "sqrt" in field else None
        alphabet = data["alphabet"]
        if alphabet not in ALPHABETS:
            raise CliError(f"unknown alphabet {alphabet!r}", EXIT_PARSE)
        gens = {}
        for g, rows in data["generators"].items():
            n = len(rows)
            if n not in (2, 3) or any(len(r) != n for r in rows):
                raise CliError(f"generator {g} is not a square 2×2 or 3×3 array", EXIT_PARSE)
            gens[g] = Matrix([[parse_elem(x, D) for x in row] for row in rows])
        rep = Representation(alphabet, gens)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from None
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise CliError(f"malformed representation file: {exc}", EXIT_PARSE) from None
    return rep, bool(data.get("normalized", True))


def write_repr(path, rep, normalized=True):
    text = json.dumps(repr_to_dict(rep, normalized), indent=2, ensure_ascii=False) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_repr(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from None
    return repr_from_dict(data)


# ---------------------------------------------------------------------------
# commands

def _parse_list(text, D):
    try:
        return [parse_elem(part, D) for part in text.split(",")]
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from None


def _sqrt_arg(args):
    if not getattr(args, "sqrt", None):
        return None
    try:
        return parse_elem(args.sqrt)
    except ParseError as exc:
        raise CliError(f"parse error in --sqrt: {exc}", EXIT_PARSE) from None


def _coords_arg(args):
    D = _sqrt_arg(args)
    if getattr(args, "file", None):
        try:
            with open(args.file, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read {args.file}: {exc}", EXIT_PARSE) from None
        if "sqrt" in data:
            D = parse_elem(data["sqrt"])
        text = data.get("coords")
        if isinstance(text, list):
            text = ",".join(text)
    else:
        text = args.coords
    if not text:
        raise CliError("no coordinates given", EXIT_PARSE)
    values = _parse_list(text, D)
    if len(values) != 8:
        raise CliError(f"expected 8 coordinates, got {len(values)}", EXIT_PARSE)
    return CharCoords(*values)


def cmd_classify(args, out):
    c = _coords_arg(args)
    result = classify(c)
    print(str(result), file=out)
    if result.undecided:
        print("undecided: " + " ".join(sorted(result.undecided)), file=out)
    if result.xpr_params:
        v, w, x1 = result.xpr_params
        D = _modulus_of(result.xpr_params)
        where = f" (s^2 = {format_elem(D)})" if D is not None else ""
        print(f"XPR parameters: v={format_elem(v)} w={format_elem(w)} x1={format_elem(x1)}{where}",
              file=out)
    return EXIT_OK if result else EXIT_EMPTY


def cmd_trace(args, out):
    rep, normalized = read_repr(args.rep)
    bad = failing_relations(rep)
    if bad:
        raise CliError(f"relation fails: {bad[0]}", EXIT_RELATION)
    if rep.alphabet == "KL":
        raise CliError("trace expects a knot group representation", EXIT_PARSE)
    t, a, b = rep("t"), rep("a"), rep("b")
    if args.orbit or not normalized:
        print(str(extract_projective(t, a, b)), file=out)
    else:
        print(str(extract(rep)), file=out)
    return EXIT_OK


def _construct(component, params, branch, target):
    need = {"XTR": 2, "XPR": 3, "V0": 2, "V1": 2, "V2": 2, "SLICE": 4}[component]
    if len(params) != need:
        raise CliError(f"{component} takes {need} parameters", EXIT_PARSE)
    if component == "XTR":
        return xtr_rep(*params), True
    if component == "XPR":
        return xpr_rep(*params), True
    if component == "SLICE":
        p = SlicePoint(*params)
        if target:
            return dehn_rep(p, target), True
        return slice_rep(p), True
    build = {"V0": v0_family, "V1": v1_family, "V2": v2_family}[component]
    fp = build(*params, branch)
    rep = fp.rep()
    if rep is not None:
        return rep, True
    return fp.projective_rep(), False


def cmd_construct(args, out):
    D = _sqrt_arg(args)
    params = _parse_list(args.params, D)
    branch = -1 if args.branch == "-" else 1
    rep, normalized = _construct(args.component, params, branch, args.target)
    if args.out:
        write_repr(args.out, rep, normalized)
    else:
        print(json.dumps(repr_to_dict(rep, normalized), indent=2, ensure_ascii=False), file=out)
    return EXIT_OK


def cmd_suite(args, out):
    if args.list:
        for name, claim, modes in list_suites():
            print(f"{name}  [{', '.join(modes)}]  {claim}", file=out)
        return EXIT_OK
    if not args.name:
        raise CliError("--name is required", EXIT_PARSE)
    try:
        report = run_suite(args.name, args.mode, args.n, args.seed)
    except UnknownSuite:
        raise CliError(f"unknown suite {args.name!r}", EXIT_PARSE) from None
    out.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_symmetry(args, out):
    c = _coords_arg(args)
    if args.op == "f":
        image = sym_f(c)
    elif args.op == "h":
        image = sym_h(c)
    else:
        image = mu3_act(1, c.without_eta())
    print(str(image), file=out)
    if args.orbit:
        print(str(orbit(image)), file=out)
    return EXIT_OK


def _parser():
    p = argparse.ArgumentParser(prog="fig8char",
                                description="Exact SL(3) character computations for the figure-eight knot group.")
    sub = p.add_subparsers(dest="command", required=True)

    def coords_opts(sp):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--coords", help="y,yb,z,zb,alpha,alphab,beta,betab")
        src.add_argument("--file", help="JSON file with a 'coords' entry")
        sp.add_argument("--sqrt", help="radicand D for the symbol s")

    sp = sub.add_parser("classify", help="components containing a point")
    coords_opts(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("trace", help="trace coordinates of a representation file")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--orbit", action="store_true", help="print μ3-invariant orbit coordinates")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("construct", help="build a representation on a component")
    sp.add_argument("--component", required=True,
                    choices=("XTR", "XPR", "V0", "V1", "V2", "SLICE"))
    sp.add_argument("--params", required=True, help="comma-separated parameters")
    sp.add_argument("--branch", default="+", choices=("+", "-"))
    sp.add_argument("--target", choices=("V1", "V2"),
                    help="for SLICE: pull back to the knot group through this filling")
    sp.add_argument("--sqrt", help="radicand D for the symbol s")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("suite", help="run an identity suite")
    sp.add_argument("--name")
    sp.add_argument("--mode", default="sampled", choices=("symbolic", "sampled"))
    sp.add_argument("--n", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--list", action="store_true")
    sp.set_defaults(func=cmd_suite)

    sp = sub.add_parser("symmetry", help="apply f, h or the center action")
    sp.add_argument("--op", required=True, choices=("f", "h", "w"))
    sp.add_argument("--orbit", action="store_true")
    coords_opts(sp)
    sp.set_defaults(func=cmd_symmetry)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = _parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ExcludedLocus as exc:
        print(f"error: excluded locus: {exc}", file=sys.stderr)
        return EXIT_EXCLUDED
    except RelationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RELATION
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE



def main_entry():
    sys.exit(main())
