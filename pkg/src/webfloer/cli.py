"""Command-line entry point.

Every verb prints one canonical JSON document on stdout (sorted keys, compact
separators, rationals as ``"p/q"`` strings).  Exit codes: 0 ok, 1 domain error
or failed check, 2 parse error or bad usage.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import catalogue, corpus, dotalgebra, floerblocks, foamcalc, onesets, tait
from .gf2 import GF2Matrix
from .graded import GradedModule, Summand
from .webmodel import WebParseError, canonical_json, load_web, parse_foam, parse_web, validate

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


class UsageError(Exception):
    pass


class Failed(Exception):
    """A check ran and reported failure; its payload is still printed."""

    def __init__(self, payload: Any):
        super().__init__("check failed")
        self.payload = payload


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        raise TypeError("floats never appear in output")
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _json_file(path: str) -> dict:
    try:
        doc = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise WebParseError("malformed", exc.msg, offset=exc.pos) from None
    if not isinstance(doc, dict):
        raise WebParseError("malformed", "top level must be an object", offset=0)
    return doc


def parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like lo..hi, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("window lower end exceeds upper end")
    return lo, hi


def _oneset(web, index: int) -> onesets.OneSet:
    sets = onesets.enumerate_onesets(web)
    if not 0 <= index < len(sets):
        raise IndexError(f"1-set index {index} out of range ({len(sets)} 1-sets)")
    return sets[index]


# --------------------------------------------------------------------------
# verbs


def cmd_validate(a) -> dict:
    web = load_web(_read(a.file))
    diags = validate(web)
    out = {"ok": not diags, "diagnostics": diags}
    if diags:
        raise Failed(out)
    return out


def cmd_onesets(a) -> list:
    web = parse_web(_read(a.file))
    rows = []
    for k, s in enumerate(onesets.enumerate_onesets(web)):
        dec = onesets.r_cycles(web, s)
        rows.append(
            {
                "index": k,
                "c_edges": list(s.key),
                "n": dec.n,
                "c_endpoint_count": list(dec.c_endpoint_count),
                "even": onesets.is_even(web, s),
            }
        )
    return rows


def cmd_foam_onesets(a) -> list:
    foam = parse_foam(_read(a.file))
    return [list(fs.key) for fs in onesets.enumerate_foam_onesets(foam)]


def cmd_tait(a) -> dict:
    return {"tait_count": tait.count_tait(parse_web(_read(a.file)))}


def cmd_verify_tait(a) -> dict:
    if a.random:
        seed = 0 if a.seed is None else a.seed
        graphs = tait.random_cubic_multigraphs(a.max_vertices, seed, a.random)
        bad = [k for k, g in enumerate(graphs) if tait.count_tait_exhaustive(g) != tait.identity_rhs(g)[0]]
        out = {"graphs": len(graphs), "failures": len(bad), "failed_indices": bad, "seed": seed}
        if bad:
            raise Failed(out)
        return out
    if a.file is None:
        raise UsageError("verify-tait needs a web file or --random N")
    rep = tait.verify_identity(parse_web(_read(a.file)), exhaustive=a.exhaustive)
    out = {"lhs": rep.tait_count, "rhs": rep.identity_rhs, "ok": rep.ok}
    if not rep.ok:
        raise Failed(out)
    return out


def _window_dims(module_dict: dict, lo: int, hi: int) -> dict:
    m = GradedModule(tuple(Summand(s["shape"], s["offset"]) for s in module_dict["summands"]))
    return m.dims(lo, hi)


def cmd_ranks(a) -> dict:
    web = parse_web(_read(a.file))
    out = catalogue.homology(web, _oneset(web, a.oneset), a.flavour).as_dict()
    if a.window:
        for e in out["entries"]:
            e["dims"] = _window_dims(e["module"], *a.window)
    return out


def cmd_framed_rank(a) -> dict:
    web = parse_web(_read(a.file))
    return catalogue.framed_rank(web, a.basepoint, a.restrict).as_dict()


def cmd_vanishing(a) -> dict:
    web = parse_web(_read(a.file))
    return catalogue.vanishing_check(web, _oneset(web, a.oneset)).as_dict()


def cmd_algebra(a) -> dict:
    web = parse_web(_read(a.file))
    s = _oneset(web, a.oneset)
    ctx = dotalgebra.DotContext.of(web, s)
    elt = dotalgebra.parse_expression(ctx, a.expression)
    return {
        "normal_form": dotalgebra.format_element(elt),
        "degrees": sorted(elt.degrees()),
        "n": ctx.n,
    }


def _window_or_range(a, cc: floerblocks.ChainComplex) -> tuple[int, int]:
    if a.window:
        return a.window
    return cc.grade_range()


def cmd_floer_check(a) -> dict:
    bc = floerblocks.parse_complex(_read(a.file))
    rep = floerblocks.validate_identities(bc)
    out = rep.as_dict()
    if rep.ok:
        les = floerblocks.long_exact_sequence(bc)
        out["chain_maps"] = dict(les.chain_maps)
        out["exact"] = les.ok
        out["positions_checked"] = les.positions_checked
    if not out.get("exact", False) or not rep.ok:
        raise Failed(out)
    return out


def cmd_floer_homology(a) -> dict:
    bc = floerblocks.parse_complex(_read(a.file))
    cc = floerblocks.build_flavour(bc, a.flavour)
    if cc.size == 0:
        return {"flavour": a.flavour, "dims": {}}
    lo, hi = _window_or_range(a, cc)
    return {"flavour": a.flavour, "dims": cc.homology(lo, hi)}


def cmd_floer_cone(a) -> dict:
    doc = _json_file(a.file)
    if "module" in doc:
        module = GradedModule(tuple(Summand(s["shape"], int(s.get("offset", 0))) for s in doc["module"]))
        out: dict = {"total": floerblocks.upsilon_cone_rank(module)}
        if a.window:
            cc, ups = floerblocks.module_model(module, a.window[0] - 4, a.window[1] + 4)
            out["dims"] = floerblocks.cone_homology(cc, ups, -1, *a.window)
        return out
    grades = tuple(int(g) for g in doc["grades"])
    n = len(grades)
    D = GF2Matrix.from_entries(n, n, [tuple(e) for e in doc.get("differential", [])])
    f = GF2Matrix.from_entries(n, n, [tuple(e) for e in doc.get("map", [])])
    degree = int(doc.get("degree", -1))
    cc = floerblocks.ChainComplex(grades, D)
    cc.check()
    cone = floerblocks.mapping_cone(cc, f, degree)
    lo, hi = _window_or_range(a, cone) if cone.size else (0, -1)
    dims = cone.homology(lo, hi)
    return {"dims": dims, "total": sum(dims.values())}


def _params(a) -> dict:
    doc = _json_file(a.file)
    for k, v in doc.items():
        if isinstance(v, float):
            raise WebParseError("malformed", f"parameter {k!r} is a float; use an integer or a 'p/q' string")
    return doc


def _need(doc: dict, *names: str) -> list:
    missing = [n for n in names if n not in doc]
    if missing:
        raise KeyError(f"missing parameters: {', '.join(missing)}")
    return [doc[n] for n in names]


def cmd_foam_index(a) -> dict:
    doc = _params(a)
    c1_sq, sigma = _need(doc, "c1_sq", "sigma")
    c1c, cc = doc.get("c1_dot_c", 0), doc.get("c_self_int", 0)
    out: dict = {"dirac_index": foamcalc.dirac_index_bifold(c1_sq, sigma, c1c, cc)}
    if "b1_r" in doc:
        inp = foamcalc.FoamIndexInput(
            doc["b1_r"], doc.get("self_int_r", 0), c1_sq, sigma, c1c, cc
        )
        dim = foamcalc.moduli_dimension(inp)
        out["moduli_dimension"] = dim
        out["notes"] = ["orientability of the complex lift assumed"] + inp.warnings
        if dim.denominator != 1:
            out["notes"].append("non-integer dimension: inputs are inconsistent")
    return out


def cmd_foam_bplus(a) -> dict:
    doc = _params(a)
    b1, si = _need(doc, "b1_r", "self_int_r")
    return {"b_plus": foamcalc.b_plus(b1, si)}


def cmd_foam_admissible(a) -> dict:
    doc = _params(a)
    b1, si = _need(doc, "b1_r", "self_int_r")
    return {"admissible": foamcalc.admissible_foam(b1, si), "b_plus": foamcalc.b_plus(b1, si)}


def cmd_foam_vortex(a) -> dict:
    doc = _params(a)
    dl, dk, e = _need(doc, "deg_L", "deg_K", "e")
    v = foamcalc.vortex_moduli(dl, dk, e)
    return {"moduli": str(v), "kind": v.kind, "e": v.e}


def cmd_foam_picard(a) -> dict:
    doc = _params(a)
    (c,) = _need(doc, "c")
    return {"member": foamcalc.surface_picard_member(c, doc.get("betas", []))}


def cmd_corpus(a) -> dict:
    golden = corpus.load_golden(a.golden) if a.golden else None
    out = corpus.run_corpus(golden, threads=a.threads)
    if out["failed"]:
        raise Failed(out)
    return out


# --------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the flags appear before or after the verb without clobbering
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--window", type=parse_window, default=argparse.SUPPRESS, metavar="LO..HI")
    return p


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # lets "--window -3..2" read the window as a value, not as an option
        self._negative_number_matcher = re.compile(r"^-\d+(\.\.-?\d+)?$")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    # verb parsers get their own copy of the global flags; sharing the action
    # objects with the top-level parser would let its defaults leak through
    common = _common()
    p = _Parser(prog="webfloer", description="Combinatorics and Floer bookkeeping for trivalent webs.", parents=[_common()])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, fn, help: str, parent=sub):
        q = parent.add_parser(name, help=help, parents=[common])
        q.set_defaults(fn=fn)
        return q

    q = verb("validate", cmd_validate, "check a web file and list diagnostics")
    q.add_argument("file")
    q = verb("onesets", cmd_onesets, "enumerate the 1-sets of a web")
    q.add_argument("file")
    q = verb("foam-onesets", cmd_foam_onesets, "enumerate the 1-sets of a foam skeleton")
    q.add_argument("file")
    q = verb("tait", cmd_tait, "count Tait colourings")
    q.add_argument("file")
    q = verb("verify-tait", cmd_verify_tait, "check the even 1-set identity")
    q.add_argument("file", nargs="?")
    q.add_argument("--random", type=int, default=0, metavar="N", help="sweep N random cubic multigraphs instead")
    q.add_argument("--max-vertices", type=int, default=8)
    q.add_argument("--exhaustive", action="store_true", help="count colourings without pruning")
    q = verb("ranks", cmd_ranks, "catalogued homology of one 1-set")
    q.add_argument("file")
    q.add_argument("--oneset", type=int, required=True)
    q.add_argument("--flavour", choices=catalogue.HOMOLOGY_FLAVOURS, required=True)
    q = verb("framed-rank", cmd_framed_rank, "rank of framed homology at a basepoint edge")
    q.add_argument("file")
    q.add_argument("--basepoint", required=True)
    q.add_argument("--restrict", action="store_true", help="count one spin-c class per 1-set")
    q = verb("vanishing", cmd_vanishing, "apply the vanishing and nonvanishing rules")
    q.add_argument("file")
    q.add_argument("--oneset", type=int, required=True)

    alg = sub.add_parser("algebra", help="dot algebra", parents=[common]).add_subparsers(
        dest="sub", required=True, parser_class=_Parser
    )
    q = verb("normal-form", cmd_algebra, "normal form of a dot expression", alg)
    q.add_argument("file")
    q.add_argument("expression")
    q.add_argument("--oneset", type=int, default=0)

    fl = sub.add_parser("floer", help="block complexes", parents=[common]).add_subparsers(
        dest="sub", required=True, parser_class=_Parser
    )
    q = verb("check", cmd_floer_check, "validate identities and the exact triangle", fl)
    q.add_argument("file")
    q = verb("homology", cmd_floer_homology, "homology dimensions of one flavour", fl)
    q.add_argument("file")
    q.add_argument("--flavour", choices=floerblocks.FLAVOURS, required=True)
    q = verb("cone", cmd_floer_cone, "mapping cone of a degree -1 map or of v on a module", fl)
    q.add_argument("file")

    fo = sub.add_parser("foam", help="foam numerics", parents=[common]).add_subparsers(
        dest="sub", required=True, parser_class=_Parser
    )
    for name, fn, h in (
        ("index", cmd_foam_index, "bifold Dirac index and moduli dimension"),
        ("bplus", cmd_foam_bplus, "b+ from the real surface"),
        ("admissible", cmd_foam_admissible, "whether b+ > 1"),
        ("vortex", cmd_foam_vortex, "vortex moduli dichotomy"),
        ("picard", cmd_foam_picard, "orbifold Picard membership"),
    ):
        verb(name, fn, h, fo).add_argument("file")

    q = verb("corpus", cmd_corpus, "run the golden suite")
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--golden", help="alternative golden JSON file")
    return p


def _text(x: Any, indent: str = "") -> str:
    if isinstance(x, dict) and "entries" in x and "passed" in x:
        lines = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['name']}" for r in x["entries"]]
        lines.append(f"{x['passed']}/{x['total']} passed")
        return "\n".join(lines)
    if isinstance(x, dict):
        return "\n".join(
            f"{indent}{k}:\n{_text(v, indent + '  ')}" if isinstance(v, (dict, list)) and v else f"{indent}{k}: {json.dumps(v)}"
            for k, v in sorted(x.items())
        )
    if isinstance(x, list):
        return "\n".join(f"{indent}- {canonical_json(v)}" for v in x)
    return f"{indent}{x}"


def render(result: Any, fmt: str) -> str:
    result = jsonable(result)
    return canonical_json(result) if fmt == "json" else _text(result)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PARSE
    for name, default in (("format", "json"), ("seed", None), ("window", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    code = EXIT_OK
    try:
        result = args.fn(args)
    except Failed as f:
        result, code = f.payload, EXIT_DOMAIN
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (WebParseError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, KeyError, IndexError, TypeError, AssertionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_DOMAIN
    print(render(result, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
