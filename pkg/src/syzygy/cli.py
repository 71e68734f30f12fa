"""Command line interface.

Objects are named in a text-format document (``--input``; the bundled
fixtures otherwise) and may be combined with a small expression language::

    NAME            a module of the document
    m(R) k(R)       maximal ideal / residue field of ring R
    free(R)         R itself
    omega(i, X)     i-th syzygy of X
    sum(X, Y, ...)  direct sum

Every command prints one JSON object.  With ``--figure-dir`` the JSON, any
tables (TSV) and a figure are also written there.  Exit codes: 0 pass,
1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
import time

from . import fixtures
from .errors import ParseError, PreconditionError, SyzygyError
from .fpmod import FPModule, direct_sum, minimal_presentation
from .homalg import depth, ext, tor
from .resolutions import free_resolution, syzygy
from .structure import DEFAULT_SEED, DEFAULT_TRIALS, decompose, decompose_maximal_ideal, fiber_product, split_summand
from .textformat import load, parse_document

ANCHORS = {
    "resolve": "the minimal free resolution of the $R$-module $R/(y)$ has the form",
    "betti": "the minimal free resolution of the $R$-module $R/(y)$ has the form",
    "syzygy": "R/J if i≥0 is odd, R/I if i≥0 is even",
    "ext": "We claim that $\\operatorname{Ext}_R^1(R/I,R)=0$",
    "tor": "Tor_ℓ^R(M,N)=0 for some ℓ≥5, then M or N is R-free",
    "depth": None,
    "decompose": "We then have $\\mathfrak{m}=I\\oplus J$.",
    "split": "is a direct summand of Ω³M⊕Ω⁴M⊕Ω⁵M",
    "fiber-product": "We then have $\\mathfrak{m}=I\\oplus J$.",
    "classify-thm1": "One of the following holds true.",
    "check-thm-a": "is a direct summand of Ω³M⊕Ω⁴M⊕Ω⁵M",
    "scan": "Tor_ℓ^R(M,N)=0 for some ℓ≥5, then M or N is R-free",
    "locus": None,
    "battery": None,
}


class InputError(Exception):
    """Bad command line input (exit code 2)."""


# --- object expressions -----------------------------------------------------------------

_CALL = re.compile(r"^\s*([A-Za-z_]\w*)\s*\((.*)\)\s*$")


def _split_args(text: str) -> list[str]:
    out, depth_, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth_ == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth_ += ch == "("
        depth_ -= ch == ")"
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def resolve_module(doc, expr: str) -> FPModule:
    m = _CALL.match(expr)
    if not m:
        return doc.module(expr.strip())
    fn, args = m.group(1), _split_args(m.group(2))
    if fn in ("m", "k", "free"):
        if len(args) != 1:
            raise InputError(f"{fn}(RING) takes one argument")
        R = doc.ring(args[0])
        return {"m": FPModule.maximal_ideal, "k": FPModule.residue_field, "free": FPModule.free}[fn](R)
    if fn == "omega":
        if len(args) != 2 or not args[0].isdigit():
            raise InputError("omega(i, X) takes an index and a module")
        return syzygy(resolve_module(doc, args[1]), int(args[0]))
    if fn == "sum":
        return direct_sum(*[resolve_module(doc, a) for a in args])
    raise InputError(f"unknown function {fn!r} in {expr!r}")


def _range(text: str) -> range:
    m = re.fullmatch(r"(\d+)(?::(\d+))?", text.strip())
    if not m:
        raise InputError(f"bad range {text!r}; use I or A:B")
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) else a
    if b < a:
        raise InputError(f"empty range {text!r}")
    return range(a, b + 1)


# --- commands ------------------------------------------------------------------------------

def _betti_tsv(res):
    rows = res.betti_table_rows()
    header = ["row"] + [str(i) for i in range(res.length + 1)]
    lo = min((d - i for i, row in enumerate(res.graded_betti) for d in row), default=0)
    return [header] + [[str(lo + r)] + [str(v) for v in row] for r, row in enumerate(rows)]


def cmd_resolve(a, doc, out):
    M = resolve_module(doc, a.module)
    res = free_resolution(M, a.length)
    out.certificates = {"differentials": [res.differential(i).to_strings() for i in range(1, len(res.differentials) + 1)]}
    out.result = {"betti": res.betti, "graded_betti": _graded(res.graded_betti),
                  "projective_dimension": res.projective_dimension,
                  "is_complex": res.check_complex(), "is_minimal": res.check_minimal()}
    out.tables["betti"] = _betti_tsv(res)
    out.figure = ("betti", res.betti_table_rows())
    out.status = "ok" if out.result["is_complex"] and out.result["is_minimal"] else "fail"


def cmd_betti(a, doc, out):
    M = resolve_module(doc, a.module)
    res = free_resolution(M, a.length)
    out.result = {"betti": res.betti, "graded_betti": _graded(res.graded_betti),
                  "table": res.betti_table_rows()}
    if a.check_oracle:
        from .resolutions import truncated_linear_resolution

        D = a.degree_bound
        oracle = truncated_linear_resolution(M, a.length, D)
        mine = [{d: c for d, c in row.items() if d <= D} for row in res.graded_betti]
        out.result["oracle_match"] = oracle == mine
        out.status = "ok" if oracle == mine else "fail"
    else:
        out.status = "ok"
    out.tables["betti"] = _betti_tsv(res)
    out.figure = ("betti", res.betti_table_rows())


def cmd_syzygy(a, doc, out):
    M = resolve_module(doc, a.module)
    S = syzygy(M, a.index)
    out.certificates = {"presentation": S.to_json()}
    out.result = {"index": a.index, "generators": S.ngens, "degrees": list(S.degrees)}
    out.status = "ok"


def _homology_cmd(fn, name):
    def run(a, doc, out):
        M = resolve_module(doc, a.M)
        N = resolve_module(doc, a.N)
        reps = {i: fn(M, N, i, a.degree_bound) for i in _range(a.index)}
        out.result = {str(i): r.dimension for i, r in reps.items()}
        out.certificates = {str(i): r.to_json() for i, r in reps.items()}
        out.tables[name] = [["i", "dim"]] + [[str(i), str(r.dimension)] for i, r in reps.items()]
        out.status = "ok"
    return run


def cmd_depth(a, doc, out):
    M = resolve_module(doc, a.module)
    out.result = {"depth": depth(M)}
    out.status = "ok"


def cmd_decompose(a, doc, out):
    if a.maximal_ideal:
        rep = decompose_maximal_ideal(doc.ring(a.target), a.trials, a.seed)
    else:
        rep = decompose(resolve_module(doc, a.target), a.trials, a.seed)
    out.certificates = {"decomposition": rep.to_json()}
    out.status = rep.status


def cmd_split(a, doc, out):
    M = resolve_module(doc, a.M)
    N = resolve_module(doc, a.N)
    rep = split_summand(M, N, a.trials, a.seed)
    out.certificates = {"split": rep.to_json()}
    out.status = rep.status


def cmd_fiber_product(a, doc, out):
    R = fiber_product(doc.ring(a.S), doc.ring(a.T), name=a.name)
    out.result = {"ring": R.describe()}
    out.certificates = {"decomposition": R.decomposition.to_json()}
    out.status = "ok"


def cmd_classify(a, doc, out):
    from .theorems import classify_theorem1

    rep = classify_theorem1(doc.ring(a.ring), doc.ideal(a.I), doc.ideal(a.J), resolve_module(doc, a.module),
                            a.trials, a.seed)
    out.certificates = rep.to_json()["certificates"]
    out.result = {k: v for k, v in rep.to_json().items() if k != "certificates"}
    out.status = rep.case_label
    out.failed = rep.case_label == "none-detected"


def cmd_check_thm_a(a, doc, out):
    from .theorems import check_theorem_A

    rep = check_theorem_A(doc.ring(a.ring), resolve_module(doc, a.module), a.trials, a.seed)
    out.certificates = {"split": rep.to_json()}
    out.status = rep.status
    out.failed = rep.status != "proved-yes"


def cmd_scan(a, doc, out):
    from .theorems import vanishing_scan

    M = resolve_module(doc, a.M)
    N = resolve_module(doc, a.N)
    rep = vanishing_scan(M.ring, M, N, a.functor, _range(a.range), a.trials, a.seed,
                         regular_sequence=a.regular_sequence.split(",") if a.regular_sequence else None)
    out.result = rep.to_json()
    out.tables["scan"] = [["i", "dim"]] + [[str(i), str(v)] for i, v in rep.table.items()]
    out.figure = ("scan", rep)
    out.status = "pass" if rep.violations == 0 else "fail"
    out.failed = rep.violations > 0


def cmd_locus(a, doc, out):
    from .loci import ipd_locus, non_free_locus, singular_locus

    if a.kind == "singular":
        if a.codim is None:
            raise InputError("locus singular needs --codim")
        rep = singular_locus(doc.ring(a.target), a.codim)
    elif a.kind == "nonfree":
        rep = non_free_locus(resolve_module(doc, a.target))
    else:
        if a.dim is None:
            raise InputError("locus ipd needs --dim")
        rep = ipd_locus(resolve_module(doc, a.target), a.dim)
    out.result = rep.to_json()
    out.status = "ok"


def cmd_battery(a, doc, out):
    from .battery import run_battery

    perturb = {}
    for item in a.perturb or ():
        if "=" not in item:
            raise InputError("--perturb expects NAME=MATRIX")
        k, v = item.split("=", 1)
        perturb[k.strip()] = v.strip()
    config = {"seed": a.seed, "trials": a.trials, "only": a.only, "perturb": perturb,
              "field": a.field, "workers": a.workers}
    res = run_battery(config)
    out.result = res.to_json()
    out.tables["battery"] = [["criterion", "id", "status", "elapsed_ms", "anchor"]] + [
        [str(c.criterion), c.id, c.status, str(c.elapsed_ms), c.anchor] for c in res.checks]
    out.figure = ("battery", res)
    out.status = "pass" if res.passed else "fail"
    out.failed = not res.passed


def _graded(gb):
    return [{str(d): c for d, c in row.items()} for row in gb]


# --- plumbing -----------------------------------------------------------------------------

class Output:
    def __init__(self):
        self.status = None
        self.result = {}
        self.certificates = {}
        self.tables = {}
        self.figure = None
        self.failed = False


def _common(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("global options")
    g.add_argument("--input", "-i", default=d(None), help="text-format document (default: bundled fixtures)")
    g.add_argument("--field", default=d(None), help="override the field of every ring, e.g. GF(101) or QQ")
    g.add_argument("--seed", type=int, default=d(None), help="random seed (default: $SYZYGY_SEED or built-in)")
    g.add_argument("--trials", type=int, default=d(DEFAULT_TRIALS), help="random trials for certificate searches")
    g.add_argument("--degree-bound", type=int, default=d(12), help="Hilbert-function probe / oracle degree bound")
    g.add_argument("--length", type=int, default=d(6), help="resolution length")
    g.add_argument("--figure-dir", default=d(None), help="write JSON, TSV tables and a figure here")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="syzygy", description="Syzygies over quotient rings: resolutions, "
                                "Ext/Tor, decompositions and theorem-level certificates.")
    _common(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        _common(sp, suppress=True)
        sp.set_defaults(func=fn)
        return sp

    sp = add("resolve", cmd_resolve, "minimal free resolution with differentials")
    sp.add_argument("module")
    sp = add("betti", cmd_betti, "Betti numbers and graded Betti table")
    sp.add_argument("module")
    sp.add_argument("--check-oracle", action="store_true", help="compare with the linear-algebra recomputation")
    sp = add("syzygy", cmd_syzygy, "presentation of a syzygy module")
    sp.add_argument("module")
    sp.add_argument("--index", type=int, required=True)
    for name, fn in (("ext", _homology_cmd(ext, "ext")), ("tor", _homology_cmd(tor, "tor"))):
        sp = add(name, fn, f"{name} modules with k-dimensions")
        sp.add_argument("M")
        sp.add_argument("N")
        sp.add_argument("--index", default="1", help="I or A:B")
    sp = add("depth", cmd_depth, "depth of a module")
    sp.add_argument("module")
    sp = add("decompose", cmd_decompose, "split a module by idempotents (or the maximal ideal of a ring)")
    sp.add_argument("target")
    sp.add_argument("--maximal-ideal", action="store_true", help="treat TARGET as a ring and decompose m")
    sp = add("split", cmd_split, "certify M as a direct summand of N")
    sp.add_argument("M")
    sp.add_argument("N")
    sp = add("fiber-product", cmd_fiber_product, "build S x_k T")
    sp.add_argument("S")
    sp.add_argument("T")
    sp.add_argument("--name", default=None)
    sp = add("classify-thm1", cmd_classify, "which syzygy case holds for m = I (+) J")
    sp.add_argument("ring")
    sp.add_argument("I")
    sp.add_argument("J")
    sp.add_argument("module")
    sp = add("check-thm-a", cmd_check_thm_a, "certify m | Omega^3 M (+) Omega^4 M (+) Omega^5 M")
    sp.add_argument("ring")
    sp.add_argument("module")
    sp = add("scan", cmd_scan, "Tor/Ext vanishing table with rigidity monitors")
    sp.add_argument("M")
    sp.add_argument("N")
    sp.add_argument("--functor", choices=("tor", "ext"), default="tor")
    sp.add_argument("--range", default="1:10", help="A:B")
    sp.add_argument("--regular-sequence", default=None, help="comma-separated x for the quasi-decomposable monitor")
    sp = add("locus", cmd_locus, "singular, non-free or infinite-pd locus")
    sp.add_argument("kind", choices=("singular", "nonfree", "ipd"))
    sp.add_argument("target", help="a ring (singular) or a module")
    sp.add_argument("--codim", type=int, default=None)
    sp.add_argument("--dim", type=int, default=None)
    sp = add("battery", cmd_battery, "run the acceptance battery")
    sp.add_argument("--only", nargs="*", default=None, help="check ids or criterion numbers")
    sp.add_argument("--perturb", nargs="*", default=None, help="NAME=MATRIX fixture replacements")
    sp.add_argument("--workers", type=int, default=1)
    return p


def _seed(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("SYZYGY_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"SYZYGY_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _document(a):
    if a.input is None:
        return parse_document(fixtures.FIXTURE_TEXT, a.field)
    if a.input == "-":
        return parse_document(sys.stdin.read(), a.field)
    try:
        if a.field:
            with open(a.input, encoding="utf-8") as fh:
                return parse_document(fh.read(), a.field)
        return load(a.input)
    except OSError as e:
        raise InputError(str(e)) from None


def _write_outputs(directory, command, payload, out):
    os.makedirs(directory, exist_ok=True)
    stem = command.replace("-", "_")
    files = {"json": os.path.join(directory, f"{stem}.json")}
    for name, rows in out.tables.items():
        path = os.path.join(directory, f"{stem}_{name}.tsv")
        with open(path, "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh, delimiter="\t").writerows(rows)
        files[f"{name}_tsv"] = path
    if out.figure is not None:
        from . import plotting

        kind, data = out.figure
        path = os.path.join(directory, f"{stem}.png")
        if kind == "betti":
            plotting.betti_heatmap(data, path)
        elif kind == "scan":
            plotting.scan_plot(data, path)
        else:
            plotting.battery_timings(data, path)
        files["figure"] = path
    payload["files"] = files
    with open(files["json"], "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, default=str)


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    t0 = time.perf_counter()
    out = Output()
    code = 0
    try:
        a.seed = _seed(a.seed)
        doc = _document(a) if a.command != "battery" else None
        a.func(a, doc, out)
        code = 1 if out.failed else 0
    except (InputError, ParseError, PreconditionError, SyzygyError, ValueError) as e:
        out.status = "input-error"
        out.result = {"error": f"{type(e).__name__}: {e}"}
        if isinstance(e, PreconditionError) and e.witness is not None:
            out.result["witness"] = str(e.witness)
        code = 2
    payload = {
        "command": a.command,
        "inputs_echo": {k: v for k, v in vars(a).items() if k != "func"},
        "paper_anchor": ANCHORS.get(a.command),
        "status": out.status,
        "result": out.result,
        "certificates": out.certificates,
        "seed": a.seed,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 1),
    }
    if a.figure_dir and code != 2:
        _write_outputs(a.figure_dir, a.command, payload, out)
    try:
        json.dump(payload, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return code


if __name__ == "__main__":
    sys.exit(main())
