"""The acceptance battery: every check reproduces one quoted statement and
reports status, timing and seed.
"""

from __future__ import annotations

import random
import re
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import fixtures
from .fpmod import FPModule, minimal_presentation
from .groebner import engine_from_basis
from .homalg import depth, depth_of_ring, ext, is_regular_sequence, projective_dimension, tor
from .resolutions import free_resolution, syzygy, truncated_linear_resolution
from .structure import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DecompositionCertificate,
    SplitCertificate,
    decompose_maximal_ideal,
    fiber_product,
    is_isomorphic,
    quasi_decomposable,
)
from .ring import QuotientRing
from .textformat import parse_document
from .theorems import check_theorem_A, classify_theorem1, vanishing_scan, verify_syzygy_shift


@dataclass
class Context:
    document: object
    seed: int
    trials: int

    def ring(self, name):
        return self.document.ring(name)

    def module(self, name):
        return self.document.module(name)

    def ideal(self, name):
        return self.document.ideal(name)

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass(frozen=True)
class Check:
    id: str
    criterion: int
    anchor: str
    run: object
    tags: tuple = ()


@dataclass
class CheckResult:
    id: str
    criterion: int
    anchor: str
    status: str          # pass, fail or error
    details: dict
    seed: int
    elapsed_ms: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class BatteryResult:
    checks: list = field(default_factory=list)
    seed: int = DEFAULT_SEED
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {"passed": self.passed, "seed": self.seed, "elapsed_ms": self.elapsed_ms,
                "checks": [c.to_json() for c in self.checks]}


# --- individual checks --------------------------------------------------------------

def check_betti_r2(ctx):
    b = free_resolution(ctx.module("R2_Ry"), 5).betti
    return b == [1, 1, 1, 2, 3, 5], {"betti": b, "expected": [1, 1, 1, 2, 3, 5]}


def check_alternation(ctx):
    R = ctx.ring("R1")
    M = ctx.module("R1_Rx")
    targets = {0: FPModule.cyclic(R, ["x"]), 1: FPModule.cyclic(R, ["y"])}
    rows = {}
    ok = True
    for i in range(1, 9):
        cert = is_isomorphic(syzygy(M, i), targets[i % 2], ctx.trials, ctx.seed)
        good = cert.status == "proved-yes" and cert.verify()
        rows[i] = {"target": "R/(y)" if i % 2 else "R/(x)", "status": cert.status}
        ok = ok and good
    return ok, {"syzygies": rows}


def _splitting_samples(ctx):
    out = []
    for rname, names in fixtures.INFINITE_PD_MODULES.items():
        out.extend((rname, n, ctx.module(n)) for n in names)
    rng = ctx.rng("maximal-ideal-split")
    for rname in fixtures.FIBER_PRODUCTS:
        R = ctx.ring(rname)
        for _ in range(50):
            M = fixtures.random_module(R, rng)
            if minimal_presentation(M).ngens and not projective_dimension(M, 2).finite:
                out.append((rname, "random", M))
                break
    return out


def check_maximal_ideal_split_off(ctx):
    rows = []
    ok = True
    for rname, name, M in _splitting_samples(ctx):
        cert = check_theorem_A(ctx.ring(rname), M, ctx.trials, ctx.seed)
        good = isinstance(cert, SplitCertificate) and cert.verify()
        ok = ok and good
        rows.append({"ring": rname, "module": name, "presentation": M.to_json(),
                     "status": cert.status, "trials_used": getattr(cert, "trials_used", None)})
    return ok and len(rows) >= 10, {"samples": rows, "count": len(rows)}


def check_classification(ctx):
    rows = []
    ok = True
    for rname, mname, iname, jname, expected, anchor in fixtures.CLASSIFICATION_CASES:
        R = ctx.ring(rname)
        rep = classify_theorem1(R, ctx.ideal(iname), ctx.ideal(jname), ctx.module(mname), ctx.trials, ctx.seed)
        certs_ok = all(c.verify() for c in rep.certificates.values() if hasattr(c, "verify"))
        good = rep.case_label == expected and certs_ok
        if expected == "i" and rname == "R3":
            good = good and set(rep.excluded) == {"ii", "iii", "iv", "v"}
        ok = ok and good
        rows.append({"module": mname, "expected": expected, "label": rep.case_label,
                     "excluded": list(rep.excluded), "anchor": anchor, "note": rep.ring_depth_note})
    return ok, {"cases": rows}


def check_ext_r2(ctx):
    R = ctx.ring("R2")
    Rf = FPModule.free(R)
    e1 = ext(ctx.module("R2_RI"), Rf, 1)
    e2 = ext(ctx.module("R2_k"), Rf, 1)
    return (e1.is_zero and e2.dimension == 1,
            {"Ext1(R/I,R)": e1.dimension, "Ext1(k,R)": e2.dimension})


_FACTOR_POOL = (
    ("{a}", ["{a}^2"]),
    ("{a}", []),
    ("{a},{b}", []),
    ("{a},{b}", ["{a}*{b}"]),
    ("{a},{b}", ["{a}^2", "{a}*{b}"]),
    ("{a},{b}", ["{a}^2", "{b}^2"]),
    ("{a}", ["{a}^3"]),
)


def _factor(spec, names, p):
    from .ring import make_quotient_ring

    vars_, gens = spec
    a, b = names
    variables = vars_.format(a=a, b=b).split(",")
    return make_quotient_ring(variables, None, p, [g.format(a=a, b=b) for g in gens])


def check_depth_formula(ctx):
    rows = []
    ok = True
    p = ctx.ring("R1").field.p
    cases = []
    for rname in fixtures.FIBER_PRODUCTS:
        R = ctx.ring(rname)
        S, T = _split_factors(R)
        cases.append((rname, R, S, T))
    rng = ctx.rng("depth")
    for k in range(2):
        S = _factor(rng.choice(_FACTOR_POOL), ("a", "b"), p)
        T = _factor(rng.choice(_FACTOR_POOL), ("c", "d"), p)
        cases.append((f"random{k}", fiber_product(S, T), S, T))
    for name, R, S, T in cases:
        dR, dS, dT = depth_of_ring(R), depth_of_ring(S), depth_of_ring(T)
        good = dR == min(dS, dT, 1)
        ok = ok and good
        rows.append({"ring": name, "generators": [str(g) for g in R.ideal_generators],
                     "depth R": dR, "depth S": dS, "depth T": dT})
    return ok, {"rings": rows}


def _split_factors(R):
    """The two factor rings of a recognized fiber product, as quotients of R."""
    from .structure import fiber_product_factors

    first, rest = fiber_product_factors(R)
    return R.quotient(rest), R.quotient(first)


def _scans(ctx):
    R1, R3 = ctx.ring("R1"), ctx.ring("R3")
    Rx = ctx.module("R1_Rx")
    scans = [
        vanishing_scan(R1, Rx, Rx, "tor", range(1, 11), ctx.trials, ctx.seed),
        vanishing_scan(R1, Rx, Rx, "ext", range(1, 9), ctx.trials, ctx.seed),
        vanishing_scan(R1, FPModule.free(R1), Rx, "tor", range(1, 11), ctx.trials, ctx.seed),
        vanishing_scan(R1, Rx, ctx.module("R1_Ry"), "tor", range(1, 9), ctx.trials, ctx.seed),
        vanishing_scan(R3, ctx.module("R3_k"), ctx.module("R3_k"), "tor", range(5, 9), ctx.trials, ctx.seed),
        vanishing_scan(R3, ctx.module("R3_Ry"), ctx.module("R3_Rx"), "tor", range(1, 9), ctx.trials, ctx.seed),
        vanishing_scan(ctx.ring("R4"), ctx.module("R4_Rtx"), ctx.module("R4_k"), "tor", range(1, 7),
                       ctx.trials, ctx.seed, regular_sequence=["t"]),
    ]
    return scans


def check_tor_rigidity(ctx):
    scans = _scans(ctx)
    table = [scans[0].table[i] for i in range(1, 11)]
    violations = sum(s.violations for s in scans)
    expected = [1, 0, 1, 0, 1, 0, 1, 0, 1, 0]
    return (table == expected and violations == 0,
            {"table": table, "expected": expected, "violations": violations,
             "scans": [s.to_json() for s in scans]})


def check_syzygy_shift(ctx):
    R = ctx.ring("R4")
    rows = []
    ok = True
    for module_name in ("R4_Rtx", "R4_k"):
        M = ctx.module(module_name)
        for t, u in ((1, 1), (2, 1), (1, 2)):
            rep = verify_syzygy_shift(R, ["t"], M, t, u)
            ok = ok and rep.holds
            rows.append({"module": module_name, "t": t, "u": u, "holds": rep.holds, "v": rep.extra["v"]})
    return ok, {"cases": rows}


def _oracle_samples(ctx, count=10):
    rng = ctx.rng("oracle")
    return [(r, fixtures.random_module(ctx.ring(r), rng)) for r in
            (fixtures.FIBER_PRODUCTS[k % 3] for k in range(count))]


def check_oracle(ctx, length=5, max_degree=8):
    rows = []
    ok = True
    for rname, M in _oracle_samples(ctx):
        a = [{d: c for d, c in row.items() if d <= max_degree} for row in free_resolution(M, length).graded_betti]
        b = truncated_linear_resolution(M, length, max_degree)
        ok = ok and a == b
        rows.append({"ring": rname, "presentation": M.to_json(), "match": a == b,
                     "betti": [sum(r.values()) for r in a]})
    return ok, {"samples": rows, "length": length, "max_degree": max_degree}


def check_quasi_decomposable(ctx):
    R4, R5 = ctx.ring("R4"), ctx.ring("R5")
    q4 = quasi_decomposable(R4, ["t"], ctx.trials, ctx.seed)
    q5 = quasi_decomposable(R5, ["z"], ctx.trials, ctx.seed)
    expected = QuotientRing(R5.ambient, [R5.ambient(g) for g in ("z", "x^2", "x*y", "y^2")])
    structure_ok = q5.quotient is not None and (
        sorted(map(str, q5.quotient.reduced_gb)) == sorted(map(str, expected.reduced_gb)))
    split_ok = isinstance(q5.certificate, DecompositionCertificate) and q5.certificate.verify()
    if split_ok:
        split_ok = {q5.certificate.A.ngens, q5.certificate.B.ngens} == {1}
    dm = decompose_maximal_ideal(R4, ctx.trials, ctx.seed)
    indec = getattr(dm, "proved", False) and "depth" in dm.reason
    ok = q4.holds and q5.holds and structure_ok and split_ok and indec
    return ok, {"R4 (t)": q4.holds, "R5 (z)": q5.holds,
                "R5/(z) ideal": [str(g) for g in q5.quotient.reduced_gb] if q5.quotient else None,
                "m/(z) summands": [q5.certificate.A.to_json(), q5.certificate.B.to_json()] if split_ok else None,
                "decompose m over R4": dm.to_json()}


def _all_modules(ctx):
    doc = ctx.document
    mods = [(doc.module_rings[n], n, M) for n, M in doc.modules.items()]
    mods += [(r, "oracle", M) for r, M in _oracle_samples(ctx)]
    return mods


def check_properties(ctx):
    details = {}
    # Buchberger criterion on every ring and module basis
    gb_ok = True
    for R in ctx.document.rings.values():
        eng = engine_from_basis(R.ambient, [0], [{(0, m): c for m, c in g.items()} for g in R.gb_raw])
        gb_ok = gb_ok and eng.s_vectors_reduce_to_zero()
    for _r, _n, M in _all_modules(ctx):
        gb_ok = gb_ok and minimal_presentation(M).engine.s_vectors_reduce_to_zero()
    details["buchberger"] = gb_ok
    # d^2 = 0 and minimality
    res_ok = True
    for _r, _n, M in _all_modules(ctx):
        res = free_resolution(M, 5)
        res_ok = res_ok and res.check_complex() and res.check_minimal()
    details["resolutions"] = res_ok
    # an R-sequence of length n is regular on the n-th syzygy
    R4 = ctx.ring("R4")
    rng = ctx.rng("omega-sequence")
    seq_ok = True
    seq_rows = []
    for k in range(10):
        M = fixtures.random_module(R4, rng)
        xs = ["t"] if k % 2 == 0 else ["t", "x+y"]
        om = syzygy(M, len(xs))
        if minimal_presentation(om).ngens == 0:
            seq_rows.append({"n": len(xs), "result": "syzygy is zero"})
            continue
        r = bool(is_regular_sequence(xs, om))
        seq_ok = seq_ok and r
        seq_rows.append({"n": len(xs), "result": r})
    details["omega_sequence"] = seq_rows
    # Auslander-Buchsbaum on finite-pd samples
    ab_ok = True
    ab_rows = []
    for rname, name, M in [("R4", "R4_Rtx", ctx.module("R4_Rtx")), ("R4", "R4_k", ctx.module("R4_k")),
                           ("R1", "R1_free", FPModule.free(ctx.ring("R1"))),
                           ("R4", "R/(t)", FPModule.cyclic(R4, ["t"])),
                           ("R4", "R/(t, x+y)", FPModule.cyclic(R4, ["t", "x+y"]))]:
        pd = projective_dimension(M, 6)
        if not pd.finite:
            ab_rows.append({"module": name, "pd": str(pd), "skipped": True})
            continue
        good = pd.value + depth(M) == depth_of_ring(M.ring)
        ab_ok = ab_ok and good
        ab_rows.append({"module": name, "pd": pd.value, "depth": depth(M), "holds": good})
    ab_ok = ab_ok and any(not r.get("skipped") for r in ab_rows)
    details["auslander_buchsbaum"] = ab_rows
    # Tor symmetry on 10 pairs
    rng = ctx.rng("tor-symmetry")
    sym_ok = True
    for k in range(10):
        rname = fixtures.FIBER_PRODUCTS[k % 3]
        R = ctx.ring(rname)
        M, N = fixtures.random_module(R, rng), fixtures.random_module(R, rng)
        for i in (1, 2):
            sym_ok = sym_ok and tor(M, N, i).dimension == tor(N, M, i).dimension
    details["tor_symmetry"] = sym_ok
    ok = gb_ok and res_ok and seq_ok and ab_ok and sym_ok
    return ok, details


CHECKS = (
    Check("betti-r2", 1, "the minimal free resolution of the $R$-module $R/(y)$ has the form", check_betti_r2),
    Check("alternation-r1", 2, "R/J if i≥0 is odd, R/I if i≥0 is even", check_alternation),
    Check("maximal-ideal-split", 3, "is a direct summand of Ω³M⊕Ω⁴M⊕Ω⁵M", check_maximal_ideal_split_off),
    Check("classification", 4, "One of the following holds true.", check_classification),
    Check("ext-r2", 5, "We claim that $\\operatorname{Ext}_R^1(R/I,R)=0$", check_ext_r2),
    Check("depth-formula", 6, "depth R = min{depth S, depth T, 1}", check_depth_formula),
    Check("tor-rigidity", 7, "Tor_ℓ^R(M,N)=0 for some ℓ≥5, then M or N is R-free", check_tor_rigidity),
    Check("syzygy-shift", 8, "Ω_R^uΩ_{R/(x)}^tM ≅ Ω_R^{u+t}M ⊕ R^{⊕v}", check_syzygy_shift),
    Check("oracle", 9, "graded Betti numbers agree with a linear-algebra recomputation", check_oracle),
    Check("quasi-decomposable", 10, "R/(z)≅k[[x,y]]/(x^2,xy,y^{p+1})", check_quasi_decomposable),
    Check("properties", 11, "an Ω_R^nM-sequence", check_properties),
)


# --- running -------------------------------------------------------------------------

def perturbed_text(perturb: dict) -> str:
    """Fixture text with module matrices replaced: ``{module name: matrix text}``."""
    text = fixtures.FIXTURE_TEXT
    for name, matrix in (perturb or {}).items():
        pat = re.compile(rf"^(module\s+{re.escape(name)}\s+over\s+\w+\s*=\s*coker\s*).*$", re.M)
        text, n = pat.subn(lambda m: m.group(1) + matrix, text)
        if not n:
            raise ValueError(f"no fixture module named {name!r}")
    return text


def select(only=None) -> list:
    if not only:
        return list(CHECKS)
    keys = {str(k) for k in only}
    chosen = [c for c in CHECKS if c.id in keys or str(c.criterion) in keys]
    if not chosen:
        raise ValueError(f"no checks match {sorted(keys)}")
    return chosen


def _context(config) -> Context:
    doc = parse_document(perturbed_text(config.get("perturb")), config.get("field"))
    return Context(doc, int(config.get("seed", DEFAULT_SEED)), int(config.get("trials", DEFAULT_TRIALS)))


def run_check(check_id: str, config: dict) -> CheckResult:
    check = next(c for c in CHECKS if c.id == check_id)
    ctx = _context(config)
    t0 = time.perf_counter()
    try:
        ok, details = check.run(ctx)
        status = "pass" if ok else "fail"
    except Exception as e:  # a crashing check is reported, not raised
        status, details = "error", {"error": f"{type(e).__name__}: {e}", "traceback": traceback.format_exc()}
    ms = round((time.perf_counter() - t0) * 1000, 1)
    return CheckResult(check.id, check.criterion, check.anchor, status, details, ctx.seed, ms)


def run_battery(config: dict | None = None) -> BatteryResult:
    """Config keys: ``only`` (ids or criterion numbers), ``seed``, ``trials``,
    ``field``, ``perturb`` and ``workers`` (process count, default 1)."""
    config = dict(config or {})
    checks = select(config.get("only"))
    t0 = time.perf_counter()
    workers = int(config.get("workers", 1))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(run_check, [c.id for c in checks], [config] * len(checks)))
    else:
        results = [run_check(c.id, config) for c in checks]
    ms = round((time.perf_counter() - t0) * 1000, 1)
    return BatteryResult(results, int(config.get("seed", DEFAULT_SEED)), ms)
