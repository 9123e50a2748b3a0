"""Seeded theorem checker: every in-scope identity on random instances.

Each suite draws its instances from a dedicated deterministic stream
(derived from the configured seed and the suite name), checks an exact
polynomial identity, and records any counterexample together with a DSL
serialization of the instance for replay.  The leibniz and
jacobian_identity suites additionally evaluate both sides of each trial
at 20 random rational points drawn from a separate sub-stream; the
symbolic and numeric verdicts must agree.
"""

import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import UnknownSuite
from .hsmodules import (ModulePresentation, TwistedMatrix, base_change_check,
                        cotangent_theorem_check, free_dual_zigzag_check,
                        hs_module_presentation, sym_theorem_check,
                        twisted_action_matrix)
from .jets import (AlgebraMorphism, AlgebraPresentation, bigrade_commute_check,
                   cotruncation_subset_check, grade_monomial, hs_components,
                   induced_morphism)
from .p1 import cocycle_check
from .poly import JetVar, Monomial, Poly
from .scalars import QQ

SUITE_NAMES = (
    "leibniz",
    "structural_grading",
    "induced_grading",
    "jacobian_identity",
    "bigrade_commute",
    "cotruncation",
    "functoriality",
    "twisted_ring_hom",
    "sym_theorem",
    "cotangent_theorem",
    "base_change",
    "zigzag",
    "p1_cocycle",
)

ORACLE_POINTS = 20


@dataclass
class CheckConfig:
    seed: int = 42
    trials: int = 100
    max_vars: int = 3
    max_relations: int = 2
    max_degree: int = 3
    max_level: int = 4
    max_bilevel: int = 2
    coeff_lo: int = -9
    coeff_hi: int = 9
    suites: tuple = SUITE_NAMES

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not (1 <= self.max_vars <= 3):
            raise ValueError("max_vars must be in 1..3")
        if not (0 <= self.max_relations <= 2):
            raise ValueError("max_relations must be in 0..2")
        if not (1 <= self.max_degree <= 3):
            raise ValueError("max_degree must be in 1..3")
        if not (0 <= self.max_level <= 4):
            raise ValueError("max_level must be in 0..4")
        self.suites = tuple(self.suites)
        for s in self.suites:
            if s not in SUITE_NAMES:
                raise UnknownSuite("unknown suite: %r" % s)


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: list = dc_field(default_factory=list)
    seconds: float = 0.0
    oracle_trials: int = 0
    oracle_disagreements: int = 0

    @property
    def passed(self):
        return not self.failures and not self.oracle_disagreements


@dataclass
class CheckReport:
    config: CheckConfig
    suites: dict = dc_field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed for r in self.suites.values())

    def to_json_dict(self):
        return {
            "seed": self.config.seed,
            "trials": self.config.trials,
            "passed": self.passed,
            "suites": {
                name: {
                    "trials": r.trials,
                    "failures": r.failures,
                    "oracle_trials": r.oracle_trials,
                    "oracle_disagreements": r.oracle_disagreements,
                    "seconds": round(r.seconds, 3),
                    "passed": r.passed,
                }
                for name, r in self.suites.items()
            },
        }

    def to_text(self):
        lines = []
        for name, r in self.suites.items():
            status = "PASS" if r.passed else "FAIL"
            extra = ""
            if r.oracle_trials:
                extra = ", oracle %d/%d agree" % (
                    r.oracle_trials - r.oracle_disagreements, r.oracle_trials)
            lines.append("%-18s %s  (%d trials, %d failures%s, %.2fs)"
                         % (name, status, r.trials, len(r.failures), extra, r.seconds))
        lines.append("overall: %s" % ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# random instances

_VAR_NAMES = ("x", "y", "z")
_TARGET_NAMES = ("u", "v", "w")


def random_poly(rng, names, cfg, max_terms=5):
    gens = [JetVar(x, i, 0) for i, x in enumerate(names)]
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, cfg.max_degree)
        mono = {}
        for _ in range(deg):
            v = rng.choice(gens)
            mono[v] = mono.get(v, 0) + 1
        c = rng.randint(cfg.coeff_lo, cfg.coeff_hi)
        if c == 0:
            continue
        key = Monomial(mono)
        terms[key] = terms.get(key, 0) + c
    return Poly(QQ, {m: Fraction(c) for m, c in terms.items() if c})


def random_homogeneous_poly(rng, names, degrees, target, cfg, max_terms=4):
    """Nonzero-by-construction homogeneous polynomial of weighted degree target."""
    gens = [(JetVar(x, i, 0), degrees[x]) for i, x in enumerate(names)]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = {}
        remaining = target
        guard = 0
        while remaining > 0 and guard < 50:
            guard += 1
            v, d = rng.choice(gens)
            if d <= remaining:
                mono[v] = mono.get(v, 0) + 1
                remaining -= d
        if remaining:
            continue
        c = rng.randint(cfg.coeff_lo, cfg.coeff_hi) or 1
        key = Monomial(mono)
        terms[key] = terms.get(key, 0) + c
    if not any(terms.values()):
        # fall back to a single pure power of a degree-1 generator
        v = next(v for v, d in gens if d == 1)
        terms = {Monomial({v: target}): 1}
    return Poly(QQ, {m: Fraction(c) for m, c in terms.items() if c})


def random_algebra(rng, cfg, graded=False, max_relations=None):
    nvars = rng.randint(1, cfg.max_vars)
    names = list(_VAR_NAMES[:nvars])
    maxrel = cfg.max_relations if max_relations is None else max_relations
    nrel = rng.randint(0, maxrel)
    if graded:
        degrees = {x: 1 for x in names}
        for x in names[1:]:
            degrees[x] = rng.randint(1, 2)
        rels = [random_homogeneous_poly(rng, names, degrees,
                                        rng.randint(1, cfg.max_degree), cfg)
                for _ in range(nrel)]
        return AlgebraPresentation(names, rels, degrees, QQ)
    rels = [random_poly(rng, names, cfg) for _ in range(nrel)]
    return AlgebraPresentation(names, rels, None, QQ)


def random_module(rng, cfg, over=None):
    A = over or random_algebra(rng, cfg, max_relations=1)
    rank = rng.randint(0, 2)
    nrel = rng.randint(0, cfg.max_relations) if rank else 0
    rows = [[random_poly(rng, A.vars, cfg, max_terms=3) for _ in range(rank)]
            for _ in range(nrel)]
    return ModulePresentation(A, rank, rows)


def random_morphism(rng, cfg):
    src = AlgebraPresentation(list(_VAR_NAMES[:rng.randint(1, 2)]), [], None, QQ)
    tgt = AlgebraPresentation(list(_TARGET_NAMES[:rng.randint(1, 2)]), [], None, QQ)
    images = {v: random_poly(rng, tgt.vars, cfg, max_terms=3) for v in src.base_vars()}
    return AlgebraMorphism(src, tgt, images)


def random_instance(kind, cfg, rng):
    if kind == "poly":
        nvars = rng.randint(1, cfg.max_vars)
        return random_poly(rng, list(_VAR_NAMES[:nvars]), cfg)
    if kind == "algebra":
        return random_algebra(rng, cfg)
    if kind == "module":
        return random_module(rng, cfg)
    if kind == "morphism":
        return random_morphism(rng, cfg)
    raise ValueError("unknown instance kind: %r" % kind)


def _random_point(rng, variables):
    return {v: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for v in variables}


def _points_agree(orng, lhs, rhs):
    """Numeric verdict: both polynomial families agree at random points."""
    variables = set()
    for p in list(lhs) + list(rhs):
        variables.update(p.vars())
    variables = sorted(variables, key=JetVar.sort_key)
    for _ in range(ORACLE_POINTS):
        pt = _random_point(orng, variables)
        for a, b in zip(lhs, rhs):
            if a.eval(pt) != b.eval(pt):
                return False
    return True


# ---------------------------------------------------------------------------
# serialization of counterexamples


def _doc_for_algebra(A, module=None, morphism=None):
    from .dsl import print_document

    return print_document(A, module=module, morphism=morphism)


def _poly_doc(names, polys):
    from .dsl import print_document

    A = AlgebraPresentation(list(names), [], None, QQ)
    lines = [print_document(A).rstrip("\n")]
    for i, p in enumerate(polys):
        lines.append("ideal f%d = %s" % (i, p.render(base_plain=True)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# suites


def _suite_leibniz(rng, orng, cfg):
    nvars = rng.randint(1, cfg.max_vars)
    names = list(_VAR_NAMES[:nvars])
    f = random_poly(rng, names, cfg)
    g = random_poly(rng, names, cfg)
    n = rng.randint(0, cfg.max_level)
    cf, cg, cfg_ = hs_components(f, n), hs_components(g, n), hs_components(f * g, n)
    conv = [sum((cf[k] * cg[i - k] for k in range(i + 1)), Poly.zero(QQ))
            for i in range(n + 1)]
    ok_sym = conv == cfg_
    ok_num = _points_agree(orng, conv, cfg_)
    detail = None
    if not ok_sym:
        detail = {"n": n, "input": _poly_doc(names, [f, g])}
    return ok_sym, ok_num, detail


def _suite_structural(rng, cfg):
    f = random_instance("poly", cfg, rng)
    n = rng.randint(0, cfg.max_level)
    for i, g in enumerate(hs_components(f, n)):
        for m in g.terms:
            if grade_monomial(m, "structural") != i:
                return False, {"n": n, "order": i, "monomial": m.render(),
                               "input": _poly_doc(_VAR_NAMES, [f])}
    return True, None


def _suite_induced(rng, cfg):
    A = random_algebra(rng, cfg, graded=True, max_relations=max(1, cfg.max_relations))
    n = rng.randint(0, cfg.max_level)
    for f in A.relations:
        d = A.homogeneous_degree(f)
        for i, g in enumerate(hs_components(f, n)):
            for m in g.terms:
                if grade_monomial(m, "induced", A.grading) != d:
                    return False, {"n": n, "order": i, "degree": d,
                                   "monomial": m.render(), "input": _doc_for_algebra(A)}
    return True, None


def _suite_jacobian(rng, orng, cfg):
    nvars = rng.randint(1, cfg.max_vars)
    names = list(_VAR_NAMES[:nvars])
    f = random_poly(rng, names, cfg)
    n = rng.randint(0, cfg.max_level)
    comps = hs_components(f, n)
    gens = [JetVar(x, l, 0) for l, x in enumerate(names)]
    lhs, rhs = [], []
    for l, v in enumerate(gens):
        dcomps = hs_components(f.partial(v), n)
        for i in range(n + 1):
            for j in range(n + 1):
                lhs.append(comps[i].partial(JetVar(v.name, v.index, j)))
                rhs.append(dcomps[i - j] if j <= i else Poly.zero(QQ))
    ok_sym = lhs == rhs
    ok_num = _points_agree(orng, lhs, rhs)
    detail = None if ok_sym else {"n": n, "input": _poly_doc(names, [f])}
    return ok_sym, ok_num, detail


def _suite_bigrade(rng, cfg):
    A = random_algebra(rng, cfg)
    n = rng.randint(0, cfg.max_bilevel)
    m = rng.randint(0, cfg.max_bilevel)
    ok, report = bigrade_commute_check(A, n, m)
    return ok, None if ok else {"n": n, "m": m, "report": report,
                                "input": _doc_for_algebra(A)}


def _suite_cotruncation(rng, cfg):
    A = random_algebra(rng, cfg)
    n = rng.randint(0, cfg.max_level - 1)
    m = rng.randint(n + 1, cfg.max_level)
    ok, witness = cotruncation_subset_check(A, n, m)
    return ok, None if ok else {"n": n, "m": m, "witness": witness,
                                "input": _doc_for_algebra(A)}


def _suite_functoriality(rng, cfg):
    phi = random_morphism(rng, cfg)
    g = random_poly(rng, phi.source.vars, cfg)
    n = rng.randint(0, 2)
    fn = induced_morphism(phi, n)
    lhs = [fn.apply(c) for c in hs_components(g, n)]
    rhs = hs_components(phi.apply(g), n)
    ok = lhs == rhs
    return ok, None if ok else {"n": n, "input": _doc_for_algebra(
        phi.source, morphism=phi) + "ideal g = %s\n" % g.render(base_plain=True)}


def _suite_twisted(rng, cfg):
    nvars = rng.randint(1, cfg.max_vars)
    names = list(_VAR_NAMES[:nvars])
    p = random_poly(rng, names, cfg, max_terms=3)
    q = random_poly(rng, names, cfg, max_terms=3)
    n = rng.randint(0, cfg.max_level)
    tp, tq = twisted_action_matrix(p, n), twisted_action_matrix(q, n)
    add_ok = twisted_action_matrix(p + q, n).entries == [
        [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(tp.entries, tq.entries)]
    mul_ok = twisted_action_matrix(p * q, n) == tp.matmul(tq)
    one_ok = twisted_action_matrix(Poly.constant(1, QQ), n) == TwistedMatrix(
        n, [[Poly.constant(1, QQ) if i == j else Poly.zero(QQ)
             for i in range(n + 1)] for j in range(n + 1)])
    ok = add_ok and mul_ok and one_ok
    return ok, None if ok else {"n": n, "input": _poly_doc(names, [p, q])}


def _suite_sym(rng, cfg):
    M = random_module(rng, cfg)
    n = rng.randint(0, 3)
    ok, report = sym_theorem_check(M, n)
    return ok, None if ok else {"n": n, "report": report,
                                "input": _doc_for_algebra(M.over, module=M)}


def _suite_cotangent(rng, cfg):
    A = random_algebra(rng, cfg)
    n = rng.randint(0, 3)
    ok, report = cotangent_theorem_check(A, n)
    return ok, None if ok else {"n": n, "report": report, "input": _doc_for_algebra(A)}


def _suite_base_change(rng, cfg):
    phi = random_morphism(rng, cfg)
    M = random_module(rng, cfg, over=phi.source)
    n = rng.randint(0, 2)
    ok = base_change_check(phi, M, n)
    return ok, None if ok else {"n": n, "input": _doc_for_algebra(
        phi.source, module=M, morphism=phi)}


def _suite_zigzag(rng, cfg):
    n = rng.randint(0, 6)
    ok = free_dual_zigzag_check(n)
    return ok, None if ok else {"n": n}


def _suite_p1(rng, cfg):
    d = rng.randint(-2, 2)
    n = rng.randint(0, 3)
    ok = cocycle_check(d, n)
    return ok, None if ok else {"d": d, "n": n}


def run_suite(config):
    """Run every configured suite; deterministic for a given config."""
    report = CheckReport(config)
    for name in SUITE_NAMES:
        if name not in config.suites:
            continue
        result = SuiteResult(name)
        rng = random.Random("%d:%s" % (config.seed, name))
        orng = random.Random("%d:%s:oracle" % (config.seed, name))
        start = time.perf_counter()
        for trial in range(config.trials):
            if name == "leibniz":
                ok, ok_num, detail = _suite_leibniz(rng, orng, config)
                result.oracle_trials += 1
                if ok != ok_num:
                    result.oracle_disagreements += 1
            elif name == "jacobian_identity":
                ok, ok_num, detail = _suite_jacobian(rng, orng, config)
                result.oracle_trials += 1
                if ok != ok_num:
                    result.oracle_disagreements += 1
            else:
                ok, detail = _SIMPLE_SUITES[name](rng, config)
            result.trials += 1
            if not ok:
                failure = {"trial": trial}
                if detail:
                    failure.update(detail)
                result.failures.append(failure)
        result.seconds = time.perf_counter() - start
        report.suites[name] = result
    return report


_SIMPLE_SUITES = {
    "structural_grading": _suite_structural,
    "induced_grading": _suite_induced,
    "bigrade_commute": _suite_bigrade,
    "cotruncation": _suite_cotruncation,
    "functoriality": _suite_functoriality,
    "twisted_ring_hom": _suite_twisted,
    "sym_theorem": _suite_sym,
    "cotangent_theorem": _suite_cotangent,
    "base_change": _suite_base_change,
    "zigzag": _suite_zigzag,
    "p1_cocycle": _suite_p1,
}
