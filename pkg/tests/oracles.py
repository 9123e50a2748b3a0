"""Independent oracles used by the tests.

The naive jet-component oracle expands f(sum x^(i) tau^i) as a single
untruncated polynomial with an explicit tau variable and collects tau
powers; it shares no code with the truncated-series engine in
jetforge.jets.  The random-point oracle compares exact evaluations of
polynomial families at rational points.
"""

from fractions import Fraction

from jetforge.poly import JetVar, Monomial, Poly

TAU = JetVar("tau", 10**6, 0)


def naive_hs_components(f, n):
    mapping = {}
    for v in f.vars():
        s = Poly.zero(f.field)
        for i in range(n + 1):
            s = s + Poly.var(JetVar(v.name, v.index, i), f.field) * Poly.var(TAU, f.field)**i
        mapping[v] = s
    expanded = f.substitute(mapping)
    out = [Poly.zero(f.field) for _ in range(n + 1)]
    for m, c in expanded.terms.items():
        e = m.exponent(TAU)
        if e > n:
            continue
        stripped = Monomial({v: k for v, k in m.exps if v != TAU})
        out[e] = out[e] + Poly(f.field, {stripped: c})
    return out


def random_point(rng, variables):
    return {v: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for v in variables}


def families_agree_at_points(rng, lhs, rhs, points=20):
    variables = set()
    for p in list(lhs) + list(rhs):
        variables.update(p.vars())
    variables = sorted(variables, key=JetVar.sort_key)
    for _ in range(points):
        pt = random_point(rng, variables)
        for a, b in zip(lhs, rhs):
            if a.eval(pt) != b.eval(pt):
                return False
    return True
