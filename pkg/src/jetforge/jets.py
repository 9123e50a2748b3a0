"""Jet algebras of finitely presented algebras.

The level-n jet algebra of A = k[x_1..x_r]/(f_1..f_s) is presented on the
jet variables x_l^(i), 0 <= i <= n, with relations the jet components
d_i(f_k): substitute every base variable x by sum_i x^(i) t^i in a
truncated series ring and read off the t^i coefficients.  The i-th
component then satisfies the higher Leibniz rule by construction.

Two gradings live on a jet presentation: the structural one
(deg x^(i) = i) and, when the source algebra is graded, the induced one
(deg x^(i) = deg x).
"""

from dataclasses import dataclass, field as dc_field

from .errors import BadLevels, InhomogeneousRelation, MissingGrading, NotABaseElement
from .poly import JetVar, Monomial, Poly
from .series import BiSeries, TruncSeries
from .scalars import QQ


# ---------------------------------------------------------------------------
# jet components


def _require_base(f):
    for v in f.vars():
        if v.order1 != 0 or v.order2 is not None:
            raise NotABaseElement("polynomial contains jet variable %s" % v)


def _eval_series(f, varmap, one):
    """Evaluate f after substituting each variable by a (bi)series."""
    powers = {}
    acc = None
    for m, c in f.terms.items():
        term = None
        for v, e in m.exps:
            key = (v, e)
            if key not in powers:
                powers[key] = varmap[v] ** e
            term = powers[key] if term is None else term * powers[key]
        if term is None:
            term = one
        term = _scale(term, c)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = _scale(one, f.field.zero)
    return acc


def _scale(series, c):
    if isinstance(series, TruncSeries):
        return TruncSeries(series.level, [p * c for p in series.coeffs])
    return BiSeries(series.n, series.m, [[p * c for p in row] for row in series.grid])


def hs_components(f, n):
    """Jet components d_0(f) .. d_n(f) of a base-ring polynomial."""
    _require_base(f)
    fld = f.field
    varmap = {
        v: TruncSeries(n, [Poly.var(JetVar(v.name, v.index, i), fld) for i in range(n + 1)])
        for v in f.vars()
    }
    one = TruncSeries(n, [Poly.constant(1, fld)] + [Poly.zero(fld)] * n)
    return list(_eval_series(f, varmap, one).coeffs)


def jet_again(f, n, outer_to):
    """Jet components of a polynomial already living in univariate jet
    variables; the new (outer) index lands in ``order1`` or ``order2``."""
    if outer_to not in ("order1", "order2"):
        raise ValueError("outer_to must be order1 or order2")
    fld = f.field

    def lifted(v, a):
        if v.order2 is not None:
            raise NotABaseElement("cannot jet a bivariate variable %s" % v)
        if outer_to == "order1":
            return JetVar(v.name, v.index, a, v.order1)
        return JetVar(v.name, v.index, v.order1, a)

    varmap = {
        v: TruncSeries(n, [Poly.var(lifted(v, a), fld) for a in range(n + 1)])
        for v in f.vars()
    }
    one = TruncSeries(n, [Poly.constant(1, fld)] + [Poly.zero(fld)] * n)
    return list(_eval_series(f, varmap, one).coeffs)


def hs_components_2d(f, n, m):
    """Bivariate jet components: (n+1) x (m+1) matrix of coefficients of
    s^i t^j after substituting x by sum x^(i,j) s^i t^j."""
    _require_base(f)
    fld = f.field
    varmap = {
        v: BiSeries(n, m, [[Poly.var(JetVar(v.name, v.index, i, j), fld)
                            for j in range(m + 1)] for i in range(n + 1)])
        for v in f.vars()
    }
    z = Poly.zero(fld)
    one = BiSeries(n, m, [[Poly.constant(1, fld) if (i, j) == (0, 0) else z
                           for j in range(m + 1)] for i in range(n + 1)])
    return _eval_series(f, varmap, one).grid


# ---------------------------------------------------------------------------
# presentations


@dataclass
class AlgebraPresentation:
    """A k-algebra by generators and relations; optionally graded."""

    vars: list
    relations: list
    grading: dict | None = None
    field: object = QQ

    def __post_init__(self):
        declared = set(self.base_vars())
        for f in self.relations:
            _require_base(f)
            for v in f.vars():
                if v not in declared:
                    raise ValueError("relation mentions undeclared variable %s" % v)
        if self.grading is not None:
            missing = [x for x in self.vars if x not in self.grading]
            if missing:
                raise MissingGrading("no degree for %s" % ", ".join(missing))
            for f in self.relations:
                if not f.is_zero() and self.homogeneous_degree(f) is None:
                    raise InhomogeneousRelation("relation %s is not homogeneous" % f)

    def base_vars(self):
        return [JetVar(x, i, 0) for i, x in enumerate(self.vars)]

    def base_var(self, name):
        return JetVar(name, self.vars.index(name), 0)

    def var_poly(self, name):
        return Poly.var(self.base_var(name), self.field)

    def homogeneous_degree(self, f):
        """Degree of f under the grading, or None if inhomogeneous."""
        degs = {m.weighted_degree(lambda v: self.grading[v.name]) for m in f.terms}
        if len(degs) == 1:
            return degs.pop()
        return None


def grade_monomial(m, mode, grading=None):
    """Structural weight (sum exp * jet order) or induced weight
    (sum exp * source degree of the base name)."""
    if mode == "structural":
        return m.weighted_degree(lambda v: v.order1)
    if mode == "induced":
        if grading is None:
            raise MissingGrading("induced grading requested without a source grading")
        return m.weighted_degree(lambda v: grading[v.name])
    raise ValueError("unknown grading mode: %r" % mode)


@dataclass
class JetPresentation:
    level: int
    source: AlgebraPresentation
    jet_vars: list = dc_field(default_factory=list)
    relations: list = dc_field(default_factory=list)
    relation_index: list = dc_field(default_factory=list)

    @property
    def field(self):
        return self.source.field

    def structural_degree(self, m):
        return grade_monomial(m, "structural")

    def induced_degree(self, m):
        return grade_monomial(m, "induced", self.source.grading)

    def to_json_dict(self):
        out = {
            "level": self.level,
            "vars": [v.render() for v in self.jet_vars],
            "relations": [f.render() for f in self.relations],
            "structural_degrees": {v.render(): v.order1 for v in self.jet_vars},
            "induced_degrees": (
                {v.render(): self.source.grading[v.name] for v in self.jet_vars}
                if self.source.grading is not None else {}),
        }
        return out


def jet_presentation(A, n):
    """Level-n jet presentation of A; relations ordered (relation, order)."""
    jet_vars = [JetVar(x, l, i) for l, x in enumerate(A.vars) for i in range(n + 1)]
    relations = []
    index = []
    for k, f in enumerate(A.relations):
        comps = hs_components(f, n)
        for i, g in enumerate(comps):
            relations.append(g)
            index.append((k, i))
    jp = JetPresentation(n, A, jet_vars, relations, index)
    # structural homogeneity of each generator is a theorem; assert cheaply
    for (k, i), g in zip(index, relations):
        for m in g.terms:
            assert grade_monomial(m, "structural") == i
    return jp


@dataclass
class BiJetPresentation:
    levels: tuple
    source: AlgebraPresentation
    jet_vars: list = dc_field(default_factory=list)
    relations: list = dc_field(default_factory=list)
    relation_index: list = dc_field(default_factory=list)

    def to_json_dict(self):
        return {
            "levels": list(self.levels),
            "vars": [v.render() for v in self.jet_vars],
            "relations": [f.render() for f in self.relations],
        }


def bijet_presentation(A, n, m):
    jet_vars = [JetVar(x, l, i, j)
                for l, x in enumerate(A.vars) for i in range(n + 1) for j in range(m + 1)]
    relations = []
    index = []
    for k, f in enumerate(A.relations):
        grid = hs_components_2d(f, n, m)
        for i in range(n + 1):
            for j in range(m + 1):
                relations.append(grid[i][j])
                index.append((k, i, j))
    return BiJetPresentation((n, m), A, jet_vars, relations, index)


def cotruncation_subset_check(A, n, m):
    """Level-n jet relations must appear verbatim among the level-m ones
    (same relation, same order); the co-truncation map is variable inclusion."""
    if m <= n:
        raise BadLevels("need m > n, got n=%d m=%d" % (n, m))
    low = jet_presentation(A, n)
    high = jet_presentation(A, m)
    high_by_index = dict(zip(high.relation_index, high.relations))
    for (k, i), g in zip(low.relation_index, low.relations):
        if high_by_index.get((k, i)) != g:
            return False, {"relation": k, "order": i,
                           "level_n": g.render(), "level_m": str(high_by_index.get((k, i)))}
    return True, None


# ---------------------------------------------------------------------------
# morphisms


@dataclass
class AlgebraMorphism:
    """Map of presented algebras, given on generators.

    Validity (images of relations lying in the target ideal) is the
    caller's contract; everything built on morphisms here is a free
    polynomial identity.
    """

    source: object
    target: object
    images: dict  # JetVar (source generator) -> Poly over target generators

    def apply(self, f):
        return f.substitute(self.images)

    @classmethod
    def identity(cls, A):
        return cls(A, A, {v: Poly.var(v, A.field) for v in A.base_vars()})


def induced_morphism(phi, n):
    """Jet-level morphism: x^(i) maps to d_i(phi(x))."""
    images = {}
    for v, img in phi.images.items():
        comps = hs_components(img, n)
        for i in range(n + 1):
            images[JetVar(v.name, v.index, i)] = comps[i]
    return AlgebraMorphism(jet_presentation(phi.source, n),
                           jet_presentation(phi.target, n), images)


# ---------------------------------------------------------------------------
# functor commutation


def _canonical_set(polys):
    return sorted(p.render() for p in polys if not p.is_zero())


def bigrade_commute_check(A, n, m):
    """Three-way generator-set comparison: jets-of-jets both ways (with the
    index-permutation renaming folded into variable construction) against
    the direct bivariate jet relations."""
    side_a = []  # level m first, then level n outside
    side_b = []  # level n first, then level m outside
    side_c = []
    for f in A.relations:
        for g in hs_components(f, m):
            side_a.extend(jet_again(g, n, outer_to="order1"))
        for g in hs_components(f, n):
            side_b.extend(jet_again(g, m, outer_to="order2"))
        for row in hs_components_2d(f, n, m):
            side_c.extend(row)
    sa, sb, sc = (_canonical_set(s) for s in (side_a, side_b, side_c))
    ok = sa == sb == sc
    report = {
        "ok": ok,
        "n": n,
        "m": m,
        "count": len(sc),
        "sets": {"n_after_m": sa, "m_after_n": sb, "bivariate": sc} if not ok else None,
    }
    return ok, report
