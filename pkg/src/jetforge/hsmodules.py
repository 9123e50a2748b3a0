"""Hasse-Schmidt modules via twisted-action matrices.

The dual of the free rank-(n+1) module over the level-n jet algebra
carries an action of the base algebra given by a . e^(i) =
sum_{j<=i} a^(i-j) e^(j); the matrix of that action is upper triangular
with entries the jet components of a.  Hasse-Schmidt modules of a
cokernel presentation are block matrices of those twisted actions, and
the cotangent module of a jet algebra is exactly the Hasse-Schmidt
module of the base cotangent module (checked entrywise through the
identity  d(d_i f)/d x^(j) = d_{i-j}(df/dx)).
"""

from dataclasses import dataclass, field as dc_field

from .jets import (AlgebraPresentation, JetPresentation, hs_components,
                   jet_presentation)
from .poly import JetVar, Poly


@dataclass
class TwistedMatrix:
    """(n+1) x (n+1) upper-triangular matrix, entry (row j, col i) = d_{i-j}(p)."""

    level: int
    entries: list  # rows of Poly

    @classmethod
    def of(cls, p, n):
        comps = hs_components(p, n)
        zero = Poly.zero(p.field)
        rows = [[comps[i - j] if j <= i else zero for i in range(n + 1)]
                for j in range(n + 1)]
        return cls(n, rows)

    def __eq__(self, other):
        return (isinstance(other, TwistedMatrix) and other.level == self.level
                and other.entries == self.entries)

    def matmul(self, other):
        n = self.level
        zero = self.entries[0][0] * 0
        rows = []
        for j in range(n + 1):
            row = []
            for i in range(n + 1):
                acc = zero
                for k in range(n + 1):
                    acc = acc + self.entries[j][k] * other.entries[k][i]
                row.append(acc)
            rows.append(row)
        return TwistedMatrix(n, rows)


def twisted_action_matrix(p, n):
    return TwistedMatrix.of(p, n)


@dataclass
class ModulePresentation:
    """Cokernel of a relation matrix: rows are relations sum_l p_kl e_l."""

    over: AlgebraPresentation
    rank: int
    relation_matrix: list  # s rows, each of length rank

    def __post_init__(self):
        for row in self.relation_matrix:
            if len(row) != self.rank:
                raise ValueError("relation row length != rank")

    @property
    def field(self):
        return self.over.field


@dataclass
class HSModulePresentation:
    """Level-n Hasse-Schmidt module of a presented module.

    Basis (l, i) for l < rank, i <= n, ordered l-major; relation rows
    indexed (k, i), k-major; entry at row (k, i), column (l, j) is
    d_{i-j}(p_kl), zero for j > i.
    """

    over: JetPresentation
    rank: int
    level: int
    relation_matrix: list
    row_index: list = dc_field(default_factory=list)
    col_index: list = dc_field(default_factory=list)

    def basis_labels(self):
        return ["e%d_%d" % (l, i) for l, i in self.col_index]

    def to_json_dict(self):
        return {
            "level": self.level,
            "rank": self.rank,
            "basis": self.basis_labels(),
            "rows": [[p.render() for p in row] for row in self.relation_matrix],
        }


def hs_module_presentation(M, n):
    jp = jet_presentation(M.over, n)
    zero = Poly.zero(M.field)
    comp = [[hs_components(p, n) for p in row] for row in M.relation_matrix]
    rows = []
    row_index = []
    col_index = [(l, i) for l in range(M.rank) for i in range(n + 1)]
    for k in range(len(M.relation_matrix)):
        for i in range(n + 1):
            row = []
            for l in range(M.rank):
                for j in range(n + 1):
                    row.append(comp[k][l][i - j] if j <= i else zero)
            rows.append(row)
            row_index.append((k, i))
    return HSModulePresentation(jp, M.rank, n, rows, row_index, col_index)


def delta_apply(a, l, i, M, n):
    """Expand a . (e_l (x) t^[i]) over the basis (l, j), j <= i."""
    if not (0 <= l < M.rank and 0 <= i <= n):
        raise IndexError("basis index out of range: (%d, %d)" % (l, i))
    comps = hs_components(a, n)
    zero = Poly.zero(M.field)
    vec = []
    for ll in range(M.rank):
        for j in range(n + 1):
            if ll == l and j <= i:
                vec.append(comps[i - j])
            else:
                vec.append(zero)
    return vec


# ---------------------------------------------------------------------------
# Kaehler differentials


@dataclass
class KaehlerPresentation:
    """Module of differentials: basis d(var), relations the Jacobian rows."""

    over: object
    rank: int
    relation_matrix: list
    basis: list

    def as_module(self, base):
        return ModulePresentation(base, self.rank, self.relation_matrix)


def kaehler_presentation(P):
    if isinstance(P, JetPresentation):
        gens = P.jet_vars
        rels = P.relations
        fld = P.field
    else:
        gens = P.base_vars()
        rels = P.relations
        fld = P.field
    rows = [[f.partial(v) for v in gens] for f in rels]
    return KaehlerPresentation(P, len(gens), rows, list(gens))


def cotangent_theorem_check(A, n):
    """Jacobian of the jet presentation vs block twisted-matrix of the base
    Jacobian, entrywise; rows (k, i), columns (l, j)."""
    jet_jac = kaehler_presentation(jet_presentation(A, n))
    base = kaehler_presentation(A)
    block = hs_module_presentation(base.as_module(A), n)
    mismatches = []
    if len(jet_jac.relation_matrix) != len(block.relation_matrix):
        return False, {"ok": False, "reason": "row count mismatch"}
    for r, (row1, row2) in enumerate(zip(jet_jac.relation_matrix, block.relation_matrix)):
        for c, (p1, p2) in enumerate(zip(row1, row2)):
            if p1 != p2:
                mismatches.append({"row": block.row_index[r], "col": block.col_index[c],
                                   "jet_jacobian": p1.render(), "block": p2.render()})
    ok = not mismatches
    return ok, {"ok": ok, "rows": len(block.relation_matrix),
                "cols": len(block.col_index), "mismatches": mismatches}


# ---------------------------------------------------------------------------
# symmetric algebra bridge


@dataclass
class SymPresentation:
    algebra: AlgebraPresentation
    module_rank: int

    def to_json_dict(self):
        return {
            "vars": self.algebra.vars,
            "grading": dict(self.algebra.grading),
            "relations": [f.render(base_plain=True) for f in self.algebra.relations],
        }


def _sym_basis_name(l):
    return "e%d" % (l + 1)


def sym_presentation(M):
    """Sym of a presented module: adjoin degree-1 symbols e_1..e_r, keep the
    base relations in degree 0, add the module rows as degree-1 relations."""
    A = M.over
    names = list(A.vars) + [_sym_basis_name(l) for l in range(M.rank)]
    grading = {x: 0 for x in A.vars}
    grading.update({_sym_basis_name(l): 1 for l in range(M.rank)})
    # re-index base variables into the extended ring (indices are unchanged
    # because module symbols are appended after the base variables)
    evars = [JetVar(_sym_basis_name(l), len(A.vars) + l, 0) for l in range(M.rank)]
    relations = list(A.relations)
    for row in M.relation_matrix:
        rel = Poly.zero(A.field)
        for l, p in enumerate(row):
            rel = rel + p * Poly.var(evars[l], A.field)
        relations.append(rel)
    ext = AlgebraPresentation(names, relations, grading, A.field)
    return SymPresentation(ext, M.rank)


def sym_theorem_check(M, n):
    """Jets of Sym(M) split by induced degree: degree-0 relations must be the
    jet relations of the base algebra, degree-1 relations the rows of the
    Hasse-Schmidt module presentation."""
    sym = sym_presentation(M)
    sp = jet_presentation(sym.algebra, n)
    base_jets = jet_presentation(M.over, n)
    hsm = hs_module_presentation(M, n)

    deg0 = []
    deg1 = []
    for g in sp.relations:
        if g.is_zero():
            continue
        d = sym.algebra.homogeneous_degree(g)
        # jets of homogeneous relations stay homogeneous for the induced grading
        assert d is not None or g.is_zero()
        (deg0 if d == 0 else deg1).append(g)

    want0 = sorted(g.render() for g in base_jets.relations if not g.is_zero())
    got0 = sorted(g.render() for g in deg0)
    if want0 != got0:
        return False, {"ok": False, "stage": "degree0", "want": want0, "got": got0}

    # read each degree-1 relation as a linear form in the e_l^(j)
    evars = {JetVar(_sym_basis_name(l), len(M.over.vars) + l, j): (l, j)
             for l in range(M.rank) for j in range(n + 1)}
    rows_got = []
    for g in deg1:
        row = {key: Poly.zero(M.field) for key in hsm.col_index}
        for m, c in g.terms.items():
            hit = [v for v in m.vars() if v in evars]
            if len(hit) != 1 or m.exponent(hit[0]) != 1:
                return False, {"ok": False, "stage": "degree1",
                               "reason": "not linear in module symbols", "relation": g.render()}
            rest = m.divide_by_var(hit[0])
            row[evars[hit[0]]] = row[evars[hit[0]]] + Poly(M.field, {rest: c})
        rows_got.append(tuple(row[key].render() for key in hsm.col_index))
    # zero rows generate nothing; drop them on both sides
    zero_row = tuple("0" for _ in hsm.col_index)
    rows_want = [tuple(p.render() for p in row) for row in hsm.relation_matrix]
    rows_want = [r for r in rows_want if r != zero_row]
    rows_got = [r for r in rows_got if r != zero_row]
    ok = sorted(rows_got) == sorted(rows_want)
    report = {"ok": ok, "degree1_rows": len(rows_got)}
    if not ok:
        report["want"] = sorted(rows_want)
        report["got"] = sorted(rows_got)
    return ok, report


# ---------------------------------------------------------------------------
# base change and duality


def base_change_check(phi, M, n):
    """f_n applied entrywise to the Hasse-Schmidt presentation of M equals the
    Hasse-Schmidt presentation of the pushed-forward module."""
    from .jets import induced_morphism

    fn = induced_morphism(phi, n)
    left = hs_module_presentation(M, n)
    pushed = ModulePresentation(phi.target, M.rank,
                                [[phi.apply(p) for p in row] for row in M.relation_matrix])
    right = hs_module_presentation(pushed, n)
    for row1, row2 in zip(left.relation_matrix, right.relation_matrix):
        for p1, p2 in zip(row1, row2):
            if fn.apply(p1) != p2:
                return False
    return True


def free_dual_zigzag_check(n, field=None):
    """Coevaluation 1 -> sum t^[i] (x) t^i against the Kronecker evaluation
    t^i (x) t^[j] -> delta_ij: both triangle composites must be the identity
    on the free rank-(n+1) pair."""
    from .scalars import QQ

    fld = field or QQ
    one, zero = fld.one, fld.zero
    # eta as a matrix: component (a, b) of the tensor sum_i delta_ia delta_ib
    eta = [[one if a == b else zero for b in range(n + 1)] for a in range(n + 1)]
    theta = [[one if a == b else zero for b in range(n + 1)] for a in range(n + 1)]
    # composite on the dual side: e^[j] -> sum_i t^[i] (x) t^i (x) e^[j]
    #                                   -> sum_i t^[i] theta(t^i, e^[j])
    comp1 = [[sum_scalar(fld, (eta[i][a] * theta[a][j] for a in range(n + 1)))
              for j in range(n + 1)] for i in range(n + 1)]
    # composite on the module side: t^a -> t^a (x) sum_i t^[i] (x) t^i
    #                                   -> sum_i theta(t^a, t^[i]) t^i
    comp2 = [[sum_scalar(fld, (theta[a][i] * eta[i][b] for i in range(n + 1)))
              for b in range(n + 1)] for a in range(n + 1)]
    ident = [[one if a == b else zero for b in range(n + 1)] for a in range(n + 1)]
    return comp1 == ident and comp2 == ident


def sum_scalar(fld, items):
    acc = fld.zero
    for x in items:
        acc = acc + x
    return acc
