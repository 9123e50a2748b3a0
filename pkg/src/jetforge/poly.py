"""Sparse multivariate polynomials over jet-indexed variables.

The variable universe is ``JetVar``: a base name with a stable index plus
one jet order (univariate jet rings) or two (bivariate ones).  A base-ring
variable x is the order-0 jet variable x_0.  Polynomials are immutable
dictionaries mapping monomials to nonzero exact field scalars; the zero
polynomial is the empty map.

Canonical textual form (the bit-exact contract for golden tests and JSON
output): variables sort by (base index, order1, order2); terms sort by
exponent vector, lexicographically descending; variables render as "x_1"
for jet order 1 and "x_1_2" in bivariate rings; coefficients render as
"p/q" with q omitted when 1.
"""

from dataclasses import dataclass

from .errors import DivisionByZero, FieldMismatch, UnboundVariable
from .scalars import QQ


@dataclass(frozen=True)
class JetVar:
    name: str
    index: int
    order1: int = 0
    order2: int | None = None

    def sort_key(self):
        o2 = -1 if self.order2 is None else self.order2
        return (self.index, self.order1, o2)

    def render(self, base_plain=False):
        if self.order2 is not None:
            return "%s_%d_%d" % (self.name, self.order1, self.order2)
        if base_plain and self.order1 == 0:
            return self.name
        return "%s_%d" % (self.name, self.order1)

    def __str__(self):
        return self.render()


class Monomial:
    """Finite map JetVar -> positive exponent; the empty map is the unit."""

    __slots__ = ("exps", "_key")

    def __init__(self, exps=()):
        items = tuple(sorted(
            ((v, e) for v, e in (exps.items() if isinstance(exps, dict) else exps) if e),
            key=lambda ve: ve[0].sort_key()))
        for _, e in items:
            if e < 0:
                raise ValueError("negative exponent in monomial")
        object.__setattr__(self, "exps", items)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def is_unit(self):
        return not self.exps

    def vars(self):
        return [v for v, _ in self.exps]

    def exponent(self, v):
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def mul(self, other):
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial(d)

    def divide_by_var(self, v):
        """Exact division by one power of v; None if v does not divide."""
        d = dict(self.exps)
        if d.get(v, 0) < 1:
            return None
        d[v] -= 1
        return Monomial(d)

    def total_degree(self):
        return sum(e for _, e in self.exps)

    def weighted_degree(self, weight):
        """Sum of exponent * weight(var) over the monomial."""
        return sum(e * weight(v) for v, e in self.exps)

    def render(self, base_plain=False):
        if not self.exps:
            return "1"
        parts = []
        for v, e in self.exps:
            s = v.render(base_plain)
            parts.append(s if e == 1 else "%s^%d" % (s, e))
        return "*".join(parts)

    def __eq__(self, other):
        return isinstance(other, Monomial) and other.exps == self.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return "Monomial(%s)" % self.render()


UNIT = Monomial()


class Poly:
    """Sparse polynomial with exact field coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=()):
        tdict = {}
        for m, c in (terms.items() if isinstance(terms, dict) else terms):
            c = field.coerce(c)
            if c:
                tdict[m] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", tdict)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field=QQ):
        return cls(field)

    @classmethod
    def constant(cls, c, field=QQ):
        return cls(field, {UNIT: field.coerce(c)})

    @classmethod
    def var(cls, v, field=QQ):
        return cls(field, {Monomial({v: 1}): field.one})

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m.is_unit() for m in self.terms)

    def constant_value(self):
        return self.terms.get(UNIT, self.field.zero)

    def vars(self):
        seen = set()
        for m in self.terms:
            seen.update(m.vars())
        return sorted(seen, key=JetVar.sort_key)

    def coefficient(self, mono):
        return self.terms.get(mono, self.field.zero)

    def max_order1(self):
        return max((v.order1 for m in self.terms for v in m.vars()), default=0)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected Poly, got %r" % (other,))
        if other.field != self.field:
            raise FieldMismatch("mixed-field operands: %r vs %r" % (self.field, other.field))

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.field)
        self._check(other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            d[m] = d.get(m, self.field.zero) + c
        return Poly(self.field, d)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) or self.field.contains(other) and not isinstance(other, Poly):
            return Poly(self.field, {m: c * self.field.coerce(other) for m, c in self.terms.items()})
        self._check(other)
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                c = c1 * c2
                if m in d:
                    d[m] = d[m] + c
                else:
                    d[m] = c
        return Poly(self.field, d)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a Poly")
        out = Poly.constant(1, self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and other.field == self.field and other.terms == self.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    # -- calculus & substitution --------------------------------------

    def partial(self, v):
        """Formal partial derivative with respect to v."""
        d = {}
        for m, c in self.terms.items():
            e = m.exponent(v)
            if not e:
                continue
            lower = m.divide_by_var(v)
            coeff = c * e
            if lower in d:
                d[lower] = d[lower] + coeff
            else:
                d[lower] = coeff
        return Poly(self.field, d)

    def eval(self, assignment):
        """Exact evaluation at a point; assignment maps JetVar to scalar."""
        total = self.field.zero
        for m, c in self.terms.items():
            val = c
            for v, e in m.exps:
                if v not in assignment:
                    raise UnboundVariable("no value for %s" % v)
                val = val * self.field.coerce(assignment[v]) ** e
            total = total + val
        return total

    def substitute(self, mapping):
        """Replace variables by polynomials; unmapped variables stay."""
        out = Poly.zero(self.field)
        for m, c in self.terms.items():
            term = Poly.constant(c, self.field)
            for v, e in m.exps:
                repl = mapping.get(v)
                if repl is None:
                    repl = Poly.var(v, self.field)
                term = term * repl**e
            out = out + term
        return out

    def rename(self, varmap):
        """Apply a variable-to-variable renaming."""
        d = {}
        for m, c in self.terms.items():
            nm = Monomial({varmap.get(v, v): e for v, e in m.exps})
            d[nm] = d.get(nm, self.field.zero) + c
        return Poly(self.field, d)

    # -- unit handling (for truncated-series inversion) ---------------

    def unit_one(self):
        return Poly.constant(1, self.field)

    def unit_inverse(self):
        """Inverse of an invertible constant; the series-inversion hook."""
        if not self.is_constant():
            raise NonUnit_msg(self)
        c = self.constant_value()
        if not c:
            raise NonUnit_msg(self)
        return Poly.constant(self.field.inv(c), self.field)

    # -- canonical rendering ------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: exponent vectors, lex descending."""
        universe = self.vars()
        pos = {v: i for i, v in enumerate(universe)}

        def vec(m):
            row = [0] * len(universe)
            for v, e in m.exps:
                row[pos[v]] = e
            return tuple(row)

        return sorted(self.terms.items(), key=lambda mc: vec(mc[0]), reverse=True)

    def render(self, base_plain=False):
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            cs = self.field.render(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if m.is_unit():
                body = mag
            elif mag == "1":
                body = m.render(base_plain)
            else:
                body = "%s*%s" % (mag, m.render(base_plain))
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "Poly(%s)" % self.render()


def NonUnit_msg(p):
    from .errors import NonUnitLeadingCoefficient

    return NonUnitLeadingCoefficient("leading coefficient is not a unit: %s" % p)


def poly_arith(a, b, op):
    """Dispatch add/sub/mul by name; operands must share a field."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op: %r" % op)


def eval_at_point(f, assignment):
    return f.eval(assignment)


def partial_derivative(f, v):
    return f.partial(v)
