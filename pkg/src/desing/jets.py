"""Truncated power series over the base ring, and Newton lifting.

A jet is an element of the base local ring known modulo the base relations
and a power of the maximal ideal.  Representatives are ordinary polynomials
kept in canonical normal form, so equality at a given precision is literal
equality of representatives.  Precision bookkeeping is pessimistic: any
exact division by an element of positive order costs that much precision,
whether or not cancellation actually happened.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import NoConvergence, NotDivisible, NotDivisibleInJets, SingularJacobian
from .groebner import GroebnerBasis
from .idealops import divide_exact
from .polyring import Poly, Ring, monomials_of_degree


class JetScope:
    """The base ring together with its relations and truncation caches.

    All jets of a computation share one scope; the scope owns the Groebner
    bases of (relations) + (variables)^k for every precision k in use.
    """

    __slots__ = ("ring", "relations", "_bases")

    def __init__(self, ring: Ring, relations: Sequence[Poly] = ()) -> None:
        self.ring = ring
        rels = []
        for r in relations:
            r = ring.transport(r)
            if r.is_zero:
                continue
            if r.constant_coeff() != 0:
                raise ValueError("base relations must vanish at the origin")
            rels.append(r)
        self.relations = rels
        self._bases: dict[int, GroebnerBasis] = {}

    def truncation_basis(self, prec: int) -> GroebnerBasis:
        basis = self._bases.get(prec)
        if basis is None:
            gens = list(self.relations) + monomials_of_degree(
                self.ring, range(self.ring.nvars), prec
            )
            basis = GroebnerBasis(self.ring, gens)
            self._bases[prec] = basis
        return basis

    def series(self, rep: Poly, prec: int) -> JetSeries:
        """Normalize a representative into a jet of the given precision."""
        prec = max(prec, 0)
        rep = self.ring.transport(rep)
        return JetSeries(self, self.truncation_basis(prec).normal_form(rep), prec)

    def zero(self, prec: int) -> JetSeries:
        return JetSeries(self, self.ring.zero, max(prec, 0))

    def one(self, prec: int) -> JetSeries:
        return self.series(self.ring.one, prec)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, JetScope)
            and other.ring == self.ring
            and other.relations == self.relations
        )

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.relations)))

    def __repr__(self) -> str:
        return f"JetScope({self.ring}, {len(self.relations)} relations)"


class JetSeries:
    """An element of the base ring modulo relations and (vars)^prec."""

    __slots__ = ("scope", "rep", "prec")

    def __init__(self, scope: JetScope, rep: Poly, prec: int) -> None:
        self.scope = scope
        self.rep = rep
        self.prec = prec

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    @property
    def is_unit(self) -> bool:
        return self.rep.constant_coeff() != 0

    def order(self) -> int | None:
        """Vanishing order of the representative; None when the jet is zero."""
        return self.rep.min_total_degree()

    def truncate(self, prec: int) -> JetSeries:
        if prec >= self.prec:
            return self
        return self.scope.series(self.rep, prec)

    def _join(self, other: JetSeries) -> int:
        if self.scope != other.scope:
            raise ValueError("jets from different scopes")
        return min(self.prec, other.prec)

    def __add__(self, other: JetSeries) -> JetSeries:
        return self.scope.series(self.rep + other.rep, self._join(other))

    def __sub__(self, other: JetSeries) -> JetSeries:
        return self.scope.series(self.rep - other.rep, self._join(other))

    def __neg__(self) -> JetSeries:
        return JetSeries(self.scope, -self.rep, self.prec)

    def __mul__(self, other: JetSeries) -> JetSeries:
        return self.scope.series(self.rep * other.rep, self._join(other))

    def mul_poly(self, p: Poly) -> JetSeries:
        return self.scope.series(self.rep * self.scope.ring.transport(p), self.prec)

    def scale(self, c) -> JetSeries:
        return self.scope.series(self.rep.scale(self.scope.ring.field.of(c)), self.prec)

    def pow(self, n: int) -> JetSeries:
        result = self.scope.one(self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> JetSeries:
        """Multiplicative inverse at the same precision, by Newton doubling."""
        if not self.is_unit:
            raise NotDivisibleInJets("cannot invert a jet with zero constant term")
        scope = self.scope
        c0 = self.rep.constant_coeff()
        v = scope.series(scope.ring.const(scope.ring.field.inv(c0)), self.prec)
        two = scope.series(scope.ring.const(2), self.prec)
        one = scope.one(self.prec)
        for _ in range(max(self.prec, 1).bit_length() + 2):
            err = self * v - one
            if err.is_zero:
                return v
            v = v * (two - self * v)
        if (self * v - one).is_zero:
            return v
        raise NoConvergence("jet inversion failed to stabilize")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JetSeries):
            return NotImplemented
        return self.scope == other.scope and self.prec == other.prec and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.prec, self.rep))

    def __repr__(self) -> str:
        return f"jet({self.rep} ; prec {self.prec})"


def jet_divide(a: JetSeries, d: Poly) -> JetSeries:
    """Exact jet division by a base element, at the cost of its order.

    The result q satisfies a = q * d modulo relations and (vars)^prec, and is
    well defined modulo (vars)^(prec - order(d)); the precision drop applies
    even when the dividend is zero, because only this much is knowable.
    """
    scope = a.scope
    ring = scope.ring
    d = ring.transport(d)
    if d.is_zero:
        raise NotDivisibleInJets("division of a jet by zero")
    ord_d = d.min_total_degree() or 0
    new_prec = max(a.prec - ord_d, 0)
    if a.rep.is_zero:
        return scope.zero(new_prec)
    modulus = list(scope.relations) + monomials_of_degree(ring, range(ring.nvars), a.prec)
    try:
        q, _ = divide_exact(a.rep, d, modulus)
    except NotDivisible as exc:
        raise NotDivisibleInJets(str(exc)) from None
    return scope.series(q, new_prec)


class JetPoint:
    """Jet values for the non base variables, sharing one precision.

    Used to evaluate polynomials of the big ring (base variables plus fiber
    variables) into jets: fiber variables are looked up here, base variables
    stay symbolic inside the representative.
    """

    __slots__ = ("scope", "values", "prec")

    def __init__(
        self, scope: JetScope, values: Mapping[str, JetSeries], prec: int | None = None
    ) -> None:
        self.scope = scope
        if prec is None:
            if not values:
                raise ValueError("empty point needs an explicit precision")
            prec = min(v.prec for v in values.values())
        self.prec = max(prec, 0)
        fixed: dict[str, JetSeries] = {}
        for name, v in values.items():
            if v.scope != scope:
                raise ValueError("jet value from a different scope")
            fixed[name] = v.truncate(self.prec)
        self.values = fixed

    @staticmethod
    def from_polys(scope: JetScope, values: Mapping[str, Poly], prec: int) -> JetPoint:
        return JetPoint(scope, {n: scope.series(p, prec) for n, p in values.items()}, prec)

    def __getitem__(self, name: str) -> JetSeries:
        return self.values[name]

    def __contains__(self, name: str) -> bool:
        return name in self.values

    def names(self) -> list[str]:
        return sorted(self.values)

    def updated(self, changes: Mapping[str, JetSeries]) -> JetPoint:
        merged = dict(self.values)
        merged.update(changes)
        return JetPoint(self.scope, merged, self.prec)

    def at_precision(self, prec: int) -> JetPoint:
        """Reinterpret the representatives exactly at a new precision."""
        return JetPoint(
            self.scope, {n: self.scope.series(v.rep, prec) for n, v in self.values.items()}, prec
        )

    def evaluate(self, poly: Poly) -> JetSeries:
        """Evaluate a polynomial of any ring containing the base variables."""
        scope = self.scope
        base = scope.ring
        powers: dict[str, list[JetSeries]] = {}
        acc = base.zero
        for exps, coeff in poly.terms.items():
            base_exps = [0] * base.nvars
            factor: JetSeries | None = None
            for i, e in enumerate(exps):
                if not e:
                    continue
                name = poly.ring.names[i]
                if name in base._index:
                    base_exps[base.index(name)] += e
                elif name in self.values:
                    cache = powers.setdefault(name, [scope.one(self.prec)])
                    while len(cache) <= e:
                        cache.append(cache[-1] * self.values[name])
                    pw = cache[e]
                    factor = pw if factor is None else factor * pw
                else:
                    raise ValueError(f"no jet value for variable {name!r}")
            mono = base.monomial(tuple(base_exps), coeff)
            acc = acc + (mono if factor is None else mono * factor.rep)
        return scope.series(acc, self.prec)

    def __repr__(self) -> str:
        inside = ", ".join(f"{n}={v.rep}" for n, v in sorted(self.values.items()))
        return f"JetPoint({inside} ; prec {self.prec})"


# ---------------------------------------------------------------------------
# jet linear algebra and Newton


def jet_solve(rows: list[list[JetSeries]], rhs: list[JetSeries]) -> list[JetSeries]:
    """Solve a square jet linear system by elimination on unit pivots."""
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise ValueError("jet_solve needs a square system")
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col].is_unit), None)
        if pivot is None:
            raise SingularJacobian(f"no unit pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [entry * inv for entry in aug[col]]
        for r in range(n):
            if r == col or aug[r][col].is_zero:
                continue
            f = aug[r][col]
            aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def residual_order(residuals: Sequence[JetSeries]) -> int | None:
    """Smallest vanishing order across the system; None when all are zero."""
    orders = [r.order() for r in residuals if not r.is_zero]
    if not orders:
        return None
    return min(orders)


def hensel_lift(
    system: Sequence[Poly],
    unknowns: Sequence[str],
    start: JetPoint,
    target_prec: int,
) -> JetPoint:
    """Refine a jet point into a solution of a square polynomial system.

    The start point must satisfy the system to order at least one and have a
    jet-unit Jacobian in the chosen unknowns; variables present in the point
    but not listed as unknowns are frozen.  Convergence is quadratic: when
    the base has no relations the residual order is checked to double every
    step, otherwise strict growth is enforced.
    """
    if len(system) != len(unknowns):
        raise ValueError("hensel_lift needs exactly one equation per unknown")
    scope = start.scope
    point = start.at_precision(target_prec)
    jac_polys = [[f.partial(u) for u in unknowns] for f in system]
    prev_order: int | None = None
    for _ in range(target_prec + 4):
        residuals = [point.evaluate(f) for f in system]
        ord_r = residual_order(residuals)
        if ord_r is None:
            return point
        if ord_r == 0:
            raise NoConvergence("residual has a unit term, no solution nearby")
        if prev_order is not None:
            if scope.relations:
                if ord_r <= prev_order:
                    raise NoConvergence("residual order stopped improving")
            elif ord_r < min(2 * prev_order, target_prec):
                raise NoConvergence("residual order failed to double")
        prev_order = ord_r
        jac = [[point.evaluate(entry) for entry in row] for row in jac_polys]
        delta = jet_solve(jac, [-r for r in residuals])
        point = point.updated(
            {u: point[u] + delta[i] for i, u in enumerate(unknowns)}
        )
    raise NoConvergence(f"no solution found at precision {target_prec}")
