"""Finite presentations over the base ring and their smooth locus.

A presentation fixes an ambient polynomial ring split into base variables
and fiber variables, a list of fiber relations, the base relations, and a
record of which relations invert a unit.  The smooth locus ideal is built
from colon ideals times Jacobian minors, one generator subset at a time;
when it is the unit ideal a concrete certificate (a subset, a minor, and an
exact lift of 1) is produced rather than a bare yes.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import SearchExhausted
from .groebner import GroebnerBasis, interreduce, syzygies
from .idealops import Ideal, quotient
from .polyring import Poly, PolyMatrix, Ring


class FinitePresentation:
    """An algebra (base ring)[fiber variables] / (relations), maybe localized.

    The ambient ring contains the base variables followed by the fiber
    variables (inverse variables from localizations included).  Relations
    from localizing at a unit u are ordinary relations w*u - 1; the inverted
    list records the (w, u) pairs so consumers can tell them apart.
    """

    __slots__ = ("ring", "base_names", "fiber_names", "relations", "base_relations", "inverted")

    def __init__(
        self,
        ring: Ring,
        base_names: Sequence[str],
        fiber_names: Sequence[str],
        relations: Sequence[Poly],
        base_relations: Sequence[Poly] = (),
        inverted: Sequence[tuple[str, Poly]] = (),
    ) -> None:
        self.ring = ring
        self.base_names = tuple(base_names)
        self.fiber_names = tuple(fiber_names)
        for name in self.base_names + self.fiber_names:
            ring.index(name)
        if set(self.base_names) & set(self.fiber_names):
            raise ValueError("a variable cannot be both base and fiber")
        self.relations = [ring.transport(p) for p in relations]
        self.base_relations = [ring.transport(p) for p in base_relations]
        for p in self.base_relations:
            extra = p.support_vars() - set(self.base_names)
            if extra:
                raise ValueError(f"base relation involves fiber variables {sorted(extra)}")
        self.inverted = [(name, ring.transport(u)) for name, u in inverted]

    def all_relations(self) -> list[Poly]:
        return self.relations + self.base_relations

    def presentation_ideal(self) -> Ideal:
        return Ideal(self.ring, self.all_relations())

    def fiber_jacobian(self, polys: Sequence[Poly] | None = None) -> PolyMatrix:
        rows = self.relations if polys is None else list(polys)
        return PolyMatrix.jacobian(rows, self.fiber_names, self.ring)

    def extend(
        self, new_fiber_names: Sequence[str], new_relations: Sequence[Poly] = ()
    ) -> FinitePresentation:
        """Append fiber variables (and optionally relations) to the presentation."""
        big = self.ring.extend(tuple(new_fiber_names))
        return FinitePresentation(
            big,
            self.base_names,
            self.fiber_names + tuple(new_fiber_names),
            [big.transport(p) for p in self.relations] + [big.transport(p) for p in new_relations],
            [big.transport(p) for p in self.base_relations],
            [(n, big.transport(u)) for n, u in self.inverted],
        )

    def localize(self, unit: Poly, w_name: str | None = None) -> FinitePresentation:
        """Invert one element: a fresh variable w with relation w*unit - 1."""
        if w_name is None:
            k = 0
            while f"w{k}" in self.ring._index:
                k += 1
            w_name = f"w{k}"
        big = self.ring.extend((w_name,))
        unit_big = big.transport(unit)
        relation = big.var(w_name) * unit_big - big.one
        return FinitePresentation(
            big,
            self.base_names,
            self.fiber_names + (w_name,),
            [big.transport(p) for p in self.relations] + [relation],
            [big.transport(p) for p in self.base_relations],
            [(n, big.transport(u)) for n, u in self.inverted] + [(w_name, unit_big)],
        )

    def __repr__(self) -> str:
        return (
            f"FinitePresentation({len(self.fiber_names)} fiber vars, "
            f"{len(self.relations)} relations, {len(self.inverted)} inverted)"
        )


# ---------------------------------------------------------------------------
# smooth locus


def elkik_ideal(pres: FinitePresentation, subset_bound: int = 3) -> Ideal:
    """The smooth locus ideal: sum over generator subsets of colon times minors.

    For each subset f of the relations (size r up to subset_bound and up to
    the number of fiber variables), the contribution is the colon ideal
    ((f) + base : all relations) multiplied by the r by r minors of the
    Jacobian of f in the fiber variables.  The base relations ride along in
    every colon so the answer is an ideal upstairs that cuts out the
    non smooth locus downstairs.
    """
    ring = pres.ring
    rels = [p for p in pres.relations if not p.is_zero]
    n = len(pres.fiber_names)
    l = len(rels)
    whole = Ideal(ring, pres.all_relations())
    out: list[Poly] = []
    seen: set = set()
    if l == 0:
        return Ideal(ring, [ring.one])
    jac = pres.fiber_jacobian(rels)
    memo: dict = {}
    for r in range(1, min(n, l, subset_bound) + 1):
        for subset in combinations(range(l), r):
            colon = quotient(
                Ideal(ring, [rels[i] for i in subset] + pres.base_relations), whole
            )
            cgens = [c for c in colon.gens if not c.is_zero]
            if not cgens:
                continue
            sub = jac.submatrix(subset, range(n))
            for rows, cols, det in sub.minors(r, memo):
                if det.is_zero:
                    continue
                for c in cgens:
                    prod = c * det
                    if not prod.is_zero:
                        key = frozenset(prod.terms.items())
                        if key not in seen:
                            seen.add(key)
                            out.append(prod)
    return Ideal(ring, out)


class SmoothCertificate:
    """Witness that a presentation is standard smooth.

    Stores the generator subset, the products (colon coefficient times
    Jacobian minor) entering the unit combination, and the exact lift of 1
    over products followed by relations followed by base relations.  The
    check method re-expands everything from scratch.
    """

    __slots__ = ("subset", "product_terms", "coeffs")

    def __init__(
        self,
        subset: tuple[int, ...],
        product_terms: list[tuple[Poly, tuple[int, ...], tuple[int, ...], Poly]],
        coeffs: list[Poly],
    ) -> None:
        self.subset = subset
        self.product_terms = product_terms
        self.coeffs = coeffs

    def check(self, pres: FinitePresentation) -> bool:
        ring = pres.ring
        columns = [c * m for c, _, _, m in self.product_terms]
        columns += pres.relations + pres.base_relations
        if len(columns) != len(self.coeffs):
            return False
        total = ring.zero
        for coeff, col in zip(self.coeffs, columns):
            if not coeff.is_zero:
                total = total + coeff * col
        return total == ring.one


def standard_smooth_certificate(
    pres: FinitePresentation, subset_bound: int = 3
) -> SmoothCertificate:
    """Search for a subset whose colon times minors lift 1, smallest first.

    Raises SearchExhausted when nothing is found; the exception's complete
    flag is True when every mathematically possible subset size was covered,
    so the caller can distinguish a genuine negative from a capped search.
    """
    ring = pres.ring
    rels = [p for p in pres.relations if not p.is_zero]
    n = len(pres.fiber_names)
    l = len(rels)
    if l == 0:
        return SmoothCertificate(
            (), [(ring.one, (), (), ring.one)], [ring.one] + [ring.zero] * len(pres.relations + pres.base_relations)
        )
    whole = Ideal(ring, pres.all_relations())
    jac = pres.fiber_jacobian(rels)
    memo: dict = {}
    cap = min(n, l, subset_bound)
    for r in range(1, cap + 1):
        for subset in combinations(range(l), r):
            colon = quotient(
                Ideal(ring, [rels[i] for i in subset] + pres.base_relations), whole
            )
            cgens = [c for c in colon.gens if not c.is_zero]
            if not cgens:
                continue
            sub = jac.submatrix(subset, range(n))
            product_terms: list[tuple[Poly, tuple[int, ...], tuple[int, ...], Poly]] = []
            for rows, cols, det in sub.minors(r, memo):
                if det.is_zero:
                    continue
                for c in cgens:
                    product_terms.append((c, tuple(subset[i] for i in rows), cols, det))
            if not product_terms:
                continue
            columns = [c * m for c, _, _, m in product_terms]
            columns += pres.relations + pres.base_relations
            gb = GroebnerBasis(ring, columns, track=True)
            coeffs = gb.lift(ring.one)
            if coeffs is None:
                continue
            cert = SmoothCertificate(tuple(subset), product_terms, coeffs)
            if not cert.check(pres):
                raise AssertionError("internal error: smoothness witness failed its own check")
            return cert
    raise SearchExhausted(
        f"no standard smooth witness with subsets of size up to {cap}",
        complete=(cap >= min(n, l)),
    )


def is_standard_smooth(pres: FinitePresentation, subset_bound: int = 3) -> bool:
    try:
        standard_smooth_certificate(pres, subset_bound)
        return True
    except SearchExhausted:
        return False


# ---------------------------------------------------------------------------
# conormal module


def symmetric_algebra_presentation(
    pres: FinitePresentation, t_names: Sequence[str]
) -> tuple[Ring, list[Poly]]:
    """Present the symmetric algebra of the conormal module of the relations.

    One new variable per relation; the returned polynomials are the linear
    forms sum(a_i * T_i) where (a_i) runs over syzygies of the relations
    modulo the base relations, each coefficient reduced to normal form
    modulo all relations, with zero rows dropped.  Returns the extended ring
    and the list of linear relations (possibly empty, the free case).
    """
    ring = pres.ring
    gens = list(pres.relations)
    l = len(gens)
    if len(t_names) != l:
        raise ValueError("need exactly one new variable per relation")
    rows = syzygies(gens + pres.base_relations, ring) if gens else []
    whole = Ideal(ring, pres.all_relations())
    big = ring.extend(tuple(t_names))
    out: list[Poly] = []
    seen: set = set()
    for row in rows:
        entries = [whole.normal_form(row[i]) for i in range(l)]
        if all(e.is_zero for e in entries):
            continue
        poly = big.zero
        for i, e in enumerate(entries):
            if not e.is_zero:
                poly = poly + big.transport(e) * big.var(t_names[i])
        key = frozenset(poly.terms.items())
        if key in seen:
            continue
        seen.add(key)
        out.append(poly)
    return big, out
