"""Ideal level operations: quotients, intersections, elimination, dimension.

Everything here reduces to Groebner computations from the groebner module.
Ideals carry their ring and cache their bases; operations that change the
ring (elimination, intersection tags) build the auxiliary ring, compute, and
transport the answer back, so callers never see tag variables.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NotDivisible
from .groebner import GroebnerBasis, divide, groebner, interreduce, normal_form
from .polyring import Degrevlex, Poly, Ring, exp_divides, monomials_of_degree


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    k = 0
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


class Ideal:
    """An ideal of a polynomial ring, given by generators.

    The generator list is kept verbatim (pipeline bookkeeping depends on
    positions); the reduced Groebner basis is computed on demand and cached,
    once untracked and once with transformation tracking.
    """

    __slots__ = ("ring", "gens", "_gb", "_gb_tracked")

    def __init__(self, ring: Ring, gens: Sequence[Poly]) -> None:
        self.ring = ring
        self.gens = [ring.transport(g) for g in gens]
        self._gb: GroebnerBasis | None = None
        self._gb_tracked: GroebnerBasis | None = None

    @staticmethod
    def of(*polys: Poly) -> Ideal:
        if not polys:
            raise ValueError("need at least one polynomial to infer the ring")
        return Ideal(polys[0].ring, list(polys))

    def gb(self, track: bool = False) -> GroebnerBasis:
        if track:
            if self._gb_tracked is None:
                self._gb_tracked = GroebnerBasis(self.ring, self.gens, track=True)
            return self._gb_tracked
        if self._gb is not None:
            return self._gb
        if self._gb_tracked is not None:
            return self._gb_tracked
        self._gb = GroebnerBasis(self.ring, self.gens)
        return self._gb

    def groebner(self) -> list[Poly]:
        return self.gb().reduced

    def normal_form(self, p: Poly) -> Poly:
        return self.gb().normal_form(p)

    def contains(self, p: Poly) -> bool:
        return self.normal_form(p).is_zero

    def is_zero_ideal(self) -> bool:
        return not self.groebner()

    def is_one(self) -> bool:
        return self.gb().is_one()

    def __add__(self, other: Ideal) -> Ideal:
        if other.ring != self.ring:
            raise ValueError("ideal sum across different rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: Ideal) -> Ideal:
        if other.ring != self.ring:
            raise ValueError("ideal product across different rings")
        prods = [a * b for a in self.gens for b in other.gens]
        return Ideal(self.ring, prods)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner() == other.groebner()

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.groebner())))

    def __repr__(self) -> str:
        inside = ", ".join(str(g) for g in self.gens[:6])
        if len(self.gens) > 6:
            inside += ", ..."
        return f"Ideal({inside})"


# ---------------------------------------------------------------------------
# intersection, quotient, elimination


def eliminate(ideal: Ideal, names: Sequence[str]) -> Ideal:
    """Project the ideal into the subring without the named variables."""
    ring = ideal.ring
    names = list(names)
    for n in names:
        ring.index(n)  # raise early on unknown names
    elim_ring = ring.with_order(ring.elimination_order(names))
    basis = groebner([elim_ring.transport(g) for g in ideal.gens], elim_ring)
    small = Ring(ring.field, [n for n in ring.names if n not in set(names)], Degrevlex())
    kept = [small.transport(p) for p in basis if not (p.support_vars() & set(names))]
    return Ideal(small, interreduce(kept))


def intersect(left: Ideal, right: Ideal) -> Ideal:
    """Intersection via a tag variable t: eliminate t from t*I + (1-t)*J."""
    ring = left.ring
    if right.ring != ring:
        raise ValueError("intersection across different rings")
    tag = _fresh_name("t", ring.names)
    big = ring.extend((tag,))
    big = big.with_order(big.elimination_order((tag,)))
    t = big.var(tag)
    one = big.one
    gens = [t * big.transport(g) for g in left.gens]
    gens += [(one - t) * big.transport(g) for g in right.gens]
    basis = groebner(gens, big) if gens else []
    kept = [ring.transport(p) for p in basis if tag not in p.support_vars()]
    return Ideal(ring, interreduce(kept))


def quotient(ideal: Ideal, divisor: Ideal) -> Ideal:
    """The colon ideal (I : J) = {p : p*J inside I}."""
    ring = ideal.ring
    if divisor.ring != ring:
        raise ValueError("quotient across different rings")
    result: Ideal | None = None
    for g in divisor.gens:
        if g.is_zero:
            continue
        meet = intersect(ideal, Ideal(ring, [g]))
        part_gens = []
        for p in meet.gens:
            quots, rem = divide(p, [g])
            if not rem.is_zero:
                raise AssertionError("intersection element not divisible by its generator")
            part_gens.append(quots[0])
        part = Ideal(ring, interreduce(part_gens))
        result = part if result is None else intersect(result, part)
    if result is None:
        return Ideal(ring, [ring.one])  # (I : 0) is the whole ring
    return Ideal(ring, result.groebner())


# ---------------------------------------------------------------------------
# membership refinements


def radical_membership(p: Poly, ideal: Ideal, e_max: int = 10) -> tuple[bool, int | None]:
    """Is some power of p inside the ideal, and which exponent witnesses it.

    The yes/no part uses the classic trick of inverting p with a tag
    variable; the witness scan is capped at e_max, so the answer can be
    (True, None) when the certificate lies beyond the cap.
    """
    ring = ideal.ring
    p = ring.transport(p)
    tag = _fresh_name("z", ring.names)
    big = ring.extend((tag,))
    t = big.var(tag)
    gens = [big.transport(g) for g in ideal.gens]
    gens.append(big.one - t * big.transport(p))
    if not GroebnerBasis(big, gens).is_one():
        return False, None
    gb = ideal.gb()
    power = ring.one
    for e in range(1, e_max + 1):
        power = power * p
        if gb.normal_form(power).is_zero:
            return True, e
    return True, None


def local_membership(p: Poly, ideal: Ideal) -> bool:
    """Membership after inverting everything with nonzero constant term.

    p lies in the ideal locally at the origin exactly when the colon ideal
    (I : p) contains a unit of the local ring, that is an element whose
    constant term is nonzero; the reduced basis makes the test canonical.
    """
    ring = ideal.ring
    p = ring.transport(p)
    if p.is_zero:
        return True
    colon = quotient(ideal, Ideal(ring, [p]))
    return any(g.constant_coeff() != 0 for g in colon.groebner())


def power_in_ideal(p: Poly, ideal: Ideal, e_max: int = 10) -> int | None:
    """Smallest e with p^e in the ideal locally at the origin, scan capped."""
    ring = ideal.ring
    p = ring.transport(p)
    power = ring.one
    for e in range(1, e_max + 1):
        power = power * p
        if local_membership(power, ideal):
            return e
    return None


# ---------------------------------------------------------------------------
# dimension and primality to the origin


def krull_dim(ideal: Ideal) -> int:
    """Dimension of ring/ideal from the staircase of a degree graded basis.

    The dimension equals the largest number of variables that avoid every
    leading monomial; -1 means the ideal is the whole ring.  The computation
    always uses a degrevlex basis, whatever order the ring carries, because
    the staircase argument needs a graded order.
    """
    ring = ideal.ring
    if isinstance(ring.order, Degrevlex):
        basis = ideal.groebner()
    else:
        plain = ring.with_order(Degrevlex())
        basis = groebner([plain.transport(g) for g in ideal.gens], plain)
    if any(p.is_constant and not p.is_zero for p in basis):
        return -1
    leads = [p.lead_exponent() for p in basis]
    n = ring.nvars
    from itertools import combinations

    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            inside = set(subset)
            ok = True
            for lt in leads:
                if all(i in inside for i, e in enumerate(lt) if e):
                    ok = False
                    break
            if ok:
                return size
    return -1


def is_m_primary_local(ideal: Ideal, n: int) -> bool:
    """Does the ideal contain every monomial of degree n (all variables)."""
    ring = ideal.ring
    gb = ideal.gb()
    for mono in monomials_of_degree(ring, range(ring.nvars), n):
        if not gb.normal_form(mono).is_zero:
            return False
    return True


def m_primary_bound(ideal: Ideal, cap: int) -> int | None:
    """Smallest n <= cap with all degree n monomials inside, or None.

    A cheap staircase argument prunes the scan start: pure powers of each
    variable must already be reducible, and their exponents bound the
    staircase box from above.
    """
    ring = ideal.ring
    basis = ideal.groebner()
    if not basis:
        return None
    if basis == [ring.one]:
        return 0
    leads = [p.lead_exponent() for p in basis]
    for i in range(ring.nvars):
        axis = [lt[i] for lt in leads if all(e == 0 for j, e in enumerate(lt) if j != i)]
        if not axis:
            return None  # no pure power of this variable leads, never primary
    for k in range(1, cap + 1):
        if is_m_primary_local(ideal, k):
            return k
    return None


# ---------------------------------------------------------------------------
# exact division modulo an ideal


def divide_exact(a: Poly, d: Poly, modulus: Sequence[Poly]) -> tuple[Poly, list[Poly]]:
    """Solve a = q*d + sum(m_i * modulus_i) exactly.

    Returns the quotient and the modulus coefficients; the identity is
    verified before returning.  Raises NotDivisible when a does not lie in
    the ideal generated by d and the modulus.
    """
    ring = a.ring
    d = ring.transport(d)
    mods = [ring.transport(m) for m in modulus]
    gb = GroebnerBasis(ring, [d] + mods, track=True)
    coeffs = gb.lift(a)
    if coeffs is None:
        raise NotDivisible(f"{a} is not divisible by {d} modulo the given ideal")
    return coeffs[0], coeffs[1:]
