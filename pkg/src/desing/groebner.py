"""Groebner bases over the rationals and prime fields.

The engine is Buchberger's algorithm with the normal selection strategy and
the product and chain criteria.  Every computation can optionally track how
each basis element is written in terms of the input generators; membership
certificates (lift) and syzygy generators fall out of that bookkeeping, so
the rest of the package never has to trust an unverified division.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .polyring import (
    Coef,
    Exponent,
    Poly,
    Ring,
    exp_add,
    exp_deg,
    exp_divides,
    exp_lcm,
    exp_sub,
)

# ---------------------------------------------------------------------------
# division


def divide(p: Poly, divisors: Sequence[Poly]) -> tuple[list[Poly], Poly]:
    """Multivariate division with quotients: p = sum(q[i] * divisors[i]) + r.

    At every step the first divisor in list order whose leading term divides
    the current leading term is used, so the outcome is deterministic.  No
    term of the remainder is divisible by any divisor's leading term; when
    the divisors form a Groebner basis the remainder is the canonical normal
    form.  Zero divisors are tolerated and receive zero quotients.
    """
    ring = p.ring
    char = ring.field.char
    key = ring.order.key
    data: list[Optional[tuple[Exponent, Coef, dict]]] = []
    for d in divisors:
        if d.ring != ring:
            raise ValueError("divisor from a different ring")
        if d.is_zero:
            data.append(None)
        else:
            lt = d.lead_exponent()
            data.append((lt, ring.field.inv(d.terms[lt]), d.terms))
    work = dict(p.terms)
    quots: list[dict] = [{} for _ in divisors]
    rem: dict = {}
    while work:
        lead = max(work, key=key)
        coeff = work[lead]
        for i, entry in enumerate(data):
            if entry is None:
                continue
            lt, lc_inv, dterms = entry
            if exp_divides(lt, lead):
                q = coeff * lc_inv
                if char:
                    q %= char
                shift = exp_sub(lead, lt)
                qd = quots[i]
                qc = qd.get(shift, 0) + q
                if char:
                    qc %= char
                if qc:
                    qd[shift] = qc
                else:
                    qd.pop(shift, None)
                for de, dc in dterms.items():
                    e = exp_add(de, shift)
                    v = work.get(e, 0) - q * dc
                    if char:
                        v %= char
                    if v:
                        work[e] = v
                    else:
                        work.pop(e, None)
                break
        else:
            rem[lead] = coeff
            del work[lead]
    return [Poly(ring, qd) for qd in quots], Poly(ring, rem)


def normal_form(p: Poly, divisors: Sequence[Poly]) -> Poly:
    """Remainder of division; canonical when the divisors are a Groebner basis."""
    return divide(p, divisors)[1]


def s_polynomial(f: Poly, g: Poly) -> Poly:
    lf, cf = f.lead_term()
    lg, cg = g.lead_term()
    lcm = exp_lcm(lf, lg)
    field = f.ring.field
    return f.mono_mul(exp_sub(lcm, lf), field.inv(cf)) - g.mono_mul(exp_sub(lcm, lg), field.inv(cg))


# ---------------------------------------------------------------------------
# the Buchberger loop


def _normalize(p: Poly) -> tuple[Poly, Coef]:
    """Content-cleared (char 0) or monic (char p) copy plus the applied scale."""
    field = p.ring.field
    if field.char:
        scale = field.inv(p.lead_coeff())
        return p.scale(scale), scale
    prim = p.primitive()
    scale = prim.lead_coeff() / p.lead_coeff()
    return prim, scale


def _vec_zero(ring: Ring, n: int) -> list[Poly]:
    return [ring.zero] * n


def _vec_add_scaled(acc: list[Poly], vec: Sequence[Poly], factor: Poly) -> None:
    for i, v in enumerate(vec):
        if not v.is_zero and not factor.is_zero:
            acc[i] = acc[i] + factor * v


def _buchberger(
    gens: Sequence[Poly], ring: Ring, track: bool, all_pairs: bool
) -> tuple[list[Poly], list[list[Poly]], list[list[Poly]]]:
    """Accumulated (non reduced) basis, tracking vectors, S-pair syzygies.

    Tracking vectors satisfy basis[k] = sum(vectors[k][l] * gens[l]).  With
    all_pairs the product and chain criteria are disabled so that every
    S-pair contributes, which is what the syzygy computation needs.
    """
    field = ring.field
    n = len(gens)
    basis: list[Poly] = []
    vectors: list[list[Poly]] = []
    syzygies: list[list[Poly]] = []

    for i, g in enumerate(gens):
        if g.ring != ring:
            raise ValueError("generator from a different ring")
        if g.is_zero:
            continue
        p, scale = _normalize(g)
        basis.append(p)
        if track:
            vec = _vec_zero(ring, n)
            vec[i] = ring.const(scale)
            vectors.append(vec)

    pending: set[tuple[int, int]] = {
        (i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
    }
    order_key = ring.order.key

    def pair_rank(pair: tuple[int, int]):
        i, j = pair
        lcm = exp_lcm(basis[i].lead_exponent(), basis[j].lead_exponent())
        return (exp_deg(lcm), order_key(lcm), i, j)

    while pending:
        i, j = min(pending, key=pair_rank)
        pending.discard((i, j))
        lt_i = basis[i].lead_exponent()
        lt_j = basis[j].lead_exponent()
        lcm = exp_lcm(lt_i, lt_j)
        if not all_pairs:
            if lcm == exp_add(lt_i, lt_j):
                continue  # coprime leading terms reduce to zero
            skip = False
            for k in range(len(basis)):
                if k in (i, j):
                    continue
                if exp_divides(basis[k].lead_exponent(), lcm):
                    a = (min(i, k), max(i, k))
                    b = (min(k, j), max(k, j))
                    if a not in pending and b not in pending:
                        skip = True
                        break
            if skip:
                continue
        spoly = s_polynomial(basis[i], basis[j])
        quots, rem = divide(spoly, basis)
        if track:
            combo = _vec_zero(ring, n)
            m_i = ring.monomial(exp_sub(lcm, lt_i), field.inv(basis[i].lead_coeff()))
            m_j = ring.monomial(exp_sub(lcm, lt_j), field.inv(basis[j].lead_coeff()))
            _vec_add_scaled(combo, vectors[i], m_i)
            _vec_add_scaled(combo, vectors[j], -m_j)
            for k, q in enumerate(quots):
                if not q.is_zero:
                    _vec_add_scaled(combo, vectors[k], -q)
        if rem.is_zero:
            if track and any(not v.is_zero for v in combo):
                syzygies.append(combo)
            continue
        new, scale = _normalize(rem)
        basis.append(new)
        if track:
            vectors.append([ring.const(scale) * v for v in combo])
        t = len(basis) - 1
        pending.update((k, t) for k in range(t))
    return basis, vectors, syzygies


def interreduce(basis: Sequence[Poly]) -> list[Poly]:
    """The reduced basis: monic, tails in normal form, sorted by leading term.

    Applied to any Groebner basis this produces THE reduced Groebner basis of
    the ideal, which is unique, so equal ideals always print identically.
    """
    nonzero = [p for p in basis if not p.is_zero]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    key = ring.order.key
    nonzero.sort(key=lambda p: key(p.lead_exponent()))
    minimal: list[Poly] = []
    for p in nonzero:
        lt = p.lead_exponent()
        if any(exp_divides(q.lead_exponent(), lt) for q in minimal):
            continue
        minimal.append(p)
    reduced: list[Poly] = []
    for idx, p in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = normal_form(p, others)
        reduced.append(r.monic())
    reduced.sort(key=lambda p: key(p.lead_exponent()))
    return reduced


class GroebnerBasis:
    """A Groebner basis of an ideal given by generators.

    With track=True every accumulated basis element knows its expression in
    the input generators, which powers exact membership certificates.
    """

    __slots__ = ("ring", "gens", "basis", "vectors", "_reduced")

    def __init__(self, ring: Ring, gens: Sequence[Poly], *, track: bool = False) -> None:
        self.ring = ring
        self.gens = list(gens)
        self.basis, self.vectors, _ = _buchberger(self.gens, ring, track, all_pairs=False)
        self._reduced: list[Poly] | None = None

    @property
    def reduced(self) -> list[Poly]:
        if self._reduced is None:
            self._reduced = interreduce(self.basis)
        return self._reduced

    def normal_form(self, p: Poly) -> Poly:
        return normal_form(self.ring.transport(p), self.reduced)

    def contains(self, p: Poly) -> bool:
        return self.normal_form(p).is_zero

    def is_one(self) -> bool:
        red = self.reduced
        return len(red) == 1 and red[0] == self.ring.one

    def normal_form_with_lift(self, p: Poly) -> tuple[Poly, list[Poly]]:
        """Remainder plus coefficients over the ORIGINAL generators.

        Satisfies p = sum(coeffs[l] * gens[l]) + remainder exactly; the
        identity is re-checked before returning.
        """
        if not self.vectors and self.basis:
            raise ValueError("lift requested from an untracked basis")
        p = self.ring.transport(p)
        quots, rem = divide(p, self.basis)
        coeffs = _vec_zero(self.ring, len(self.gens))
        for k, q in enumerate(quots):
            if not q.is_zero:
                _vec_add_scaled(coeffs, self.vectors[k], q)
        check = p - rem
        for c, g in zip(coeffs, self.gens):
            if not c.is_zero:
                check = check - c * g
        if not check.is_zero:
            raise AssertionError("internal error: tracked division identity failed")
        return rem, coeffs

    def lift(self, p: Poly) -> list[Poly] | None:
        """Coefficients writing p in the generators, or None if p is outside."""
        rem, coeffs = self.normal_form_with_lift(p)
        if not rem.is_zero:
            return None
        return coeffs


def groebner(gens: Sequence[Poly], ring: Ring | None = None) -> list[Poly]:
    """The reduced Groebner basis, canonical for the ideal and the order."""
    if ring is None:
        if not gens:
            raise ValueError("cannot infer ring from an empty generator list")
        ring = gens[0].ring
    return GroebnerBasis(ring, gens).reduced


def lift(p: Poly, gens: Sequence[Poly]) -> list[Poly] | None:
    if not gens:
        return None if not p.is_zero else []
    return GroebnerBasis(p.ring, gens, track=True).lift(p)


def is_groebner_basis(gens: Sequence[Poly]) -> bool:
    """Check the defining property directly: all S-polynomials reduce to zero."""
    nonzero = [g for g in gens if not g.is_zero]
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            if not normal_form(s_polynomial(nonzero[i], nonzero[j]), nonzero).is_zero:
                return False
    return True


# ---------------------------------------------------------------------------
# syzygies


def _row_primitive(row: list[Poly], ring: Ring) -> list[Poly]:
    """Scale a syzygy row canonically (shared content out, first entry positive)."""
    nonzero = [p for p in row if not p.is_zero]
    if not nonzero:
        return row
    field = ring.field
    if field.char:
        scale = field.inv(nonzero[0].lead_coeff())
        return [p.scale(scale) for p in row]
    den = 1
    num = 0
    for p in nonzero:
        for c in p.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
    for p in nonzero:
        for c in p.terms.values():
            num = gcd(num, c.numerator * den // c.denominator)
    scale = Fraction(den, num)
    if nonzero[0].lead_coeff() < 0:
        scale = -scale
    return [p.scale(scale) for p in row]


def _row_is_multiple(row: Sequence[Poly], base: Sequence[Poly]) -> bool:
    """True when row = q * base for one polynomial q."""
    pivot = next((i for i, p in enumerate(base) if not p.is_zero), None)
    if pivot is None:
        return all(p.is_zero for p in row)
    quots, rem = divide(row[pivot], [base[pivot]])
    if not rem.is_zero:
        return False
    q = quots[0]
    return all(row[i] == q * base[i] for i in range(len(base)))


def syzygies(gens: Sequence[Poly], ring: Ring | None = None) -> list[list[Poly]]:
    """A generating set for the relations sum(v[i] * gens[i]) = 0.

    Sources, in order: S-pair reductions of a full (criteria free) tracked
    Buchberger run, the rows expressing that dividing each generator by the
    basis returns it exactly, and the pairwise Koszul relations.  Rows that
    are single polynomial multiples of an earlier row are dropped and each
    survivor is content normalized, so small inputs give the familiar
    minimal answers.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            return []
        ring = gens[0].ring
    n = len(gens)
    basis, vectors, spair_rows = _buchberger(gens, ring, track=True, all_pairs=True)

    candidates: list[list[Poly]] = list(spair_rows)
    for i, g in enumerate(gens):
        quots, rem = divide(ring.transport(g), basis)
        if not rem.is_zero:
            raise AssertionError("generator failed to reduce against its own basis")
        row = _vec_zero(ring, n)
        row[i] = ring.one
        for k, q in enumerate(quots):
            if not q.is_zero:
                _vec_add_scaled(row, vectors[k], -q)
        candidates.append(row)
    for i in range(n):
        for j in range(i + 1, n):
            if gens[i].is_zero and gens[j].is_zero:
                continue
            row = _vec_zero(ring, n)
            row[i] = ring.transport(gens[j])
            row[j] = -ring.transport(gens[i])
            candidates.append(row)

    kept: list[list[Poly]] = []
    for row in candidates:
        if all(p.is_zero for p in row):
            continue
        row = _row_primitive(row, ring)
        if any(_row_is_multiple(row, base) for base in kept):
            continue
        # exactness guard: the row really is a syzygy
        total = ring.zero
        for c, g in zip(row, gens):
            if not c.is_zero:
                total = total + c * ring.transport(g)
        if not total.is_zero:
            raise AssertionError("internal error: candidate row is not a syzygy")
        kept.append(row)
    return kept
