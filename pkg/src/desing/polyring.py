"""Exact sparse multivariate polynomial arithmetic.

Coefficients live in the rationals or in a prime field GF(p); there is no
floating point anywhere.  Polynomials are immutable dictionaries mapping
exponent tuples to coefficients, attached to a ring that fixes the variable
names, the coefficient field, and the term order.  Everything downstream
(Groebner bases, ideal arithmetic, jets, the desingularization pipeline)
is built on the types in this module.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence, Union

Coef = Union[Fraction, int]
Exponent = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# exponent tuple helpers


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_divides(a: Exponent, b: Exponent) -> bool:
    """True when the monomial with exponents a divides the one with b."""
    return all(x <= y for x, y in zip(a, b))


def exp_deg(a: Exponent) -> int:
    return sum(a)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of the permutation given as the list of its images."""
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# coefficient fields


class Field:
    """The rationals (char 0) or the prime field GF(char)."""

    __slots__ = ("char",)

    def __init__(self, char: int = 0) -> None:
        if char != 0 and not _is_prime(char):
            raise ValueError(f"field characteristic must be 0 or prime, got {char}")
        self.char = char

    @property
    def zero(self) -> Coef:
        return 0 if self.char else Fraction(0)

    @property
    def one(self) -> Coef:
        return 1 if self.char else Fraction(1)

    def of(self, value: Union[int, str, Fraction]) -> Coef:
        """Coerce an int, Fraction, or string like '-3/4' into the field."""
        q = Fraction(value)
        if self.char == 0:
            return q
        num = q.numerator % self.char
        den = q.denominator % self.char
        if den == 0:
            raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.char}")
        return num * pow(den, self.char - 2, self.char) % self.char

    def inv(self, c: Coef) -> Coef:
        if self.char == 0:
            return Fraction(1) / c
        c %= self.char
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, self.char - 2, self.char)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self) -> int:
        return hash(("Field", self.char))

    def __repr__(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"


# ---------------------------------------------------------------------------
# term orders


class TermOrder:
    """Total order on monomials, exposed as a sort key on exponent tuples."""

    def key(self, exps: Exponent):
        raise NotImplementedError

    def greater(self, a: Exponent, b: Exponent) -> bool:
        return self.key(a) > self.key(b)


class Degrevlex(TermOrder):
    """Degree first, ties broken reverse lexicographically.

    Among monomials of equal total degree the one with the smaller exponent
    in the last differing variable wins.  This is the default order; it
    tends to keep Groebner bases small.
    """

    def key(self, exps: Exponent):
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Degrevlex)

    def __hash__(self) -> int:
        return hash("Degrevlex")

    def __repr__(self) -> str:
        return "degrevlex"


class Lex(TermOrder):
    """Pure lexicographic order in declaration order of the variables."""

    def key(self, exps: Exponent):
        return tuple(exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lex)

    def __hash__(self) -> int:
        return hash("Lex")

    def __repr__(self) -> str:
        return "lex"


class BlockOrder(TermOrder):
    """Compare block by block; earlier blocks dominate.

    Each block is a tuple of variable indices.  Any monomial involving a
    variable of an earlier block is larger than every monomial without one,
    which is exactly what elimination needs.
    """

    def __init__(self, blocks: Sequence[Sequence[int]], inner: TermOrder | None = None) -> None:
        self.blocks = tuple(tuple(b) for b in blocks)
        self.inner = inner if inner is not None else Degrevlex()

    def key(self, exps: Exponent):
        return tuple(self.inner.key(tuple(exps[i] for i in block)) for block in self.blocks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BlockOrder)
            and other.blocks == self.blocks
            and other.inner == self.inner
        )

    def __hash__(self) -> int:
        return hash(("BlockOrder", self.blocks, self.inner))

    def __repr__(self) -> str:
        return f"block{list(map(list, self.blocks))}"


# ---------------------------------------------------------------------------
# rings


class Ring:
    """A polynomial ring: a field, an ordered tuple of variable names, a term order.

    Rings are value objects; two rings with the same data compare equal, and
    polynomials may only combine when their rings agree.
    """

    __slots__ = ("field", "names", "order", "_index")

    def __init__(self, field: Field, names: Sequence[str], order: TermOrder | None = None) -> None:
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.field = field
        self.names = names
        self.order = order if order is not None else Degrevlex()
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"no variable named {name!r} in {self}") from None

    def var(self, name: str) -> Poly:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Poly(self, {tuple(exps): self.field.one})

    def vars(self) -> tuple[Poly, ...]:
        return tuple(self.var(name) for name in self.names)

    @property
    def zero(self) -> Poly:
        return Poly(self, {})

    @property
    def one(self) -> Poly:
        return self.const(1)

    def const(self, value: Union[int, str, Fraction]) -> Poly:
        c = self.field.of(value)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Exponent, coeff: Union[int, str, Fraction, Coef] = 1) -> Poly:
        c = self.field.of(coeff)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {tuple(exps): c})

    def poly(self, terms: Mapping[Exponent, Union[int, str, Fraction]]) -> Poly:
        """Build a polynomial from a raw term mapping, dropping zero coefficients."""
        clean: dict[Exponent, Coef] = {}
        for exps, coeff in terms.items():
            c = self.field.of(coeff)
            if c != 0:
                clean[tuple(exps)] = c
        return Poly(self, clean)

    def extend(self, new_names: Sequence[str], order: TermOrder | None = None) -> Ring:
        """A ring with the given variables appended after the existing ones."""
        return Ring(self.field, self.names + tuple(new_names), order or self.order)

    def with_order(self, order: TermOrder) -> Ring:
        return Ring(self.field, self.names, order)

    def elimination_order(self, eliminate: Sequence[str]) -> BlockOrder:
        """Block order that puts the named variables in the leading block."""
        elim = tuple(self.index(n) for n in eliminate)
        keep = tuple(i for i in range(self.nvars) if i not in set(elim))
        return BlockOrder([elim, keep])

    def transport(self, poly: Poly) -> Poly:
        """Reinterpret a polynomial from another ring here, matching variables by name."""
        if poly.ring is self or poly.ring == self:
            if poly.ring.order == self.order and poly.ring.names == self.names:
                return Poly(self, dict(poly.terms))
        if poly.ring.field != self.field:
            raise ValueError("cannot transport between different coefficient fields")
        terms: dict[Exponent, Coef] = {}
        for exps, coeff in poly.terms.items():
            target = [0] * self.nvars
            for i, e in enumerate(exps):
                if e:
                    name = poly.ring.names[i]
                    if name not in self._index:
                        raise ValueError(f"variable {name!r} does not exist in target ring")
                    target[self._index[name]] = e
            terms[tuple(target)] = coeff
        return Poly(self, terms)

    def transport_all(self, polys: Iterable[Poly]) -> list[Poly]:
        return [self.transport(p) for p in polys]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ring)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self) -> int:
        return hash((self.field, self.names, self.order))

    def __repr__(self) -> str:
        return f"{self.field}[{', '.join(self.names)}; {self.order!r}]"


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Immutable sparse polynomial.

    The term dictionary maps exponent tuples to nonzero coefficients.  Do not
    mutate it; construct new polynomials through the ring or the arithmetic
    operators instead.
    """

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: Ring, terms: dict[Exponent, Coef]) -> None:
        self.ring = ring
        self.terms = terms
        self._lead: Exponent | None = None

    # -- predicates and views

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(exp_deg(e) == 0 for e in self.terms)

    def constant_coeff(self) -> Coef:
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def coefficient_of(self, exps: Exponent) -> Coef:
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def num_terms(self) -> int:
        return len(self.terms)

    def support_vars(self) -> set[str]:
        names = self.ring.names
        seen: set[str] = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    seen.add(names[i])
        return seen

    def total_degree(self) -> int:
        """Largest total degree of a term, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(exp_deg(e) for e in self.terms)

    def min_total_degree(self, indices: Sequence[int] | None = None) -> int | None:
        """Smallest (restricted) total degree of a term; None for zero.

        With `indices` the degree only counts the listed variables, which
        gives the valuation along those variables.
        """
        if not self.terms:
            return None
        if indices is None:
            return min(exp_deg(e) for e in self.terms)
        idx = tuple(indices)
        return min(sum(e[i] for i in idx) for e in self.terms)

    def degree_in(self, indices: Sequence[int]) -> int:
        if not self.terms:
            return -1
        idx = tuple(indices)
        return max(sum(e[i] for i in idx) for e in self.terms)

    # -- leading data under the ring order

    def lead_exponent(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if self._lead is None:
            self._lead = max(self.terms, key=self.ring.order.key)
        return self._lead

    def lead_coeff(self) -> Coef:
        return self.terms[self.lead_exponent()]

    def lead_term(self) -> tuple[Exponent, Coef]:
        e = self.lead_exponent()
        return e, self.terms[e]

    # -- arithmetic

    def _same_ring(self, other: Poly) -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: Poly) -> Poly:
        self._same_ring(other)
        p = self.ring.field.char
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = terms.get(exps, 0) + coeff
            if p:
                c %= p
            if c:
                terms[exps] = c
            elif exps in terms:
                del terms[exps]
        return Poly(self.ring, terms)

    def __sub__(self, other: Poly) -> Poly:
        self._same_ring(other)
        p = self.ring.field.char
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = terms.get(exps, 0) - coeff
            if p:
                c %= p
            if c:
                terms[exps] = c
            elif exps in terms:
                del terms[exps]
        return Poly(self.ring, terms)

    def __neg__(self) -> Poly:
        p = self.ring.field.char
        if p:
            return Poly(self.ring, {e: (-c) % p for e, c in self.terms.items()})
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union[Poly, int, Fraction]) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(self.ring.field.of(other))
        self._same_ring(other)
        p = self.ring.field.char
        terms: dict[Exponent, Coef] = {}
        left, right = self.terms, other.terms
        if len(left) < len(right):
            left, right = right, left
        for e2, c2 in right.items():
            for e1, c1 in left.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(e, 0) + c1 * c2
                if p:
                    c %= p
                if c:
                    terms[e] = c
                elif e in terms:
                    del terms[e]
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c: Coef) -> Poly:
        p = self.ring.field.char
        if p:
            c %= p
        if c == 0:
            return self.ring.zero
        if p:
            return Poly(self.ring, {e: (v * c) % p for e, v in self.terms.items()})
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()})

    def mono_mul(self, exps: Exponent, coeff: Coef) -> Poly:
        """Multiply by a single term, the workhorse of polynomial division."""
        p = self.ring.field.char
        if coeff == 0:
            return self.ring.zero
        terms: dict[Exponent, Coef] = {}
        for e, c in self.terms.items():
            v = c * coeff
            if p:
                v %= p
                if v == 0:
                    continue
            terms[tuple(a + b for a, b in zip(e, exps))] = v
        return Poly(self.ring, terms)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def primitive(self) -> Poly:
        """Clear denominators and content over the rationals; monic over GF(p).

        The sign is normalized so the leading coefficient is positive.
        """
        if self.is_zero:
            return self
        if self.ring.field.char:
            return self.monic()
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, c.numerator * den // c.denominator)
        scale = Fraction(den, num)
        if self.lead_coeff() < 0:
            scale = -scale
        return self.scale(scale)

    # -- calculus and substitution

    def partial(self, var: Union[str, int]) -> Poly:
        """Formal partial derivative."""
        i = self.ring.index(var) if isinstance(var, str) else var
        p = self.ring.field.char
        terms: dict[Exponent, Coef] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            c = coeff * e
            if p:
                c %= p
                if c == 0:
                    continue
            lowered = list(exps)
            lowered[i] = e - 1
            terms[tuple(lowered)] = c
        return Poly(self.ring, terms)

    def subs(self, mapping: Mapping[str, Poly], ring: Ring | None = None) -> Poly:
        """Substitute polynomials for variables, matching the rest by name.

        The result lives in `ring` if given, otherwise in the ring of the
        first substituted value, otherwise in this polynomial's own ring.
        """
        if ring is None:
            ring = next(iter(mapping.values())).ring if mapping else self.ring
        mapped: dict[int, Poly] = {}
        for name, value in mapping.items():
            if value.ring != ring:
                value = ring.transport(value)
            mapped[self.ring.index(name)] = value
        powers: dict[int, list[Poly]] = {i: [ring.one] for i in mapped}
        p = ring.field.char
        acc: dict[Exponent, Coef] = {}
        for exps, coeff in self.terms.items():
            target = [0] * ring.nvars
            factor: Poly | None = None
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in mapped:
                    cache = powers[i]
                    while len(cache) <= e:
                        cache.append(cache[-1] * mapped[i])
                    pw = cache[e]
                    factor = pw if factor is None else factor * pw
                else:
                    target[ring.index(self.ring.names[i])] += e
            base = tuple(target)
            if factor is None:
                c = acc.get(base, 0) + coeff
                if p:
                    c %= p
                if c:
                    acc[base] = c
                elif base in acc:
                    del acc[base]
            else:
                for fe, fc in factor.terms.items():
                    e2 = tuple(a + b for a, b in zip(base, fe))
                    c = acc.get(e2, 0) + coeff * fc
                    if p:
                        c %= p
                    if c:
                        acc[e2] = c
                    elif e2 in acc:
                        del acc[e2]
        return Poly(ring, acc)

    def evaluate_scalar(self, point: Mapping[str, Union[int, str, Fraction, Coef]]) -> Coef:
        """Evaluate at field values given for every variable that occurs."""
        field = self.ring.field
        values = {self.ring.index(n): field.of(v) for n, v in point.items()}
        total = field.zero
        for exps, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i not in values:
                    raise ValueError(f"no value for variable {self.ring.names[i]!r}")
                term = term * values[i] ** e
                if field.char:
                    term %= field.char
            total = total + term
            if field.char:
                total %= field.char
        return total

    # -- comparisons, hashing, rendering

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponent, Coef]]:
        """Terms in descending ring order, the canonical presentation."""
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"<{render_poly(self)}>"


def _render_coeff(c: Coef) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _render_monomial(names: Sequence[str], exps: Exponent) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_poly(poly: Poly) -> str:
    """Canonical text form: descending terms, explicit '*' and '^'.

    Example output: 3*x1^2*Y2 - 1/2*x2 + 1.  Parsing this string back
    yields the identical polynomial.
    """
    if poly.is_zero:
        return "0"
    names = poly.ring.names
    pieces: list[str] = []
    for exps, coeff in poly.sorted_terms():
        mono = _render_monomial(names, exps)
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_render_coeff(mag)}*{mono}"
        else:
            body = _render_coeff(mag)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def monomials_of_degree(ring: Ring, indices: Sequence[int], degree: int) -> list[Poly]:
    """All monomials of exact total degree `degree` in the listed variables.

    Returned in descending ring order so enumeration is deterministic.
    """
    idx = list(indices)
    monos: list[Poly] = []

    def spread(pos: int, remaining: int, exps: list[int]) -> None:
        if pos == len(idx) - 1:
            exps[idx[pos]] = remaining
            monos.append(ring.monomial(tuple(exps)))
            exps[idx[pos]] = 0
            return
        for take in range(remaining, -1, -1):
            exps[idx[pos]] = take
            spread(pos + 1, remaining - take, exps)
            exps[idx[pos]] = 0

    if degree < 0:
        return []
    if not idx:
        return [ring.one] if degree == 0 else []
    spread(0, degree, [0] * ring.nvars)
    key = ring.order.key
    monos.sort(key=lambda m: key(m.lead_exponent()), reverse=True)
    return monos


# ---------------------------------------------------------------------------
# matrices


class PolyMatrix:
    """Rectangular matrix over a polynomial ring.

    Determinants use cofactor expansion along the sparsest line with a memo
    table keyed by index subsets, so the many overlapping cofactors of an
    adjugate are each computed once.
    """

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence[Poly]]) -> None:
        self.ring = ring
        self.rows = [list(r) for r in rows]
        width = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != width:
                raise ValueError("ragged matrix")
            for entry in r:
                if entry.ring != ring:
                    raise ValueError("matrix entry from a different ring")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, pos: tuple[int, int]) -> Poly:
        return self.rows[pos[0]][pos[1]]

    @staticmethod
    def identity(ring: Ring, n: int) -> PolyMatrix:
        return PolyMatrix(
            ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def jacobian(polys: Sequence[Poly], var_names: Sequence[str], ring: Ring) -> PolyMatrix:
        """Matrix of partial derivatives, rows indexed by the polynomials."""
        rows = []
        for f in polys:
            f = ring.transport(f)
            rows.append([f.partial(name) for name in var_names])
        return PolyMatrix(ring, rows)

    def transpose(self) -> PolyMatrix:
        m, n = self.shape
        return PolyMatrix(self.ring, [[self.rows[i][j] for i in range(m)] for j in range(n)])

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        zero = self.ring.zero
        out = []
        for i in range(m):
            row = []
            for j in range(n):
                acc = zero
                for t in range(k):
                    a = self.rows[i][t]
                    b = other.rows[t][j]
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def scale(self, factor: Poly) -> PolyMatrix:
        return PolyMatrix(self.ring, [[factor * e for e in row] for row in self.rows])

    def apply(self, vector: Sequence[Poly]) -> list[Poly]:
        m, n = self.shape
        if len(vector) != n:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(m):
            acc = self.ring.zero
            for j in range(n):
                if not self.rows[i][j].is_zero and not vector[j].is_zero:
                    acc = acc + self.rows[i][j] * vector[j]
            out.append(acc)
        return out

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        m, n = self.shape
        if other.shape != (m, n):
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.ring,
            [[self.rows[i][j] - other.rows[i][j] for j in range(n)] for i in range(m)],
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.rows for e in row)

    # -- determinants

    def det(self, memo: dict | None = None) -> Poly:
        m, n = self.shape
        if m != n:
            raise ValueError("determinant of a non-square matrix")
        if memo is None:
            memo = {}
        return self._det(tuple(range(m)), tuple(range(n)), memo)

    def minor(self, rows: Sequence[int], cols: Sequence[int], memo: dict | None = None) -> Poly:
        if len(rows) != len(cols):
            raise ValueError("minor needs equally many rows and columns")
        if memo is None:
            memo = {}
        return self._det(tuple(sorted(rows)), tuple(sorted(cols)), memo)

    def minors(self, size: int, memo: dict | None = None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Poly]]:
        """All size-by-size minors as (rows, cols, determinant) triples.

        Enumerated in lexicographic order of the index tuples.  Submatrices
        with a structurally zero row or column are skipped without expansion.
        """
        m, n = self.shape
        if memo is None:
            memo = {}
        for rows in combinations(range(m), size):
            for cols in combinations(range(n), size):
                if self._line_zero(rows, cols):
                    yield rows, cols, self.ring.zero
                else:
                    yield rows, cols, self._det(rows, cols, memo)

    def _line_zero(self, rows: Sequence[int], cols: Sequence[int]) -> bool:
        for i in rows:
            if all(self.rows[i][j].is_zero for j in cols):
                return True
        for j in cols:
            if all(self.rows[i][j].is_zero for i in rows):
                return True
        return False

    def _det(self, rows: tuple[int, ...], cols: tuple[int, ...], memo: dict) -> Poly:
        if not rows:
            return self.ring.one
        key = (rows, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if len(rows) == 1:
            result = self.rows[rows[0]][cols[0]]
            memo[key] = result
            return result
        # expand along the row or column with the fewest nonzero entries
        best_count = None
        best_line = 0
        best_is_row = True
        for rel, i in enumerate(rows):
            count = sum(1 for j in cols if not self.rows[i][j].is_zero)
            if best_count is None or count < best_count:
                best_count, best_line, best_is_row = count, rel, True
        for rel, j in enumerate(cols):
            count = sum(1 for i in rows if not self.rows[i][j].is_zero)
            if count < best_count:
                best_count, best_line, best_is_row = count, rel, False
        if best_count == 0:
            result = self.ring.zero
            memo[key] = result
            return result
        result = self.ring.zero
        if best_is_row:
            i = rows[best_line]
            sub_rows = rows[:best_line] + rows[best_line + 1 :]
            for rel_j, j in enumerate(cols):
                entry = self.rows[i][j]
                if entry.is_zero:
                    continue
                sub = self._det(sub_rows, cols[:rel_j] + cols[rel_j + 1 :], memo)
                if sub.is_zero:
                    continue
                piece = entry * sub
                result = result + piece if (best_line + rel_j) % 2 == 0 else result - piece
        else:
            j = cols[best_line]
            sub_cols = cols[:best_line] + cols[best_line + 1 :]
            for rel_i, i in enumerate(rows):
                entry = self.rows[i][j]
                if entry.is_zero:
                    continue
                sub = self._det(rows[:rel_i] + rows[rel_i + 1 :], sub_cols, memo)
                if sub.is_zero:
                    continue
                piece = entry * sub
                result = result + piece if (rel_i + best_line) % 2 == 0 else result - piece
        memo[key] = result
        return result

    def adjugate(self, memo: dict | None = None) -> PolyMatrix:
        """Adjugate matrix: adj(M) @ M = M @ adj(M) = det(M) * identity.

        All cofactors share one memo table, so the overlapping minors of
        neighbouring cofactors are reused rather than recomputed.
        """
        m, n = self.shape
        if m != n:
            raise ValueError("adjugate of a non-square matrix")
        if memo is None:
            memo = {}
        full_rows = tuple(range(n))
        out = [[self.ring.zero] * n for _ in range(n)]
        for i in range(n):
            rows = full_rows[:i] + full_rows[i + 1 :]
            for j in range(n):
                cols = full_rows[:j] + full_rows[j + 1 :]
                cof = self._det(rows, cols, memo)
                if (i + j) % 2:
                    cof = -cof
                out[j][i] = cof
        return PolyMatrix(self.ring, out)

    def __repr__(self) -> str:
        m, n = self.shape
        return f"PolyMatrix({m}x{n} over {self.ring})"


def completion_sign(selected_cols: Sequence[int], n: int) -> int:
    """Sign relating the completed determinant to the selected minor."""
    chosen = list(selected_cols)
    rest = [c for c in range(n) if c not in set(chosen)]
    return permutation_sign(chosen + rest)


def complete_to_square(matrix: PolyMatrix, cols: Sequence[int]) -> tuple[PolyMatrix, int]:
    """Pad an r-by-n matrix with unit rows into an n-by-n matrix.

    The missing columns receive unit rows in increasing column order, below
    the original rows.  Returns the square matrix H and the sign s with
    det(H) = s * minor(matrix, all rows, cols), an exact identity used to
    trade minors for determinants without recomputing either.
    """
    r, n = matrix.shape
    if len(cols) != r:
        raise ValueError("need exactly one selected column per row")
    ring = matrix.ring
    rows = [list(row) for row in matrix.rows]
    for c in range(n):
        if c not in set(cols):
            rows.append([ring.one if j == c else ring.zero for j in range(n)])
    return PolyMatrix(ring, rows), completion_sign(cols, n)
