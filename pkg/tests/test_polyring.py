"""Tests for the exact polynomial kernel.

Reference implementations live at the top of this file (Leibniz determinant,
brute force comparisons); the fast code is checked against them on small
random inputs before any structured examples are pinned.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from desing.polyring import (
    BlockOrder,
    Degrevlex,
    Field,
    Lex,
    Poly,
    PolyMatrix,
    Ring,
    complete_to_square,
    completion_sign,
    monomials_of_degree,
    permutation_sign,
    render_poly,
)

# ---------------------------------------------------------------------------
# reference implementations


def leibniz_det(matrix: PolyMatrix) -> Poly:
    """Determinant straight from the permutation formula."""
    m, n = matrix.shape
    assert m == n
    total = matrix.ring.zero
    for perm in permutations(range(n)):
        prod = matrix.ring.one
        for i in range(n):
            prod = prod * matrix.rows[i][perm[i]]
        total = total + prod if permutation_sign(perm) > 0 else total - prod
    return total


def random_poly(rng: random.Random, ring: Ring, max_terms: int = 3, max_exp: int = 2) -> Poly:
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        exps = tuple(rng.randrange(max_exp + 1) for _ in ring.names)
        terms[exps] = rng.randint(-3, 3)
    return ring.poly(terms)


# ---------------------------------------------------------------------------
# fields


def test_field_of_rationals():
    q = Field(0)
    assert q.of("3/4") == Fraction(3, 4)
    assert q.of(-2) == Fraction(-2)
    assert q.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_field_prime():
    f = Field(7)
    assert f.of("1/2") == 4  # 2 * 4 = 8 = 1 mod 7
    assert f.of(-1) == 6
    assert f.inv(3) == 5
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_field_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        Field(6)
    Field(32003)  # prime, must not raise


# ---------------------------------------------------------------------------
# term orders


def test_degrevlex_basic_facts():
    order = Degrevlex()
    # declaration order: earlier variables are larger
    assert order.greater((1, 0, 0), (0, 1, 0))
    assert order.greater((0, 1, 0), (0, 0, 1))
    # degree dominates
    assert order.greater((0, 0, 2), (1, 0, 0))
    # same degree: smaller exponent in the last differing variable wins
    assert order.greater((1, 1, 0), (0, 0, 2))
    assert order.greater((1, 2, 0), (2, 0, 1))


def test_lex_ignores_degree():
    order = Lex()
    assert order.greater((1, 0), (0, 3))
    assert order.greater((2, 0), (1, 5))


def test_block_order_eliminates_leading_block():
    # variables (Y, x1, x2); leading block {Y}
    order = BlockOrder([(0,), (1, 2)])
    assert order.greater((1, 0, 0), (0, 5, 5))
    # within the trailing block the inner order applies
    assert order.greater((0, 1, 0), (0, 0, 1))


def test_order_equality():
    assert Degrevlex() == Degrevlex()
    assert Lex() != Degrevlex()
    assert BlockOrder([(0,), (1,)]) == BlockOrder([(0,), (1,)])


# ---------------------------------------------------------------------------
# ring and polynomial basics


@pytest.fixture
def rq() -> Ring:
    return Ring(Field(0), ("x", "y"))


def test_ring_rejects_duplicate_names():
    with pytest.raises(ValueError):
        Ring(Field(0), ("x", "x"))


def test_var_and_const(rq: Ring):
    x, y = rq.vars()
    p = 2 * x + y
    assert p.coefficient_of((1, 0)) == 2
    assert rq.const(0).is_zero
    assert rq.const("1/3").constant_coeff() == Fraction(1, 3)


def test_leading_term_respects_order(rq: Ring):
    x, y = rq.vars()
    p = x * y + y**3
    assert p.lead_exponent() == (0, 3)
    lexring = rq.with_order(Lex())
    assert lexring.transport(p).lead_exponent() == (1, 1)


def test_degrees(rq: Ring):
    x, y = rq.vars()
    p = x**2 * y + x
    assert p.total_degree() == 3
    assert p.min_total_degree() == 1
    assert p.min_total_degree([1]) == 0
    assert p.degree_in([0]) == 2
    assert rq.zero.total_degree() == -1
    assert rq.zero.min_total_degree() is None


def test_partial_derivative(rq: Ring):
    x, y = rq.vars()
    p = x**2 * y - 3 * y
    assert p.partial("x") == 2 * x * y
    assert p.partial("y") == x**2 - rq.const(3)


def test_char_p_derivative_drops_pth_powers():
    ring = Ring(Field(3), ("x",))
    (x,) = ring.vars()
    assert (x**3).partial("x").is_zero


def test_pow_matches_repeated_multiplication(rq: Ring):
    x, y = rq.vars()
    p = x + y + rq.one
    q = rq.one
    for _ in range(4):
        q = q * p
    assert p**4 == q
    assert p**0 == rq.one


def test_subs_polynomials(rq: Ring):
    x, y = rq.vars()
    p = x**2 + y
    target = Ring(Field(0), ("t",))
    (t,) = target.vars()
    assert p.subs({"x": t, "y": t**2}) == 2 * t**2
    # partial substitution keeps the other variable by name
    same = p.subs({"y": x}, ring=rq)
    assert same == x**2 + x


def test_subs_empty_mapping_is_identity(rq: Ring):
    x, y = rq.vars()
    p = x * y - rq.const(2)
    assert p.subs({}) == p


def test_evaluate_scalar(rq: Ring):
    x, y = rq.vars()
    p = x**2 * y - y
    assert p.evaluate_scalar({"x": 3, "y": 2}) == 16


def test_transport_between_rings(rq: Ring):
    big = rq.extend(("z",))
    x, y = rq.vars()
    p = x * y + x
    moved = big.transport(p)
    assert moved.ring == big
    assert moved.support_vars() == {"x", "y"}
    with pytest.raises(ValueError):
        rq.transport(big.var("z"))


def test_monic_and_primitive(rq: Ring):
    x, y = rq.vars()
    p = rq.const("3/2") * x + rq.const("9/4")
    prim = p.primitive()
    assert prim == 2 * x + rq.const(3)
    assert p.monic() == x + rq.const("3/2")
    ring_p = Ring(Field(5), ("x",))
    q = ring_p.poly({(1,): 2, (0,): 1})
    assert q.primitive() == ring_p.poly({(1,): 1, (0,): 3})


def test_hash_and_eq(rq: Ring):
    x, y = rq.vars()
    assert hash(x + y) == hash(y + x)
    assert x + y == y + x
    assert x != y


# ---------------------------------------------------------------------------
# ring axioms on random data


_coeff = st.integers(-4, 4)
_exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
_raw = st.dictionaries(_exps, _coeff, max_size=4)
_char = st.sampled_from([0, 7, 32003])


def _mk(char: int, raw: dict) -> Poly:
    ring = Ring(Field(char), ("x", "y"))
    return ring.poly(raw)


@given(_char, _raw, _raw, _raw)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(char, a, b, c):
    pa, pb, pc = (_mk(char, r) for r in (a, b, c))
    assert pa + pb == pb + pa
    assert pa * pb == pb * pa
    assert (pa + pb) + pc == pa + (pb + pc)
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa - pa == pa.ring.zero
    assert (pa - pb) + pb == pa


@given(_char, _raw, _raw)
@settings(max_examples=40, deadline=None)
def test_product_rule(char, a, b):
    pa, pb = _mk(char, a), _mk(char, b)
    prod = pa * pb
    assert prod.partial("x") == pa.partial("x") * pb + pa * pb.partial("x")


@given(_raw)
@settings(max_examples=40, deadline=None)
def test_substitution_commutes_with_evaluation(raw):
    ring = Ring(Field(0), ("x", "y"))
    p = ring.poly(raw)
    x, y = ring.vars()
    shifted = p.subs({"x": x + ring.one})
    lhs = shifted.evaluate_scalar({"x": 2, "y": 5})
    rhs = p.evaluate_scalar({"x": 3, "y": 5})
    assert lhs == rhs


# ---------------------------------------------------------------------------
# rendering


def test_render_canonical_example():
    ring = Ring(Field(0), ("x1", "x2", "Y1", "Y2"))
    x1, x2, Y1, Y2 = ring.vars()
    p = 3 * x1**2 * Y2 - ring.const("1/2") * x2
    assert str(p) == "3*x1^2*Y2 - 1/2*x2"


def test_render_misc():
    ring = Ring(Field(0), ("x", "y"))
    x, y = ring.vars()
    assert str(ring.zero) == "0"
    assert str(ring.one) == "1"
    assert str(-x) == "-x"
    assert str(x - y) == "x - y"
    assert str(x**2 + x * y + ring.const(-1)) == "x^2 + x*y - 1"
    gf = Ring(Field(7), ("x",))
    assert str(-gf.var("x")) == "6*x"


def test_render_term_order_is_descending():
    ring = Ring(Field(0), ("x", "y"))
    x, y = ring.vars()
    assert str(y**3 + x) == "y^3 + x"
    lex_ring = ring.with_order(Lex())
    assert str(lex_ring.transport(y**3 + x)) == "x + y^3"


def test_monomials_of_degree():
    ring = Ring(Field(0), ("x1", "x2"))
    monos = monomials_of_degree(ring, [0, 1], 2)
    assert [str(m) for m in monos] == ["x1^2", "x1*x2", "x2^2"]
    assert monomials_of_degree(ring, [0, 1], 0) == [ring.one]


# ---------------------------------------------------------------------------
# matrices


def test_det_constant_matrix(rq: Ring):
    m = PolyMatrix(rq, [[rq.const(1), rq.const(2)], [rq.const(3), rq.const(4)]])
    assert m.det() == rq.const(-2)


def test_det_matches_leibniz_on_random_matrices():
    rng = random.Random(20240901)
    for char in (0, 7):
        ring = Ring(Field(char), ("x", "y"))
        for size in (2, 3, 4):
            for _ in range(6):
                m = PolyMatrix(
                    ring,
                    [[random_poly(rng, ring) for _ in range(size)] for _ in range(size)],
                )
                assert m.det() == leibniz_det(m)


def test_adjugate_identity():
    rng = random.Random(7)
    ring = Ring(Field(0), ("x", "y"))
    for _ in range(4):
        m = PolyMatrix(ring, [[random_poly(rng, ring) for _ in range(3)] for _ in range(3)])
        memo: dict = {}
        d = m.det(memo)
        adj = m.adjugate(memo)
        prod = m @ adj
        ident = PolyMatrix.identity(ring, 3)
        for i in range(3):
            for j in range(3):
                expected = d if i == j else ring.zero
                assert prod[i, j] == expected
        prod2 = adj @ m
        for i in range(3):
            for j in range(3):
                expected = d if i == j else ring.zero
                assert prod2[i, j] == expected


def test_minors_match_naive():
    rng = random.Random(99)
    ring = Ring(Field(0), ("x", "y"))
    m = PolyMatrix(ring, [[random_poly(rng, ring) for _ in range(4)] for _ in range(3)])
    seen = {(rows, cols): d for rows, cols, d in m.minors(2)}
    for rows in combinations(range(3), 2):
        for cols in combinations(range(4), 2):
            naive = leibniz_det(m.submatrix(rows, cols))
            assert seen[(rows, cols)] == naive


def test_jacobian(rq: Ring):
    x, y = rq.vars()
    jac = PolyMatrix.jacobian([x**2 * y, x + y], ("x", "y"), rq)
    assert jac[0, 0] == 2 * x * y
    assert jac[0, 1] == x**2
    assert jac[1, 0] == rq.one
    assert jac[1, 1] == rq.one


def test_matmul_and_apply(rq: Ring):
    x, y = rq.vars()
    m = PolyMatrix(rq, [[x, rq.one], [rq.zero, y]])
    v = m.apply([y, x])
    assert v == [x * y + x, x * y]
    sq = m @ m
    assert sq[0, 0] == x**2
    assert sq[0, 1] == x + y


def test_complete_to_square_sign_identity():
    rng = random.Random(4242)
    ring = Ring(Field(0), ("x", "y"))
    m = PolyMatrix(ring, [[random_poly(rng, ring) for _ in range(4)] for _ in range(2)])
    for cols in combinations(range(4), 2):
        square, sign = complete_to_square(m, cols)
        assert square.shape == (4, 4)
        minor = m.minor((0, 1), cols)
        assert square.det() == sign * minor
        assert sign in (1, -1)


def test_completion_sign_is_permutation_sign():
    assert completion_sign([0, 1], 4) == 1
    assert completion_sign([1, 0], 2) == -1
    assert completion_sign([2, 3], 4) == permutation_sign([2, 3, 0, 1])


def test_structurally_zero_minor_short_circuit(rq: Ring):
    x, _ = rq.vars()
    m = PolyMatrix(rq, [[x, rq.zero], [x**2, rq.zero]])
    results = list(m.minors(2))
    assert results == [((0, 1), (0, 1), rq.zero)]
