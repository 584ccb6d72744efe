"""Tests for presentations, the smooth locus ideal, and conormal algebra."""

from __future__ import annotations

import pytest

from desing.errors import SearchExhausted
from desing.idealops import Ideal
from desing.polyring import Field, Ring
from desing.smoothlocus import (
    FinitePresentation,
    SmoothCertificate,
    elkik_ideal,
    is_standard_smooth,
    standard_smooth_certificate,
    symmetric_algebra_presentation,
)


def make_pres(fiber_rels, fiber_names=("Y",), base_rels=()):
    ring = Ring(Field(0), ("x1", "x2") + tuple(fiber_names))
    rels = [ring.poly(p) if isinstance(p, dict) else p for p in fiber_rels]
    return FinitePresentation(ring, ("x1", "x2"), fiber_names, rels, base_rels)


def test_presentation_validation():
    ring = Ring(Field(0), ("x1", "Y"))
    with pytest.raises(ValueError):
        FinitePresentation(ring, ("x1",), ("x1",), [])
    with pytest.raises(ValueError):
        FinitePresentation(ring, ("x1",), ("Y",), [], base_relations=[ring.var("Y")])


def test_localize_appends_inverse_variable():
    ring = Ring(Field(0), ("x1", "x2", "Y"))
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y",), [ring.var("Y") ** 2])
    loc = pres.localize(ring.var("Y"))
    assert loc.fiber_names == ("Y", "w0")
    w = loc.ring.var("w0")
    y = loc.ring.var("Y")
    assert loc.relations[-1] == w * y - loc.ring.one
    assert loc.inverted == [("w0", y)]


def test_elkik_parabola():
    ring = Ring(Field(0), ("x1", "x2", "Y"))
    x1 = ring.var("x1")
    Y = ring.var("Y")
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y",), [Y**2 - x1])
    h = elkik_ideal(pres)
    assert h == Ideal(ring, [Y])  # the ideal generated by 2Y


def test_elkik_worked_surface():
    ring = Ring(Field(0), ("x1", "x2", "Y1", "Y2"))
    x1, x2, Y1, Y2 = (ring.var(n) for n in ring.names)
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y1", "Y2"), [Y1 * Y2 - x1 * x2])
    h = elkik_ideal(pres)
    assert h == Ideal(ring, [Y1, Y2])


def test_elkik_no_relations_is_unit():
    ring = Ring(Field(0), ("x1", "x2", "Y"))
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y",), [])
    assert elkik_ideal(pres).is_one()


def test_smooth_certificate_linear_relation():
    ring = Ring(Field(0), ("x1", "x2", "Y"))
    Y, x1 = ring.var("Y"), ring.var("x1")
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y",), [Y - x1])
    cert = standard_smooth_certificate(pres)
    assert cert.subset == (0,)
    assert cert.check(pres)


def test_smooth_certificate_empty_presentation():
    ring = Ring(Field(0), ("x1", "x2", "Y"))
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y",), [])
    cert = standard_smooth_certificate(pres)
    assert cert.check(pres)


def test_not_smooth_is_complete_negative():
    ring = Ring(Field(0), ("x1", "x2", "Y"))
    Y, x1 = ring.var("Y"), ring.var("x1")
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y",), [Y**2 - x1**2 - x1**3])
    with pytest.raises(SearchExhausted) as exc:
        standard_smooth_certificate(pres, subset_bound=3)
    assert exc.value.complete


def test_capped_search_is_flagged_incomplete():
    # two fiber variables, two relations, but the cap stops at size 1
    ring = Ring(Field(0), ("x1", "x2", "Y1", "Y2"))
    Y1, Y2, x1 = ring.var("Y1"), ring.var("Y2"), ring.var("x1")
    pres = FinitePresentation(
        ring, ("x1", "x2"), ("Y1", "Y2"), [Y1 * Y2 - x1, Y1**2 - Y2]
    )
    try:
        standard_smooth_certificate(pres, subset_bound=1)
    except SearchExhausted as exc:
        assert not exc.complete
    else:
        pass  # finding a witness with size 1 subsets is also acceptable


def test_localized_parabola_is_smooth():
    ring = Ring(Field(0), ("x1", "x2", "Y"))
    Y, x1 = ring.var("Y"), ring.var("x1")
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y",), [Y**2 - x1])
    loc = pres.localize(2 * Y)
    cert = standard_smooth_certificate(loc, subset_bound=2)
    assert cert.check(loc)
    assert is_standard_smooth(loc, subset_bound=2)
    # the smooth locus ideal is the unit ideal modulo the relations
    assert (elkik_ideal(loc, subset_bound=2) + loc.presentation_ideal()).is_one()


def test_symmetric_algebra_with_relation():
    ring = Ring(Field(0), ("x1", "x2", "Y1", "Y2"))
    Y1, Y2 = ring.var("Y1"), ring.var("Y2")
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y1", "Y2"), [Y1, Y1 * Y2])
    big, rels = symmetric_algebra_presentation(pres, ("T1", "T2"))
    assert big.names == ring.names + ("T1", "T2")
    assert len(rels) == 1
    T1, T2 = big.var("T1"), big.var("T2")
    # the syzygy (Y2, -1) gives Y2*T1 - T2
    assert rels[0] in (big.var("Y2") * T1 - T2, T2 - big.var("Y2") * T1)


def test_symmetric_algebra_complete_intersection_is_free():
    ring = Ring(Field(0), ("x1", "x2", "Y1", "Y2"))
    Y1, Y2 = ring.var("Y1"), ring.var("Y2")
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y1", "Y2"), [Y1, Y2])
    _, rels = symmetric_algebra_presentation(pres, ("T1", "T2"))
    assert rels == []  # Koszul rows die modulo the relations themselves


def test_symmetric_algebra_single_generator_free():
    ring = Ring(Field(0), ("x1", "x2", "Y1", "Y2"))
    Y1, Y2 = ring.var("Y1"), ring.var("Y2")
    x1, x2 = ring.var("x1"), ring.var("x2")
    pres = FinitePresentation(
        ring, ("x1", "x2"), ("Y1", "Y2"), [Y1 * Y2 - x1 * x2]
    )
    _, rels = symmetric_algebra_presentation(pres, ("T1",))
    assert rels == []


def test_symmetric_algebra_wrong_arity():
    ring = Ring(Field(0), ("x1", "x2", "Y1"))
    pres = FinitePresentation(ring, ("x1", "x2"), ("Y1",), [ring.var("Y1")])
    with pytest.raises(ValueError):
        symmetric_algebra_presentation(pres, ("T1", "T2"))
