"""The desingularization pipeline and its certificate verifier.

Given a finitely presented algebra over a 2-dimensional local base and a map
to the base known modulo a power of the maximal ideal, the pipeline builds a
standard smooth intermediate algebra through which the map factors, together
with a machine checkable certificate: exact polynomial identities, explicit
lifts, and jets.  When the truncation order cannot support the construction
the pipeline fails with the BoundTooSmall error, whose user facing message
is always exactly "the bound is too small".

The stages are: a smooth short circuit; smooth locus analysis and branch
selection; choice of a parameter pair cutting the base dimension to zero;
absorption of the parameters into new coordinates; conormal preparation;
extraction of Jacobian systems and denominators for both parameters; the
two localization stages; and a final jet lift.  The verifier re-expands the
stored identities from scratch and never trusts a stored result value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import (
    BoundTooSmall,
    LiftFailed,
    NoRegularPair,
    NotDivisible,
    NotDivisibleInJets,
    PrecisionExhausted,
    SearchExhausted,
)
from .groebner import GroebnerBasis, divide, groebner, interreduce, normal_form
from .idealops import (
    Ideal,
    divide_exact,
    eliminate,
    krull_dim,
    m_primary_bound,
)
from .jets import JetPoint, JetScope, JetSeries, jet_divide, jet_solve, residual_order
from .polyring import (
    Degrevlex,
    Field,
    Poly,
    PolyMatrix,
    Ring,
    complete_to_square,
    monomials_of_degree,
)
from .smoothlocus import (
    FinitePresentation,
    SmoothCertificate,
    elkik_ideal,
    standard_smooth_certificate,
    symmetric_algebra_presentation,
)

# ---------------------------------------------------------------------------
# configuration and problem statement


@dataclass(frozen=True)
class Config:
    """Pipeline knobs; every run is a pure function of problem and config."""

    bound: int = 8
    seed: int = 0
    subset_bound: int = 3
    t_max: int = 10
    e_max: int = 10
    comb_range: int = 2
    comb_tries: int = 40
    strict_gate: bool = False
    verbose: bool = False


class Problem:
    """A presentation, a map to the base given modulo (x)^bound, and the bound.

    The map must satisfy the relations modulo base relations plus (x)^bound;
    this is validated eagerly because every later step relies on it.
    """

    def __init__(
        self, presentation: FinitePresentation, images: Mapping[str, Poly], bound: int
    ) -> None:
        if bound < 1:
            raise ValueError("bound must be at least 1")
        self.presentation = presentation
        self.bound = bound
        base = base_ring_of(presentation)
        self.base = base
        self.scope = JetScope(base, [base.transport(p) for p in presentation.base_relations])
        fixed: dict[str, Poly] = {}
        for name in presentation.fiber_names:
            if name not in images:
                raise ValueError(f"no image given for fiber variable {name!r}")
            fixed[name] = base.transport(images[name])
        extra = set(images) - set(presentation.fiber_names)
        if extra:
            raise ValueError(f"images given for unknown variables {sorted(extra)}")
        self.images = fixed
        point = JetPoint.from_polys(self.scope, fixed, bound)
        for rel in presentation.relations:
            if not point.evaluate(rel).is_zero:
                raise ValueError(
                    "the map does not satisfy the relations modulo the bound: "
                    f"{rel} evaluates to {point.evaluate(rel).rep}"
                )

    def image_point(self, prec: int | None = None) -> JetPoint:
        return JetPoint.from_polys(self.scope, self.images, prec or self.bound)


def base_ring_of(pres: FinitePresentation) -> Ring:
    return Ring(pres.ring.field, pres.base_names, Degrevlex())


def _fresh_names(ring: Ring, prefix: str, count: int) -> list[str]:
    """Deterministic fresh variable names not colliding with the ring."""
    taken = set(ring.names)
    out: list[str] = []
    k = 1
    while len(out) < count:
        name = f"{prefix}{k}"
        if name not in taken:
            taken.add(name)
            out.append(name)
        k += 1
    return out


# ---------------------------------------------------------------------------
# certificate containers


@dataclass
class ParameterSystem:
    """A Jacobian system for one parameter: minors, lifts, denominator.

    The exact content: subset of relation indices (full list by default),
    minor column sets with signs, the lift coefficients writing
    parameter^exponent as sum(minor * lift) plus a relation combination, the
    denominator d = parameter^exponent, and the combination P = sum(M*L)
    which satisfies d = P modulo the relations.
    """

    parameter: Poly
    exponent: int
    subset: tuple[int, ...]
    minor_cols: list[tuple[int, ...]]
    minor_dets: list[Poly]
    minor_signs: list[int]
    lift_coeffs: list[Poly]
    relation_coeffs: list[Poly]
    denominator: Poly
    combination: Poly

    def active_indices(self) -> list[int]:
        return [i for i, c in enumerate(self.lift_coeffs) if not c.is_zero]


@dataclass
class StageData:
    """Shared shape of the two localization stages.

    Holds the tangent variables, the contracted relations (one per relation,
    linear plus quadratic tail in the tangent variables), the moving frame
    relations (one per fiber variable), the inverted units, and the exact
    Taylor witnesses: for every relation f,
        unit^power * f = denom^2 * contracted + sum(frame_coeffs * frame)
                         + sum(modulus_coeffs * modulus_gens).
    """

    side: str  # "primed" or "unprimed"
    unit_scale: Poly          # the scalar by which the frame scales the move
    scale_power: int
    const_parts: list[Poly]   # one per relation
    shared_tangent: list[str]
    tail_tangent: dict[int, list[str]]  # minor index -> its private tail names
    contracted: list[Poly]    # the g rows
    frame: list[Poly]         # the h rows
    unit_minor: Poly          # determinant of the tangent block of contracted rows
    taylor_frame_coeffs: list[list[Poly]]     # per relation, per frame row
    taylor_modulus_coeffs: list[list[Poly]]   # per relation, per modulus generator
    modulus_gens: list[Poly]
    inverted: list[tuple[str, Poly]]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class VerifyReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass
class DesingCertificate:
    """Everything a verifier needs, with no recomputation of the pipeline."""

    char: int
    bound: int
    n_eff: int
    base_names: tuple[str, ...]
    base_relations: list[Poly]
    original_fiber: tuple[str, ...]
    original_relations: list[Poly]
    original_images: dict[str, Poly]
    smooth_case: bool
    metadata: dict
    prepared: FinitePresentation | None = None
    prepared_images: dict[str, Poly] | None = None
    smooth_witness: SmoothCertificate | None = None
    system_d: ParameterSystem | None = None
    system_dp: ParameterSystem | None = None
    stage_one: StageData | None = None
    stage_two: StageData | None = None
    frozen_names: dict[str, str] | None = None  # prepared fiber name -> frozen copy
    d_presentation: FinitePresentation | None = None
    bprime: FinitePresentation | None = None
    omega: dict[str, tuple[Poly, int]] | None = None  # frozen var -> (rep, prec)
    bprime_point: dict[str, tuple[Poly, int]] | None = None
    smooth_over_d: dict | None = None  # witness data for B' over D
