"""Exact desingularization toolkit.

Subpackages build on each other in this order: polyring (exact polynomial
arithmetic), groebner (bases and membership certificates), idealops (ideal
level operations), jets (truncated power series and Newton lifting),
smoothlocus (smoothness certificates for finite presentations), neroncore
(the desingularization pipeline and its verifier), cli (the command line).
"""

from .errors import (
    BoundTooSmall,
    DesingError,
    LiftFailed,
    NoConvergence,
    NoRegularPair,
    NotDivisible,
    NotDivisibleInJets,
    ParseError,
    PrecisionExhausted,
    SearchExhausted,
    SingularJacobian,
)
from .polyring import (
    BlockOrder,
    Degrevlex,
    Field,
    Lex,
    Poly,
    PolyMatrix,
    Ring,
)

__all__ = [
    "BlockOrder",
    "BoundTooSmall",
    "Degrevlex",
    "DesingError",
    "Field",
    "Lex",
    "LiftFailed",
    "NoConvergence",
    "NoRegularPair",
    "NotDivisible",
    "NotDivisibleInJets",
    "ParseError",
    "Poly",
    "PolyMatrix",
    "PrecisionExhausted",
    "Ring",
    "SearchExhausted",
    "SingularJacobian",
]

__version__ = "0.1.0"
