"""Non-crossing valence diagrams: enumeration, counting, straightening of
bracket polynomials into the non-crossing basis, and exact verification."""

from .bijection import PsiResult, psi, psi_section, verify_psi_bijection
from .brackets import (
    DEFAULT_FUEL,
    BracketMonomial,
    BracketPolynomial,
    FuelExhaustedError,
    LoopBracketError,
    ParseError,
    PolynomialSyntaxError,
    SignedBracket,
    VertexRangeError,
    bracket,
    monomial_scheme,
    parse,
    plucker_expand,
    straighten,
)
from .counting import (
    binomial,
    compositions,
    even_triangle,
    n_recurrence,
    rho_closed,
    rho_product,
    rho_sum_over_compositions,
    triangle_range,
)
from .diagrams import (
    Edge,
    Multidegree,
    RumerDiagram,
    ValenceScheme,
    arc_lengths,
    arc_vertices,
    edges_cross,
    enumerate_rumer,
    enumerate_rumer_by_multidegree,
    enumerate_valence_schemes,
    enumerate_valence_schemes_by_multidegree,
    first_crossing,
    is_rumer,
    multidegree_of,
)
from .oracle import (
    GENERATORS,
    UnimodularMatrix,
    XPolynomial,
    act,
    basis_ok,
    expand,
    rank_of_span,
    verify_basis,
)
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "BracketMonomial",
    "BracketPolynomial",
    "DEFAULT_FUEL",
    "Edge",
    "FuelExhaustedError",
    "GENERATORS",
    "LoopBracketError",
    "Multidegree",
    "ParseError",
    "PolynomialSyntaxError",
    "PsiResult",
    "RumerDiagram",
    "SignedBracket",
    "UnimodularMatrix",
    "ValenceScheme",
    "VertexRangeError",
    "XPolynomial",
    "act",
    "arc_lengths",
    "arc_vertices",
    "basis_ok",
    "binomial",
    "bracket",
    "compositions",
    "edges_cross",
    "enumerate_rumer",
    "enumerate_rumer_by_multidegree",
    "enumerate_valence_schemes",
    "enumerate_valence_schemes_by_multidegree",
    "even_triangle",
    "expand",
    "first_crossing",
    "is_rumer",
    "monomial_scheme",
    "multidegree_of",
    "n_recurrence",
    "parse",
    "plucker_expand",
    "psi",
    "psi_section",
    "rank_of_span",
    "render_svg",
    "rho_closed",
    "rho_product",
    "rho_sum_over_compositions",
    "straighten",
    "triangle_range",
    "verify_basis",
    "verify_psi_bijection",
    "__version__",
]
