"""Castelnuovo-Mumford regularity of ideal powers over finite fields.

Reduced Groebner bases, minimal free resolutions, graded Betti numbers,
and the asymptotic regularity of powers reg I^t = d*t + e, together with
fiber-regularity verification for finite linear projections.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetError,
    DegreeCeilingError,
    DimensionError,
    GeometryError,
    HypothesisError,
    ParseError,
    ResourceError,
    SelfCheckError,
    UsageError,
)
from .fields import GF, DEFAULT_PRIME, ExtensionField, FieldElement, PrimeField
from .groebner import (
    DEFAULT_DEGREE_CEILING,
    GroebnerBasis,
    Ideal,
    buchberger,
    colon,
    divide_exact,
    ideal_combine,
    ideal_power,
    intersect,
    normal_form,
    saturate,
    saturate_variable,
)
from .orders import GREVLEX, GRLEX, LEX, EliminationOrder, MonomialOrder
from .polynomials import Monomial, PolyRing, Polynomial
from .hilbert import (
    HilbertFunction,
    finite_length_witness,
    hilbert_function,
    hilbert_numerator,
    m_power_containment,
    monomials_of_degree,
    quotient_degree,
    quotient_dimension,
    top_degree_finite,
)
from .resolution import (
    BettiTable,
    FreeModule,
    ModuleElement,
    Resolution,
    SchreyerOrder,
    minimal_free_resolution,
    module_groebner,
    regularity,
    syzygies,
)
from .asymptotics import (
    AsymptoticFit,
    BoundReport,
    EpsilonReport,
    PowerRegReport,
    SamplerReport,
    bound_report,
    ci_formula_check,
    conjecture_sampler,
    epsilon_containment,
    fit_asymptotic,
    power_table,
)
from .geometry import (
    ClosedPoint,
    FiberReport,
    FiberSearchReport,
    ProjectionSpec,
    TwoVarsReport,
    TwoVarsVerdict,
    binary_gcd,
    check_finite,
    enumerate_closed_points,
    fiber_ideal,
    fiber_regularity,
    max_fiber_regularity,
    twovars_r,
    twovars_verify,
)
from .sessions import SessionFile, parse_polynomial, parse_session
from .fixtures import projective_plane_complex, projective_plane_ideal

__all__ = [
    "AsymptoticFit",
    "BettiTable",
    "BoundReport",
    "BudgetError",
    "ClosedPoint",
    "DEFAULT_DEGREE_CEILING",
    "DEFAULT_PRIME",
    "DegreeCeilingError",
    "DimensionError",
    "EliminationOrder",
    "EpsilonReport",
    "ExtensionField",
    "FiberReport",
    "FiberSearchReport",
    "FieldElement",
    "FreeModule",
    "GF",
    "GREVLEX",
    "GRLEX",
    "GeometryError",
    "GroebnerBasis",
    "HilbertFunction",
    "HypothesisError",
    "Ideal",
    "LEX",
    "ModuleElement",
    "Monomial",
    "MonomialOrder",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "PowerRegReport",
    "PrimeField",
    "ProjectionSpec",
    "Resolution",
    "ResourceError",
    "SamplerReport",
    "SchreyerOrder",
    "SelfCheckError",
    "SessionFile",
    "TwoVarsReport",
    "TwoVarsVerdict",
    "UsageError",
    "binary_gcd",
    "bound_report",
    "buchberger",
    "check_finite",
    "ci_formula_check",
    "colon",
    "conjecture_sampler",
    "divide_exact",
    "enumerate_closed_points",
    "epsilon_containment",
    "fiber_ideal",
    "fiber_regularity",
    "finite_length_witness",
    "fit_asymptotic",
    "hilbert_function",
    "hilbert_numerator",
    "ideal_combine",
    "ideal_power",
    "intersect",
    "m_power_containment",
    "max_fiber_regularity",
    "minimal_free_resolution",
    "module_groebner",
    "monomials_of_degree",
    "normal_form",
    "parse_polynomial",
    "parse_session",
    "power_table",
    "projective_plane_complex",
    "projective_plane_ideal",
    "quotient_degree",
    "quotient_dimension",
    "regularity",
    "saturate",
    "saturate_variable",
    "syzygies",
    "top_degree_finite",
    "twovars_r",
    "twovars_verify",
    "__version__",
]
