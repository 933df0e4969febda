"""Differential equations satisfied by roots of polynomial equations.

For a polynomial R with R(0) = 0, the equation R(x) = q defines a root
branch x(q) through the origin.  This package derives, in exact rational
arithmetic, the differential equations that branch satisfies (a
first-order equation polynomial in x, and a linear equation of order
n-1), together with separated-variables integral identities, and provides
numeric machinery to track, verify and cross-check the branch against
closed-form and series solutions.
"""
from .algebra import (
    BiPoly,
    RatFunc,
    UPoly,
    compose_q,
    discriminant_in_x,
    interpolate,
    poly_gcd,
    poly_lcm,
    resultant,
    resultant_in_x,
)
from .derive import (
    AbelODE,
    DerivativeTower,
    Factorization,
    IntegrandSpec,
    LinearODE,
    ProblemSpec,
    TableReport,
    abel_ode,
    build_integrands,
    derivative_tower,
    factorize,
    linear_ode,
    trinomial,
    verify_trinomial_table,
)
from .errors import (
    DomainError,
    EmptyKernelError,
    NonExactDivisionError,
    ParseError,
    QuadratureError,
    RootodeError,
    SingularIntegrandError,
    VariableMismatchError,
)
from .numeric import (
    SeriesQ,
    TrackResult,
    babylonian_root,
    bisect_branch_root,
    cardano_root,
    check_identity,
    closed_form_root,
    first_branch_point,
    invert_phi,
    lagrange_series,
    newton_polish,
    pfq_series,
    quad,
    quartic_real_roots,
    quartic_series_2f1_product,
    quartic_series_3f2,
    quartic_w_root,
    series_ode_residual,
    track_root,
    vieta_hyp_root,
    vieta_trig_root,
)

__version__ = "0.1.0"

__all__ = [
    "AbelODE",
    "BiPoly",
    "DerivativeTower",
    "DomainError",
    "EmptyKernelError",
    "Factorization",
    "IntegrandSpec",
    "LinearODE",
    "NonExactDivisionError",
    "ParseError",
    "ProblemSpec",
    "QuadratureError",
    "RatFunc",
    "RootodeError",
    "SeriesQ",
    "SingularIntegrandError",
    "TableReport",
    "TrackResult",
    "UPoly",
    "VariableMismatchError",
    "__version__",
    "abel_ode",
    "babylonian_root",
    "bisect_branch_root",
    "build_integrands",
    "cardano_root",
    "check_identity",
    "closed_form_root",
    "compose_q",
    "derivative_tower",
    "discriminant_in_x",
    "factorize",
    "first_branch_point",
    "interpolate",
    "invert_phi",
    "lagrange_series",
    "linear_ode",
    "newton_polish",
    "pfq_series",
    "poly_gcd",
    "poly_lcm",
    "quad",
    "quartic_real_roots",
    "quartic_series_2f1_product",
    "quartic_series_3f2",
    "quartic_w_root",
    "resultant",
    "resultant_in_x",
    "series_ode_residual",
    "track_root",
    "trinomial",
    "verify_trinomial_table",
]
