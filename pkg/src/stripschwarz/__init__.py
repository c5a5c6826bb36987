"""Conformal and harmonic maps between the unit disc and the strip |Re z| < 1,
their hyperbolic geometry, and numerically verified Schwarz-type bounds."""
from ._validation import DomainTag
from .bounds import BoundKind, bound_value, deriv_bound_hol_strip, extremal_for
from .discgeom import (
    Extents,
    HypDisc,
    LrCircle,
    boundary_curve,
    extents_numeric,
    figure_polylines,
    lambda_of_r,
    lr_circle,
    offcenter_re_extent,
    r_of_lambda,
    strip_disc_extents_closed,
    strip_disc_maxmod_closed,
)
from .exceptions import (
    CodomainError,
    CompositionError,
    DomainError,
    GeneratorStarvationError,
    InvalidParameterError,
    StripSchwarzError,
)
from .harmonic import (
    BoundarySignal,
    HarmonicExtension,
    assemble_hqr,
    estimate_K,
    grad_modulus,
    poisson_eval,
    random_signal,
    schwarz_integral,
)
from .hypgeom import (
    Polyline,
    dist,
    dist_disc,
    dist_strip,
    euclid_comparison,
    path_length,
    pseudo_dist,
    rho_disc,
    rho_strip,
    strip_geodesic,
)
from .planarmaps import (
    PlanarMap,
    build_disc_automorphism,
    build_phi,
    build_phi_b,
    build_power,
    build_psi_K,
    build_rotation,
    build_tan_map,
    build_vertical_stretch,
    compose,
    dilatation,
    real_part,
    wirtinger_fd,
)
from .verify import VerificationReport, VerifyConfig, run_all

__version__ = "0.1.0"
