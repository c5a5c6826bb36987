"""Hyperbolic discs in the disc and the strip and their Euclidean extents."""
import math
from dataclasses import dataclass

import numpy as np

from ._validation import (
    DomainTag,
    check_disc_param,
    check_in_domain,
    check_open_interval,
    check_positive,
)
from .exceptions import InvalidParameterError
from .hypgeom import Polyline
from .planarmaps import build_phi

FOUR_OVER_PI = 4.0 / math.pi
TWO_OVER_PI = 2.0 / math.pi


@dataclass(frozen=True)
class HypDisc:
    """Closed hyperbolic disc of radius ``radius`` about ``center``."""

    domain: DomainTag
    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "domain", DomainTag(self.domain))
        object.__setattr__(self, "center", complex(self.center))
        check_positive(self.radius, "radius")
        if self.domain is DomainTag.PLANE:
            raise InvalidParameterError("hyperbolic discs live in the unit disc or the strip")
        check_in_domain(self.center, self.domain, eps=0.0, name="center")


@dataclass(frozen=True)
class LrCircle:
    """Image of ``|z| = r`` under ``z -> (1 + iz)/(1 - iz)``."""

    c: float
    R: float
    theta0: float
    L0: float


@dataclass(frozen=True)
class Extents:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    mod_max: float
    argmax_mod: complex


def lambda_of_r(r):
    """Hyperbolic radius ``2 artanh r`` of the Euclidean disc ``|z| < r``."""
    r = check_open_interval(r, 0.0, 1.0, "r")
    return math.log1p(r) - math.log1p(-r)


def r_of_lambda(lam):
    lam = check_positive(lam, "lambda")
    return math.tanh(lam / 2.0)


def _boundary_map(disc):
    """Conformal map sending ``|z| = r`` onto the boundary of ``disc``.

    Parametrised as ``z -> T(-z)`` so that centre-zero discs keep the
    orientation of the circle: ``theta = pi/2`` maps to the upper half.
    """
    if disc.domain is DomainTag.UNIT_DISC:
        a = check_disc_param(disc.center, "center")
        return lambda z: (a + z) / (1.0 + np.conj(a) * z)
    a = complex(np.tan(np.pi * disc.center / 4.0))
    phi = build_phi().evaluator
    return lambda z: phi((a + z) / (1.0 + np.conj(a) * z))


def boundary_curve(disc, n):
    """``n`` samples of the boundary of ``disc`` at angles ``2 pi k / n``."""
    n = int(n)
    if n < 4:
        raise InvalidParameterError(f"n must be at least 4, got {n}")
    r = r_of_lambda(disc.radius)
    theta = 2.0 * np.pi * np.arange(n) / n
    circle = r * np.exp(1j * theta)
    # snap the quarter points so symmetric samples are exact
    circle[np.isclose(theta, np.pi / 2)] = 1j * r
    circle[np.isclose(theta, np.pi)] = -r
    circle[np.isclose(theta, 3 * np.pi / 2)] = -1j * r
    return Polyline(_boundary_map(disc)(circle), disc.domain)


def boundary_theta(n):
    return 2.0 * np.pi * np.arange(int(n)) / int(n)


def strip_disc_extents_closed(r):
    """``(re_max, im_max)`` of the strip disc of radius ``lambda(r)`` about 0."""
    r = check_open_interval(r, 0.0, 1.0, "r")
    return FOUR_OVER_PI * math.atan(r), TWO_OVER_PI * lambda_of_r(r)


def strip_disc_maxmod_closed(lam):
    """Largest modulus on the closed strip disc of radius ``lam`` about 0."""
    lam = check_positive(lam, "lambda")
    return TWO_OVER_PI * lam


def offcenter_re_extent(b, r):
    """``(m_b(r), M_b(r))``: the real-part range of the strip disc about real ``b``."""
    b = check_open_interval(b, -1.0, 1.0, "b")
    r = check_open_interval(r, 0.0, 1.0, "r")
    a = math.tan(math.pi * b / 4.0)
    m = FOUR_OVER_PI * math.atan((a - r) / (1.0 - a * r))
    M = FOUR_OVER_PI * math.atan((a + r) / (1.0 + a * r))
    return m, M


def lr_circle(r):
    r = check_open_interval(r, 0.0, 1.0, "r")
    c = (1.0 + r * r) / (1.0 - r * r)
    R = 2.0 * r / (1.0 - r * r)
    # tangent from the origin touches the circle at modulus 1 (power of 0 is 1)
    return LrCircle(c=c, R=R, theta0=math.atan(R), L0=math.log(c + R))


def extents_numeric(disc, n=4096):
    """Extremes of Re, Im and |.| over ``n`` boundary samples of ``disc``.

    Ties for the largest modulus resolve to the sample with nonnegative
    imaginary part.
    """
    n = int(n)
    if n < 64:
        raise InvalidParameterError(f"n must be at least 64, got {n}")
    v = boundary_curve(disc, n).vertices
    mod = np.abs(v)
    mod_max = float(mod.max())
    ties = np.flatnonzero(mod >= mod_max * (1.0 - 1e-12))
    upper = ties[v[ties].imag >= 0]
    pick = upper[0] if upper.size else ties[0]
    return Extents(
        re_min=float(v.real.min()),
        re_max=float(v.real.max()),
        im_min=float(v.imag.min()),
        im_max=float(v.imag.max()),
        mod_max=mod_max,
        argmax_mod=complex(v[pick]),
    )


def figure_polylines(r, n=720):
    """Closed boundary polylines of ``|z| <= r`` and of its image under ``phi``.

    Returns a list of ``(curve_id, theta, points)`` with the first vertex
    repeated at ``theta = 2 pi``.
    """
    lam = lambda_of_r(r)
    theta = np.append(boundary_theta(n), 2.0 * np.pi)
    out = []
    for curve_id, domain in (("disc", DomainTag.UNIT_DISC), ("strip", DomainTag.STRIP)):
        pts = boundary_curve(HypDisc(domain, 0.0, lam), n).vertices
        out.append((curve_id, theta, np.append(pts, pts[0])))
    return out
