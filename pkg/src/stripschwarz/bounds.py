"""Schwarz-type bounds as functions of ``r = |z|`` and their extremal maps."""
import math
from dataclasses import dataclass

import numpy as np

from ._validation import arg, check_at_least, check_open_interval
from .exceptions import InvalidParameterError
from .planarmaps import (
    PlanarMap,
    build_phi,
    build_phi_b,
    build_psi_K,
    build_rotation,
    compose,
    real_part,
)

FOUR_OVER_PI = 4.0 / math.pi

_KINDS = ("classical_hol", "harmonic_disc", "harmonic_interval", "hol_strip", "hqr_strip")


@dataclass(frozen=True)
class BoundKind:
    """Which Schwarz-type bound; ``b`` and ``K`` are used by the interval and HQR kinds."""

    name: str
    b: float = 0.0
    K: float = 1.0

    def __post_init__(self):
        if self.name not in _KINDS:
            raise InvalidParameterError(f"unknown bound kind {self.name!r}")
        if self.name == "harmonic_interval":
            check_open_interval(self.b, -1.0, 1.0, "b")
        if self.name == "hqr_strip":
            check_at_least(self.K, 1.0, "K")

    @classmethod
    def classical_hol(cls):
        return cls("classical_hol")

    @classmethod
    def harmonic_disc(cls):
        return cls("harmonic_disc")

    @classmethod
    def harmonic_interval(cls, b):
        return cls("harmonic_interval", b=float(b))

    @classmethod
    def hol_strip(cls):
        return cls("hol_strip")

    @classmethod
    def hqr_strip(cls, K):
        return cls("hqr_strip", K=float(K))

    @property
    def label(self):
        if self.name == "harmonic_interval":
            return f"{self.name}(b={self.b:g})"
        if self.name == "hqr_strip":
            return f"{self.name}(K={self.K:g})"
        return self.name


def _check_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(~np.isfinite(r)) or np.any(r < 0) or np.any(r >= 1):
        raise InvalidParameterError("r must lie in [0, 1)")
    return r


def bound_value(kind, r):
    """Evaluate the bound at modulus ``r``; the interval kind returns ``(m, M)``.

    Vectorised over ``r``.  ``r = 0`` gives the exact value at the centre.
    """
    r = _check_r(r)
    if kind.name == "classical_hol":
        out = r.copy()
    elif kind.name == "harmonic_disc":
        out = FOUR_OVER_PI * np.arctan(r)
    elif kind.name == "hol_strip":
        out = FOUR_OVER_PI * np.arctanh(r)
    elif kind.name == "hqr_strip":
        out = FOUR_OVER_PI * kind.K * np.arctanh(r)
    else:
        a = math.tan(math.pi * kind.b / 4.0)
        m = FOUR_OVER_PI * np.arctan((a - r) / (1.0 - a * r))
        M = FOUR_OVER_PI * np.arctan((a + r) / (1.0 + a * r))
        return m[()], M[()]
    return out[()]


def deriv_bound_hol_strip():
    """Sharp bound ``4/pi`` on ``|f'(0)|`` for normalised maps into the strip."""
    return FOUR_OVER_PI


def _check_point(z):
    z = complex(z)
    if not 0.0 < abs(z) < 1.0:
        raise InvalidParameterError(f"extremal point must satisfy 0 < |z| < 1, got {z!r}")
    return z


def extremal_harmonic(z):
    """``zeta -> Re phi(e^{-i arg z} zeta)``, attaining ``(4/pi) arctan|z|`` at ``z``."""
    z = _check_point(z)
    rot = build_rotation(-arg(z, "positive"))
    return real_part(compose(build_phi(), rot))


def extremal_harmonic_interval(z, b, upper=False):
    """Harmonic ``u`` with ``u(0) = b`` reaching ``m_b(|z|)`` (or ``M_b`` if ``upper``) at ``z``."""
    z = _check_point(z)
    alpha = -arg(z, "positive") + (np.pi if upper else 0.0)
    return real_part(compose(build_phi_b(b), build_rotation(alpha)))


def extremal_hol(z):
    """``zeta -> phi(i e^{-i arg z} zeta)``, attaining ``(4/pi) artanh|z|`` at ``z``."""
    z = _check_point(z)
    return compose(build_phi(), build_rotation(-arg(z, "positive"), pre_i=True))


def extremal_hqr(K, z):
    """``psi_K`` precomposed with the rotation that sends ``z`` to ``i|z|``."""
    K = check_at_least(K, 1.0, "K")
    z = _check_point(z)
    return compose(build_psi_K(K), build_rotation(-arg(z, "positive"), pre_i=True))


def extremal_classical(z):
    _check_point(z)
    return build_rotation(0.0)


def extremal_for(kind, z) -> PlanarMap:
    """The witness attaining ``kind``'s bound at ``z`` (lower end for the interval kind)."""
    if kind.name == "classical_hol":
        return extremal_classical(z)
    if kind.name == "harmonic_disc":
        return extremal_harmonic(z)
    if kind.name == "hol_strip":
        return extremal_hol(z)
    if kind.name == "hqr_strip":
        return extremal_hqr(kind.K, z)
    return extremal_harmonic_interval(z, kind.b)

