"""Hyperbolic densities and distances on the unit disc and on the strip."""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._validation import DomainTag, as_complex_array, check_in_domain, unwrap
from .exceptions import DomainError

HALF_PI = np.pi / 2.0

#: floor on 1 - |z|^2 below which disc distances are capped
NEAR_BOUNDARY = 2e-12


@dataclass(frozen=True)
class Density:
    domain: DomainTag
    evaluator: Callable

    def __call__(self, z):
        arr = check_in_domain(z, self.domain, eps=0.0)
        return unwrap(self.evaluator(arr), z)


def _rho_disc(z):
    return 2.0 / (1.0 - np.abs(z) ** 2)


def _rho_strip(z):
    return HALF_PI / np.cos(HALF_PI * np.real(z))


DISC_DENSITY = Density(DomainTag.UNIT_DISC, _rho_disc)
STRIP_DENSITY = Density(DomainTag.STRIP, _rho_strip)


def rho_disc(z):
    """``2 / (1 - |z|^2)``."""
    return DISC_DENSITY(z)


def rho_strip(z):
    """``(pi/2) / cos(pi Re z / 2)``; depends on ``Re z`` only."""
    return STRIP_DENSITY(z)


def density_for(domain):
    domain = DomainTag(domain)
    if domain is DomainTag.UNIT_DISC:
        return DISC_DENSITY
    if domain is DomainTag.STRIP:
        return STRIP_DENSITY
    raise DomainError(f"no hyperbolic density on {domain.value}")


def _in_disc(z, name):
    return check_in_domain(z, DomainTag.UNIT_DISC, eps=0.0, name=name)


def _in_strip(z, name):
    return check_in_domain(z, DomainTag.STRIP, eps=0.0, name=name)


def pseudo_dist(z1, z2):
    """Pseudo-hyperbolic distance ``|(z1 - z2) / (1 - z1 conj(z2))|``."""
    a = _in_disc(z1, "z1")
    b = _in_disc(z2, "z2")
    out = np.abs(a - b) / np.abs(1.0 - a * np.conj(b))
    return unwrap(out)


def dist_disc(z1, z2, with_flag=False):
    """Hyperbolic distance in the disc, ``2 artanh`` of the pseudo-distance.

    Evaluated as ``ln((|1 - z1 conj z2| + |z1 - z2|)^2 / ((1-|z1|^2)(1-|z2|^2)))``,
    which avoids the cancellation in ``1 - sigma`` for far-apart points.
    Points closer than ~1e-12 to the circle give a capped finite value; pass
    ``with_flag=True`` to also receive the boolean near-boundary mask.
    """
    a = _in_disc(z1, "z1")
    b = _in_disc(z2, "z2")
    ma = (1.0 - np.abs(a)) * (1.0 + np.abs(a))
    mb = (1.0 - np.abs(b)) * (1.0 + np.abs(b))
    flag = (ma < NEAR_BOUNDARY) | (mb < NEAR_BOUNDARY)
    ma = np.maximum(ma, NEAR_BOUNDARY)
    mb = np.maximum(mb, NEAR_BOUNDARY)
    s = np.abs(1.0 - a * np.conj(b)) + np.abs(a - b)
    d = np.maximum(2.0 * np.log(s) - np.log(ma) - np.log(mb), 0.0)
    d = np.where(a == b, 0.0, d)
    if with_flag:
        return unwrap(d), unwrap(flag)
    return unwrap(d)


def dist_strip(z1, z2):
    """Hyperbolic distance in the strip.

    Equal to ``dist_disc(tan(pi z1/4), tan(pi z2/4))``; with
    ``s = sin(pi (z1 - z2)/4)`` and ``c = cos(pi (z1 + conj z2)/4)`` the
    pseudo-distance of the images is ``|s|/|c|`` and
    ``|c|^2 - |s|^2 = cos(pi x1/2) cos(pi x2/2)``, which gives a form free of
    cancellation far from the real axis.
    """
    a = _in_strip(z1, "z1")
    b = _in_strip(z2, "z2")
    s = np.abs(np.sin(np.pi * (a - b) / 4.0))
    c = np.abs(np.cos(np.pi * (a + np.conj(b)) / 4.0))
    det = np.cos(HALF_PI * a.real) * np.cos(HALF_PI * b.real)
    d = np.maximum(2.0 * np.log(c + s) - np.log(det), 0.0)
    d = np.where(a == b, 0.0, d)
    return unwrap(d)


def dist(domain, z1, z2):
    domain = DomainTag(domain)
    if domain is DomainTag.UNIT_DISC:
        return dist_disc(z1, z2)
    if domain is DomainTag.STRIP:
        return dist_strip(z1, z2)
    raise DomainError(f"no hyperbolic distance on {domain.value}")


@dataclass(frozen=True)
class Polyline:
    vertices: np.ndarray
    domain: DomainTag

    def __post_init__(self):
        v = as_complex_array(self.vertices, "vertices").ravel()
        if v.size < 2:
            raise ValueError("a polyline needs at least two vertices")
        check_in_domain(v, self.domain, eps=0.0, name="vertex")
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "domain", DomainTag(self.domain))

    def __len__(self):
        return self.vertices.size


def path_length(curve, density=None):
    """Composite-midpoint hyperbolic length of a polyline."""
    if density is None:
        density = density_for(curve.domain)
    v = curve.vertices
    mid = (v[1:] + v[:-1]) / 2.0
    seg = np.abs(np.diff(v))
    return float(np.sum(density(mid) * seg))


def disc_geodesic(w1, w2, n):
    """Polyline of ``n`` segments along the disc geodesic from ``w1`` to ``w2``.

    Vertices are equally spaced in hyperbolic arclength, so midpoint
    quadrature stays accurate even when the endpoints approach the circle.
    """
    w1 = complex(w1)
    w2 = complex(w2)
    _in_disc(np.array([w1, w2]), "endpoint")
    # move w1 to 0, walk radially, move back (the automorphism is an involution)
    t = (w1 - w2) / (1.0 - np.conj(w1) * w2)
    rho = abs(t)
    if rho == 0.0:
        return Polyline(np.array([w1, w1]), DomainTag.UNIT_DISC)
    total = 2.0 * np.arctanh(rho)
    radii = np.tanh(np.linspace(0.0, total, n + 1) / 2.0)
    radii[-1] = rho
    ray = radii * (t / rho)
    pts = (w1 - ray) / (1.0 - np.conj(w1) * ray)
    return Polyline(pts, DomainTag.UNIT_DISC)


def strip_geodesic(z1, z2, n):
    """Image under ``phi`` of the disc geodesic joining ``tan(pi z/4)`` images."""
    from .planarmaps import build_phi

    a = _in_strip(np.array([z1, z2]), "endpoint")
    w = np.tan(np.pi * a / 4.0)
    disc_path = disc_geodesic(w[0], w[1], n)
    pts = build_phi().evaluator(disc_path.vertices)
    pts[0], pts[-1] = a[0], a[1]
    return Polyline(pts, DomainTag.STRIP)


def euclid_comparison(z1, z2):
    """Return ``(d_S, (pi/2)|z1 - z2|, slack)`` for a pair of strip points."""
    ds = dist_strip(z1, z2)
    lower = HALF_PI * np.abs(as_complex_array(z1) - as_complex_array(z2))
    lower = unwrap(lower)
    return ds, lower, ds - lower
