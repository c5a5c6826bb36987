"""Concrete maps between the unit disc and the strip ``-1 < Re z < 1``.

Every map carries its Wirtinger pair ``(f_z, f_zbar)`` in closed form, so
compositions get exact derivatives through the chain rule.  Maps are
vectorised: evaluators accept scalars or numpy arrays of complex points.
"""
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._validation import (
    EPS_DOM,
    DomainTag,
    arg,
    as_complex_array,
    check_at_least,
    check_disc_param,
    check_in_domain,
    check_open_interval,
    unwrap,
)
from .exceptions import CompositionError, DomainError

__all__ = [
    "DomainTag",
    "PlanarMap",
    "build_disc_automorphism",
    "build_tan_map",
    "build_phi",
    "build_phi_b",
    "build_vertical_stretch",
    "build_psi_K",
    "build_rotation",
    "build_power",
    "compose",
    "real_part",
    "wirtinger_fd",
    "dilatation",
    "arg",
]

QUARTER_PI = np.pi / 4.0
FOUR_OVER_PI = 4.0 / np.pi


@dataclass(frozen=True)
class PlanarMap:
    """An evaluable C^1 map with its Wirtinger derivatives.

    ``evaluator`` and ``wirtinger`` work on validated complex arrays;
    ``__call__`` and :meth:`derivatives` add domain checking and restore
    scalar outputs for scalar inputs.
    """

    evaluator: Callable
    wirtinger_pair: Callable
    domain: DomainTag
    codomain: DomainTag
    analytic: bool
    name: str = "map"
    closed_domain: bool = False
    eps_dom: float = field(default=EPS_DOM, compare=False)

    def _check(self, z):
        return check_in_domain(z, self.domain, eps=self.eps_dom, closed=self.closed_domain)

    def __call__(self, z):
        arr = self._check(z)
        return unwrap(self.evaluator(arr), z)

    def derivatives(self, z):
        """Return ``(f_z, f_zbar)`` at ``z``."""
        arr = self._check(z)
        fz, fzbar = self.wirtinger_pair(arr)
        fz = np.broadcast_to(np.asarray(fz, dtype=np.complex128), arr.shape)
        fzbar = np.broadcast_to(np.asarray(fzbar, dtype=np.complex128), arr.shape)
        return unwrap(np.array(fz), z), unwrap(np.array(fzbar), z)

    wirtinger = derivatives

    def jacobian(self, z):
        """Real 2x2 Jacobian ``[[u_x, u_y], [v_x, v_y]]`` as a derived view."""
        fz, fzbar = self.derivatives(z)
        fx = fz + fzbar
        fy = 1j * (fz - fzbar)
        return np.array([[np.real(fx), np.real(fy)], [np.imag(fx), np.imag(fy)]])

    def __repr__(self):
        return f"PlanarMap({self.name}: {self.domain.value} -> {self.codomain.value})"


def _zero_like(z):
    return np.zeros_like(z)


def build_disc_automorphism(a):
    """The involutive automorphism ``z -> (a - z) / (1 - conj(a) z)`` of the disc."""
    a = check_disc_param(a)
    abar = np.conj(a)

    def ev(z):
        return (a - z) / (1.0 - abar * z)

    def wt(z):
        return (abs(a) ** 2 - 1.0) / (1.0 - abar * z) ** 2, _zero_like(z)

    return PlanarMap(ev, wt, DomainTag.UNIT_DISC, DomainTag.UNIT_DISC, True,
                     name=f"disc_automorphism({a:.6g})")


def build_tan_map():
    """``z -> tan(pi z / 4)``, strip onto disc; finite on the closed strip."""

    def ev(z):
        return np.tan(QUARTER_PI * z)

    def wt(z):
        t = np.tan(QUARTER_PI * z)
        return QUARTER_PI * (1.0 + t * t), _zero_like(z)

    return PlanarMap(ev, wt, DomainTag.STRIP, DomainTag.UNIT_DISC, True,
                     name="tan", closed_domain=True)


def _phi(z):
    # iz, then the Cayley map onto Re > 0, the log branch with ln 1 = 0,
    # then rotation and scaling onto the strip
    w = 1j * z
    w = (1.0 + w) / (1.0 - w)
    w = np.log(np.abs(w)) + 1j * np.angle(w)
    return -1j * (2.0 / np.pi) * w


def _phi_prime(z):
    return FOUR_OVER_PI / (1.0 + z * z)


def build_phi():
    """Conformal map of the disc onto the strip with ``phi(0) = 0``."""
    return PlanarMap(_phi, lambda z: (_phi_prime(z), _zero_like(z)),
                     DomainTag.UNIT_DISC, DomainTag.STRIP, True, name="phi")


def build_phi_b(b):
    """``phi o phi_a`` with ``a = tan(b pi / 4)``: the disc onto the strip, 0 -> b.

    The derivative at the origin is ``phi'(a) (a^2 - 1)``, negative for real
    ``b``; use ``compose(build_phi_b(b), build_rotation(np.pi))`` for the
    normalisation with a positive derivative.
    """
    b = check_open_interval(b, -1.0, 1.0, "b")
    a = float(np.tan(QUARTER_PI * b))
    out = compose(build_phi(), build_disc_automorphism(a))
    return PlanarMap(out.evaluator, out.wirtinger_pair, out.domain, out.codomain,
                     True, name=f"phi_b({b:.6g})")


def build_vertical_stretch(K):
    """The real-linear map ``x + iy -> x + iKy`` of the strip onto itself."""
    K = check_at_least(K, 1.0, "K")
    p = (1.0 + K) / 2.0
    q = (1.0 - K) / 2.0

    def ev(z):
        return z.real + 1j * K * z.imag

    def wt(z):
        return np.full_like(z, p), np.full_like(z, q)

    return PlanarMap(ev, wt, DomainTag.STRIP, DomainTag.STRIP, K == 1.0,
                     name=f"stretch({K:.6g})")


def build_psi_K(K):
    """Harmonic K-quasiregular map of the disc into the strip, stretch after phi."""
    out = compose(build_vertical_stretch(K), build_phi())
    return PlanarMap(out.evaluator, out.wirtinger_pair, out.domain, out.codomain,
                     out.analytic, name=f"psi_K({float(K):.6g})")


def build_rotation(alpha, pre_i=False):
    """``z -> c z`` with ``c = e^{i alpha}``, times ``i`` when ``pre_i``."""
    c = complex(np.exp(1j * float(alpha)))
    if pre_i:
        c *= 1j

    def ev(z):
        return c * z

    def wt(z):
        return np.full_like(z, c), _zero_like(z)

    return PlanarMap(ev, wt, DomainTag.UNIT_DISC, DomainTag.UNIT_DISC, True,
                     name=f"rotation({c:.6g})")


def build_power(n):
    """``z -> z**n`` on the disc."""
    n = int(n)
    if n < 1:
        raise ValueError("power must be a positive integer")
    return PlanarMap(lambda z: z**n, lambda z: (n * z ** (n - 1), _zero_like(z)),
                     DomainTag.UNIT_DISC, DomainTag.UNIT_DISC, True, name=f"z^{n}")


def compose(outer, inner):
    """``outer o inner`` with the Wirtinger chain rule."""
    if not outer.domain.contains(inner.codomain):
        raise CompositionError(
            f"cannot compose {outer!r} after {inner!r}: "
            f"{inner.codomain.value} is not inside {outer.domain.value}")

    def ev(z):
        return outer.evaluator(inner.evaluator(z))

    def wt(z):
        w = inner.evaluator(z)
        fz, fzbar = inner.wirtinger_pair(z)
        gz, gzbar = outer.wirtinger_pair(w)
        hz = gz * fz + gzbar * np.conj(fzbar)
        hzbar = gz * fzbar + gzbar * np.conj(fz)
        return hz, hzbar

    return PlanarMap(ev, wt, inner.domain, outer.codomain,
                     outer.analytic and inner.analytic,
                     name=f"{outer.name}o{inner.name}", eps_dom=inner.eps_dom)


def real_part(fmap):
    """``Re f`` as a (real-valued, harmonic when f is analytic) planar map."""

    def ev(z):
        return fmap.evaluator(z).real + 0j

    def wt(z):
        fz, fzbar = fmap.wirtinger_pair(z)
        # u = (f + conj f)/2
        return (fz + np.conj(fzbar)) / 2.0, (fzbar + np.conj(fz)) / 2.0

    codomain = DomainTag.STRIP if DomainTag.STRIP.contains(fmap.codomain) else DomainTag.PLANE
    return PlanarMap(ev, wt, fmap.domain, codomain, False, name=f"Re({fmap.name})",
                     eps_dom=fmap.eps_dom)


def wirtinger_fd(fmap, z, h=1e-5):
    """Central-difference estimate of ``(f_z, f_zbar)`` at ``z``."""
    z = as_complex_array(z)
    stencil = z[..., None] + np.array([h, -h, 1j * h, -1j * h])
    try:
        vals = np.asarray(fmap(stencil), dtype=np.complex128)
    except DomainError as exc:
        raise DomainError(f"finite-difference stencil of width {h} leaves the domain") from exc
    fx = (vals[..., 0] - vals[..., 1]) / (2.0 * h)
    fy = (vals[..., 2] - vals[..., 3]) / (2.0 * h)
    fz = (fx - 1j * fy) / 2.0
    fzbar = (fx + 1j * fy) / 2.0
    return unwrap(fz, z), unwrap(fzbar, z)


def dilatation(fz, fzbar):
    """Pointwise ``(|f_z| + |f_zbar|) / (|f_z| - |f_zbar|)``; inf where not sense-preserving."""
    a = np.abs(fz)
    b = np.abs(fzbar)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(a > b, (a + b) / (a - b), np.inf)
    return out[()] if np.ndim(out) == 0 else out
