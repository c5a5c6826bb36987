"""Harmonic extension of boundary data on the unit disc.

:class:`HarmonicExtension` follows the scikit-learn estimator protocol: it is
configured through constructor parameters (``get_params``/``set_params``),
``fit`` takes the boundary samples and ``predict`` evaluates the harmonic
extension at complex points.

The extension is computed from the discrete Fourier coefficients of the
samples.  For samples of a trigonometric polynomial of degree below N/2
this is the exact Poisson integral of that polynomial; the associated
holomorphic function ``F`` (``Re F = u``, ``Im F(0) = 0``) is the Taylor
series ``c_0 + 2 sum_k c_k z^k``.
"""
import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted, column_or_1d

from ._validation import DomainTag, as_complex_array, check_open_interval, unwrap
from .exceptions import CodomainError, DomainError, InvalidParameterError
from .planarmaps import PlanarMap, dilatation

MIN_SAMPLES = 64


@dataclass(frozen=True)
class BoundarySignal:
    """Real samples at ``N`` uniform angles ``2 pi k / N`` on the unit circle."""

    samples: np.ndarray
    seed: Optional[int] = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        s = np.array(column_or_1d(np.asarray(self.samples, dtype=float)), dtype=float)
        if s.size < MIN_SAMPLES:
            raise InvalidParameterError(f"need at least {MIN_SAMPLES} samples, got {s.size}")
        if not np.all(np.isfinite(s)):
            raise InvalidParameterError("boundary samples must be finite")
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)

    @property
    def N(self):
        return self.samples.size

    @property
    def angles(self):
        return 2.0 * np.pi * np.arange(self.N) / self.N

    def mean(self):
        return float(np.mean(self.samples))

    @classmethod
    def from_function(cls, func, n_samples=256, radius=1.0, **kw):
        """Sample ``func(radius * e^{it})`` (real part) at uniform angles."""
        t = 2.0 * np.pi * np.arange(n_samples) / n_samples
        return cls(np.real(func(radius * np.exp(1j * t))), **kw)

    def to_json(self):
        return json.dumps({"N": self.N, "seed": self.seed, "samples": self.samples.tolist()})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        sig = cls(np.array(data["samples"], dtype=float), seed=data.get("seed"))
        if sig.N != data["N"]:
            raise InvalidParameterError("sample count does not match N")
        return sig

    def __add__(self, other):
        return BoundarySignal(self.samples + other, seed=self.seed)

    def __mul__(self, other):
        return BoundarySignal(self.samples * other, seed=self.seed)

    __rmul__ = __mul__


def _taylor_coefficients(samples):
    n = samples.size
    g = np.fft.rfft(samples) / n
    coef = 2.0 * g
    coef[0] = g[0]
    if n % 2 == 0:
        coef[-1] = g[-1]
    # drop trailing round-off so band-limited data evaluates at its true degree
    mag = np.abs(coef)
    keep = np.flatnonzero(mag > 1e-16 * mag.sum())
    return coef[: keep[-1] + 1] if keep.size else coef[:1]


def _as_samples(X):
    if isinstance(X, BoundarySignal):
        return X
    return BoundarySignal(X)


class HarmonicExtension(BaseEstimator):
    """Poisson extension of real boundary samples into the unit disc.

    Parameters
    ----------
    radius_cap : float
        Largest ``|z|`` accepted by the evaluation methods.  Near the circle
        the extension of non-band-limited data converges slowly in N, so
        evaluation beyond the cap is refused.
    """

    def __init__(self, radius_cap=0.99):
        self.radius_cap = radius_cap

    def fit(self, X, y=None):
        check_open_interval(self.radius_cap, 0.0, 1.0, "radius_cap")
        self.signal_ = _as_samples(X)
        self.n_samples_ = self.signal_.N
        self.coef_ = _taylor_coefficients(self.signal_.samples)
        self.dcoef_ = P.polyder(self.coef_)
        return self

    def _points(self, z):
        check_is_fitted(self, "coef_")
        arr = as_complex_array(z)
        if np.any(np.abs(arr) > self.radius_cap * (1.0 + 1e-12)):
            raise DomainError(f"|z| exceeds radius cap {self.radius_cap}")
        return arr

    def holomorphic(self, z):
        """Associated holomorphic ``F`` with ``Re F = u`` and ``Im F(0) = 0``."""
        return unwrap(P.polyval(self._points(z), self.coef_))

    def predict(self, z):
        """Values of the harmonic extension ``u`` at ``z``."""
        return unwrap(np.real(P.polyval(self._points(z), self.coef_)))

    def derivative(self, z):
        """``F'(z)``, which equals the conjugate gradient ``u_x - i u_y``."""
        return unwrap(P.polyval(self._points(z), self.dcoef_))

    def gradient_modulus(self, z):
        return unwrap(np.abs(self.derivative(z)))

    def boundary_max(self, oversample=8):
        """Max of ``|g|`` for the band-limited boundary function on a fine grid."""
        check_is_fitted(self, "coef_")
        m = oversample * self.n_samples_
        t = np.exp(2j * np.pi * np.arange(m) / m)
        return float(np.max(np.abs(np.real(P.polyval(t, self.coef_)))))


PoissonFunction = HarmonicExtension


def _extension(g, radius_cap=0.99):
    return HarmonicExtension(radius_cap=radius_cap).fit(g)


def poisson_eval(g, z, radius_cap=0.99):
    """Harmonic extension of ``g`` evaluated at ``z``."""
    return _extension(g, radius_cap).predict(z)


def schwarz_integral(g, z, radius_cap=0.99):
    """Holomorphic function with real part ``poisson_eval(g, .)`` and ``Im F(0) = 0``."""
    return _extension(g, radius_cap).holomorphic(z)


def grad_modulus(g, z, radius_cap=0.99):
    """``|grad u(z)| = |F'(z)|`` for the harmonic extension ``u`` of ``g``."""
    return _extension(g, radius_cap).gradient_modulus(z)


def poisson_kernel_quadrature(g, z):
    """Trapezoid rule applied to the Poisson integral with its exact kernel.

    Independent of the Fourier route; accurate to roughly ``|z|^N``.
    """
    g = _as_samples(g)
    z = as_complex_array(z)
    e = np.exp(1j * g.angles)
    kernel = (1.0 - np.abs(z[..., None]) ** 2) / np.abs(e - z[..., None]) ** 2
    return unwrap(kernel @ g.samples / g.N)


def schwarz_kernel_quadrature(g, z):
    """Trapezoid rule for ``(1/2pi) int (e^{it} + z)/(e^{it} - z) g(t) dt``."""
    g = _as_samples(g)
    z = as_complex_array(z)
    e = np.exp(1j * g.angles)
    kernel = (e + z[..., None]) / (e - z[..., None])
    return unwrap(kernel @ g.samples / g.N)


def random_signal(seed, bound=0.9, modes=8, n_samples=256, mean_zero=False):
    """Seeded trigonometric polynomial of degree ``modes`` scaled into ``[-bound, bound]``.

    The scaling uses the maximum of the continuous polynomial on a fixed fine
    grid, so the boundary function itself, not only its samples, respects
    ``bound``, and the same seed gives the same function for every
    ``n_samples``.
    """
    if int(modes) < 1:
        raise InvalidParameterError("modes must be >= 1")
    if 2 * int(modes) >= n_samples:
        raise InvalidParameterError("modes must stay below n_samples / 2")
    rng = np.random.default_rng(seed)
    k = np.arange(1, int(modes) + 1)
    coef = np.zeros(int(modes) + 1, dtype=complex)
    coef[1:] = (rng.standard_normal(k.size) + 1j * rng.standard_normal(k.size)) / k
    coef[0] = 0.0 if mean_zero else rng.uniform(-1.0, 1.0)
    fine = 8192
    t = np.exp(2j * np.pi * np.arange(fine) / fine)
    scale = np.max(np.abs(np.real(P.polyval(t, coef))))
    t = np.exp(2j * np.pi * np.arange(n_samples) / n_samples)
    samples = bound * np.real(P.polyval(t, coef)) / scale
    return BoundarySignal(samples, seed=seed, meta={"modes": int(modes), "bound": bound})


@dataclass(frozen=True)
class HarmonicPlanarMap(PlanarMap):
    """``f = u + i s v`` assembled from two harmonic extensions."""

    u_part: Optional[HarmonicExtension] = None
    v_part: Optional[HarmonicExtension] = None
    scale_v: float = 1.0


def assemble_hqr(g_u, g_v, scale_v=1.0, radius_cap=0.99, check_n=64):
    """Complex harmonic map ``P[g_u] + i scale_v P[g_v]`` of the disc into the strip.

    Wirtinger derivatives come from the associated holomorphic derivatives:
    ``f_z = (F_u' + i s F_v')/2`` and ``f_zbar = (conj F_u' + i s conj F_v')/2``.
    """
    scale_v = float(scale_v)
    if not np.isfinite(scale_v):
        raise InvalidParameterError("scale_v must be finite")
    u = _extension(g_u, radius_cap)
    v = _extension(g_v, radius_cap)
    grid = polar_grid(radius_cap, check_n)
    if np.any(np.abs(u.predict(grid)) >= 1.0):
        raise CodomainError("real part leaves (-1, 1) on the check grid")

    def ev(z):
        return u.predict(z) + 1j * scale_v * v.predict(z)

    def wt(z):
        du = np.asarray(u.derivative(z))
        dv = np.asarray(v.derivative(z))
        return (du + 1j * scale_v * dv) / 2.0, (np.conj(du) + 1j * scale_v * np.conj(dv)) / 2.0

    return HarmonicPlanarMap(ev, wt, DomainTag.UNIT_DISC, DomainTag.STRIP, False,
                             name="assembled_hqr", u_part=u, v_part=v, scale_v=scale_v)


def polar_grid(radius, n):
    """``n`` radii in ``(0, radius]`` times ``n`` angles, plus the origin."""
    radii = radius * (np.arange(1, n + 1) / n)
    theta = 2.0 * np.pi * np.arange(n) / n
    pts = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    return np.concatenate([[0.0 + 0.0j], pts])


def estimate_K(fmap, grid_radius=0.9, n=32, refine=False):
    """Largest dilatation quotient of ``fmap`` on a polar grid.

    Returns ``(K_hat, sense_preserving)``; ``K_hat`` is ``inf`` when
    ``|f_z| <= |f_zbar|`` somewhere on the grid.  With ``refine`` the best
    grid points are polished by a local maximiser kept inside the grid disc.
    """
    check_open_interval(grid_radius, 0.0, 1.0, "grid_radius")
    if int(n) < 16:
        raise InvalidParameterError("n must be >= 16")
    grid = polar_grid(grid_radius, int(n))
    fz, fzbar = fmap.wirtinger_pair(grid)
    fz = np.broadcast_to(fz, grid.shape)
    fzbar = np.broadcast_to(fzbar, grid.shape)
    k = np.atleast_1d(dilatation(fz, fzbar))
    if not np.all(np.isfinite(k)):
        return float("inf"), False
    best = float(k.max())
    if refine:
        best = max(best, _polish(fmap, grid, k, grid_radius))
    return best, True


def _polish(fmap, grid, k, radius, starts=3, rounds=6, width=11):
    """Zooming grid search around the best grid points, clipped to the disc."""

    def quotient(z):
        fz, fzbar = fmap.wirtinger_pair(z)
        return np.atleast_1d(dilatation(np.broadcast_to(fz, z.shape), np.broadcast_to(fzbar, z.shape)))

    offsets = np.linspace(-1.0, 1.0, width)
    offsets = (offsets[:, None] + 1j * offsets[None, :]).ravel()
    step = radius / np.sqrt(grid.size)
    best = -np.inf
    for idx in np.argsort(k)[-starts:]:
        z0, h = grid[idx], step
        for _ in range(rounds):
            cand = z0 + h * offsets
            mod = np.abs(cand)
            cand = np.where(mod > radius, cand * (radius / np.maximum(mod, 1e-300)), cand)
            vals = quotient(cand)
            vals = np.where(np.isfinite(vals), vals, -np.inf)
            j = int(np.argmax(vals))
            z0, h = cand[j], h / 4.0
            best = max(best, float(vals[j]))
    return best
