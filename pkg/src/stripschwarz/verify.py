"""Randomised numerical certification of the Schwarz-type inequalities.

Each ``check_*`` function samples admissible maps or point pairs from a
seeded generator, measures the additive violation ``lhs - rhs`` (or
``|lhs - rhs|`` for equality cases) and returns a
:class:`VerificationReport`.  Maps are admitted only after their hypotheses
(codomain on a grid, normalisation at 0, dilatation) are checked.
"""
import dataclasses
import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from .bounds import BoundKind, bound_value, deriv_bound_hol_strip, extremal_for, extremal_harmonic_interval
from .discgeom import (
    HypDisc,
    extents_numeric,
    lambda_of_r,
    lr_circle,
    offcenter_re_extent,
    strip_disc_extents_closed,
    strip_disc_maxmod_closed,
)
from .exceptions import GeneratorStarvationError
from .harmonic import (
    HarmonicExtension,
    assemble_hqr,
    estimate_K,
    polar_grid,
    random_signal,
)
from .hypgeom import dist_disc, dist_strip, path_length, rho_disc, rho_strip, strip_geodesic
from .planarmaps import (
    build_disc_automorphism,
    build_phi,
    build_psi_K,
    build_rotation,
    compose,
    dilatation,
    wirtinger_fd,
)

FOUR_OVER_PI = 4.0 / math.pi
HALF_PI = math.pi / 2.0

#: test points for theorem checks stay in this disc (also the K_hat grid)
TEST_RADIUS = 0.95
MAX_REJECTIONS = 100

ANCHORS = {
    "strip-density-pullback": "rho_S(phi(w)) |phi'(w)| = rho_U(w)",
    "strip-distance-path-oracle": "d_S(z1,z2) = inf over curves of the integral of rho_S |dz|",
    "strip-euclid-lower-bound": "d_S(z1,z2) >= (pi/2) |z1 - z2|",
    "strip-euclid-equality-imaginary": "d_S(iy1,iy2) = (pi/2) |y1 - y2|",
    "strip-disc-re-extent": "Re of closed S_lambda(r) = [-(4/pi) arctan r, (4/pi) arctan r]",
    "strip-disc-box": "closed S_lambda(r) inside the box |x| <= (4/pi) arctan r, |y| <= (2/pi) lambda(r)",
    "lr-circle": "theta0 = arctan R = 2 arctan r and L0 = ln(c + R) = ln((1+r)/(1-r))",
    "strip-disc-max-modulus": "max |z| over closed S_lambda = (2/pi) lambda",
    "strip-disc-argmax": "max |z| over closed S_lambda attained at +-i (2/pi) lambda",
    "offcenter-re-extent": "Re of closed S_lambda(r)(b) = [m_b(r), M_b(r)]",
    "classical-schwarz": "|f(z)| <= |z| for f in Hol(U,U), f(0)=0",
    "classical-schwarz-sharp": "|f(z)| = |z| for a rotation",
    "complex-harmonic-bound": "|f(z)| <= (4/pi) arctan|z| for f in Har(U,U), f(0)=0",
    "complex-harmonic-sharp": "equality in |f(z)| <= (4/pi) arctan|z| at each point",
    "distortion": "rho_S(F(z)) |grad u(z)| <= rho_U(z) for u: U -> (-1,1) harmonic",
    "harmonic-disc-bound": "|u(z)| <= (4/pi) arctan|z| for u: U -> (-1,1) harmonic, u(0)=0",
    "harmonic-disc-sharp": "equality in |u(z)| <= (4/pi) arctan|z| at each point",
    "harmonic-interval-bound": "m_b(|z|) <= u(z) <= M_b(|z|) for u: U -> (-1,1) harmonic, u(0)=b",
    "harmonic-interval-sharp": "both ends m_b(|z|), M_b(|z|) attained at each point",
    "hol-strip-bound": "|f(z)| <= (4/pi) artanh|z| for f in Hol(U,S), f(0)=0",
    "hol-strip-sharp": "equality in |f(z)| <= (4/pi) artanh|z| at each point",
    "hol-strip-derivative": "|f'(0)| <= 4/pi for f in Hol(U,S), f(0)=0",
    "hol-strip-derivative-sharp": "|f'(0)| = 4/pi for f(z) = phi(alpha z), |alpha| = 1",
    "subordination": "d_S(f(z), f(a)) <= d_U(z, a) for f in Hol(U,S)",
    "hqr-contraction": "d_S(f(z1), f(z2)) <= K d_U(z1, z2) for f in HQR_K(U,S)",
    "hqr-strip-bound": "|f(z)| <= (4/pi) K artanh|z| for f in HQR_K(U,S), f(0)=0",
    "hqr-strip-sharp": "equality in |f(z)| <= (4/pi) K artanh|z| at each point",
    "psi-K-dilatation": "psi_K = A_K o phi has dilatation K",
    "wirtinger-oracle": "closed-form (f_z, f_zbar) agree with central differences",
    "poisson-spectral": "doubling N leaves the Poisson extension of band-limited data unchanged",
}

DEFAULT_TOLERANCE = 1e-7
DEFAULT_TOLERANCES = {
    "strip-density-pullback": 1e-9,
    "strip-distance-path-oracle": 1e-6,
    "strip-euclid-lower-bound": 1e-12,
    "strip-euclid-equality-imaginary": 1e-9,
    "strip-disc-box": 1e-10,
    "lr-circle": 1e-10,
    "strip-disc-argmax": 1e-3,
    "harmonic-disc-sharp": 1e-8,
    "harmonic-interval-sharp": 1e-8,
    "classical-schwarz-sharp": 1e-8,
    "complex-harmonic-sharp": 1e-8,
    "hol-strip-sharp": 1e-8,
    "hqr-strip-sharp": 1e-8,
    "hol-strip-derivative-sharp": 1e-9,
    "subordination": 1e-9,
    "hqr-contraction": 1e-8,
    "psi-K-dilatation": 1e-6,
    "wirtinger-oracle": 1e-6,
    "poisson-spectral": 1e-9,
}


@dataclass
class Witness:
    input: str
    lhs: float
    rhs: float
    violation: float

    def to_dict(self):
        return {"input": self.input, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    claim_id: str
    paper_anchor: str
    trials: int
    seed: int
    tolerance: float
    max_violation: float
    witnesses: list = field(default_factory=list)

    @property
    def passed(self):
        return bool(self.max_violation <= self.tolerance)

    def to_dict(self):
        return {
            "claim_id": self.claim_id,
            "paper_anchor": self.paper_anchor,
            "trials": int(self.trials),
            "seed": int(self.seed),
            "tolerance": float(self.tolerance),
            "max_violation": float(self.max_violation),
            "pass": self.passed,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    @classmethod
    def from_dict(cls, d):
        wit = [Witness(w["input"], w["lhs"], w["rhs"], w["lhs"] - w["rhs"]) for w in d["witnesses"]]
        return cls(d["claim_id"], d["paper_anchor"], d["trials"], d["seed"],
                   d["tolerance"], d["max_violation"], wit)


def _sort_witnesses(ws, keep):
    ws = sorted(ws, key=lambda w: (-w.violation, w.input))
    return ws[:keep]


def merge_reports(a, b, keep=3):
    """Combine two partial reports for the same claim (associative, commutative)."""
    if a.claim_id != b.claim_id:
        raise ValueError("can only merge reports of the same claim")
    return VerificationReport(
        a.claim_id, a.paper_anchor, a.trials + b.trials, min(a.seed, b.seed),
        max(a.tolerance, b.tolerance) if a.tolerance != b.tolerance else a.tolerance,
        max(a.max_violation, b.max_violation),
        _sort_witnesses(a.witnesses + b.witnesses, keep))


class _Tracker:
    """Running max-violation with the worst few witnesses."""

    def __init__(self, claim_id, seed, tol=None, keep=3):
        self.claim_id = claim_id
        self.seed = seed
        self.tol = _tolerance(claim_id, tol)
        self.keep = keep
        self.trials = 0
        self.max_violation = -math.inf
        self.witnesses = []

    def add(self, violation, lhs, rhs, label, trials=1):
        """Record arrays of violations; ``label(i)`` describes the i-th input."""
        v = np.atleast_1d(np.asarray(violation, dtype=float))
        lhs = np.broadcast_to(np.atleast_1d(np.asarray(lhs, dtype=float)), v.shape)
        rhs = np.broadcast_to(np.atleast_1d(np.asarray(rhs, dtype=float)), v.shape)
        self.trials += trials
        if v.size == 0:
            return
        v = np.where(np.isnan(v), np.inf, v)
        top = np.argsort(-v, kind="stable")[: self.keep]
        self.max_violation = max(self.max_violation, float(v[top[0]]))
        new = [Witness(label(int(i)), float(lhs[i]), float(rhs[i]), float(v[i])) for i in top]
        self.witnesses = _sort_witnesses(self.witnesses + new, self.keep)

    def report(self):
        return VerificationReport(self.claim_id, ANCHORS[self.claim_id], self.trials,
                                  self.seed, self.tol, self.max_violation, self.witnesses)


def _tolerance(claim_id, override=None):
    if override is not None:
        return float(override)
    return DEFAULT_TOLERANCES.get(claim_id, DEFAULT_TOLERANCE)


def _rng(seed, stream):
    return np.random.default_rng([int(seed), int(stream)])


def _fmt(z):
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _random_disc_points(rng, n, radius=TEST_RADIUS):
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))


def _random_strip_points(rng, n, re_max=0.999, im_max=3.0):
    return rng.uniform(-re_max, re_max, n) + 1j * rng.uniform(-im_max, im_max, n)


# ---------------------------------------------------------------- generators

def _fine_max(coef, n=2048, real=True):
    t = np.exp(2j * np.pi * np.arange(n) / n)
    vals = P.polyval(t, coef)
    return np.real(vals) if real else vals


def _normalised_extension(rng, target=0.0):
    """Harmonic ``u`` on the disc with ``u(0) = target`` and range inside (-1, 1).

    A mean-zero seeded signal is rescaled so that ``target + s g`` stays below
    ``1 - delta`` on both sides; ``delta`` is drawn log-uniformly so some maps
    come close to the boundary of the codomain.
    """
    for _ in range(MAX_REJECTIONS):
        modes = int(rng.integers(1, 13))
        g = random_signal(int(rng.integers(2**31)), bound=1.0, modes=modes, mean_zero=True)
        delta = 10.0 ** rng.uniform(-6.0, -1.0)
        ext = HarmonicExtension(radius_cap=0.99).fit(g)
        vals = _fine_max(ext.coef_)
        hi, lo = vals.max(), -vals.min()
        s = min((1.0 - delta - target) / hi, (1.0 - delta + target) / lo)
        u = HarmonicExtension(radius_cap=0.99).fit(target + s * g.samples)
        grid = polar_grid(TEST_RADIUS, 24)
        if abs(u.predict(0.0) - target) <= 1e-12 and np.all(np.abs(u.predict(grid)) < 1.0):
            return u
    raise GeneratorStarvationError("could not generate a normalised harmonic function")


def _blaschke_inner(rng):
    """``z -> e^{i alpha} z phi_c(z)`` with random ``|c| < 1``: analytic U -> U, 0 -> 0."""
    c = 0.99 * math.sqrt(rng.uniform()) * complex(np.exp(2j * np.pi * rng.uniform()))
    rot = complex(np.exp(2j * np.pi * rng.uniform()))
    auto = build_disc_automorphism(c)

    def f(z):
        return rot * z * auto.evaluator(z)

    def df(z):
        return rot * (auto.evaluator(z) + z * auto.wirtinger_pair(z)[0])

    return f, df, f"blaschke(c={_fmt(c)},rot={_fmt(rot)})"


def _random_hol_strip(rng):
    """Normalised holomorphic map into the strip: ``(F, F', label)``."""
    if rng.uniform() < 0.5:
        u = _normalised_extension(rng)
        return u.holomorphic, u.derivative, f"schwarz_integral(N={u.n_samples_})"
    inner, dinner, label = _blaschke_inner(rng)
    phi = build_phi()

    def F(z):
        return phi.evaluator(inner(z))

    def dF(z):
        return phi.wirtinger_pair(inner(z))[0] * dinner(z)

    return F, dF, f"phi o {label}"


def _circle(n):
    return np.exp(2j * np.pi * np.arange(n) / n)


def _assembled_hqr(rng):
    """Harmonic map ``F - 2i Im g`` built from boundary samples via ``assemble_hqr``.

    ``F`` is a normalised Poisson map into the strip and ``g' = omega F'``
    with ``g(0) = 0`` and ``sup |omega| < 1/2``; then ``f_z = F'(1 - omega)``
    and ``f_zbar = conj(omega F')``, so the map is sense-preserving with
    dilatation controlled by ``omega`` alone, while ``Re f = Re F``.
    """
    for _ in range(MAX_REJECTIONS):
        u = _normalised_extension(rng)
        deg = int(rng.integers(0, 5))
        omega = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        rho = rng.uniform(0.05, 0.45)
        omega *= rho / np.abs(P.polyval(_circle(4096), omega)).max()
        g = P.polyint(P.polymul(P.polyder(u.coef_), omega))
        n = u.n_samples_
        g_v = np.imag(P.polyval(_circle(n), P.polysub(u.coef_, 2.0 * g)))
        if 2 * (g.size - 1) >= n:
            continue
        fmap = assemble_hqr(u.signal_, g_v, scale_v=1.0)
        K, ok = estimate_K(fmap, TEST_RADIUS, 48)
        # |omega / (1 - omega)| is analytic, so the largest dilatation sits on the rim
        fz, fzbar = fmap.wirtinger_pair(TEST_RADIUS * _circle(8192))
        K = max(K, float(np.max(dilatation(fz, fzbar))))
        if ok and abs(fmap.evaluator(np.array([0j]))[0]) <= 1e-12:
            fmap = dataclasses.replace(fmap, name=f"assembled_hqr(omega_max={rho:.6g})")
            return fmap, K, fmap.name
    raise GeneratorStarvationError("could not generate a sense-preserving harmonic map")


def _random_hqr(rng):
    """Normalised harmonic K-quasiregular map into the strip and its K."""
    if rng.uniform() < 0.5:
        F, dF, label = _random_hol_strip(rng)
        shear = rng.normal()
        stretch = 10.0 ** rng.uniform(0.0, 0.7)
        # A(w) = Re w + i(shear Re w + stretch Im w) = p w + q conj(w)
        p = 0.5 * (1.0 + stretch) + 0.5j * shear
        q = 0.5 * (1.0 - stretch) + 0.5j * shear
        K = (abs(p) + abs(q)) / (abs(p) - abs(q))

        def f(z):
            w = F(z)
            return w.real + 1j * (shear * w.real + stretch * w.imag)

        return f, K, f"A(shear={shear:.6g},stretch={stretch:.6g}) o {label}"
    fmap, K, label = _assembled_hqr(rng)
    return fmap.evaluator, K, label


def _random_complex_harmonic(rng):
    """Complex harmonic ``f: U -> U`` with ``f(0) = 0`` from boundary data of modulus < 1."""
    modes = int(rng.integers(1, 13))
    k = np.arange(-modes, modes + 1)
    coef = (rng.standard_normal(k.size) + 1j * rng.standard_normal(k.size)) / (1.0 + np.abs(k))
    coef[k == 0] = 0.0
    n = 256
    fine = np.exp(1j * np.outer(2 * np.pi * np.arange(8 * n) / (8 * n), k)) @ coef
    delta = 10.0 ** rng.uniform(-6.0, -1.0)
    coef *= (1.0 - delta) / np.abs(fine).max()
    samples = np.exp(1j * np.outer(2 * np.pi * np.arange(n) / n, k)) @ coef
    u = HarmonicExtension().fit(samples.real)
    v = HarmonicExtension().fit(samples.imag)

    def f(z):
        return u.predict(z) + 1j * v.predict(z)

    return f, f"complex_poisson(modes={modes})"


def _random_classical(rng):
    if rng.uniform() < 0.5:
        f, _, label = _blaschke_inner(rng)
        return f, label
    deg = int(rng.integers(0, 8))
    coef = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
    circle_max = np.abs(P.polyval(np.exp(2j * np.pi * np.arange(4096) / 4096), coef)).max()
    # z p(z) / max|p| on a fine circle grid, shrunk to absorb the grid's underestimate
    coef = coef * (1.0 - 1e-3) / circle_max

    def f(z):
        return z * P.polyval(z, coef)

    return f, f"z*poly(deg={deg})"


# ------------------------------------------------------------------- checks

def check_strip_density(seed=0, n=1000, tol=None):
    """Pullback of the strip density by phi equals the disc density."""
    tr = _Tracker("strip-density-pullback", seed, tol)
    w = _random_disc_points(_rng(seed, 1), n, radius=0.99)
    phi = build_phi()
    lhs = rho_strip(phi(w)) * np.abs(phi.derivatives(w)[0])
    rhs = rho_disc(w)
    tr.add(np.abs(lhs - rhs), lhs, rhs, lambda i: f"w={_fmt(w[i])}", trials=n)
    return tr.report()


def check_strip_distance_oracle(seed=0, n=100, segments=10_000, tol=None):
    """Closed-form strip distance against midpoint quadrature along the geodesic."""
    tr = _Tracker("strip-distance-path-oracle", seed, tol)
    rng = _rng(seed, 2)
    z1 = _random_strip_points(rng, n, 0.95, 2.0)
    z2 = _random_strip_points(rng, n, 0.95, 2.0)
    for a, b in zip(z1, z2):
        quad = path_length(strip_geodesic(a, b, segments))
        exact = dist_strip(a, b)
        tr.add(abs(quad - exact), quad, exact, lambda i: f"z1={_fmt(a)} z2={_fmt(b)}")
    return tr.report()


def check_euclid_comparison(seed=0, n=10_000, tol=None):
    """``d_S >= (pi/2) d_e`` on random strip pairs; violation is ``lower - d_S``."""
    tr = _Tracker("strip-euclid-lower-bound", seed, tol)
    rng = _rng(seed, 3)
    z1 = _random_strip_points(rng, n, 0.999, 5.0)
    z2 = _random_strip_points(rng, n, 0.999, 5.0)
    ds = dist_strip(z1, z2)
    lower = HALF_PI * np.abs(z1 - z2)
    tr.add(lower - ds, lower, ds, lambda i: f"z1={_fmt(z1[i])} z2={_fmt(z2[i])}", trials=n)
    return tr.report()


def check_euclid_equality(seed=0, n=1000, tol=None):
    tr = _Tracker("strip-euclid-equality-imaginary", seed, tol)
    rng = _rng(seed, 4)
    y1 = rng.uniform(-5.0, 5.0, n)
    y2 = rng.uniform(-5.0, 5.0, n)
    ds = dist_strip(1j * y1, 1j * y2)
    lower = HALF_PI * np.abs(y1 - y2)
    tr.add(np.abs(ds - lower), ds, lower, lambda i: f"y1={y1[i]:.17g} y2={y2[i]:.17g}", trials=n)
    return tr.report()


R_GRID = np.round(np.arange(0.05, 0.951, 0.05), 2)


def check_strip_disc_extents(seed=0, n=4096, tol_re=None, tol_box=None, tol_lr=None):
    """Real-part extent, bounding box and the auxiliary circle quantities."""
    re_tr = _Tracker("strip-disc-re-extent", seed, tol_re)
    box_tr = _Tracker("strip-disc-box", seed, tol_box)
    lr_tr = _Tracker("lr-circle", seed, tol_lr)
    for r in R_GRID:
        re_max, im_max = strip_disc_extents_closed(r)
        ext = extents_numeric(HypDisc("Strip", 0.0, lambda_of_r(r)), n)
        num = max(ext.re_max, -ext.re_min)
        re_tr.add(abs(num - re_max), num, re_max, lambda i: f"r={r:g}")
        excess = max(num - re_max, max(ext.im_max, -ext.im_min) - im_max)
        box_tr.add(excess, max(ext.im_max, -ext.im_min), im_max, lambda i: f"r={r:g}")
        lr = lr_circle(r)
        err = max(abs(lr.theta0 - 2.0 * math.atan(r)),
                  abs(lr.L0 - math.log((1.0 + r) / (1.0 - r))),
                  abs((lr.c - lr.R) * (lr.c + lr.R) - 1.0))
        lr_tr.add(err, lr.theta0, 2.0 * math.atan(r), lambda i: f"r={r:g}")
    return re_tr.report(), box_tr.report(), lr_tr.report()


LAMBDA_GRID = np.round(np.arange(0.25, 4.001, 0.25), 2)


def check_max_modulus(seed=0, n=4096, tol=None, tol_arg=None):
    mod_tr = _Tracker("strip-disc-max-modulus", seed, tol)
    arg_tr = _Tracker("strip-disc-argmax", seed, tol_arg)
    for lam in LAMBDA_GRID:
        ext = extents_numeric(HypDisc("Strip", 0.0, lam), n)
        closed = strip_disc_maxmod_closed(lam)
        mod_tr.add(abs(ext.mod_max - closed), ext.mod_max, closed, lambda i: f"lambda={lam:g}")
        target = 1j * closed
        miss = min(abs(ext.argmax_mod - target), abs(ext.argmax_mod + target))
        arg_tr.add(miss, miss, 0.0, lambda i: f"lambda={lam:g} argmax={_fmt(ext.argmax_mod)}")
    return mod_tr.report(), arg_tr.report()


B_GRID = np.round(np.linspace(-0.8, 0.8, 9), 2)
R9_GRID = np.round(np.linspace(0.1, 0.9, 9), 2)


def check_offcenter_extents(seed=0, n=4096, tol=None):
    tr = _Tracker("offcenter-re-extent", seed, tol)
    for b in B_GRID:
        for r in R9_GRID:
            m, M = offcenter_re_extent(b, r)
            ext = extents_numeric(HypDisc("Strip", b, lambda_of_r(r)), n)
            err = max(abs(ext.re_min - m), abs(ext.re_max - M))
            tr.add(err, ext.re_max, M, lambda i: f"b={b:g} r={r:g}")
    return tr.report()


def check_theorem(kind, trials=1000, seed=0, tol=None, points=16):
    """Random admissible maps of ``kind``'s class against ``bound_value``."""
    claim = {
        "classical_hol": "classical-schwarz",
        "harmonic_disc": "harmonic-disc-bound",
        "harmonic_interval": "harmonic-interval-bound",
        "hol_strip": "hol-strip-bound",
        "hqr_strip": "hqr-strip-bound",
    }[kind.name]
    tr = _Tracker(claim, seed, tol)
    rng = _rng(seed, 10 + _KIND_STREAM[kind.name])
    for _ in range(trials):
        z = _random_disc_points(rng, points)
        r = np.abs(z)
        if kind.name == "harmonic_interval":
            u = _normalised_extension(rng, target=kind.b)
            vals = u.predict(z)
            m, M = bound_value(kind, r)
            viol = np.maximum(m - vals, vals - M)
            rhs = np.where(vals - M > m - vals, M, m)
            tr.add(viol, vals, rhs, lambda i: f"u=poisson z={_fmt(z[i])}")
            continue
        if kind.name == "harmonic_disc":
            u = _normalised_extension(rng)
            vals, label = np.abs(u.predict(z)), "u=poisson"
        elif kind.name == "hol_strip":
            F, _, label = _random_hol_strip(rng)
            vals = np.abs(F(z))
        elif kind.name == "classical_hol":
            f, label = _random_classical(rng)
            vals = np.abs(f(z))
        else:
            f, K, label = _random_hqr(rng)
            vals = np.abs(f(z))
            kind_k = BoundKind.hqr_strip(K)
            bound = bound_value(kind_k, r)
            tr.add(vals - bound, vals, bound, lambda i: f"{label} K={K:.17g} z={_fmt(z[i])}")
            continue
        bound = bound_value(kind, r)
        tr.add(vals - bound, vals, bound, lambda i: f"{label} z={_fmt(z[i])}")
    return tr.report()


_KIND_STREAM = {"classical_hol": 0, "harmonic_disc": 1, "harmonic_interval": 2,
                "hol_strip": 3, "hqr_strip": 4}


def check_complex_harmonic(trials=1000, seed=0, tol=None, points=16):
    """``|f(z)| <= (4/pi) arctan|z|`` for complex harmonic self-maps of the disc."""
    tr = _Tracker("complex-harmonic-bound", seed, tol)
    rng = _rng(seed, 20)
    kind = BoundKind.harmonic_disc()
    for _ in range(trials):
        z = _random_disc_points(rng, points)
        f, label = _random_complex_harmonic(rng)
        vals = np.abs(f(z))
        bound = bound_value(kind, np.abs(z))
        tr.add(vals - bound, vals, bound, lambda i: f"{label} z={_fmt(z[i])}")
    return tr.report()


def check_sharpness(kind, n_points=50, seed=0, tol=None, claim=None):
    """Per-point extremal witnesses attain ``kind``'s bound with equality."""
    claim = claim or {
        "classical_hol": "classical-schwarz-sharp",
        "harmonic_disc": "harmonic-disc-sharp",
        "harmonic_interval": "harmonic-interval-sharp",
        "hol_strip": "hol-strip-sharp",
        "hqr_strip": "hqr-strip-sharp",
    }[kind.name]
    tr = _Tracker(claim, seed, tol)
    rng = _rng(seed, 30 + _KIND_STREAM[kind.name])
    zs = _random_disc_points(rng, n_points, radius=0.99)
    zs = np.where(zs == 0, 0.5, zs)
    for z in zs:
        r = abs(z)
        if kind.name == "harmonic_interval":
            m, M = bound_value(kind, r)
            lo = extremal_harmonic_interval(z, kind.b)(z).real
            hi = extremal_harmonic_interval(z, kind.b, upper=True)(z).real
            tr.add(abs(lo - m), lo, m, lambda i: f"b={kind.b:g} lower z={_fmt(z)}")
            tr.add(abs(hi - M), hi, M, lambda i: f"b={kind.b:g} upper z={_fmt(z)}", trials=0)
            w0 = extremal_harmonic_interval(z, kind.b)(0.0).real
            tr.add(abs(w0 - kind.b), w0, kind.b, lambda i: f"b={kind.b:g} center", trials=0)
            continue
        w = extremal_for(kind, z)
        lhs = abs(w(z))
        rhs = bound_value(kind, r)
        at0 = abs(w(0.0))
        tr.add(abs(lhs - rhs), lhs, rhs, lambda i: f"{kind.label} z={_fmt(z)}")
        tr.add(at0, at0, 0.0, lambda i: f"{kind.label} center", trials=0)
    return tr.report()


def check_distortion(trials=1000, seed=0, tol=None, grid_n=12):
    """``rho_S(F) |grad u| <= rho_U`` on a polar grid of radius 0.95."""
    tr = _Tracker("distortion", seed, tol)
    rng = _rng(seed, 40)
    grid = polar_grid(TEST_RADIUS, grid_n)
    rhs = rho_disc(grid)
    phi = build_phi()
    lhs = rho_strip(phi(grid)) * np.abs(phi.derivatives(grid)[0])
    tr.add(np.abs(lhs - rhs), lhs, rhs, lambda i: f"u=Re phi z={_fmt(grid[i])}", trials=0)
    for _ in range(trials):
        g = random_signal(int(rng.integers(2**31)), bound=1.0 - 10.0 ** rng.uniform(-6, -1),
                          modes=int(rng.integers(1, 13)))
        u = HarmonicExtension().fit(g)
        lhs = rho_strip(u.holomorphic(grid)) * u.gradient_modulus(grid)
        tr.add(lhs - rhs, lhs, rhs, lambda i: f"signal seed={g.seed} z={_fmt(grid[i])}")
    return tr.report()


def check_derivative_bound(trials=1000, seed=0, tol=None, tol_sharp=None):
    """``|f'(0)| <= 4/pi``; equality for phi composed with rotations."""
    tr = _Tracker("hol-strip-derivative", seed, tol)
    sharp = _Tracker("hol-strip-derivative-sharp", seed, tol_sharp)
    rng = _rng(seed, 50)
    bound = deriv_bound_hol_strip()
    for _ in range(trials):
        _, dF, label = _random_hol_strip(rng)
        d0 = abs(complex(np.asarray(dF(np.array([0j])))[0]))
        tr.add(d0 - bound, d0, bound, lambda i: label)
    sq = compose(build_phi(), _square())
    d_sq = abs(sq.derivatives(0.0)[0])
    tr.add(d_sq - bound, d_sq, bound, lambda i: "phi(z^2)", trials=1)
    for alpha in 2.0 * np.pi * rng.uniform(size=16):
        m = compose(build_phi(), build_rotation(alpha))
        d0 = abs(m.derivatives(0.0)[0])
        sharp.add(abs(d0 - bound), d0, bound, lambda i: f"phi(e^(i {alpha:.17g}) z)")
    return tr.report(), sharp.report()


def _square():
    from .planarmaps import build_power

    return build_power(2)


def _contraction_family(rng, K):
    """``psi_K o rotation o phi_c`` with random ``c`` and angle."""
    c = 0.9 * math.sqrt(rng.uniform()) * complex(np.exp(2j * np.pi * rng.uniform()))
    inner = compose(build_rotation(2.0 * np.pi * rng.uniform()), build_disc_automorphism(c))
    return compose(build_psi_K(K), inner)


def check_subordination(trials=1000, seed=0, tol=None, pairs=8):
    """``d_S(f(z), f(a)) <= d_U(z, a)`` for holomorphic maps into the strip."""
    tr = _Tracker("subordination", seed, tol)
    rng = _rng(seed, 60)
    phi = build_phi()
    z = _random_disc_points(rng, 64, radius=0.99)
    tr.add(np.abs(dist_strip(phi(z), 0.0) - dist_disc(z, 0.0)), dist_strip(phi(z), 0.0),
           dist_disc(z, 0.0), lambda i: f"phi a=0 z={_fmt(z[i])}", trials=0)
    for t in range(trials):
        z1 = _random_disc_points(rng, pairs)
        z2 = _random_disc_points(rng, pairs)
        if t % 2 == 0:
            f = _contraction_family(rng, 1.0)
            v1, v2, label = f(z1), f(z2), f.name
        else:
            u = HarmonicExtension().fit(random_signal(
                int(rng.integers(2**31)), bound=1.0 - 10.0 ** rng.uniform(-6, -1),
                modes=int(rng.integers(1, 13))))
            v1, v2, label = u.holomorphic(z1), u.holomorphic(z2), "schwarz_integral"
        lhs = dist_strip(v1, v2)
        rhs = dist_disc(z1, z2)
        tr.add(lhs - rhs, lhs, rhs, lambda i: f"{label} z={_fmt(z1[i])} a={_fmt(z2[i])}")
    return tr.report()


def check_hqr_contraction(K, trials=1000, seed=0, tol=None, pairs=8, assembled_every=4):
    """``d_S(f(z1), f(z2)) <= K d_U(z1, z2)`` for psi_K families and assembled maps.

    Assembled maps use their own estimated ``K_hat`` on the disc of radius
    0.95, which contains both points and the geodesic joining them.
    """
    tr = _Tracker("hqr-contraction", seed, tol)
    rng = _rng(seed, 70 + int(round(100 * K)))
    for t in range(trials):
        z1 = _random_disc_points(rng, pairs)
        z2 = _random_disc_points(rng, pairs)
        if assembled_every and t % assembled_every == assembled_every - 1:
            f, k_eff, label = _random_hqr(rng)
            v1, v2 = f(z1), f(z2)
        else:
            f = _contraction_family(rng, K)
            v1, v2, k_eff, label = f(z1), f(z2), K, f.name
        lhs = dist_strip(v1, v2)
        rhs = k_eff * dist_disc(z1, z2)
        tr.add(lhs - rhs, lhs, rhs, lambda i: f"{label} K={k_eff:.17g} z1={_fmt(z1[i])} z2={_fmt(z2[i])}")
    return tr.report()


def check_psi_dilatation(Ks=(1.0, 1.5, 2.0, 5.0), seed=0, tol=None):
    tr = _Tracker("psi-K-dilatation", seed, tol)
    for K in Ks:
        k_hat, ok = estimate_K(build_psi_K(K), 0.9, 32)
        tr.add(abs(k_hat - K) if ok else math.inf, k_hat, K, lambda i: f"K={K:g}")
    return tr.report()


def check_wirtinger_oracle(seed=0, n=50, h=1e-5, tol=None):
    """Closed-form Wirtinger pairs of every constructed map against central differences."""
    from .bounds import extremal_hqr

    tr = _Tracker("wirtinger-oracle", seed, tol)
    rng = _rng(seed, 80)
    g = random_signal(seed, 0.9, 8)
    maps = [
        build_phi(),
        build_psi_K(2.0),
        build_psi_K(5.0),
        compose(build_phi(), build_disc_automorphism(0.3 - 0.4j)),
        extremal_hqr(1.5, 0.3 + 0.6j),
        extremal_for(BoundKind.harmonic_disc(), 0.2 - 0.5j),
        assemble_hqr(g, random_signal(seed + 1, 0.5, 6), 2.0),
        _assembled_hqr(_rng(seed, 81))[0],
    ]
    for m in maps:
        z = _random_disc_points(rng, n, radius=0.9)
        fz, fzbar = m.derivatives(z)
        ez, ezbar = wirtinger_fd(m, z, h)
        err = np.maximum(np.abs(fz - ez), np.abs(fzbar - ezbar))
        tr.add(err, np.abs(fz), np.abs(ez), lambda i: f"{m.name} z={_fmt(z[i])}", trials=n)
    return tr.report()


def check_poisson_spectral(seed=0, trials=50, tol=None):
    """Doubling the sample count leaves band-limited extensions unchanged."""
    tr = _Tracker("poisson-spectral", seed, tol)
    rng = _rng(seed, 90)
    for _ in range(trials):
        s = int(rng.integers(2**31))
        modes = int(rng.integers(1, 33))
        a = random_signal(s, 0.9, modes, n_samples=128)
        b = random_signal(s, 0.9, modes, n_samples=256)
        z = _random_disc_points(rng, 32, radius=0.99)
        va = HarmonicExtension().fit(a).predict(z)
        vb = HarmonicExtension().fit(b).predict(z)
        tr.add(np.abs(va - vb), va, vb, lambda i: f"seed={s} modes={modes} z={_fmt(z[i])}")
    return tr.report()


# --------------------------------------------------------------- orchestration

@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 42
    trials: int = 1000
    sharp_points: int = 50
    tolerance: Optional[float] = None
    extents_n: int = 4096
    hqr_Ks: tuple = (1.0, 1.5, 2.0, 5.0)
    interval_bs: tuple = (-0.5, 0.0, 0.5)


def run_all(config=None):
    """Every claim once; deterministic for a fixed config."""
    c = config or VerifyConfig()
    s, t, tol = c.seed, c.trials, c.tolerance
    out = [
        check_strip_density(s, tol=tol),
        check_strip_distance_oracle(s, tol=tol),
        check_euclid_comparison(s, n=10 * t, tol=tol),
        check_euclid_equality(s, n=t, tol=tol),
        *check_strip_disc_extents(s, c.extents_n, tol, tol, tol),
        *check_max_modulus(s, c.extents_n, tol, tol),
        check_offcenter_extents(s, c.extents_n, tol),
        check_theorem(BoundKind.classical_hol(), t, s, tol),
        check_sharpness(BoundKind.classical_hol(), c.sharp_points, s, tol),
        check_complex_harmonic(t, s, tol),
        check_sharpness(BoundKind.harmonic_disc(), c.sharp_points, s, tol,
                        claim="complex-harmonic-sharp"),
        check_distortion(t, s, tol),
        check_theorem(BoundKind.harmonic_disc(), t, s, tol),
        check_sharpness(BoundKind.harmonic_disc(), c.sharp_points, s, tol),
    ]
    interval = [check_theorem(BoundKind.harmonic_interval(b), -(-t // len(c.interval_bs)), s, tol)
                for b in c.interval_bs]
    interval_sharp = [check_sharpness(BoundKind.harmonic_interval(b), c.sharp_points, s, tol)
                      for b in c.interval_bs]
    out += [_merge_all(interval), _merge_all(interval_sharp)]
    out += [
        check_theorem(BoundKind.hol_strip(), t, s, tol),
        check_sharpness(BoundKind.hol_strip(), c.sharp_points, s, tol),
        *check_derivative_bound(t, s, tol, tol),
        check_subordination(t, s, tol),
    ]
    out.append(_merge_all([check_hqr_contraction(K, -(-t // len(c.hqr_Ks)), s, tol)
                           for K in c.hqr_Ks]))
    out.append(check_theorem(BoundKind.hqr_strip(1.0), t, s, tol))
    out.append(_merge_all([check_sharpness(BoundKind.hqr_strip(K), c.sharp_points, s, tol)
                           for K in c.hqr_Ks]))
    out += [
        check_psi_dilatation(c.hqr_Ks, s, tol),
        check_wirtinger_oracle(s, tol=tol),
        check_poisson_spectral(s, tol=tol),
    ]
    return out


def _merge_all(reports):
    acc = reports[0]
    for r in reports[1:]:
        acc = merge_reports(acc, r)
    return acc


def reports_to_json(reports, seed):
    body = {
        "seed": int(seed),
        "summary": {
            "claims": len(reports),
            "passed": sum(r.passed for r in reports),
            "failed": sum(not r.passed for r in reports),
        },
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(body, indent=2, sort_keys=False) + "\n"


def reports_from_json(text):
    data = json.loads(text)
    return [VerificationReport.from_dict(d) for d in data["reports"]]
