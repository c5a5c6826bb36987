import numpy as np
import pytest

from oracles import FOUR_OVER_PI, HARMONIC_AT_HALF, HOL_AT_03, HOL_AT_HALF, HQR2_AT_HALF
from stripschwarz import (
    BoundKind,
    InvalidParameterError,
    bound_value,
    build_phi,
    build_rotation,
    compose,
    deriv_bound_hol_strip,
    estimate_K,
    extremal_for,
    lambda_of_r,
    strip_disc_extents_closed,
    strip_disc_maxmod_closed,
)
from stripschwarz.bounds import (
    extremal_harmonic,
    extremal_harmonic_interval,
    extremal_hol,
    extremal_hqr,
)

R = np.linspace(0.01, 0.99, 99)
KINDS = [BoundKind.classical_hol(), BoundKind.harmonic_disc(), BoundKind.hol_strip(),
         BoundKind.hqr_strip(2.0), BoundKind.hqr_strip(1.0)]


class TestBoundValue:
    def test_values(self):
        assert bound_value(BoundKind.harmonic_disc(), 0.5) == pytest.approx(HARMONIC_AT_HALF, abs=1e-6)
        assert bound_value(BoundKind.hqr_strip(2), 0.5) == pytest.approx(HQR2_AT_HALF, abs=1e-6)
        assert bound_value(BoundKind.hol_strip(), 0.3) == pytest.approx(HOL_AT_03, abs=1e-9)

    def test_centre(self):
        assert bound_value(BoundKind.hol_strip(), 0.0) == 0.0
        assert bound_value(BoundKind.harmonic_interval(0.4), 0.0) == pytest.approx((0.4, 0.4), abs=1e-15)

    def test_vectorised(self):
        out = bound_value(BoundKind.hol_strip(), R)
        assert out.shape == R.shape
        m, M = bound_value(BoundKind.harmonic_interval(0.2), R)
        assert m.shape == M.shape == R.shape

    def test_exceed_r(self):
        assert np.all(bound_value(BoundKind.harmonic_disc(), R) > R)
        assert np.all(bound_value(BoundKind.hol_strip(), R) > R)
        assert bound_value(BoundKind.hol_strip(), 1e-8) / 1e-8 == pytest.approx(FOUR_OVER_PI)

    def test_agree_with_disc_extents(self):
        for r in R:
            re_max, _ = strip_disc_extents_closed(r)
            assert bound_value(BoundKind.harmonic_disc(), r) == pytest.approx(re_max, abs=1e-12)
            assert bound_value(BoundKind.hol_strip(), r) == pytest.approx(
                strip_disc_maxmod_closed(lambda_of_r(r)), abs=1e-12)

    def test_interval_reduces(self):
        m, M = bound_value(BoundKind.harmonic_interval(0.0), R)
        h = bound_value(BoundKind.harmonic_disc(), R)
        assert np.max(np.abs(m + h)) < 1e-12 and np.max(np.abs(M - h)) < 1e-12

    def test_interval_endpoints_stay_in_range(self):
        for b in (-0.9, -0.3, 0.6):
            m, M = bound_value(BoundKind.harmonic_interval(b), R)
            assert np.all((-1 < m) & (m < b) & (b < M) & (M < 1))

    @pytest.mark.parametrize("r", [-0.1, 1.0, np.nan])
    def test_rejects_r(self, r):
        with pytest.raises(InvalidParameterError):
            bound_value(BoundKind.hol_strip(), r)

    def test_rejects_kind_parameters(self):
        with pytest.raises(InvalidParameterError):
            BoundKind.harmonic_interval(1.0)
        with pytest.raises(InvalidParameterError):
            BoundKind.hqr_strip(0.9)
        with pytest.raises(InvalidParameterError):
            BoundKind("nope")


class TestDerivative:
    def test_value(self):
        assert deriv_bound_hol_strip() == pytest.approx(FOUR_OVER_PI, abs=1e-7)

    def test_attained(self):
        assert abs(build_phi().derivatives(0)[0]) == pytest.approx(deriv_bound_hol_strip(), abs=1e-9)
        f = compose(build_phi(), build_rotation(0.7))
        assert abs(f.derivatives(0)[0]) == pytest.approx(deriv_bound_hol_strip(), abs=1e-9)


class TestExtremals:
    def test_harmonic(self):
        u = extremal_harmonic(0.5)
        assert u(0.5).real == pytest.approx(HARMONIC_AT_HALF, abs=1e-6)
        assert abs(extremal_harmonic(0.5j)(0.5j)) == pytest.approx(HARMONIC_AT_HALF, abs=1e-6)
        assert u(0) == 0

    def test_hol(self):
        f = extremal_hol(0.5)
        assert abs(f(0.5)) == pytest.approx(HOL_AT_HALF, abs=1e-6)
        z = 0.3 * np.exp(1.1j)
        assert abs(extremal_hol(z)(z)) == pytest.approx(HOL_AT_03, abs=1e-9)
        assert f(0) == 0

    def test_hqr(self):
        z = 0.7 * np.exp(1j * np.linspace(0, 2 * np.pi, 50))
        assert np.max(np.abs(extremal_hqr(1.0, 0.4j)(z) - extremal_hol(0.4j)(z))) < 1e-12
        f = extremal_hqr(2.0, 0.5)
        assert abs(f(0.5)) == pytest.approx(HQR2_AT_HALF, abs=1e-5)
        k, ok = estimate_K(f, 0.9, 32)
        assert ok and k == pytest.approx(2.0, abs=1e-6)

    def test_interval(self):
        z = 0.5 * np.exp(0.4j)
        m, M = bound_value(BoundKind.harmonic_interval(0.5), 0.5)
        assert extremal_harmonic_interval(z, 0.5)(z).real == pytest.approx(m, abs=1e-8)
        assert extremal_harmonic_interval(z, 0.5, upper=True)(z).real == pytest.approx(M, abs=1e-8)
        assert extremal_harmonic_interval(z, 0.5)(0).real == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("kind", KINDS + [BoundKind.harmonic_interval(-0.3)], ids=lambda k: k.label)
    def test_attains_and_respects_bound(self, kind):
        rng = np.random.default_rng(0)
        for _ in range(5):
            z0 = np.sqrt(rng.uniform(0.01, 0.9)) * np.exp(2j * np.pi * rng.uniform())
            f = extremal_for(kind, z0)
            pts = np.sqrt(rng.uniform(0, 0.95**2, 200)) * np.exp(2j * np.pi * rng.uniform(size=200))
            vals = f(pts)
            if kind.name == "harmonic_interval":
                m, M = bound_value(kind, abs(z0))
                assert f(z0).real == pytest.approx(m, abs=1e-8)
                lo, hi = bound_value(kind, np.abs(pts))
                assert np.all(vals.real >= lo - 1e-10) and np.all(vals.real <= hi + 1e-10)
            else:
                assert abs(f(z0)) == pytest.approx(bound_value(kind, abs(z0)), abs=1e-8)
                assert np.all(np.abs(vals) <= bound_value(kind, np.abs(pts)) + 1e-10)

    def test_point_validation(self):
        with pytest.raises(InvalidParameterError):
            extremal_hol(0)
        with pytest.raises(InvalidParameterError):
            extremal_harmonic(1.0)
