import json

import numpy as np
import pytest

from oracles import HOL_AT_HALF, LN3
from stripschwarz import (
    BoundKind,
    build_disc_automorphism,
    build_phi,
    build_power,
    build_psi_K,
    compose,
    dist_disc,
    dist_strip,
)
from stripschwarz import verify as V
from stripschwarz.harmonic import polar_grid
from stripschwarz.planarmaps import dilatation

SMALL = V.VerifyConfig(seed=7, trials=24, sharp_points=6, extents_n=256, hqr_Ks=(1.0, 2.0),
                       interval_bs=(-0.5, 0.5))


@pytest.fixture(scope="module")
def small_run():
    return V.run_all(SMALL)


class TestReports:
    def test_schema(self, small_run):
        d = small_run[0].to_dict()
        assert list(d) == ["claim_id", "paper_anchor", "trials", "seed", "tolerance",
                           "max_violation", "pass", "witnesses"]
        assert set(d["witnesses"][0]) == {"input", "lhs", "rhs"}

    def test_pass_matches_violation(self, small_run):
        for r in small_run:
            assert r.passed == (r.max_violation <= r.tolerance)

    def test_anchors(self, small_run):
        ids = [r.claim_id for r in small_run]
        assert len(ids) == len(set(ids))
        assert set(ids) == set(V.ANCHORS)
        assert all(r.paper_anchor == V.ANCHORS[r.claim_id] for r in small_run)

    def test_json_round_trip(self, small_run):
        text = V.reports_to_json(small_run, SMALL.seed)
        back = V.reports_from_json(text)
        assert [r.to_dict() for r in back] == [r.to_dict() for r in small_run]
        assert json.loads(text)["summary"]["claims"] == len(small_run)

    def test_merge_is_order_free(self):
        a = V.check_hqr_contraction(1.0, 8, seed=1)
        b = V.check_hqr_contraction(2.0, 8, seed=1)
        c = V.check_hqr_contraction(5.0, 8, seed=1)
        left = V.merge_reports(V.merge_reports(a, b), c)
        right = V.merge_reports(a, V.merge_reports(c, b))
        assert left.to_dict() == right.to_dict()
        assert left.trials == 24

    def test_merge_rejects_other_claims(self):
        with pytest.raises(ValueError):
            V.merge_reports(V.check_strip_density(0, n=10), V.check_euclid_equality(0, n=10))


class TestRunAll:
    def test_small_config_passes(self, small_run):
        failed = [r.claim_id for r in small_run if not r.passed]
        assert failed == []

    def test_deterministic(self, small_run):
        again = V.run_all(SMALL)
        assert V.reports_to_json(again, 7) == V.reports_to_json(small_run, 7)

    def test_seed_change_keeps_pass_set(self, small_run):
        other = V.run_all(V.VerifyConfig(**{**SMALL.__dict__, "seed": 8}))
        assert [r.passed for r in other] == [r.passed for r in small_run]

    def test_zero_tolerance_reports_witnesses(self):
        rep = V.check_strip_density(0, n=200, tol=0.0)
        assert not rep.passed and rep.witnesses
        w = rep.witnesses[0]
        assert abs(w.lhs - w.rhs) == pytest.approx(rep.max_violation)


class TestClaimExamples:
    def test_subordination_phi_is_isometry(self):
        z = polar_grid(0.95, 12)
        assert np.max(np.abs(dist_strip(build_phi()(z), 0) - dist_disc(z, 0))) < 1e-9

    def test_subordination_phi_automorphism(self):
        f = compose(build_phi(), build_disc_automorphism(0.3))
        rng = np.random.default_rng(0)
        z1 = np.sqrt(rng.uniform(0, 0.9, 1000)) * np.exp(2j * np.pi * rng.uniform(size=1000))
        z2 = np.sqrt(rng.uniform(0, 0.9, 1000)) * np.exp(2j * np.pi * rng.uniform(size=1000))
        assert np.max(dist_strip(f(z1), f(z2)) - dist_disc(z1, z2)) <= 1e-9

    def test_constant_map(self):
        assert dist_strip(0.2, 0.2) == 0

    def test_contraction_example(self):
        v = build_psi_K(2.0)(0.5j)
        assert v == pytest.approx(2j * HOL_AT_HALF, abs=1e-12)
        assert dist_strip(v, 0) == pytest.approx(2 * dist_disc(0.5j, 0), abs=1e-6)
        assert dist_disc(0.5j, 0) == pytest.approx(LN3, abs=1e-12)

    def test_contraction_psi_automorphism(self):
        f = compose(build_psi_K(2.0), build_disc_automorphism(0.4))
        rng = np.random.default_rng(1)
        z1 = np.sqrt(rng.uniform(0, 0.9, 1000)) * np.exp(2j * np.pi * rng.uniform(size=1000))
        z2 = np.sqrt(rng.uniform(0, 0.9, 1000)) * np.exp(2j * np.pi * rng.uniform(size=1000))
        assert np.max(dist_strip(f(z1), f(z2)) - 2 * dist_disc(z1, z2)) <= 1e-8

    def test_contraction_K1_matches_subordination_tolerance(self):
        tol = V.DEFAULT_TOLERANCES["subordination"]
        rep = V.check_hqr_contraction(1.0, 40, seed=3, tol=tol, assembled_every=0)
        assert rep.passed and rep.max_violation <= tol

    def test_derivative_of_phi_of_square(self):
        f = compose(build_phi(), build_power(2))
        assert f.derivatives(0.0)[0] == 0

    def test_interval_theorem(self):
        rep = V.check_theorem(BoundKind.harmonic_interval(0.5), trials=200, seed=2, tol=1e-8)
        assert rep.passed and rep.trials == 200

    def test_sharpness_witnesses(self):
        rep = V.check_sharpness(BoundKind.hol_strip(), 10, seed=0)
        assert rep.max_violation <= 1e-8
        assert all(abs(w.lhs - w.rhs) <= 1e-8 for w in rep.witnesses)


class TestGenerators:
    @pytest.mark.parametrize("target", [-0.7, 0.0, 0.5])
    def test_normalised_extension(self, target):
        rng = V._rng(0, 1)
        for _ in range(10):
            u = V._normalised_extension(rng, target)
            assert abs(u.predict(0.0) - target) <= 1e-12
            assert np.all(np.abs(u.predict(polar_grid(0.99, 30))) < 1)

    def test_hol_strip_maps_normalised(self):
        rng = V._rng(0, 2)
        for _ in range(20):
            F, dF, _ = V._random_hol_strip(rng)
            assert abs(F(np.array([0j]))[0]) <= 1e-12
            assert np.all(np.abs(F(polar_grid(0.95, 20)).real) < 1)

    def test_assembled_hqr_admission(self):
        # the declared K must dominate the dilatation on a much finer grid
        grid = polar_grid(V.TEST_RADIUS, 300)
        for seed in range(8):
            f, K, _ = V._assembled_hqr(V._rng(seed, 5))
            fz, fzbar = f.wirtinger_pair(grid)
            k_dense = dilatation(fz, fzbar)
            assert np.all(np.isfinite(k_dense))
            assert k_dense.max() <= K * (1 + 1e-9)
            assert abs(f(0.0)) <= 1e-12
            assert np.all(np.abs(f(grid).real) < 1)

    def test_random_hqr_K(self):
        rng = V._rng(1, 6)
        for _ in range(8):
            _, K, label = V._random_hqr(rng)
            assert K >= 1.0 and label
