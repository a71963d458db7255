import json
from fractions import Fraction

import pytest

import mzvkit.verification as ver
from mzvkit.algebra import Index, LinComb
from mzvkit.errors import DomainError
from mzvkit.verification import (
    CAMPAIGNS,
    CLAIM_IDS,
    OUT_OF_SCOPE_CLAIMS,
    CampaignConfig,
    campaign_for_claim,
    run_all,
    verify_asymp_dsr,
    verify_asymp_h,
    verify_asymp_li,
    verify_asymp_shuffle,
    verify_edsr,
    verify_flat_natural,
    verify_harmonic,
    verify_lemma_r,
    verify_msw,
)

FAST = CampaignConfig(max_weight=2, msw_max_weight=3, harmonic_pairs=10, harmonic_n=30)


class TestConfig:
    def test_schedule_must_increase(self):
        with pytest.raises(ValueError):
            CampaignConfig(n_schedule=(16, 16))

    def test_tolerances_must_be_positive(self):
        with pytest.raises(ValueError):
            CampaignConfig(edsr_tol=0.0)

    def test_workers_positive(self):
        with pytest.raises(ValueError):
            CampaignConfig(workers=0)


class TestCampaignsPass:
    def test_msw(self):
        (report,) = verify_msw(FAST)
        assert report.passed
        # compositions of weights 1..3 across the schedule entries <= 60
        assert len(report.cases) == 7 * sum(1 for n in FAST.n_schedule if n <= 60)

    def test_msw_cost_guard(self):
        with pytest.raises(DomainError):
            verify_msw(CampaignConfig(msw_max_weight=9))

    def test_harmonic(self):
        (report,) = verify_harmonic(FAST)
        assert report.passed and len(report.cases) == 10

    def test_flat_natural(self):
        (report,) = verify_flat_natural(FAST)
        assert report.passed

    def test_lemma_r(self):
        reports = verify_lemma_r(FAST)
        assert [r.claim_id for r in reports] == ["lemma-R-i", "lemma-R-ii", "lemma-R-iii"]
        assert all(r.passed for r in reports)
        sentinels = [c for c in reports[0].cases if c.key.startswith("sentinel")]
        assert len(sentinels) == 2 and all(c.passed for c in sentinels)

    def test_asymp_shuffle(self):
        (report,) = verify_asymp_shuffle(FAST)
        assert report.passed
        trivial = [c for c in report.cases if c.inputs["w1"] == ""]
        assert trivial and all(c.passed for c in trivial)

    def test_asymp_dsr(self):
        (report,) = verify_asymp_dsr(FAST)
        assert report.passed

    def test_asymp_h(self):
        (report,) = verify_asymp_h(FAST)
        assert report.passed
        assert any(c.key == "sentinel-harmonic-gamma" for c in report.cases)

    def test_asymp_li(self):
        (report,) = verify_asymp_li(FAST)
        assert report.passed

    def test_edsr(self):
        star, sh = verify_edsr(FAST)
        assert star.claim_id == "thm-edsr-star" and sh.claim_id == "thm-edsr-sh"
        assert star.passed and sh.passed

    def test_minimal_weight_one_config(self):
        cfg = CampaignConfig(max_weight=1)
        star, sh = verify_edsr(cfg)
        assert star.passed and sh.passed


class TestSoundness:
    def test_corrupted_flat_sum_fails_msw(self, monkeypatch):
        original = ver.fs.zeta_flat

        def corrupted(k, n):
            value = original(k, n)
            if k.parts == (1, 2) and n == 16:
                return value + Fraction(1, 10 ** 9)
            return value

        monkeypatch.setattr(ver.fs, "zeta_flat", corrupted)
        (report,) = verify_msw(FAST)
        assert not report.passed
        bad = [c for c in report.cases if not c.passed]
        assert bad and all("1,2" in c.inputs["index"] for c in bad)

    def test_corrupted_product_fails_harmonic(self, monkeypatch):
        original = ver.harmonic

        def corrupted(x, y):
            result = original(x, y)
            return result + LinComb.of_index(Index((1, 1, 1, 1, 1, 1, 1)), Fraction(1, 7))

        monkeypatch.setattr(ver, "harmonic", corrupted)
        (report,) = verify_harmonic(FAST)
        assert not report.passed

    def test_sabotaged_tolerance_is_rejected(self):
        with pytest.raises(ValueError):
            CampaignConfig(edsr_tol=-1.0)


class TestCatalog:
    def test_every_claim_maps_to_one_campaign(self):
        seen = {}
        for name, _, claims in CAMPAIGNS:
            for claim in claims:
                assert claim not in seen, f"{claim} owned twice"
                seen[claim] = name
        expected = {
            "prop-asymp-H",
            "prop-asymp-Li",
            "thm-edsr-star",
            "thm-edsr-sh",
            "thm-msw",
            "lemma-R-i",
            "lemma-R-ii",
            "lemma-R-iii",
            "prop-flat-natural",
            "prop-asymp-shuffle",
            "thm-main",
            "fact-harmonic-product",
        }
        assert set(seen) == expected
        assert "thm-regularization-rho" in OUT_OF_SCOPE_CLAIMS
        assert set(CLAIM_IDS) == expected | set(OUT_OF_SCOPE_CLAIMS)

    def test_routing(self):
        assert campaign_for_claim("thm-msw") is verify_msw
        assert campaign_for_claim("lemma-R-ii") is verify_lemma_r
        with pytest.raises(DomainError):
            campaign_for_claim("thm-regularization-rho")
        with pytest.raises(DomainError):
            campaign_for_claim("no-such-claim")


class TestReports:
    def test_json_schema_fields(self):
        (report,) = verify_flat_natural(FAST)
        data = json.loads(report.to_json())
        assert set(data) == {"claimId", "parameters", "cases", "verdict", "elapsedMs"}
        assert data["elapsedMs"] is None
        assert all({"case", "inputs", "passed"} <= set(c) for c in data["cases"])

    def test_csv_export(self):
        (report,) = verify_flat_natural(FAST)
        lines = report.to_csv().strip().splitlines()
        assert lines[0] == "case,passed,detail"
        assert len(lines) == len(report.cases) + 1

    def test_run_all_writes_deterministic_reports(self, tmp_path):
        cfg_a = CampaignConfig(
            max_weight=2, msw_max_weight=2, harmonic_pairs=5, harmonic_n=20, out_dir=str(tmp_path / "a")
        )
        cfg_b = CampaignConfig(
            max_weight=2, msw_max_weight=2, harmonic_pairs=5, harmonic_n=20, out_dir=str(tmp_path / "b")
        )
        reports_a, status_a = run_all(cfg_a)
        reports_b, status_b = run_all(cfg_b)
        assert status_a == status_b == 0
        files_a = sorted(p.name for p in (tmp_path / "a").iterdir())
        files_b = sorted(p.name for p in (tmp_path / "b").iterdir())
        assert files_a == files_b and "summary.json" in files_a
        for name in files_a:
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_run_all_covers_catalog(self, tmp_path):
        cfg = CampaignConfig(
            max_weight=1, msw_max_weight=2, harmonic_pairs=5, harmonic_n=10, out_dir=str(tmp_path)
        )
        reports, status = run_all(cfg)
        assert status == 0
        claim_ids = {r.claim_id for r in reports}
        assert claim_ids == set(CLAIM_IDS) - set(OUT_OF_SCOPE_CLAIMS)
        summary = json.loads((tmp_path / "summary.json").read_text())
        assert summary["verdict"] == "pass"
        assert "thm-regularization-rho" in summary["outOfScope"]

    def test_csv_format_run(self, tmp_path):
        cfg = CampaignConfig(
            max_weight=1,
            msw_max_weight=2,
            harmonic_pairs=5,
            harmonic_n=10,
            out_dir=str(tmp_path),
            out_format="csv",
        )
        run_all(cfg)
        assert (tmp_path / "thm-msw.csv").exists()

    def test_workers_do_not_change_results(self):
        serial = verify_asymp_dsr(FAST)[0]
        threaded = verify_asymp_dsr(CampaignConfig(max_weight=2, workers=4))[0]
        assert serial.to_json() == threaded.to_json()
