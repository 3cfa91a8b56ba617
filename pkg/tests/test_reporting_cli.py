import numpy as np
import pytest

from tidalclock import (SweepAxis, SweepSpec, TransitReport, build_report,
                        check_invariants, csv_header, csv_row, run_sweep)
from tidalclock.cli import main


class TestBuildReport:
    def test_free_point_all_engines_agree(self):
        rep = build_report(5.0, 0.0)
        for name in ("t_classical_exact", "t_classical_pert",
                     "t_quantum_peres", "t_highk"):
            assert getattr(rep, name) == pytest.approx(0.4, rel=1e-8)
        assert rep.theta_exact == 0.0
        assert not rep.errors
        assert check_invariants(rep) == []

    def test_tidal_point_consistent(self):
        rep = build_report(5.0, -0.02)
        assert rep.t_prime_measured == pytest.approx(rep.t_prime_closed,
                                                     abs=1e-6 * 0.4)
        assert rep.quantum_regime is False
        assert check_invariants(rep) == []

    def test_quantum_regime_flagged(self):
        rep = build_report(0.8, -0.02, engines=("classical", "perturbation"))
        assert rep.quantum_regime is True
        assert check_invariants(rep) == []

    def test_engine_subsets_leave_na(self):
        rep = build_report(5.0, -0.02, engines=("classical",))
        assert rep.t_quantum_peres is None
        assert rep.t_prime_closed is None
        row = csv_row(rep)
        assert ",NA," in row

    def test_unknown_engine(self):
        with pytest.raises(ValueError, match="unknown engines"):
            build_report(5.0, 0.0, engines=("classical", "quantumfoam"))

    def test_engine_error_recorded_not_raised(self):
        # synthetic positive tide with a turning point: classical refuses
        rep = build_report(1.0, 4.0, engines=("classical", "perturbation"))
        assert "classical" in rep.errors
        assert rep.t_classical_exact is None

    def test_wavepacket_engine_column(self):
        rep = build_report(20.0, -0.02, engines=("classical", "wavepacket"))
        assert rep.t_wavepacket == pytest.approx(rep.t_classical_exact,
                                                 rel=0.02)
        assert not rep.errors

    def test_wavepacket_engine_low_k_guard(self):
        rep = build_report(2.0, 0.0, engines=("wavepacket",))
        assert "wavepacket" in rep.errors
        assert rep.t_wavepacket is None

    def test_invariant_checker_catches_bad_rows(self):
        rep = TransitReport(kappa=5.0, atilde=-0.02,
                            t_classical_pert=0.4, t_highk=0.41)
        assert any("high-k" in v for v in check_invariants(rep))
        rep = TransitReport(kappa=5.0, atilde=0.0, theta_exact=1e-3)
        assert any("free case" in v for v in check_invariants(rep))


class TestSweep:
    def test_spec_validation(self):
        with pytest.raises(ValueError):
            SweepSpec(axis=SweepAxis.KAPPA, lo=5.0, hi=1.0, points=5)
        with pytest.raises(ValueError):
            SweepSpec(axis=SweepAxis.KAPPA, lo=1.0, hi=5.0, points=1)
        with pytest.raises(ValueError):
            SweepSpec(axis=SweepAxis.KAPPA, lo=-1.0, hi=5.0, points=3,
                      scale="log")

    def test_negative_log_atilde_axis(self):
        spec = SweepSpec(axis=SweepAxis.ATILDE, lo=-0.04, hi=-0.005,
                         points=4, scale="log", fixed=5.0,
                         engines=("perturbation",))
        vals = spec.values()
        assert vals[0] == pytest.approx(-0.04)
        assert vals[-1] == pytest.approx(-0.005)
        assert np.all(np.diff(vals) > 0)  # ascending axis order

    def test_two_point_sweep_file(self, tmp_path):
        out = tmp_path / "sweep.csv"
        spec = SweepSpec(axis=SweepAxis.KAPPA, lo=2.0, hi=5.0, points=2,
                         fixed=-0.02, engines=("classical", "perturbation"))
        run_sweep(spec, out)
        lines = out.read_text().splitlines()
        assert lines[0] == csv_header()
        data = [l for l in lines[1:] if l and not l.startswith("#")]
        footer = [l for l in lines[1:] if l.startswith("#")]
        assert len(data) == 2
        assert footer, "footer metadata missing"
        assert any("artifact_version" in l for l in footer)

    def test_deterministic_bytes(self, tmp_path):
        spec = SweepSpec(axis=SweepAxis.KAPPA, lo=2.0, hi=8.0, points=3,
                         fixed=-0.02, engines=("classical", "stationary",
                                               "perturbation"))
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run_sweep(spec, a)
        run_sweep(spec, b)
        assert a.read_bytes() == b.read_bytes()

    def test_theta_columns_linear_in_tide(self, tmp_path):
        spec = SweepSpec(axis=SweepAxis.ATILDE, lo=-0.04, hi=-0.01, points=4,
                         fixed=5.0, engines=("perturbation",))
        reports = run_sweep(spec)
        atildes = np.array([r.atilde for r in reports])
        thetas = np.array([r.theta_firstorder for r in reports])
        coeffs = np.polyfit(atildes, thetas, 1)
        fit_residual = thetas - np.polyval(coeffs, atildes)
        assert np.max(np.abs(fit_residual)) < 1e-12


class TestCli:
    def test_report_scaled_free(self, capsys):
        code = main(["report", "--scaled", "--kappa", "5", "--atilde", "0"])
        out = capsys.readouterr().out
        assert code == 0
        assert "t_quantum_peres" in out
        assert csv_header() in out

    def test_report_csv_file(self, tmp_path, capsys):
        out = tmp_path / "row.csv"
        code = main(["report", "--scaled", "--kappa", "5",
                     "--atilde", "-0.02", "--csv", str(out)])
        assert code == 0
        assert out.read_text().startswith(csv_header())

    def test_report_requires_scenario(self, capsys):
        assert main(["report"]) == 1
        assert "error" in capsys.readouterr().err

    def test_report_engine_error_exit(self, capsys):
        # turning point: classical engine refuses, exit 1, values printed
        code = main(["report", "--scaled", "--kappa", "1", "--atilde", "4",
                     "--engines", "classical"])
        out = capsys.readouterr().out
        assert code == 1
        assert "classical error" in out

    def test_report_config(self, tmp_path, capsys):
        cfg = tmp_path / "scen.cfg"
        cfg.write_text("grav_const = 0.01\ncentral_mass = 1\n"
                       "central_radius = 1\nparticle_mass = 1\n"
                       "baseline_b = 1\nhbar = 1\nwavenumber_k = 5\n")
        assert main(["report", "--config", str(cfg),
                     "--engines", "classical,perturbation"]) == 0

    def test_report_dimensional_flags(self, capsys):
        code = main(["report", "--grav_const", "0.01", "--central_mass", "1",
                     "--central_radius", "1", "--particle_mass", "1",
                     "--baseline_b", "1", "--hbar", "1",
                     "--wavenumber_k", "5", "--engines", "classical"])
        assert code == 0

    def test_sweep_cli(self, tmp_path):
        out = tmp_path / "s.csv"
        code = main(["sweep", "--axis", "kappa", "--lo", "2", "--hi", "5",
                     "--points", "2", "--fixed", "-0.02",
                     "--engines", "classical,perturbation",
                     "--output", str(out)])
        assert code == 0
        assert out.exists()

    def test_sweep_bad_spec(self, capsys):
        assert main(["sweep", "--axis", "kappa", "--lo", "5", "--hi", "2",
                     "--points", "2", "--output", "/tmp/x.csv"]) == 1

    def test_wavepacket_cli(self, tmp_path, capsys):
        flux = tmp_path / "flux.csv"
        code = main(["wavepacket", "--scaled", "--kappa", "20",
                     "--atilde", "0", "--nodes-per-unit", "128",
                     "--flux-csv", str(flux)])
        out = capsys.readouterr().out
        assert code == 0
        assert "arrival_time" in out
        assert flux.read_text().startswith("t,flux")

    def test_unknown_engine_exit(self, capsys):
        assert main(["report", "--scaled", "--kappa", "5", "--atilde", "0",
                     "--engines", "nope"]) == 1
