import cmath
import json
import math

import pytest

from nckepler import cli, scattering, spectrum, wavefields


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_cli_expect_exit(capsys, argv):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    captured = capsys.readouterr()
    return info.value.code, captured.out, captured.err


class TestSpectrumCommand:
    def test_scalar_channel_energies(self, capsys):
        code, out, _ = run_cli(capsys, ["spectrum", "--s", "0,0,0", "--gamma", "1",
                                        "--jmax", "2"])
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == "1"
        assert doc["channel"] == {"s1": 0, "s2": 0, "s3": 0, "gamma": 1.0}
        energies = [row["energy"] for row in doc["payload"]]
        ch = spectrum.ChannelSpec(0, 0, 0, 1.0)
        assert energies == [spectrum.bound_energy(ch, j) for j in range(3)]
        assert energies[0] == -0.08

    def test_single_level_channel(self, capsys):
        code, out, _ = run_cli(capsys, ["spectrum", "--s", "1,1,1", "--gamma", "1",
                                        "--jmax", "3"])
        assert code == 0
        doc = json.loads(out)
        assert len(doc["payload"]) == 1
        assert doc["payload"][0]["j"] == 3
        assert doc["payload"][0]["degeneracy"] == 1

    def test_malformed_triple_exits_2(self, capsys):
        code, _, err = run_cli_expect_exit(
            capsys, ["spectrum", "--s", "1,1", "--gamma", "1", "--jmax", "2"])
        assert code == 2
        assert "--s" in err

    def test_jmax_below_threshold_exits_3(self, capsys):
        code, _, err = run_cli(capsys, ["spectrum", "--s", "2,2,2", "--gamma", "1",
                                        "--jmax", "3"])
        assert code == 3
        assert "no states" in err

    def test_csv_view(self, capsys):
        code, out, _ = run_cli(capsys, ["spectrum", "--s", "0,0,0", "--gamma", "1",
                                        "--jmax", "2", "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "j,energy,degeneracy"
        assert len(lines) == 4
        assert float(lines[1].split(",")[1]) == -0.08


class TestWavefunctionCommand:
    ARGS = ["wavefunction", "--s", "0,0,0", "--gamma", "1", "--j", "2", "--l", "2",
            "--m", "0", "--r-grid", "1:9:4", "--theta-grid", "0.4:1.1:3",
            "--phi-grid", "0.5:0.9:2"]

    def test_round_trip_values(self, capsys):
        code, out, _ = run_cli(capsys, self.ARGS)
        assert code == 0
        doc = json.loads(out)
        ch = spectrum.ChannelSpec(0, 0, 0, 1.0)
        assert len(doc["payload"]) == 4 * 3 * 2
        for row in doc["payload"]:
            expected = (wavefields.radial_wavefunction(
                ch, 2, 2, wavefields.RadialPoint(row["r"]))
                * wavefields.angular_wavefunction(
                    ch, 2, 0, wavefields.AngularDirection(row["theta"], row["phi"])))
            assert row["psi"] == expected  # bit-for-bit round trip

    def test_nodeless_ground_profile(self, capsys):
        code, out, _ = run_cli(capsys, [
            "wavefunction", "--s", "0,0,0", "--gamma", "1", "--j", "0",
            "--r-grid", "0.2:25:60", "--theta-grid", "0.7:0.7:1",
            "--phi-grid", "0.7:0.7:1"])
        assert code == 0
        values = [row["psi"] for row in json.loads(out)["payload"]]
        signs = [v > 0 for v in values]
        assert all(signs)
        peak = values.index(max(values))
        assert all(a > b for a, b in zip(values[peak:], values[peak + 1:]))

    def test_node_count_matches_n(self, capsys):
        code, out, _ = run_cli(capsys, [
            "wavefunction", "--s", "0,0,0", "--gamma", "1", "--j", "3", "--l", "0",
            "--r-grid", "0.2:60:400", "--theta-grid", "0.7:0.7:1",
            "--phi-grid", "0.7:0.7:1"])
        assert code == 0
        values = [row["psi"] for row in json.loads(out)["payload"]]
        changes = sum(1 for a, b in zip(values[:-1], values[1:]) if a * b < 0)
        assert changes == 3

    def test_ambiguous_selector_exits_2_listing_candidates(self, capsys):
        code, _, err = run_cli_expect_exit(capsys, [
            "wavefunction", "--s", "0,0,0", "--gamma", "1", "--j", "2"])
        assert code == 2
        assert "matches 3 states" in err
        assert "l=2" in err


class TestSmatrixCommand:
    def test_elements_match_library(self, capsys):
        code, out, _ = run_cli(capsys, ["smatrix", "--s", "1,1,1", "--gamma", "2",
                                        "--energy", "2", "--lmax", "8"])
        assert code == 0
        doc = json.loads(out)
        assert doc["scattering"]["rho"] == 1.0
        state = scattering.make_scattering_state(
            spectrum.ChannelSpec(1, 1, 1, 2.0), 2.0)
        for row in doc["payload"]:
            element = scattering.partial_wave_element(state, row["l"])
            assert row["re"] == element.real
            assert row["im"] == element.imag
            assert abs(complex(row["re"], row["im"])) == pytest.approx(1.0, abs=1e-12)
            assert row["phase"] == pytest.approx(cmath.phase(element), abs=1e-15)
            assert -math.pi < row["phase"] <= math.pi

    def test_large_energy_phases_shrink(self, capsys):
        # rho -> 0 as E grows, so phases approach 0
        _, out_small, _ = run_cli(capsys, ["smatrix", "--s", "0,0,0", "--gamma", "1",
                                           "--energy", "1e6", "--lmax", "4"])
        phases = [abs(r["phase"]) for r in json.loads(out_small)["payload"]]
        assert max(phases) < 1e-2

    def test_nonpositive_energy_exits_2(self, capsys):
        code, _, err = run_cli_expect_exit(capsys, [
            "smatrix", "--s", "0,0,0", "--gamma", "1", "--energy", "0"])
        assert code == 2


class TestAmplitudeCommand:
    BASE = ["amplitude", "--s", "1,1,1", "--gamma", "1", "--energy", "0.5",
            "--in-dir", "0.6,0.7", "--out-dir", "1.1,0.4"]

    def test_methods_agree(self, capsys):
        code, out_pw, _ = run_cli(capsys, self.BASE + ["--method", "partial_wave",
                                                       "--lmax", "420"])
        assert code == 0
        code, out_int, _ = run_cli(capsys, self.BASE + ["--method", "integral_rep"])
        assert code == 0
        row_pw = json.loads(out_pw)["payload"][0]
        row_int = json.loads(out_int)["payload"][0]
        f_pw = complex(row_pw["re"], row_pw["im"])
        f_int = complex(row_int["re"], row_int["im"])
        assert abs(f_pw - f_int) / abs(f_int) < 0.01
        assert row_pw["metadata"]["abel_epsilons"]
        assert row_int["metadata"]["grid_sizes"][-1] >= 128

    def test_direction_exchange_symmetry(self, capsys):
        # the angular pair sums are symmetric under swapping the two
        # directions, so the reported amplitude is as well
        swapped = ["amplitude", "--s", "1,1,1", "--gamma", "1", "--energy", "0.5",
                   "--in-dir", "1.1,0.4", "--out-dir", "0.6,0.7"]
        _, out_fwd, _ = run_cli(capsys, self.BASE + ["--lmax", "120"])
        _, out_rev, _ = run_cli(capsys, swapped + ["--lmax", "120"])
        row_fwd = json.loads(out_fwd)["payload"][0]
        row_rev = json.loads(out_rev)["payload"][0]
        assert complex(row_fwd["re"], row_fwd["im"]) == pytest.approx(
            complex(row_rev["re"], row_rev["im"]), rel=1e-12)

    def test_coincident_directions_exit_3(self, capsys):
        code, _, err = run_cli(capsys, [
            "amplitude", "--s", "1,1,1", "--gamma", "1", "--energy", "0.5",
            "--in-dir", "0.6,0.7", "--out-dir", "0.6,0.7"])
        assert code == 3
        assert "distinct" in err

    def test_malformed_angle_exits_2(self, capsys):
        code, _, _ = run_cli_expect_exit(capsys, [
            "amplitude", "--s", "1,1,1", "--gamma", "1", "--energy", "0.5",
            "--in-dir", "0.6;0.7", "--out-dir", "1.1,0.4"])
        assert code == 2

    def test_angle_outside_octant_exits_2(self, capsys):
        code, _, _ = run_cli_expect_exit(capsys, [
            "amplitude", "--s", "1,1,1", "--gamma", "1", "--energy", "0.5",
            "--in-dir", "2.0,0.7", "--out-dir", "1.1,0.4"])
        assert code == 2


class TestValidateCommand:
    def test_default_run_passes_all_suites(self, capsys):
        code, out, _ = run_cli(capsys, ["validate"])
        assert code == 0
        doc = json.loads(out)
        suites = {row["suite"] for row in doc["payload"]}
        assert suites == {"spectrum", "radial", "gram", "eigen", "smatrix",
                          "expansion", "amplitude", "quadrature"}
        assert all(row["passed"] for row in doc["payload"])

    def test_quick_suites_pass(self, capsys):
        code, out, _ = run_cli(capsys, ["validate", "--suite", "quadrature",
                                        "--suite", "smatrix"])
        assert code == 0
        doc = json.loads(out)
        assert doc["payload"]
        assert all(row["passed"] for row in doc["payload"])

    def test_single_suite_selector(self, capsys):
        code, out, _ = run_cli(capsys, ["validate", "--suite", "gram"])
        assert code == 0
        doc = json.loads(out)
        assert {row["suite"] for row in doc["payload"]} == {"gram"}

    def test_tolerance_override_propagates_and_fails(self, capsys):
        code, out, _ = run_cli(capsys, ["validate", "--suite", "gram",
                                        "--tol", "gram=1e-20"])
        assert code == 4
        doc = json.loads(out)
        assert all(row["tolerance"] == 1e-20 for row in doc["payload"])
        assert not any(row["passed"] for row in doc["payload"])


class TestDeterminismAndOutput:
    @pytest.mark.parametrize("argv", [
        ["spectrum", "--s", "1,0,2", "--gamma", "1.7", "--jmax", "6"],
        ["smatrix", "--s", "0,0,0", "--gamma", "1.3", "--energy", "0.37", "--lmax", "12"],
        ["amplitude", "--s", "1,1,1", "--gamma", "1", "--energy", "0.5",
         "--in-dir", "0.6,0.7", "--out-dir", "1.1,0.4", "--lmax", "60"],
    ])
    def test_byte_identical_reruns(self, capsys, argv):
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "table.json"
        code, out, _ = run_cli(capsys, ["spectrum", "--s", "0,0,0", "--gamma", "1",
                                        "--jmax", "1", "--out", str(target)])
        assert code == 0
        assert out == ""
        doc = json.loads(target.read_text())
        assert doc["command"] == "spectrum"

    def test_seventeen_digit_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, ["spectrum", "--s", "0,0,0", "--gamma", "1.1",
                                     "--jmax", "4"])
        ch = spectrum.ChannelSpec(0, 0, 0, 1.1)
        for row in json.loads(out)["payload"]:
            assert row["energy"] == spectrum.bound_energy(ch, row["j"])
