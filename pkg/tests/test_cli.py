"""tests/test_cli.py"""
import io
import json
import math

import numpy as np
import pytest
from unittest.mock import patch

from src.barrlund.exponent import PExponent
from src.cli.levelset import bounding_box, clip_polyline, metric_evaluator, write_csv
from src.cli.main import EXIT_FAILED, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main
from src.geometry.domains import Disk, ExteriorUnitDisk, UnitDisk, UpperHalfPlane
from src.utils.errors import BadConfigurationError, UnsupportedDomainError
from src.validation.report import VerificationReport
from src.validation.suites import SUITES

DISK = UnitDisk()


def _report(passed: bool = True) -> VerificationReport:
    return VerificationReport(
        suite="sandwich", trials=10, seed=1, worst_margin=0.0 if passed else -0.5,
        witness=[0.5j], passed=passed, runtime_ms=12,
    )


def _rows(out: str) -> list[list[complex]]:
    """Polylines of a levelset CSV, header dropped."""
    lines = out.splitlines()
    assert lines[0] == "level,x,y"
    polylines, current = [], []
    for line in lines[1:]:
        if not line:
            polylines.append(current)
            current = []
            continue
        _, x, y = line.split(",")
        current.append(complex(float(x), float(y)))
    if current:
        polylines.append(current)
    return polylines


class TestDist:
    def test_disk_radial(self, capsys):
        code = main(["dist", "--domain", "disk", "--p", "2", "--z1", "0.3,0", "--z2", "0.5,0"])
        assert code == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == pytest.approx(0.2 / math.sqrt(0.74), rel=1e-12)
        assert set(doc) == {"value", "extremal_point", "method", "residual"}

    def test_halfplane_infinity(self, capsys):
        code = main(["dist", "--domain", "halfplane", "--p", "inf", "--z1", "0,1", "--z2", "2,1"])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["value"] == pytest.approx(math.sqrt(2.0), rel=1e-12)

    def test_other_metrics(self, capsys):
        assert main(["dist", "--metric", "m", "--z1", "0.3,0", "--z2", "0.5,0"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["value"] == pytest.approx(1.0 / 6.0)
        assert main(["dist", "--metric", "rho", "--z1", "0,0", "--z2", "0.5,0"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["value"] == pytest.approx(math.log(3.0))

    def test_invalid_requests(self):
        assert main(["dist", "--z1", "2,0", "--z2", "0,0"]) == EXIT_INVALID
        assert main(["dist", "--p", "0.5", "--z1", "0.1,0", "--z2", "0,0"]) == EXIT_INVALID
        assert main(["dist", "--p", "nan", "--z1", "0.1,0", "--z2", "0,0"]) == EXIT_INVALID
        assert main(["dist", "--domain", "halfplane", "--metric", "m", "--z1", "0,1", "--z2", "1,1"]) == EXIT_INVALID
        assert main(["dist", "--domain", "polygon", "--z1", "0,1", "--z2", "1,1"]) == EXIT_INVALID

    def test_bad_arguments(self):
        for argv in (
            ["dist", "--z1", "abc", "--z2", "0,0"],
            ["dist", "--p", "two", "--z1", "0,0", "--z2", "0.1,0"],
            ["dist", "--domain", "torus", "--z1", "0,0", "--z2", "0.1,0"],
            ["nope"],
        ):
            with pytest.raises(SystemExit) as exc:
                main(argv)
            assert exc.value.code == EXIT_USAGE


class TestPhi:
    def test_identity(self, capsys):
        assert main(["phi", "--K", "1", "--r", "0.5"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["phi"] == 0.5
        assert doc["bound"] == pytest.approx(0.5)

    def test_out_of_range(self):
        assert main(["phi", "--K", "0.5", "--r", "0.5"]) == EXIT_INVALID
        assert main(["phi", "--K", "2", "--r", "1"]) == EXIT_INVALID


class TestVerify:
    @patch("src.cli.main.run_suite")
    def test_passing_suite(self, mock_run, capsys):
        mock_run.return_value = _report()
        assert main(["verify", "--suite", "sandwich", "--trials", "10"]) == EXIT_OK
        mock_run.assert_called_once_with("sandwich", 10, 1)
        assert json.loads(capsys.readouterr().out)["runtime_ms"] is None

    @patch("src.cli.main.run_suite")
    def test_timing(self, mock_run, capsys):
        mock_run.return_value = _report()
        main(["verify", "--suite", "sandwich", "--timing"])
        assert json.loads(capsys.readouterr().out)["runtime_ms"] == 12

    @patch("src.cli.main.run_suite")
    def test_failing_suite(self, mock_run, capsys):
        mock_run.return_value = _report(passed=False)
        assert main(["verify", "--suite", "sandwich"]) == EXIT_FAILED
        assert json.loads(capsys.readouterr().out)["passed"] is False

    @patch("src.cli.main.run_suite")
    def test_all_streams_every_suite(self, mock_run, capsys):
        mock_run.return_value = _report()
        assert main(["verify", "--trials", "5", "--seed", "3"]) == EXIT_OK
        assert [c.args[0] for c in mock_run.call_args_list] == list(SUITES)
        assert len(capsys.readouterr().out.splitlines()) == len(SUITES)

    @patch("src.cli.main.run_suite")
    def test_numpy_report_fields(self, mock_run, capsys):
        mock_run.return_value = VerificationReport(
            suite="m-disk", trials=3, seed=1, worst_margin=np.float64(0.125),
            witness=[np.complex128(0.5j), np.float64(2.0)], passed=np.bool_(True),
        )
        assert main(["verify", "--suite", "m-disk", "--trials", "3"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["passed"] is True
        assert doc["witness"] == [[0.0, 0.5], 2.0]

    def test_zero_trials(self):
        assert main(["verify", "--suite", "sandwich", "--trials", "0"]) == EXIT_INVALID

    def test_unknown_suite(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "nope"])
        assert exc.value.code == EXIT_USAGE

    @patch("src.cli.main.run_suite")
    def test_search(self, mock_run):
        mock_run.return_value = _report()
        assert main(["search", "--conjecture", "artanh", "--seed", "4"]) == EXIT_OK
        mock_run.assert_called_once_with("conjecture-artanh", 100_000, 4)


class TestLevelsetCommand:
    def test_disk_level_one_reaches_boundary(self, capsys):
        code = main(["levelset", "--center", "0.3,0", "--levels", "1", "--grid", "40"])
        assert code == EXIT_OK
        polylines = _rows(capsys.readouterr().out)
        assert polylines
        points = [z for run in polylines for z in run]
        assert all(abs(z) <= 1 + 1e-9 for z in points)
        # the level-1 curve ends near ±1
        assert min(abs(z - 1) for z in points) < 0.15
        assert min(abs(z + 1) for z in points) < 0.15

    def test_triangular_ratio_stays_inside(self, capsys):
        code = main(["levelset", "--metric", "s", "--levels", "0.5", "--grid", "40"])
        assert code == EXIT_OK
        polylines = _rows(capsys.readouterr().out)
        assert polylines
        assert all(abs(z) < 1 for run in polylines for z in run)

    def test_invalid_levels_and_grid(self):
        assert main(["levelset", "--levels", "0.6,0.4"]) == EXIT_INVALID
        assert main(["levelset", "--levels", "-1"]) == EXIT_INVALID
        assert main(["levelset", "--levels", "0.5", "--grid", "8"]) == EXIT_INVALID
        assert main(["levelset", "--center", "2,0", "--levels", "0.5"]) == EXIT_INVALID


class TestLevelsetHelpers:
    def test_bounding_box(self):
        assert bounding_box(DISK, 0j) == (-1.0, 1.0, -1.0, 1.0)
        assert bounding_box(UpperHalfPlane(), 3j) == (-12.0, 12.0, 0.0, 24.0)
        assert bounding_box(Disk(center=1 + 1j, radius=2.0), 1 + 1j) == (-1.0, 3.0, -1.0, 3.0)

    def test_clip_polyline(self):
        (run,) = clip_polyline(DISK, [0j, 0.5 + 0j, 1.5 + 0j])
        assert run[:2] == [0j, 0.5 + 0j]
        assert run[-1] == pytest.approx(1.0, abs=1e-12) and abs(run[-1]) < 1
        runs = clip_polyline(DISK, [0.1 + 0j, 2 + 0j, 0.2 + 0j])
        assert len(runs) == 2
        assert runs[1][0] == pytest.approx(1.0, abs=1e-12)
        assert clip_polyline(DISK, [2 + 0j, 3 + 0j]) == []

    def test_write_csv(self):
        stream = io.StringIO()
        write_csv([(0.5, [0j, 1 + 2j]), (1.0, [0.25j, 0.5 + 0j])], stream)
        assert stream.getvalue() == "level,x,y\n0.5,0,0\n0.5,1,2\n\n1,0,0.25\n1,0.5,0\n"

    def test_metric_evaluator(self):
        p = PExponent(2.0)
        assert metric_evaluator("s", DISK, p)(0, 0.5).value == pytest.approx(1.0 / 3.0)
        with pytest.raises(BadConfigurationError):
            metric_evaluator("zzz", DISK, p)
        with pytest.raises(UnsupportedDomainError):
            metric_evaluator("rho", ExteriorUnitDisk(), p)
