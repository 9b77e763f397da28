"""Tests for the permutope command line."""

import io
import json

import pytest

from permutope.cli import EXIT_BAD_INPUT, EXIT_CAP, EXIT_OK, build_parser, run
from permutope.face import verify_theorem
from permutope.groups import symmetric_group
from permutope.report import load_report


@pytest.fixture
def cli():
    """Run the CLI in-process; returns (exit code, stdout text)."""

    def _run(*argv):
        out = io.StringIO()
        code = run(list(argv), out=out)
        return code, out.getvalue()

    return _run


@pytest.fixture
def cli_json(cli):
    def _run(*argv):
        code, text = cli(*argv, "--format", "json")
        return code, json.loads(text) if text else None

    return _run


class TestParser:

    def test_all_commands_registered(self):
        parser = build_parser()
        sub = next(a for a in parser._actions if a.dest == "command")
        assert set(sub.choices) == {
            "orbits",
            "stab",
            "barycenter",
            "dim",
            "face-test",
            "face-subgroups",
            "verify-theorem",
            "subgroups",
            "partitions",
        }

    def test_missing_command(self, cli):
        code, _ = cli()
        assert code == 2

    def test_unknown_method(self, cli):
        code, _ = cli("face-test", "S3", "--subgroup", "(1 2)", "--method", "simplex")
        assert code == 2


class TestCommands:

    def test_orbits(self, cli_json):
        code, data = cli_json("orbits", "4:(1 2);(3 4)")
        assert code == EXIT_OK
        assert data["orbit_partition"] == [[1, 2], [3, 4]]
        assert data["order"] == 4

    def test_stab(self, cli_json):
        code, data = cli_json("stab", "S3", "--partition", "1,2|3")
        assert code == EXIT_OK
        assert data["elements"] == ["()", "(1 2)"]
        assert data["stabilizer_order"] == 2

    def test_barycenter(self, cli_json):
        code, data = cli_json("barycenter", "C3")
        assert code == EXIT_OK
        assert data["barycenter"] == [["1/3"] * 3] * 3
        assert data["doubly_stochastic"] is True

    def test_barycenter_oracle_matches_formula(self, cli_json):
        _, formula = cli_json("barycenter", "D5")
        _, oracle = cli_json("barycenter", "D5", "--oracle")
        assert oracle["method"] == "oracle"
        assert oracle["barycenter"] == formula["barycenter"]

    def test_dim(self, cli_json):
        code, data = cli_json("dim", "S4")
        assert code == EXIT_OK
        assert data["affine_dimension"] == 9

    def test_face_test_non_face(self, cli_json):
        code, data = cli_json("face-test", "S3", "--subgroup", "C3")
        assert code == EXIT_OK
        assert data["combinatorial"] is False
        assert data["geometric"] is False
        assert data["agreement"] is True
        assert "certificate" not in data

    def test_face_test_face(self, cli_json):
        code, data = cli_json("face-test", "S3", "--subgroup", "(1 2)")
        assert code == EXIT_OK
        assert data["partition"] == "1,2|3"
        assert data["stabilizer_certificate"]["b"] == "3"
        assert "certificate" in data

    def test_face_test_single_method(self, cli_json):
        _, data = cli_json("face-test", "S4", "--subgroup", "(1 2)(3 4)", "--method", "comb")
        assert data["combinatorial"] is False
        assert "geometric" not in data
        assert "agreement" not in data

    def test_subgroups(self, cli_json):
        code, data = cli_json("subgroups", "C6")
        assert code == EXIT_OK
        assert data["subgroup_count"] == 4

    def test_face_subgroups(self, cli_json):
        code, data = cli_json("face-subgroups", "A4")
        assert code == EXIT_OK
        assert data["face_subgroup_count"] == 9

    def test_partitions(self, cli_json):
        code, data = cli_json("partitions", "4")
        assert code == EXIT_OK
        assert data["partition_count"] == 15


class TestVerifyTheorem:

    def test_s3_with_report(self, cli_json, tmp_path):
        path = tmp_path / "s3.json"
        code, data = cli_json("verify-theorem", "S3", "--json", str(path))
        assert code == EXIT_OK
        assert data["subgroup_count"] == 6
        assert data["face_subgroup_count"] == 5
        assert data["agreement"] is True
        assert load_report(str(path)) == verify_theorem(symmetric_group(3), description="S3")

    def test_text_output(self, cli):
        code, text = cli("verify-theorem", "D4", "--workers", "1")
        assert code == EXIT_OK
        assert "10 subgroups" in text
        assert "agreement: yes" in text

    def test_default_text_mode_header(self, cli):
        code, text = cli("verify-theorem", "S3")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "S3: degree 3, order 6"
        assert "6 subgroups, 5 face-subgroups" in text


class TestExitCodes:

    def test_bad_group(self, cli):
        code, text = cli("orbits", "X9")
        assert code == EXIT_BAD_INPUT
        assert text == ""

    def test_bad_cycle(self, cli):
        code, _ = cli("orbits", "3:(1 4)")
        assert code == EXIT_BAD_INPUT

    def test_degree_mismatch(self, cli):
        code, _ = cli("face-test", "S3", "--subgroup", "S4")
        assert code == EXIT_BAD_INPUT

    def test_not_a_subgroup(self, cli):
        code, _ = cli("face-test", "C4", "--subgroup", "(1 2)")
        assert code == EXIT_BAD_INPUT

    def test_subgroup_cap(self, cli):
        code, _ = cli("subgroups", "S6")
        assert code == EXIT_CAP

    def test_closure_cap(self, cli):
        code, _ = cli("orbits", "S8")
        assert code == EXIT_CAP

    def test_lp_cap_flag(self, cli):
        code, _ = cli("face-test", "S4", "--subgroup", "(1 2)", "--lp-cap", "10")
        assert code == EXIT_CAP

    def test_unwritable_report_path(self, cli, tmp_path):
        path = tmp_path / "missing" / "report.json"
        code, text = cli("verify-theorem", "S3", "--json", str(path))
        assert code == EXIT_BAD_INPUT
        assert text == ""
        assert not path.exists()


class TestTextMatchesJson:

    @pytest.mark.parametrize("group", ["S4", "C5", "D6"])
    def test_dimension(self, cli, cli_json, group):
        _, data = cli_json("dim", group)
        _, text = cli("dim", group)
        assert f"affine dimension: {data['affine_dimension']}" in text

    def test_barycenter_entries(self, cli, cli_json):
        _, data = cli_json("barycenter", "4:(1 2);(3 4)")
        _, text = cli("barycenter", "4:(1 2);(3 4)")
        for row in data["barycenter"]:
            for entry in row:
                assert entry in text

    def test_face_subgroup_count(self, cli, cli_json):
        _, data = cli_json("face-subgroups", "S4")
        _, text = cli("face-subgroups", "S4")
        assert f"{data['face_subgroup_count']} face-subgroups" in text
