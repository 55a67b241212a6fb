"""Tests for the theta-gallai command group."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli.main import cli


class TestAlgebraCommands:
    """Tests for mu and mult."""

    def test_mu_k2(self, runner: CliRunner) -> None:
        """Test the coefficient list of K2."""
        result = runner.invoke(cli, ["mu", "A_"])

        assert result.exit_code == 0
        assert result.stdout == "[-1, 0, 1]\n"

    def test_mult_example10(self, runner: CliRunner, example10_g6: str) -> None:
        """Test that 1 is a double root for the example graph."""
        result = runner.invoke(cli, ["mult", example10_g6, "--theta", "1/1"])

        assert result.exit_code == 0
        assert result.stdout.strip() == "2"

    def test_mult_json_input(self, runner: CliRunner, example10_json: Path) -> None:
        """Test that the JSON fixture is accepted too."""
        result = runner.invoke(cli, ["mult", str(example10_json), "--theta", "1"])
        assert result.stdout.strip() == "2"

    def test_bad_theta_is_usage_error(self, runner: CliRunner) -> None:
        """Test that malformed theta exits with status 2."""
        result = runner.invoke(cli, ["mult", "A_", "--theta", "poly:[1"])

        assert result.exit_code == 2
        assert "position" in result.output

    def test_bad_graph_is_domain_error(self, runner: CliRunner) -> None:
        """Test that malformed graph6 exits with status 1."""
        result = runner.invoke(cli, ["mu", "A"])

        assert result.exit_code == 1
        assert "Error" in result.output

    def test_vertex_cap_from_environment(
        self, runner: CliRunner, example10_g6: str
    ) -> None:
        """Test that THETA_GALLAI_MAX_N lowers the cap."""
        result = runner.invoke(
            cli, ["mu", example10_g6], env={"THETA_GALLAI_MAX_N": "5"}
        )
        assert result.exit_code == 1

    def test_max_n_option(self, runner: CliRunner, example10_g6: str) -> None:
        """Test that --max-n lowers the cap."""
        result = runner.invoke(cli, ["mu", example10_g6, "--max-n", "9"])
        assert result.exit_code == 1


class TestTheoryCommands:
    """Tests for the decomposition and operator commands."""

    def test_decompose_example10(self, runner: CliRunner, example10_g6: str) -> None:
        """Test the decomposition of the example at theta = 1."""
        result = runner.invoke(cli, ["decompose", example10_g6, "--theta", "1/1"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["A"] == [0, 1]
        assert data["mult"] == 2
        assert data["critical_components"] == [[2, 3], [4, 5], [6, 7], [8, 9]]

    def test_classify(self, runner: CliRunner) -> None:
        """Test vertex classes of P3 at zero."""
        result = runner.invoke(cli, ["classify", "Bg", "--theta", "0"])

        data = json.loads(result.stdout)
        kinds = [(row["kind"], row["special"]) for row in data["vertices"]]
        assert kinds == [
            ("essential", False),
            ("positive", True),
            ("essential", False),
        ]

    def test_dgraph_r1_json(self, runner: CliRunner, example10_g6: str) -> None:
        """Test that D_1 of the example is everything but the special pair."""
        result = runner.invoke(
            cli,
            ["dgraph", example10_g6, "--theta", "1", "--r", "1", "--format", "json"],
        )

        edges = json.loads(result.stdout)["edges"]
        assert len(edges) == 44
        assert [0, 1] not in edges

    def test_dgraph_all(self, runner: CliRunner, example10_g6: str) -> None:
        """Test that --all prints one line per shift."""
        result = runner.invoke(cli, ["dgraph", example10_g6, "--theta", "1", "--all"])

        lines = result.stdout.splitlines()
        assert [line.split()[0] for line in lines] == ["-2", "-1", "0", "1", "2"]

    def test_dgraph_exclusive_options(self, runner: CliRunner) -> None:
        """Test that --r and --all cannot be combined."""
        args = ["dgraph", "A_", "--theta", "1", "--r", "1", "--all"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 2

    def test_sgraph(self, runner: CliRunner, example10_g6: str) -> None:
        """Test that S_1 joins both special vertices to everything."""
        result = runner.invoke(
            cli, ["sgraph", example10_g6, "--theta", "1", "--format", "json"]
        )

        assert len(json.loads(result.stdout)["edges"]) == 21

    def test_nice_matching_set(self, runner: CliRunner, example10_g6: str) -> None:
        """Test the matching of the special pair of the example."""
        result = runner.invoke(
            cli, ["nice-matching", example10_g6, "--theta", "1", "--set", "0,1"]
        )

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["pairs"] == [[0, 2], [1, 4]]
        assert data["certified"]
        assert data["embedded"]

    def test_nice_matching_rejects_non_nice(
        self, runner: CliRunner, example10_g6: str
    ) -> None:
        """Test that a set that is not nice is a domain error."""
        result = runner.invoke(
            cli, ["nice-matching", example10_g6, "--theta", "1", "--set", "2,3"]
        )
        assert result.exit_code == 1

    def test_nice_sets(self, runner: CliRunner, example10_g6: str) -> None:
        """Test that the output is a list of sorted vertex lists."""
        result = runner.invoke(cli, ["nice-sets", example10_g6, "--theta", "1"])

        sets = json.loads(result.stdout)
        assert [0, 1] in sets
        assert all(s == sorted(s) and len(s) > 1 for s in sets)


class TestVerifyCommands:
    """Tests for verify, explore and replay."""

    def test_verify_writes_json(self, runner: CliRunner, temp_dir: Path) -> None:
        """Test a passing run and its report file."""
        out = temp_dir / "reports.json"
        result = runner.invoke(
            cli,
            [
                "verify",
                "--corpus",
                "atlas:max_n=4",
                "--props",
                "mu-oracle,interlacing",
                "--json",
                str(out),
            ],
        )

        assert result.exit_code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert set(data["summary"]) == {"mu-oracle", "interlacing"}

    def test_verify_is_deterministic(self, runner: CliRunner, temp_dir: Path) -> None:
        """Test that two seeded runs write identical bytes."""
        corpus = "gen:n=5,count=5,seed=7"
        args = ["verify", "--corpus", corpus, "--props", "d-partition"]
        first, second = temp_dir / "a.json", temp_dir / "b.json"
        runner.invoke(cli, [*args, "--json", str(first)])
        runner.invoke(cli, [*args, "--json", str(second)])

        assert first.read_bytes() == second.read_bytes()

    def test_verify_unknown_property(self, runner: CliRunner) -> None:
        """Test that unknown property names are a usage error."""
        result = runner.invoke(
            cli, ["verify", "--corpus", "example10", "--props", "no-such-thing"]
        )
        assert result.exit_code == 2
        assert "Unknown properties: no-such-thing" in result.output

    def test_verify_bad_corpus(self, runner: CliRunner) -> None:
        """Test that a malformed corpus spec is a usage error."""
        result = runner.invoke(cli, ["verify", "--corpus", "gen:colour=red"])
        assert result.exit_code == 2

    def test_explore_stdout(self, runner: CliRunner) -> None:
        """Test that explore prints the report document."""
        result = runner.invoke(
            cli, ["explore", "--corpus", "atlas:min_n=2,max_n=2", "--theta", "0"]
        )

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert len(data["reports"]) == 2
        assert data["reports"][0]["property"] == "iterated-d"

    @pytest.mark.parametrize("index", ["0", "3"])
    def test_replay(self, runner: CliRunner, temp_dir: Path, index: str) -> None:
        """Test that a replayed entry keeps its status."""
        out = temp_dir / "reports.json"
        runner.invoke(
            cli,
            ["verify", "--corpus", "atlas:max_n=3", "--props", "gallai"]
            + ["--json", str(out)],
        )

        result = runner.invoke(cli, ["replay", str(out), "--index", index])

        assert result.exit_code == 0
        original = json.loads(out.read_text(encoding="utf-8"))["reports"][int(index)]
        assert json.loads(result.stdout)[0]["status"] == original["status"]

    def test_replay_index_out_of_range(self, runner: CliRunner, temp_dir: Path) -> None:
        """Test that a missing index is a usage error."""
        out = temp_dir / "reports.json"
        runner.invoke(
            cli,
            ["verify", "--corpus", "atlas:max_n=1", "--props", "gallai"]
            + ["--json", str(out)],
        )

        result = runner.invoke(cli, ["replay", str(out), "--index", "99"])
        assert result.exit_code == 2

    def test_replay_unregistered_property(
        self, runner: CliRunner, temp_dir: Path
    ) -> None:
        """Test that a report naming a retired property is a usage error."""
        out = temp_dir / "reports.json"
        runner.invoke(
            cli,
            ["verify", "--corpus", "atlas:max_n=1", "--props", "gallai"]
            + ["--json", str(out)],
        )
        data = json.loads(out.read_text(encoding="utf-8"))
        data["reports"][0]["property"] = "retired"
        out.write_text(json.dumps(data), encoding="utf-8")

        result = runner.invoke(cli, ["replay", str(out), "--index", "0"])

        assert result.exit_code == 2
        assert "Unknown properties: retired" in result.output
