"""Tests for the report and corpus models."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from src.verification.models import CorpusSpec, PropertyReport, Status


class TestPropertyReport:
    """Tests for PropertyReport."""

    def test_fail_needs_witness(self) -> None:
        """Test that a failed report without a witness is rejected."""
        with pytest.raises(ValidationError) as exc_info:
            PropertyReport(graph="A_", property="gallai", status=Status.FAIL)

        assert "no witness" in str(exc_info.value)

    def test_informational_failure_does_not_count(self) -> None:
        """Test that informational failures are not suite failures."""
        report = PropertyReport(
            graph="A_",
            property="closed-form-d",
            status=Status.FAIL,
            informational=True,
            witness={"missing": [[0, 1]]},
        )
        assert not report.is_failure

    def test_status_values(self) -> None:
        """Test the serialized status names."""
        assert [s.value for s in Status] == [
            "pass",
            "fail",
            "premise-skipped",
            "cap-skipped",
        ]


class TestCorpusSpec:
    """Tests for the corpus notation."""

    def test_gen_single_size(self) -> None:
        """Test that n= fixes both ends of the size range."""
        spec = CorpusSpec.parse("gen:n=8,p=0.4,seed=7,count=500")

        assert spec.source == "gen"
        assert (spec.min_n, spec.max_n) == (8, 8)
        assert spec.p == 0.4
        assert spec.seed == 7
        assert spec.count == 500

    def test_atlas_range(self) -> None:
        """Test atlas bounds."""
        spec = CorpusSpec.parse("atlas:min_n=3,max_n=5")
        assert (spec.source, spec.min_n, spec.max_n) == ("atlas", 3, 5)

    def test_example10(self) -> None:
        """Test that example10 needs no options."""
        spec = CorpusSpec.parse("example10")
        assert spec.source == "example10"
        assert spec.describe() == "example10"

    def test_file_path(self) -> None:
        """Test that anything else is a graph6 file."""
        spec = CorpusSpec.parse("corpora/small.g6")
        assert spec.source == "file"
        assert spec.path == Path("corpora/small.g6")

    def test_unknown_option(self) -> None:
        """Test that unknown options are rejected."""
        with pytest.raises(ValueError) as exc_info:
            CorpusSpec.parse("gen:q=3")

        assert "Unknown corpus option" in str(exc_info.value)

    def test_inverted_range(self) -> None:
        """Test that min_n above max_n is rejected."""
        with pytest.raises(ValueError):
            CorpusSpec.parse("atlas:min_n=6,max_n=4")

    def test_atlas_beyond_seven_vertices(self) -> None:
        """Test that the atlas source refuses orders it does not hold."""
        with pytest.raises(ValueError) as exc_info:
            CorpusSpec.parse("atlas:max_n=9")

        assert "atlas stops at 7 vertices" in str(exc_info.value)
        assert CorpusSpec.parse("gen:max_n=9,count=1").max_n == 9

    def test_probability_bounds(self) -> None:
        """Test that p must lie in [0, 1]."""
        with pytest.raises(ValidationError):
            CorpusSpec.parse("gen:p=1.5")
