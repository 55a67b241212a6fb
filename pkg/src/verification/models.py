"""Pydantic models for verification reports and corpus descriptions."""

from enum import StrEnum
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

# Largest order in the networkx graph atlas
ATLAS_MAX_N = 7


class Status(StrEnum):
    """Outcome of one property on one (graph, theta) instance."""

    PASS = "pass"
    FAIL = "fail"
    PREMISE_SKIPPED = "premise-skipped"
    CAP_SKIPPED = "cap-skipped"


class PropertyReport(BaseModel):
    """One checked (graph, theta, property) instance.

    Attributes:
        graph: graph6 encoding of the instance
        theta: JSON form of theta, or None for theta-independent properties
        property: Registered property name
        status: pass, fail, premise-skipped or cap-skipped
        informational: Findings that never fail the suite
        witness: Offending pair/subset/path with expected and actual values
        detail: Short human-readable note
    """

    graph: str
    theta: dict[str, Any] | None = None
    property: str
    status: Status
    informational: bool = False
    witness: dict[str, Any] | None = None
    detail: str = ""

    @model_validator(mode="after")
    def _fail_has_witness(self) -> "PropertyReport":
        if self.status is Status.FAIL and not self.witness:
            msg = f"Failed report for {self.property} on {self.graph} has no witness"
            raise ValueError(msg)
        return self

    @property
    def is_failure(self) -> bool:
        """Whether this entry fails the suite."""
        return self.status is Status.FAIL and not self.informational


class CorpusSpec(BaseModel):
    """Where verification graphs come from.

    Text forms accepted by :meth:`parse`:
        ``atlas`` or ``atlas:min_n=3,max_n=6`` for every graph up to 7 vertices,
        ``gen:n=8,p=0.4,seed=7,count=500`` (or ``min_n``/``max_n``) for seeded
        G(n, p) samples, ``example10`` for the ten-vertex example, and any other
        text as the path of a graph6 file.

    Attributes:
        source: atlas, gen, file or example10
        path: graph6 file for the file source
        min_n: Smallest vertex count
        max_n: Largest vertex count
        p: Edge probability for generated graphs
        count: Number of generated graphs
        seed: Seed for generated graphs
    """

    source: Literal["atlas", "gen", "file", "example10"]
    path: Path | None = None
    min_n: int = Field(default=1, ge=0)
    max_n: int = Field(default=7, ge=0)
    p: float = Field(default=0.5, ge=0.0, le=1.0)
    count: int = Field(default=100, ge=0)
    seed: int = 0

    @model_validator(mode="after")
    def _check_range(self) -> "CorpusSpec":
        if self.min_n > self.max_n:
            msg = f"min_n={self.min_n} exceeds max_n={self.max_n}"
            raise ValueError(msg)
        if self.source == "atlas" and self.max_n > ATLAS_MAX_N:
            msg = (
                f"The graph atlas stops at {ATLAS_MAX_N} vertices, "
                f"got max_n={self.max_n}"
            )
            raise ValueError(msg)
        if self.source == "file" and self.path is None:
            msg = "A file corpus needs a path"
            raise ValueError(msg)
        return self

    @classmethod
    def parse(cls, text: str) -> "CorpusSpec":
        """Read the command-line corpus notation.

        Raises:
            ValueError: On unknown keys or malformed values
        """
        head, _, tail = text.partition(":")
        if head in ("atlas", "gen", "example10"):
            values: dict[str, Any] = {"source": head}
            for item in filter(None, tail.split(",")):
                key, sep, raw = item.partition("=")
                key = key.strip()
                if not sep or key not in ("n", "min_n", "max_n", "p", "count", "seed"):
                    msg = f"Unknown corpus option {item!r} in {text!r}"
                    raise ValueError(msg)
                if key == "n":
                    values["min_n"] = values["max_n"] = raw
                else:
                    values[key] = raw
            if head == "example10":
                values.setdefault("min_n", 10)
                values.setdefault("max_n", 10)
            return cls(**values)
        return cls(source="file", path=Path(text), max_n=4096)

    def describe(self) -> str:
        if self.source == "file":
            return f"file {self.path}"
        if self.source == "gen":
            return (
                f"gen n={self.min_n}..{self.max_n} p={self.p} "
                f"count={self.count} seed={self.seed}"
            )
        if self.source == "atlas":
            return f"atlas n={self.min_n}..{self.max_n}"
        return "example10"
