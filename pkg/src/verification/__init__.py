"""Theorem verification over graph corpora.

Importing the package registers every property in
:data:`src.verification.registry.PROPERTIES`.
"""

from . import properties  # noqa: F401
from .corpus import example10_graph, iter_corpus
from .explorer import explore_iterated_d
from .harness import replay, run_suite, summarize, write_json
from .models import CorpusSpec, PropertyReport, Status
from .registry import PROPERTIES, Premise, PropertyContext

__all__ = [
    "PROPERTIES",
    "CorpusSpec",
    "Premise",
    "PropertyContext",
    "PropertyReport",
    "Status",
    "explore_iterated_d",
    "example10_graph",
    "iter_corpus",
    "replay",
    "run_suite",
    "summarize",
    "write_json",
]
