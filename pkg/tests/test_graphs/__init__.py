"""Tests for graphs, graph6 and matching polynomials."""
