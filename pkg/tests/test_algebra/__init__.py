"""Tests for exact polynomial and algebraic number arithmetic."""
