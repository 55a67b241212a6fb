"""Tests package for EPC incremental update functionality."""
