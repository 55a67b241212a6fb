"""CLI entry point.

Usage:
    uv run theta-gallai mu A_
    uv run theta-gallai mult src/verification/fixtures/example10.g6 --theta 1/1
    uv run theta-gallai decompose src/verification/fixtures/example10.g6 --theta 1
    uv run theta-gallai dgraph src/verification/fixtures/example10.g6 --theta 1 --all
    uv run theta-gallai verify --corpus atlas:max_n=6 --json reports.json
    uv run theta-gallai explore --corpus gen:n=7,count=20,seed=3 --theta 0
"""

from .main import cli

if __name__ == "__main__":
    cli()
