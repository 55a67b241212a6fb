"""Run the verification suite directly.

Usage:
    uv run python -m src.verification example10
    uv run python -m src.verification gen:n=8,p=0.4,seed=7,count=50 --json out.json
"""

import sys

from src.cli.main import cli

if __name__ == "__main__":
    cli(["verify", "--corpus", *sys.argv[1:]])
