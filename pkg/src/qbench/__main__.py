"""CLI entry point for python -m qbench"""

from qbench.cli import app

if __name__ == "__main__":
    app()
