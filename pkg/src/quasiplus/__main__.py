"""Run the command line interface with ``python -m quasiplus``."""
from quasiplus.cli import app

if __name__ == "__main__":
    app(prog_name="quasiplus")
