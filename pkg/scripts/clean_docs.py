"""
Script to cleanup documentation.
"""
import shutil
from pathlib import Path

import typer


def clean_docs():
    """Remove generated api pages, autosummary stubs and old builds."""
    doc_path = Path(__file__).absolute().parent.parent / "docs"
    for name in ("api", "_build"):
        if (doc_path / name).exists():
            shutil.rmtree(doc_path / name)
    for stubs in doc_path.rglob("stubs"):
        shutil.rmtree(stubs)


if __name__ == "__main__":
    typer.run(clean_docs)
