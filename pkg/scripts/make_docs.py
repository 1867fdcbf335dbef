"""
Script to re-make the html docs.
"""
from pathlib import Path
from subprocess import run

import typer

from clean_docs import clean_docs

# Path to top-level sphinx
DOC_PATH = Path(__file__).absolute().parent.parent / "docs"


def make_docs(doc_path=DOC_PATH) -> str:
    """
    Make the quasiplus documentation.

    Parameters
    ----------
    doc_path
        The path to the top-level sphinx directory.

    Returns
    -------
    Path to created html directory.
    """
    doc_path = Path(doc_path)
    clean_docs()
    # run auto api-doc
    run("sphinx-apidoc ../src/quasiplus -e -M -o api", cwd=doc_path, shell=True)
    run("sphinx-build -b html . _build/html", cwd=doc_path, shell=True, check=True)
    # ensure html directory was created, return path to it.
    expected_path: Path = doc_path / "_build" / "html"
    assert expected_path.is_dir(), f"{expected_path} does not exist!"
    return str(expected_path)


if __name__ == "__main__":
    typer.run(make_docs)
