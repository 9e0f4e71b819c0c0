from pathlib import Path

import pytest

from vendormatch.taxonomy import Taxonomy, load_taxonomy

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def bundled_taxonomy() -> Taxonomy:
    return load_taxonomy(DATA_DIR / "taxonomy.tsv")


@pytest.fixture()
def tmp_marking(tmp_path):
    """A throwaway copy of the bundled seed marking file."""
    target = tmp_path / "marking.tsv"
    target.write_bytes((DATA_DIR / "marking.tsv").read_bytes())
    return target
