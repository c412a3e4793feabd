import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    """Point the oracle cache at a per-session scratch directory."""
    root = tmp_path_factory.getbasetemp() / "segre-cache"
    monkeypatch.setenv("SEGRE_CACHE_DIR", str(root))
    yield
