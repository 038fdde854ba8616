import pytest


@pytest.fixture
def fast_config(tmp_path, monkeypatch):
    """Small suite sizes, an isolated cache and a single worker."""
    path = tmp_path / "lift_config.yaml"
    path.write_text(
        "lie_check:\n  trials: 20\n  seed: 42\n  max_level: 2\n"
        "  eigen_samples: 10\n  bracket_samples: 5\n"
        "report:\n  lie_trials: 5\n"
        "bound:\n  strict: true\n",
        encoding="utf-8",
    )
    monkeypatch.setenv("GSP4_CONFIG_PATH", str(path))
    monkeypatch.setenv("GSP4_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("GSP4_WORKERS", "1")
    return path
