import logging

from src.config import DEFAULTS, LOG_FORMAT, ensure_directories, get_paths, setup_logging


def test_data_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("JONES_DATA_DIR", str(tmp_path / "data"))
    paths = get_paths()
    assert paths["results"] == tmp_path / "data" / "results"
    ensure_directories()
    for key in ("data", "datasets", "results", "plots"):
        assert paths[key].is_dir()


def test_defaults():
    assert DEFAULTS["q"] == 2
    assert all(c % 2 == 1 for c in DEFAULTS["stretch"])
    assert set(DEFAULTS["cs"]) <= set(DEFAULTS["stretch"])
    assert DEFAULTS["kauffman_max_crossings"] == 20


def test_setup_logging_replaces_handlers():
    setup_logging(logging.DEBUG)
    setup_logging(logging.WARNING)
    root = logging.getLogger()
    assert len(root.handlers) == 1
    assert root.level == logging.WARNING
    assert root.handlers[0].formatter._fmt == LOG_FORMAT
