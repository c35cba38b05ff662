import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "full: long-running full-scale sweeps (deselect with -m 'not full')")


def pytest_collection_modifyitems(config, items):
    if config.getoption("-m"):
        return
    skip = pytest.mark.skip(reason="full-scale sweep; run with -m full")
    for item in items:
        if "full" in item.keywords:
            item.add_marker(skip)
