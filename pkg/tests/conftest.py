"""Shared fixtures."""

import pytest


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch):
    for name in ("YHECKE_MAX_BALL_LENGTH", "YHECKE_MAX_RANK", "YHECKE_SEED", "YHECKE_SAMPLES", "YHECKE_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
