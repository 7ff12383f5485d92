from fractions import Fraction
from pathlib import Path

import pytest

from config import DEFAULTS, get_available_settings, get_cache_dir, get_setting


def test_defaults():
    assert get_setting("norm_cap_factor") == 6
    assert get_setting("fingerprint_factor") == 6
    assert get_setting("neighbor_prime") == 2
    assert get_setting("lll_delta") == Fraction(3, 4)


def test_environment_overrides_and_coerces(monkeypatch):
    monkeypatch.setenv("QUATORDER_JOBS", "4")
    assert get_setting("jobs") == 4
    monkeypatch.setenv("QUATORDER_LLL_DELTA", "99/100")
    assert get_setting("lll_delta") == Fraction(99, 100)


def test_bad_environment_value(monkeypatch):
    monkeypatch.setenv("QUATORDER_JOBS", "many")
    with pytest.raises(ValueError, match="QUATORDER_JOBS"):
        get_setting("jobs")


def test_unknown_setting():
    with pytest.raises(ValueError, match="Unknown setting"):
        get_setting("colour")


def test_cache_dir(monkeypatch, tmp_path):
    assert get_cache_dir() is None
    monkeypatch.setenv("QUATORDER_CACHE_DIR", str(tmp_path))
    assert get_cache_dir() == Path(tmp_path)


def test_available_settings():
    assert set(get_available_settings()) == set(DEFAULTS)
