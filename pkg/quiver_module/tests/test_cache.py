import logging

import pytest

from quiver_core import cache as cache_module
from quiver_core.cache import OutputCache, canonical_request, request_key


@pytest.fixture
def request_model():
    return canonical_request("schubert", {"w": "312", "n": None, "double": False}, False)


def test_store_then_load(tmp_path, request_model):
    cache = OutputCache(tmp_path / "cache")
    assert cache.load(request_model) is None
    cache.store(request_model, "x_1^2")
    assert cache.load(request_model) == "x_1^2"
    assert (tmp_path / "cache" / f"{request_key(request_model)}.json").exists()


def test_disabled_cache_is_a_no_op(tmp_path, request_model):
    cache = OutputCache(None)
    cache.store(request_model, "ignored")
    assert cache.load(request_model) is None
    assert not cache.enabled


def test_request_keys_ignore_argument_order():
    first = canonical_request("rank", {"w": "312", "n": 2}, True)
    second = canonical_request("rank", {"n": 2, "w": "312"}, True)
    assert request_key(first) == request_key(second)
    assert request_key(first) != request_key(canonical_request("rank", {"w": "312", "n": 2}, False))


def test_failed_write_leaves_no_temp_file(tmp_path, monkeypatch, request_model, caplog):
    def refuse(source, target):
        raise OSError("disk full")

    monkeypatch.setattr(cache_module.os, "replace", refuse)
    cache = OutputCache(tmp_path / "cache")
    with caplog.at_level(logging.WARNING, logger="quiver.cache"):
        cache.store(request_model, "x_1^2")
    assert list((tmp_path / "cache").iterdir()) == []
    assert any("Could not write cache entry" in record.getMessage() for record in caplog.records)
    assert cache.load(request_model) is None


def test_entry_for_another_request_is_a_miss(tmp_path, request_model):
    cache = OutputCache(tmp_path / "cache")
    other = canonical_request("schubert", {"w": "321", "n": None, "double": False}, False)
    cache.store(other, "x_1^2*x_2")
    source = tmp_path / "cache" / f"{request_key(other)}.json"
    source.rename(tmp_path / "cache" / f"{request_key(request_model)}.json")
    assert cache.load(request_model) is None
