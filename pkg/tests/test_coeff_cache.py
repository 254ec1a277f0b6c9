import json

import pytest

from src.utils.coeff_cache import CacheEntry, CoeffCache
from src.utils.dpolys import coeff_triple
from src.utils.exceptions import CacheIOError


@pytest.fixture
def store(tmp_path):
    return CoeffCache(tmp_path / "cache")


def test_build_then_rebuild(store):
    first = store.build(50, progress=False)
    assert (first.written, first.skipped) == (51, 0)
    second = store.build(50, progress=False)
    assert (second.written, second.skipped) == (0, 51)


def test_loaded_triples_equal_generated(store):
    store.build(12, progress=False)
    for n in range(13):
        assert store.load(n) == coeff_triple(n)


def test_missing_entry(store):
    assert store.load(7) is None


def test_get_or_generate_writes(store):
    triple = store.get_or_generate(5)
    assert triple == coeff_triple(5)
    assert store.path(5).exists()


def test_get_or_generate_without_store(store):
    assert store.get_or_generate(4, store=False) == coeff_triple(4)
    assert not store.path(4).exists()
    assert store.stat().count == 0


def test_stat_and_clear(store):
    assert store.stat().count == 0
    assert store.stat().max_n is None
    store.build(9, progress=False)
    stat = store.stat()
    assert (stat.count, stat.max_n) == (10, 9)
    assert store.clear() == 10
    assert store.stat().count == 0


def test_entry_is_plain_json(store):
    store.build(2, progress=False)
    data = json.loads(store.path(2).read_text())
    assert data["n"] == 2
    assert data["format_version"] == 1
    assert data["r"][0] == ["1", "3"]


def test_corrupt_entry_is_rewritten(store):
    store.build(3, progress=False)
    store.path(2).write_text("{not json")
    assert store.load(2) is None
    result = store.build(3, progress=False)
    assert (result.written, result.skipped) == (1, 3)
    assert store.load(2) == coeff_triple(2)


def test_tampered_entry_is_rejected(store):
    store.build(3, progress=False)
    entry = CacheEntry.from_triple(coeff_triple(3))
    entry.c[0] = ("1", "1")
    store.path(3).write_text(entry.model_dump_json())
    assert store.load(3) is None


def test_entry_under_wrong_name_is_rejected(store):
    store.build(3, progress=False)
    store.path(2).write_text(store.path(3).read_text())
    assert store.load(2) is None


def test_cache_dir_is_a_file(tmp_path):
    target = tmp_path / "occupied"
    target.write_text("")
    with pytest.raises(CacheIOError):
        CoeffCache(target).build(1, progress=False)
