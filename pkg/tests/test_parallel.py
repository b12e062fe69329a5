from hyperspec._parallel import pmap, worker_count


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("HYPERSPEC_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("HYPERSPEC_THREADS", "0")
    assert worker_count() == 1
    monkeypatch.setenv("HYPERSPEC_THREADS", "many")
    assert 1 <= worker_count() <= 8


def test_pmap_keeps_order(monkeypatch):
    for threads in ("1", "4"):
        monkeypatch.setenv("HYPERSPEC_THREADS", threads)
        assert pmap(lambda x: x * x, range(50)) == [x * x for x in range(50)]
    assert pmap(str, []) == []
