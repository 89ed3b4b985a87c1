"""Concurrent reads over shared immutable structures.

Caches fill idempotently (compute fully, then assign), so racing
readers must always observe either nothing or a complete value.
"""

from concurrent.futures import ThreadPoolExecutor

from tensq import (build_nu, get_group, get_presentation, lie_ring,
                   dimension_subgroups, verify_lazard, verify_nu_relations,
                   verify_tensor_set_closed)


def test_concurrent_group_cache_fill():
    g = get_group("Q8")
    fresh = type(g)([*g.generators], name="Q8-clone")
    with ThreadPoolExecutor(max_workers=8) as pool:
        orders = list(pool.map(lambda _: fresh.order(), range(16)))
        tables = list(pool.map(lambda _: fresh.table() is not None,
                               range(16)))
    assert orders == [8] * 16
    assert all(tables)


def test_concurrent_verifications_share_a_nu_group():
    nu = build_nu(get_group("S3"), get_presentation("S3"))
    jobs = [lambda: verify_nu_relations(nu).passed,
            lambda: verify_tensor_set_closed(nu).passed,
            lambda: verify_nu_relations(nu, seed=3).passed,
            lambda: verify_tensor_set_closed(nu).passed]
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = [f.result() for f in [pool.submit(j) for j in jobs]]
    assert results == [True] * 4


def test_concurrent_lie_verification():
    ring = lie_ring(dimension_subgroups(get_group("Heis3"), 3))
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda q: verify_lazard(ring, q).passed,
                                [3, 9, 3, 9]))
    assert results == [True] * 4
