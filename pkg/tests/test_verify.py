"""Connectivity verification: flow values, witnesses, pair strategy."""

import itertools
import random

import pytest

from bisetcover.bisets import Edge, covers, popcount
from bisetcover.verify import (
    ConnectivityCertificate,
    biset_connectivity,
    is_k_connected,
    st_connectivity,
)


def complete_edges(n):
    return [Edge(u, v) for u in range(n) for v in range(u + 1, n)]


def cycle(n):
    return [Edge(i, (i + 1) % n) for i in range(n)]


def path(n):
    return [Edge(i, i + 1) for i in range(n - 1)]


def test_st_k4():
    value, witness = st_connectivity(4, complete_edges(4), 0, 3)
    assert value == 3
    cut = popcount(witness.boundary) + sum(
        1 for e in complete_edges(4) if covers(e, witness)
    )
    assert cut == 3


def test_st_path_endpoints():
    value, witness = st_connectivity(3, path(3), 0, 2)
    assert value == 1
    assert (witness.inner >> 0) & 1
    assert not (witness.outer >> 2) & 1


def test_st_disconnected():
    edges = [Edge(0, 1), Edge(2, 3)]
    value, witness = st_connectivity(4, edges, 0, 3)
    assert value == 0
    assert witness.boundary == 0
    assert not any(covers(e, witness) for e in edges)


def test_st_rejects_equal_endpoints():
    with pytest.raises(ValueError):
        st_connectivity(3, path(3), 1, 1)


def test_witness_realizes_value():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(2, 6)
        pool = complete_edges(n)
        edges = rng.sample(pool, rng.randint(0, len(pool)))
        s, t = rng.sample(range(n), 2)
        value, witness = st_connectivity(n, edges, s, t)
        assert (witness.inner >> s) & 1
        assert not (witness.outer >> t) & 1
        cut = popcount(witness.boundary) + sum(1 for e in edges if covers(e, witness))
        assert cut == value


def test_flow_equals_biset_enumeration():
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randint(2, 5)
        pool = complete_edges(n)
        edges = rng.sample(pool, rng.randint(0, len(pool)))
        for s, t in itertools.combinations(range(n), 2):
            flow_value, _ = st_connectivity(n, edges, s, t)
            enum_value, _ = biset_connectivity(n, edges, s, t)
            assert flow_value == enum_value


def test_is_k_connected_cycle():
    ok, cert = is_k_connected(5, cycle(5), 2)
    assert ok and cert.k_achieved == 2
    ok3, cert3 = is_k_connected(5, cycle(5), 3)
    assert not ok3
    assert cert3.k_achieved == 2
    w = cert3.witness_cut
    assert popcount(w.boundary) + sum(1 for e in cycle(5) if covers(e, w)) == 2


def test_is_k_connected_complete():
    for n in (2, 3, 4, 5):
        for k in range(0, n):
            assert is_k_connected(n, complete_edges(n), k)[0]
        assert not is_k_connected(n, complete_edges(n), n)[0]


def test_strict_agrees_with_reduced():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(2, 6)
        pool = complete_edges(n)
        edges = rng.sample(pool, rng.randint(0, len(pool)))
        for k in (1, 2, 3):
            assert (
                is_k_connected(n, edges, k)[0]
                == is_k_connected(n, edges, k, strict=True)[0]
            )


def test_single_node():
    assert is_k_connected(1, [], 0) == (True, ConnectivityCertificate(0))
    assert not is_k_connected(1, [], 1)[0]
