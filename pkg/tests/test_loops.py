import random
from itertools import permutations

import pytest

from ksets.corpus import LOOP_SIZES, load
from ksets.loops import (
    Loop,
    biggest_loop,
    classify_edges,
    format_annotated,
    loop_arrangements,
)
from ksets.mmp import hypergraph_from_edges, parse_mmp


def oracle_biggest(h):
    """Brute force over all edge orderings; only for tiny inputs."""
    m = h.num_edges
    best = 0
    for n in range(3, m + 1):
        for seq in permutations(range(m), n):
            if seq[0] != min(seq):
                continue
            ok = True
            for i in range(n):
                for j in range(i + 1, n):
                    inter = h.edge_sets[seq[i]] & h.edge_sets[seq[j]]
                    consecutive = j == i + 1 or (i == 0 and j == n - 1)
                    if consecutive and not inter:
                        ok = False
                    if not consecutive and inter:
                        ok = False
                if not ok:
                    break
            if ok and _joints_exist(h, seq):
                best = max(best, n)
    return best


def _joints_exist(h, seq):
    n = len(seq)
    options = [
        sorted(h.edge_sets[seq[i]] & h.edge_sets[seq[(i + 1) % n]])
        for i in range(n)
    ]

    def pick(i, used):
        if i == n:
            return True
        return any(
            pick(i + 1, used | {v}) for v in options[i] if v not in used
        )

    return pick(0, frozenset())


def random_small(rng):
    nv = rng.randint(4, 9)
    ne = rng.randint(3, 6)
    edges = []
    for _ in range(ne):
        size = rng.randint(2, min(4, nv))
        edges.append(tuple(rng.sample(range(nv), size)))
    return hypergraph_from_edges(edges, nv)


def test_triangle():
    n, loop = biggest_loop(parse_mmp("123,345,561."))
    assert n == 3
    loop.validate(parse_mmp("123,345,561."))


def test_no_loop_structures():
    assert biggest_loop(parse_mmp("123."))[0] == 0
    assert biggest_loop(parse_mmp("123,345."))[0] == 0
    # two edges sharing two joints still cannot make a 2-loop
    assert biggest_loop(parse_mmp("1234,3456."))[0] == 0


def test_matches_brute_force_oracle():
    rng = random.Random(2024)
    for _ in range(120):
        h = random_small(rng)
        n, loop = biggest_loop(h)
        assert n == oracle_biggest(h)
        if loop is not None:
            loop.validate(h)


def test_corpus_loop_sizes_witnessed():
    h = load("42-24")
    n, loop = biggest_loop(h)
    assert n == LOOP_SIZES["42-24"] == 13
    loop.validate(h)


def test_isomorphism_invariance():
    h = load("45-26")
    rng = random.Random(5)
    perm = list(range(h.num_vertices))
    rng.shuffle(perm)
    edges = [tuple(perm[v] for v in e) for e in h.edges]
    rng.shuffle(edges)
    h2 = hypergraph_from_edges(edges, h.num_vertices)
    assert biggest_loop(h2)[0] == biggest_loop(h)[0] == 12


def test_arrangements_pure_cycle():
    h = parse_mmp("123,345,561.")
    assert len(loop_arrangements(h, 3)) == 1
    assert loop_arrangements(h, 4) == []
    with pytest.raises(ValueError):
        loop_arrangements(h, 2)


def test_arrangements_count_joint_choices():
    # square of 4-vertex edges: every corner offers two joint vertices, and
    # each of the 2^4 joint selections is its own arrangement
    h = parse_mmp("1234,3456,5678,7812.")
    arrs = loop_arrangements(h, 4)
    assert len(arrs) == 16
    assert len({a.joints for a in arrs}) == 16
    for a in arrs:
        a.validate(h)


def test_45_26_arrangements():
    # 13 classes under rotation+reflection; counting each traversal
    # direction separately doubles this to the historically quoted 26
    arrs = loop_arrangements(load("45-26"), 12)
    assert len(arrs) == 13
    for a in arrs:
        a.validate(load("45-26"))


def test_loop_validate_rejects_bad_witnesses():
    h = parse_mmp("123,345,561.")
    with pytest.raises(ValueError):
        Loop((0, 1), (2, 4)).validate(h)
    with pytest.raises(ValueError):
        Loop((0, 1, 1), (2, 4, 0)).validate(h)
    with pytest.raises(ValueError):
        Loop((0, 1, 2), (2, 2, 0)).validate(h)
    with pytest.raises(ValueError):
        Loop((0, 1, 2), (1, 4, 0)).validate(h)  # joint not shared


def test_classification_partitions():
    for name in ("42-24", "45-26", "38-19"):
        h = load(name)
        _, loop = biggest_loop(h)
        cls = classify_edges(h, loop)
        assert cls.polygon | cls.free | cls.span == frozenset(
            range(h.num_edges)
        )
        assert not (cls.polygon & cls.free)
        assert not (cls.polygon & cls.span)
        assert not (cls.free & cls.span)
        for ei in cls.free:
            assert h.edge_sets[ei] & cls.free_vertices
        for ei in cls.span:
            assert not h.edge_sets[ei] & cls.free_vertices


def test_pure_cycle_all_polygon():
    h = parse_mmp("123,345,561.")
    _, loop = biggest_loop(h)
    cls = classify_edges(h, loop)
    assert cls.polygon == frozenset({0, 1, 2})
    assert not cls.free and not cls.span and not cls.free_vertices


def test_format_annotated():
    h = parse_mmp("123,345,561,789,169.")
    n, loop = biggest_loop(h)
    text = format_annotated(h, loop)
    head, _, rest = text.partition(". ")
    assert len(head.split(",")) == n
    assert "." in rest or "*" in rest
