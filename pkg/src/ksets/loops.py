"""Maximal-loop (n-gon) detection and polygon/free/span edge
classification.

A loop of size n is a cyclic sequence of n distinct edges in which
consecutive edges meet in a joint vertex, all n joints are distinct, and
non-consecutive edges of the loop share no vertex.  The last condition is
what lets the loop be drawn as a regular polygon with each edge on one
side; dropping it would let chords re-enter the cycle and inflate the
reported size far beyond the published n-gon numbers for known sets.

Search is exhaustive depth-first enumeration of partial paths: the start
edge is pinned to the smallest index on the loop, and the induced condition
prunes hard because every extension must avoid all covered vertices.  The
fixed-size enumeration additionally cuts paths whose remaining loop cannot
be completed within the still-reachable part of the intersection graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mmp import Hypergraph


@dataclass(frozen=True)
class Loop:
    """Cyclic witness: joints[i] lies in edges[i] and edges[(i+1) % n]."""

    edges: tuple[int, ...]
    joints: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def validate(self, h: Hypergraph) -> None:
        n = len(self.edges)
        if n < 3:
            raise ValueError("loops have at least 3 edges")
        if len(self.joints) != n:
            raise ValueError("one joint per edge pair")
        if len(set(self.edges)) != n:
            raise ValueError("loop edges must be distinct")
        if len(set(self.joints)) != n:
            raise ValueError("loop joints must be distinct")
        for i in range(n):
            a = h.edge_sets[self.edges[i]]
            b = h.edge_sets[self.edges[(i + 1) % n]]
            if self.joints[i] not in a or self.joints[i] not in b:
                raise ValueError(f"joint {self.joints[i]} not shared at {i}")
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if h.edge_sets[self.edges[i]] & h.edge_sets[self.edges[j]]:
                    raise ValueError(
                        f"non-consecutive loop edges {i},{j} share a vertex"
                    )


@dataclass(frozen=True)
class EdgeClassification:
    """Partition of the edges relative to one loop."""

    polygon: frozenset[int]
    free: frozenset[int]
    span: frozenset[int]
    free_vertices: frozenset[int]


class _LoopSearch:
    def __init__(self, h: Hypergraph):
        self.h = h
        m = h.num_edges
        self.m = m
        self.emask = [sum(1 << v for v in e) for e in h.edges]
        self.shared = [
            [self.emask[i] & self.emask[j] if i != j else 0 for j in range(m)]
            for i in range(m)
        ]
        self.adj = [
            sum(1 << j for j in range(m) if j != i and self.shared[i][j])
            for i in range(m)
        ]
        self.full = (1 << m) - 1

    def _reach(self, src: int, allowed: int) -> int:
        r = src
        frontier = src
        adj = self.adj
        while frontier:
            nxt = 0
            x = frontier
            while x:
                b = x & -x
                nxt |= adj[b.bit_length() - 1]
                x ^= b
            nxt &= allowed & ~r
            r |= nxt
            frontier = nxt
        return r

    def longest(self) -> tuple[int, tuple[int, ...] | None]:
        best = 0
        witness: tuple[int, ...] | None = None
        emask, adj = self.emask, self.adj

        def dfs(start, last, used_e, mid, path):
            # mid covers the interior edges e1..e(k-1); extensions must be
            # disjoint from every path edge except the last, closures from
            # every path edge except the last and the start
            nonlocal best, witness
            allowed = ~used_e & self.full
            e0m = emask[start]
            lm = emask[last]
            blocked = mid | (e0m if len(path) > 1 else 0)
            x = adj[last] & allowed
            while x:
                b = x & -x
                e = b.bit_length() - 1
                x ^= b
                em = emask[e]
                if em & blocked == 0:
                    path.append(e)
                    dfs(start, e, used_e | b,
                        mid | (lm if len(path) > 2 else 0), path)
                    path.pop()
                if (
                    len(path) + 1 >= 3
                    and len(path) + 1 > best
                    and em & e0m
                    and em & mid == 0
                    and self._closable(path, e)
                ):
                    best = len(path) + 1
                    witness = tuple(path) + (e,)

        for s in range(self.m):
            dfs(s, s, (1 << (s + 1)) - 1, 0, [s])
        return best, witness

    def _closable(self, path, e) -> bool:
        """A distinct joint per corner must exist once the cycle closes.

        For cycles of length 4 or more this is automatic (the corner
        intersections live in pairwise disjoint non-consecutive edges);
        triangles need an explicit distinct-representative check.
        """
        if len(path) >= 3:
            return True
        return bool(self._joint_choices(tuple(path) + (e,)))

    def _joint_choices(self, cycle: tuple[int, ...]) -> list[tuple[int, ...]]:
        """All distinct-joint selections along a closed edge cycle."""
        k = len(cycle)
        options = []
        for i in range(k):
            s = self.shared[cycle[i]][cycle[(i + 1) % k]]
            opts = []
            while s:
                b = s & -s
                opts.append(b.bit_length() - 1)
                s ^= b
            options.append(opts)
        out: list[tuple[int, ...]] = []

        def pick(i, chosen):
            if i == k:
                out.append(tuple(chosen))
                return
            for j in options[i]:
                if j not in chosen:
                    chosen.append(j)
                    pick(i + 1, chosen)
                    chosen.pop()

        pick(0, [])
        return out

    def exact(self, n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """All loops of exactly n edges as (edges, joints) sequences, one
        per start choice and direction (deduplication happens upstream)."""
        found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        emask, adj = self.emask, self.adj

        def dfs(start, last, used_e, mid, path):
            allowed = ~used_e & self.full
            if len(path) < n:
                band = (
                    self._reach(1 << last, allowed)
                    & self._reach(1 << start, allowed | (1 << start))
                    & allowed
                )
                if len(path) + band.bit_count() < n:
                    return
            e0m = emask[start]
            lm = emask[last]
            blocked = mid | (e0m if len(path) > 1 else 0)
            x = adj[last] & allowed
            while x:
                b = x & -x
                e = b.bit_length() - 1
                x ^= b
                em = emask[e]
                if len(path) + 1 < n:
                    if em & blocked == 0:
                        path.append(e)
                        dfs(start, e, used_e | b,
                            mid | (lm if len(path) > 2 else 0), path)
                        path.pop()
                elif em & e0m and em & mid == 0:
                    cycle = tuple(path) + (e,)
                    for joints in self._joint_choices(cycle):
                        found.append((cycle, joints))

        for s in range(self.m):
            dfs(s, s, (1 << (s + 1)) - 1, 0, [s])
        return found


def biggest_loop(h: Hypergraph) -> tuple[int, Loop | None]:
    """Maximum loop size with a witness, or (0, None) when the
    edge-intersection structure carries no loop at all."""
    search = _LoopSearch(h)
    n, path = search.longest()
    if path is None:
        return 0, None
    joints = _choose_joints(search, path)
    loop = Loop(path, joints)
    loop.validate(h)
    return n, loop


def _choose_joints(search: _LoopSearch, path: tuple[int, ...]) -> tuple[int, ...]:
    choices = search._joint_choices(path)
    if not choices:
        raise AssertionError("witness path lost its joints")
    return choices[0]


def _normalize(edges: tuple[int, ...], joints: tuple[int, ...]):
    """Canonical key under rotation and reflection of the cyclic
    (edges, joints) sequence."""
    n = len(edges)
    variants = []
    for r in range(n):
        variants.append(
            tuple(
                (edges[(r + i) % n], joints[(r + i) % n]) for i in range(n)
            )
        )
    # reflection reverses edge order and shifts the joint alignment
    redges = tuple(reversed(edges))
    rjoints = tuple(joints[(n - 2 - i) % n] for i in range(n))
    for r in range(n):
        variants.append(
            tuple(
                (redges[(r + i) % n], rjoints[(r + i) % n]) for i in range(n)
            )
        )
    return min(variants)


def loop_arrangements(h: Hypergraph, n: int) -> list[Loop]:
    """All size-n loops, deduplicated under rotation and reflection;
    distinct joint choices between the same edge pair count separately."""
    if n < 3:
        raise ValueError("loops have at least 3 edges")
    search = _LoopSearch(h)
    seen = {}
    for edges, joints in search.exact(n):
        key = _normalize(edges, joints)
        if key not in seen:
            loop = Loop(edges, joints)
            loop.validate(h)
            seen[key] = loop
    return list(seen.values())


def classify_edges(h: Hypergraph, loop: Loop) -> EdgeClassification:
    """Polygon edges are the loop's; free edges contain a vertex off the
    loop; span edges are the rest."""
    loop.validate(h)
    polygon = frozenset(loop.edges)
    loop_vertices = frozenset(
        v for ei in loop.edges for v in h.edges[ei]
    )
    free_vertices = frozenset(range(h.num_vertices)) - loop_vertices
    free = frozenset(
        ei
        for ei in range(h.num_edges)
        if ei not in polygon and h.edge_sets[ei] & free_vertices
    )
    span = frozenset(range(h.num_edges)) - polygon - free
    return EdgeClassification(polygon, free, span, free_vertices)


def format_annotated(h: Hypergraph, loop: Loop) -> str:
    """Text rendering with the polygon edges first; in the remaining edges
    every polygon vertex is marked '*' and every free vertex '.'."""
    from .mmp import vertex_to_chars

    cls = classify_edges(h, loop)
    parts = [
        "".join(vertex_to_chars(v) for v in h.edges[ei]) for ei in loop.edges
    ]
    rest = []
    for ei in range(h.num_edges):
        if ei in cls.polygon:
            continue
        rest.append(
            "".join(
                vertex_to_chars(v) + ("." if v in cls.free_vertices else "*")
                for v in h.edges[ei]
            )
        )
    return ",".join(parts) + ". " + " ".join(rest)
