"""Canonical labeling and isomorphism filtering of MMP hypergraphs.

The canonical form of a hypergraph is the lexicographically least MMP
serialization over a labeling search tree: individualization-refinement on
the bipartite incidence graph (vertex nodes and edge nodes, colored by
side and degree information), with discovered automorphisms pruning
branches that can only repeat an explored leaf.  Two hypergraphs are
isomorphic exactly when their canonical forms are equal, and a canonical
form is itself a valid MMP line.

The canonical representative choice is an internal convention; only the
partition into isomorphism classes is comparable across tools.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .mmp import Hypergraph, parse_mmp, serialize_mmp, vertex_to_chars


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical MMP serialization; equality is isomorphism."""

    text: str

    def to_hypergraph(self) -> Hypergraph:
        return parse_mmp(self.text)


@dataclass(frozen=True)
class IsoMapping:
    """A witness isomorphism h1 -> h2."""

    vertex_map: dict[int, int]
    edge_map: dict[int, int]

    def verifies(self, h1: Hypergraph, h2: Hypergraph) -> bool:
        """Check the mapping by direct application, independent of how it
        was found."""
        if sorted(self.vertex_map) != list(range(h1.num_vertices)):
            return False
        if sorted(set(self.vertex_map.values())) != list(range(h2.num_vertices)):
            return False
        for ei, e in enumerate(h1.edges):
            target = self.edge_map.get(ei)
            if target is None:
                return False
            if {self.vertex_map[v] for v in e} != set(h2.edge_sets[target]):
                return False
        return sorted(set(self.edge_map.values())) == list(range(h2.num_edges))


def _refine(adj: list[list[int]], colors: list) -> tuple[list[int], int]:
    """Stable color refinement; cell order is invariant (cells sorted by
    their defining keys)."""
    n = len(adj)
    order = sorted(set(colors))
    cmap = {c: i for i, c in enumerate(order)}
    col = [cmap[c] for c in colors]
    ncol = len(order)
    while True:
        keys = [
            (col[i], tuple(sorted(col[j] for j in adj[i]))) for i in range(n)
        ]
        order = sorted(set(keys))
        if len(order) == ncol:
            return col, ncol
        cmap = {k: i for i, k in enumerate(order)}
        col = [cmap[k] for k in keys]
        ncol = len(order)


class _CanonSearch:
    def __init__(self, h: Hypergraph):
        self.h = h
        nv = h.num_vertices
        m = h.num_edges
        self.nv = nv
        self.n = nv + m
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for ei, e in enumerate(h.edges):
            for v in e:
                adj[v].append(nv + ei)
                adj[nv + ei].append(v)
        self.adj = adj
        self.edge_set_index: dict[frozenset[int], list[int]] = {}
        for ei, s in enumerate(h.edge_sets):
            self.edge_set_index.setdefault(s, []).append(ei)
        self.best: str | None = None
        self.best_vpos: list[int] | None = None
        self.leaves: dict[str, list[int]] = {}  # cert -> full node positions
        self.autos: list[tuple[int, ...]] = []  # full node permutations

    def run(self) -> tuple[str, list[int]]:
        init = [(0, len(self.adj[v])) for v in range(self.nv)] + [
            (1, len(e)) for e in self.h.edges
        ]
        col, ncol = _refine(self.adj, init)
        self._search(col, ncol, [])
        assert self.best is not None and self.best_vpos is not None
        return self.best, self.best_vpos

    def _leaf(self, col: list[int], fixed: list[int]) -> None:
        nv = self.nv
        vorder = sorted(range(nv), key=lambda v: col[v])
        vpos = [0] * nv
        for p, v in enumerate(vorder):
            vpos[v] = p
        relabeled = sorted(
            tuple(sorted(vpos[v] for v in e)) for e in self.h.edges
        )
        cert = (
            ",".join("".join(vertex_to_chars(v) for v in e) for e in relabeled)
            + "."
        )
        npos = list(col)  # discrete: color == position
        prev = self.leaves.get(cert)
        if prev is None:
            self.leaves[cert] = npos
        else:
            perm = self._automorphism(prev, npos)
            if perm is not None:
                self.autos.append(perm)
        if self.best is None or cert < self.best:
            self.best = cert
            self.best_vpos = vpos

    def _automorphism(
        self, pos_a: list[int], pos_b: list[int]
    ) -> tuple[int, ...] | None:
        """Node permutation mapping leaf B's labeling onto leaf A's.

        The vertex part follows from equal certificates; the edge part is
        rebuilt by matching image vertex sets so the permutation is a true
        automorphism of the incidence structure.
        """
        n, nv = self.n, self.nv
        inv_a = [0] * n
        for node in range(n):
            inv_a[pos_a[node]] = node
        perm = [inv_a[pos_b[node]] for node in range(n)]
        used: set[int] = set()
        for ei, s in enumerate(self.h.edge_sets):
            image = frozenset(perm[v] for v in s)
            for cand in self.edge_set_index.get(image, ()):
                if cand not in used:
                    used.add(cand)
                    perm[nv + ei] = nv + cand
                    break
            else:
                return None
        return tuple(perm)

    def _search(self, col: list[int], ncol: int, fixed: list[int]) -> None:
        n = self.n
        if ncol == n:
            self._leaf(col, fixed)
            return
        cells: dict[int, list[int]] = {}
        for i in range(n):
            cells.setdefault(col[i], []).append(i)
        target = min(c for c, mem in cells.items() if len(mem) > 1)
        members = cells[target]
        explored: list[int] = []
        for node in members:
            if self._orbit_pruned(node, explored, fixed):
                continue
            explored.append(node)
            marked = [(col[i], 0 if i == node else 1) for i in range(n)]
            col2, ncol2 = _refine(self.adj, marked)
            self._search(col2, ncol2, fixed + [node])

    def _orbit_pruned(
        self, node: int, explored: list[int], fixed: list[int]
    ) -> bool:
        for auto in self.autos:
            if auto[node] in explored and all(auto[f] == f for f in fixed):
                return True
        return False


def canonical_labeling(h: Hypergraph) -> tuple[CanonicalForm, list[int]]:
    """Canonical form plus the vertex relabeling (old id -> canonical id)
    that produces it."""
    cert, vpos = _CanonSearch(h).run()
    return CanonicalForm(cert), vpos


def canonical_form(h: Hypergraph) -> CanonicalForm:
    """Deterministic; invariant under vertex relabeling and edge-list
    permutation."""
    return canonical_labeling(h)[0]


def are_isomorphic(h1: Hypergraph, h2: Hypergraph) -> IsoMapping | None:
    """Return a verified isomorphism h1 -> h2, or None."""
    if (h1.num_vertices, h1.num_edges) != (h2.num_vertices, h2.num_edges):
        return None
    c1, pos1 = canonical_labeling(h1)
    c2, pos2 = canonical_labeling(h2)
    if c1 != c2:
        return None
    inv2 = {p: v for v, p in enumerate(pos2)}
    vertex_map = {v: inv2[pos1[v]] for v in range(h1.num_vertices)}
    sets2: dict[frozenset[int], list[int]] = {}
    for ei, s in enumerate(h2.edge_sets):
        sets2.setdefault(s, []).append(ei)
    edge_map: dict[int, int] = {}
    used: set[int] = set()
    for ei, s in enumerate(h1.edge_sets):
        image = frozenset(vertex_map[v] for v in s)
        cands = [c for c in sets2.get(image, ()) if c not in used]
        if not cands:
            return None
        edge_map[ei] = cands[0]
        used.add(cands[0])
    mapping = IsoMapping(vertex_map, edge_map)
    return mapping if mapping.verifies(h1, h2) else None


def dedupe_isomorphic(hs: Iterable[Hypergraph]) -> Iterator[Hypergraph]:
    """Keep the first representative of each isomorphism class, in order of
    first appearance."""
    seen: set[str] = set()
    for h in hs:
        cert = canonical_form(h).text
        if cert not in seen:
            seen.add(cert)
            yield h
