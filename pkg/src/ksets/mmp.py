"""MMP hypergraph data model and the bit-exact text encoding.

An MMP hypergraph is written as one ASCII line: each vertex is a single
printable character, each edge a string of such characters, edges separated
by commas, the line terminated by a full stop.  Vertices beyond the base
character list are written with '+' prefixes ('+1', '++1', ...), without
bound.

A well-formed MMP hypergraph satisfies
  (i)   every vertex belongs to at least one edge,
  (ii)  every edge contains at least 3 vertices,
  (iii) edges that intersect each other in n-2 vertices contain at least
        n vertices (read as: two edges sharing k vertices each have >= k+2
        vertices; see ``validate_mmp``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

# Vertex characters in their fixed interchange order.  ',' '.' and '+' are
# syntax and never vertex characters; '0' is not used.
BASE_CHARS = (
    "123456789"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "abcdefghijklmnopqrstuvwxyz"
    "!\"#$%&'()*-/:;<=>?@[\\]^_`{|}~"
)
_CHAR_INDEX = {c: i for i, c in enumerate(BASE_CHARS)}
_BASE = len(BASE_CHARS)  # 90


class MmpError(ValueError):
    """Malformed MMP text or an invalid hypergraph."""


def vertex_to_chars(index: int) -> str:
    """Encode a 0-based vertex index as its MMP character sequence."""
    if index < 0:
        raise ValueError(f"negative vertex index {index}")
    return "+" * (index // _BASE) + BASE_CHARS[index % _BASE]


def chars_to_vertex(token: str) -> int:
    """Decode one '+'-prefixed character group to a 0-based vertex index."""
    plus = 0
    while plus < len(token) and token[plus] == "+":
        plus += 1
    if plus != len(token) - 1:
        raise MmpError(f"bad vertex token {token!r}")
    ch = token[-1]
    if ch not in _CHAR_INDEX:
        raise MmpError(f"character {ch!r} is not a vertex character")
    return plus * _BASE + _CHAR_INDEX[ch]


@dataclass(frozen=True)
class ParseOptions:
    """Parsing strictness.

    In lenient mode, empty edge tokens (doubled commas) are skipped and a
    missing final '.' is accepted.  Strict mode rejects any deviation from
    the grammar.
    """

    lenient: bool = False


STRICT = ParseOptions(lenient=False)
LENIENT = ParseOptions(lenient=True)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph over dense 0-based vertex ids.

    ``edges`` preserves both edge order and the vertex order within each
    edge; ``edge_sets`` carries frozenset shadows for O(1) intersection
    tests on the pipeline hot path.
    """

    num_vertices: int
    edges: tuple[tuple[int, ...], ...]
    label: str | None = None
    edge_sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "edge_sets", tuple(frozenset(e) for e in self.edges)
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def signature(self) -> str:
        """The conventional 'vertices-edges' name, e.g. '60-75'."""
        return f"{self.num_vertices}-{self.num_edges}"

    def vertex_degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def without_edge(self, index: int) -> "Hypergraph":
        """Remove one edge; vertex set unchanged (use renormalize to drop
        orphans)."""
        return Hypergraph(
            self.num_vertices,
            self.edges[:index] + self.edges[index + 1 :],
            self.label,
        )


def parse_mmp(text: str, opts: ParseOptions = STRICT) -> Hypergraph:
    """Parse one MMP line into a Hypergraph.

    Distinct characters are mapped to dense vertex ids in character-sequence
    order, so gaps in the character usage are closed on input while a
    gap-free line round-trips byte-identically through serialize_mmp.
    """
    line = text.rstrip("\r\n")
    if not line:
        raise MmpError("empty MMP line")
    if " " in line:
        raise MmpError("MMP lines contain no spaces")
    if line.endswith("."):
        body = line[:-1]
    elif opts.lenient:
        body = line
    else:
        raise MmpError("missing final '.'")
    if "." in body:
        raise MmpError("'.' before end of line")

    tokens = body.split(",")
    raw_edges: list[tuple[int, ...]] = []
    for pos, tok in enumerate(tokens):
        if not tok:
            if opts.lenient:
                continue
            raise MmpError(f"empty edge token at position {pos}")
        edge = tuple(_split_vertices(tok))
        if len(set(edge)) != len(edge):
            raise MmpError(f"repeated vertex in edge {tok!r}")
        raw_edges.append(edge)
    if not raw_edges:
        raise MmpError("no edges")

    used = sorted({v for e in raw_edges for v in e})
    remap = {v: i for i, v in enumerate(used)}
    edges = tuple(tuple(remap[v] for v in e) for e in raw_edges)
    return Hypergraph(len(used), edges)


def _split_vertices(token: str) -> Iterator[int]:
    i = 0
    while i < len(token):
        j = i
        while j < len(token) and token[j] == "+":
            j += 1
        if j >= len(token):
            raise MmpError(f"dangling '+' in edge {token!r}")
        yield chars_to_vertex(token[i : j + 1])
        i = j + 1


def serialize_mmp(h: Hypergraph) -> str:
    """Serialize to the interchange line form; inverse of parse_mmp for
    gap-free inputs."""
    return (
        ",".join("".join(vertex_to_chars(v) for v in e) for e in h.edges) + "."
    )


def renormalize(h: Hypergraph) -> Hypergraph:
    """Rename vertices to 0..k-1 in first-appearance order and drop any
    vertex no longer on an edge.  Idempotent."""
    remap: dict[int, int] = {}
    edges = []
    for e in h.edges:
        edges.append(tuple(remap.setdefault(v, len(remap)) for v in e))
    return Hypergraph(len(remap), tuple(edges), h.label)


def is_connected(h: Hypergraph) -> bool:
    """True iff the edge-intersection graph has a single component.

    Edges are adjacent when they share at least one vertex.  Hypergraphs
    with zero or one edge count as connected.
    """
    m = h.num_edges
    if m <= 1:
        return True
    # union-find over edges, linked through shared vertices
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first_edge: dict[int, int] = {}
    for ei, e in enumerate(h.edges):
        for v in e:
            if v in first_edge:
                ra, rb = find(first_edge[v]), find(ei)
                if ra != rb:
                    parent[rb] = ra
            else:
                first_edge[v] = ei
    root = find(0)
    return all(find(i) == root for i in range(1, m))


@dataclass(frozen=True)
class Violation:
    condition: str  # "i", "ii", "iii", "duplicate-edge", "repeated-vertex"
    message: str
    edges: tuple[int, ...] = ()


def validate_mmp(h: Hypergraph) -> list[Violation]:
    """Check MMP conditions (i)-(iii); the returned list is empty iff valid.

    Condition (iii) as printed is ambiguous about what n binds to; we use
    the reading that two edges sharing k common vertices must each contain
    at least k+2 vertices.  (The alternative reading -- n is the size of the
    larger edge -- flags strictly fewer pairs and would accept two identical
    tetrads, which are physically meaningless.)  Identical vertex sets are
    additionally reported as duplicate edges.
    """
    out: list[Violation] = []
    seen = [False] * h.num_vertices
    for ei, e in enumerate(h.edges):
        if len(set(e)) != len(e):
            out.append(
                Violation("repeated-vertex", f"edge {ei} repeats a vertex", (ei,))
            )
        for v in e:
            if 0 <= v < h.num_vertices:
                seen[v] = True
        if len(e) < 3:
            out.append(
                Violation(
                    "ii", f"edge {ei} has {len(e)} vertices (minimum 3)", (ei,)
                )
            )
    for v, ok in enumerate(seen):
        if not ok:
            out.append(Violation("i", f"vertex {v} belongs to no edge"))
    for i in range(h.num_edges):
        si = h.edge_sets[i]
        for j in range(i + 1, h.num_edges):
            sj = h.edge_sets[j]
            k = len(si & sj)
            if k == 0:
                continue
            if si == sj:
                out.append(
                    Violation(
                        "duplicate-edge",
                        f"edges {i} and {j} contain the same vertex set",
                        (i, j),
                    )
                )
                continue
            if min(len(si), len(sj)) < k + 2:
                out.append(
                    Violation(
                        "iii",
                        f"edges {i} and {j} share {k} vertices but one has "
                        f"fewer than {k + 2}",
                        (i, j),
                    )
                )
    return out


def read_mmp_file(
    lines: Iterable[str], opts: ParseOptions = STRICT
) -> Iterator[Hypergraph]:
    """Parse a newline-delimited sequence of MMP lines, skipping blanks."""
    for line in lines:
        if line.strip():
            yield parse_mmp(line, opts)


def write_mmp_file(hs: Iterable[Hypergraph]) -> str:
    return "".join(serialize_mmp(h) + "\n" for h in hs)


def hypergraph_from_edges(
    edges: Sequence[Sequence[int]],
    num_vertices: int | None = None,
    label: str | None = None,
) -> Hypergraph:
    """Build a Hypergraph from integer edge lists."""
    tedges = tuple(tuple(e) for e in edges)
    if num_vertices is None:
        num_vertices = max((v for e in tedges for v in e), default=-1) + 1
    return Hypergraph(num_vertices, tedges, label)
