"""Small simple graphs as immutable bitset-adjacency values.

Vertices are always the dense range 0..n-1 with n <= 64, so every adjacency
row fits in one machine word (a Python int used as a bitmask).  Graph values
are frozen, hashable, and safe to share between threads; every operation in
this module is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import (
    CapacityExceeded,
    EdgeAbsent,
    MalformedGraph6,
    NotConnected,
    SelfLoop,
    VertexOutOfRange,
)

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62  # short form only; long forms are out of scope


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask rows."""

    n: int
    rows: tuple[int, ...]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.rows[v])

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1) << (u + 1)
            for v in bits(r):
                out.append((u, v))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True, slots=True)
class Certificate:
    """Tagged witness re-validatable against the graph it was issued for.

    Tags and payloads:
      HamCycle / HamPath        -- vertex sequence
      CutVertex                 -- (v,)
      Cutset / CliqueCutset     -- sorted vertex tuple
      TwoEdgeCutset             -- ((u1, v1), (u2, v2))
      Embedding                 -- sorted vertex tuple of an induced subgraph
      K4Subdivision             -- (branch 4-tuple, six path tuples)
      ProperTwoCutsetSplit      -- (u, v, X tuple, Y tuple)
    """

    tag: str
    payload: tuple


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or v < 0 or v >= n:
        raise VertexOutOfRange(f"vertex {v!r} outside 0..{n - 1}")


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an unordered edge list; duplicates are tolerated."""
    if n < 0 or n > MAX_VERTICES:
        raise CapacityExceeded(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise SelfLoop(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def graph_from_rows(n: int, rows: Iterable[int]) -> Graph:
    """Trusted constructor for internal callers holding valid bitmask rows."""
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6 codec (short form, printable bytes 63..126)
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Encode with the upper-triangle column-major convention, n <= 62."""
    if g.n > GRAPH6_MAX_VERTICES:
        raise CapacityExceeded(f"graph6 short form holds at most {GRAPH6_MAX_VERTICES} vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Inverse of :func:`encode_graph6`; rejects long forms and bad bytes."""
    data = text.strip()
    if not data:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(c) for c in data]
    if any(c < 63 or c > 126 for c in codes):
        raise MalformedGraph6("graph6 bytes must lie in 63..126")
    n = codes[0] - 63
    if n > GRAPH6_MAX_VERTICES:
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    body = codes[1:]
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} payload bytes for n={n}, got {len(body)}")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[pos // 6] - 63
            if byte >> (5 - pos % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge-list text format used by the CLI ("n" then one "u v" line per edge)
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedGraph6("empty edge-list input")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise MalformedGraph6(f"bad edge-list line: {exc}") from exc
    return graph_from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ---------------------------------------------------------------------------
# induced subgraphs and contraction
# ---------------------------------------------------------------------------


def induced_rows(rows: tuple[int, ...], vertices: tuple[int, ...]) -> tuple[int, ...]:
    """Rows of the induced subgraph on ``vertices`` (ascending), relabeled 0..k-1."""
    out = []
    for v in vertices:
        rv = rows[v]
        r = 0
        for i, u in enumerate(vertices):
            r |= (rv >> u & 1) << i
        out.append(r)
    return tuple(out)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph plus the order-preserving old->new label mapping."""
    vs = tuple(sorted(set(vertices)))
    for v in vs:
        _check_vertex(v, g.n)
    sub = Graph(len(vs), induced_rows(g.rows, vs))
    return sub, {old: new for new, old in enumerate(vs)}


def contract_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """Contract an edge; labels stay dense (last vertex fills the gap).

    The merged vertex keeps label min(u, v); the freed slot max(u, v) is
    reoccupied by the previous last vertex, so |V| drops by exactly one and
    parallel edges collapse.
    """
    u, v = edge
    _check_vertex(u, g.n)
    _check_vertex(v, g.n)
    if u == v or not g.has_edge(u, v):
        raise EdgeAbsent(f"({u}, {v}) is not an edge")
    u, v = min(u, v), max(u, v)
    rows = list(g.rows)
    merged = (rows[u] | rows[v]) & ~(1 << u | 1 << v)
    rows[u] = merged
    for w in range(g.n):
        if w != u:
            if merged >> w & 1:
                rows[w] |= 1 << u
            else:
                rows[w] &= ~(1 << u)
    last = g.n - 1
    if v != last:
        moved = rows[last] & ~(1 << v)
        rows[v] = moved
        for w in range(g.n):
            if w != v:
                if moved >> w & 1:
                    rows[w] |= 1 << v
                else:
                    rows[w] &= ~(1 << v)
        rows[v] &= ~(1 << last)
    for w in range(last):
        rows[w] &= ~(1 << last)
    return Graph(last, tuple(rows[:last]))


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------


def flood(rows: tuple[int, ...], seed: int, within: int) -> int:
    """Bitmask flood fill: component of ``seed`` inside ``within``."""
    comp = seed & within
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def component_masks(rows: tuple[int, ...], within: int) -> list[int]:
    """Connected components of the induced subgraph on ``within``, as masks."""
    out = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = flood(rows, seed, within)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_masked(rows: tuple[int, ...], within: int) -> bool:
    if within == 0:
        return True
    return flood(rows, within & -within, within) == within


def _cut_vertices(n: int, rows: tuple[int, ...]) -> int:
    """Bitmask of articulation vertices (union over components), via lowpoint DFS."""
    disc = [0] * n
    low = [0] * n
    cut = 0
    timer = 1
    for root in range(n):
        if disc[root]:
            continue
        # iterative DFS storing (vertex, parent, neighbor iterator)
        stack = [(root, -1, bits(rows[root]))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not disc[w]:
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, bits(rows[w])))
                    advanced = True
                    break
                elif w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        cut |= 1 << pv
        if root_children >= 2:
            cut |= 1 << root
    return cut


def is_two_connected(g_or_n, rows: Optional[tuple[int, ...]] = None) -> bool:
    """2-connected means n >= 3, connected, and no cut vertex."""
    if rows is None:
        n, rows = g_or_n.n, g_or_n.rows
    else:
        n = g_or_n
    if n < 3:
        return False
    if not is_connected_masked(rows, (1 << n) - 1):
        return False
    return _cut_vertices(n, rows) == 0


@dataclass(frozen=True, slots=True)
class ConnectivityReport:
    connected: bool
    components: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    two_connected: bool


def connectivity_report(g: Graph) -> ConnectivityReport:
    comps = component_masks(g.rows, g.vertex_mask)
    cut = _cut_vertices(g.n, g.rows)
    connected = len(comps) <= 1
    return ConnectivityReport(
        connected=connected,
        components=tuple(frozenset(bits(c)) for c in comps),
        cut_vertices=frozenset(bits(cut)),
        two_connected=g.n >= 3 and connected and cut == 0,
    )


# ---------------------------------------------------------------------------
# clique cutsets
# ---------------------------------------------------------------------------


def _all_cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every clique (as a sorted vertex tuple), smallest first then lexicographic."""
    # Recursive extension to higher-labeled common neighbors; grouped by size.
    by_size: dict[int, list[tuple[int, ...]]] = {}

    def grow(clique: tuple[int, ...], common: int) -> None:
        by_size.setdefault(len(clique), []).append(clique)
        for v in bits(common):
            grow(clique + (v,), common & g.rows[v] & ~((1 << (v + 1)) - 1))

    for v in range(g.n):
        grow((v,), g.rows[v] & ~((1 << (v + 1)) - 1))
    for size in sorted(by_size):
        yield from sorted(by_size[size])


def find_clique_cutset(g: Graph) -> Optional[tuple[frozenset[int], tuple[frozenset[int], ...]]]:
    """First clique (size ascending, then lexicographic) whose removal disconnects g."""
    if not is_connected_masked(g.rows, g.vertex_mask):
        raise NotConnected("clique cutset search requires a connected graph")
    full = g.vertex_mask
    for clique in _all_cliques(g):
        cm = mask_of(clique)
        rest = full & ~cm
        if rest == 0:
            continue
        comps = component_masks(g.rows, rest)
        if len(comps) >= 2:
            return frozenset(clique), tuple(frozenset(bits(c)) for c in comps)
    return None


# ---------------------------------------------------------------------------
# line graph
# ---------------------------------------------------------------------------


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph plus the vertex->edge index mapping (lexicographic edge order)."""
    edges = g.edges()
    if len(edges) > MAX_VERTICES:
        raise CapacityExceeded(f"line graph would need {len(edges)} > {MAX_VERTICES} vertices")
    k = len(edges)
    rows = [0] * k
    for i, j in combinations(range(k), 2):
        a, b = edges[i], edges[j]
        if a[0] in b or a[1] in b:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(k, tuple(rows)), tuple(edges)


# ---------------------------------------------------------------------------
# small structural predicates shared across modules
# ---------------------------------------------------------------------------


def is_cycle_graph(g: Graph) -> bool:
    """Whole graph is a single cycle."""
    return (
        g.n >= 3
        and all(r.bit_count() == 2 for r in g.rows)
        and is_connected_masked(g.rows, g.vertex_mask)
    )


def is_path_graph(g: Graph) -> bool:
    """Whole graph is a simple path (a single vertex counts)."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    return (
        g.edge_count == g.n - 1
        and max(r.bit_count() for r in g.rows) <= 2
        and is_connected_masked(g.rows, g.vertex_mask)
    )
