"""Shared test fixtures-in-code: a zoo of named graphs plus independent
brute-force oracles.  The oracles deliberately avoid the library's search
and canonicalization code paths so agreement tests are two-route checks.
"""

from __future__ import annotations

import itertools

from obstructa.graphs import Graph, bits, flood, graph_from_edges, induced_rows


# ---------------------------------------------------------------------------
# zoo
# ---------------------------------------------------------------------------


def cycle(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return graph_from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def claw() -> Graph:
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])


def diamond() -> Graph:
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return graph_from_edges(10, outer + inner + spokes)


def subdivide_every_edge(g: Graph) -> Graph:
    """Replace each edge by a path of length two through a fresh vertex."""
    edges = []
    nxt = g.n
    for u, v in g.edges():
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    return graph_from_edges(nxt, edges)


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return graph_from_edges(n, edges)


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------


def ham_cycle_brute(g: Graph) -> bool:
    """Permutation enumeration anchored at 0, orientation halved."""
    n = g.n
    if n < 3:
        return False
    rows = g.rows
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        prev = 0
        ok = True
        for v in perm:
            if not rows[prev] >> v & 1:
                ok = False
                break
            prev = v
        if ok and rows[prev] & 1:
            return True
    return False


def ham_path_brute(g: Graph) -> bool:
    n = g.n
    if n == 0:
        return False
    if n == 1:
        return True
    rows = g.rows
    for perm in itertools.permutations(range(n)):
        if perm[0] > perm[-1]:
            continue
        ok = True
        for a, b in zip(perm, perm[1:]):
            if not rows[a] >> b & 1:
                ok = False
                break
        if ok:
            return True
    return False


def is_wheel_brute(g: Graph) -> bool:
    """Whole-graph wheel test written directly from the definition."""
    if g.n < 4:
        return False
    for hub in range(g.n):
        rim = [v for v in range(g.n) if v != hub]
        if sum(1 for v in rim if g.has_edge(hub, v)) < 3:
            continue
        rim_mask = sum(1 << v for v in rim)
        if all((g.rows[v] & rim_mask).bit_count() == 2 for v in rim) and flood(
            g.rows, 1 << rim[0], rim_mask
        ) == rim_mask:
            return True
    return False


def wheel_subset_oracle(g: Graph) -> bool:
    """Induced wheel containment by testing every subset against the definition."""
    for size in range(4, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            if is_wheel_brute(Graph(size, induced_rows(g.rows, subset))):
                return True
    return False


def isomorphic_brute(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism with degree pruning; no canonical forms."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    n = g1.n
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for u in range(v):
                if g1.has_edge(u, v) != g2.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


def threepc_subset_oracle(g: Graph, spec_graphs: dict[int, list[Graph]]) -> bool:
    """Induced 3PC containment via brute isomorphism against built specs.

    ``spec_graphs`` maps vertex count to the list of constructed 3PC graphs.
    """
    for size in range(5, g.n + 1):
        candidates = spec_graphs.get(size, [])
        if not candidates:
            continue
        for subset in itertools.combinations(range(g.n), size):
            sub = Graph(size, induced_rows(g.rows, subset))
            for h in candidates:
                if isomorphic_brute(sub, h):
                    return True
    return False


def k4_minor_oracle(g: Graph) -> bool:
    """Minor-model enumeration: four disjoint connected sets, pairwise joined."""
    n = g.n
    if n < 4:
        return False
    conn: list[int] = []
    nbr: dict[int, int] = {}
    for s in range(1, 1 << n):
        if flood(g.rows, s & -s, s) == s:
            conn.append(s)
            reach = 0
            for v in bits(s):
                reach |= g.rows[v]
            nbr[s] = reach & ~s
    for a in conn:
        for b in conn:
            if b & a or (b & -b) < (a & -a) or not nbr[a] & b:
                continue
            ab = a | b
            for c in conn:
                if c & ab or (c & -c) < (b & -b) or not (nbr[a] & c and nbr[b] & c):
                    continue
                abc = ab | c
                for d in conn:
                    if d & abc or (d & -d) < (c & -c):
                        continue
                    if nbr[a] & d and nbr[b] & d and nbr[c] & d:
                        return True
    return False


def labeled_class_count(n: int) -> int:
    """Number of isomorphism classes by canonicalizing every labeled graph."""
    from obstructa.canon import canonical_rows

    seen = set()
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        seen.add(canonical_rows(n, tuple(rows)))
    return len(seen)
