"""Induced-subgraph detection: wheels, 3PCs, and per-graph classification.

A wheel here is the inclusive convention used throughout this package: a rim
cycle of any length >= 3 plus a hub with at least three rim neighbors, so K4
is a wheel.  Containment means an induced subgraph isomorphic to some wheel,
equivalently a hub vertex v and an induced cycle of G - v holding >= 3
neighbors of v.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .canon import canonical_rows
from .errors import TooLarge
from .families import ThreePcSpec, family_tables, format_spec, recognize_3pc
from .graphs import Graph, bits, flood, induced_rows, is_connected_masked, is_two_connected
from .hamiltonicity import find_hamiltonian_cycle, is_hc_obstruction

DETECT_3PC_MAX_VERTICES = 20  # subset-enumeration baseline
CLASSIFY_MAX_VERTICES = 16  # bounded by the obstruction minimality check


# ---------------------------------------------------------------------------
# wheels
# ---------------------------------------------------------------------------


def find_induced_wheel(g: Graph) -> Optional[tuple[int, tuple[int, ...]]]:
    """First (hub, rim) with the rim an induced cycle of G - hub through >= 3
    hub neighbors.  Hubs are tried by ascending label; rims by induced-cycle
    DFS anchored at the least rim vertex, neighbors ascending; branches that
    can no longer reach three hub neighbors are cut.
    """
    n, rows = g.n, g.rows
    full = g.vertex_mask

    def search(hub: int) -> Optional[tuple[int, ...]]:
        hubrow = rows[hub]
        if hubrow.bit_count() < 3:
            return None

        def dfs(path: list[int], cand: int, hub_hits: int) -> Optional[tuple[int, ...]]:
            if hub_hits + (cand & hubrow).bit_count() < 3:
                return None
            last = path[-1]
            anchor_bit = 1 << path[0]
            first = len(path) == 1
            for w in bits(rows[last] & cand):
                wbit = 1 << w
                if not first and rows[w] & anchor_bit:
                    # anchor-adjacent vertices can only close the cycle
                    if path[1] < w:
                        hits = hub_hits + (1 if hubrow & wbit else 0)
                        if hits >= 3:
                            return tuple(path) + (w,)
                    continue
                nxt = cand & ~wbit if first else cand & ~rows[last] & ~wbit
                got = dfs(path + [w], nxt, hub_hits + (1 if hubrow & wbit else 0))
                if got is not None:
                    return got
            return None

        for anchor in range(n):
            if anchor == hub:
                continue
            cand = full & ~(1 << hub) & ~((1 << (anchor + 1)) - 1)
            got = dfs([anchor], cand, 1 if hubrow >> anchor & 1 else 0)
            if got is not None:
                return got
        return None

    for hub in range(n):
        rim = search(hub)
        if rim is not None:
            return hub, rim
    return None


def is_wheel_graph(g: Graph) -> bool:
    """Whole-graph wheel recognition: some vertex of degree >= 3 whose removal
    leaves exactly a spanning induced cycle."""
    if g.n < 4:
        return False
    full = g.vertex_mask
    for hub in range(g.n):
        if g.rows[hub].bit_count() < 3:
            continue
        rest = full & ~(1 << hub)
        if all((g.rows[v] & rest).bit_count() == 2 for v in bits(rest)) and is_connected_masked(
            g.rows, rest
        ):
            return True
    return False


def contains_induced_wheel(n: int, rows: tuple[int, ...]) -> bool:
    """Full-subset wheel containment: scans every induced cycle, then hubs."""
    full = (1 << n) - 1
    for sub in range(7, full + 1):
        if sub.bit_count() < 3:
            continue
        m = sub
        is_cycle = True
        while m:
            b = m & -m
            if (rows[b.bit_length() - 1] & sub).bit_count() != 2:
                is_cycle = False
                break
            m ^= b
        if not is_cycle:
            continue
        if flood(rows, sub & -sub, sub) != sub:
            continue
        rest = full & ~sub
        while rest:
            b = rest & -rest
            rest ^= b
            if (rows[b.bit_length() - 1] & sub).bit_count() >= 3:
                return True
    return False


# ---------------------------------------------------------------------------
# 3PCs
# ---------------------------------------------------------------------------


def find_induced_3pc(g: Graph) -> Optional[tuple[ThreePcSpec, frozenset[int]]]:
    """First vertex subset (size ascending, then lexicographic) inducing a 3PC.

    Subsets whose induced graph has a vertex of degree < 2 or is disconnected
    are skipped; neither can carry a 3PC.
    """
    if g.n > DETECT_3PC_MAX_VERTICES:
        raise TooLarge(f"3PC detection capped at {DETECT_3PC_MAX_VERTICES} vertices")
    for size in range(5, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub = induced_rows(g.rows, subset)
            if any(r.bit_count() < 2 for r in sub):
                continue
            if not is_connected_masked(sub, (1 << size) - 1):
                continue
            spec = recognize_3pc(Graph(size, sub))
            if spec is not None:
                return spec, frozenset(subset)
    return None


def scan_contains_family(n: int, rows: tuple[int, ...], tables) -> bool:
    """Membership scan: does some induced subgraph land in the canonical tables?

    ``tables`` maps subgraph order k to (degree-signature set, canon dict) as
    produced by :func:`obstructa.families.family_tables`.
    """
    if not tables:
        return False
    sizes = set(tables)
    for sub in range(1 << n):
        k = sub.bit_count()
        if k not in sizes:
            continue
        sigs, canons = tables[k]
        degs = []
        m2 = 0
        ok = True
        m = sub
        while m:
            b = m & -m
            d = (rows[b.bit_length() - 1] & sub).bit_count()
            if d < 2:
                ok = False
                break
            degs.append(d)
            m2 += d
            m ^= b
        if not ok:
            continue
        if (m2 // 2, tuple(sorted(degs))) not in sigs:
            continue
        if flood(rows, sub & -sub, sub) != sub:
            continue
        verts = tuple(bits(sub))
        if canonical_rows(k, induced_rows(rows, verts)) in canons:
            return True
    return False


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ClassificationRecord:
    two_connected: bool
    wheel_free: bool
    contains_3pc: bool
    hamiltonian: bool
    hc_obstruction: bool
    recognized_3pc: Optional[ThreePcSpec]

    def to_dict(self) -> dict:
        return {
            "two_connected": self.two_connected,
            "wheel_free": self.wheel_free,
            "contains_3pc": self.contains_3pc,
            "hamiltonian": self.hamiltonian,
            "hc_obstruction": self.hc_obstruction,
            "recognized_3pc": format_spec(self.recognized_3pc) if self.recognized_3pc else None,
        }


def classify(g: Graph) -> ClassificationRecord:
    """Full per-graph verdict vector, delegating to the module detectors."""
    if g.n > CLASSIFY_MAX_VERTICES:
        raise TooLarge(f"classification capped at {CLASSIFY_MAX_VERTICES} vertices")
    return ClassificationRecord(
        two_connected=is_two_connected(g),
        wheel_free=find_induced_wheel(g) is None,
        contains_3pc=find_induced_3pc(g) is not None,
        hamiltonian=find_hamiltonian_cycle(g).found,
        hc_obstruction=is_hc_obstruction(g).is_obstruction,
        recognized_3pc=recognize_3pc(g),
    )
