"""Isomorph-free exhaustive generation and the desk-scale theorem census.

Generation is canonical augmentation with a seen-set: every representative
on n-1 vertices is extended by every neighborhood bitmask of a new vertex,
and a child is kept exactly when its canonical form is unseen.  Output
order is the sorted canonical forms, so two runs are byte-identical.

The census classifies every representative and cross-checks, per vertex
count, the two directions of the main characterization:

* every 2-connected wheel-free graph with no induced 3PC is Hamiltonian;
* the wheel-free HC-obstructions are exactly the wheel-free 3PCs
  (graph-by-graph, via canonical forms).

Chorded pyramid variants are HC-obstructions but contain induced wheels
(deleting the chorded path's internals leaves a short pyramid, which is a
wheel under the inclusive convention), so the comparison restricts the 3PC
side to its wheel-free members; the census still tabulates all recognized
3PCs separately.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .canon import canonical_rows, graph_from_canonical
from .errors import TooLarge
from .families import family_tables, recognize_3pc
from .graphs import Graph, encode_graph6, is_two_connected
from .hamiltonicity import _cycle_search, is_hc_obstruction
from .detectors import contains_induced_wheel, scan_contains_family

ENUMERATION_MAX_VERTICES = 10

_atlas: dict[int, tuple[bytes, ...]] = {0: (bytes([0]),)}


def resolve_jobs(jobs: Optional[int] = None) -> int:
    if jobs is not None:
        return max(1, jobs)
    env = os.environ.get("OBSTRUCTA_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _child_forms(n_parent: int, parents: list[tuple[int, ...]]) -> set[bytes]:
    """Canonical forms of all one-vertex extensions of the given parents."""
    seen: set[bytes] = set()
    newbit = n_parent
    n = n_parent + 1
    width = (n + 7) // 8
    head = bytes([n])
    for rows in parents:
        for mask in range(1 << n_parent):
            child = [0] * n
            m = mask
            for i in range(n_parent):
                child[i] = rows[i] | ((m >> i & 1) << newbit)
            child[newbit] = mask
            crows = canonical_rows(n, tuple(child))
            form = head + b"".join(r.to_bytes(width, "little") for r in crows)
            seen.add(form)
    return seen


def _forms_for(n: int, jobs: int = 1) -> tuple[bytes, ...]:
    if n in _atlas:
        return _atlas[n]
    parent_forms = _forms_for(n - 1, jobs)
    parents = [graph_from_canonical(f).rows for f in parent_forms]
    if jobs > 1 and len(parents) >= jobs:
        import multiprocessing as mp

        chunks = [parents[i::jobs] for i in range(jobs)]
        with mp.get_context("fork").Pool(jobs) as pool:
            parts = pool.starmap(_child_forms, [(n - 1, c) for c in chunks])
        seen: set[bytes] = set()
        for p in parts:
            seen |= p
    else:
        seen = _child_forms(n - 1, parents)
    forms = tuple(sorted(seen))
    _atlas[n] = forms
    return forms


def enumerate_graphs(
    n: int, predicate: Optional[Callable[[Graph], bool]] = None, jobs: Optional[int] = None
) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class, in
    sorted canonical-form order; the predicate filters after generation."""
    if n > ENUMERATION_MAX_VERTICES:
        raise TooLarge(f"enumeration capped at {ENUMERATION_MAX_VERTICES} vertices")
    if n < 0:
        raise TooLarge("vertex count must be nonnegative")
    for form in _forms_for(n, resolve_jobs(jobs)):
        g = graph_from_canonical(form)
        if predicate is None or predicate(g):
            yield g


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CensusRow:
    n: int
    all: int
    two_connected: int
    wheel_free_2conn: int
    three_pc_free_among_those: int
    hamiltonian_among_those: int
    hc_obstructions_wheel_free: int
    recognized_3pcs: int
    wheel_free_3pcs: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "all": self.all,
            "two_connected": self.two_connected,
            "wheel_free_2conn": self.wheel_free_2conn,
            "three_pc_free_among_those": self.three_pc_free_among_those,
            "hamiltonian_among_those": self.hamiltonian_among_those,
            "hc_obstructions_wheel_free": self.hc_obstructions_wheel_free,
            "recognized_3pcs": self.recognized_3pcs,
            "wheel_free_3pcs": self.wheel_free_3pcs,
        }


CSV_COLUMNS = (
    "n",
    "all",
    "two_connected",
    "wheel_free_2conn",
    "three_pc_free_among_those",
    "hamiltonian_among_those",
    "hc_obstructions_wheel_free",
    "recognized_3pcs",
    "wheel_free_3pcs",
)


@dataclass(frozen=True, slots=True)
class CensusReport:
    max_n: int
    rows: tuple[CensusRow, ...]
    counterexamples: tuple[str, ...]

    def to_json(self) -> str:
        import json

        payload = {
            "max_n": self.max_n,
            "rows": [r.to_dict() for r in self.rows],
            "counterexamples": list(self.counterexamples),
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"

    def to_csv(self) -> str:
        lines = [",".join(CSV_COLUMNS)]
        for r in self.rows:
            d = r.to_dict()
            lines.append(",".join(str(d[c]) for c in CSV_COLUMNS))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        widths = [max(len(c), 6) for c in CSV_COLUMNS]
        lines = ["  ".join(c.rjust(w) for c, w in zip(CSV_COLUMNS, widths))]
        for r in self.rows:
            d = r.to_dict()
            lines.append("  ".join(str(d[c]).rjust(w) for c, w in zip(CSV_COLUMNS, widths)))
        if self.counterexamples:
            lines.append("counterexamples: " + " ".join(self.counterexamples))
        else:
            lines.append("counterexamples: none")
        return "\n".join(lines) + "\n"


def _survey_chunk(n: int, forms: list[bytes]) -> tuple:
    """Classify a chunk of canonical forms; returns partial counts and the
    canonical forms needed for the cross-pipeline set comparisons."""
    tables = family_tables(n)
    sig_table = tables.get(n, (set(), {}))[0]
    counts = [0] * 7  # columns after "n"/"all"
    obstruction_forms: list[bytes] = []
    wheel_free_3pc_forms: list[bytes] = []
    ham_violations: list[bytes] = []
    for form in forms:
        g = graph_from_canonical(form)
        rows = g.rows
        if not is_two_connected(n, rows):
            continue
        counts[0] += 1  # two_connected
        recognized = None
        if (g.edge_count, g.degree_sequence()) in sig_table:
            recognized = recognize_3pc(g)
        if recognized is not None:
            counts[5] += 1  # recognized_3pcs
        wheel_free = not contains_induced_wheel(n, rows)
        if not wheel_free:
            continue
        counts[1] += 1  # wheel_free_2conn
        if recognized is not None:
            counts[6] += 1  # wheel_free_3pcs
            wheel_free_3pc_forms.append(form)
        ham = _cycle_search(n, rows) is not None
        has_3pc = scan_contains_family(n, rows, tables)
        if not has_3pc:
            counts[2] += 1  # three_pc_free_among_those
            if ham:
                counts[3] += 1  # hamiltonian_among_those
            else:
                ham_violations.append(form)
        if not ham and is_hc_obstruction(g).is_obstruction:
            counts[4] += 1  # hc_obstructions_wheel_free
            obstruction_forms.append(form)
    return counts, obstruction_forms, wheel_free_3pc_forms, ham_violations


def _census_rows(max_n: int, jobs: int) -> tuple[tuple[CensusRow, ...], tuple[str, ...]]:
    rows = []
    counterexamples: set[str] = set()
    for n in range(1, max_n + 1):
        forms = _forms_for(n, jobs)
        if jobs > 1 and len(forms) > 4 * jobs:
            import multiprocessing as mp

            chunks = [list(forms[i::jobs]) for i in range(jobs)]
            with mp.get_context("fork").Pool(jobs) as pool:
                parts = pool.starmap(_survey_chunk, [(n, c) for c in chunks])
        else:
            parts = [_survey_chunk(n, list(forms))]
        counts = [0] * 7
        obstruction_forms: set[bytes] = set()
        wheel_free_3pc_forms: set[bytes] = set()
        ham_violations: set[bytes] = set()
        for c, obs, wf3, hv in parts:
            counts = [a + b for a, b in zip(counts, c)]
            obstruction_forms |= set(obs)
            wheel_free_3pc_forms |= set(wf3)
            ham_violations |= set(hv)
        # Both directions are enforced rather than assumed: the census lists
        # any violator as a counterexample.
        for form in ham_violations | (obstruction_forms ^ wheel_free_3pc_forms):
            counterexamples.add(encode_graph6(graph_from_canonical(form)))
        rows.append(
            CensusRow(
                n=n,
                all=len(forms),
                two_connected=counts[0],
                wheel_free_2conn=counts[1],
                three_pc_free_among_those=counts[2],
                hamiltonian_among_those=counts[3],
                hc_obstructions_wheel_free=counts[4],
                recognized_3pcs=counts[5],
                wheel_free_3pcs=counts[6],
            )
        )
    return tuple(rows), tuple(sorted(counterexamples))


def census(max_n: int, jobs: Optional[int] = None) -> CensusReport:
    """Count table only; theorem verification is verify_main_theorem's job."""
    if max_n > ENUMERATION_MAX_VERTICES:
        raise TooLarge(f"census capped at {ENUMERATION_MAX_VERTICES} vertices")
    rows, _ = _census_rows(max_n, resolve_jobs(jobs))
    return CensusReport(max_n, rows, ())


def verify_main_theorem(max_n: int, jobs: Optional[int] = None) -> CensusReport:
    """Census plus counterexample collection for both theorem directions."""
    if max_n > ENUMERATION_MAX_VERTICES:
        raise TooLarge(f"verification capped at {ENUMERATION_MAX_VERTICES} vertices")
    rows, counterexamples = _census_rows(max_n, resolve_jobs(jobs))
    return CensusReport(max_n, rows, counterexamples)
