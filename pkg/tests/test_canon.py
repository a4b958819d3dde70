import itertools
import random

import helpers
from obstructa.canon import (
    are_isomorphic,
    automorphism_count,
    canonical_form,
    canonical_rows,
    graph_from_canonical,
)
from obstructa.families import ThreePcSpec, build_3pc
from obstructa.graphs import graph_from_edges


def permuted(g, perm):
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_invariance_under_relabeling_1000_trials():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 9)
        g = helpers.random_graph(rng, n, rng.random())
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(permuted(g, perm))


def test_distinct_forms_for_distinct_classes_n4():
    # all 11 classes on four vertices get 11 distinct forms
    forms = set()
    pairs = list(itertools.combinations(range(4), 2))
    for code in range(1 << 6):
        edges = [pairs[i] for i in range(6) if code >> i & 1]
        forms.add(canonical_form(graph_from_edges(4, edges)))
    assert len(forms) == 11


def test_c4_differs_from_k3_plus_isolated():
    c4 = helpers.cycle(4)
    k3_plus = graph_from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert canonical_form(c4) != canonical_form(k3_plus)
    assert not are_isomorphic(c4, k3_plus)


def test_theta_length_order_irrelevant():
    a = build_3pc(ThreePcSpec.of("theta", (2, 2, 3)))
    b = build_3pc(ThreePcSpec.of("theta", (3, 2, 2)))
    assert canonical_form(a) == canonical_form(b)


def test_canonical_rows_is_a_relabeling():
    rng = random.Random(7)
    for _ in range(200):
        g = helpers.random_graph(rng, rng.randint(1, 8), 0.4)
        rep = graph_from_canonical(canonical_form(g))
        assert rep.degree_sequence() == g.degree_sequence()
        assert rep.edge_count == g.edge_count
        assert helpers.isomorphic_brute(rep, g)


def test_are_isomorphic_agrees_with_brute(atlas8):
    rng = random.Random(13)
    pool = [g for n in range(4, 7) for g in atlas8[n]]
    for _ in range(300):
        a, b = rng.choice(pool), rng.choice(pool)
        assert are_isomorphic(a, b) == helpers.isomorphic_brute(a, b)


def test_automorphism_counts_known():
    assert automorphism_count(helpers.complete(4)) == 24
    assert automorphism_count(helpers.cycle(5)) == 10
    assert automorphism_count(helpers.path(3)) == 2
    assert automorphism_count(graph_from_edges(5, [])) == 120
    assert automorphism_count(helpers.complete_bipartite(3, 3)) == 72
    assert automorphism_count(helpers.petersen()) == 120
    assert automorphism_count(helpers.claw()) == 6
