import math
import random

import pytest

from conftest import brute_automorphism_order
from mgrr.autgroup import (
    BudgetExceeded,
    OrderCapExceeded,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_graph,
    certificate,
    embedded_action,
    is_semiregular,
)
from mgrr.constructions import section5_fixture
from mgrr.digraph import Digraph
from mgrr.groups import make_group


def random_digraph(rng, n_max=7, p=0.4):
    n = rng.randint(1, n_max)
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p]
    return Digraph.from_arcs(n, arcs)


def test_simple_orders():
    assert automorphism_group(Digraph.complete(4)).order() == 24
    assert automorphism_group(Digraph.cycle(5)).order() == 10
    assert automorphism_group(section5_fixture("z1_6drr")).order() == 1


def test_exhaustive_small_graphs_vs_brute():
    for n in range(1, 5):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            g = Digraph.from_edges(n, edges)
            assert automorphism_group(g).order() == brute_automorphism_order(g)


def test_random_digraphs_vs_brute():
    rng = random.Random(2024)
    for _ in range(400):
        g = random_digraph(rng, n_max=6)
        assert automorphism_group(g).order() == brute_automorphism_order(g)


def test_generators_are_automorphisms():
    rng = random.Random(5)
    for _ in range(100):
        g = random_digraph(rng, n_max=7)
        aut = automorphism_group(g)
        for p in aut.generators:
            assert g.relabel(p) == g


def test_huge_symmetric_groups():
    assert automorphism_group(Digraph.empty(10)).order() == math.factorial(10)
    assert automorphism_group(Digraph.complete(9)).order() == math.factorial(9)
    k44 = Digraph.from_edges(8, [(i, j + 4) for i in range(4) for j in range(4)])
    assert automorphism_group(k44).order() == 1152


def test_canonical_form_identifies_isomorphs():
    # all labelings of the 3-path produce one certificate
    certs = set()
    for perm in ([0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]):
        g = Digraph.from_edges(3, [(0, 1), (1, 2)]).relabel(perm)
        certs.add(certificate(g))
    assert len(certs) == 1


def test_canonical_form_separates():
    c6 = Digraph.cycle(6)
    two_k3 = Digraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert certificate(c6) != certificate(two_k3)
    k33 = Digraph.from_edges(6, [(i, j + 3) for i in range(3) for j in range(3)])
    assert not are_isomorphic(k33, c6)


def test_are_isomorphic_random_relabelings():
    rng = random.Random(99)
    for _ in range(200):
        g = random_digraph(rng, n_max=10, p=0.3)
        p = list(range(g.n))
        rng.shuffle(p)
        assert are_isomorphic(g, g.relabel(p))


def test_are_isomorphic_degree_mismatch():
    a = Digraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = Digraph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert not are_isomorphic(a, b)


def test_canonical_graph_is_canonical():
    rng = random.Random(4)
    g = random_digraph(rng, n_max=8)
    cg = canonical_graph(g)
    assert are_isomorphic(g, cg)
    assert canonical_graph(cg) == cg


def test_colors_respected():
    c6 = Digraph.cycle(6)
    aut = automorphism_group(c6, colors=[0, 1, 0, 1, 0, 1])
    assert aut.order() == 6
    for p in aut.generators:
        assert all(p[v] % 2 == v % 2 for v in range(6))
    aut2 = automorphism_group(c6, colors=[0, 0, 1, 1, 1, 1])
    assert aut2.order() == 2


def test_colored_certificates():
    c4 = Digraph.cycle(4)
    assert certificate(c4, [0, 1, 0, 1]) != certificate(c4, [0, 0, 1, 1])
    # relabeling by one rotation step shifts the color classes accordingly
    assert are_isomorphic(c4, c4.relabel([1, 2, 3, 0]), [0, 1, 0, 1], [1, 0, 1, 0])


def test_bad_colorings_rejected():
    with pytest.raises(ValueError):
        automorphism_group(Digraph.cycle(3), colors=[0, 2, 0])
    with pytest.raises(ValueError):
        automorphism_group(Digraph.cycle(3), colors=[0, 0])


def test_node_budget():
    with pytest.raises(BudgetExceeded):
        automorphism_group(Digraph.empty(12), node_budget=3)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        automorphism_group(Digraph.complete(6), max_order=10)
    aut = automorphism_group(Digraph.cycle(5), max_order=10)
    assert aut.order() == 10


def test_embedded_action():
    z2 = make_group("C2")
    act = embedded_action(z2, 3)
    assert act.order() == 2
    gen = act.generators[0]
    assert gen == (1, 0, 3, 2, 5, 4)
    q8 = make_group("Q8")
    act = embedded_action(q8, 2)
    assert act.order() == 8
    assert sorted(len(o) for o in act.orbits()) == [8, 8]


def test_embedded_action_semiregular_catalog():
    for spec in ("C1", "C2", "C4", "Q8", "D12", "A(4,2)", "E2^3", "X16a"):
        G = make_group(spec)
        if G.order > 16:
            continue
        for m in range(1, 5):
            act = embedded_action(G, m)
            assert act.order() == G.order
            assert is_semiregular(act)
            assert len(act.orbits()) == m


def test_point_stabilizers_of_aut():
    aut = automorphism_group(Digraph.cycle(5))
    assert aut.point_stabilizer(0).order() == 2
    aut = automorphism_group(Digraph.complete(4))
    assert aut.point_stabilizer(2).order() == 6
