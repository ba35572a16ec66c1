import pytest
from hypothesis import given, strategies as st

from mgrr.constructions import cayley
from mgrr.digraph import Digraph, DigraphError
from mgrr.groups import cyclic


def random_graph(draw, n_max=8, directed=False):
    n = draw(st.integers(1, n_max))
    pairs = [(i, j) for i in range(n) for j in range(n) if (i < j if not directed else i != j)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    if directed:
        return Digraph.from_arcs(n, chosen)
    return Digraph.from_edges(n, chosen)


graphs = st.builds(lambda: None)  # placeholder, replaced by composite below


@st.composite
def graphs_st(draw, directed=False):
    return random_graph(draw, directed=directed)


def test_no_loops_enforced():
    with pytest.raises(DigraphError):
        Digraph(3, [1, 0, 0])  # loop at vertex 0
    with pytest.raises(DigraphError):
        Digraph.from_arcs(3, [(1, 1)])


def test_vertex_cap():
    with pytest.raises(DigraphError):
        Digraph.empty(5000)


@given(graphs_st(directed=True))
def test_complement_involution(g):
    assert g.complement().complement() == g


def test_complement_examples():
    assert Digraph.empty(3).complement() == Digraph.complete(3)
    C5, R = cyclic(5), (1, 4)
    assert cayley(C5, R).complement() == cayley(C5, (2, 3))


def test_induced_examples():
    k4 = Digraph.complete(4)
    sub, vmap = k4.induced([1, 3])
    assert sub == Digraph.complete(2) and vmap == [1, 3]
    g = Digraph.cycle(6)
    assert g.induced(range(6))[0] == g
    sub, _ = g.induced([0, 2, 4])
    assert sub.arc_count() == 0


def test_isolated_in_induced():
    g = Digraph.cycle(6)
    assert g.isolated_in_induced([0, 2, 4]) == [0, 2, 4]
    k4 = Digraph.complete(4)
    assert k4.isolated_in_induced([0, 1, 2]) == []
    # worked Cayley example: all three neighbors of 1 are pairwise non-adjacent
    C6 = cyclic(6)
    g = cayley(C6, (1, 3, 5))
    assert g.isolated_in_induced([1, 3, 5]) == [1, 3, 5]
    with pytest.raises(DigraphError):
        Digraph.from_arcs(2, [(0, 1)]).isolated_in_induced([0])


def test_distance_layers():
    k4 = Digraph.complete(4)
    assert k4.distance_layer(0, 1) == [1, 2, 3]
    path = Digraph.from_edges(3, [(0, 1), (1, 2)])
    assert path.distance_layer(0, 2) == [2]
    assert path.distance_layer(0, 0) == [0]
    assert path.distance_layer(0, 5) == []


@given(graphs_st())
def test_distance_layers_partition_component(g):
    layers = []
    i = 0
    while True:
        layer = g.distance_layer(0, i)
        if not layer and i > 0:
            break
        layers.append(layer)
        i += 1
    flat = [v for layer in layers for v in layer]
    assert len(flat) == len(set(flat))


def test_disjoint_union():
    k1 = Digraph.empty(1)
    assert k1.disjoint_union(k1) == Digraph.empty(2)
    k2 = Digraph.complete(2)
    m = k2.disjoint_union(k2)
    assert sorted(m.edges()) == [(0, 1), (2, 3)]


def test_cartesian_product():
    k2 = Digraph.complete(2)
    assert k2.cartesian_product(k2) == Digraph.cycle(4).relabel([0, 1, 3, 2])
    g = Digraph.cycle(5)
    assert g.cartesian_product(Digraph.empty(1)) == g
    with pytest.raises(DigraphError):
        Digraph.from_arcs(2, [(0, 1)]).cartesian_product(k2)


@given(graphs_st(), graphs_st())
def test_cartesian_product_edge_count(g1, g2):
    p = g1.cartesian_product(g2)
    assert p.edge_count() == g2.n * g1.edge_count() + g1.n * g2.edge_count()


def test_is_regular():
    assert Digraph.complete(4).is_regular() == 3
    star = Digraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert star.is_regular() is None
    tourn = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert tourn.is_regular() == 1


def test_relabel_roundtrip():
    g = Digraph.from_arcs(4, [(0, 1), (1, 2), (3, 0)])
    p = [2, 0, 3, 1]
    inv = [0] * 4
    for i, v in enumerate(p):
        inv[v] = i
    assert g.relabel(p).relabel(inv) == g


def test_connectivity():
    assert Digraph.cycle(4).is_connected()
    assert not Digraph.empty(2).is_connected()
    assert Digraph.from_arcs(2, [(0, 1)]).is_connected()
