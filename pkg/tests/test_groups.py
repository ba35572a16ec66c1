import pytest
from hypothesis import given, strategies as st

from mgrr.groups import (
    FiniteGroup,
    GroupError,
    abelian,
    alt4,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian_2,
    exceptional_group,
    generalized_dicyclic,
    index_two_subgroups,
    is_generalized_dicyclic_group,
    isomorphic,
    make_group,
    q8_times_cyclic,
    quaternion,
)

ALL_SPECS = [
    "C1", "C2", "C6", "C12", "D2", "D6", "D8", "D10", "D12", "Dic12", "Dic16",
    "Q8", "Alt4", "A(4,2)", "A(3,3)", "A(6,2)", "A(2,2,2)", "E2^4",
    "GD(4,2)", "GD(4,4)", "GD(6,2)", "X16a", "X16b", "X18", "X27",
    "Q8xC3", "Q8xC4", "C2*C3", "D8*C2",
]


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_full_table_invariants(spec):
    G = make_group(spec)
    assert G.order <= 64
    G.check()  # identity, associativity over all triples, inverses
    # named generators generate (enforced at construction; re-derive)
    gens = [i for _, i in G.generator_names]
    assert G.closure(gens) == tuple(range(G.order))


def test_cyclic_trivial():
    G = cyclic(1)
    assert G.order == 1
    assert G.table == ((0,),)


def test_quaternion_unique_involution():
    Q = quaternion()
    assert Q.order == 8
    assert sum(1 for g in range(8) if Q.element_order(g) == 2) == 1
    i, j = Q.names["i"], Q.names["j"]
    assert Q.element_order(i) == 4
    assert Q.mul(j, j) == Q.mul(i, i)
    assert Q.conjugate(i, j) == Q.inv[i]


def test_element_orders():
    assert cyclic(6).element_order(cyclic(6).names["a"]) == 6
    Q = quaternion()
    assert Q.element_order(Q.mul(Q.names["i"], Q.names["i"])) == 2
    D = dihedral(8)
    assert D.element_order(D.names["b"]) == 2


def test_center_examples():
    Q = quaternion()
    z = Q.center()
    assert len(z) == 2 and Q.mul(Q.names["i"], Q.names["i"]) in z
    assert dihedral(6).center() == (0,)
    A = abelian([4, 2])
    assert A.center() == tuple(range(8))


def test_squares_central():
    assert quaternion().squares_central()
    assert not dihedral(12).squares_central()
    assert abelian([6, 2]).squares_central()


def test_closure_examples():
    C6 = cyclic(6)
    a = C6.names["a"]
    assert C6.closure([C6.power(a, 2)]) == (0, 2, 4)
    Q = quaternion()
    assert Q.closure([Q.names["i"], Q.names["j"]]) == tuple(range(8))
    D8 = dihedral(8)
    assert D8.closure([D8.names["b"]]) == (0, D8.names["b"])
    assert cyclic(5).closure([]) == (0,)


@given(st.data())
def test_closure_idempotent_monotone(data):
    G = make_group(data.draw(st.sampled_from(["C6", "D8", "Q8", "A(4,2)", "Alt4"])))
    xs = data.draw(st.sets(st.integers(0, G.order - 1), max_size=4))
    ys = xs | data.draw(st.sets(st.integers(0, G.order - 1), max_size=3))
    cx = G.closure(xs)
    assert G.closure(cx) == cx
    assert set(cx) <= set(G.closure(ys))


def test_is_cayley_subset():
    C6 = cyclic(6)
    a = C6.names["a"]
    assert C6.is_cayley_subset({a, C6.inv[a]})
    assert not C6.is_cayley_subset({a})
    assert C6.is_cayley_subset(set())


def test_involution_count():
    Q = quaternion()
    assert Q.involution_count(range(1, 8)) == 1
    E = elementary_abelian_2(3)
    assert E.involution_count(range(1, 8)) == 7
    C5 = cyclic(5)
    assert C5.involution_count([1, 4]) == 0


def test_dihedral_involution_counts():
    # order 2k: k reflections, plus the half-turn rotation when k is even
    for k in range(1, 11):
        D = dihedral(2 * k)
        want = k + 1 if k % 2 == 0 else k
        assert D.involution_count(range(1, D.order)) == want


def test_find_noncentral_highorder():
    D12 = dihedral(12)
    x = D12.find_noncentral_highorder()
    assert x == 1 and D12.element_order(x) == 6
    Q = quaternion()
    assert Q.find_noncentral_highorder() == Q.names["i"]
    assert cyclic(6).find_noncentral_highorder() is None


def test_exceptional_groups_match_presentations():
    X = exceptional_group("X16a")
    a, b, c = X.names["a"], X.names["b"], X.names["c"]
    assert X.order == 16
    for g in (a, b, c):
        assert X.element_order(g) == 2
    abc = X.mul(X.mul(a, b), c)
    bca = X.mul(X.mul(b, c), a)
    cab = X.mul(X.mul(c, a), b)
    assert abc == bca == cab

    Y = exceptional_group("X16b")
    a, b = Y.names["a"], Y.names["b"]
    assert Y.element_order(a) == 8 and Y.element_order(b) == 2
    assert Y.mul(Y.mul(b, a), b) == Y.power(a, 5)

    Z = exceptional_group("X18")
    a, b, c = Z.names["a"], Z.names["b"], Z.names["c"]
    assert Z.order == 18
    assert Z.element_order(a) == 3 and Z.element_order(b) == 3 and Z.element_order(c) == 2
    assert Z.mul(a, b) == Z.mul(b, a)
    assert Z.element_order(Z.mul(a, c)) == 2
    assert Z.element_order(Z.mul(c, b)) == 2

    W = exceptional_group("X27")
    a, b, c = W.names["a"], W.names["b"], W.names["c"]
    assert W.order == 27 and W.exponent() == 3 and len(W.center()) == 3
    assert W.mul(a, c) == W.mul(c, a)
    assert W.mul(b, c) == W.mul(c, b)
    assert W.conjugate(a, b) == W.mul(a, c)


def test_exceptional_orders_annotated():
    for spec, order in [("X16a", 16), ("X16b", 16), ("X18", 18), ("X27", 27),
                        ("Alt4", 12), ("Q8xC3", 24), ("Q8xC4", 32)]:
        assert make_group(spec).order == order


def test_q8_times_cyclic_presentation():
    G = q8_times_cyclic(3)
    a, b, c = G.names["a"], G.names["b"], G.names["c"]
    assert G.element_order(a) == 4 and G.element_order(b) == 4 and G.element_order(c) == 3
    assert G.mul(b, b) == G.mul(a, a)
    assert G.conjugate(a, b) == G.inv[a]
    assert G.mul(a, c) == G.mul(c, a)


def test_direct_product_left_major_indexing():
    A, B = cyclic(2), cyclic(3)
    P = direct_product(A, B)
    # (x1, x2) -> x1*|B| + x2
    for x1 in range(2):
        for x2 in range(3):
            for y1 in range(2):
                for y2 in range(3):
                    lhs = P.mul(x1 * 3 + x2, y1 * 3 + y2)
                    assert lhs == ((x1 + y1) % 2) * 3 + (x2 + y2) % 3


def test_abelian_invariant_chain_enforced():
    with pytest.raises(GroupError):
        abelian([2, 4])
    with pytest.raises(GroupError):
        abelian([6, 4])
    abelian([4, 2])
    abelian([6, 3])


def test_generalized_dicyclic_requirements():
    with pytest.raises(GroupError):
        generalized_dicyclic([2, 2])  # exponent 2
    with pytest.raises(GroupError):
        generalized_dicyclic([3, 3])  # odd order
    G = generalized_dicyclic([4, 2])
    b = G.names["b"]
    a1 = G.names["a1"]
    assert G.element_order(G.mul(b, b)) == 2
    assert G.conjugate(a1, b) == G.inv[a1]
    assert isomorphic(generalized_dicyclic([4]), quaternion())


def test_alt4_names():
    G = alt4()
    assert G.order == 12
    x = G.element("(2,3,4)")
    assert G.element_order(x) == 3
    t = G.element("(1,2)(3,4)")
    assert G.element_order(t) == 2
    assert G.element("1") == 0


def test_element_word_evaluation():
    D = dihedral(12)
    a, b = D.names["a"], D.names["b"]
    assert D.element("a^-1") == D.inv[a]
    assert D.element("a*b") == D.mul(a, b)
    assert D.element("(a*b)^2") == 0  # reflections square to identity
    assert D.element("a^n2") == D.power(a, 3)
    with pytest.raises(GroupError):
        D.element("zz")


def test_make_group_errors():
    for bad in ["", "C0", "D7", "Dic10", "E3^2", "A(4,3)", "X99", "foo"]:
        with pytest.raises(GroupError):
            make_group(bad)


def test_index_two_subgroups():
    D8 = dihedral(8)
    subs = index_two_subgroups(D8)
    assert len(subs) == 3
    assert all(len(s) == 4 for s in subs)
    assert index_two_subgroups(cyclic(5)) == []


def test_generalized_dicyclic_detection():
    assert is_generalized_dicyclic_group(quaternion())
    assert is_generalized_dicyclic_group(dicyclic(12))
    assert is_generalized_dicyclic_group(generalized_dicyclic([4, 4]))
    assert not is_generalized_dicyclic_group(dihedral(8))
    assert not is_generalized_dicyclic_group(cyclic(8))
    assert not is_generalized_dicyclic_group(make_group("D8*C2"))


def test_isomorphism():
    assert isomorphic(make_group("C2*C3"), cyclic(6))
    assert isomorphic(dicyclic(8), quaternion())
    assert not isomorphic(dihedral(8), quaternion())
    assert not isomorphic(exceptional_group("X16a"), exceptional_group("X16b"))
    assert not isomorphic(make_group("D8*C2"), exceptional_group("X16a"))
    assert isomorphic(make_group("A(2,2)"), make_group("E2^2"))
