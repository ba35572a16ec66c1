import itertools
import random

from mgrr.perms import (
    PermGroup,
    compose,
    cycle_notation,
    identity_perm,
    inverse_perm,
    perm_from_cycles,
)


def closure_size(degree, gens):
    seen = {identity_perm(degree)}
    frontier = list(seen)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = compose(p, g)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen)


def test_compose_convention():
    p = (1, 0, 2)
    q = (0, 2, 1)
    # apply p first, then q
    assert compose(p, q) == (2, 0, 1)
    assert compose(p, inverse_perm(p)) == identity_perm(3)


def test_cycle_notation():
    assert cycle_notation((1, 0, 2)) == "(0 1)"
    assert cycle_notation(identity_perm(4)) == "()"
    assert perm_from_cycles(4, [[0, 1, 2]]) == (1, 2, 0, 3)


def test_symmetric_group_order():
    gens = [perm_from_cycles(4, [[0, 1]]), perm_from_cycles(4, [[0, 1, 2, 3]])]
    G = PermGroup(4, gens)
    assert G.order() == 24
    assert G.is_transitive()
    assert not G.is_semiregular()


def test_order_vs_bfs_closure_random():
    rng = random.Random(11)
    for _ in range(60):
        degree = rng.randint(2, 6)
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = list(range(degree))
            rng.shuffle(p)
            gens.append(tuple(p))
        assert PermGroup(degree, gens).order() == closure_size(degree, gens)


def test_contains_and_sift():
    gens = [perm_from_cycles(5, [[0, 1, 2, 3, 4]])]
    G = PermGroup(5, gens)
    assert G.order() == 5
    assert G.contains(perm_from_cycles(5, [[0, 2, 4, 1, 3]]))
    assert not G.contains(perm_from_cycles(5, [[0, 1]]))


def test_point_stabilizer():
    s3 = PermGroup(3, [perm_from_cycles(3, [[0, 1]]), perm_from_cycles(3, [[0, 1, 2]])])
    assert s3.point_stabilizer(0).order() == 2
    cyclic5 = PermGroup(5, [perm_from_cycles(5, [[0, 1, 2, 3, 4]])])
    assert cyclic5.point_stabilizer(2).order() == 1
    d5 = PermGroup(5, [perm_from_cycles(5, [[0, 1, 2, 3, 4]]),
                       tuple((5 - i) % 5 for i in range(5))])
    assert d5.order() == 10
    assert d5.point_stabilizer(0).order() == 2


def test_orbits_and_semiregular():
    swap01 = perm_from_cycles(4, [[0, 1]])
    G = PermGroup(4, [swap01])
    assert G.orbits() == [[0, 1], [2], [3]]
    assert not G.is_semiregular()  # orbit {2} has size 1 < order 2
    double = perm_from_cycles(4, [[0, 1], [2, 3]])
    H = PermGroup(4, [double])
    assert H.is_semiregular()


def test_incremental_add_and_version():
    G = PermGroup(4)
    assert G.order() == 1
    grew = G.add(perm_from_cycles(4, [[0, 1]]))
    assert grew and G.order() == 2
    assert not G.add(perm_from_cycles(4, [[0, 1]]))
    G.add(perm_from_cycles(4, [[2, 3]]))
    assert G.order() == 4


def test_base_prefix_stabilizer_orbits():
    gens = [perm_from_cycles(4, [[0, 1]]), perm_from_cycles(4, [[1, 2]]), perm_from_cycles(4, [[2, 3]])]
    G = PermGroup(4, gens, base_prefix=(0, 1, 2))
    assert G.order() == 24
    roots = G.stabilizer_orbits(1)  # stabilizer of {0}: acts as Sym on {1,2,3}
    assert roots[1] == roots[2] == roots[3]
    assert roots[0] != roots[1]
    roots2 = G.stabilizer_orbits(2)  # stabilizer of (0,1)
    assert roots2[2] == roots2[3] and roots2[1] != roots2[2]


def test_elements_enumeration():
    G = PermGroup(3, [perm_from_cycles(3, [[0, 1, 2]])])
    els = G.elements()
    assert len(els) == 3
    assert identity_perm(3) in els
