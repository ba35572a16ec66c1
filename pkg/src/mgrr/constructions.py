"""Graph constructions over finite groups.

Vertex convention, fixed globally: the block-i copy of group element g is
vertex ``i*|G| + g``.  Right multiplication by G is then a semiregular group
of automorphisms with the blocks as orbits for every construction here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .digraph import Digraph
from .groups import FiniteGroup, quaternion


class ConstructionError(ValueError):
    pass


# -- connection data -------------------------------------------------------


@dataclass(frozen=True)
class ConnectionData:
    """The tuple (R, L, S, T, x) with block count m.

    R, L, T must be Cayley subsets (inverse-closed, identity-free); for the
    m >= 3 multi-block construction the sizes must satisfy
    |R| = |L| = |T| - |S| + 1 and x must avoid S.
    """

    R: tuple[int, ...]
    L: tuple[int, ...]
    S: tuple[int, ...]
    T: tuple[int, ...]
    x: int
    m: int

    def validate(self, G: FiniteGroup) -> None:
        for name, subset in (("R", self.R), ("L", self.L), ("T", self.T)):
            if not G.is_cayley_subset(subset):
                raise ConstructionError(f"{name} is not a Cayley subset (inverse-closed, identity-free)")
        if self.m >= 3:
            if len(self.R) != len(self.L) or len(self.R) != len(self.T) - len(self.S) + 1:
                raise ConstructionError(
                    f"size constraint |R| = |L| = |T| - |S| + 1 fails: "
                    f"|R|={len(self.R)}, |L|={len(self.L)}, |S|={len(self.S)}, |T|={len(self.T)}"
                )
            if self.x in self.S:
                raise ConstructionError("x must lie outside S")


@dataclass(frozen=True)
class MCayleySpec:
    """Connection-set matrix T[i][j] for an m-block Cayley digraph."""

    m: int
    T: tuple[tuple[tuple[int, ...], ...], ...]

    def validate(self, G: FiniteGroup, undirected: bool = False) -> None:
        if self.m < 1 or len(self.T) != self.m or any(len(row) != self.m for row in self.T):
            raise ConstructionError("connection matrix shape does not match m")
        for i in range(self.m):
            if 0 in self.T[i][i]:
                raise ConstructionError(f"identity in diagonal set T[{i}][{i}] would create loops")
        if undirected:
            for i in range(self.m):
                for j in range(self.m):
                    inv = tuple(sorted(G.inv[t] for t in self.T[i][j]))
                    if inv != tuple(sorted(self.T[j][i])):
                        raise ConstructionError(f"T[{j}][{i}] is not the inverse set of T[{i}][{j}]")


# -- core builders ----------------------------------------------------------


def cayley(G: FiniteGroup, R: Sequence[int]) -> Digraph:
    """Cayley digraph: arcs (g, rg) for r in R; a graph iff R is inverse-closed."""
    if 0 in R:
        raise ConstructionError("identity in the connection set would create loops")
    n = G.order
    rows = [0] * n
    for r in set(R):
        trow = G.table[r]
        for g in range(n):
            rows[g] |= 1 << trow[g]
    return Digraph(n, rows)


def coset_digraph(G: FiniteGroup, H: Sequence[int], A: Sequence[int]) -> Digraph:
    """Coset digraph on right cosets of H with arcs (Hx, Hy) iff y x^-1 in HAH."""
    H = sorted(set(H))
    if not G.is_subgroup(H):
        raise ConstructionError("H is not closed under products")
    haH = set()
    for h in H:
        for a in set(A):
            ha = G.table[h][a]
            for k in H:
                haH.add(G.table[ha][k])
    cosets = []
    coset_of = {}
    for g in range(G.order):
        if g in coset_of:
            continue
        cs = sorted(G.table[h][g] for h in H)
        for e in cs:
            coset_of[e] = len(cosets)
        cosets.append(cs)
    n = len(cosets)
    rows = [0] * n
    for i, ci in enumerate(cosets):
        x = ci[0]
        xinv = G.inv[x]
        for j, cj in enumerate(cosets):
            if i == j:
                continue
            if G.table[cj[0]][xinv] in haH:
                rows[i] |= 1 << j
    return Digraph(n, rows)


def m_cayley(G: FiniteGroup, spec: MCayleySpec) -> Digraph:
    """m-Cayley digraph: arcs (g_i, (tg)_j) for t in T[i][j]; vertex g_i = i*|G|+g."""
    spec.validate(G)
    q = G.order
    n = spec.m * q
    rows = [0] * n
    for i in range(spec.m):
        for j in range(spec.m):
            off_i, off_j = i * q, j * q
            for t in spec.T[i][j]:
                trow = G.table[t]
                for g in range(q):
                    rows[off_i + g] |= 1 << (off_j + trow[g])
    return Digraph(n, rows)


def bicay(G: FiniteGroup, R: Sequence[int], L: Sequence[int], S: Sequence[int]) -> Digraph:
    """BiCay(G,R,L,S): blocks carry Cay(G,R) and Cay(G,L), S joins block 0 to 1."""
    if not (G.is_cayley_subset(R) and G.is_cayley_subset(L)):
        raise ConstructionError("R and L must be Cayley subsets")
    s = tuple(sorted(set(S)))
    s_inv = tuple(sorted(G.inv[t] for t in s))
    spec = MCayleySpec(2, ((tuple(sorted(set(R))), s), (s_inv, tuple(sorted(set(L))))))
    return m_cayley(G, spec)


# -- the GRR-based multi-block constructions ---------------------------------


def theta_grr(G: FiniteGroup, R: Sequence[int], x: int, m: int, case_id: int) -> Digraph:
    """Multi-block graph over a GRR connection set R, per-case hypotheses:

    case 1: m >= 3, x noncentral of order > 2 -- block Cayley graphs, a
            matching between consecutive blocks, and an x-matching closing
            block m-1 back to block 0 (valency |R|+2);
    case 2: m = 2, x^2 noncentral -- edges {g_0,(rg)_0}, {g_0,(rg)_1},
            {g_0,(xg)_1} (valency |R|+1);
    case 3: m = 2, all squares central, x outside Z(G), R and of order > 2 --
            same edge families as case 1.

    The caller is responsible for R being an admissible GRR set (checked via
    the verifier module).
    """
    if not G.is_cayley_subset(R):
        raise ConstructionError("R must be a Cayley subset")
    z = set(G.center())
    if case_id == 1:
        if m < 3:
            raise ConstructionError("case 1 needs m >= 3")
        if x in z or G.element_order(x) <= 2:
            raise ConstructionError("case 1 needs x outside the center with order > 2")
    elif case_id == 2:
        if m != 2:
            raise ConstructionError("case 2 needs m = 2")
        if G.table[x][x] in z:
            raise ConstructionError("case 2 needs x^2 outside the center")
    elif case_id == 3:
        if m != 2:
            raise ConstructionError("case 3 needs m = 2")
        if not G.squares_central():
            raise ConstructionError("case 3 needs all squares central")
        if x in z or x in set(R) or G.element_order(x) <= 2:
            raise ConstructionError("case 3 needs x outside Z(G) and R, of order > 2")
    else:
        raise ConstructionError(f"unknown case id {case_id}")

    q = G.order
    n = m * q
    rows = [0] * n
    if case_id == 2:
        # two Cayley copies joined by the x-matching: (xg)_1 is the unique
        # block-1 neighbor of g_0, giving valency |R| + 1
        for r in R:
            trow = G.table[r]
            for g in range(q):
                _add_edge(rows, g, trow[g])
                _add_edge(rows, q + g, q + trow[g])
        xrow = G.table[x]
        for g in range(q):
            _add_edge(rows, g, q + xrow[g])
        return Digraph(n, rows)
    for i in range(m):
        off = i * q
        for r in R:
            trow = G.table[r]
            for g in range(q):
                _add_edge(rows, off + g, off + trow[g])
    for i in range(m - 1):
        off = i * q
        for g in range(q):
            _add_edge(rows, off + g, off + q + g)
    xrow = G.table[x]
    for g in range(q):
        _add_edge(rows, g, (m - 1) * q + xrow[g])
    return Digraph(n, rows)


def theta_general(G: FiniteGroup, cd: ConnectionData) -> Digraph:
    """The m-block graph with R on block 0, L on block 1, T on blocks 2..m-1,
    S between blocks 0-1, matchings along blocks 1..m-1, and an x-matching
    from block 0 to block m-1.  Regular of valency |T|+2."""
    if cd.m < 3:
        raise ConstructionError("the general construction needs m >= 3")
    cd.validate(G)
    q = G.order
    m = cd.m
    rows = [0] * (m * q)
    for r in cd.R:
        trow = G.table[r]
        for g in range(q):
            _add_edge(rows, g, trow[g])
    for l in cd.L:
        trow = G.table[l]
        for g in range(q):
            _add_edge(rows, q + g, q + trow[g])
    for s in cd.S:
        trow = G.table[s]
        for g in range(q):
            _add_edge(rows, g, q + trow[g])
    for i in range(2, m):
        off = i * q
        for t in cd.T:
            trow = G.table[t]
            for g in range(q):
                _add_edge(rows, off + g, off + trow[g])
    for i in range(1, m - 1):
        off = i * q
        for g in range(q):
            _add_edge(rows, off + g, off + q + g)
    xrow = G.table[cd.x]
    for g in range(q):
        _add_edge(rows, g, (m - 1) * q + xrow[g])
    return Digraph(m * q, rows)


def _add_edge(rows: list[int], u: int, v: int) -> None:
    if u == v:
        raise ConstructionError(f"construction would create a loop at vertex {u}")
    rows[u] |= 1 << v
    rows[v] |= 1 << u


# -- ad-hoc families ----------------------------------------------------------


def delta_cyclic(n: int, m: int, delta: int = 0) -> Digraph:
    """The 2n-valent graph on nm vertices over the cyclic group of order n.

    Blocks 0 and 3 are empty, blocks 1 and 2 complete, blocks 4..m-1 are
    n-cycles; between blocks: co-matchings 0-2, 3-(m-1), 1-4 and i-(i+1) for
    4 <= i <= m-2, a matching 2-3, the complete join 0-3, a shift matching
    0-1, and a shift^delta matching 1-2.  Needs gcd(1+delta, n) = 1.
    """
    if n < 3:
        raise ConstructionError("needs a cyclic group of order >= 3")
    if m < 5:
        raise ConstructionError("needs at least 5 blocks")
    if not 0 <= delta < n:
        raise ConstructionError("delta must lie in 0..n-1")
    if gcd(1 + delta, n) != 1:
        raise ConstructionError(f"gcd(1+delta, n) = gcd({1 + delta}, {n}) != 1")
    N = n * m
    rows = [0] * N

    def vx(g, i):
        return i * n + g % n

    for b in (1, 2):
        for g in range(n):
            for h in range(g + 1, n):
                _add_edge(rows, vx(g, b), vx(h, b))
    for i in range(4, m):
        for g in range(n):
            _add_edge(rows, vx(g, i), vx(g + 1, i))
    for g in range(n):
        for h in range(n):
            if g != h:
                _add_edge(rows, vx(g, 0), vx(h, 2))
                _add_edge(rows, vx(g, 3), vx(h, m - 1))
                _add_edge(rows, vx(g, 1), vx(h, 4))
    for i in range(4, m - 1):
        for g in range(n):
            for h in range(n):
                if g != h:
                    _add_edge(rows, vx(g, i), vx(h, i + 1))
    for g in range(n):
        _add_edge(rows, vx(g, 2), vx(g, 3))
        for h in range(n):
            _add_edge(rows, vx(g, 0), vx(h, 3))
        _add_edge(rows, vx(g, 0), vx(g + 1, 1))
        _add_edge(rows, vx(g, 1), vx(g + 1 + delta, 2))
    return Digraph(N, rows)


def delta_q8(m: int) -> Digraph:
    """5-valent graph on 8m vertices over Q8: block 0 = Cay(Q8,{i,i^2,i^3}),
    blocks 1..m-3 = Cay(Q8,{i^2}), block m-2 empty, block m-1 = Cay(Q8,{j,j^-1});
    double matchings (g,g),(g,ig) between consecutive blocks up to m-2 and a
    triple matching (g,g),(g,ig),(g,jg) into the last block."""
    if m < 3:
        raise ConstructionError("needs at least 3 blocks")
    Q = quaternion()
    q = Q.order
    i_el = Q.names["i"]
    j_el = Q.names["j"]
    i2 = Q.mul(i_el, i_el)
    i3 = Q.mul(i2, i_el)
    rows = [0] * (q * m)

    def block_cayley(block, conn):
        off = block * q
        for t in conn:
            trow = Q.table[t]
            for g in range(q):
                _add_edge(rows, off + g, off + trow[g])

    block_cayley(0, (i_el, i2, i3))
    for b in range(1, m - 2):
        block_cayley(b, (i2,))
    block_cayley(m - 1, (j_el, Q.inv[j_el]))
    irow = Q.table[i_el]
    jrow = Q.table[j_el]
    for b in range(m - 2):
        off = b * q
        for g in range(q):
            _add_edge(rows, off + g, off + q + g)
            _add_edge(rows, off + g, off + q + irow[g])
    off = (m - 2) * q
    for g in range(q):
        _add_edge(rows, off + g, off + q + g)
        _add_edge(rows, off + g, off + q + irow[g])
        _add_edge(rows, off + g, off + q + jrow[g])
    return Digraph(q * m, rows)


def sigma_z2z2(m: int) -> Digraph:
    """The cubic graph on 4m vertices whose automorphism group is Z2 x Z2.

    One initial 4-cycle, rungs x - x+4, two cross pairs per later layer, and
    two closing edges in the final layer.  (1-based in the construction,
    stored 0-based so that layer i is block i under the vertex convention.)
    """
    if m < 3:
        raise ConstructionError("needs at least 3 layers")
    N = 4 * m
    edges = [(1, 2), (2, 3), (3, 4), (1, 4)]
    edges += [(x, x + 4) for x in range(1, 4 * m - 3)]
    for layer in range(1, m):
        edges += [(4 * layer + 1, 4 * layer + 3), (4 * layer + 2, 4 * layer + 4)]
    edges += [(4 * m - 1, 4 * m), (4 * m - 2, 4 * m - 3)]
    return Digraph.from_edges(N, [(u - 1, v - 1) for u, v in edges])


def elementary_abelian_lift(delta: Digraph, lifted_group: FiniteGroup, m: int) -> tuple[Digraph, str]:
    """Multiply a block-regular graph by K2 to double the acting 2-group.

    ``delta`` must be an m-block graph over an elementary abelian 2-group H
    (under the vertex convention) whose full automorphism group is exactly H;
    ``lifted_group`` is H x Z2 with the Z2 factor on the right.  Returns the
    verified product (delta x K2 or, when the direct product carries extra
    symmetry, delta^c x K2) together with the branch taken.
    """
    from . import verify  # deferred: verify imports this module

    if not delta.symmetric:
        raise ConstructionError("the lift is defined for graphs only")
    k2 = Digraph.from_edges(2, [(0, 1)])
    for branch, base in (("direct", delta), ("complement", delta.complement())):
        candidate = base.cartesian_product(k2)
        ok, _ = verify.is_m_grr(lifted_group, candidate, m)
        if ok:
            return candidate, branch
    raise ConstructionError("neither the product nor its complement verified; construction chain bug")


def section5_fixture(kind: str) -> Digraph:
    """The two explicit arc lists: a 3-block DRR for the group of order 2 and a
    6-vertex regular asymmetric digraph (1-indexed as printed, stored 0-based)."""
    if kind == "z2_3drr":
        arcs = [(1, 3), (1, 6), (2, 4), (2, 5), (3, 4), (3, 6),
                (4, 3), (4, 5), (5, 1), (5, 2), (6, 1), (6, 2)]
    elif kind == "z1_6drr":
        arcs = [(1, 6), (1, 4), (2, 4), (2, 5), (3, 2), (3, 6),
                (4, 3), (4, 5), (5, 1), (5, 3), (6, 1), (6, 2)]
    else:
        raise ConstructionError(f"unknown fixture {kind!r}")
    return Digraph.from_arcs(6, [(u - 1, v - 1) for u, v in arcs])
