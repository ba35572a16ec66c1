"""Immutable digraph/graph representation on packed bit rows.

Vertices are 0..n-1.  Arcs are stored as per-vertex out-neighbor bitmasks,
which keeps adjacency tests, refinement counting and relabeling cheap.  An
object whose arc relation is symmetric is "a graph"; several operations
(distance layers, isolated vertices, Cartesian products) only make sense for
graphs and reject directed input.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 4096


class DigraphError(ValueError):
    pass


class Digraph:
    """Loop-free binary relation on n vertices, immutable after construction."""

    __slots__ = ("n", "rows", "_cols", "_symmetric")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise DigraphError("vertex set must be non-empty")
        if n > MAX_VERTICES:
            raise DigraphError(f"vertex count {n} exceeds cap {MAX_VERTICES}")
        if len(rows) != n:
            raise DigraphError("row count does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise DigraphError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise DigraphError(f"loop at vertex {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_cols", None)
        object.__setattr__(self, "_symmetric", None)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"arc ({u},{v}) out of range")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
        return cls(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"edge {{{u},{v}}} out of range")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def cycle(cls, n: int) -> "Digraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    # -- basic queries -----------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.rows[u]
            while row:
                low = row & -row
                yield (u, low.bit_length() - 1)
                row ^= low

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def edges(self) -> list[tuple[int, int]]:
        if not self.symmetric:
            raise DigraphError("edge list requires a symmetric relation")
        return [(u, v) for u, v in self.arcs() if u < v]

    def edge_count(self) -> int:
        if not self.symmetric:
            raise DigraphError("edge count requires a symmetric relation")
        return self.arc_count() // 2

    def out_neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def in_neighbors(self, v: int) -> list[int]:
        return _bits(self.cols[v])

    @property
    def cols(self) -> tuple[int, ...]:
        if self._cols is None:
            cols = [0] * self.n
            for u, row in enumerate(self.rows):
                bit = 1 << u
                while row:
                    low = row & -row
                    cols[low.bit_length() - 1] |= bit
                    row ^= low
            object.__setattr__(self, "_cols", tuple(cols))
        return self._cols

    @property
    def symmetric(self) -> bool:
        if self._symmetric is None:
            object.__setattr__(self, "_symmetric", self.rows == self.cols)
        return self._symmetric

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        kind = "Graph" if self.symmetric else "Digraph"
        return f"<{kind} n={self.n} arcs={self.arc_count()}>"

    # -- structural operations ---------------------------------------------

    def complement(self) -> "Digraph":
        full = (1 << self.n) - 1
        return Digraph(self.n, [(full ^ row) & ~(1 << v) for v, row in enumerate(self.rows)])

    def induced(self, verts: Sequence[int]) -> tuple["Digraph", list[int]]:
        """Subgraph induced on ``verts``; also returns the new->old vertex map."""
        vs = sorted(set(verts))
        if not vs:
            raise DigraphError("induced subgraph needs at least one vertex")
        if vs[0] < 0 or vs[-1] >= self.n:
            raise DigraphError("vertex out of range")
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            row = self.rows[v]
            for w in vs:
                if row >> w & 1:
                    rows[i] |= 1 << pos[w]
        return Digraph(len(vs), rows), vs

    def isolated_in_induced(self, verts: Sequence[int]) -> list[int]:
        """Vertices of ``verts`` with no neighbor inside ``verts`` (graphs only)."""
        if not self.symmetric:
            raise DigraphError("isolated-vertex sets are defined for graphs only")
        vs = sorted(set(verts))
        mask = 0
        for v in vs:
            mask |= 1 << v
        return [v for v in vs if not self.rows[v] & mask]

    def distance_layer(self, v: int, i: int) -> list[int]:
        """Vertices at BFS distance exactly i from v (graphs only)."""
        if not self.symmetric:
            raise DigraphError("distance layers are defined for graphs only")
        if not 0 <= v < self.n:
            raise DigraphError("vertex out of range")
        seen = 1 << v
        layer = 1 << v
        for _ in range(i):
            nxt = 0
            for u in _bits(layer):
                nxt |= self.rows[u]
            layer = nxt & ~seen
            seen |= layer
            if not layer:
                break
        return _bits(layer)

    def neighborhood(self, v: int) -> list[int]:
        if not self.symmetric:
            raise DigraphError("neighborhood is defined for graphs only")
        return self.out_neighbors(v)

    def neighborhood_subgraph(self, v: int) -> "Digraph":
        """The induced subgraph on the neighborhood of v."""
        sub, _ = self.induced(self.neighborhood(v))
        return sub

    def disjoint_union(self, other: "Digraph") -> "Digraph":
        rows = list(self.rows) + [row << self.n for row in other.rows]
        return Digraph(self.n + other.n, rows)

    def cartesian_product(self, other: "Digraph") -> "Digraph":
        """Vertices are pairs (u1,u2) -> u1*other.n + u2; box-product adjacency."""
        if not (self.symmetric and other.symmetric):
            raise DigraphError("Cartesian product is defined for graphs only")
        n1, n2 = self.n, other.n
        rows = [0] * (n1 * n2)
        for u1 in range(n1):
            base = u1 * n2
            shifted = self.rows[u1]
            for u2 in range(n2):
                row = other.rows[u2] << base
                r1 = shifted
                while r1:
                    low = r1 & -r1
                    row |= 1 << ((low.bit_length() - 1) * n2 + u2)
                    r1 ^= low
                rows[base + u2] = row
        return Digraph(n1 * n2, rows)

    def is_regular(self) -> Optional[int]:
        """Common in=out valency, or None if vertices disagree."""
        d = self.rows[0].bit_count()
        for row in self.rows:
            if row.bit_count() != d:
                return None
        for col in self.cols:
            if col.bit_count() != d:
                return None
        return d

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Image graph: arc (u,v) becomes (perm[u], perm[v])."""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError("relabeling must be a permutation of the vertices")
        rows = [0] * self.n
        for u, row in enumerate(self.rows):
            new = 0
            while row:
                low = row & -row
                new |= 1 << perm[low.bit_length() - 1]
                row ^= low
            rows[perm[u]] = new
        return Digraph(self.n, rows)

    def is_connected(self) -> bool:
        """Weak connectivity (treats arcs as undirected)."""
        seen = 1
        frontier = [0]
        while frontier:
            u = frontier.pop()
            reach = (self.rows[u] | self.cols[u]) & ~seen
            seen |= reach
            frontier.extend(_bits(reach))
        return seen == (1 << self.n) - 1


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
