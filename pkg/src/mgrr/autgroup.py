"""From-scratch automorphism group and canonical form computation.

The engine runs equitable partition refinement (counting out- and in-degrees
toward splitter cells) plus individualization backtracking:

* ``automorphism_group`` explores the search tree relative to its first leaf,
  harvesting automorphisms from leaves with an equal certificate.  Pruning:
  node traces must match the first path, orbit pruning along the first path
  uses prefix stabilizers of the group discovered so far, and each discovered
  automorphism triggers a backjump to the deepest ancestor on the first path.
* ``canonical_form`` re-runs the tree keeping the lexicographically least
  (trace path, leaf certificate) pair, pruning sibling branches that are
  equivalent under the now fully known automorphism group.

Target cell: first smallest non-singleton cell; children explored in
ascending vertex order.  Everything is deterministic.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .digraph import Digraph
from .groups import FiniteGroup
from .perms import Perm, PermGroup, compose, inverse_perm

DEFAULT_NODE_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """The search tree exceeded its node budget (never a wrong answer)."""


class OrderCapExceeded(RuntimeError):
    """Discovered automorphism group already larger than the requested cap."""

    def __init__(self, lower_bound: int):
        super().__init__(f"automorphism group order exceeds cap (>= {lower_bound})")
        self.lower_bound = lower_bound


class _Backjump(Exception):
    def __init__(self, depth: int):
        self.depth = depth


Cells = list[tuple[int, ...]]


class _Refiner:
    """Equitable refinement of ordered partitions over one fixed digraph."""

    def __init__(self, g: Digraph):
        self.n = g.n
        self.rows = g.rows
        self.directed = not g.symmetric
        self.cols = g.cols if self.directed else g.rows

    def refine(self, cells: Cells, seed: Optional[list[int]] = None) -> tuple[Cells, tuple[int, ...]]:
        """Refine to an equitable partition; returns (cells, trace).

        ``seed`` lists positions of cells to use as initial splitters; by
        default every cell is a splitter (full refinement from scratch).
        """
        rows, cols, directed = self.rows, self.cols, self.directed
        cells = list(cells)
        log: list[tuple[int, ...]] = [cells[i] for i in (seed if seed is not None else range(len(cells)))]
        trace: list[int] = []
        si = 0
        while si < len(log):
            splitter = log[si]
            si += 1
            smask = 0
            for v in splitter:
                smask |= 1 << v
            ci = 0
            while ci < len(cells):
                cell = cells[ci]
                if len(cell) == 1:
                    ci += 1
                    continue
                if directed:
                    keys = [((rows[v] & smask).bit_count() << 16) | (cols[v] & smask).bit_count() for v in cell]
                else:
                    keys = [(rows[v] & smask).bit_count() for v in cell]
                k0 = keys[0]
                if all(k == k0 for k in keys[1:]):
                    ci += 1
                    continue
                buckets: dict[int, list[int]] = {}
                for v, k in zip(cell, keys):
                    buckets.setdefault(k, []).append(v)
                parts = [tuple(buckets[k]) for k in sorted(buckets)]
                cells[ci : ci + 1] = parts
                trace.append(si)
                trace.append(ci)
                for k in sorted(buckets):
                    trace.append(k)
                    trace.append(len(buckets[k]))
                log.extend(parts)
                ci += len(parts)
        return cells, tuple(trace)


def _individualize(cells: Cells, pos: int, v: int) -> Cells:
    cell = cells[pos]
    rest = tuple(x for x in cell if x != v)
    return cells[:pos] + [(v,), rest] + cells[pos + 1 :]


def _target_cell(cells: Cells) -> int:
    best = -1
    best_len = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best_len is None or len(c) < best_len):
            best, best_len = i, len(c)
    return best


def _leaf_labeling(cells: Cells, n: int) -> Perm:
    """vertex -> position map of a discrete partition."""
    pv = [0] * n
    for pos, cell in enumerate(cells):
        pv[cell[0]] = pos
    return tuple(pv)


def _leaf_cert(g: Digraph, pv: Perm) -> bytes:
    """Adjacency in position space, as bytes."""
    n = g.n
    rows = [0] * n
    for v, row in enumerate(g.rows):
        new = 0
        while row:
            low = row & -row
            new |= 1 << pv[low.bit_length() - 1]
            row ^= low
        rows[pv[v]] = new
    width = (n + 7) // 8
    return b"".join(r.to_bytes(width, "little") for r in rows)


def _initial_cells(n: int, colors: Optional[Sequence[int]]) -> Cells:
    if colors is None:
        return [tuple(range(n))]
    if len(colors) != n:
        raise ValueError("coloring length does not match vertex count")
    classes = sorted(set(colors))
    if classes != list(range(len(classes))):
        raise ValueError("colors must form an initial segment 0..k-1")
    return [tuple(v for v in range(n) if colors[v] == c) for c in classes]


class _AutSearch:
    def __init__(self, g: Digraph, colors, node_budget: int, max_order: Optional[int]):
        self.g = g
        self.refiner = _Refiner(g)
        self.node_budget = node_budget
        self.max_order = max_order
        self.nodes = 0
        self.colors = colors
        # first-leaf data
        self.first_done = False
        self.first_traces: list[tuple[int, ...]] = []
        self.first_path: list[int] = []
        self.first_pv: Optional[Perm] = None
        self.first_cert: Optional[bytes] = None
        self.path: list[int] = []
        self.group: Optional[PermGroup] = None
        self._orbit_cache: dict[int, tuple[int, list[int]]] = {}

    def run(self) -> PermGroup:
        cells, trace = self.refiner.refine(_initial_cells(self.g.n, self.colors))
        try:
            self._node(cells, trace, 0, True)
        except _Backjump:
            raise AssertionError("backjump escaped the root")
        group = self.group if self.group is not None else PermGroup(self.g.n)
        return group

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded(f"automorphism search exceeded {self.node_budget} nodes")

    def _node(self, cells: Cells, trace: tuple[int, ...], depth: int, on_first: bool):
        self._tick()
        if self.first_done:
            if trace != self.first_traces[depth]:
                return
        else:
            self.first_traces.append(trace)
        pos = _target_cell(cells)
        if pos < 0:
            self._leaf(cells)
            return
        cell = cells[pos]
        explored: list[int] = []
        for v in cell:  # cells keep ascending vertex order
            if explored and on_first and self.group is not None and self.group.order() > 1:
                roots = self._stab_roots(depth)
                rv = roots[v]
                if any(roots[u] == rv for u in explored):
                    explored.append(v)
                    continue
            child = _individualize(cells, pos, v)
            child, ctrace = self.refiner.refine(child, seed=[pos, pos + 1])
            self.path.append(v)
            child_on_first = on_first and (
                not self.first_done or (depth < len(self.first_path) and v == self.first_path[depth])
            )
            try:
                self._node(child, ctrace, depth + 1, child_on_first)
            except _Backjump as bj:
                self.path.pop()
                if bj.depth < depth:
                    raise
                explored.append(v)
                continue
            self.path.pop()
            explored.append(v)

    def _leaf(self, cells: Cells):
        pv = _leaf_labeling(cells, self.g.n)
        if not self.first_done:
            self.first_done = True
            self.first_pv = pv
            self.first_cert = _leaf_cert(self.g, pv)
            self.first_path = list(self.path)
            self.group = PermGroup(self.g.n, base_prefix=tuple(self.first_path))
            return
        cert = _leaf_cert(self.g, pv)
        if cert != self.first_cert:
            return
        # map: vertex at position i of the first leaf -> vertex at position i here
        aut = compose(self.first_pv, inverse_perm(pv))
        if not _is_automorphism(self.g, aut):
            raise AssertionError("equal certificates produced a non-automorphism")
        grew = self.group.add(aut)
        if grew:
            self._orbit_cache.clear()
            if self.max_order is not None and self.group.order() > self.max_order:
                raise OrderCapExceeded(self.group.order())
        common = 0
        for a, b in zip(self.path, self.first_path):
            if a != b:
                break
            common += 1
        raise _Backjump(common)

    def _stab_roots(self, depth: int) -> list[int]:
        cached = self._orbit_cache.get(depth)
        if cached is not None and cached[0] == self.group.version:
            return cached[1]
        roots = self.group.stabilizer_orbits(depth)
        self._orbit_cache[depth] = (self.group.version, roots)
        return roots


def _is_automorphism(g: Digraph, p: Perm) -> bool:
    rows = g.rows
    for u, row in enumerate(rows):
        target = rows[p[u]]
        mapped = 0
        while row:
            low = row & -row
            mapped |= 1 << p[low.bit_length() - 1]
            row ^= low
        if mapped != target:
            return False
    return True


class _CanonSearch:
    """Minimize (trace path, leaf certificate) lexicographically.

    Node traces are label-independent, so the minimizing leaf is the same for
    every relabeling of the input; orbit pruning under the full automorphism
    group skips sibling subtrees with identical leaf keys.
    """

    def __init__(self, g: Digraph, colors, group: PermGroup, node_budget: int):
        self.g = g
        self.refiner = _Refiner(g)
        self.group = group
        self.node_budget = node_budget
        self.nodes = 0
        self.colors = colors
        self.cur_traces: list[tuple[int, ...]] = []
        self.best_traces: Optional[list[tuple[int, ...]]] = None
        self.best_cert: Optional[bytes] = None
        self.best_pv: Optional[Perm] = None
        self.best_gen = 0  # bumped whenever the best leaf is replaced

    def run(self) -> tuple[Perm, bytes]:
        cells, trace = self.refiner.refine(_initial_cells(self.g.n, self.colors))
        stab = self.group if self.group.order() > 1 else None
        self._node(cells, trace, 0, stab, equal_so_far=True)
        return self.best_pv, self.best_cert

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded(f"canonical search exceeded {self.node_budget} nodes")

    def _node(self, cells: Cells, trace: tuple[int, ...], depth: int, stab: Optional[PermGroup], equal_so_far: bool):
        self._tick()
        if self.best_traces is not None and equal_so_far:
            if depth >= len(self.best_traces):
                raise AssertionError("trace-equal paths disagree on leaf depth")
            bt = self.best_traces[depth]
            if trace > bt:
                return
            if trace < bt:
                equal_so_far = False
        self.cur_traces.append(trace)
        try:
            pos = _target_cell(cells)
            if pos < 0:
                self._leaf(cells, equal_so_far)
                return
            cell = cells[pos]
            roots = _orbit_roots(self.g.n, stab.generators) if stab is not None else None
            explored_roots: set[int] = set()
            entry_gen = self.best_gen
            for v in cell:
                if roots is not None:
                    rv = roots[v]
                    if rv in explored_roots:
                        continue
                    explored_roots.add(rv)
                if self.best_gen != entry_gen:
                    # best was replaced inside this subtree; this node is an
                    # ancestor of the new best, so its prefix matches exactly
                    equal_so_far = True
                    entry_gen = self.best_gen
                child = _individualize(cells, pos, v)
                child, ctrace = self.refiner.refine(child, seed=[pos, pos + 1])
                child_stab = None
                if stab is not None:
                    sub = stab.point_stabilizer(v)
                    if sub.order() > 1:
                        child_stab = sub
                self._node(child, ctrace, depth + 1, child_stab, equal_so_far)
        finally:
            self.cur_traces.pop()

    def _leaf(self, cells: Cells, equal_so_far: bool):
        pv = _leaf_labeling(cells, self.g.n)
        cert = _leaf_cert(self.g, pv)
        if self.best_cert is not None and equal_so_far and cert >= self.best_cert:
            return
        self.best_cert = cert
        self.best_pv = pv
        self.best_traces = list(self.cur_traces)
        self.best_gen += 1


def _orbit_roots(n: int, gens: Sequence[Perm]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return [find(v) for v in range(n)]


def automorphism_group(
    g: Digraph,
    colors: Optional[Sequence[int]] = None,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_order: Optional[int] = None,
) -> PermGroup:
    """Full (color-preserving) automorphism group, with exact order.

    ``max_order`` aborts with OrderCapExceeded as soon as the discovered
    subgroup is provably larger; useful for sweep rejection, never wrong.
    """
    search = _AutSearch(g, colors, node_budget, max_order)
    return search.run()


def canonical_form(
    g: Digraph,
    colors: Optional[Sequence[int]] = None,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[Perm, bytes]:
    """Canonical relabeling (vertex -> position) and certificate bytes.

    Certificates of two digraphs are equal iff the colored digraphs are
    isomorphic.
    """
    group = automorphism_group(g, colors, node_budget=node_budget)
    search = _CanonSearch(g, colors, group, node_budget)
    pv, cert = search.run()
    header = b"D" if not g.symmetric else b"U"
    header += g.n.to_bytes(4, "little")
    if colors is not None:
        sizes = [0] * (max(colors) + 1)
        for c in colors:
            sizes[c] += 1
        header += b"|" + b",".join(str(s).encode() for s in sizes) + b"|"
    return pv, header + cert


def certificate(g: Digraph, colors: Optional[Sequence[int]] = None, **kw) -> bytes:
    return canonical_form(g, colors, **kw)[1]


def canonical_graph(g: Digraph, colors: Optional[Sequence[int]] = None) -> Digraph:
    pv, _ = canonical_form(g, colors)
    return g.relabel(pv)


def are_isomorphic(
    g1: Digraph,
    g2: Digraph,
    colors1: Optional[Sequence[int]] = None,
    colors2: Optional[Sequence[int]] = None,
) -> bool:
    """Colored-digraph isomorphism via certificate comparison."""
    if g1.n != g2.n or g1.arc_count() != g2.arc_count():
        return False
    if g1.symmetric != g2.symmetric:
        return False
    return certificate(g1, colors1) == certificate(g2, colors2)


def embedded_action(G: FiniteGroup, m: int) -> PermGroup:
    """Right-multiplication copy of G on m blocks: g_i -> (gh)_i, vertex g_i = i*|G|+g."""
    if m < 1:
        raise ValueError("m must be >= 1")
    q = G.order
    gens = []
    for _, h in G.generator_names:
        img = [0] * (m * q)
        for i in range(m):
            base = i * q
            for g in range(q):
                img[base + g] = base + G.table[g][h]
        gens.append(tuple(img))
    return PermGroup(m * q, gens)


def is_semiregular(P: PermGroup) -> bool:
    return P.is_semiregular()
