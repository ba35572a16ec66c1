"""Permutations and permutation groups via a deterministic Schreier-Sims chain.

Permutations are tuples p of length n with p[v] = image of v; compose(p, q)
applies p first, then q.  PermGroup supports incremental generator addition
(used by the automorphism search), exact order, orbit partitions, point
stabilizers, and membership tests.  A base prefix can be prescribed so that
level d of the chain is exactly the pointwise stabilizer of base[:d].
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def inverse_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def cycle_notation(p: Perm) -> str:
    seen = set()
    parts = []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc = [s]
        seen.add(s)
        x = p[s]
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def perm_from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Perm:
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            img[a] = b
        if cyc:
            img[cyc[-1]] = cyc[0]
    return tuple(img)


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Perm] = []
        # transversal[p] = perm mapping base -> p
        self.transversal: dict[int, Perm] = {base: None}


class PermGroup:
    """Permutation group on 0..degree-1 with an exact stabilizer chain."""

    def __init__(self, degree: int, generators: Iterable[Perm] = (), base_prefix: Sequence[int] = ()):
        self.degree = degree
        self._base_prefix = list(base_prefix)
        self._levels: list[_Level] = []
        self.generators: list[Perm] = []
        self._version = 0
        for g in generators:
            self.add(tuple(g))

    # -- chain construction ------------------------------------------------

    def add(self, p: Perm) -> bool:
        """Add a permutation; returns True if the group grew."""
        if len(p) != self.degree:
            raise ValueError("degree mismatch")
        residue, level = self._sift_to_level(p, 0)
        if residue is None:
            return False
        self._levels[level].gens.append(residue)
        self._close_from(level)
        self._version += 1
        self.generators.append(p)
        return True

    def _sift_to_level(self, p: Perm, level: int) -> tuple[Optional[Perm], int]:
        """Sift p; return (residue, level it belongs to) or (None, _) if a member."""
        while True:
            if is_identity(p):
                return None, level
            if level == len(self._levels):
                self._levels.append(_Level(self._pick_base(p, level)))
            lv = self._levels[level]
            rep = lv.transversal.get(p[lv.base], False)
            if rep is False:
                return p, level
            if rep is not None:
                p = compose(p, inverse_perm(rep))
            level += 1

    def _pick_base(self, p: Perm, level: int) -> int:
        for b in self._base_prefix[level:]:
            return b
        for i, j in enumerate(p):
            if i != j:
                return i
        raise AssertionError("identity reached base selection")

    def _close_from(self, level: int) -> None:
        """Re-establish the chain invariant from ``level`` up to the top.

        Bottom-up processing: whenever sifting a Schreier generator deposits a
        new strong generator at a deeper level, restart there, so that a level
        is only declared complete once everything below it is stable.
        """
        i = level
        while i >= 0:
            deeper = self._process_level(i)
            if deeper is None:
                i -= 1
            else:
                i = deeper

    def _process_level(self, level: int) -> Optional[int]:
        """Rebuild the orbit at ``level`` and sift its Schreier generators.

        Returns the level where a new strong generator was deposited, or None
        when the level is complete.
        """
        lv = self._levels[level]
        gens = self._gens_from(level)
        lv.transversal = {lv.base: None}
        frontier = [lv.base]
        while frontier:
            a = frontier.pop(0)
            ua = lv.transversal[a]
            for g in gens:
                b = g[a]
                if b not in lv.transversal:
                    lv.transversal[b] = g if ua is None else compose(ua, g)
                    frontier.append(b)
        for a in sorted(lv.transversal):
            ua = lv.transversal[a]
            for g in gens:
                ub = lv.transversal[g[a]]
                sg = ua if ua is not None else identity_perm(self.degree)
                sg = compose(sg, g)
                if ub is not None:
                    sg = compose(sg, inverse_perm(ub))
                residue, lvl = self._sift_to_level(sg, level + 1)
                if residue is not None:
                    self._levels[lvl].gens.append(residue)
                    return lvl
        return None

    def _gens_from(self, level: int) -> list[Perm]:
        out = []
        for lv in self._levels[level:]:
            out.extend(lv.gens)
        return out

    # -- queries -------------------------------------------------------------

    def order(self) -> int:
        n = 1
        for lv in self._levels:
            n *= len(lv.transversal)
        return n

    def contains(self, p: Perm) -> bool:
        if len(p) != self.degree:
            return False
        for lv in self._levels:
            if is_identity(p):
                return True
            rep = lv.transversal.get(p[lv.base], False)
            if rep is False:
                return False
            if rep is not None:
                p = compose(p, inverse_perm(rep))
        return is_identity(p)

    def orbits(self) -> list[list[int]]:
        return _orbit_partition(self.degree, self.generators)

    @property
    def orbit_partition(self) -> list[list[int]]:
        return self.orbits()

    def stabilizer_orbits(self, level: int) -> list[int]:
        """Union-find roots for the pointwise stabilizer of base[:level].

        Only meaningful when the group was built with a base prefix; level d
        uses exactly the strong generators fixing base[:d].
        """
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self._gens_from(level):
            for i, j in enumerate(g):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        return [find(v) for v in range(self.degree)]

    @property
    def version(self) -> int:
        return self._version

    def point_stabilizer(self, v: int) -> "PermGroup":
        """The subgroup fixing v, as its own PermGroup."""
        rebased = PermGroup(self.degree, self.generators, base_prefix=(v,))
        stab_gens = rebased._gens_from(1) if rebased._levels else []
        return PermGroup(self.degree, stab_gens)

    def is_semiregular(self) -> bool:
        """True iff every point stabilizer is trivial (order = each orbit size)."""
        n = self.order()
        return all(len(orb) == n for orb in self.orbits())

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def elements(self) -> list[Perm]:
        """All group elements (use only for small orders)."""
        out = [identity_perm(self.degree)]
        seen = {out[0]}
        frontier = [out[0]]
        while frontier:
            p = frontier.pop()
            for g in self.generators:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    out.append(q)
                    frontier.append(q)
        return out

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order()} gens={len(self.generators)}>"


def _orbit_partition(degree: int, gens: Sequence[Perm]) -> list[list[int]]:
    parent = list(range(degree))

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
    groups: dict[int, list[int]] = {}
    for v in range(degree):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]
