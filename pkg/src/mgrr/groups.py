"""Finite groups as explicit multiplication tables.

Elements are integers 0..order-1 with the identity at index 0.  Constructors
cover the families the graph constructions need: cyclic, dihedral (D_n is the
dihedral group of ORDER n, not degree n), dicyclic, abelian with an
invariant-factor chain, generalized dicyclic, the quaternion group, Alt(4),
direct products, and four presented groups of orders 16, 16, 18, 27 realized
through explicit matrix / normal-form models.
"""

from __future__ import annotations

import re
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

MAX_ORDER = 64


class GroupError(ValueError):
    pass


class FiniteGroup:
    """Multiplication table with named generators; identity is index 0."""

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        names: dict[str, int],
        family: str,
        generator_names: Sequence[tuple[str, int]],
        label: str = "",
    ):
        n = len(table)
        if n < 1 or n > MAX_ORDER:
            raise GroupError(f"group order must be in 1..{MAX_ORDER}, got {n}")
        self.order = n
        self.table = tuple(tuple(row) for row in table)
        for g in range(n):
            if self.table[0][g] != g or self.table[g][0] != g:
                raise GroupError("index 0 is not a two-sided identity")
        inv = [-1] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == 0:
                    inv[g] = h
                    break
            if inv[g] < 0 or self.table[inv[g]][g] != 0:
                raise GroupError(f"element {g} has no two-sided inverse")
        self.inv = tuple(inv)
        self.names = dict(names)
        self.family = family
        self.generator_names = list(generator_names)
        self.label = label or family
        gen_set = [idx for _, idx in self.generator_names]
        if self.closure(gen_set) != tuple(range(n)):
            raise GroupError("named generators do not generate the group")
        self._order_cache: dict[int, int] = {}

    # -- element arithmetic --------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        out = 0
        while k:
            if k & 1:
                out = self.table[out][a]
            a = self.table[a][a]
            k >>= 1
        return out

    def conjugate(self, a: int, g: int) -> int:
        """g^-1 * a * g."""
        return self.table[self.table[self.inv[g]][a]][g]

    def element_order(self, a: int) -> int:
        cached = self._order_cache.get(a)
        if cached is not None:
            return cached
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        self._order_cache[a] = k
        return k

    def elements(self) -> range:
        return range(self.order)

    # -- subsets and predicates ------------------------------------------------

    def center(self) -> tuple[int, ...]:
        return tuple(
            g
            for g in range(self.order)
            if all(self.table[g][h] == self.table[h][g] for h in range(self.order))
        )

    def is_abelian(self) -> bool:
        return len(self.center()) == self.order

    def exponent(self) -> int:
        return reduce(_lcm, (self.element_order(g) for g in range(self.order)), 1)

    def squares_central(self) -> bool:
        z = set(self.center())
        return all(self.table[g][g] in z for g in range(self.order))

    def closure(self, xs: Iterable[int]) -> tuple[int, ...]:
        """The subgroup generated by xs; the empty set generates {identity}."""
        seen = {0}
        frontier = [0]
        gens = sorted(set(xs))
        while frontier:
            g = frontier.pop()
            for x in gens:
                h = self.table[g][x]
                if h not in seen:
                    seen.add(h)
                    frontier.append(h)
        return tuple(sorted(seen))

    def is_cayley_subset(self, xs: Iterable[int]) -> bool:
        s = set(xs)
        return 0 not in s and all(self.inv[x] in s for x in s)

    def involution_count(self, xs: Iterable[int]) -> int:
        return sum(1 for x in xs if self.element_order(x) == 2)

    def involutions(self) -> list[int]:
        return [g for g in range(self.order) if self.element_order(g) == 2]

    def find_noncentral_highorder(self) -> Optional[int]:
        """Least-index element outside the center of order > 2; None if abelian."""
        z = set(self.center())
        for g in range(self.order):
            if g not in z and self.element_order(g) > 2:
                return g
        return None

    def order_profile(self) -> dict[int, int]:
        prof: dict[int, int] = {}
        for g in range(self.order):
            o = self.element_order(g)
            prof[o] = prof.get(o, 0) + 1
        return prof

    def is_subgroup(self, xs: Iterable[int]) -> bool:
        s = set(xs)
        if 0 not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    # -- word evaluation -------------------------------------------------------

    def element(self, word: str) -> int:
        """Evaluate an element word like "a", "a^-1", "a1*a2", "(a*b)^2".

        Full-string names (as stored in ``names``) take precedence, which lets
        groups expose names containing arbitrary characters.
        """
        word = word.strip()
        if word in self.names:
            return self.names[word]
        val, rest = self._parse_product(word)
        if rest:
            raise GroupError(f"trailing text {rest!r} in element word {word!r}")
        return val

    def subset(self, words: Iterable[str]) -> tuple[int, ...]:
        out = sorted({self.element(w) for w in words})
        return tuple(out)

    def _parse_product(self, s: str) -> tuple[int, str]:
        val, s = self._parse_factor(s)
        while s.lstrip().startswith("*"):
            nxt, s = self._parse_factor(s.lstrip()[1:])
            val = self.table[val][nxt]
        return val, s

    def _parse_factor(self, s: str) -> tuple[int, str]:
        s = s.lstrip()
        if not s:
            raise GroupError("empty element word")
        if s.startswith("("):
            depth, i = 1, 1
            while i < len(s) and depth:
                if s[i] == "(":
                    depth += 1
                elif s[i] == ")":
                    depth -= 1
                i += 1
            if depth:
                raise GroupError(f"unbalanced parentheses in {s!r}")
            base = self.element(s[1 : i - 1])
            rest = s[i:]
        else:
            m = re.match(r"[A-Za-z_][A-Za-z0-9_',]*|1", s)
            if not m:
                raise GroupError(f"cannot parse element word {s!r}")
            tok = m.group()
            rest = s[m.end() :]
            if tok == "1":
                base = 0
            elif tok in self.names:
                base = self.names[tok]
            else:
                raise GroupError(f"unknown element name {tok!r} in {self.label}")
        rest = rest.lstrip()
        if rest.startswith("^"):
            m = re.match(r"\^(-?\d+|n2)", rest)
            if not m:
                raise GroupError(f"bad exponent in {rest!r}")
            exp = m.group(1)
            if exp == "n2":
                k = self.element_order(base) // 2
            else:
                k = int(exp)
            base = self.power(base, k)
            rest = rest[m.end() :]
        return base, rest

    # -- integrity check (used by the test suite) ------------------------------

    def check(self) -> None:
        n = self.order
        for a in range(n):
            row = set(self.table[a])
            col = {self.table[b][a] for b in range(n)}
            if row != set(range(n)) or col != set(range(n)):
                raise GroupError("table rows/columns are not permutations")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise GroupError(f"associativity fails at ({a},{b},{c})")

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.label} order={self.order}>"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# -- family constructors -------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs order >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = {"a": 1 % n}
    gens = [("a", 1 % n)]
    return FiniteGroup(table, names, "cyclic", gens, f"C{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group OF ORDER ``order`` (paper convention: D6 has 6 elements)."""
    if order < 2 or order % 2:
        raise GroupError("dihedral groups here have even order >= 2")
    k = order // 2
    # element (i, e) = a^i b^e  ->  index e*k + i
    def idx(i, e):
        return e * k + i % k

    table = [[0] * order for _ in range(order)]
    for i in range(k):
        for e in range(2):
            for j in range(k):
                for f in range(2):
                    ii = (i + (j if e == 0 else -j)) % k
                    table[idx(i, e)][idx(j, f)] = idx(ii, (e + f) % 2)
    names = {"a": idx(1, 0) if k > 1 else 0, "b": idx(0, 1)}
    gens = [("a", names["a"]), ("b", names["b"])]
    return FiniteGroup(table, names, "dihedral", gens, f"D{order}")


def dicyclic(order: int) -> FiniteGroup:
    """Dicyclic group of ORDER ``order`` = <a,b | a^(order/2), b^2=a^(order/4), a^b=a^-1>."""
    if order < 8 or order % 4:
        raise GroupError("dicyclic groups here have order divisible by 4, >= 8")
    na = order // 2  # o(a), even >= 4
    def idx(i, e):
        return e * na + i % na

    half = na // 2
    table = [[0] * order for _ in range(order)]
    for i in range(na):
        for e in range(2):
            for j in range(na):
                for f in range(2):
                    ii = (i + (j if e == 0 else -j)) % na
                    if e and f:
                        table[idx(i, e)][idx(j, f)] = idx((ii + half) % na, 0)
                    else:
                        table[idx(i, e)][idx(j, f)] = idx(ii, e ^ f)
    names = {"a": 1, "b": idx(0, 1)}
    gens = [("a", 1), ("b", names["b"])]
    return FiniteGroup(table, names, "dicyclic", gens, f"Dic{order}")


def quaternion() -> FiniteGroup:
    """Q8 with generators named i and j (k = i*j also named)."""
    g = dicyclic(8)
    names = {"i": 1, "j": g.names["b"], "k": g.mul(1, g.names["b"])}
    return FiniteGroup(g.table, names, "quaternion", [("i", 1), ("j", names["j"])], "Q8")


def abelian(factors: Sequence[int]) -> FiniteGroup:
    """Abelian group Z_{d1} x ... x Z_{dk} with d_{i+1} | d_i; generators a1..ak."""
    ds = list(factors)
    if not ds or any(d < 2 for d in ds):
        raise GroupError("abelian invariant factors must all be >= 2")
    for i in range(len(ds) - 1):
        if ds[i] % ds[i + 1]:
            raise GroupError(f"invariant factor chain broken: {ds[i + 1]} does not divide {ds[i]}")
    n = reduce(lambda x, y: x * y, ds, 1)
    if n > MAX_ORDER:
        raise GroupError(f"order {n} exceeds cap {MAX_ORDER}")
    weights = []
    w = n
    for d in ds:
        w //= d
        weights.append(w)

    def idx(vec):
        return sum(e * w for e, w in zip(vec, weights))

    def vec(i):
        out = []
        for d, w in zip(ds, weights):
            out.append((i // w) % d)
        return out

    table = [
        [idx([(x + y) % d for x, y, d in zip(vec(i), vec(j), ds)]) for j in range(n)]
        for i in range(n)
    ]
    names = {f"a{t + 1}": weights[t] for t in range(len(ds))}
    if len(ds) == 1:
        names["a"] = weights[0]
    gens = [(f"a{t + 1}", weights[t]) for t in range(len(ds))]
    label = "A(" + ",".join(str(d) for d in ds) + ")"
    return FiniteGroup(table, names, "abelian", gens, label)


def elementary_abelian_2(k: int) -> FiniteGroup:
    g = abelian([2] * k)
    return FiniteGroup(g.table, g.names, "abelian", g.generator_names, f"E2^{k}")


def generalized_dicyclic(factors: Sequence[int], y_word: Optional[str] = None) -> FiniteGroup:
    """Dic(A, y, b) over A = abelian(factors): b^2 = y, a^b = a^-1 for a in A.

    A must have even order and exponent > 2.  The default central involution
    is a1^(o(a1)/2).
    """
    A = abelian(factors)
    if A.order % 2:
        raise GroupError("generalized dicyclic needs an abelian group of even order")
    if A.exponent() <= 2:
        raise GroupError("generalized dicyclic needs exponent > 2")
    y = A.element(y_word) if y_word else A.power(A.names["a1"], A.element_order(A.names["a1"]) // 2)
    if A.element_order(y) != 2:
        raise GroupError("chosen y is not an involution of the abelian part")
    na = A.order
    n = 2 * na
    if n > MAX_ORDER:
        raise GroupError(f"order {n} exceeds cap {MAX_ORDER}")

    def idx(h, e):
        return e * na + h

    table = [[0] * n for _ in range(n)]
    for h in range(na):
        for e in range(2):
            for g in range(na):
                for f in range(2):
                    gg = g if e == 0 else A.inv[g]
                    hg = A.table[h][gg]
                    if e and f:
                        table[idx(h, e)][idx(g, f)] = idx(A.table[hg][y], 0)
                    else:
                        table[idx(h, e)][idx(g, f)] = idx(hg, e ^ f)
    names = {name: i for name, i in A.names.items()}
    names["b"] = idx(0, 1)
    gens = [(nm, i) for nm, i in A.generator_names] + [("b", names["b"])]
    label = "GD(" + ",".join(str(d) for d in factors) + ")"
    return FiniteGroup(table, names, "generalized_dicyclic", gens, label)


def alt4() -> FiniteGroup:
    """Alternating group on 4 points; every element named by 1-based cycles."""
    perms = sorted(_even_perms(4))
    perms.remove((0, 1, 2, 3))
    perms.insert(0, (0, 1, 2, 3))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(q[p[x]] for x in range(4))] for q in perms]
        for p in perms
    ]
    names = {_cycle_name(p): i for i, p in enumerate(perms)}
    names["e"] = 0
    gens = [("(1,2,3)", names["(1,2,3)"]), ("(1,2)(3,4)", names["(1,2)(3,4)"])]
    return FiniteGroup(table, names, "alt4", gens, "Alt4")


def _even_perms(n: int):
    import itertools

    for p in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        if inversions % 2 == 0:
            yield p


def _cycle_name(p: tuple[int, ...]) -> str:
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
        parts.append("(" + ",".join(str(v + 1) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def _closure_model(gens: dict[str, object], mul, identity) -> tuple[list, dict[str, int]]:
    """BFS closure of a concrete model; deterministic element indexing."""
    elems = [identity]
    index = {identity: 0}
    gen_items = list(gens.items())
    frontier = [identity]
    while frontier:
        x = frontier.pop(0)
        for _, g in gen_items:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                frontier.append(y)
    names = {nm: index[g] for nm, g in gen_items}
    return elems, names


def _table_from_model(elems: list, mul) -> list[list[int]]:
    index = {e: i for i, e in enumerate(elems)}
    return [[index[mul(x, y)] for y in elems] for x in elems]


def _mat2_mul(m1, m2):
    # 2x2 complex matrices with Gaussian-integer entries (re, im) pairs
    def cmul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def cadd(a, b):
        return (a[0] + b[0], a[1] + b[1])

    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return (
        (cadd(cmul(a, e), cmul(b, g)), cadd(cmul(a, f), cmul(b, h))),
        (cadd(cmul(c, e), cmul(d, g)), cadd(cmul(c, f), cmul(d, h))),
    )


def exceptional_group(key: str) -> FiniteGroup:
    """The four presented groups: X16a, X16b, X18, X27.

    X16a = <a,b,c | a2=b2=c2=1, abc=bca=cab>   (order 16, Pauli matrices)
    X16b = <a,b | a8=b2=1, bab=a5>             (order 16)
    X18  = <a,b,c | a3=b3=c2=1, ab=ba, (ac)2=(cb)2=1>  (order 18)
    X27  = <a,b,c | a3=b3=c3=1, ac=ca, bc=cb, b-1ab=ac> (order 27)
    """
    key = key.upper()
    if key == "X16A":
        one, zero = (1, 0), (0, 0)
        mi = (0, 1)  # sqrt(-1)
        X = ((zero, one), (one, zero))
        Y = ((zero, (0, -1)), (mi, zero))
        Z = ((one, zero), (zero, (-1, 0)))
        I2 = ((one, zero), (zero, one))
        elems, names = _closure_model({"a": X, "b": Y, "c": Z}, _mat2_mul, I2)
        if len(elems) != 16:
            raise GroupError("X16a model closure has wrong order")
        table = _table_from_model(elems, _mat2_mul)
        return FiniteGroup(table, names, "exceptional:X16a",
                           [("a", names["a"]), ("b", names["b"]), ("c", names["c"])], "X16a")
    if key == "X16B":
        def mul(x, y):
            i, e = x
            j, f = y
            return ((i + j * (5 ** e)) % 8, e ^ f)

        elems, names = _closure_model({"a": (1, 0), "b": (0, 1)}, mul, (0, 0))
        table = _table_from_model(elems, mul)
        return FiniteGroup(table, names, "exceptional:X16b",
                           [("a", names["a"]), ("b", names["b"])], "X16b")
    if key == "X18":
        def mul(x, y):
            (v1, v2), e = x
            (w1, w2), f = y
            if e:
                w1, w2 = (-w1) % 3, (-w2) % 3
            return (((v1 + w1) % 3, (v2 + w2) % 3), e ^ f)

        elems, names = _closure_model(
            {"a": ((1, 0), 0), "b": ((0, 1), 0), "c": ((0, 0), 1)}, mul, ((0, 0), 0)
        )
        table = _table_from_model(elems, mul)
        return FiniteGroup(table, names, "exceptional:X18",
                           [("a", names["a"]), ("b", names["b"]), ("c", names["c"])], "X18")
    if key == "X27":
        def mul(p, q):
            x, y, z = p
            u, v, w = q
            return ((x + u) % 3, (y + v) % 3, (z + w + x * v) % 3)

        elems, names = _closure_model(
            {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)}, mul, (0, 0, 0)
        )
        table = _table_from_model(elems, mul)
        return FiniteGroup(table, names, "exceptional:X27",
                           [("a", names["a"]), ("b", names["b"]), ("c", names["c"])], "X27")
    raise GroupError(f"unknown exceptional group id {key!r}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product, left factor major: (x1,x2) -> x1*|G2| + x2."""
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    if n > MAX_ORDER:
        raise GroupError(f"order {n} exceeds cap {MAX_ORDER}")
    table = [[0] * n for _ in range(n)]
    for x1 in range(n1):
        for x2 in range(n2):
            r = x1 * n2 + x2
            row1, row2 = g1.table[x1], g2.table[x2]
            trow = table[r]
            for y1 in range(n1):
                base = row1[y1] * n2
                y1n2 = y1 * n2
                for y2 in range(n2):
                    trow[y1n2 + y2] = base + row2[y2]
    names: dict[str, int] = {}
    gens: list[tuple[str, int]] = []
    for nm, i in g1.generator_names:
        names[nm] = i * n2
        gens.append((nm, i * n2))
    for nm, i in g2.generator_names:
        cand = nm
        while cand in names:
            cand += "'"
        names[cand] = i
        gens.append((cand, i))
    label = f"{g1.label}*{g2.label}"
    return FiniteGroup(table, names, "direct_product", gens, label)


def q8_times_cyclic(k: int) -> FiniteGroup:
    """Q8 x Z_k presented as <a,b,c | a4=b4=c^k=1, b2=a2, a^b=a^-1, ac=ca, bc=cb>."""
    q = quaternion()
    z = cyclic(k)
    prod = direct_product(q, z)
    names = {"a": q.names["i"] * k, "b": q.names["j"] * k, "c": 1}
    gens = [("a", names["a"]), ("b", names["b"]), ("c", 1)]
    return FiniteGroup(prod.table, names, "direct_product", gens, f"Q8xC{k}")


# -- group spec mini-language ----------------------------------------------------

_ATOM_RE = re.compile(
    r"""^(?:
        (?:C|Z)(?P<cyc>\d+) |
        D(?P<dih>\d+) |
        Dic(?P<dic>\d+) |
        Q8xC(?P<q8c>\d+) |
        (?P<q8>Q8) |
        (?P<alt4>Alt4) |
        A\((?P<ab>\d+(?:,\d+)*)\) |
        E2\^(?P<elem>\d+) |
        GD\((?P<gd>\d+(?:,\d+)*)\) |
        (?P<exc>X16a|X16b|X18|X27)
    )$""",
    re.VERBOSE | re.IGNORECASE,
)


def make_group(spec: str) -> FiniteGroup:
    """Build a group from the CLI mini-language.

    Atoms: Cn/Zn (cyclic), Dn (dihedral of ORDER n -- note the order-vs-degree
    caveat), Dicn (dicyclic of order n), Q8, Alt4, A(d1,...,dk) (abelian with
    invariant factors), E2^k, GD(d1,...,dk) (generalized dicyclic), X16a, X16b,
    X18, X27, Q8xC3, Q8xC4.  Atoms combine with '*' into direct products.
    """
    parts = [p.strip() for p in spec.split("*")]
    if not parts or any(not p for p in parts):
        raise GroupError(f"cannot parse group spec {spec!r}")
    groups = [_make_atom(p) for p in parts]
    out = groups[0]
    for g in groups[1:]:
        out = direct_product(out, g)
    return out


def _make_atom(atom: str) -> FiniteGroup:
    m = _ATOM_RE.match(atom)
    if not m:
        raise GroupError(f"cannot parse group atom {atom!r}")
    if m.group("cyc"):
        return cyclic(int(m.group("cyc")))
    if m.group("dih"):
        return dihedral(int(m.group("dih")))
    if m.group("dic"):
        return dicyclic(int(m.group("dic")))
    if m.group("q8c"):
        return q8_times_cyclic(int(m.group("q8c")))
    if m.group("q8"):
        return quaternion()
    if m.group("alt4"):
        return alt4()
    if m.group("ab"):
        return abelian([int(x) for x in m.group("ab").split(",")])
    if m.group("elem"):
        return elementary_abelian_2(int(m.group("elem")))
    if m.group("gd"):
        return generalized_dicyclic([int(x) for x in m.group("gd").split(",")])
    if m.group("exc"):
        return exceptional_group(m.group("exc"))
    raise GroupError(f"cannot parse group atom {atom!r}")


# -- structural tests used by the classification oracle ---------------------------


def subgroup_cosets(G: FiniteGroup, sub: Sequence[int]) -> list[list[int]]:
    """Right cosets of a subgroup, each sorted, ordered by least element."""
    sub = sorted(sub)
    if not G.is_subgroup(sub):
        raise GroupError("not a subgroup")
    seen = set()
    cosets = []
    for g in range(G.order):
        if g in seen:
            continue
        coset = sorted(G.table[h][g] for h in sub)
        seen.update(coset)
        cosets.append(coset)
    return cosets


def index_two_subgroups(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups of index 2, via the F2-quotient by squares and commutators."""
    gens = set()
    for g in range(G.order):
        gens.add(G.table[g][g])
    for a in range(G.order):
        for b in range(G.order):
            gens.add(G.table[G.table[G.inv[a]][G.inv[b]]][G.table[a][b]])
    N = G.closure(gens)
    if len(N) == G.order:
        return []
    cosets = subgroup_cosets(G, N)
    r = len(cosets)
    coset_of = {}
    for i, cs in enumerate(cosets):
        for g in cs:
            coset_of[g] = i
    # quotient is elementary abelian of order r = 2^k; find its hyperplanes
    k = r.bit_length() - 1
    if 1 << k != r:
        raise GroupError("2-quotient has non-power-of-two order")
    # coordinates for each coset via a basis of the quotient
    basis: list[int] = []
    coords = {0: 0}
    for i in range(1, r):
        if i in coords:
            continue
        basis.append(i)
        rep_i = cosets[i][0]
        for known, vec in list(coords.items()):
            prod = coset_of[G.table[cosets[known][0]][rep_i]]
            coords[prod] = vec | (1 << (len(basis) - 1))
    out = []
    for f in range(1, 1 << k):
        members = [g for g in range(G.order) if (coords[coset_of[g]] & f).bit_count() % 2 == 0]
        out.append(tuple(sorted(members)))
    return sorted(set(out))


def is_generalized_dicyclic_group(G: FiniteGroup) -> bool:
    """True iff G is isomorphic to some Dic(A, y, x)."""
    if G.order % 4 or G.is_abelian():
        return False
    for H in index_two_subgroups(G):
        hs = set(H)
        if not all(G.table[a][b] == G.table[b][a] for a in H for b in H):
            continue
        sub_exponent = reduce(_lcm, (G.element_order(h) for h in H), 1)
        if sub_exponent <= 2 or len(H) % 2:
            continue
        x = next(g for g in range(G.order) if g not in hs)
        y = G.table[x][x]
        if y not in hs or G.element_order(y) != 2:
            continue
        if all(G.conjugate(a, x) == G.inv[a] for a in H):
            return True
    return False


def isomorphic(A: FiniteGroup, B: FiniteGroup) -> bool:
    """Exact isomorphism test by generator-image backtracking (orders <= 64)."""
    if A.order != B.order:
        return False
    if A.order_profile() != B.order_profile():
        return False
    if A.is_abelian() != B.is_abelian():
        return False
    gens: list[int] = []
    cl = A.closure(gens)
    while len(cl) < A.order:
        for g in range(A.order):
            if g not in cl:
                gens.append(g)
                break
        cl = A.closure(gens)
    by_order: dict[int, list[int]] = {}
    for h in range(B.order):
        by_order.setdefault(B.element_order(h), []).append(h)

    def extend(mapped: dict[int, int], gen_idx: int) -> bool:
        if gen_idx == len(gens):
            return len(mapped) == A.order
        g = gens[gen_idx]
        for h in by_order.get(A.element_order(g), ()):
            new = dict(mapped)
            new[g] = h
            if _grow_hom(A, B, new):
                if extend(new, gen_idx + 1):
                    return True
        return False

    return extend({0: 0}, 0)


def _grow_hom(A: FiniteGroup, B: FiniteGroup, mapped: dict[int, int]) -> bool:
    """Close ``mapped`` under products; False on any conflict or non-injectivity."""
    frontier = list(mapped)
    while frontier:
        x = frontier.pop()
        for y in list(mapped):
            for p, q in ((x, y), (y, x)):
                pa = A.table[p][q]
                pb = B.table[mapped[p]][mapped[q]]
                if pa in mapped:
                    if mapped[pa] != pb:
                        return False
                else:
                    mapped[pa] = pb
                    frontier.append(pa)
    values = list(mapped.values())
    return len(set(values)) == len(values)
