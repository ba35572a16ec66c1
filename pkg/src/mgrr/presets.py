"""Checked-in connection-set presets, one row per group family.

Each row stores element words evaluated against the target group's named
generators ("a^n2" means the generator raised to half its order).  Rows are
validated on load: any row violating the Cayley-subset or size invariants is
surfaced as a PresetDataError rather than silently adjusted.  The
rank >= 3 generalized-dicyclic row is transcribed as printed in its source
and is known to fail inverse-closure; requesting it raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import ConnectionData, ConstructionError
from .groups import FiniteGroup


class PresetDataError(ValueError):
    pass


@dataclass(frozen=True)
class PresetRow:
    key: str
    description: str
    r: tuple[str, ...]
    l: tuple[str, ...]
    s: tuple[str, ...]
    t: tuple[str, ...]
    x: str


_CYCLIC = PresetRow(
    "cyclic", "cyclic group of order >= 6",
    r=("a", "a^-1"),
    l=("a^2", "a^-2"),
    s=("1", "a", "a^3"),
    t=("a", "a^-1", "a^2", "a^-2"),
    x="a^2",
)

_DICYCLIC = PresetRow(
    "dicyclic", "dicyclic group with rotation order >= 6",
    r=("a", "a^-1"),
    l=("a^2", "a^-2"),
    s=("1", "a", "a^3", "b"),
    t=("a", "a^-1", "a^n2", "a^2", "a^-2"),
    x="a^2",
)

_RANK2_SMALL = PresetRow(
    "rank2_small", "rank-2 abelian, o(a1) in {3,4}, o(a2) > 2",
    r=("a1", "a1^-1", "a2", "a2^-1"),
    l=("a1", "a1^-1", "a1*a2", "(a1*a2)^-1"),
    s=("1", "a1", "a1*a2^-1"),
    t=("a1", "a1^-1", "a2", "a2^-1", "a1*a2", "(a1*a2)^-1"),
    x="a1^-1",
)

_RANK2_SMALL_INV = PresetRow(
    "rank2_small_inv", "rank-2 abelian, o(a1) = 4, o(a2) = 2",
    r=("a1", "a1^-1", "a2"),
    l=("a1", "a1^-1", "a1^n2"),
    s=("1", "a1", "a1*a2^-1"),
    t=("a1", "a1^-1", "a2", "a1*a2", "a1^-1*a2"),
    x="a1^-1",
)

_RANK2_LARGE = PresetRow(
    "rank2_large", "rank-2 abelian, o(a1) >= 5",
    r=("a1", "a1^-1", "a1*a2", "(a1*a2)^-1"),
    l=("a1", "a1^-1", "a1^2", "a1^-2"),
    s=("1", "a1", "a1*a2"),
    t=("a1", "a1^-1", "a1^2", "a1^-2", "a1*a2", "(a1*a2)^-1"),
    x="a1^-1",
)

_GDIC_RANK2_SMALL = PresetRow(
    "gdic_rank2_small", "rank-2 generalized dicyclic, o(a1) = 4, o(a2) > 2",
    r=_RANK2_SMALL.r,
    l=_RANK2_SMALL.l,
    s=("1", "a1", "a1*a2^-1", "b"),
    t=("a1", "a1^-1", "a2", "a2^-1", "a1*a2", "(a1*a2)^-1", "b^2"),
    x="a1^-1",
)

_GDIC_RANK2_SMALL_INV = PresetRow(
    "gdic_rank2_small_inv", "rank-2 generalized dicyclic, o(a1) = 4, o(a2) = 2",
    r=_RANK2_SMALL_INV.r,
    l=_RANK2_SMALL_INV.l,
    s=("1", "a1", "a1*a2^-1", "b"),
    t=("a1", "a1^-1", "a1*a2", "(a1*a2)^-1", "b", "b^-1"),
    x="a1^-1",
)

_GDIC_RANK2_LARGE = PresetRow(
    "gdic_rank2_large", "rank-2 generalized dicyclic, o(a1) >= 5",
    r=_RANK2_LARGE.r,
    l=_RANK2_LARGE.l,
    s=("1", "a1", "a1*a2", "b"),
    t=_RANK2_LARGE.t + ("b^2",),
    x="a1^-1",
)

_ELEM2_CUBE = PresetRow(
    "elem2_cube", "elementary abelian of order 8",
    r=("a1", "a2", "a3"),
    l=("a1", "a1*a2", "a2*a3"),
    s=("1",),
    t=("a1", "a2", "a1*a2"),
    x="a1",
)

_TEN_GROUPS = (
    PresetRow(
        "D6", "dihedral of order 6",
        r=("a*b", "a", "a^-1"),
        l=("b*a", "a", "a^-1"),
        s=("1", "a*b", "b"),
        t=("a", "a^-1", "b", "b*a", "b*a^-1"),
        x="a",
    ),
    PresetRow(
        "D8", "dihedral of order 8",
        r=("a*b", "a", "a^-1"),
        l=("b*a", "a", "a^-1"),
        s=("1", "a*b", "b"),
        t=("a", "a^-1", "a^2", "b", "b*a"),
        x="a",
    ),
    PresetRow(
        "D10", "dihedral of order 10",
        r=("a*b", "a", "a^-1"),
        l=("b*a", "a", "a^-1"),
        s=("1", "a*b", "b"),
        t=("a", "a^-1", "a^2", "a^-2", "b"),
        x="a",
    ),
    PresetRow(
        "Alt4", "alternating group on 4 points",
        r=("(2,3,4)", "(2,4,3)", "(1,2)(3,4)", "(1,2,3)", "(1,3,2)"),
        l=("(2,3,4)", "(2,4,3)", "(1,2)(3,4)", "(1,3,4)", "(1,4,3)"),
        s=("1",),
        t=("(2,3,4)", "(2,4,3)", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"),
        x="(2,3,4)",
    ),
    PresetRow(
        "X16a", "presented group of order 16 on three involutions",
        r=("a", "b"),
        l=("b", "c"),
        s=("1", "a"),
        t=("a", "b", "c"),
        x="b",
    ),
    PresetRow(
        "X16b", "presented group of order 16 with an order-8 generator",
        r=("a", "a^-1", "b"),
        l=("a", "a^-1", "b"),
        s=("1", "a", "a*b"),
        t=("a", "a^-1", "a^2", "a^-2", "a^4"),
        x="b",
    ),
    PresetRow(
        "Q8xC3", "quaternion times cyclic of order 3",
        r=("a", "a^-1"),
        l=("b", "b^-1"),
        s=("1", "b", "c", "a*b"),
        t=("a", "a^-1", "a^2", "c", "c^-1"),
        x="a",
    ),
    PresetRow(
        "Q8xC4", "quaternion times cyclic of order 4",
        r=("a", "a^-1"),
        l=("b", "b^-1"),
        s=("1", "b", "c", "a*b"),
        t=("a", "a^-1", "a^2", "c", "c^-1"),
        x="a",
    ),
    PresetRow(
        "X18", "presented group of order 18",
        r=("a", "a^-1"),
        l=("b", "b^-1"),
        s=("1", "b", "c", "a*b", "a*c"),
        t=("a", "a^-1", "b", "b^-1", "a*b", "(a*b)^-1"),
        x="a",
    ),
    PresetRow(
        "X27", "presented group of order 27",
        r=("a", "a^-1", "c", "c^-1"),
        l=("b", "b^-1", "c", "c^-1"),
        s=("1", "b", "c"),
        t=("a", "a^-1", "b", "b^-1", "a*c", "(a*c)^-1"),
        x="a",
    ),
)

TEN_GROUP_KEYS = tuple(row.key for row in _TEN_GROUPS)

_FIXED_ROWS = {
    row.key: row
    for row in (
        _CYCLIC, _DICYCLIC, _RANK2_SMALL, _RANK2_SMALL_INV, _RANK2_LARGE,
        _GDIC_RANK2_SMALL, _GDIC_RANK2_SMALL_INV, _GDIC_RANK2_LARGE,
        _ELEM2_CUBE, *_TEN_GROUPS,
    )
}


def _rank_n_rows(kappa: int) -> dict[str, PresetRow]:
    """The rank->=3 abelian row and its generalized-dicyclic variant for a given rank."""
    gens = [f"a{i}" for i in range(1, kappa + 1)]
    pairs = [f"{gens[i]}*{gens[i + 1]}" for i in range(kappa - 1)]
    r = tuple(gens) + tuple(f"{g}^-1" for g in gens)
    l_ab = tuple(pairs) + tuple(f"({p})^-1" for p in pairs) + (gens[-1], f"{gens[-1]}^-1")
    t = r + ("a1*a2", "(a1*a2)^-1", "a1*a3", "(a1*a3)^-1")
    abelian_row = PresetRow(
        "rank3_plus", f"rank-{kappa} abelian, o(a1) > 2",
        r=r,
        l=l_ab,
        s=("1", "a1", "a1^-1", "a1*a2", gens[-1]),
        t=t,
        x="(a1*a2)^-1",
    )
    # transcribed as printed: the inverse list starts at a1, so a1^-1 appears
    # without its partner; the loader flags the broken inverse closure.
    l_gd = tuple(pairs) + tuple(f"({w})^-1" for w in ("a1", *pairs)) + (gens[-1], f"{gens[-1]}^-1")
    gd_row = PresetRow(
        "gdic_rank3_plus", f"rank-{kappa} generalized dicyclic (as printed; fails inverse closure)",
        r=r,
        l=l_gd,
        s=("1", "a1", "a1*a2", gens[-1], "b"),
        t=t,
        x="(a1*a2)^-1",
    )
    return {"rank3_plus": abelian_row, "gdic_rank3_plus": gd_row}


def preset_row_for(G: FiniteGroup) -> PresetRow:
    """Select the preset row matching a group; raises when no row applies."""
    fam = G.family
    if G.label in ("Q8xC3", "Q8xC4"):
        return _FIXED_ROWS[G.label]
    if fam == "dihedral" and G.order in (6, 8, 10):
        return _FIXED_ROWS[f"D{G.order}"]
    if fam == "alt4":
        return _FIXED_ROWS["Alt4"]
    if fam.startswith("exceptional:"):
        return _FIXED_ROWS[fam.split(":", 1)[1]]
    if fam == "cyclic" or (fam == "abelian" and len(G.generator_names) == 1):
        if G.order < 6:
            raise PresetDataError("no preset for cyclic groups of order < 6; use the cycle-block construction")
        return _CYCLIC
    if fam in ("dicyclic", "quaternion"):
        if G.order < 12:
            raise PresetDataError("no preset for the quaternion group; use the 5-valent block construction")
        return _DICYCLIC
    if fam == "abelian":
        orders = [G.element_order(idx) for _, idx in G.generator_names]
        kappa = len(orders)
        if kappa == 2:
            if orders[0] <= 2:
                raise PresetDataError("no preset for the Klein group; use the cubic layered construction")
            if orders[0] >= 5:
                return _RANK2_LARGE
            return _RANK2_SMALL_INV if orders[1] == 2 else _RANK2_SMALL
        if orders[0] == 2:
            if kappa == 3:
                return _ELEM2_CUBE
            raise PresetDataError("no preset for elementary abelian rank >= 4; use the K2 lift chain")
        return _rank_n_rows(kappa)["rank3_plus"]
    if fam == "generalized_dicyclic":
        orders = [G.element_order(idx) for name, idx in G.generator_names if name != "b"]
        kappa = len(orders)
        if kappa == 1:
            if orders[0] < 6:
                raise PresetDataError("no preset for the quaternion group; use the 5-valent block construction")
            return _DICYCLIC
        if kappa == 2:
            if orders[0] >= 5:
                return _GDIC_RANK2_LARGE
            if orders[0] == 4:
                return _GDIC_RANK2_SMALL_INV if orders[1] == 2 else _GDIC_RANK2_SMALL
            raise PresetDataError("rank-2 generalized dicyclic preset needs o(a1) >= 4")
        if kappa >= 3:
            return _rank_n_rows(kappa)["gdic_rank3_plus"]
    raise PresetDataError(f"no preset row for group {G.label} (family {fam})")


def preset(G: FiniteGroup, m: int, validate: bool = True) -> ConnectionData:
    """Instantiate the matching preset row as ConnectionData over G."""
    row = preset_row_for(G)
    return instantiate(G, row, m, validate=validate)


def instantiate(G: FiniteGroup, row: PresetRow, m: int, validate: bool = True) -> ConnectionData:
    cd = ConnectionData(
        R=G.subset(row.r),
        L=G.subset(row.l),
        S=G.subset(row.s),
        T=G.subset(row.t),
        x=G.element(row.x),
        m=m,
    )
    if validate:
        try:
            cd.validate(G)
        except ConstructionError as e:
            raise PresetDataError(f"preset row {row.key!r} fails validation over {G.label}: {e}") from e
        for name, words, got in (("R", row.r, cd.R), ("L", row.l, cd.L), ("S", row.s, cd.S), ("T", row.t, cd.T)):
            if len(set(words)) != len(got):
                raise PresetDataError(
                    f"preset row {row.key!r}: {name} words collide over {G.label} "
                    f"({len(set(words))} words, {len(got)} elements)"
                )
    return cd
