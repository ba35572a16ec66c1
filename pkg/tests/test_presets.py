import pytest

from mgrr.groups import make_group
from mgrr.presets import PresetDataError, TEN_GROUP_KEYS, instantiate, preset, preset_row_for


def test_cyclic_row_exact_elements():
    G = make_group("C10")
    cd = preset(G, 3)
    a = G.names["a"]
    p = G.power
    assert set(cd.R) == {a, p(a, -1)}
    assert set(cd.L) == {p(a, 2), p(a, -2)}
    assert set(cd.S) == {0, a, p(a, 3)}
    assert set(cd.T) == {a, p(a, -1), p(a, 2), p(a, -2)}
    assert cd.x == p(a, 2)


def test_d6_row_exact_elements():
    G = make_group("D6")
    cd = preset(G, 3)
    a, b = G.names["a"], G.names["b"]
    mul, inv = G.mul, G.inv
    assert set(cd.R) == {mul(a, b), a, inv[a]}
    assert set(cd.L) == {mul(b, a), a, inv[a]}
    assert set(cd.S) == {0, mul(a, b), b}
    assert set(cd.T) == {a, inv[a], b, mul(b, a), mul(b, inv[a])}
    assert cd.x == a


def test_all_fixed_rows_validate():
    cases = [
        "C6", "C7", "C12", "Dic12", "Dic16",
        "A(3,3)", "A(4,2)", "A(4,4)", "A(5,5)", "A(6,2)", "A(6,3)",
        "GD(4,2)", "GD(4,4)", "GD(6,2)",
        "A(3,3,3)", "A(4,2,2)", "A(2,2,2)",
    ] + list(TEN_GROUP_KEYS)
    for spec in cases:
        G = make_group(spec)
        cd = preset(G, 3)
        cd.validate(G)
        assert len(cd.R) == len(cd.L) == len(cd.T) - len(cd.S) + 1


def test_rank3_sizes():
    # |R| = |L| = l + k and |T| = l + k + 4 where l counts generators of order > 2
    for spec, kappa, ell in [("A(3,3,3)", 3, 3), ("A(4,2,2)", 3, 1), ("A(4,4,2,2)", 4, 2)]:
        G = make_group(spec)
        cd = preset(G, 3)
        assert len(cd.R) == ell + kappa
        assert len(cd.L) == ell + kappa
        assert len(cd.T) == ell + kappa + 4
        assert len(cd.S) == 5


def test_rank2_branch_dispatch():
    assert preset_row_for(make_group("A(3,3)")).key == "rank2_small"
    assert preset_row_for(make_group("A(4,2)")).key == "rank2_small_inv"
    assert preset_row_for(make_group("A(4,4)")).key == "rank2_small"
    assert preset_row_for(make_group("A(5,5)")).key == "rank2_large"
    assert preset_row_for(make_group("A(6,2)")).key == "rank2_large"
    assert preset_row_for(make_group("GD(4,4)")).key == "gdic_rank2_small"
    assert preset_row_for(make_group("GD(4,2)")).key == "gdic_rank2_small_inv"
    assert preset_row_for(make_group("GD(6,2)")).key == "gdic_rank2_large"
    assert preset_row_for(make_group("E2^3")).key == "elem2_cube"
    assert preset_row_for(make_group("A(3,3,3)")).key == "rank3_plus"


def test_ten_group_dispatch():
    for spec in TEN_GROUP_KEYS:
        assert preset_row_for(make_group(spec)).key == spec


def test_gdic_rank3_row_flagged_as_data_error():
    # transcribed as printed: L is not inverse-closed, so loading must fail
    # loudly instead of silently adjusting the set
    G = make_group("GD(4,2,2)")
    with pytest.raises(PresetDataError, match="inverse-closed"):
        preset(G, 3)
    cd = preset(G, 3, validate=False)
    # the inverse list starts at a1, so a1^-1 appears without its partner
    assert G.inv[G.names["a1"]] in cd.L
    assert G.names["a1"] not in cd.L


def test_unsupported_families_routed():
    with pytest.raises(PresetDataError, match="order < 6"):
        preset(make_group("C5"), 3)
    with pytest.raises(PresetDataError, match="quaternion"):
        preset(make_group("Q8"), 3)
    with pytest.raises(PresetDataError, match="Klein"):
        preset(make_group("E2^2"), 3)
    with pytest.raises(PresetDataError, match="lift"):
        preset(make_group("E2^4"), 3)


def test_preset_m_parameter_carried():
    G = make_group("C8")
    assert preset(G, 5).m == 5
    assert preset(G, 2).m == 2
