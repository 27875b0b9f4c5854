import pytest
from hypothesis import given, settings, strategies as st

from cdlattice import groups, zm
from cdlattice.groups import CapacityError, SubgroupSet

from conftest import naive_closure, naive_subgroups, subset_subgroups


def members(G, *idx):
    return SubgroupSet.from_members(G, idx)


def test_cyclic_examples():
    assert groups.build_cyclic(1).order == 1
    G = groups.build_cyclic(6)
    assert G.order == 6 and G.element_order(2) == 3
    assert groups.build_cyclic(4).inverse[1] == 3
    with pytest.raises(ValueError):
        groups.build_cyclic(0)


def test_dihedral_examples(d8):
    assert d8.order == 8
    assert groups.center(d8).members == (0, 2)
    for m in range(3, 12):
        G = groups.build_dihedral(m)
        ba = G.mul[m][1]
        assert G.mul[ba][ba] == G.identity_index


def test_dihedral_reflections_conjugate_in_d6():
    G = groups.build_dihedral(3)
    b = 3
    assert {groups.conjugate_element(G, b, g) for g in range(6)} == {3, 4, 5}


def test_dihedral_small_needs_flag():
    with pytest.raises(ValueError):
        groups.build_dihedral(2)
    assert groups.build_dihedral(2, allow_small=True).order == 4
    with pytest.raises(ValueError):
        groups.build_dihedral(0, allow_small=True)


def test_zm_relation(zm732):
    params, G = zm732
    assert G.order == 21
    a, b = 1, 7
    # a*b = b*a^2
    assert G.mul[a][b] == 7 + 2
    assert all(G.mul[0][g] == g for g in range(21))


def test_element_power(zm732):
    params, G = zm732
    assert groups.element_power(G, 5, 0) == 0
    assert groups.element_power(G, 7, 3) == 0
    assert groups.element_power(G, 8, 3) == 0
    assert groups.element_power(G, 8, -1) == G.inverse[8]
    for g in range(G.order):
        for k in range(G.order + 1):
            assert groups.element_power(G, g, k) == zm.power_formula(params, g, k)


def test_closure_examples(d8, zm732):
    assert groups.closure(d8, []).members == (0,)
    assert len(groups.closure(d8, [1])) == 4
    _, G = zm732
    assert len(groups.closure(G, [7, 1])) == 21


def test_all_subgroups_examples(d8, zm732):
    assert [len(H) for H in groups.all_subgroups(groups.build_cyclic(6))] == [1, 2, 3, 6]
    _, G = zm732
    subs = groups.all_subgroups(G)
    assert sorted(len(H) for H in subs) == [1] + [3] * 7 + [7, 21]
    assert len(groups.all_subgroups(d8)) == 10


@pytest.mark.parametrize("spec", ["cyclic:12", "dihedral:3", "dihedral:4", "dihedral:6",
                                  "cyclic:2xcyclic:2", "cyclic:2xdihedral:3"])
def test_all_subgroups_against_subset_enumeration(spec):
    from cdlattice import parse_group

    G = parse_group(spec)
    found = {frozenset(H.members) for H in groups.all_subgroups(G)}
    assert found == subset_subgroups(G)


@pytest.mark.parametrize("args", [(7, 3, 2), (5, 4, 2), (9, 2, 8), (13, 3, 3), (3, 4, 2), (1, 12, 0)])
def test_all_subgroups_against_pair_closures(args):
    G = groups.build_zm(zm.validate_params(*args))
    subs = groups.all_subgroups(G)
    assert len(subs) == len({H.members for H in subs})
    assert {frozenset(H.members) for H in subs} == naive_subgroups(G)


def test_all_subgroups_lattice_closed(zm732):
    _, G = zm732
    subs = groups.all_subgroups(G)
    masks = {H.mask for H in subs}
    assert subs == sorted(subs, key=SubgroupSet.sort_key)
    for H in subs:
        assert G.order % len(H) == 0
        assert H.members[0] == G.identity_index
        for K in subs:
            assert H.mask & K.mask in masks
            assert groups.join(G, H, K).mask in masks


def test_capacity():
    with pytest.raises(CapacityError):
        groups.all_subgroups(groups.build_cyclic(20), cap=10)
    with pytest.raises(CapacityError):
        groups.direct_product(groups.build_cyclic(5), groups.build_cyclic(5), cap=20)


def test_capacity_env(monkeypatch):
    monkeypatch.setenv("CD_LATTICE_CAP", "16")
    assert groups.order_cap() == 16
    with pytest.raises(CapacityError):
        groups.all_subgroups(groups.build_cyclic(17))


def test_centralizer_examples(d8, zm732):
    assert groups.centralizer(d8, groups.trivial_subgroup(d8)) == groups.whole_group(d8)
    rot = groups.closure(d8, [1])
    assert groups.centralizer(d8, rot) == rot
    _, G = zm732
    a = groups.closure(G, [1])
    assert groups.centralizer(G, a) == a


def test_centralizer_against_definition(d8, zm732):
    for G in (d8, zm732[1]):
        for H in groups.all_subgroups(G):
            expected = {g for g in range(G.order) if all(G.mul[g][h] == G.mul[h][g] for h in H.members)}
            assert set(groups.centralizer(G, H).members) == expected


def test_center_examples(d8, zm732):
    C6 = groups.build_cyclic(6)
    assert groups.center(C6) == groups.whole_group(C6)
    assert groups.center(zm732[1]).members == (0,)
    assert groups.center(d8).members == (0, 2)


def test_conjugate_subgroup(zm732):
    _, G = zm732
    H = groups.closure(G, [7])
    assert groups.conjugate_subgroup(G, H, 0) == H
    other = groups.conjugate_subgroup(G, H, 1)
    assert len(other) == 3 and other != H
    N = groups.closure(G, [1])
    assert all(groups.conjugate_subgroup(G, N, g) == N for g in range(G.order))


def test_is_normal(d8, zm732):
    assert groups.is_normal(d8, groups.whole_group(d8))
    assert groups.is_normal(d8, groups.closure(d8, [1]))
    _, G = zm732
    H = groups.closure(G, [7])
    assert not groups.is_normal(G, H)
    assert len(groups.conjugacy_class(G, H)) == 7


def test_is_normal_against_all_elements(d8, zm732):
    for G in (d8, zm732[1], groups.build_dihedral(6)):
        for H in groups.all_subgroups(G):
            brute = all(groups.conjugate_subgroup(G, H, g) == H for g in range(G.order))
            assert groups.is_normal(G, H) == brute


def test_conjugacy_labels_match_orbits():
    G = groups.build_dihedral(6)
    subs = groups.all_subgroups(G)
    labels = groups.conjugacy_labels(G, subs)
    for H in subs:
        orbit = {groups.conjugate_subgroup(G, H, g).mask for g in range(G.order)}
        assert {K.mask for K in subs if labels[K.mask] == labels[H.mask]} == orbit


def test_direct_product():
    V = groups.direct_product(groups.build_cyclic(2), groups.build_cyclic(2))
    assert V.order == 4
    assert sum(1 for H in groups.all_subgroups(V) if len(H) == 2) == 3
    A, B = groups.build_dihedral(4), groups.build_cyclic(3)
    P = groups.direct_product(A, B)
    assert P.order == 24
    ZA, ZB = groups.center(A), groups.center(B)
    assert groups.center(P) == groups.product_subgroup(P, A, B, ZA, ZB)


@pytest.mark.parametrize("spec", ["cyclic:1", "cyclic:9", "dihedral:7", "zm:7:3:2", "zm:1:5:0",
                                  "cyclic:2xdihedral:3", "(cyclic:2xcyclic:2)xdihedral:5"])
def test_audit(spec):
    from cdlattice import parse_group

    assert all(groups.audit_table(parse_group(spec)).values())


def test_audit_detects_broken_table():
    G = groups.build_cyclic(4)
    broken = [list(row) for row in G.mul]
    broken[1][1], broken[1][2] = broken[1][2], broken[1][1]
    bad = groups.GroupTable(4, tuple(map(tuple, broken)), 0, G.inverse, G.names, "custom", {}, (1,), "bad")
    audit = groups.audit_table(bad)
    assert not audit["associative"]


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 16), st.data())
def test_triple_centralizer_identity(m, data):
    G = groups.build_dihedral(m)
    seed = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = groups.closure(G, seed)
    assert set(H.members) == naive_closure(G, seed)
    C = groups.centralizer(G, H)
    assert groups.centralizer(G, groups.centralizer(G, C)) == C


def test_subgroup_label(d8):
    assert groups.subgroup_label(d8, groups.closure(d8, [1])) == "<a>"
    assert groups.subgroup_label(d8, groups.closure(d8, [2, 4])) == "<a^2, b>"
    assert groups.subgroup_label(d8, groups.trivial_subgroup(d8)) == "1"
