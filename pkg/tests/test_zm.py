import pytest
from hypothesis import given, settings, strategies as st

from cdlattice import cd, groups, zm
from cdlattice.zm import ZmParamsError, ZmTriple

SMALL = zm.valid_params_up_to(60)


def big_int_in_L(p, m1, n1, s):
    """Membership with the quotient (r^n - 1)/(r^n1 - 1) formed as a big integer."""
    if p.m == 1:
        return s == 0
    q = (p.r**p.n - 1) // (p.r**n1 - 1)
    return (s * q) % m1 == 0


def test_validate_examples():
    p = zm.validate_params(7, 3, 2)
    assert (p.m, p.n, p.r, p.d) == (7, 3, 2, 3)
    for m in (3, 5, 9, 15, 21):
        assert zm.validate_params(m, 2, m - 1).d == 2
    assert zm.validate_params(1, 6, 0).d == 1


@pytest.mark.parametrize("args, condition", [
    ((4, 2, 3), "coprimality-mn"),
    ((7, 3, 1), "coprimality-m-r-1"),
    ((9, 2, 4), "coprimality-m-r-1"),
    ((7, 2, 2), "exponent"),
    ((7, 3, 7), "range"),
    ((1, 3, 1), "range"),
    ((0, 3, 0), "range"),
])
def test_validate_rejections(args, condition):
    with pytest.raises(ZmParamsError) as err:
        zm.validate_params(*args)
    assert err.value.condition == condition


def test_valid_params_enumeration_is_exhaustive():
    found = {(p.m, p.n, p.r) for p in zm.valid_params_up_to(40)}
    brute = set()
    for m in range(1, 41):
        for n in range(1, 40 // m + 1):
            for r in ([0] if m == 1 else range(m)):
                try:
                    zm.validate_params(m, n, r)
                except ZmParamsError:
                    continue
                brute.add((m, n, r))
    assert found == brute


def test_enumerate_L_zm732():
    p = zm.validate_params(7, 3, 2)
    L = zm.enumerate_L(p)
    expected = [(1, 1, 0), (1, 3, 0)] + [(7, 1, s) for s in range(7)] + [(7, 3, 0)]
    assert [tuple(t) for t in L] == expected


def test_enumerate_L_contains_extremes():
    for p in SMALL:
        L = zm.enumerate_L(p)
        assert ZmTriple(1, 1, 0) in L and ZmTriple(p.m, p.n, 0) in L
        assert L == sorted(L)


def test_enumerate_L_zm542():
    p = zm.validate_params(5, 4, 2)
    assert ZmTriple(1, 4, 0) in zm.enumerate_L(p)
    assert zm.triple_subgroup_order(p, ZmTriple(1, 4, 0)) == 5


@pytest.mark.parametrize("p", SMALL, ids=lambda p: p.descriptor)
def test_L_membership_against_big_integers(p):
    for m1 in range(1, p.m + 1):
        if p.m % m1:
            continue
        for n1 in range(1, p.n + 1):
            if p.n % n1:
                continue
            for s in range(m1):
                assert zm.in_L(p, ZmTriple(m1, n1, s)) == big_int_in_L(p, m1, n1, s)


def test_triple_order_examples():
    p = zm.validate_params(7, 3, 2)
    assert zm.triple_subgroup_order(p, ZmTriple(1, 1, 0)) == 21
    assert zm.triple_subgroup_order(p, ZmTriple(7, 3, 0)) == 1
    assert zm.triple_subgroup_order(p, ZmTriple(1, 3, 0)) == 7


def test_triple_to_subgroup_examples(zm732):
    p, G = zm732
    assert zm.triple_to_subgroup(p, ZmTriple(7, 3, 0), G).members == (0,)
    assert len(zm.triple_to_subgroup(p, ZmTriple(1, 1, 0), G)) == 21
    assert zm.triple_to_subgroup(p, ZmTriple(1, 3, 0), G).members == tuple(range(7))


def test_triple_to_subgroup_detects_non_member(zm732):
    p, G = zm732
    # (7, 3, 1) is not in L: <b^3 a> = <a> has 7 elements, not 1
    with pytest.raises(zm.ConsistencyError):
        zm.triple_to_subgroup(p, ZmTriple(7, 3, 1), G)


def test_normality_examples():
    p = zm.validate_params(7, 3, 2)
    assert zm.is_normal_triple(p, ZmTriple(1, 3, 0))
    assert zm.is_normal_triple(p, ZmTriple(1, 1, 0))
    assert not zm.is_normal_triple(p, ZmTriple(7, 1, 0))
    assert not any(zm.is_normal_triple(p, t) for t in zm.enumerate_L(p) if t.s)


def test_conjugacy_examples(zm732):
    p, G = zm732
    t0, t3 = ZmTriple(7, 1, 0), ZmTriple(7, 1, 3)
    assert zm.are_conjugate_triples(p, t0, t0)
    assert zm.are_conjugate_triples(p, t0, t3)
    H0, H3 = zm.triple_to_subgroup(p, t0, G), zm.triple_to_subgroup(p, t3, G)
    assert any(groups.conjugate_subgroup(G, H0, g) == H3 for g in range(G.order))
    assert not zm.are_conjugate_triples(p, ZmTriple(1, 3, 0), t0)


def test_centralizer_triple_examples():
    p = zm.validate_params(7, 3, 2)
    assert zm.centralizer_triple(p, ZmTriple(7, 3, 0)) == ZmTriple(1, 1, 0)
    assert zm.centralizer_triple(p, ZmTriple(1, 3, 0)) == ZmTriple(1, 3, 0)
    assert zm.centralizer_triple(p, ZmTriple(1, 1, 0)) == ZmTriple(7, 3, 0)
    with pytest.raises(ValueError):
        zm.centralizer_triple(p, ZmTriple(7, 1, 2))


def test_measure_triple_examples():
    p = zm.validate_params(7, 3, 2)
    assert zm.measure_triple(p, ZmTriple(1, 3, 0)) == 49
    for s in range(7):
        assert zm.measure_triple(p, ZmTriple(7, 1, s)) == 9
    for q in SMALL:
        assert zm.measure_triple(q, ZmTriple(q.m, q.n, 0)) == q.m * q.n


@pytest.mark.parametrize("args, triples, value", [
    ((7, 3, 2), [(1, 3, 0)], 49),
    ((5, 4, 2), [(1, 4, 0)], 25),
    ((1, 9, 0), [(1, 1, 0)], 81),
])
def test_cd_zm_examples(args, triples, value):
    p = zm.validate_params(*args)
    for mode in ("formula", "scan"):
        res = zm.cd_zm(p, mode)
        assert [tuple(t) for t in res.triples] == triples and res.max_measure == value
    with pytest.raises(ValueError):
        zm.cd_zm(p, "guess")


def test_check_cd_zm_raises_on_disagreement(monkeypatch):
    p = zm.validate_params(7, 3, 2)
    real = zm.cd_zm

    def fake(params, mode="formula"):
        res = real(params, mode)
        return res._replace(max_measure=res.max_measure + 1) if mode == "scan" else res

    monkeypatch.setattr(zm, "cd_zm", fake)
    with pytest.raises(zm.ConsistencyError):
        zm.check_cd_zm(p)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL))
def test_closed_forms_match_brute_force(p):
    G = groups.build_zm(p)
    subs = groups.all_subgroups(G)
    L = zm.enumerate_L(p)
    image = {t: zm.triple_to_subgroup(p, t, G) for t in L}
    assert sorted(image.values(), key=groups.SubgroupSet.sort_key) == subs
    for t, H in image.items():
        assert zm.measure_triple(p, t) == cd.cd_measure(G, H)
        assert zm.is_normal_triple(p, t) == groups.is_normal(G, H)
        if t.s == 0:
            assert image[zm.centralizer_triple(p, t)] == groups.centralizer(G, H)
    Z = groups.center(G)
    assert len(Z) == p.n // p.d
    assert Z == groups.closure(G, [(p.d % p.n) * p.m])
    top = ZmTriple(1, p.d, 0)
    assert zm.centralizer_triple(p, zm.centralizer_triple(p, top)) == top
