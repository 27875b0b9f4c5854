import pytest

from cdlattice import groups, zm


def naive_closure(G, seed):
    """Set-based closure under multiplication, written independently of the library."""
    elems = {G.identity_index} | set(seed)
    while True:
        new = {G.mul[x][y] for x in elems for y in elems} - elems
        if not new:
            return frozenset(elems)
        elems |= new


def naive_subgroups(G):
    """Every subgroup generated by at most two elements; complete for metacyclic and small groups."""
    subs = set()
    for x in range(G.order):
        for y in range(x, G.order):
            subs.add(naive_closure(G, {x, y}))
    return subs


def subset_subgroups(G):
    """All subsets that contain the identity and are closed under multiplication."""
    others = [g for g in range(G.order) if g != G.identity_index]
    out = set()
    for bits in range(1 << len(others)):
        S = {G.identity_index} | {others[i] for i in range(len(others)) if bits >> i & 1}
        if all(G.mul[x][y] in S for x in S for y in S):
            out.add(frozenset(S))
    return out


@pytest.fixture
def d8():
    return groups.build_dihedral(4)


@pytest.fixture
def zm732():
    params = zm.validate_params(7, 3, 2)
    return params, groups.build_zm(params)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
