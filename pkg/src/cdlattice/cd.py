"""Chermak-Delgado measure and lattice by exhaustive search."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations

from . import groups
from .groups import GroupTable, SubgroupSet


@dataclass(frozen=True)
class CdChecks:
    is_sublattice: bool
    is_self_dual: bool
    is_modular: bool
    min_is_member: bool
    min_is_abelian: bool
    min_is_normal: bool
    min_contains_center: bool

    def all_true(self) -> bool:
        return all(vars(self).values())

    def failed(self) -> list[str]:
        return [k for k, v in vars(self).items() if not v]


@dataclass(frozen=True)
class CdLatticeReport:
    group: GroupTable
    subgroups: list[SubgroupSet]
    measures: dict[SubgroupSet, int]
    centralizers: dict[SubgroupSet, SubgroupSet]
    members: list[SubgroupSet]
    max_measure: int
    hasse_edges: list[tuple[SubgroupSet, SubgroupSet]]
    min_member: SubgroupSet
    checks: CdChecks | None = field(default=None, compare=False)


def cd_measure(G: GroupTable, H: SubgroupSet) -> int:
    return len(H) * len(groups.centralizer(G, H))


def cover_edges(subs: list[SubgroupSet]) -> list[tuple[SubgroupSet, SubgroupSet]]:
    """Cover pairs (lower, upper) of containment among ``subs``."""
    edges = []
    for upper in subs:
        below = [X for X in subs if X.mask != upper.mask and X.issubset(upper)]
        for lower in below:
            if not any(
                Z.mask != lower.mask and lower.issubset(Z) for Z in below
            ):
                edges.append((lower, upper))
    edges.sort(key=lambda e: (e[0].sort_key(), e[1].sort_key()))
    return edges


def cd_lattice(G: GroupTable, subgroups: list[SubgroupSet] | None = None,
               cap: int | None = None, run_checks: bool = True) -> CdLatticeReport:
    """Measure every subgroup and collect the maximizers."""
    subs = groups.all_subgroups(G, cap) if subgroups is None else subgroups
    cents = {H: groups.centralizer(G, H) for H in subs}
    measures = {H: len(H) * len(cents[H]) for H in subs}
    best = max(measures.values())
    members = sorted((H for H in subs if measures[H] == best), key=SubgroupSet.sort_key)
    mask = G.full_mask
    for H in members:
        mask &= H.mask
    report = CdLatticeReport(
        group=G,
        subgroups=subs,
        measures=measures,
        centralizers=cents,
        members=members,
        max_measure=best,
        hasse_edges=cover_edges(members),
        min_member=SubgroupSet.from_mask(G, mask),
    )
    if run_checks:
        report = with_checks(report)
    return report


def with_checks(report: CdLatticeReport) -> CdLatticeReport:
    G = report.group
    mins = verify_min_member(G, report)
    checks = CdChecks(
        is_sublattice=verify_sublattice(G, report),
        is_self_dual=verify_self_dual(G, report),
        is_modular=verify_modular(report),
        **mins,
    )
    return replace(report, checks=checks)


def verify_sublattice(G: GroupTable, report: CdLatticeReport) -> bool:
    """Members are closed under join (closure of union) and meet (intersection)."""
    masks = {H.mask for H in report.members}
    for X, Y in combinations(report.members, 2):
        if groups.join(G, X, Y).mask not in masks:
            return False
        if X.mask & Y.mask not in masks:
            return False
    return True


def verify_self_dual(G: GroupTable, report: CdLatticeReport) -> bool:
    """Centralizing is an order-reversing involution on the members."""
    masks = {H.mask for H in report.members}
    cent = {H.mask: groups.centralizer(G, H) for H in report.members}
    for H in report.members:
        C = cent[H.mask]
        if C.mask not in masks:
            return False
        if cent[C.mask].mask != H.mask:
            return False
    for X in report.members:
        for Y in report.members:
            if X.issubset(Y) and not cent[Y.mask].issubset(cent[X.mask]):
                return False
    return True


def verify_modular(report: CdLatticeReport) -> bool:
    """X v (Y ^ Z) == (X v Y) ^ Z for all members with X <= Z."""
    G = report.group
    members = report.members
    for X in members:
        for Z in members:
            if not X.issubset(Z):
                continue
            for Y in members:
                left = groups.join(G, X, groups.meet(G, Y, Z))
                right = groups.meet(G, groups.join(G, X, Y), Z)
                if left.mask != right.mask:
                    return False
    return True


def verify_min_member(G: GroupTable, report: CdLatticeReport) -> dict[str, bool]:
    """Properties of the intersection of all members.

    Whether it is characteristic is not examined.
    """
    M = report.min_member
    return {
        "min_is_member": any(H.mask == M.mask for H in report.members),
        "min_is_abelian": groups.is_abelian_subgroup(G, M),
        "min_is_normal": groups.is_normal(G, M),
        "min_contains_center": groups.center(G).issubset(M),
    }


def product_cd_prediction(P: GroupTable, A: GroupTable, B: GroupTable,
                          ra: CdLatticeReport, rb: CdLatticeReport) -> list[SubgroupSet]:
    """{H x K | H in CD(A), K in CD(B)} as subgroups of P = A x B."""
    out = [groups.product_subgroup(P, A, B, H, K) for H in ra.members for K in rb.members]
    return sorted(out, key=SubgroupSet.sort_key)


def verify_product_decomposition(A: GroupTable, B: GroupTable, cap: int | None = None) -> bool:
    P = groups.direct_product(A, B, cap)
    ra = cd_lattice(A, cap=cap, run_checks=False)
    rb = cd_lattice(B, cap=cap, run_checks=False)
    rp = cd_lattice(P, cap=cap, run_checks=False)
    predicted = product_cd_prediction(P, A, B, ra, rb)
    return (
        rp.members == predicted
        and len(rp.members) == len(ra.members) * len(rb.members)
        and rp.max_measure == ra.max_measure * rb.max_measure
    )
