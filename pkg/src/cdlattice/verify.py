"""Cross-checks of the closed forms against brute force, one group at a time.

Each ``check_*`` function returns a :class:`Verdict` listing every failed
check with the disagreeing values; an empty failure list means the group
passed.  Sweeps run groups independently and may fan out to processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import cd, groups, numth, zm
from .groups import GroupTable, SubgroupSet


@dataclass
class Verdict:
    descriptor: str
    order: int
    failures: list[str] = field(default_factory=list)
    cd_size: int = 0
    max_measure: int = 0
    subgroup_count: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, tag: str, message: str) -> bool:
        if not ok:
            self.failures.append(f"[{tag}] {message}")
        return ok

    def failed_tags(self) -> set[str]:
        return {f[1:f.index("]")] for f in self.failures}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (f"{status} {self.descriptor} order={self.order} subgroups={self.subgroup_count} "
                f"|CD|={self.cd_size} m(G)={self.max_measure}")
        if self.passed:
            return head
        return head + "\n" + "\n".join(f"    {f}" for f in self.failures)


def table_powers(G: GroupTable) -> np.ndarray:
    """P[g, k] = g^k by repeated table multiplication, 0 <= k <= |G|."""
    t = np.asarray(G.mul, dtype=np.int64)
    idx = np.arange(G.order)
    P = np.empty((G.order, G.order + 1), dtype=np.int64)
    P[:, 0] = G.identity_index
    for k in range(1, G.order + 1):
        P[:, k] = t[P[:, k - 1], idx]
    return P


def formula_powers(params: zm.ZmParams) -> np.ndarray:
    """Same array from the closed power formula of the metacyclic encoding."""
    m, n, r = params.m, params.n, params.r
    order = m * n
    ks = np.arange(order + 1, dtype=np.int64)
    geo = np.array(
        [[numth.geometric_sum_mod(r, x, k, m) for k in range(order + 1)] for x in range(n)],
        dtype=np.int64,
    )
    g = np.arange(order, dtype=np.int64)
    x, y = g // m, g % m
    return (np.outer(x, ks) % n) * m + (y[:, None] * geo[x]) % m


def check_audit(G: GroupTable, v: Verdict) -> None:
    audit = groups.audit_table(G)
    v.expect(all(audit.values()), "audit", f"table audit failed: {audit}")


def check_report(G: GroupTable, report: cd.CdLatticeReport, v: Verdict) -> None:
    """Generic CD-lattice properties every finite group must satisfy."""
    checks = report.checks or cd.with_checks(report).checks
    v.expect(checks.all_true(), "lattice", f"lattice checks failed: {checks.failed()}")
    Z = groups.center(G)
    v.expect(report.max_measure >= G.order * len(Z), "lattice", "m(G) below |G||Z(G)|")
    for H in report.members:
        C = report.centralizers[H]
        v.expect(report.measures.get(C) == report.max_measure, "lattice",
                 f"centralizer of member {H.members} has measure {report.measures.get(C)}")
    for H, C in report.centralizers.items():
        CC = report.centralizers[C]
        v.expect(report.centralizers[CC] == C, "lattice", f"C(C(C(H))) != C(H) for H={H.members}")


def check_zm(params: zm.ZmParams) -> Verdict:
    G = groups.build_zm(params)
    v = Verdict(params.descriptor, G.order)
    m, n, d = params.m, params.n, params.d
    check_audit(G, v)
    v.expect(np.array_equal(table_powers(G), formula_powers(params)), "powers", "power formula mismatch")

    subs = groups.all_subgroups(G)
    triples = zm.enumerate_L(params)
    v.subgroup_count = len(subs)
    v.expect(len(subs) == len(triples), "bijection", f"|L|={len(triples)} but {len(subs)} subgroups")
    image = {t: zm.triple_to_subgroup(params, t, G) for t in triples}
    v.expect(len(set(image.values())) == len(triples), "bijection", "triples do not name distinct subgroups")
    v.expect(set(image.values()) == set(subs), "bijection", "triple subgroups differ from brute-force subgroups")

    report = cd.cd_lattice(G, subs)
    v.cd_size, v.max_measure = len(report.members), report.max_measure
    classes = groups.conjugacy_labels(G, subs)
    for t, H in image.items():
        brute = report.measures[H]
        v.expect(zm.measure_triple(params, t) == brute, "measure-formula",
                 f"measure {tuple(t)}: formula {zm.measure_triple(params, t)} != brute {brute}")
        v.expect(zm.is_normal_triple(params, t) == groups.is_normal(G, H), "normality",
                 f"normality of {tuple(t)}: formula {zm.is_normal_triple(params, t)}")
        if t.s == 0:
            ct = zm.centralizer_triple(params, t)
            v.expect(zm.in_L(params, ct), "centralizer-formula",
                     f"centralizer triple {tuple(ct)} of {tuple(t)} not in L")
            if zm.in_L(params, ct):
                v.expect(image[ct] == report.centralizers[H], "centralizer-formula",
                         f"centralizer of {tuple(t)}: formula {tuple(ct)} != brute force")
    for t1 in triples:
        for t2 in triples:
            brute = classes[image[t1].mask] == classes[image[t2].mask]
            v.expect(zm.are_conjugate_triples(params, t1, t2) == brute, "conjugacy",
                     f"conjugacy of {tuple(t1)} and {tuple(t2)}: brute {brute}")

    Z = groups.center(G)
    v.expect(Z == groups.closure(G, [(d % n) * m]) and len(Z) == n // d, "center",
             f"center has order {len(Z)}, expected <b^{d}> of order {n // d}")

    try:
        closed = zm.check_cd_zm(params)
    except zm.ConsistencyError as exc:
        v.failures.append(f"[cd-formula] {exc}")
        closed = zm.cd_zm(params, "formula")
    expected = [image[t] for t in closed.triples]
    v.expect(report.members == expected, "cd-formula",
             f"CD members {[len(H) for H in report.members]} != formula {[tuple(t) for t in closed.triples]}")
    v.expect(report.max_measure == closed.max_measure == (m * n // d) ** 2, "cd-formula",
             f"m(G)={report.max_measure}, formula {closed.max_measure}")
    top = zm.ZmTriple(1, d, 0)
    v.expect(zm.centralizer_triple(params, zm.centralizer_triple(params, top)) == top, "double-centralizer",
             "double centralizer of (1, d, 0) is not (1, d, 0)")

    check_report(G, report, v)
    return v


def d8_cd_members(G: GroupTable) -> list[SubgroupSet]:
    """{D8, <a>, <a^2, b>, <a^2, ab>, <a^2>} in the dihedral encoding with m = 4."""
    a, b = 1, 4
    a2, ab = G.mul[a][a], G.mul[a][b]
    subs = [
        groups.whole_group(G),
        groups.closure(G, [a]),
        groups.closure(G, [a2, b]),
        groups.closure(G, [a2, ab]),
        groups.closure(G, [a2]),
    ]
    return sorted(subs, key=SubgroupSet.sort_key)


def check_dihedral(m: int) -> Verdict:
    G = groups.build_dihedral(m)
    v = Verdict(G.descriptor, G.order)
    check_audit(G, v)
    report = cd.cd_lattice(G)
    v.subgroup_count = len(report.subgroups)
    v.cd_size, v.max_measure = len(report.members), report.max_measure
    v.expect(report.max_measure == m * m, "dihedral", f"m(D_2m)={report.max_measure}, expected {m * m}")
    expected = d8_cd_members(G) if m == 4 else [groups.closure(G, [1])]
    v.expect(report.members == expected, "dihedral",
             f"CD members {[groups.subgroup_label(G, H) for H in report.members]}")
    if m % 2:
        params = zm.validate_params(m, 2, m - 1)
        Gz = groups.build_zm(params)
        v.expect(Gz.mul == G.mul, "zm-crosscheck", "ZM(m, 2, m-1) table differs from the dihedral table")
        closed = zm.cd_zm(params, "formula")
        via_zm = [zm.triple_to_subgroup(params, t, Gz).members for t in closed.triples]
        v.expect(via_zm == [H.members for H in report.members], "zm-crosscheck",
                 f"ZM cross-check: {via_zm} vs brute force")
        v.expect(closed.max_measure == report.max_measure, "zm-crosscheck", "ZM formula measure differs")
    check_report(G, report, v)
    return v


def check_product(A: GroupTable, B: GroupTable) -> Verdict:
    P = groups.direct_product(A, B)
    v = Verdict(P.descriptor, P.order)
    for G in (A, B, P):
        check_audit(G, v)
    ra, rb, rp = cd.cd_lattice(A), cd.cd_lattice(B), cd.cd_lattice(P)
    v.subgroup_count = len(rp.subgroups)
    v.cd_size, v.max_measure = len(rp.members), rp.max_measure
    predicted = cd.product_cd_prediction(P, A, B, ra, rb)
    v.expect(rp.members == predicted, "product", "CD(AxB) differs from CD(A) x CD(B)")
    v.expect(len(rp.members) == len(ra.members) * len(rb.members), "product",
             f"|CD(AxB)|={len(rp.members)} vs {len(ra.members)}*{len(rb.members)}")
    v.expect(rp.max_measure == ra.max_measure * rb.max_measure, "product",
             f"m(AxB)={rp.max_measure} vs {ra.max_measure}*{rb.max_measure}")
    for G, r in ((A, ra), (B, rb), (P, rp)):
        check_report(G, r, v)
    return v


def run_all(func, items, jobs: int = 1) -> list[Verdict]:
    """Apply ``func`` to every item; output order follows ``items`` regardless of jobs."""
    if jobs <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=4))


def sweep_zm(max_order: int, jobs: int = 1) -> list[Verdict]:
    return run_all(check_zm, zm.valid_params_up_to(max_order), jobs)


def sweep_dihedral(m_min: int, m_max: int, jobs: int = 1) -> list[Verdict]:
    return run_all(check_dihedral, range(m_min, m_max + 1), jobs)
