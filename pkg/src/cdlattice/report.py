"""JSON and DOT renderings of a CD-lattice report."""

from __future__ import annotations

import json

from . import groups
from .cd import CdLatticeReport
from .groups import GroupTable, SubgroupSet


def _subgroup_entry(G: GroupTable, H: SubgroupSet) -> dict:
    return {
        "label": groups.subgroup_label(G, H),
        "order": len(H),
        "elements": [G.names[i] for i in H.members],
    }


def report_to_dict(report: CdLatticeReport) -> dict:
    G = report.group
    index = {H.mask: i for i, H in enumerate(report.members)}
    checks = report.checks
    return {
        "group": {
            "descriptor": G.descriptor,
            "family": G.family,
            "params": G.params,
            "order": G.order,
        },
        "measures": [
            {
                "subgroup": [G.names[i] for i in H.members],
                "label": groups.subgroup_label(G, H),
                "order": len(H),
                "centralizer_order": len(report.centralizers[H]),
                "measure": report.measures[H],
            }
            for H in report.subgroups
        ],
        "cd": {
            "members": [_subgroup_entry(G, H) for H in report.members],
            "max_measure": report.max_measure,
            "min_member": _subgroup_entry(G, report.min_member),
            "hasse_edges": [[index[lo.mask], index[hi.mask]] for lo, hi in report.hasse_edges],
            "checks": dict(vars(checks)) if checks is not None else None,
        },
    }


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def report_to_json(report: CdLatticeReport) -> str:
    return dumps(report_to_dict(report))


def report_to_dot(report: CdLatticeReport) -> str:
    """Hasse diagram of the CD lattice, smallest subgroups at the bottom."""
    G = report.group
    lines = [f'digraph "{G.descriptor}" {{', "    rankdir=BT;", "    node [shape=box];"]
    for i, H in enumerate(report.members):
        label = f"{groups.subgroup_label(G, H)} ({len(H)}, {report.measures[H]})"
        lines.append(f'    n{i} [label="{label}"];')
    index = {H.mask: i for i, H in enumerate(report.members)}
    for lo, hi in report.hasse_edges:
        lines.append(f"    n{index[lo.mask]} -> n{index[hi.mask]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
