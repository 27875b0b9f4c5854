"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 group order above the cap.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cd, groups, report, verify, zm
from .descriptors import DescriptorError, parse_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepConfig:
    family: str
    max_order: int
    jobs: int = 1
    out: Path | None = None

    def __post_init__(self):
        if self.family not in ("zm", "dihedral"):
            raise UsageError(f"unknown family {self.family!r}")
        if self.max_order < 1:
            raise UsageError("--max-order must be positive")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        groups.check_cap(self.max_order)


def _emit(lines: list[str], out: Path | None) -> None:
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


def cmd_report(args) -> int:
    G = parse_group(args.spec)
    rep = cd.cd_lattice(G)
    text = report.report_to_json(rep) if args.format == "json" else report.report_to_dot(rep)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.figure:
        from .plotting import plot_report

        plot_report(rep, args.figure)
    return EXIT_OK


def _summarize(verdicts: list[verify.Verdict], what: str, out: Path | None) -> int:
    lines = [v.line() for v in verdicts]
    failed = [v for v in verdicts if not v.passed]
    lines.append(f"# {what}: {len(verdicts)} groups checked, {len(verdicts) - len(failed)} passed, "
                 f"{len(failed)} failed")
    _emit(lines, out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify_zm(args) -> int:
    config = SweepConfig("zm", args.max_order, args.jobs, args.out)
    return _summarize(verify.sweep_zm(config.max_order, config.jobs), "verify-zm", config.out)


def cmd_verify_dihedral(args) -> int:
    if args.m_min < 3:
        raise UsageError("--m-min must be at least 3")
    if args.m_max < args.m_min:
        raise UsageError("--m-max must be >= --m-min")
    groups.check_cap(2 * args.m_max)
    verdicts = verify.sweep_dihedral(args.m_min, args.m_max, args.jobs)
    return _summarize(verdicts, "verify-dihedral", args.out)


def _search_line(descriptor: str) -> tuple[str, int]:
    rep = cd.cd_lattice(parse_group(descriptor), run_checks=False)
    n = len(rep.members)
    return f"{descriptor}\t{n}\t{rep.max_measure}\t{len(rep.min_member)}", n


def search_descriptors(config: SweepConfig) -> list[str]:
    if config.family == "zm":
        return [p.descriptor for p in zm.valid_params_up_to(config.max_order)]
    return [f"dihedral:{m}" for m in range(3, config.max_order // 2 + 1)]


def read_product_list(path: Path) -> list[str]:
    out = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def cmd_search(args) -> int:
    config = SweepConfig(args.family, args.max_order, args.jobs, args.out)
    descriptors = search_descriptors(config)
    if args.products:
        try:
            extra = read_product_list(Path(args.products))
        except OSError as exc:
            raise UsageError(f"cannot read product list: {exc}") from exc
        for d in extra:
            parse_group(d)  # fail on bad entries before the sweep starts
        descriptors += extra
    results = verify.run_all(_search_line, descriptors, config.jobs)
    lines = ["# descriptor\t|CD|\tm(G)\t|M(G)|"]
    lines += [line for line, n in results if n == 1 or not args.only_singleton]
    _emit(lines, config.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdlattice", description="Chermak-Delgado lattices of small groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="CD lattice of one group")
    p.add_argument("spec", help="group descriptor, e.g. zm:7:3:2, dihedral:4, cyclic:4xdihedral:4")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--figure", help="also render a PNG/PDF/SVG figure to this path")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify-zm", help="check the closed forms on every ZM(m,n,r) with mn <= N")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_verify_zm)

    p = sub.add_parser("verify-dihedral", help="check CD(D_2m) for m in [A, B]")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_verify_dihedral)

    p = sub.add_parser("search", help="list |CD(G)|, m(G) and |M(G)| over a family")
    p.add_argument("--family", choices=["zm", "dihedral"], required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--products", help="file with extra group descriptors, one per line")
    p.add_argument("--only-singleton", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DescriptorError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except groups.CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
