"""Closed-form subgroup structure of the metacyclic ZM-groups.

``ZM(m, n, r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>`` with
``gcd(m, n) = gcd(m, r - 1) = 1`` and ``r^n = 1 (mod m)``.  Its subgroups are
indexed by triples ``(m1, n1, s)`` with ``m1 | m``, ``n1 | n``, ``0 <= s < m1``
and ``m1 | s * (r^n - 1)/(r^n1 - 1)``; the triple names ``<a^m1, b^n1 a^s>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import groups, numth
from .groups import GroupTable, SubgroupSet


class ZmParamsError(ValueError):
    """Invalid (m, n, r); ``condition`` names the violated requirement."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


class ConsistencyError(RuntimeError):
    """A closed-form result disagrees with itself or with the group it describes."""


@dataclass(frozen=True)
class ZmParams:
    m: int
    n: int
    r: int
    d: int

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def descriptor(self) -> str:
        return f"zm:{self.m}:{self.n}:{self.r}"


class ZmTriple(NamedTuple):
    m1: int
    n1: int
    s: int


def validate_params(m: int, n: int, r: int) -> ZmParams:
    if m < 1 or n < 1:
        raise ZmParamsError("range", f"m and n must be >= 1, got m={m}, n={n}")
    if m == 1:
        if r != 0:
            raise ZmParamsError("range", f"m = 1 requires r = 0, got r={r}")
    elif not 0 <= r < m:
        raise ZmParamsError("range", f"r must lie in [0, {m}), got {r}")
    if numth.gcd(m, n) != 1:
        raise ZmParamsError("coprimality-mn", f"gcd({m}, {n}) = {numth.gcd(m, n)}")
    if numth.gcd(m, (r - 1) % m) != 1:
        raise ZmParamsError("coprimality-m-r-1", f"gcd({m}, {r} - 1) != 1")
    if numth.mod_pow(r, n, m) != 1 % m:
        raise ZmParamsError("exponent", f"{r}^{n} is not 1 modulo {m}")
    d = numth.multiplicative_order(r, m)
    return ZmParams(m, n, r, d)


def valid_params_up_to(max_order: int) -> list[ZmParams]:
    """Every valid (m, n, r) with m*n <= max_order, ordered by (m, n, r).

    Different r giving isomorphic groups are all kept.
    """
    out = []
    for m in range(1, max_order + 1):
        for n in range(1, max_order // m + 1):
            rs = [0] if m == 1 else range(2, m)
            for r in rs:
                try:
                    out.append(validate_params(m, n, r))
                except ZmParamsError:
                    pass
    return out


def in_L(params: ZmParams, t: ZmTriple) -> bool:
    m1, n1, s = t
    if params.m % m1 or params.n % n1 or not 0 <= s < m1:
        return False
    q = numth.geometric_sum_mod(params.r, n1, params.n // n1, m1)
    return s * q % m1 == 0


def enumerate_L(params: ZmParams) -> list[ZmTriple]:
    out = []
    for m1 in numth.divisors(params.m):
        for n1 in numth.divisors(params.n):
            q = numth.geometric_sum_mod(params.r, n1, params.n // n1, m1)
            out.extend(ZmTriple(m1, n1, s) for s in range(m1) if s * q % m1 == 0)
    return out


def triple_subgroup_order(params: ZmParams, t: ZmTriple) -> int:
    return params.m * params.n // (t.m1 * t.n1)


def triple_generators(params: ZmParams, t: ZmTriple) -> tuple[int, int]:
    """Indices of a^m1 and b^n1 a^s."""
    m, n = params.m, params.n
    return t.m1 % m, (t.n1 % n) * m + t.s


def triple_to_subgroup(params: ZmParams, t: ZmTriple, G: GroupTable) -> SubgroupSet:
    H = groups.closure(G, triple_generators(params, t))
    expected = triple_subgroup_order(params, t)
    if len(H) != expected:
        raise ConsistencyError(
            f"{params.descriptor}: triple {tuple(t)} generates {len(H)} elements, expected {expected}"
        )
    return H


def is_normal_triple(params: ZmParams, t: ZmTriple) -> bool:
    return t.s == 0 and (numth.mod_pow(params.r, t.n1, t.m1) - 1) % t.m1 == 0


def are_conjugate_triples(params: ZmParams, t1: ZmTriple, t2: ZmTriple) -> bool:
    return triple_subgroup_order(params, t1) == triple_subgroup_order(params, t2)


def _gcd_m_rpow_minus_one(params: ZmParams, k: int) -> int:
    # gcd(m, r^k - 1) = gcd(m, (r^k - 1) mod m)
    m = params.m
    return numth.gcd(m, (numth.mod_pow(params.r, k, m) - 1) % m)


def centralizer_triple(params: ZmParams, t: ZmTriple) -> ZmTriple:
    """Triple of the centralizer of the subgroup named by ``t`` (which must have s = 0)."""
    if t.s != 0:
        raise numth.DomainError(f"centralizer_triple needs s = 0, got {tuple(t)}")
    m1p = params.m // _gcd_m_rpow_minus_one(params, t.n1)
    n1p = numth.multiplicative_order(params.r, params.m // t.m1)
    return ZmTriple(m1p, n1p, 0)


def measure_triple(params: ZmParams, t: ZmTriple) -> int:
    """|H| * |C(H)| for the subgroup named by ``t``; independent of s."""
    m, n = params.m, params.n
    num = m * n * n * _gcd_m_rpow_minus_one(params, t.n1)
    den = t.m1 * t.n1 * numth.multiplicative_order(params.r, m // t.m1)
    value, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"{params.descriptor}: measure of {tuple(t)} is not integral ({num}/{den})")
    return value


class CdResult(NamedTuple):
    triples: list[ZmTriple]
    max_measure: int


def cd_zm(params: ZmParams, mode: str = "formula") -> CdResult:
    """Chermak-Delgado lattice as triples.

    ``formula`` answers directly: the single subgroup ``(1, d, 0)`` with
    measure ``(mn/d)^2``.  ``scan`` maximizes :func:`measure_triple` over
    all of L and so does not rely on that answer.
    """
    if mode == "formula":
        return CdResult([ZmTriple(1, params.d, 0)], (params.m * params.n // params.d) ** 2)
    if mode == "scan":
        measures = [(measure_triple(params, t), t) for t in enumerate_L(params)]
        best = max(v for v, _ in measures)
        return CdResult([t for v, t in measures if v == best], best)
    raise ValueError(f"unknown mode {mode!r}")


def check_cd_zm(params: ZmParams) -> CdResult:
    """Run both modes and raise if they disagree."""
    formula = cd_zm(params, "formula")
    scan = cd_zm(params, "scan")
    if formula != scan:
        raise ConsistencyError(f"{params.descriptor}: formula gives {formula}, scan gives {scan}")
    return formula


def power_formula(params: ZmParams, g: int, k: int) -> int:
    """(b^x a^y)^k = b^(kx) a^(y * (1 + r^x + ... + r^((k-1)x))) for k >= 0."""
    m, n, r = params.m, params.n, params.r
    x, y = divmod(g, m)
    return (k * x % n) * m + y * numth.geometric_sum_mod(r, x, k, m) % m
