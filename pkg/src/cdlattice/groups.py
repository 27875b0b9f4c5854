"""Finite groups as explicit multiplication tables.

Elements are dense indices ``0..order-1``.  Subgroups are canonical ascending
index tuples; internally they are also carried as integer bitmasks, which makes
containment, intersection and centralizer computations cheap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_CAP = 512


class CapacityError(RuntimeError):
    """Group order exceeds the configured cap."""


def order_cap() -> int:
    """Group-order cap, overridable through the ``CD_LATTICE_CAP`` environment variable."""
    raw = os.environ.get("CD_LATTICE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CD_LATTICE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"CD_LATTICE_CAP must be positive, got {cap}")
    return cap


def check_cap(order: int, cap: int | None = None) -> None:
    cap = order_cap() if cap is None else cap
    if order > cap:
        raise CapacityError(f"group order {order} exceeds cap {cap}")


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


_FLAG_TO_DIGIT = bytes.maketrans(b"\x00\x01", b"01")


def _mask_from_flags(flags: bytearray) -> int:
    return int(flags[::-1].translate(_FLAG_TO_DIGIT), 2)


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its full multiplication table.

    ``mul[i][j]`` is the index of the product of elements ``i`` and ``j``.
    ``family`` is one of ``cyclic``, ``dihedral``, ``zm``, ``product`` or
    ``custom``; ``params`` records the construction arguments.
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    identity_index: int
    inverse: tuple[int, ...]
    names: tuple[str, ...]
    family: str
    params: dict
    generators: tuple[int, ...]
    descriptor: str

    @cached_property
    def commuting_masks(self) -> tuple[int, ...]:
        """Bitmask of the elements commuting with each element."""
        t = np.asarray(self.mul, dtype=np.int64)
        commute = t == t.T
        packed = np.packbits(commute, axis=1, bitorder="little")
        return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity_index:
            x = self.mul[x][g]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"GroupTable({self.descriptor!r}, order={self.order})"


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup as the ascending list of its element indices."""

    members: tuple[int, ...]
    parent: str
    mask: int = field(default=0, compare=False, repr=False)

    @classmethod
    def from_mask(cls, G: GroupTable, mask: int) -> SubgroupSet:
        return cls(members_of(mask), G.descriptor, mask)

    @classmethod
    def from_members(cls, G: GroupTable, members: Iterable[int]) -> SubgroupSet:
        return cls.from_mask(G, mask_of(members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def issubset(self, other: SubgroupSet) -> bool:
        return self.mask & ~other.mask == 0

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.members), self.members


def _freeze(t: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(map(tuple, t.tolist()))


def _metacyclic_coords(m: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """(x, y) of each index x*m + y, shaped for broadcasting left against right."""
    idx = np.arange(order, dtype=np.int64)
    return idx // m, idx % m


def _inverses(mul: Sequence[Sequence[int]], identity: int) -> tuple[int, ...]:
    inv = []
    for row in mul:
        inv.append(row.index(identity))
    return tuple(inv)


def _power_name(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def _ba_name(x: int, y: int) -> str:
    return (_power_name("b", x) + _power_name("a", y)) or "1"


def build_cyclic(n: int) -> GroupTable:
    """Cyclic group of order n; element i is a^i."""
    if n < 1:
        raise ValueError(f"cyclic group needs n >= 1, got {n}")
    idx = np.arange(n, dtype=np.int64)
    mul = _freeze((idx[:, None] + idx[None, :]) % n)
    return GroupTable(
        order=n,
        mul=mul,
        identity_index=0,
        inverse=tuple((-i) % n for i in range(n)),
        names=tuple(_ba_name(0, i) for i in range(n)),
        family="cyclic",
        params={"n": n},
        generators=(1 % n,) if n > 1 else (),
        descriptor=f"cyclic:{n}",
    )


def build_dihedral(m: int, allow_small: bool = False) -> GroupTable:
    """Dihedral group of order 2m, ``<a, b | a^m = b^2 = 1, b^-1 a b = a^-1>``.

    Index ``x*m + y`` encodes ``b^x a^y``.
    """
    if m < 1 or (m < 3 and not allow_small):
        raise ValueError(f"dihedral group needs m >= 3, got {m}")

    order = 2 * m
    x, y = _metacyclic_coords(m, order)
    # a^y1 b^x2 = b^x2 a^(+-y1)
    sign = np.where(x == 1, -1, 1)
    ty = (sign[None, :] * y[:, None] + y[None, :]) % m
    mul = _freeze(((x[:, None] + x[None, :]) % 2) * m + ty)
    return GroupTable(
        order=order,
        mul=mul,
        identity_index=0,
        inverse=_inverses(mul, 0),
        names=tuple(_ba_name(*divmod(i, m)) for i in range(order)),
        family="dihedral",
        params={"m": m},
        generators=tuple(g for g in (1 % m, m) if g != 0),
        descriptor=f"dihedral:{m}",
    )


def build_zm(params) -> GroupTable:
    """The metacyclic group ``<a, b | a^m = b^n = 1, b^-1 a b = a^r>``.

    ``params`` is a validated :class:`cdlattice.zm.ZmParams`.  Index ``x*m + y``
    encodes ``b^x a^y`` and products follow
    ``(b^x1 a^y1)(b^x2 a^y2) = b^(x1+x2) a^(r^x2 y1 + y2)``.
    """
    m, n, r = params.m, params.n, params.r
    order = m * n
    rpow = [pow(r, x, m) for x in range(n)]
    x, y = _metacyclic_coords(m, order)
    rx = np.asarray(rpow, dtype=np.int64)[x]
    ty = (rx[None, :] * y[:, None] + y[None, :]) % m
    mul = _freeze(((x[:, None] + x[None, :]) % n) * m + ty)

    def inverse(i: int) -> int:
        x, y = divmod(i, m)
        xi = (n - x) % n
        return xi * m + (-rpow[xi] * y) % m

    return GroupTable(
        order=order,
        mul=mul,
        identity_index=0,
        inverse=tuple(inverse(i) for i in range(order)),
        names=tuple(_ba_name(*divmod(i, m)) for i in range(order)),
        family="zm",
        params={"m": m, "n": n, "r": r},
        generators=tuple(g for g in (1 % m, m % order) if g != 0),
        descriptor=f"zm:{m}:{n}:{r}",
    )


def direct_product(G: GroupTable, H: GroupTable, cap: int | None = None) -> GroupTable:
    """G x H with the pair (i, j) stored at index ``i*|H| + j``."""
    order = G.order * H.order
    check_cap(order, cap)
    k = H.order
    gt = np.asarray(G.mul, dtype=np.int64)
    ht = np.asarray(H.mul, dtype=np.int64)
    u = np.arange(order, dtype=np.int64)
    left_part, right_part = u // k, u % k
    mul = _freeze(gt[np.ix_(left_part, left_part)] * k + ht[np.ix_(right_part, right_part)])
    left = G.descriptor if G.family != "product" else f"({G.descriptor})"
    gens = [g * k + H.identity_index for g in G.generators]
    gens += [G.identity_index * k + h for h in H.generators]
    return GroupTable(
        order=order,
        mul=mul,
        identity_index=G.identity_index * k + H.identity_index,
        inverse=tuple(G.inverse[u // k] * k + H.inverse[u % k] for u in range(order)),
        names=tuple(f"({G.names[u // k]},{H.names[u % k]})" for u in range(order)),
        family="product",
        params={"left": G.descriptor, "right": H.descriptor},
        generators=tuple(gens),
        descriptor=f"{left}x{H.descriptor}",
    )


def product_subgroup(P: GroupTable, A: GroupTable, B: GroupTable,
                     H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    """H x K inside P = direct_product(A, B)."""
    k = B.order
    return SubgroupSet.from_members(P, (i * k + j for i in H.members for j in K.members))


def audit_table(G: GroupTable) -> dict[str, bool]:
    """Exhaustive check of the group axioms on the table."""
    t = np.asarray(G.mul, dtype=np.int64)
    n = G.order
    e = G.identity_index
    idx = np.arange(n)
    latin = bool(
        all(np.array_equal(np.sort(t[i]), idx) for i in range(n))
        and all(np.array_equal(np.sort(t[:, j]), idx) for j in range(n))
    )
    identity = bool(np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx))
    inv = np.asarray(G.inverse, dtype=np.int64)
    inverse = bool(np.all(t[idx, inv] == e) and np.all(t[inv, idx] == e))
    # (a*b)*c == a*(b*c) for every a at once: row a of t[t] against t[a][t]
    assoc = all(np.array_equal(t[t[a]], t[a][t]) for a in range(n))
    return {"latin_square": latin, "identity": identity, "inverse": inverse, "associative": assoc}


def element_power(G: GroupTable, g: int, k: int) -> int:
    """g**k by repeated multiplication; negative k goes through the inverse."""
    if k < 0:
        g, k = G.inverse[g], -k
    x = G.identity_index
    for _ in range(k):
        x = G.mul[x][g]
    return x


def _generate(G: GroupTable, gens: Sequence[int], start: Sequence[int] = ()) -> tuple[int, list[int]]:
    """Saturate ``start`` (a subgroup's elements, or nothing) under right multiplication by gens."""
    mul = G.mul
    elems = list(start) if start else [G.identity_index]
    seen = bytearray(G.order)
    for x in elems:
        seen[x] = 1
    for x in elems:  # elems grows while iterating
        row = mul[x]
        for g in gens:
            y = row[g]
            if not seen[y]:
                seen[y] = 1
                elems.append(y)
    return _mask_from_flags(seen), elems


def closure(G: GroupTable, seed: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``seed``."""
    mask, _ = _generate(G, sorted(set(seed)))
    return SubgroupSet.from_mask(G, mask)


def join(G: GroupTable, H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    """Closure of the union of two subgroups."""
    if K.issubset(H):
        return H
    if H.issubset(K):
        return K
    mask, _ = _generate(G, H.members + K.members)
    return SubgroupSet.from_mask(G, mask)


def meet(G: GroupTable, H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    return SubgroupSet.from_mask(G, H.mask & K.mask)


def whole_group(G: GroupTable) -> SubgroupSet:
    return SubgroupSet.from_mask(G, G.full_mask)


def trivial_subgroup(G: GroupTable) -> SubgroupSet:
    return SubgroupSet.from_mask(G, 1 << G.identity_index)


def all_subgroups(G: GroupTable, cap: int | None = None) -> list[SubgroupSet]:
    """Every subgroup of G exactly once, sorted by (size, member list).

    Starts from the cyclic subgroups and joins each found subgroup with every
    cyclic subgroup of prime-power order until no new subgroup appears.  Those
    suffice because every element is a product of commuting prime-power-order
    powers of itself.
    """
    check_cap(G.order, cap)
    mul = G.mul
    cyclic: dict[int, int] = {}
    for g in range(G.order):
        mask, _ = _generate(G, [g])
        cyclic.setdefault(mask, g)
    joiners = [g for mask, g in cyclic.items() if _is_prime_power(mask.bit_count())]

    # mask -> (generators, elements)
    found: dict[int, tuple[list[int], list[int]]] = {}
    queue = []
    for mask, g in cyclic.items():
        found[mask] = ([g], list(members_of(mask)))
        queue.append(mask)
    while queue:
        mask = queue.pop()
        gens, elems = found[mask]
        # <S, c> == <S, s c> == <S, c s>, so a whole coset is settled at once
        done = mask
        for c in joiners:
            if done >> c & 1:
                continue
            for s in elems:
                done |= 1 << mul[s][c] | 1 << mul[c][s]
            new_mask, new_elems = _generate(G, gens + [c], elems)
            if new_mask not in found:
                found[new_mask] = (gens + [c], new_elems)
                queue.append(new_mask)
    subs = [SubgroupSet.from_mask(G, mask) for mask in found]
    subs.sort(key=SubgroupSet.sort_key)
    return subs


def _is_prime_power(k: int) -> bool:
    if k < 2:
        return False
    p = 2
    while k % p:
        p += 1
    while k % p == 0:
        k //= p
    return k == 1


def centralizer(G: GroupTable, H: SubgroupSet) -> SubgroupSet:
    """Elements commuting with every element of H."""
    masks = G.commuting_masks
    mask = G.full_mask
    for h in H.members:
        mask &= masks[h]
    return SubgroupSet.from_mask(G, mask)


def center(G: GroupTable) -> SubgroupSet:
    return centralizer(G, whole_group(G))


def is_abelian_subgroup(G: GroupTable, H: SubgroupSet) -> bool:
    return H.issubset(centralizer(G, H))


def conjugate_element(G: GroupTable, h: int, g: int) -> int:
    """g^-1 h g."""
    return G.mul[G.mul[G.inverse[g]][h]][g]


def conjugate_subgroup(G: GroupTable, H: SubgroupSet, g: int) -> SubgroupSet:
    """g^-1 H g."""
    return SubgroupSet.from_members(G, (conjugate_element(G, h, g) for h in H.members))


def is_normal(G: GroupTable, H: SubgroupSet) -> bool:
    """True iff every conjugate of H equals H.

    Invariance under conjugation by the generators implies invariance under
    the whole group, so only the generators are tried.
    """
    return all(conjugate_subgroup(G, H, g).mask == H.mask for g in G.generators)


def conjugacy_class(G: GroupTable, H: SubgroupSet) -> set[int]:
    """Masks of all conjugates of H (orbit under conjugation by the generators)."""
    orbit = {H.mask}
    frontier = [H]
    while frontier:
        K = frontier.pop()
        for g in G.generators:
            C = conjugate_subgroup(G, K, g)
            if C.mask not in orbit:
                orbit.add(C.mask)
                frontier.append(C)
    return orbit


def conjugacy_labels(G: GroupTable, subs: Sequence[SubgroupSet]) -> dict[int, int]:
    """Map each subgroup mask to a class label shared exactly by its conjugates.

    ``subs`` must be closed under conjugation (e.g. all subgroups).
    """
    perms = [[conjugate_element(G, h, g) for h in range(G.order)] for g in G.generators]
    parent = {H.mask: H.mask for H in subs}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for H in subs:
        for perm in perms:
            other = mask_of(perm[h] for h in H.members)
            a, b = find(H.mask), find(other)
            if a != b:
                parent[a] = b
    return {mask: find(mask) for mask in parent}


def subgroup_label(G: GroupTable, H: SubgroupSet) -> str:
    """Readable name from a greedy generating set, e.g. ``<a^2, b>``."""
    if len(H) == 1:
        return "1"
    gens: list[int] = []
    span = 1 << G.identity_index
    # prefer elements of large order so cyclic subgroups get a single generator
    for h in sorted(H.members, key=lambda x: (-G.element_order(x), x)):
        if not span >> h & 1:
            gens.append(h)
            span, _ = _generate(G, gens)
            if span == H.mask:
                break
    return "<" + ", ".join(G.names[g] for g in sorted(gens)) + ">"

