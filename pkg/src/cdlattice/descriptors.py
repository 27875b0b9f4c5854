"""Textual group descriptors.

Grammar::

    group   := factor ('x' group)?          right-associative product
    factor  := 'product:' group | '(' group ')' | family
    family  := 'cyclic:' N | 'dihedral:' M | 'zm:' M ':' N ':' R
"""

from __future__ import annotations

import re

from . import groups, zm
from .groups import GroupTable

_FAMILY = re.compile(r"(cyclic|dihedral|zm)((?::-?\d+)+)")


class DescriptorError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def fail(self, why: str):
        raise DescriptorError(f"bad group descriptor {self.text!r} at column {self.pos}: {why}")

    def group(self) -> GroupTable:
        left = self.factor()
        if self.text.startswith("x", self.pos):
            self.pos += 1
            return groups.direct_product(left, self.group())
        return left

    def factor(self) -> GroupTable:
        if self.text.startswith("product:", self.pos):
            self.pos += len("product:")
            return self.group()
        if self.text.startswith("(", self.pos):
            self.pos += 1
            inner = self.group()
            if not self.text.startswith(")", self.pos):
                self.fail("expected ')'")
            self.pos += 1
            return inner
        match = _FAMILY.match(self.text, self.pos)
        if not match:
            self.fail("expected cyclic:N, dihedral:M, zm:M:N:R or a product")
        self.pos = match.end()
        return _build(match.group(1), [int(v) for v in match.group(2)[1:].split(":")], self)

    def parse(self) -> GroupTable:
        G = self.group()
        if self.pos != len(self.text):
            self.fail("trailing characters")
        return G


def _build(family: str, args: list[int], parser: _Parser) -> GroupTable:
    arity = {"cyclic": 1, "dihedral": 1, "zm": 3}[family]
    if len(args) != arity:
        parser.fail(f"{family} takes {arity} parameter(s), got {len(args)}")
    if family == "zm":
        order = args[0] * args[1]
    else:
        order = args[0] * (2 if family == "dihedral" else 1)
    groups.check_cap(order)
    try:
        if family == "cyclic":
            return groups.build_cyclic(args[0])
        if family == "dihedral":
            return groups.build_dihedral(args[0])
        return groups.build_zm(zm.validate_params(*args))
    except ValueError as exc:
        parser.fail(str(exc))


def parse_group(text: str) -> GroupTable:
    """Build the group named by ``text``, e.g. ``zm:7:3:2`` or ``cyclic:4xdihedral:4``."""
    if not text or not text.strip():
        raise DescriptorError("empty group descriptor")
    return _Parser(text.strip()).parse()
