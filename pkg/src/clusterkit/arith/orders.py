"""Monomial orders.

Each order exposes a sort key on exponent tuples; the leading term of a
polynomial is the term whose exponent vector has the maximal key. The
default everywhere is degree-reverse-lexicographic on the table order;
lex and block orders exist for elimination.
"""

from __future__ import annotations


class MonomialOrder:
    __slots__ = ("name",)

    def key(self, exps):
        raise NotImplementedError

    def __repr__(self):
        return f"<order {self.name}>"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class _DegRevLex(MonomialOrder):
    def __init__(self):
        self.name = "degrevlex"

    def key(self, exps):
        # ties broken so that the rightmost nonzero entry of the difference
        # being negative means "greater"
        return (sum(exps), tuple(-e for e in reversed(exps)))


class _Lex(MonomialOrder):
    def __init__(self):
        self.name = "lex"

    def key(self, exps):
        return tuple(exps)


class BlockOrder(MonomialOrder):
    """Elimination order: the variables in `front` dominate; within each
    block, degrevlex. Any monomial containing a front variable is greater
    than every monomial free of them."""

    __slots__ = ("name", "front")

    def __init__(self, front):
        self.front = tuple(sorted(front))
        self.name = "block:" + ",".join(str(i) for i in self.front)

    def key(self, exps):
        front = [exps[i] for i in self.front]
        fset = set(self.front)
        rest = [e for i, e in enumerate(exps) if i not in fset]
        return (
            sum(front),
            tuple(-e for e in reversed(front)),
            sum(rest),
            tuple(-e for e in reversed(rest)),
        )


DEGREVLEX = _DegRevLex()
LEX = _Lex()


def order_by_name(name):
    if name == "degrevlex":
        return DEGREVLEX
    if name == "lex":
        return LEX
    if name.startswith("block:"):
        idx = [int(s) for s in name.split(":", 1)[1].split(",") if s]
        return BlockOrder(idx)
    raise ValueError(f"unknown monomial order {name!r}")
