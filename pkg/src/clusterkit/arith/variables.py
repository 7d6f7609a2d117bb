"""Variable tables: ordered variable names with frozen flags.

A table fixes the exponent-vector layout for every polynomial built over it.
Indices are stable for the lifetime of a computation; polynomials over
different tables never mix.
"""

from __future__ import annotations

import re

from ..errors import StructureError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class VariableTable:
    __slots__ = ("names", "frozen", "_index")

    def __init__(self, names, frozen=None):
        names = tuple(names)
        if not names:
            raise StructureError("variable table needs at least one variable")
        for name in names:
            if not _NAME_RE.match(name):
                raise StructureError(f"bad variable name {name!r}")
        if len(set(names)) != len(names):
            raise StructureError("duplicate variable names")
        if frozen is None:
            frozen = (False,) * len(names)
        else:
            frozen = tuple(bool(f) for f in frozen)
            if len(frozen) != len(names):
                raise StructureError("frozen mask length mismatch")
        self.names = names
        self.frozen = frozen
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise StructureError(f"unknown variable {name!r}") from None

    def is_frozen(self, i):
        return self.frozen[i]

    def mutable_indices(self):
        return tuple(i for i, f in enumerate(self.frozen) if not f)

    def frozen_indices(self):
        return tuple(i for i, f in enumerate(self.frozen) if f)

    def __eq__(self, other):
        if not isinstance(other, VariableTable):
            return NotImplemented
        return self.names == other.names and self.frozen == other.frozen

    def __hash__(self):
        return hash((self.names, self.frozen))

    def __repr__(self):
        marks = ["*" + n if f else n for n, f in zip(self.names, self.frozen)]
        return f"VariableTable({', '.join(marks)})"


def check_same_table(a, b):
    """Raise StructureError unless a and b share an equal table."""
    if a.table != b.table:
        raise StructureError(
            f"mismatched variable tables: {a.table!r} vs {b.table!r}"
        )
