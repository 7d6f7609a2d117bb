"""Laurent polynomials: a SparsePolynomial numerator over a single
monomial denominator.

The representation is kept reduced (no variable divides the whole
numerator while appearing in the denominator) and denominators may only
involve mutable variables — a frozen variable in a denominator would
contradict the Laurent property and is rejected outright.
"""

from __future__ import annotations

from ..errors import InexactDivision, StructureError
from .poly import COEF_TYPES, SparsePolynomial, format_poly, parse_poly, poly_exact_div
from .variables import check_same_table


class LaurentPolynomial:
    __slots__ = ("num", "den", "_hash", "_str")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, SparsePolynomial):
            raise StructureError("numerator must be a SparsePolynomial")
        table = num.table
        if den is None:
            den = (0,) * len(table)
        else:
            den = tuple(den)
            if len(den) != len(table):
                raise StructureError("denominator exponent length mismatch")
            if any(x < 0 for x in den):
                raise StructureError("denominator exponents must be nonnegative")
        if num.is_zero:
            den = (0,) * len(table)
        elif not _reduced and any(den):
            mins = num.min_exponents()
            shift = tuple(min(d, m) for d, m in zip(den, mins))
            if any(shift):
                num = num.shift_exponents(tuple(-s for s in shift))
                den = tuple(d - s for d, s in zip(den, shift))
        for i, x in enumerate(den):
            if x and table.frozen[i]:
                raise StructureError(
                    f"frozen variable {table.names[i]!r} in Laurent denominator"
                )
        self.num = num
        self.den = den
        self._hash = None
        self._str = None

    @property
    def table(self):
        return self.num.table

    @classmethod
    def from_poly(cls, p):
        return cls(p, None, _reduced=True)

    @classmethod
    def variable(cls, table, i):
        return cls.from_poly(SparsePolynomial.variable(table, i))

    @classmethod
    def constant(cls, table, c):
        return cls.from_poly(SparsePolynomial.constant(table, c))

    @classmethod
    def one(cls, table):
        return cls.constant(table, 1)

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return not any(self.den)

    def as_polynomial(self):
        if not self.is_polynomial():
            raise StructureError("Laurent polynomial has a true denominator")
        return self.num

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            check_same_table(self, other)
            return other
        if isinstance(other, SparsePolynomial):
            check_same_table(self, other)
            return LaurentPolynomial.from_poly(other)
        if isinstance(other, COEF_TYPES):
            return LaurentPolynomial.constant(self.table, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        den = tuple(max(a, b) for a, b in zip(self.den, other.den))
        lift_a = tuple(d - a for d, a in zip(den, self.den))
        lift_b = tuple(d - b for d, b in zip(den, other.den))
        num = self.num.shift_exponents(lift_a) + other.num.shift_exponents(lift_b)
        return LaurentPolynomial(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return LaurentPolynomial(-self.num, self.den, _reduced=True)

    def __mul__(self, other):
        if isinstance(other, COEF_TYPES):
            return LaurentPolynomial(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num = self.num * other.num
        den = tuple(a + b for a, b in zip(self.den, other.den))
        return LaurentPolynomial(num, den)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise StructureError("Laurent powers take nonnegative int exponents")
        num = self.num ** k
        den = tuple(x * k for x in self.den)
        return LaurentPolynomial(num, den, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, COEF_TYPES):
            return self.is_polynomial() and self.num == other
        if isinstance(other, SparsePolynomial):
            return self.is_polynomial() and self.num == other
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self._str is None:
            self._str = format_laurent(self)
        return self._str

    def __repr__(self):
        return f"LaurentPolynomial({format_laurent(self)})"

    def to_json(self):
        return {"num": self.num.to_json(), "den_exps": list(self.den)}

    @classmethod
    def from_json(cls, data, table=None):
        num = SparsePolynomial.from_json(data["num"], table)
        return cls(num, tuple(data["den_exps"]))


def laurent_arith(a, b, op):
    check_same_table(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise StructureError(f"unknown op {op!r}")


def laurent_exact_div(a, b):
    """a / b when the result is again a Laurent polynomial.

    Monomial content moves freely between numerator and denominator, so
    both numerators are stripped to content-free cores before the core
    division; raises InexactDivision when the cores do not divide.
    """
    check_same_table(a, b)
    if b.is_zero:
        raise ZeroDivisionError("Laurent division by zero")
    if a.is_zero:
        return LaurentPolynomial.from_poly(SparsePolynomial.zero(a.table))
    u = a.num.min_exponents()
    v = b.num.min_exponents()
    core_a = a.num.shift_exponents(tuple(-x for x in u))
    core_b = b.num.shift_exponents(tuple(-x for x in v))
    q = poly_exact_div(core_a, core_b)
    # net monomial exponent: u - v + b.den - a.den
    net = tuple(
        ux - vx + bd - ad for ux, vx, bd, ad in zip(u, v, b.den, a.den)
    )
    up = tuple(x if x > 0 else 0 for x in net)
    down = tuple(-x if x < 0 else 0 for x in net)
    return LaurentPolynomial(q.shift_exponents(up), down)


def format_laurent(a):
    num_str = format_poly(a.num)
    if not any(a.den):
        return num_str
    den_str = "*".join(
        a.table.names[i] if x == 1 else f"{a.table.names[i]}^{x}"
        for i, x in enumerate(a.den)
        if x
    )
    if len(a.num) > 1:
        num_str = f"({num_str})"
    if sum(1 for x in a.den if x) > 1:
        den_str = f"({den_str})"
    return f"{num_str}/{den_str}"


def parse_laurent(text, table):
    text = text.strip()
    if "/" not in text:
        return LaurentPolynomial.from_poly(parse_poly(text, table))
    # split at the top-level slash separating numerator and denominator;
    # coefficient fractions live inside terms and sit between digits
    depth = 0
    split_at = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            before = text[i - 1] if i else ""
            after = text[i + 1] if i + 1 < len(text) else ""
            if before.isdigit() and after.isdigit():
                continue  # a coefficient like 5/2
            split_at = i
            break
    if split_at is None:
        return LaurentPolynomial.from_poly(parse_poly(text, table))
    num_text = text[:split_at].strip()
    den_text = text[split_at + 1:].strip()
    if num_text.startswith("(") and num_text.endswith(")"):
        num_text = num_text[1:-1]
    if den_text.startswith("(") and den_text.endswith(")"):
        den_text = den_text[1:-1]
    num = parse_poly(num_text, table)
    den_poly = parse_poly(den_text, table)
    if len(den_poly) != 1:
        raise StructureError("Laurent denominator must be a monomial")
    (exps, coef), = den_poly.terms.items()
    if coef != 1:
        raise StructureError("Laurent denominator must be monic")
    return LaurentPolynomial(num, exps)
