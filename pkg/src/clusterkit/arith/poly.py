"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are Python ints, promoted to Fraction only when a value is
genuinely non-integral (ExactRational below). Exponent vectors are dense
tuples laid out by a VariableTable. Polynomials are immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import InexactDivision, StructureError
from . import kernel
from .orders import DEGREVLEX
from .variables import VariableTable, check_same_table

# Anything satisfying the exact-rational invariants (denominator > 0,
# gcd 1, zero is 0/1) — stdlib int/Fraction already guarantee them.
ExactRational = Fraction

COEF_TYPES = (int, Fraction)


def coef_from_str(s):
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return kernel.norm_coef(Fraction(int(num), int(den)))
    return int(s)


def coef_to_str(c):
    return str(c)


def exact_coef_div(a, b):
    """a / b as int when possible, Fraction otherwise."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return kernel.norm_coef(Fraction(a) / Fraction(b))


class SparsePolynomial:
    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table, terms, _clean=False):
        if not isinstance(table, VariableTable):
            raise StructureError("table must be a VariableTable")
        self.table = table
        if _clean:
            self.terms = terms
        else:
            width = len(table)
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != width:
                    raise StructureError("exponent vector length mismatch")
                if any(x < 0 for x in e):
                    raise StructureError("negative exponent in polynomial")
                if not isinstance(c, COEF_TYPES):
                    raise StructureError(f"bad coefficient {c!r}")
                c = kernel.norm_coef(c)
                if c:
                    clean[e] = c
            self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, table):
        return cls(table, {}, _clean=True)

    @classmethod
    def constant(cls, table, c):
        c = kernel.norm_coef(c)
        if not c:
            return cls.zero(table)
        return cls(table, {(0,) * len(table): c}, _clean=True)

    @classmethod
    def one(cls, table):
        return cls.constant(table, 1)

    @classmethod
    def variable(cls, table, i):
        if not 0 <= i < len(table):
            raise StructureError(f"variable index {i} out of range")
        e = [0] * len(table)
        e[i] = 1
        return cls(table, {tuple(e): 1}, _clean=True)

    @classmethod
    def named(cls, table, name):
        return cls.variable(table, table.index(name))

    @classmethod
    def monomial(cls, table, exps, coef=1):
        return cls(table, {tuple(exps): coef})

    # -- basic views -------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self, order=DEGREVLEX):
        """(exponents, coefficient) of the leading term under `order`."""
        if not self.terms:
            raise StructureError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def sorted_terms(self, order=DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_value(self):
        """The coefficient if this polynomial is constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            if not any(e):
                return c
        return None

    def min_exponents(self):
        """Componentwise minimum exponent over all terms (the content monomial)."""
        if not self.terms:
            return (0,) * len(self.table)
        it = iter(self.terms)
        mins = list(next(it))
        for e in it:
            for i, x in enumerate(e):
                if x < mins[i]:
                    mins[i] = x
        return tuple(mins)

    def shift_exponents(self, delta):
        """Multiply by x^delta (entries may be negative when the result
        stays a polynomial)."""
        if not any(delta):
            return self
        out = {}
        for e, c in self.terms.items():
            ne = tuple(x + d for x, d in zip(e, delta))
            if any(x < 0 for x in ne):
                raise StructureError("exponent shift makes a negative exponent")
            out[ne] = c
        return SparsePolynomial(self.table, out, _clean=True)

    def support(self):
        """Indices of variables occurring with positive exponent."""
        seen = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x and i not in seen:
                    seen.add(i)
        return seen

    # -- arithmetic --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SparsePolynomial):
            check_same_table(self, other)
            return other
        if isinstance(other, COEF_TYPES):
            return SparsePolynomial.constant(self.table, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SparsePolynomial(self.table, kernel.add_terms(self.terms, other.terms), _clean=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SparsePolynomial(self.table, kernel.sub_terms(self.terms, other.terms), _clean=True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SparsePolynomial(self.table, kernel.sub_terms(other.terms, self.terms), _clean=True)

    def __neg__(self):
        return SparsePolynomial(self.table, kernel.neg_terms(self.terms), _clean=True)

    def __mul__(self, other):
        if isinstance(other, COEF_TYPES):
            return SparsePolynomial(self.table, kernel.scale_terms(self.terms, other), _clean=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SparsePolynomial(self.table, kernel.mul_terms(self.terms, other.terms), _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise StructureError("polynomial powers take nonnegative int exponents")
        result = SparsePolynomial.one(self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, COEF_TYPES):
            return self.constant_value() == other
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    # -- substitution ------------------------------------------------

    def substitute(self, target_table, mapping):
        """Ring map: variable index -> SparsePolynomial over target_table.

        Every variable actually occurring must be mapped.
        """
        out = SparsePolynomial.zero(target_table)
        cache = {}
        for e, c in self.terms.items():
            term = SparsePolynomial.constant(target_table, c)
            for i, x in enumerate(e):
                if not x:
                    continue
                if i not in mapping:
                    raise StructureError(
                        f"no image for variable {self.table.names[i]!r}"
                    )
                key = (i, x)
                powed = cache.get(key)
                if powed is None:
                    powed = mapping[i] ** x
                    cache[key] = powed
                term = term * powed
            out = out + term
        return out

    # -- text and JSON -----------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SparsePolynomial({format_poly(self)})"

    def to_json(self, order=DEGREVLEX):
        return {
            "vars": list(self.table.names),
            "terms": [
                {"coef": coef_to_str(c), "exps": list(e)}
                for e, c in self.sorted_terms(order)
            ],
        }

    @classmethod
    def from_json(cls, data, table=None):
        if table is None:
            table = VariableTable(data["vars"])
        elif list(table.names) != list(data["vars"]):
            raise StructureError("JSON variable list does not match table")
        terms = {}
        for t in data["terms"]:
            terms[tuple(t["exps"])] = coef_from_str(t["coef"])
        return cls(table, terms)

    @classmethod
    def parse(cls, text, table):
        return parse_poly(text, table)


# -- canonical text form ----------------------------------------------

def _format_monomial(table, exps):
    factors = []
    for i, x in enumerate(exps):
        if x == 1:
            factors.append(table.names[i])
        elif x:
            factors.append(f"{table.names[i]}^{x}")
    return "*".join(factors)


def format_poly(p, order=DEGREVLEX):
    if p.is_zero:
        return "0"
    chunks = []
    for e, c in p.sorted_terms(order):
        mono = _format_monomial(p.table, e)
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{coef_to_str(mag)}*{mono}"
        else:
            body = coef_to_str(mag)
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)


_FACTOR_RE = re.compile(
    r"(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<exp>\d+))?"
)


def parse_poly(text, table):
    """Parse the canonical text form (and reasonable variants of it)."""
    text = text.strip()
    if not text:
        raise StructureError("empty polynomial text")
    if text == "0":
        return SparsePolynomial.zero(table)
    # split into signed terms
    pieces = []
    sign = 1
    buf = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "+-" and (not buf or buf[-1] not in "*^/"):
            frag = "".join(buf).strip()
            if frag:
                pieces.append((sign, frag))
            sign = 1 if ch == "+" else -1
            buf = []
        elif not ch.isspace():
            buf.append(ch)
        i += 1
    frag = "".join(buf).strip()
    if frag:
        pieces.append((sign, frag))
    if not pieces:
        raise StructureError(f"cannot parse polynomial {text!r}")

    width = len(table)
    terms = {}
    for sign, frag in pieces:
        coef = sign
        exps = [0] * width
        for factor in frag.split("*"):
            factor = factor.strip()
            if not factor:
                raise StructureError(f"bad term {frag!r}")
            m = _FACTOR_RE.fullmatch(factor)
            if not m:
                raise StructureError(f"bad factor {factor!r}")
            if m.group("num"):
                coef = coef * coef_from_str(m.group("num"))
            else:
                idx = table.index(m.group("var"))
                exps[idx] += int(m.group("exp") or 1)
        key = tuple(exps)
        prev = terms.get(key, 0)
        total = prev + coef
        if total:
            terms[key] = total
        elif key in terms:
            del terms[key]
    return SparsePolynomial(table, terms)


# -- arithmetic entry points ------------------------------------------

def poly_arith(a, b, op):
    check_same_table(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise StructureError(f"unknown op {op!r}")


def poly_exact_div(a, b, order=DEGREVLEX):
    """Exact quotient a/b in the polynomial ring.

    Deterministic repeated leading-term division under `order`; raises
    InexactDivision at the first leading term not divisible by lt(b).
    """
    check_same_table(a, b)
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return SparsePolynomial.zero(a.table)
    key = order.key
    eb, cb = b.leading(order)
    bterms = b.terms
    R = dict(a.terms)
    Q = {}
    while R:
        er = max(R, key=key)
        cr = R[er]
        diff = tuple(x - y for x, y in zip(er, eb))
        if any(x < 0 for x in diff):
            raise InexactDivision(
                f"leading term not divisible (remainder {len(R)} terms)"
            )
        qc = exact_coef_div(cr, cb)
        Q[diff] = qc
        kernel.isub_scaled(R, diff, qc, bterms)
    return SparsePolynomial(a.table, Q)


def try_exact_div(a, b, order=DEGREVLEX):
    try:
        return poly_exact_div(a, b, order)
    except InexactDivision:
        return None


def poly_det(rows, bound=8):
    """Determinant by cofactor expansion along the sparsest row."""
    size = len(rows)
    if size == 0:
        raise StructureError("empty matrix has no determinant here")
    for row in rows:
        if len(row) != size:
            raise StructureError("determinant needs a square matrix")
    if size > bound:
        raise StructureError(f"matrix size {size} exceeds bound {bound}")
    table = rows[0][0].table
    for row in rows:
        for p in row:
            if p.table != table:
                raise StructureError("determinant entries over mixed tables")
    return _det(rows, table)


def _det(rows, table):
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # pick the row with most zero entries
    best = min(range(size), key=lambda i: sum(1 for p in rows[i] if not p.is_zero))
    rest = [row for i, row in enumerate(rows) if i != best]
    total = SparsePolynomial.zero(table)
    for j, pivot in enumerate(rows[best]):
        if pivot.is_zero:
            continue
        minor = [[row[c] for c in range(size) if c != j] for row in rest]
        cof = _det(minor, table)
        if (best + j) % 2:
            total = total - pivot * cof
        else:
            total = total + pivot * cof
    return total
