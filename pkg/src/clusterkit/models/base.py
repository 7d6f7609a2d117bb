"""Shared plumbing for the concrete models.

A model is a seed whose variables are *named* after polynomials in some
ambient ring of generic matrix entries (the bindings). The seed itself
stays abstract, so it can be mutated and enumerated symbolically; the
bindings are what the model's claims are about, and `bound_seed` swaps
them in when mutations should perform genuine polynomial division.
"""

from dataclasses import dataclass

from ..arith import LaurentPolynomial, SparsePolynomial, try_exact_div
from ..errors import StructureError
from ..seeds import Seed


def verify_modulo(f, g):
    """True iff f lies in the principal ideal generated by g, i.e. the
    exact division f / g succeeds (the zero polynomial counts)."""
    if g.is_zero:
        raise ZeroDivisionError("zero modulus")
    return try_exact_div(f, g) is not None


@dataclass
class ModelSeed:
    """An abstract seed plus a polynomial binding per vertex label."""

    seed: Seed
    ambient: object  # VariableTable of the binding polynomials
    bindings: dict   # label -> SparsePolynomial over `ambient`

    def __post_init__(self):
        missing = [x for x in self.seed.labels if x not in self.bindings]
        if missing:
            raise StructureError(f"labels without bindings: {missing}")

    def binding(self, label):
        return self.bindings[label]

    def binding_list(self):
        """Bindings in vertex order."""
        return [self.bindings[x] for x in self.seed.labels]

    def bound_seed(self):
        """The same quiver with each variable replaced by its binding;
        mutating it divides actual polynomials, so every exchange is
        exercised for exactness."""
        entries = [
            LaurentPolynomial.from_poly(self.bindings[x]) for x in self.seed.labels
        ]
        return Seed(self.seed.matrix, entries, self.seed.labels)


def exchange_products(matrix, values, j):
    """The two sides of the exchange at mutable vertex j, evaluated on
    per-vertex polynomial values: the product over positive entries of
    column j and the product over negative ones."""
    table = values[0].table
    m1 = SparsePolynomial.one(table)
    m2 = SparsePolynomial.one(table)
    for u in range(matrix.m):
        b = matrix.entry(u, j)
        if b > 0:
            m1 = m1 * values[u] ** b
        elif b < 0:
            m2 = m2 * values[u] ** (-b)
    return m1, m2


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def initial_exchange_check(model, modulo=None, expected=None):
    """One result per mutable vertex of the initial seed.

    Without `expected`, the criterion is that the sum of the two
    exchange products is exactly divisible by the vertex's own binding
    (so the mutated variable is again a polynomial). With an entry in
    `expected`, the claimed product identity

        binding * expected = m1 + m2

    is checked instead, exactly or modulo the given form.
    """
    values = model.binding_list()
    matrix = model.seed.matrix
    out = []
    for j in range(matrix.n):
        label = model.seed.labels[j]
        m1, m2 = exchange_products(matrix, values, j)
        f = m1 + m2
        if expected is not None and label in expected:
            residual = f - values[j] * expected[label]
            ok = residual.is_zero or (
                modulo is not None and verify_modulo(residual, modulo)
            )
            detail = "" if ok else f"residual {residual} not in the modulus ideal"
        else:
            ok = try_exact_div(f, values[j]) is not None
            detail = "" if ok else f"{m1} + {m2} not divisible by {values[j]}"
        out.append(CheckResult(name=f"exchange at {label}", ok=ok, detail=detail))
    return out
