"""Desk-scale ideal computations.

Buchberger Groebner bases with the normal selection strategy and the
two classic pair-skipping criteria, normal forms, membership tests,
monomial saturation by elimination, and the exchange ideals of
mutation walks together with their saturations.

Everything here is deterministic: pair selection, reducer choice and
the final reduced basis are fixed functions of the input, so test
fixtures stay byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arith import (
    DEGREVLEX,
    BlockOrder,
    LaurentPolynomial,
    SparsePolynomial,
    VariableTable,
)
from .arith import kernel
from .errors import BudgetExceeded, StructureError
from .seeds import exchange_relations_along

AUX_NAME = "__t"

MAX_VARS = 12
MAX_INPUT_DEGREE = 6
MAX_PAIRS = 50000


class IdealBasis:
    __slots__ = ("generators", "order", "_basis")

    def __init__(self, generators, order=DEGREVLEX, _basis=None):
        generators = tuple(g for g in generators if g and not g.is_zero)
        if not generators:
            raise StructureError("ideal needs at least one nonzero generator")
        table = generators[0].table
        if any(g.table != table for g in generators[1:]):
            raise StructureError("generators must share one variable table")
        self.generators = generators
        self.order = order
        self._basis = _basis

    @property
    def table(self):
        return self.generators[0].table

    def groebner(self, max_vars=MAX_VARS, max_degree=MAX_INPUT_DEGREE,
                 max_pairs=MAX_PAIRS):
        if self._basis is None:
            self._basis = groebner(
                self.generators, self.order,
                max_vars=max_vars, max_degree=max_degree, max_pairs=max_pairs,
            )
        return self._basis


def _lead(terms, order):
    return max(terms, key=order.key)


def _monic(terms, order):
    c = terms[_lead(terms, order)]
    if c == 1:
        return terms
    return kernel.scale_terms(terms, Fraction(1, 1) / c)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce_full(fterms, basis, order):
    """Full normal form of the term dict fterms against a list of
    (lead_exps, term_dict) with monic leads. Deterministic: reducers
    tried in basis order, terms processed largest first."""
    R = dict(fterms)
    out = {}
    while R:
        e = _lead(R, order)
        c = R[e]
        hit = None
        for lead, terms in basis:
            if _divides(lead, e):
                hit = (lead, terms)
                break
        if hit is None:
            out[e] = c
            del R[e]
            continue
        lead, terms = hit
        shift = tuple(x - y for x, y in zip(e, lead))
        kernel.isub_scaled(R, shift, c, terms)
    return out


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def groebner(generators, order=DEGREVLEX, max_vars=MAX_VARS,
             max_degree=MAX_INPUT_DEGREE, max_pairs=MAX_PAIRS):
    """Reduced Groebner basis of the given generators.

    Budgets: the variable count and the input generator degrees are
    hard-checked up front (the soft desk-scale limits), and the number
    of processed S-pairs is capped; exceeding any of them raises
    BudgetExceeded carrying the run statistics.
    """
    gens = [g for g in generators if g and not g.is_zero]
    if not gens:
        raise StructureError("no nonzero generators")
    table = gens[0].table
    nvars = len(table)
    if nvars > max_vars:
        raise BudgetExceeded(
            f"{nvars} variables exceeds the limit of {max_vars}",
            variables=nvars, limit=max_vars,
        )
    worst = max(g.total_degree() for g in gens)
    if worst > max_degree:
        raise BudgetExceeded(
            f"input degree {worst} exceeds the limit of {max_degree}",
            degree=worst, limit=max_degree,
        )

    G = []       # list of (lead, terms), every terms monic
    pairs = set()
    done = set()

    def add_poly(terms):
        terms = _monic(terms, order)
        G.append((_lead(terms, order), terms))
        i = len(G) - 1
        for j in range(i):
            pairs.add((j, i))

    for g in gens:
        reduced = _reduce_full(g.terms, G, order)
        if reduced:
            add_poly(reduced)

    processed = 0
    reductions_to_zero = 0
    while pairs:
        if processed >= max_pairs:
            raise BudgetExceeded(
                f"S-pair budget of {max_pairs} exhausted",
                pairs_processed=processed,
                basis_size=len(G),
                reductions_to_zero=reductions_to_zero,
            )
        best = min(
            pairs,
            key=lambda ij: (
                sum(_lcm(G[ij[0]][0], G[ij[1]][0])),
                order.key(_lcm(G[ij[0]][0], G[ij[1]][0])),
                ij,
            ),
        )
        pairs.discard(best)
        done.add(best)
        processed += 1
        i, j = best
        li, lj = G[i][0], G[j][0]
        L = _lcm(li, lj)
        # criterion 1: coprime leading monomials
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        # criterion 2: chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not _divides(G[k][0], L):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik in done and jk in done:
                skip = True
                break
        if skip:
            continue
        shift_i = tuple(x - y for x, y in zip(L, li))
        shift_j = tuple(x - y for x, y in zip(L, lj))
        s = kernel.mul_monomial(G[i][1], shift_i, 1)
        kernel.isub_scaled(s, shift_j, 1, G[j][1])
        s = _reduce_full(s, G, order)
        if s:
            add_poly(s)
        else:
            reductions_to_zero += 1

    # minimal: visit leads small-to-large, drop any divisible by a kept one
    kept = []
    for i in sorted(range(len(G)), key=lambda i: order.key(G[i][0])):
        if any(_divides(G[j][0], G[i][0]) for j in kept):
            continue
        kept.append(i)
    minimal = [G[i] for i in kept]
    # reduced: tail-reduce every element against the others
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1 :]
            reduced = _reduce_full(minimal[i][1], others, order)
            if not reduced:
                minimal.pop(i)
                changed = True
                break
            reduced = _monic(reduced, order)
            if reduced != minimal[i][1]:
                minimal[i] = (_lead(reduced, order), reduced)
                changed = True
    minimal.sort(key=lambda lt: order.key(lt[0]))
    return tuple(
        SparsePolynomial(table, terms, _clean=True) for _, terms in minimal
    )


def normal_form(f, I, **budgets):
    basis = I.groebner(**budgets)
    pairs = [(max(g.terms, key=I.order.key), g.terms) for g in basis]
    terms = _reduce_full(f.terms, pairs, I.order)
    return SparsePolynomial(I.table, terms, _clean=True)


def member(f, I, **budgets):
    return normal_form(f, I, **budgets).is_zero


def saturate(I, M, max_pairs=MAX_PAIRS):
    """I : M^infinity for a monomial M, via the auxiliary variable
    trick: adjoin t (reserved name __t, placed first), add 1 - t*M,
    eliminate t with a block order, keep the t-free part."""
    if not M.is_monomial() or M.is_zero:
        raise StructureError("saturation needs a nonzero monomial")
    table = I.table
    if M.table != table:
        raise StructureError("monomial lives in a different variable table")
    if AUX_NAME in table.names:
        raise StructureError(f"variable name {AUX_NAME} is reserved")
    names = [AUX_NAME] + list(table.names)
    frozen = [False] + [table.is_frozen(i) for i in range(len(table))]
    big = VariableTable(names, frozen=frozen)

    def lift(p):
        return SparsePolynomial(
            big, {(0,) + e: c for e, c in p.terms.items()}, _clean=True
        )

    (m_exps,) = M.terms.keys()
    t_m = SparsePolynomial(big, {(1,) + m_exps: 1}, _clean=True)
    gens = [lift(g) for g in I.generators]
    gens.append(SparsePolynomial.one(big) - t_m)
    elim = IdealBasis(gens, BlockOrder(front=(0,)))
    # the auxiliary generator 1 - t*M legitimately exceeds the public
    # input-degree budget, so widen it for the internal run only
    degree_room = max(MAX_INPUT_DEGREE, 1 + sum(m_exps))
    basis = elim.groebner(
        max_vars=MAX_VARS + 1, max_degree=degree_room, max_pairs=max_pairs
    )
    projected = []
    for g in basis:
        if any(e[0] for e in g.terms):
            continue
        projected.append(
            SparsePolynomial(
                table, {e[1:]: c for e, c in g.terms.items()}, _clean=True
            )
        )
    if not projected:
        raise StructureError("elimination produced no t-free generators")
    # the t-free slice of the block-order basis is itself a reduced
    # degrevlex basis, so cache it when the target order matches
    cache = tuple(projected) if I.order == DEGREVLEX else None
    return IdealBasis(projected, I.order, _basis=cache)


def exchange_ideal(seed, walk):
    """(formal variables, I_T) for the walk from the seed: one
    generator z*z' - M1 - M2 per edge. An empty walk yields the formal
    variables and no ideal (None)."""
    out = exchange_relations_along(seed, walk)
    gens = out.generators()
    if not gens:
        return out, None
    return out, IdealBasis(gens, DEGREVLEX)


def mutable_product(walkrel):
    """M_T: the product of all mutable formal variables."""
    p = SparsePolynomial.one(walkrel.table)
    for i in range(len(walkrel.table)):
        if not walkrel.table.is_frozen(i):
            p = p * SparsePolynomial.variable(walkrel.table, i)
    return p


def saturated_exchange_ideal(seed, walk):
    """(formal variables, I_T, J_T) with J_T = I_T : M_T^infinity."""
    walkrel, ideal = exchange_ideal(seed, walk)
    if ideal is None:
        return walkrel, None, None
    return walkrel, ideal, saturate(ideal, mutable_product(walkrel))


def evaluate_on_pattern(f, walkrel):
    """Substitute the walk's Laurent realizations into a formal
    polynomial f over the walk table."""
    table = walkrel.table
    if f.table != table:
        raise StructureError("polynomial is not over the walk's variables")
    values = [walkrel.realization[name] for name in table.names]
    powers = {}

    def power(i, e):
        got = powers.get((i, e))
        if got is None:
            got = values[i] ** e
            powers[(i, e)] = got
        return got

    total = LaurentPolynomial.constant(values[0].table, 0)
    for exps, coef in f.terms.items():
        term = LaurentPolynomial.constant(values[0].table, coef)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


def vanishes_on_pattern(f, seed, walk):
    """True iff f(z_T) = 0 after substituting the actual cluster
    variables reached along the walk."""
    walkrel = exchange_relations_along(seed, walk)
    return evaluate_on_pattern(f, walkrel) == 0


@dataclass
class CrosscheckReport:
    total: int
    mismatches: list

    @property
    def ok(self):
        return not self.mismatches


def clusterradical_crosscheck(seed, walk, test_polys):
    """For each test polynomial, membership in J_T must agree exactly
    with vanishing on the pattern."""
    walkrel, _, J = saturated_exchange_ideal(seed, walk)
    mismatches = []
    for f in test_polys:
        in_ideal = member(f, J)
        vanishes = evaluate_on_pattern(f, walkrel) == 0
        if in_ideal != vanishes:
            mismatches.append(
                {"poly": str(f), "member": in_ideal, "vanishes": vanishes}
            )
    return CrosscheckReport(total=len(test_polys), mismatches=mismatches)


# ---------------------------------------------------------------------------
# The Plucker-ring certificate for Gr(3,6).

def _p_symbol_table():
    triples = list(combinations(range(1, 7), 3))
    names = ["P" + "".join(str(x) for x in t) for t in triples]
    return VariableTable(names), {t: i for i, t in enumerate(triples)}


def _gr36_symbols():
    table, index = _p_symbol_table()

    def P(*ixs):
        key = tuple(sorted(ixs))
        return SparsePolynomial.variable(table, index[key])

    return table, P


def gr36_long_relation(P):
    return (
        P(1, 3, 5) * P(2, 4, 6)
        - P(1, 3, 4) * P(2, 5, 6)
        - P(1, 3, 6) * P(2, 4, 5)
        - P(1, 2, 3) * P(4, 5, 6)
    )


def gr36_three_term(P, x, a, b, c, d):
    """P_{xac}P_{xbd} - P_{xab}P_{xcd} - P_{xad}P_{xbc}."""
    return (
        P(x, a, c) * P(x, b, d)
        - P(x, a, b) * P(x, c, d)
        - P(x, a, d) * P(x, b, c)
    )


def gr36_all_three_term(P):
    out = []
    for x in range(1, 7):
        rest = [y for y in range(1, 7) if y != x]
        for quad in combinations(rest, 4):
            out.append(gr36_three_term(P, x, *quad))
    return out


def in_rational_span(target, vectors):
    """Exact linear algebra: is target a constant-coefficient
    combination of the vectors (polynomials over one table)?"""
    monomials = sorted(
        set(target.terms) | {m for v in vectors for m in v.terms}
    )
    col = {m: i for i, m in enumerate(monomials)}
    width = len(monomials)
    rows = []
    for v in vectors:
        row = [Fraction(0)] * width
        for m, c in v.terms.items():
            row[col[m]] = Fraction(c)
        rows.append(row)
    tgt = [Fraction(0)] * width
    for m, c in target.terms.items():
        tgt[col[m]] = Fraction(c)
    rank = 0
    for c in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][c]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        if tgt[c]:
            f = tgt[c]
            tgt = [x - f * y for x, y in zip(tgt, rows[rank])]
        rank += 1
    return all(x == 0 for x in tgt)


def gr36_parentheticals(P):
    """The four quadratic combinations whose monomial-weighted sum
    equals P124 times the long relation."""
    return (
        P(1, 2, 4) * P(1, 3, 5) - P(1, 2, 3) * P(1, 4, 5) - P(1, 2, 5) * P(1, 3, 4),
        P(1, 2, 4) * P(2, 5, 6) - P(1, 2, 5) * P(2, 4, 6) + P(1, 2, 6) * P(2, 4, 5),
        P(1, 2, 4) * P(1, 3, 6) - P(1, 2, 3) * P(1, 4, 6) - P(1, 2, 6) * P(1, 3, 4),
        P(1, 2, 4) * P(4, 5, 6) - P(1, 4, 5) * P(2, 4, 6) + P(1, 4, 6) * P(2, 4, 5),
    )


def gr36_certificate_check():
    """Three independent facts about the long Plucker relation:

    1. multiplying it by P124 turns it into a monomial-weighted sum of
       four three-term relations, verified as a formal identity in the
       20 P-symbols;
    2. each of those four parentheticals vanishes identically on the
       generic 3x6 matrix;
    3. the long relation itself is NOT a constant-coefficient
       combination of the 30 three-term relations (degree-2 linear
       algebra), so the monomial factor is really needed.
    """
    from .models.generic import generic_matrix

    table, P = _gr36_symbols()
    long_rel = gr36_long_relation(P)
    gp1, gp2, gp3, gp4 = gr36_parentheticals(P)
    identity = (
        P(1, 2, 4) * long_rel
        - P(2, 4, 6) * gp1
        + P(1, 3, 4) * gp2
        + P(2, 4, 5) * gp3
        + P(1, 2, 3) * gp4
    )
    if not identity.is_zero:
        return False

    mat = generic_matrix(3, 6)
    mapping = {}
    for i, name in enumerate(table.names):
        J = tuple(int(ch) for ch in name[1:])
        mapping[i] = mat.plucker(J)
    for quadratic in (gp1, gp2, gp3, gp4, long_rel):
        if not quadratic.substitute(mat.table, mapping).is_zero:
            return False

    if in_rational_span(long_rel, gr36_all_three_term(P)):
        return False
    return True
