"""
Centers, symmetric polynomials in the Jucys-Murphy elements, and the
content-multiset criterion.

Symmetric polynomials are kept in the power-sum basis: a :class:`SymPoly` maps
a partition ``(k1, k2, ...)`` to the coefficient of ``p_k1 p_k2 ...``.

>>> e2 = SymPoly.elementary(2)
>>> sorted(e2.terms.items())
[((1, 1), Fraction(1, 2)), ((2,), Fraction(-1, 2))]
>>> e2.at_contents([1, -1])
Fraction(-1, 1)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .cellular_core import AlgebraTable, CheckReport, ContentTable, Element
from .combinatorics import content_multisets_distinct, enumerate_partitions
from .exact_field import EchelonBasis, determinant, format_scalar, scalar, subspace_equal

__all__ = [
    "SymPoly",
    "CenterReport",
    "NoSeparatingFamily",
    "LemmaViolation",
    "compute_center",
    "eval_sympoly_at_elements",
    "eval_sympoly_at_contents",
    "sym_span",
    "verify_prop_sym_central",
    "verify_prop_converse",
    "lemma_lmjm1_check",
    "lemma_lmjm2_triangularize",
    "main_theorem_check",
    "verify_proof_identity",
    "standard_polys",
]


class NoSeparatingFamily(ValueError):
    """No power-sum family within the degree budget separates the content vectors."""


class LemmaViolation(AssertionError):
    pass


class SymPoly:
    def __init__(self, terms=None):
        self.terms = {}
        for key, x in (terms or {}).items():
            key = tuple(sorted(key, reverse=True))
            x = scalar(x)
            if x:
                self.terms[key] = self.terms.get(key, 0) + x
        self.terms = {k: x for k, x in self.terms.items() if x}

    @classmethod
    def constant(cls, x=1):
        return cls({(): x})

    @classmethod
    def power_sum(cls, k: int):
        if k < 1:
            raise ValueError("power sums start at p_1")
        return cls({(k,): 1})

    @classmethod
    def power_product(cls, parts):
        return cls({tuple(parts): 1})

    @classmethod
    def elementary(cls, k: int):
        """``e_k`` by Newton's identity ``k e_k = sum_i (-1)^(i-1) e_(k-i) p_i``."""
        es = [cls.constant()]
        for j in range(1, k + 1):
            acc = cls()
            for i in range(1, j + 1):
                term = es[j - i] * cls.power_sum(i)
                acc = acc + (term if i % 2 else -term)
            es.append(acc * Fraction(1, j))
        return es[k]

    @property
    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def __add__(self, other):
        out = dict(self.terms)
        for k, x in other.terms.items():
            out[k] = out.get(k, 0) + x
        return SymPoly(out)

    def __neg__(self):
        return SymPoly({k: -x for k, x in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            k = scalar(other)
            return SymPoly({key: k * x for key, x in self.terms.items()})
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                key = tuple(sorted(a + b, reverse=True))
                out[key] = out.get(key, 0) + x * y
        return SymPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def at_contents(self, c) -> Fraction:
        return eval_sympoly_at_contents(self, c)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, x in sorted(self.terms.items()):
            mono = "*".join("p%d" % k for k in key) or "1"
            parts.append("%s*%s" % (format_scalar(x), mono))
        return " + ".join(parts)

    __repr__ = __str__


def standard_polys() -> dict:
    return {
        "p1": SymPoly.power_sum(1),
        "p2": SymPoly.power_sum(2),
        "e2": SymPoly.elementary(2),
        "p1*p2": SymPoly.power_product((2, 1)),
    }


def eval_sympoly_at_contents(p: SymPoly, c) -> Fraction:
    c = [scalar(x) for x in c]
    sums = {}
    total = Fraction(0)
    for key, x in p.terms.items():
        v = x
        for k in key:
            if k not in sums:
                sums[k] = sum((y ** k for y in c), Fraction(0))
            v *= sums[k]
        total += v
    return total


def eval_sympoly_at_elements(p: SymPoly, L: list, algebra: AlgebraTable | None = None) -> Element:
    """Substitute ``p_k -> sum_i L_i^k`` and multiply out."""
    if algebra is None:
        if not L:
            raise ValueError("need the algebra when there are no elements")
        algebra = L[0].algebra
    powers = [[x] for x in L]
    cache = {}

    def psum(k):
        if k not in cache:
            total = algebra.zero()
            for pw in powers:
                while len(pw) < k:
                    pw.append(pw[-1] * pw[0])
                total = total + pw[k - 1]
            cache[k] = total
        return cache[k]

    out = algebra.zero()
    for key, coeff in sorted(p.terms.items()):
        v = algebra.one * coeff
        for k in key:
            v = v * psum(k)
        out = out + v
    return out


def compute_center(algebra: AlgebraTable) -> list[Element]:
    """Basis of ``{z : z b = b z}`` for every basis element b."""
    n = algebra.dim
    eb = EchelonBasis(n)
    basis = algebra.basis()
    for b in basis:
        rows = {}
        for i, e in enumerate(basis):
            for k, x in (e * b - b * e).c.items():
                rows.setdefault(k, {})[i] = x
        for k in sorted(rows):
            eb.add(rows[k])
    return [algebra.element(v) for v in eb.null_vectors()]


def _span_basis(algebra, elements) -> tuple[EchelonBasis, list]:
    eb = EchelonBasis(algebra.dim)
    kept = []
    for x in elements:
        if eb.add(dict(x.c)):
            kept.append(x)
    return eb, kept


def sym_span(algebra: AlgebraTable, L: list) -> list[Element]:
    """
    Basis of the span of all symmetric polynomials in L: the unital
    subalgebra generated by ``e_1(L), ..., e_m(L)``, closed under pairwise
    products until the rank stops growing.
    """
    gens = [eval_sympoly_at_elements(SymPoly.elementary(k), L, algebra) for k in range(1, len(L) + 1)]
    eb, basis = _span_basis(algebra, [algebra.one] + gens)
    while True:
        grew = False
        current = list(basis)
        for a, b in combinations_with_replacement(current, 2):
            x = a * b
            if eb.add(dict(x.c)):
                basis.append(x)
                grew = True
        if not grew:
            return basis


def _within_cell_multisets(algebra, contents):
    bad = []
    datum = algebra.datum
    for lam in datum.cells:
        tabs = datum.tableaux[lam]
        ref = sorted(contents[tabs[0]])
        for t in tabs[1:]:
            if sorted(contents[t]) != ref:
                bad.append((lam, tabs[0], t))
    return bad


def verify_prop_sym_central(algebra: AlgebraTable, L: list, contents: ContentTable,
                            span: list | None = None) -> CheckReport:
    """Every element of the symmetric-polynomial span commutes with every basis element."""
    rep = CheckReport("sym-central")
    bad = _within_cell_multisets(algebra, contents)
    rep.details["within_cell_multisets_equal"] = not bad
    span = sym_span(algebra, L) if span is None else span
    rep.details["sym_span_dim"] = len(span)
    basis = algebra.basis()
    for n, z in enumerate(span):
        for i, b in enumerate(basis):
            if z * b != b * z:
                rep.fail(generator=n, index=i)
                break
    return rep


def _separating_power_sum(x, y):
    for k in range(1, len(x) + 1):
        if eval_sympoly_at_contents(SymPoly.power_sum(k), x) != eval_sympoly_at_contents(SymPoly.power_sum(k), y):
            return k
    return None


def verify_prop_converse(algebra: AlgebraTable, L: list, contents: ContentTable) -> CheckReport:
    """Tableaux of one cell have equal content multisets; failures name a separating p_k."""
    rep = CheckReport("prop-converse")
    for lam, s, t in _within_cell_multisets(algebra, contents):
        k = _separating_power_sum(contents[s], contents[t])
        rep.fail(cell=str(lam), S=str(s), T=str(t), separating="p%d" % k)
    return rep


def _lmjm1_family(m: int) -> list[SymPoly]:
    ps = [SymPoly.power_sum(k) for k in range(1, m + 1)]
    return [SymPoly.constant()] + ps + [a * b for a, b in combinations_with_replacement(ps, 2)]


def lemma_lmjm1_check(x, y, family: list | None = None) -> tuple[bool, Fraction | None]:
    """
    Whether one constant k gives ``p(x) == k p(y)`` for every p in the family
    (default: 1, ``p_1..p_m`` and their pairwise products).  When it does,
    k must be 1 and x, y must agree as multisets; anything else raises
    :class:`LemmaViolation`.
    """
    x = [scalar(v) for v in x]
    y = [scalar(v) for v in y]
    if family is None:
        family = _lmjm1_family(max(len(x), len(y)))
    k = None
    tied = True
    for p in family:
        px, py = eval_sympoly_at_contents(p, x), eval_sympoly_at_contents(p, y)
        if py == 0:
            if px != 0:
                tied = False
                break
            continue
        if k is None:
            k = px / py
        elif px != k * py:
            tied = False
            break
    if not tied:
        return False, None
    if k != 1 or sorted(x) != sorted(y):
        raise LemmaViolation("p(x) = %s p(y) on the family but x=%s, y=%s" % (k, x, y))
    return True, k


def _power_families(budget: int):
    for d in range(budget + 1):
        for parts in enumerate_partitions(d):
            yield SymPoly.power_product(parts)


@dataclass
class TriangularWitness:
    polys: list
    matrix: list
    determinant: Fraction
    original_determinant: Fraction
    degree_budget: int
    original_polys: list = field(default_factory=list)


def lemma_lmjm2_triangularize(vectors: list, degree_budget: int | None = None) -> TriangularWitness:
    """
    Find symmetric polynomials ``p'_1..p'_n`` whose evaluation matrix
    ``M[r][c] = p'_r(vector c)`` is nonsingular (greedy search over power-sum
    products by increasing degree, up to ``m * n`` by default), then
    eliminate below the diagonal.  Row operations only add multiples of other
    rows, so the determinant is unchanged.
    """
    vectors = [[scalar(v) for v in vec] for vec in vectors]
    n = len(vectors)
    m = max((len(v) for v in vectors), default=0)
    if degree_budget is None:
        degree_budget = max(m * n, 1)
    eb = EchelonBasis(n)
    chosen, rows = [], []
    for p in _power_families(degree_budget):
        row = [eval_sympoly_at_contents(p, v) for v in vectors]
        if eb.add(row):
            chosen.append(p)
            rows.append(row)
            if len(chosen) == n:
                break
    if len(chosen) < n:
        raise NoSeparatingFamily(
            "evaluation rank %d < %d within degree budget %d" % (eb.rank, n, degree_budget)
        )
    original = determinant(rows)
    polys = list(chosen)
    M = [list(r) for r in rows]
    for j in range(n):
        if M[j][j] == 0:
            r = next(r for r in range(j + 1, n) if M[r][j] != 0)
            M[j] = [a + b for a, b in zip(M[j], M[r])]
            polys[j] = polys[j] + polys[r]
        for r in range(j + 1, n):
            if M[r][j] != 0:
                f = M[r][j] / M[j][j]
                M[r] = [a - f * b for a, b in zip(M[r], M[j])]
                polys[r] = polys[r] - polys[j] * f
    det = Fraction(1)
    for j in range(n):
        det *= M[j][j]
    return TriangularWitness(polys, M, det, original, degree_budget, chosen)


@dataclass
class CenterReport:
    applicable: bool
    center_basis: list
    sym_span_basis: list
    condition_one: bool | None
    condition_two: bool | None
    equivalence_holds: bool | None
    witness: tuple | None = None
    triangular_witness: TriangularWitness | None = None
    reduction_nonsingular: bool | None = None
    dimensions: dict = field(default_factory=dict)


def cell_content_vectors(algebra: AlgebraTable, contents: ContentTable) -> dict:
    """Contents of the first listed tableau of every cell."""
    datum = algebra.datum
    return {lam: list(contents[datum.tableaux[lam][0]]) for lam in datum.cells}


def main_theorem_check(algebra: AlgebraTable, L: list, contents: ContentTable) -> CenterReport:
    """
    Condition (1): center equals the symmetric-polynomial span (a literal
    subspace comparison).  Condition (2): the cells have pairwise distinct
    content multisets.  Also records whether the evaluation matrix of
    symmetric polynomials at the cells is nonsingular.
    """
    center = compute_center(algebra)
    span = sym_span(algebra, L)
    dims = {"algebra": algebra.dim, "center": len(center), "symSpan": len(span),
            "cells": len(algebra.datum.cells)}
    hyp = verify_prop_sym_central(algebra, L, contents, span)
    if not hyp.passed:
        return CenterReport(False, center, span, None, None, None, dimensions=dims)
    one = subspace_equal([z.coeffs for z in center], [z.coeffs for z in span])
    vectors = cell_content_vectors(algebra, contents)
    two, witness = content_multisets_distinct(vectors)
    tri = None
    try:
        tri = lemma_lmjm2_triangularize(list(vectors.values()))
    except NoSeparatingFamily:
        pass
    return CenterReport(
        True, center, span, one, two, one == two, witness, tri, tri is not None, dims,
    )


def verify_proof_identity(algebra: AlgebraTable, L: list, contents: ContentTable, system,
                          polys: dict | None = None) -> CheckReport:
    """``p(L) == sum_lam p(c_lam) F_lam`` for each named polynomial."""
    rep = CheckReport("proof-identity")
    polys = standard_polys() if polys is None else polys
    vectors = cell_content_vectors(algebra, contents)
    for name, p in polys.items():
        lhs = eval_sympoly_at_elements(p, L, algebra)
        rhs = algebra.zero()
        for lam, c in vectors.items():
            rhs = rhs + system.Flambda[lam] * eval_sympoly_at_contents(p, c)
        if lhs != rhs:
            rep.fail(poly=name)
    rep.details["polys"] = sorted(polys)
    return rep
