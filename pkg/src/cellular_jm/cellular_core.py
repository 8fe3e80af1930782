"""
Finite-dimensional algebras with a designated cellular basis.

An :class:`AlgebraTable` multiplies in a *computational* basis (group
elements, Hecke words, matrix units) and carries the cellular basis
``C[lam, S, T]`` as a list of elements written in that basis.  The verifiers
in this module check the cellularity axioms, the Jucys-Murphy axioms and the
separation condition exactly, returning a :class:`CheckReport` rather than
raising.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact_field import EchelonBasis, format_scalar, inverse, scalar

MAX_FAILURES = 20

__all__ = [
    "CheckReport",
    "CellDatum",
    "ContentTable",
    "TriangularExpansion",
    "AlgebraTable",
    "Element",
    "multiply",
    "expand_in_cellular",
    "span_closure",
    "verify_algebra_table",
    "verify_cellularity",
    "verify_jm_axioms",
    "verify_separation",
]


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    failure_count: int = 0

    def fail(self, **witness):
        self.passed = False
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(witness)

    def __bool__(self):
        return self.passed


@dataclass
class CellDatum:
    """
    The poset of cells and the ordered index sets ``M(lam)``.

    ``orders`` maps an orientation name to a pair ``(cell_leq, tableau_leq)``;
    ``orientation`` selects the pair in force.  Tableaux must be hashable and
    distinct across cells.
    """

    cells: list
    tableaux: dict
    orders: dict
    orientation: str

    def __post_init__(self):
        if self.orientation not in self.orders:
            raise ValueError("unknown orientation %r" % (self.orientation,))
        self.basis = [
            (lam, s, t) for lam in self.cells for s in self.tableaux[lam] for t in self.tableaux[lam]
        ]
        self.index = {key: i for i, key in enumerate(self.basis)}
        self.cell_of = {t: lam for lam in self.cells for t in self.tableaux[lam]}
        if len(self.cell_of) != sum(len(v) for v in self.tableaux.values()):
            raise ValueError("tableaux are not distinct across cells")

    @property
    def cell_leq(self) -> Callable:
        return self.orders[self.orientation][0]

    @property
    def tableau_leq(self) -> Callable:
        return self.orders[self.orientation][1]

    def all_tableaux(self) -> list:
        return [t for lam in self.cells for t in self.tableaux[lam]]

    def leq(self, s, t, orientation=None) -> bool:
        """The order on the disjoint union of the ``M(lam)``."""
        cell_leq, tab_leq = self.orders[orientation or self.orientation]
        a, b = self.cell_of[s], self.cell_of[t]
        if a == b:
            return tab_leq(s, t)
        return cell_leq(a, b)

    def with_orders(self, orders: dict, orientation: str) -> "CellDatum":
        return CellDatum(self.cells, self.tableaux, orders, orientation)

    def check_poset(self) -> list:
        """Violations of reflexivity, antisymmetry or transitivity."""
        bad = []
        for name, (cell_leq, tab_leq) in self.orders.items():
            for label, items, leq in [("cells", self.cells, cell_leq)] + [
                ("M(%s)" % (lam,), self.tableaux[lam], tab_leq) for lam in self.cells
            ]:
                for a in items:
                    if not leq(a, a):
                        bad.append((name, label, "reflexive", a))
                    for b in items:
                        if a != b and leq(a, b) and leq(b, a):
                            bad.append((name, label, "antisymmetric", a, b))
                        for c in items:
                            if leq(a, b) and leq(b, c) and not leq(a, c):
                                bad.append((name, label, "transitive", a, b, c))
        return bad


class ContentTable:
    """
    Contents ``c_T(i)``: ``of[T]`` is the tuple of contents of ``T`` at the
    Jucys-Murphy elements, in the order they are listed.  ``labels`` names
    those elements (e.g. ``[2, 3, 4]`` for ``L_2, L_3, L_4``).
    """

    def __init__(self, of: dict, labels: list):
        self.of = {t: tuple(scalar(c) for c in cs) for t, cs in of.items()}
        self.labels = list(labels)
        for t, cs in self.of.items():
            if len(cs) != len(self.labels):
                raise ValueError("tableau %s has %d contents, expected %d" % (t, len(cs), len(self.labels)))

    def __getitem__(self, t):
        return self.of[t]

    def content(self, t, i: int) -> Fraction:
        """Content of ``t`` at the i-th listed element (0-based position)."""
        return self.of[t][i]

    @property
    def sets(self) -> list:
        """Sorted list of the distinct contents at each position."""
        return [sorted({cs[i] for cs in self.of.values()}) for i in range(len(self.labels))]

    def with_swapped_positions(self, t, i: int, j: int) -> "ContentTable":
        """Copy with the contents of ``t`` at positions i and j exchanged."""
        of = dict(self.of)
        cs = list(of[t])
        cs[i], cs[j] = cs[j], cs[i]
        of[t] = tuple(cs)
        return ContentTable(of, self.labels)

    def to_json(self) -> dict:
        return {str(t): [format_scalar(c) for c in cs] for t, cs in self.of.items()}


@dataclass
class TriangularExpansion:
    """Split of ``C[lam,S,T] * a`` into diagonal, same-cell lower terms and the part in lower cells."""

    diagonal: Fraction
    lower_terms: dict
    below_cell_part: dict


class Element:
    """An algebra element; ``c`` maps computational basis indices to nonzero scalars."""

    __slots__ = ("algebra", "c")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        if isinstance(coeffs, dict):
            self.c = {i: scalar(x) for i, x in coeffs.items() if x != 0}
        else:
            if len(coeffs) != algebra.dim:
                raise ValueError("expected %d coefficients" % algebra.dim)
            self.c = {i: scalar(x) for i, x in enumerate(coeffs) if x != 0}

    @property
    def coeffs(self) -> tuple:
        return tuple(self.c.get(i, Fraction(0)) for i in range(self.algebra.dim))

    def is_zero(self) -> bool:
        return not self.c

    def _check(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.c)
        for i, x in other.c.items():
            out[i] = out.get(i, 0) + x
        return Element(self.algebra, out)

    def __neg__(self):
        return Element(self.algebra, {i: -x for i, x in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        k = scalar(other)
        return Element(self.algebra, {i: k * x for i, x in self.c.items()})

    def __rmul__(self, other):
        k = scalar(other)
        return Element(self.algebra, {i: k * x for i, x in self.c.items()})

    def __truediv__(self, other):
        return self * (1 / scalar(other))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self):
        terms = " + ".join(
            "%s*%s" % (format_scalar(x), self.algebra.label(i)) for i, x in sorted(self.c.items())
        )
        return "Element(%s)" % (terms or "0")


class AlgebraTable:
    """
    Structure constants ``table[(i, j)] = {k: coeff}`` (missing pairs
    multiply to zero), the anti-involution as the image of every basis
    element, the cellular basis written in the computational basis, and the
    identity element.
    """

    def __init__(self, dim, table, involution, cellular, datum, one, labels=None, name=""):
        self.dim = dim
        self.table = table
        self.involution_images = [dict(x) for x in involution]
        self.datum = datum
        self.labels = labels
        self.name = name
        self.one = Element(self, one)
        if len(cellular) != dim or len(datum.basis) != dim:
            raise ValueError("cellular basis has the wrong size")
        self.cellular = [Element(self, c) for c in cellular]
        self._cell_inverse = None
        self._trivial_cellular = all(el.c == {i: 1} for i, el in enumerate(self.cellular))

    def label(self, i) -> str:
        return str(self.labels[i]) if self.labels else "b%d" % i

    def element(self, coeffs) -> Element:
        return Element(self, coeffs)

    def zero(self) -> Element:
        return Element(self, {})

    def basis_element(self, i) -> Element:
        return Element(self, {i: 1})

    def basis(self) -> list:
        return [self.basis_element(i) for i in range(self.dim)]

    def multiply(self, a: Element, b: Element) -> Element:
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("elements of different algebras")
        out = {}
        table = self.table
        for i, x in a.c.items():
            for j, y in b.c.items():
                prod = table.get((i, j))
                if not prod:
                    continue
                xy = x * y
                for k, z in prod.items():
                    out[k] = out.get(k, 0) + xy * z
        return Element(self, out)

    def involute(self, a: Element) -> Element:
        out = {}
        for i, x in a.c.items():
            for k, z in self.involution_images[i].items():
                out[k] = out.get(k, 0) + x * z
        return Element(self, out)

    def C(self, lam, s, t) -> Element:
        return self.cellular[self.datum.index[(lam, s, t)]]

    def _inverse_columns(self):
        if self._cell_inverse is None:
            n = self.dim
            # rows of the matrix whose columns are the cellular basis elements
            m = [[Fraction(0)] * n for _ in range(n)]
            for r, el in enumerate(self.cellular):
                for k, x in el.c.items():
                    m[k][r] = x
            inv = inverse(m)
            if inv is None:
                raise ValueError("cellular basis is not a basis")
            self._cell_inverse = [
                {r: inv[r][k] for r in range(n) if inv[r][k] != 0} for k in range(n)
            ]
        return self._cell_inverse

    def expand_in_cellular(self, a: Element) -> dict:
        """Coefficients of ``a`` in the cellular basis, keyed by ``(lam, S, T)``."""
        basis = self.datum.basis
        if self._trivial_cellular:
            return {basis[r]: x for r, x in sorted(a.c.items())}
        cols = self._inverse_columns()
        out = {}
        for k, x in a.c.items():
            for r, z in cols[k].items():
                out[r] = out.get(r, 0) + x * z
        return {basis[r]: x for r, x in sorted(out.items()) if x != 0}


def multiply(a: Element, b: Element) -> Element:
    return a.algebra.multiply(a, b)


def expand_in_cellular(a: Element) -> dict:
    return a.algebra.expand_in_cellular(a)


def span_closure(algebra: AlgebraTable, generators: list, start=None) -> list:
    """
    Elements obtained from ``start`` (default: the identity) by right
    multiplication with generators, keeping only those that enlarge the span.
    The result is a basis of the right ideal they generate, i.e. of the
    subalgebra generated when the start is the identity.
    """
    eb = EchelonBasis(algebra.dim)
    found = []
    queue = list(start) if start is not None else [algebra.one]
    while queue:
        x = queue.pop(0)
        if eb.add(dict(x.c)):
            found.append(x)
            queue.extend(x * g for g in generators)
    return found


def verify_algebra_table(algebra: AlgebraTable, exhaustive_limit: int = 36, samples: int = 2000,
                         seed: int = 0) -> CheckReport:
    """Identity, associativity and anti-involution checks on basis elements."""
    rep = CheckReport("algebra-table")
    basis = algebra.basis()
    one = algebra.one
    for i, b in enumerate(basis):
        if one * b != b or b * one != b:
            rep.fail(axiom="identity", index=i)
    n = algebra.dim
    if n <= exhaustive_limit:
        triples = [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
        pairs = [(i, j) for i in range(n) for j in range(n)]
    else:
        rng = random.Random(seed)
        triples = [tuple(rng.randrange(n) for _ in range(3)) for _ in range(samples)]
        pairs = [tuple(rng.randrange(n) for _ in range(2)) for _ in range(samples)]
    rep.details["associativity_triples"] = len(triples)
    products = {}

    def prod(i, j):
        if (i, j) not in products:
            products[(i, j)] = basis[i] * basis[j]
        return products[(i, j)]

    for i, j, k in triples:
        if prod(i, j) * basis[k] != basis[i] * prod(j, k):
            rep.fail(axiom="associativity", triple=(i, j, k))
    for i, b in enumerate(basis):
        if algebra.involute(algebra.involute(b)) != b:
            rep.fail(axiom="involution-square", index=i)
    for i, j in pairs:
        if algebra.involute(prod(i, j)) != algebra.involute(basis[j]) * algebra.involute(basis[i]):
            rep.fail(axiom="anti-automorphism", pair=(i, j))
    return rep


def _split(expansion: dict, lam):
    same, other = {}, {}
    for key, x in expansion.items():
        (same if key[0] == lam else other)[key] = x
    return same, other


def verify_cellularity(algebra: AlgebraTable, generators: list, exhaustive: bool | None = None) -> CheckReport:
    """
    Check that the generators generate the algebra, that the involution
    swaps cellular indices (C2), and that left multiplication acts on the
    first index modulo lower cells with coefficients independent of the
    second index (C3).

    With ``exhaustive`` (the default for dimension <= 36) the (C3) check runs
    over the whole spanning set produced by the generator closure, otherwise
    over the generators only.
    """
    datum = algebra.datum
    rep = CheckReport("cellularity")
    spanning = span_closure(algebra, generators)
    rep.details["closure_rank"] = len(spanning)
    if len(spanning) != algebra.dim:
        rep.fail(axiom="generation", rank=len(spanning), dim=algebra.dim)
    rep.details["dimension_count"] = sum(len(datum.tableaux[lam]) ** 2 for lam in datum.cells)
    if rep.details["dimension_count"] != algebra.dim:
        rep.fail(axiom="C1", dim=algebra.dim, count=rep.details["dimension_count"])

    for lam, s, t in datum.basis:
        if algebra.involute(algebra.C(lam, s, t)) != algebra.C(lam, t, s):
            rep.fail(axiom="C2", cell=str(lam), S=str(s), T=str(t))

    if exhaustive is None:
        exhaustive = algebra.dim <= 36
    actors = spanning if exhaustive else list(generators)
    rep.details["c3_actors"] = len(actors)
    cell_leq = datum.cell_leq
    for a_index, a in enumerate(actors):
        for lam in datum.cells:
            for s in datum.tableaux[lam]:
                reference = None
                ref_t = None
                for t in datum.tableaux[lam]:
                    same, other = _split(algebra.expand_in_cellular(a * algebra.C(lam, s, t)), lam)
                    for mu, _, _ in other:
                        if mu == lam or not cell_leq(mu, lam):
                            rep.fail(axiom="C3-ideal", actor=a_index, cell=str(lam), S=str(s),
                                     T=str(t), stray_cell=str(mu))
                            break
                    coeffs = {}
                    for (_, s2, t2), x in same.items():
                        if t2 != t:
                            rep.fail(axiom="C3-second-index", actor=a_index, cell=str(lam),
                                     S=str(s), T=str(t), found=str(t2))
                        coeffs[s2] = x
                    if reference is None:
                        reference, ref_t = coeffs, t
                    elif coeffs != reference:
                        rep.fail(axiom="C3-independence", actor=a_index, cell=str(lam), S=str(s),
                                 T=str(ref_t), T2=str(t))
    return rep


def triangular_expansion(algebra: AlgebraTable, lam, s, t, a: Element) -> TriangularExpansion:
    """Split ``C[lam,S,T] * a`` into the pieces named in the Jucys-Murphy axiom."""
    same, other = _split(algebra.expand_in_cellular(algebra.C(lam, s, t) * a), lam)
    diagonal = same.pop((lam, s, t), Fraction(0))
    return TriangularExpansion(diagonal, same, other)


def verify_jm_axioms(algebra: AlgebraTable, L: list, contents: ContentTable) -> CheckReport:
    """
    Commutation, involution invariance and triangular action with diagonal
    ``c_T(i)``.  Triangularity is evaluated under every orientation the cell
    datum offers; ``details["orientation_confirmed"]`` lists those under
    which it holds, and the check passes only if the datum's own orientation
    is one of them.
    """
    datum = algebra.datum
    rep = CheckReport("jm")
    for i, x in enumerate(L):
        for j, y in enumerate(L[i + 1:], i + 1):
            if x * y != y * x:
                rep.fail(axiom="commute", i=contents.labels[i], j=contents.labels[j])
        if algebra.involute(x) != x:
            rep.fail(axiom="involution", i=contents.labels[i])

    violations = {name: [] for name in datum.orders}
    for lam in datum.cells:
        for s in datum.tableaux[lam]:
            for t in datum.tableaux[lam]:
                for i, x in enumerate(L):
                    exp = triangular_expansion(algebra, lam, s, t, x)
                    where = dict(cell=str(lam), S=str(s), T=str(t), i=contents.labels[i])
                    if exp.diagonal != contents.content(t, i):
                        rep.fail(axiom="diagonal", expected=format_scalar(contents.content(t, i)),
                                 found=format_scalar(exp.diagonal), **where)
                    for name, (cell_leq, tab_leq) in datum.orders.items():
                        for _, s2, v in exp.lower_terms:
                            if s2 != s or v == t or not tab_leq(v, t):
                                violations[name].append(dict(axiom="lower-term", V=str(v), **where))
                        for mu, _, _ in exp.below_cell_part:
                            if mu == lam or not cell_leq(mu, lam):
                                violations[name].append(dict(axiom="stray-cell", mu=str(mu), **where))
    rep.details["orientation_confirmed"] = sorted(n for n, v in violations.items() if not v)
    rep.details["orientation"] = datum.orientation
    for witness in violations[datum.orientation]:
        rep.fail(**witness)
    return rep


def verify_separation(contents: ContentTable, datum: CellDatum) -> tuple[bool, tuple | None]:
    """
    Every comparable pair ``S < T`` in the union of the ``M(lam)`` is told
    apart by some content.  Returns the first offending pair otherwise.
    """
    tabs = datum.all_tableaux()
    for s in tabs:
        for t in tabs:
            if s != t and datum.leq(s, t) and contents[s] == contents[t]:
                return False, (s, t)
    return True, None
