"""
Partitions, multipartitions and standard tableaux.

Partitions are plain tuples of positive integers in non-increasing order.
Multipartitions are :class:`Multipartition` tuples of partitions.  A
:class:`Tableau` stores its shape together with the filled rows of every
component; a tableau of partition shape has exactly one component.

Nodes are 1-indexed: ``Node(row, col, component)``.  The residue of a node is
``col - row``.

>>> enumerate_partitions(3)
[(3,), (2, 1), (1, 1, 1)]
>>> [t.rows for t in enumerate_standard_tableaux((2, 1))]
[((1, 2), (3,)), ((1, 3), (2,))]
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import NamedTuple

Partition = tuple

__all__ = [
    "Partition",
    "Multipartition",
    "Node",
    "Tableau",
    "enumerate_partitions",
    "enumerate_multipartitions",
    "enumerate_standard_tableaux",
    "initial_tableau",
    "residue",
    "residues",
    "dominates",
    "dominance_leq",
    "tableau_order_leq",
    "content_sequence_group",
    "content_sequence_ak",
    "content_multisets_distinct",
    "lemma_lmp_check",
    "ak_distinctness_case_analysis",
    "row_stabilizer_generators",
    "row_stabilizer",
]


class Multipartition(tuple):
    """An m-tuple of partitions; ``sizes`` holds the component sizes."""

    def __new__(cls, components):
        comps = tuple(tuple(int(x) for x in c) for c in components)
        for c in comps:
            _check_partition(c)
        return super().__new__(cls, comps)

    @property
    def sizes(self) -> tuple:
        return tuple(sum(c) for c in self)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def m(self) -> int:
        return len(self)

    def __repr__(self):
        return "Multipartition(%s)" % (tuple.__repr__(self),)


def _check_partition(parts):
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError("partition %r is not non-increasing" % (parts,))
    if any(x <= 0 for x in parts):
        raise ValueError("partition %r has non-positive parts" % (parts,))


def _components(shape) -> tuple:
    if isinstance(shape, Multipartition):
        return tuple(shape)
    return (tuple(shape),)


class Node(NamedTuple):
    row: int
    col: int
    component: int = 1


def residue(node) -> int:
    """Residue ``col - row`` of a node."""
    return node[1] - node[0]


def residues(shape) -> list[int]:
    """Residues of all nodes of a partition, in row-reading order."""
    return [c - r for r, length in enumerate(shape, 1) for c in range(1, length + 1)]


def enumerate_partitions(n: int, largest: int | None = None) -> list[tuple]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [()]
    if largest is None:
        largest = n
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _compositions(n: int, m: int):
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, m - 1):
            yield (first,) + rest


def enumerate_multipartitions(n: int, m: int) -> list[Multipartition]:
    """All m-multipartitions of n; component sizes in reverse-lexicographic order first."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    out = []
    for sizes in _compositions(n, m):
        for comps in product(*(enumerate_partitions(k) for k in sizes)):
            out.append(Multipartition(comps))
    return out


@dataclass(frozen=True)
class Tableau:
    """
    A standard tableau.  ``components`` is a tuple (one entry per component)
    of tuples of rows; ``rows`` is a shortcut for single-component tableaux.
    """

    shape: tuple
    components: tuple

    @property
    def multi(self) -> bool:
        return isinstance(self.shape, Multipartition)

    @property
    def rows(self) -> tuple:
        if self.multi:
            raise AttributeError("multipartition tableaux have no single row list")
        return self.components[0]

    @property
    def n(self) -> int:
        return sum(len(r) for comp in self.components for r in comp)

    def reading_word(self) -> tuple:
        return tuple(x for comp in self.components for row in comp for x in row)

    def node_of(self) -> dict:
        """Map entry -> Node."""
        out = {}
        for k, comp in enumerate(self.components, 1):
            for r, row in enumerate(comp, 1):
                for c, x in enumerate(row, 1):
                    out[x] = Node(r, c, k)
        return out

    def restrict_shape(self, k: int):
        """Shape occupied by the entries 1..k."""
        comps = []
        for comp in self.components:
            parts = tuple(sum(1 for x in row if x <= k) for row in comp)
            comps.append(tuple(p for p in parts if p))
        if self.multi:
            return Multipartition(comps)
        return comps[0]

    def label(self) -> str:
        def one(comp):
            return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in comp) + "]"
        if self.multi:
            return "(" + ",".join(one(c) for c in self.components) + ")"
        return one(self.components[0])

    def __str__(self):
        return self.label()


def initial_tableau(shape) -> Tableau:
    """The tableau with 1..n filled in along successive rows."""
    comps = []
    k = 1
    for comp in _components(shape):
        rows = []
        for length in comp:
            rows.append(tuple(range(k, k + length)))
            k += length
        comps.append(tuple(rows))
    return Tableau(shape, tuple(comps))


def enumerate_standard_tableaux(shape) -> list[Tableau]:
    """
    All standard tableaux of ``shape``: the row-reading tableau first, the
    rest in lexicographic order of their reading words.
    """
    comps = _components(shape)
    n = sum(sum(c) for c in comps)
    found = []

    def grow(filled, k):
        # filled[j][r] holds the entries placed so far in row r of component j
        if k > n:
            found.append([list(map(list, f)) for f in filled])
            return
        for j, comp in enumerate(comps):
            for r, length in enumerate(comp):
                row = filled[j][r]
                if len(row) < length and (r == 0 or len(filled[j][r - 1]) > len(row)):
                    row.append(k)
                    grow(filled, k + 1)
                    row.pop()

    grow([[[] for _ in comp] for comp in comps], 1)
    tabs = [
        Tableau(shape, tuple(tuple(tuple(row) for row in f) for f in filling))
        for filling in found
    ]
    tabs.sort(key=Tableau.reading_word)
    first = initial_tableau(shape)
    tabs.remove(first)
    return [first] + tabs


def dominates(lam, mu) -> bool:
    """
    ``lam`` dominates ``mu``.  For multipartitions the partial sums run over
    the components in order, each earlier component counted in full.
    """
    if isinstance(lam, Multipartition) != isinstance(mu, Multipartition):
        raise TypeError("cannot compare a partition with a multipartition")
    a, b = _components(lam), _components(mu)
    if len(a) != len(b):
        raise ValueError("different number of components")
    if sum(map(sum, a)) != sum(map(sum, b)):
        raise ValueError("shapes have different sizes")
    sa = sb = 0
    for ca, cb in zip(a, b):
        for j in range(max(len(ca), len(cb))):
            sa += ca[j] if j < len(ca) else 0
            sb += cb[j] if j < len(cb) else 0
            if sa < sb:
                return False
    return True


def dominance_leq(lam, mu) -> bool:
    """``lam`` is dominated by (or equal to) ``mu``."""
    return dominates(mu, lam)


def tableau_order_leq(s: Tableau, t: Tableau) -> bool:
    """
    ``s <= t`` iff for every k the shape holding 1..k in ``s`` is dominated by
    the corresponding shape of ``t``.
    """
    if s.shape != t.shape:
        raise ValueError("tableaux have different shapes")
    return all(
        dominance_leq(s.restrict_shape(k), t.restrict_shape(k)) for k in range(1, s.n + 1)
    )


def content_sequence_group(t: Tableau) -> list[Fraction]:
    """Residue of the node holding i, for i = 1..n."""
    nodes = t.node_of()
    return [Fraction(residue(nodes[i])) for i in range(1, t.n + 1)]


def content_sequence_ak(t: Tableau, q, u) -> list[Fraction]:
    """``u_j * q**(c - r)`` where i sits in row r, column c of component j."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be invertible")
    u = [Fraction(x) for x in u]
    if len(u) != len(t.components):
        raise ValueError("need one parameter u_j per component")
    nodes = t.node_of()
    return [u[nodes[i].component - 1] * q ** residue(nodes[i]) for i in range(1, t.n + 1)]


def content_multisets_distinct(contents_by_cell: dict) -> tuple[bool, tuple | None]:
    """
    True when the content multisets of the cells are pairwise distinct.
    Otherwise returns ``(False, (lam, mu))`` for the first colliding pair.
    """
    seen = {}
    for lam, contents in contents_by_cell.items():
        key = tuple(sorted(Fraction(c) for c in contents))
        if key in seen:
            return False, (seen[key], lam)
        seen[key] = lam
    return True, None


def lemma_lmp_check(lam, mu) -> bool:
    """Whether ``lam`` and ``mu`` have the same multiset of residues."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    return sorted(residues(lam)) == sorted(residues(mu))


def _component_exponent(c: Fraction, u: Fraction, q: Fraction, n: int):
    for x in range(-(n - 1), n):
        if u * q ** x == c:
            return x
    return None


def ak_distinctness_case_analysis(lam: Multipartition, mu: Multipartition, q, u):
    """
    Show that the content multisets of ``lam`` and ``mu`` differ by sorting
    the contents of the row-reading tableaux into classes ``u_j q^x``.

    Returns ``(distinct, case, j)``: ``case`` is ``"case1"`` when the class
    sizes differ at component ``j`` (1-based) and ``"case2"`` when all sizes
    agree but the exponents of class ``j`` differ.
    """
    if lam == mu:
        raise ValueError("need two different multipartitions")
    lam, mu = Multipartition(lam), Multipartition(mu)
    q = Fraction(q)
    u = [Fraction(x) for x in u]
    n = lam.n

    def classes(shape):
        cls = [[] for _ in u]
        for c in content_sequence_ak(initial_tableau(shape), q, u):
            hits = []
            for j, uj in enumerate(u):
                x = _component_exponent(c, uj, q, n)
                if x is not None:
                    hits.append((j, x))
            if len(hits) != 1:
                raise ValueError("content %s does not determine its component" % c)
            j, x = hits[0]
            cls[j].append(x)
        return cls

    a, b = classes(lam), classes(mu)
    for j, (xa, xb) in enumerate(zip(a, b), 1):
        if len(xa) != len(xb):
            return True, "case1", j
    for j, (xa, xb) in enumerate(zip(a, b), 1):
        if sorted(xa) != sorted(xb):
            return True, "case2", j
    return False, None, None


def row_stabilizer_generators(shape) -> list[int]:
    """
    Simple transpositions ``(i, i+1)`` (given by i, 1-based) generating the
    row stabilizer of the row-reading tableau.
    """
    t = initial_tableau(shape)
    return [x for comp in t.components for row in comp for x in row[:-1]]


def row_stabilizer(shape) -> list[tuple]:
    """
    All elements of the row stabilizer, as 0-based image tuples, in
    lexicographic order.
    """
    t = initial_tableau(shape)
    blocks = [[x - 1 for x in row] for comp in t.components for row in comp]
    n = t.n
    out = []
    for choice in product(*(permutations(b) for b in blocks)):
        w = list(range(n))
        for block, image in zip(blocks, choice):
            for i, j in zip(block, image):
                w[i] = j
        out.append(tuple(w))
    out.sort()
    return out
