"""
Builders for concrete cellular algebras with Jucys-Murphy elements.

Every builder returns an :class:`Instance`: the algebra table, its generators,
the Jucys-Murphy elements and their content table.

Permutations of ``{0, ..., n-1}`` are image tuples acting on the right, so
the product ``x * y`` means "first x, then y": ``(x*y)[i] == y[x[i]]``.
Tableaux are acted on by replacing every entry ``i`` by its image.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import permutations

from .cellular_core import AlgebraTable, CellDatum, ContentTable, Element, verify_jm_axioms
from .combinatorics import (
    content_sequence_ak,
    content_sequence_group,
    dominance_leq,
    dominates,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_standard_tableaux,
    row_stabilizer,
    tableau_order_leq,
)
from .exact_field import format_scalar, scalar

__all__ = [
    "Instance",
    "AKParams",
    "InvalidParameters",
    "compose",
    "inverse_perm",
    "length",
    "group_table",
    "hecke_table",
    "build_group_algebra",
    "build_hecke_typeA",
    "build_ak_seminormal",
    "build_counterexample_pair",
    "comparable_counterexample_datum",
    "separation_polynomial_nonzero",
    "validate_params",
    "find_valid_params",
]


class InvalidParameters(ValueError):
    pass


@dataclass
class Instance:
    family: str
    algebra: AlgebraTable
    generators: list
    L: list
    contents: ContentTable
    params: dict = field(default_factory=dict)


def compose(x: tuple, y: tuple) -> tuple:
    return tuple(y[i] for i in x)


def inverse_perm(w: tuple) -> tuple:
    out = [0] * len(w)
    for i, j in enumerate(w):
        out[j] = i
    return tuple(out)


def length(w: tuple) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def simple_transposition(n: int, k: int) -> tuple:
    """The transposition swapping k and k+1 (1-based)."""
    w = list(range(n))
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def transposition(n: int, a: int, b: int) -> tuple:
    w = list(range(n))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def _perms(n):
    perms = sorted(permutations(range(n)))
    return perms, {w: i for i, w in enumerate(perms)}


def group_table(n: int) -> tuple[list, dict]:
    perms, index = _perms(n)
    table = {
        (i, j): {index[compose(x, y)]: Fraction(1)}
        for i, x in enumerate(perms)
        for j, y in enumerate(perms)
    }
    return perms, table


def _hecke_left(s: tuple, vec: dict, perms, index, q) -> dict:
    """``T_s * vec`` for a simple transposition s."""
    out = {}
    for i, x in vec.items():
        w = perms[i]
        sw = index[compose(s, w)]
        if length(perms[sw]) > length(w):
            out[sw] = out.get(sw, 0) + x
        else:
            out[sw] = out.get(sw, 0) + q * x
            out[i] = out.get(i, 0) + (q - 1) * x
    return {k: x for k, x in out.items() if x != 0}


def hecke_table(n: int, q) -> tuple[list, dict]:
    """
    Structure constants of the type A Hecke algebra in the basis ``T_w``,
    built row by row: ``T_u T_w = T_s (T_{su} T_w)`` for a left descent s of u.
    """
    q = scalar(q)
    perms, index = _perms(n)
    gens = [simple_transposition(n, k) for k in range(1, n)]
    lengths = [length(w) for w in perms]
    rows = {index[tuple(range(n))]: {j: {j: Fraction(1)} for j in range(len(perms))}}
    for u in sorted(range(len(perms)), key=lambda i: (lengths[i], i)):
        if u in rows:
            continue
        for s in gens:
            shorter = index[compose(s, perms[u])]
            if lengths[shorter] < lengths[u]:
                break
        rows[u] = {j: _hecke_left(s, v, perms, index, q) for j, v in rows[shorter].items()}
    table = {(i, j): v for i, row in rows.items() for j, v in row.items() if v}
    return perms, table


def _partition_orders():
    return {
        "dominance": (dominance_leq, tableau_order_leq),
        "reverse": (dominates, lambda s, t: tableau_order_leq(t, s)),
    }


def _murphy_basis(algebra: AlgebraTable, perms, index, cells, tableaux) -> list:
    """
    ``m_{ST} = d(S)^* x_lam d(T)`` with ``x_lam`` the row-stabilizer sum and
    ``d(T)`` the permutation carrying the row-reading tableau to ``T``.
    """
    one_word = lambda w: algebra.basis_element(index[w])
    out = []
    for lam in cells:
        x = algebra.element({index[w]: 1 for w in row_stabilizer(lam)})
        d = {t: tuple(e - 1 for e in t.reading_word()) for t in tableaux[lam]}
        right = {t: x * one_word(d[t]) for t in tableaux[lam]}
        for s in tableaux[lam]:
            left = one_word(inverse_perm(d[s]))
            for t in tableaux[lam]:
                out.append((left * right[t]).c)
    return out


def _partition_datum(n: int, orientation: str = "dominance") -> CellDatum:
    cells = enumerate_partitions(n)
    tableaux = {lam: enumerate_standard_tableaux(lam) for lam in cells}
    return CellDatum(cells, tableaux, _partition_orders(), orientation)


def orient(inst: Instance) -> Instance:
    """
    Fix the orientation of the cell datum to the first one under which the
    Jucys-Murphy action is triangular.  Leaves it unchanged if none works,
    so that the verifier reports the failure.
    """
    rep = verify_jm_axioms(inst.algebra, inst.L, inst.contents)
    confirmed = rep.details["orientation_confirmed"]
    datum = inst.algebra.datum
    if confirmed and datum.orientation not in confirmed:
        inst.algebra.datum = datum.with_orders(datum.orders, confirmed[0])
    inst.params["orientation_confirmed"] = confirmed
    return inst


def _sn_algebra(n, perms, table, name, cellular_from):
    index = {w: i for i, w in enumerate(perms)}
    datum = _partition_datum(n)
    involution = [{index[inverse_perm(w)]: Fraction(1)} for w in perms]
    one = {index[tuple(range(n))]: 1}
    # placeholder cellular basis so the table can multiply while the real one is built
    algebra = AlgebraTable(len(perms), table, involution, [{i: 1} for i in range(len(perms))],
                           datum, one, labels=[_perm_label(w) for w in perms], name=name)
    cellular = cellular_from(algebra, perms, index, datum.cells, datum.tableaux)
    algebra = AlgebraTable(len(perms), table, involution, cellular, datum, one,
                           labels=algebra.labels, name=name)
    return algebra, index


def _perm_label(w: tuple) -> str:
    return "[" + "".join(str(i + 1) for i in w) + "]"


def build_group_algebra(n: int) -> Instance:
    """Group algebra of S_n with the Murphy basis and ``L_i = sum_{j<i} (j,i)``."""
    if not 2 <= n <= 6:
        raise ValueError("n must lie in 2..6")
    perms, table = group_table(n)
    algebra, index = _sn_algebra(n, perms, table, "symmetric-group n=%d" % n, _murphy_basis)
    gens = [algebra.basis_element(index[simple_transposition(n, k)]) for k in range(1, n)]
    L = [
        algebra.element({index[transposition(n, j, i)]: 1 for j in range(1, i)})
        for i in range(2, n + 1)
    ]
    contents = ContentTable(
        {t: content_sequence_group(t)[1:] for t in algebra.datum.all_tableaux()},
        list(range(2, n + 1)),
    )
    return orient(Instance("symmetric-group", algebra, gens, L, contents, {"n": n}))


def q_integer(k: int, q) -> Fraction:
    """``[k]_q = 1 + q + ... + q^(k-1)``."""
    q = scalar(q)
    return sum((q ** i for i in range(k)), Fraction(0))


def build_hecke_typeA(n: int, q) -> Instance:
    """
    Hecke algebra of type A at a rational q, Murphy basis, and
    ``L_i = q^(1-i) T_{i-1} ... T_1 T_1 ... T_{i-1}`` (``L_1 = 1``).
    """
    if not 2 <= n <= 5:
        raise ValueError("n must lie in 2..5")
    q = scalar(q)
    if q == 0 or q == 1:
        raise InvalidParameters("q must be invertible and different from 1")
    zero = [k for k in range(1, n + 1) if q_integer(k, q) == 0]
    if zero:
        raise InvalidParameters("[%d]_q vanishes at q=%s" % (zero[0], format_scalar(q)))
    perms, table = hecke_table(n, q)
    algebra, index = _sn_algebra(n, perms, table, "hecke-a n=%d q=%s" % (n, format_scalar(q)),
                                 _murphy_basis)
    T = [None] + [algebra.basis_element(index[simple_transposition(n, k)]) for k in range(1, n)]
    L = [algebra.one]
    for i in range(2, n + 1):
        L.append(T[i - 1] * L[-1] * T[i - 1] / q)
    contents = ContentTable(
        {t: content_sequence_ak(t, q, [1]) for t in algebra.datum.all_tableaux()},
        list(range(1, n + 1)),
    )
    return orient(Instance("hecke-a", algebra, T[1:], L, contents, {"n": n, "q": q}))


@dataclass(frozen=True)
class AKParams:
    n: int
    m: int
    q: Fraction
    u: tuple
    validated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "q", scalar(self.q))
        object.__setattr__(self, "u", tuple(scalar(x) for x in self.u))
        if len(self.u) != self.m:
            raise InvalidParameters("need exactly m=%d parameters u" % self.m)
        if self.q == 0:
            raise InvalidParameters("q must be invertible")

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "q": format_scalar(self.q),
                "u": [format_scalar(x) for x in self.u]}


def separation_polynomial_nonzero(params: AKParams) -> tuple[bool, list]:
    """
    Evaluate every factor ``[k]_q`` (k = 1..n) and ``q^d u_i - u_j``
    (i < j, |d| < n).  Returns whether all are nonzero, and the factor list
    as ``(label, value)`` pairs.
    """
    q, u, n = params.q, params.u, params.n
    factors = [("[%d]_q" % k, q_integer(k, q)) for k in range(1, n + 1)]
    for i in range(params.m):
        for j in range(i + 1, params.m):
            for d in range(-(n - 1), n):
                factors.append(("q^%d*u_%d-u_%d" % (d, i + 1, j + 1), q ** d * u[i] - u[j]))
    return all(v != 0 for _, v in factors), factors


def validate_params(params: AKParams) -> AKParams:
    if params.q == 1:
        raise InvalidParameters("q = 1 is excluded")
    ok, factors = separation_polynomial_nonzero(params)
    if not ok:
        zero = [label for label, v in factors if v == 0]
        raise InvalidParameters("separation polynomial vanishes: %s" % ", ".join(zero))
    return replace(params, validated=True)


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def _u_candidates():
    """1, then the largest prime below each power of ten: 7, 97, 997, ..."""
    yield 1
    p = 10
    while True:
        k = p - 1
        while not _is_prime(k):
            k -= 1
        yield k
        p *= 10


def find_valid_params(n: int, m: int) -> AKParams:
    """q = 2 and ``u`` a window of the candidate sequence, shifted until valid."""
    cands = []
    gen = _u_candidates()
    offset = 0
    while True:
        while len(cands) < offset + m:
            cands.append(next(gen))
        try:
            return validate_params(AKParams(n, m, Fraction(2), tuple(cands[offset:offset + m])))
        except InvalidParameters:
            offset += 1


def build_ak_seminormal(params: AKParams) -> Instance:
    """
    Semisimple model with the Ariki-Koike contents: matrix units
    ``e[lam,S,T]`` with ``e[S,T] e[T,V] = e[S,V]`` and
    ``L_i = sum_T c_T(i) e[T,T]``.
    """
    if not params.validated:
        raise InvalidParameters("parameters have not been validated")
    if not (1 <= params.n <= 4 and 1 <= params.m <= 3):
        raise ValueError("need n <= 4 and m <= 3")
    n, m = params.n, params.m
    cells = enumerate_multipartitions(n, m)
    tableaux = {lam: enumerate_standard_tableaux(lam) for lam in cells}
    datum = CellDatum(cells, tableaux, _partition_orders(), "dominance")
    index = datum.index
    table = {}
    for lam in cells:
        tabs = tableaux[lam]
        for s in tabs:
            for t in tabs:
                for v in tabs:
                    table[(index[(lam, s, t)], index[(lam, t, v)])] = {index[(lam, s, v)]: Fraction(1)}
    involution = [{index[(lam, t, s)]: Fraction(1)} for lam, s, t in datum.basis]
    dim = len(datum.basis)
    one = {index[(lam, t, t)]: 1 for lam in cells for t in tableaux[lam]}
    labels = ["e%s:%s,%s" % (_mp_label(lam), s, t) for lam, s, t in datum.basis]
    algebra = AlgebraTable(dim, table, involution, [{i: 1} for i in range(dim)], datum, one,
                           labels=labels, name="ariki-koike-model n=%d m=%d" % (n, m))
    cts = {t: content_sequence_ak(t, params.q, params.u) for t in datum.all_tableaux()}
    L = [
        algebra.element({index[(datum.cell_of[t], t, t)]: cts[t][i] for t in cts})
        for i in range(n)
    ]
    gens = algebra.basis()
    contents = ContentTable(cts, list(range(1, n + 1)))
    return orient(Instance("ariki-koike-model", algebra, gens, L, contents, {"params": params}))


def _mp_label(lam) -> str:
    return "(" + ",".join("(" + ",".join(map(str, c)) + ")" for c in lam) + ")"


def _antichain(a, b):
    return a == b


def build_counterexample_pair() -> Instance:
    """
    ``K x K`` with two incomparable one-dimensional cells and the single
    Jucys-Murphy element ``L_1 = 0``: both cells have content multiset {0}.
    """
    cells = ["lambda", "mu"]
    tableaux = {"lambda": ["T_lambda"], "mu": ["T_mu"]}
    datum = CellDatum(cells, tableaux, {"antichain": (_antichain, _antichain)}, "antichain")
    table = {(0, 0): {0: Fraction(1)}, (1, 1): {1: Fraction(1)}}
    involution = [{0: Fraction(1)}, {1: Fraction(1)}]
    algebra = AlgebraTable(2, table, involution, [{0: 1}, {1: 1}], datum, {0: 1, 1: 1},
                           labels=["e_lambda", "e_mu"], name="counterexample")
    L = [algebra.zero()]
    contents = ContentTable({"T_lambda": [0], "T_mu": [0]}, [1])
    inst = Instance("counterexample", algebra, algebra.basis(), L, contents)
    inst.params["orientation_confirmed"] = ["antichain"]
    return inst


def comparable_counterexample_datum(datum: CellDatum) -> CellDatum:
    """The counterexample's datum with ``lambda < mu`` imposed."""
    def chain(a, b):
        return a == b or (a, b) == ("lambda", "mu")
    return datum.with_orders({"chain": (chain, _antichain)}, "chain")


def class_sums(inst: Instance) -> list[Element]:
    """Conjugacy class sums of a symmetric group algebra, by cycle type."""
    algebra = inst.algebra
    n = inst.params["n"]
    perms = sorted(permutations(range(n)))
    classes = {}
    for i, w in enumerate(perms):
        classes.setdefault(_cycle_type(w), {})[i] = 1
    return [algebra.element(c) for _, c in sorted(classes.items())]


def _cycle_type(w: tuple) -> tuple:
    seen, out = set(), []
    for i in range(len(w)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = w[j]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))
