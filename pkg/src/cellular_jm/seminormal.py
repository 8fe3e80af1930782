"""
Seminormal idempotents built from separating Jucys-Murphy elements.

``F_T`` is the interpolation idempotent

    F_T = prod_i prod_{c in C(i), c != c_T(i)} (L_i - c) / (c_T(i) - c)

where ``C(i)`` is the set of contents at position i.  From it come the
seminormal basis ``f[lam,S,T] = F_S C[lam,S,T] F_T``, the scalars
``gamma_T`` with ``f[S,T] f[T,V] = gamma_T f[S,V]``, and the central
idempotents ``F_lam = sum_{T in M(lam)} F_T``.  Nothing here is assumed:
:func:`verify_seminormal_theorems` checks every identity exactly.
"""

import random
from dataclasses import dataclass, field

from .cellular_core import AlgebraTable, CheckReport, ContentTable, Element
from .exact_field import EchelonBasis, format_scalar

__all__ = [
    "SeminormalError",
    "SeminormalSystem",
    "compute_FT",
    "compute_f_basis",
    "compute_gamma",
    "build_seminormal_system",
    "verify_seminormal_theorems",
]


class SeminormalError(ArithmeticError):
    pass


@dataclass
class SeminormalSystem:
    FT: dict
    f: dict = field(default_factory=dict)
    gamma: dict = field(default_factory=dict)
    Flambda: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    def gamma_json(self) -> dict:
        return {str(t): format_scalar(g) for t, g in self.gamma.items()}


def compute_FT(algebra: AlgebraTable, L: list, contents: ContentTable, t) -> Element:
    """Product of the degree-one factors, ascending in position and then in content."""
    F = algebra.one
    sets = contents.sets
    for i, x in enumerate(L):
        ct = contents.content(t, i)
        for c in sets[i]:
            if c == ct:
                continue
            denom = ct - c
            if denom == 0:
                raise SeminormalError("zero denominator at position %d" % i)
            F = F * (x - c * algebra.one) / denom
    return F


def compute_f_basis(algebra: AlgebraTable, system: SeminormalSystem, strict: bool = True) -> dict:
    """
    ``f[lam,S,T] = F_S C[lam,S,T] F_T``; each must have coefficient exactly 1
    at ``C[lam,S,T]`` in its cellular expansion.
    """
    out = {}
    for key in algebra.datum.basis:
        lam, s, t = key
        f = system.FT[s] * algebra.C(lam, s, t) * system.FT[t]
        coeff = algebra.expand_in_cellular(f).get(key, 0)
        if coeff != 1:
            msg = "coefficient of C%s in f is %s" % (_key_str(key), format_scalar(coeff))
            if strict:
                raise SeminormalError(msg)
            system.problems.append(msg)
        out[key] = f
    return out


def _key_str(key) -> str:
    return "[%s,%s,%s]" % tuple(str(k) for k in key)


def _ratio(a: Element, b: Element):
    """The scalar g with a == g*b, or None."""
    if b.is_zero():
        return None
    k = min(b.c)
    g = a.c.get(k, 0) / b.c[k]
    return g if a == b * g else None


def compute_gamma(algebra: AlgebraTable, system: SeminormalSystem, strict: bool = True) -> dict:
    """
    ``gamma_T`` from ``f[S,T] f[T,S] = gamma_T f[S,S]``, checked for every S
    in the cell of T.
    """
    datum = algebra.datum
    f = system.f
    out = {}
    for lam in datum.cells:
        tabs = datum.tableaux[lam]
        for t in tabs:
            values = set()
            for s in tabs:
                g = _ratio(f[(lam, s, t)] * f[(lam, t, s)], f[(lam, s, s)])
                values.add(g)
            msg = None
            if None in values:
                msg = "f[S,T] f[T,S] is not a multiple of f[S,S] for T=%s" % (t,)
            elif len(values) > 1:
                msg = "gamma of %s depends on S: %s" % (t, sorted(values))
            elif 0 in values:
                msg = "gamma of %s vanishes" % (t,)
            if msg:
                if strict:
                    raise SeminormalError(msg)
                system.problems.append(msg)
                continue
            out[t] = values.pop()
    return out


def build_seminormal_system(algebra: AlgebraTable, L: list, contents: ContentTable,
                            strict: bool = True) -> SeminormalSystem:
    datum = algebra.datum
    FT = {t: compute_FT(algebra, L, contents, t) for t in datum.all_tableaux()}
    system = SeminormalSystem(FT)
    zero = algebra.zero()
    for lam in datum.cells:
        total = zero
        for t in datum.tableaux[lam]:
            total = total + FT[t]
        system.Flambda[lam] = total
    system.f = compute_f_basis(algebra, system, strict)
    system.gamma = compute_gamma(algebra, system, strict)
    return system


def verify_seminormal_theorems(algebra: AlgebraTable, L: list, contents: ContentTable,
                               system: SeminormalSystem, exhaustive_limit: int = 36,
                               samples: int = 500, seed: int = 0) -> CheckReport:
    """
    Idempotency and orthogonality of the F_T, completeness, spectral
    decomposition of every L_i, primitivity (``dim F_T A F_T == 1``),
    centrality of the F_lam, the seminormal basis being a basis, and the
    multiplication rule of the seminormal basis.
    """
    datum = algebra.datum
    rep = CheckReport("seminormal")
    tabs = datum.all_tableaux()
    FT = system.FT
    one, zero = algebra.one, algebra.zero()
    basis = algebra.basis()

    for msg in system.problems:
        rep.fail(axiom="construction", message=msg)

    for t in tabs:
        for u in tabs:
            p = FT[t] * FT[u]
            if t == u and p != FT[t]:
                rep.fail(axiom="idempotent", T=str(t))
            if t != u and not p.is_zero():
                rep.fail(axiom="orthogonal", T=str(t), U=str(u))

    total = zero
    for t in tabs:
        total = total + FT[t]
    if total != one:
        rep.fail(axiom="sum-to-one")

    for i, x in enumerate(L):
        spectral = zero
        for t in tabs:
            spectral = spectral + FT[t] * contents.content(t, i)
        if spectral != x:
            rep.fail(axiom="spectral", i=contents.labels[i])

    corner_dims = {}
    for t in tabs:
        eb = EchelonBasis(algebra.dim)
        for b in basis:
            eb.add(dict((FT[t] * b * FT[t]).c))
        corner_dims[str(t)] = eb.rank
        if eb.rank != 1:
            rep.fail(axiom="primitive", T=str(t), corner_dim=eb.rank)
    rep.details["corner_dims"] = corner_dims

    eb = EchelonBasis(algebra.dim)
    for lam in datum.cells:
        F = system.Flambda[lam]
        eb.add(dict(F.c))
        for i, b in enumerate(basis):
            if F * b != b * F:
                rep.fail(axiom="central", cell=str(lam), index=i)
                break
    rep.details["Flambda_span"] = eb.rank
    if eb.rank != len(datum.cells):
        rep.fail(axiom="Flambda-independent", rank=eb.rank)

    f = system.f
    if f:
        eb = EchelonBasis(algebra.dim)
        for key in datum.basis:
            eb.add(dict(f[key].c))
        rep.details["f_rank"] = eb.rank
        if eb.rank != algebra.dim:
            rep.fail(axiom="f-basis", rank=eb.rank)

        for key in datum.basis:
            for mu in datum.cells:
                p = system.Flambda[mu] * f[key]
                expected = f[key] if mu == key[0] else zero
                if p != expected:
                    rep.fail(axiom="Flambda-action", cell=str(mu), f=_key_str(key))

    if f and len(system.gamma) == len(tabs):
        keys = datum.basis
        if len(keys) <= exhaustive_limit:
            pairs = [(a, b) for a in keys for b in keys]
        else:
            rng = random.Random(seed)
            same_cell = [(a, b) for a in keys for b in keys if a[0] == b[0] and a[2] == b[1]]
            pairs = same_cell + [(rng.choice(keys), rng.choice(keys)) for _ in range(samples)]
        rep.details["product_rule_pairs"] = len(pairs)
        for a, b in pairs:
            lam, s, t = a
            mu, u, v = b
            if lam == mu and t == u:
                expected = f[(lam, s, v)] * system.gamma[t]
            else:
                expected = zero
            if f[a] * f[b] != expected:
                rep.fail(axiom="product-rule", left=_key_str(a), right=_key_str(b))
    elif f:
        rep.fail(axiom="gamma", message="gamma undefined for some tableaux")
    return rep
