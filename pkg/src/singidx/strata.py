"""Moebius calculus on the poset of strata of a Whitney stratification.

Stratum data (normal-slice indices n_ij, Euler obstructions, radial indices,
Milnor-fibre Euler characteristics) are inputs; no stratification is
computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import MissingDataError, PosetError


@dataclass(frozen=True)
class StrataPoset:
    """Strata with a strict partial order and integers n_ij for i <= j.

    ``relation`` holds the strict pairs (i, j) meaning V_i lies in the closure
    of V_j.  It must already be transitive; missing n_ij for related pairs
    default to 0 and n_ii is always 1.
    """

    elements: tuple[Hashable, ...]
    relation: frozenset[tuple[Hashable, Hashable]]
    n: Mapping[tuple[Hashable, Hashable], int] = field(compare=False)

    def __init__(self, elements: Sequence[Hashable], relation: Iterable[tuple[Hashable, Hashable]], n: Mapping | None = None):
        elems = tuple(elements)
        if len(set(elems)) != len(elems):
            raise PosetError("duplicate stratum identifiers")
        rel = frozenset(tuple(p) for p in relation)
        known = set(elems)
        for a, b in rel:
            if a not in known or b not in known:
                raise PosetError(f"relation {a} < {b} mentions an unknown stratum")
            if a == b:
                raise PosetError(f"strict relation contains {a} < {a}")
            if (b, a) in rel:
                raise PosetError(f"relation is not antisymmetric: {a} < {b} and {b} < {a}")
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    raise PosetError(f"relation is not transitive: {a} < {b} < {d} but not {a} < {d}")
        values = {}
        for (a, b), v in (n or {}).items():
            if a == b:
                if v != 1:
                    raise PosetError(f"n_ii must be 1, got n[{a},{a}] = {v}")
                continue
            if (a, b) not in rel:
                raise PosetError(f"n[{a},{b}] given but {a} is not below {b}")
            values[(a, b)] = int(v)
        for a in elems:
            values[(a, a)] = 1
        for p in rel:
            values.setdefault(p, 0)
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "relation", rel)
        object.__setattr__(self, "n", values)

    def leq(self, a, b) -> bool:
        return a == b or (a, b) in self.relation

    def interval(self, a, b) -> list:
        """Elements c with a <= c <= b, in declaration order."""
        return [c for c in self.elements if self.leq(a, c) and self.leq(c, b)]

    def maximal(self) -> list:
        return [a for a in self.elements if not any((a, b) in self.relation for b in self.elements)]

    def top(self):
        tops = self.maximal()
        if len(tops) != 1:
            raise MissingDataError(f"no unique maximal stratum (maximal: {tops})")
        return tops[0]

    def linear_extension(self) -> list:
        """Elements sorted so that a < b implies a comes first."""
        below = {a: sum(1 for b in self.elements if (b, a) in self.relation) for a in self.elements}
        return sorted(self.elements, key=lambda a: (below[a], self.elements.index(a)))


def mobius_inverse(P: StrataPoset) -> dict[tuple, int]:
    """The function m on the order relation with sum_{i<=j<=k} n_ij m_jk = delta_ik."""
    m: dict[tuple, int] = {}
    order = P.linear_extension()
    for k in order:
        m[(k, k)] = 1
        # m_ik = -sum_{i < j <= k} n_ij m_jk, filled for i from the top down
        for i in reversed(order):
            if (i, k) not in P.relation:
                continue
            m[(i, k)] = -sum(P.n[(i, j)] * m[(j, k)] for j in P.interval(i, k) if j != i)
    return m


def as_poset(P: StrataPoset, values: Mapping[tuple, int]) -> StrataPoset:
    """Same order relation carrying different n_ij."""
    return StrataPoset(P.elements, P.relation, values)


def convolve(P: StrataPoset, a: Mapping[tuple, int], b: Mapping[tuple, int]) -> dict[tuple, int]:
    """(a * b)_ik = sum_{i<=j<=k} a_ij b_jk in the incidence algebra."""
    out = {}
    for i in P.elements:
        for k in P.elements:
            if P.leq(i, k):
                out[(i, k)] = sum(a.get((i, j), 0) * b.get((j, k), 0) for j in P.interval(i, k))
    return out


@dataclass
class StratumIndexData:
    """Per-stratum integers; each map may be omitted when an operation does not use it.

    ``n``: generic-form index on the normal slice; ``eu``: Eu_{closure(V_i),0} omega;
    ``rad``: radial index on the closure of V_i; ``chi``: chi(M_f & V_i);
    ``euv``: Eu_V(V_i).
    """

    n: dict = field(default_factory=dict)
    eu: dict = field(default_factory=dict)
    rad: dict = field(default_factory=dict)
    chi: dict = field(default_factory=dict)
    euv: dict = field(default_factory=dict)


def _require(values: Mapping, keys: Iterable, what: str) -> None:
    missing = [k for k in keys if k not in values]
    if missing:
        raise MissingDataError(f"missing {what} for strata {missing}")


def radial_from_obstructions(P: StrataPoset, D: StratumIndexData, top=None) -> int:
    """ind_rad(omega; V, 0) = sum_i n_i * Eu_{closure(V_i),0} omega.

    Without explicit ``D.n`` the normal-slice indices are n_{i,top}; strata
    not below ``top`` are then ignored.
    """
    if D.n:
        strata = list(P.elements)
        _require(D.n, strata, "n_i")
        weights = D.n
    else:
        top = P.top() if top is None else top
        strata = [i for i in P.elements if P.leq(i, top)]
        weights = {i: P.n[(i, top)] for i in strata}
    _require(D.eu, strata, "Euler obstructions")
    return sum(weights[i] * D.eu[i] for i in strata)


def obstruction_from_radial(P: StrataPoset, D: StratumIndexData, top=None) -> int:
    """Eu_{V,0} omega = sum_i m_{i,top} * ind_rad(omega; closure(V_i), 0)."""
    top = P.top() if top is None else top
    m = mobius_inverse(P)
    strata = [i for i in P.elements if P.leq(i, top)]
    _require(D.rad, strata, "radial indices")
    return sum(m[(i, top)] * D.rad[i] for i in strata)


def bmps_function_obstruction(P: StrataPoset, D: StratumIndexData, euv0: int) -> int:
    """Eu_{V,0} f = Eu_V(0) - sum_i chi(M_f & V_i) * Eu_V(V_i).

    Strata without a ``chi`` entry contribute nothing (the point stratum has
    empty Milnor fibre); every stratum with ``chi`` needs ``euv``.
    """
    strata = [i for i in P.elements if i in D.chi]
    if not strata:
        raise MissingDataError("no Milnor-fibre Euler characteristics supplied")
    _require(D.euv, strata, "Euler obstruction values Eu_V(V_i)")
    return euv0 - sum(D.chi[i] * D.euv[i] for i in strata)


def radial_indices_of_closures(P: StrataPoset, eu: Mapping) -> dict:
    """rad_j = sum_{i <= j} n_ij Eu_i for every stratum j."""
    _require(eu, P.elements, "Euler obstructions")
    return {j: sum(P.n[(i, j)] * eu[i] for i in P.elements if P.leq(i, j)) for j in P.elements}
