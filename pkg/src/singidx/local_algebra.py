"""Standard bases in the local ring O_{C^N,0} and quotient algebras.

Standard bases are computed with Mora's tangent cone algorithm: the weak
normal form picks, among the candidate reducers, one of minimal ecart and
keeps intermediate remainders as additional reducers.  The local ordering is
negdegrevlex (see :mod:`singidx.poly`).  Whenever some power m^D is known to
lie in the ideal, reductions drop all terms of degree >= D and no longer need
the intermediate remainders.  Ideals are first tried as m-primary, with a
Bezout bound on the colength deciding when to give up (see
:func:`_certified_basis`).

For m-primary ideals every monomial of degree ``> max staircase degree``
lies in the ideal, so full normal forms are computed on polynomials
truncated at that degree, which keeps all reductions finite.

:func:`colength_truncation_oracle` computes the same dimension by plain
linear algebra on truncated polynomial spaces and shares no code with the
standard basis path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import DimensionError, InfiniteColengthError
from .poly import (
    Exponent,
    Polynomial,
    RingContext,
    divides,
    exp_lcm,
    exp_sub,
    local_key,
)

DEFAULT_ORACLE_CAP = 32


@dataclass(frozen=True)
class IdealPresentation:
    ring: RingContext
    generators: tuple[Polynomial, ...]

    def __init__(self, ring: RingContext, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise DimensionError(f"generator {g} is not in ring ({ring})")
            if g:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, *gens: Polynomial) -> IdealPresentation:
        return cls(gens[0].ring, gens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class Colength:
    """Dimension of O/I; ``value is None`` means infinite."""

    value: int | None

    @property
    def finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "infinite" if self.value is None else str(self.value)

    @classmethod
    def infinite(cls) -> Colength:
        return cls(None)


@dataclass(frozen=True)
class Inconclusive:
    """The truncation oracle did not stabilize below its degree cap."""

    cap: int
    dimensions: tuple[int, ...]

    finite = False
    value = None

    def __str__(self) -> str:
        return f"inconclusive at cap {self.cap}"


# ---------- Mora normal form ----------


def _ecart(p: Polynomial) -> int:
    return p.degree() - sum(p.leading_exponent())


def _truncated_step(h: Polynomial, g: Polynomial, cutoff: int | None) -> Polynomial:
    """Cancel LT(h) by a multiple of g, dropping terms of degree >= cutoff."""
    eh = h.leading_exponent()
    eg = g.leading_exponent()
    c = h.terms[eh] / g.terms[eg]
    shift = exp_sub(eh, eg)
    terms = dict(h.terms)
    for e, v in g.terms.items():
        m = tuple(a + b for a, b in zip(e, shift))
        if cutoff is not None and sum(m) >= cutoff:
            continue
        x = terms.get(m, 0) - c * v
        if x:
            terms[m] = x
        else:
            terms.pop(m, None)
    return Polynomial._raw(h.ring, terms)


def weak_normal_form(p: Polynomial, reducers: Sequence[Polynomial], cutoff: int | None = None) -> Polynomial:
    """Mora's weak normal form: LM(result) is divisible by no LM(reducer).

    The result r satisfies ``u*p - r in I`` for some unit u.  When ``cutoff``
    is given the caller guarantees m^cutoff is contained in I, and terms of
    that degree or higher are discarded along the way.
    """
    h = p if cutoff is None else p.truncate(cutoff)
    T = [(g, g.leading_exponent(), _ecart(g)) for g in reducers if g]
    while h:
        lm = h.leading_exponent()
        best = None
        for g, eg, ec in T:
            if divides(eg, lm) and (best is None or ec < best[2]):
                best = (g, eg, ec)
        if best is None:
            return h
        # with a cutoff only finitely many monomials remain, so plain
        # reduction terminates and intermediate results need not be kept
        eh = _ecart(h)
        if cutoff is None and best[2] > eh:
            T.append((h, lm, eh))
        h = _truncated_step(h, best[0], cutoff)
    return h


def mora_divide(p: Polynomial, gens: Sequence[Polynomial]) -> tuple[Polynomial, list[Polynomial], Polynomial]:
    """Weak normal form with a division transcript.

    Returns ``(u, q, r)`` with ``u*p == sum(q[i]*gens[i]) + r``, ``u(0) == 1``
    and LM(r) divisible by no LM(gens[i]).
    """
    ring = p.ring
    s = len(gens)
    zero = ring.zero()
    # entries: (poly, lm, ecart, a, qs) with poly == a*p - sum(qs[i]*gens[i])
    T = []
    for i, g in enumerate(gens):
        if g:
            qs = [zero] * s
            qs[i] = ring.constant(-1)
            T.append((g, g.leading_exponent(), _ecart(g), zero, qs))
    h, a, qs = p, ring.one(), [zero] * s
    while h:
        lm = h.leading_exponent()
        best = None
        for entry in T:
            if divides(entry[1], lm) and (best is None or entry[2] < best[2]):
                best = entry
        if best is None:
            break
        eh = _ecart(h)
        if best[2] > eh:
            T.append((h, lm, eh, a, qs))
        g, eg, _, ga, gq = best
        mexp = exp_sub(lm, eg)
        c = h.terms[lm] / g.terms[eg]
        h = h - g.mul_term(mexp, c)
        a = a - ga.mul_term(mexp, c)
        qs = [q - gqi.mul_term(mexp, c) for q, gqi in zip(qs, gq)]
    return a, qs, h


# ---------- standard bases ----------


def _minimalize(elems: list[Polynomial]) -> list[Polynomial]:
    """Drop elements whose leading monomial is divisible by another's."""
    elems = sorted(elems, key=lambda g: (local_key(g.leading_exponent()), len(g)), reverse=True)
    kept: list[Polynomial] = []
    for g in elems:
        lm = g.leading_exponent()
        if not any(divides(k.leading_exponent(), lm) for k in kept):
            kept.append(g)
    return kept


@dataclass(frozen=True)
class StandardBasis:
    ideal: IdealPresentation
    elements: tuple[Polynomial, ...]
    ordering: str = "negdegrevlex"
    leading: tuple[Exponent, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "leading", tuple(g.leading_exponent() for g in self.elements))

    @property
    def ring(self) -> RingContext:
        return self.ideal.ring

    def is_unit_ideal(self) -> bool:
        return any(not any(e) for e in self.leading)

    def in_leading_ideal(self, exp: Exponent) -> bool:
        return any(divides(lm, exp) for lm in self.leading)

    def pure_powers(self) -> list[int | None]:
        """Smallest a_i with x_i^a_i a leading monomial, per variable."""
        n = self.ring.dimension
        out: list[int | None] = [None] * n
        for lm in self.leading:
            support = [i for i, e in enumerate(lm) if e]
            if len(support) == 1:
                i = support[0]
                if out[i] is None or lm[i] < out[i]:
                    out[i] = lm[i]
            elif not support:
                return [0] * n
        return out


def _noether_bound(leading: Sequence[Exponent], n: int) -> int | None:
    """Least D with every monomial of degree D in the monomial ideal, if any."""
    stairs = _staircase_of(leading, n)
    if stairs is None:
        return None
    return 1 + max((sum(e) for e in stairs), default=-1)


def _strip_unit(g: Polynomial) -> Polynomial:
    """Replace g = c * u, with c the monomial gcd of its terms and u a unit, by c.

    Both generate the same ideal of the local ring, and the monomial carries no
    power series tail for later reductions to expand.
    """
    exps = list(g.terms)
    c = tuple(min(col) for col in zip(*exps))
    if c in g.terms and len(exps) > 1:
        return g.ring.monomial(c)
    return g


def _mora(ideal: IdealPresentation, cutoff: int | None) -> list[Polynomial] | None:
    """Standard basis of ``ideal + m^cutoff`` (or of ``ideal`` if cutoff is None).

    Returns None for the unit ideal.  Pairs are processed with the normal
    strategy: smallest lcm degree first, ties broken by the local ordering of
    the lcm, then by insertion order.  Once the leading monomials found so far
    contain all monomials of some degree D, m^D lies in the ideal and later
    reductions are truncated at degree D (highest-corner truncation).
    """
    n = ideal.ring.dimension
    pending = [_strip_unit(g.monic()) for g in ideal.generators]
    if any(g.constant_term() for g in pending):
        return None
    S: list[Polynomial] = []

    def add(h: Polynomial) -> bool:
        nonlocal cutoff
        h = _strip_unit(h.monic())
        if not any(h.leading_exponent()):
            return False
        S.append(h)
        bound = _noether_bound([s.leading_exponent() for s in S], n)
        if bound is not None and (cutoff is None or bound < cutoff):
            cutoff = bound
        return True

    # reduce the generators against each other first so S starts small
    for g in sorted(pending, key=lambda g: local_key(g.leading_exponent()), reverse=True):
        h = weak_normal_form(g, S, cutoff)
        if h and not add(h):
            return None
    pairs: list[tuple[int, int]] = [(i, j) for j in range(len(S)) for i in range(j)]

    def pair_key(ij):
        i, j = ij
        lcm = exp_lcm(S[i].leading_exponent(), S[j].leading_exponent())
        return (sum(lcm), tuple(-x for x in local_key(lcm)[1]), j, i)

    while pairs:
        pairs.sort(key=pair_key, reverse=True)
        i, j = pairs.pop()
        f, g = S[i], S[j]
        ef, eg = f.leading_exponent(), g.leading_exponent()
        lcm = exp_lcm(ef, eg)
        if cutoff is not None and sum(lcm) >= cutoff:
            # every term of the s-polynomial has degree >= deg(lcm)
            continue
        sp = f.mul_term(exp_sub(lcm, ef), 1 / f.terms[ef]) - g.mul_term(exp_sub(lcm, eg), 1 / g.terms[eg])
        h = weak_normal_form(sp, S, cutoff)
        if not h:
            continue
        if not add(h):
            return None
        k = len(S) - 1
        pairs.extend((m, k) for m in range(k))
    return S


def _colength_bound(ideal: IdealPresentation) -> int:
    """An upper bound for the colength of ``ideal`` in case it is finite.

    If I is m-primary, n general rational combinations of its generators
    generate a reduction of I, again m-primary.  Their local intersection
    multiplicity is at most d^n by Bezout, with d the largest generator
    degree, and it bounds the colength of I from above.
    """
    d = max(g.degree() for g in ideal.generators)
    return max(d, 1) ** ideal.ring.dimension


def _certified_basis(ideal: IdealPresentation) -> StandardBasis | None:
    """Standard basis of an m-primary ideal, or None if the colength is infinite.

    For doubling D, compute a standard basis S of I + m^D with every
    reduction truncated at degree D.  If the leading ideal of S contains all
    monomials of degree D - 1, then m^(D-1) lies in I + m^D, hence in I by
    Nakayama's lemma, and S is a standard basis of I.  A colength c forces
    m^c into I, so once D exceeds the bound of :func:`_colength_bound` a
    failed check proves that I is not m-primary.
    """
    ring = ideal.ring
    B = _colength_bound(ideal)
    D = 4
    while True:
        D = min(D, B + 1)
        S = _mora(ideal, D)
        if S is None:
            return StandardBasis(ideal, (ring.one(),))
        bound = _noether_bound([s.leading_exponent() for s in S], ring.dimension)
        if bound is not None and bound <= D - 1:
            return StandardBasis(ideal, tuple(_minimalize(S)))
        if D > B:
            return None
        D *= 2


def standard_basis(ideal: IdealPresentation) -> StandardBasis:
    """Standard basis of ``ideal`` w.r.t. negdegrevlex.

    m-primary ideals go through the truncated computation of
    :func:`_certified_basis`, which avoids the power series expansions plain
    Mora can get lost in.  Only ideals of infinite colength run Mora without
    truncation.
    """
    basis = _certified_basis(ideal)
    if basis is not None:
        return basis
    S = _mora(ideal, None)
    return StandardBasis(ideal, (ideal.ring.one(),) if S is None else tuple(_minimalize(S)))


# ---------- staircase, colength, normal forms ----------


def _staircase_of(leading: Sequence[Exponent], n: int) -> list[Exponent] | None:
    """Monomials outside the ideal generated by ``leading``; None if infinite."""
    if any(not any(e) for e in leading):
        return []
    for i in range(n):
        if not any(e[i] and sum(e) == e[i] for e in leading):
            return None
    one = (0,) * n
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(n):
                m = e[:i] + (e[i] + 1,) + e[i + 1 :]
                if m not in seen and not any(divides(lm, m) for lm in leading):
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    return sorted(seen, key=local_key)


def _staircase(basis: StandardBasis) -> list[Exponent] | None:
    """Monomials outside the leading ideal, or None if there are infinitely many."""
    return _staircase_of(basis.leading, basis.ring.dimension)


def colength_of_basis(basis: StandardBasis) -> Colength:
    stairs = _staircase(basis)
    return Colength.infinite() if stairs is None else Colength(len(stairs))


def colength(ideal: IdealPresentation) -> Colength:
    """dim_C O_{C^N,0} / I, finite or infinite."""
    if not ideal.generators:
        return Colength.infinite()
    basis = _certified_basis(ideal)
    return Colength.infinite() if basis is None else colength_of_basis(basis)


@dataclass(frozen=True)
class QuotientBasis:
    """Staircase monomials of an m-primary ideal, in increasing local order."""

    ideal: IdealPresentation
    monomials: tuple[Exponent, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self, exp: Exponent) -> int:
        return self.monomials.index(exp)

    @property
    def socle_degree_bound(self) -> int:
        """Every monomial of at least this degree lies in the ideal."""
        return 1 + max((sum(e) for e in self.monomials), default=-1)


def quotient_basis(ideal: IdealPresentation, basis: StandardBasis | None = None) -> QuotientBasis:
    basis = basis or _certified_basis(ideal)
    stairs = None if basis is None else _staircase(basis)
    if stairs is None:
        raise InfiniteColengthError(f"ideal {ideal} has infinite colength")
    return QuotientBasis(ideal, tuple(stairs))


def _full_normal_form(p: Polynomial, basis: StandardBasis, cutoff: int) -> Polynomial:
    """Reduce every reducible term; terms of degree >= cutoff are dropped."""
    ring = p.ring
    work = {e: c for e, c in p.terms.items() if sum(e) < cutoff}
    done: dict[Exponent, Fraction] = {}
    elems = list(zip(basis.elements, basis.leading))
    while work:
        lm = max(work, key=local_key)
        c = work.pop(lm)
        for g, eg in elems:
            if divides(eg, lm):
                shift = exp_sub(lm, eg)
                factor = c / g.terms[eg]
                for e, v in g.terms.items():
                    if e == eg:
                        continue
                    m = tuple(a + b for a, b in zip(e, shift))
                    if sum(m) >= cutoff:
                        continue
                    s = work.get(m, 0) - factor * v
                    if s:
                        work[m] = s
                    else:
                        work.pop(m, None)
                break
        else:
            done[lm] = c
    return Polynomial._raw(ring, done)


class LocalAlgebra:
    """The quotient O_{C^N,0}/I of an m-primary ideal, with normal forms."""

    def __init__(self, ideal: IdealPresentation, basis: StandardBasis | None = None):
        self.ideal = ideal
        self.basis = basis or _certified_basis(ideal)
        if self.basis is None:
            raise InfiniteColengthError(f"ideal {ideal} has infinite colength")
        self.quotient = quotient_basis(ideal, self.basis)
        self.cutoff = self.quotient.socle_degree_bound

    @property
    def ring(self) -> RingContext:
        return self.ideal.ring

    def __len__(self) -> int:
        return len(self.quotient)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return _full_normal_form(p, self.basis, self.cutoff)

    def multiply(self, p: Polynomial, q: Polynomial) -> Polynomial:
        return self.normal_form(self.normal_form(p) * self.normal_form(q))

    def coordinates(self, p: Polynomial) -> list[Fraction]:
        nf = self.normal_form(p)
        return [nf.terms.get(m, Fraction(0)) for m in self.quotient.monomials]


def normal_form(p: Polynomial, basis: StandardBasis) -> Polynomial:
    """Normal form of p modulo the ideal of ``basis``.

    For m-primary ideals this is the unique reduced normal form (supported on
    the staircase).  Otherwise Mora's weak normal form is returned: its
    leading monomial lies outside the leading ideal, and it vanishes exactly
    when p lies in the ideal.
    """
    if basis.is_unit_ideal():
        return p.ring.zero()
    stairs = _staircase(basis)
    if stairs is None:
        return weak_normal_form(p, basis.elements)
    cutoff = 1 + max(sum(e) for e in stairs)
    return _full_normal_form(p, basis, cutoff)


def multiply_in_quotient(p: Polynomial, q: Polynomial, basis: StandardBasis) -> Polynomial:
    if _staircase(basis) is None:
        raise InfiniteColengthError("multiplication in the quotient needs finite colength")
    return normal_form(normal_form(p, basis) * normal_form(q, basis), basis)


def ideal_membership(p: Polynomial, ideal: IdealPresentation | StandardBasis) -> bool:
    basis = ideal if isinstance(ideal, StandardBasis) else standard_basis(ideal)
    return not normal_form(p, basis)


# ---------- truncation oracle ----------


def _monomials_below(n: int, d: int) -> list[Exponent]:
    """All exponents in n variables with total degree < d."""
    out = []
    for deg in range(d):
        for combo in combinations_with_replacement(range(n), deg):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _integer_row(coeffs: dict[int, Fraction]) -> dict[int, int]:
    den = 1
    for c in coeffs.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    row = {k: int(c * den) for k, c in coeffs.items()}
    return _primitive(row)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _truncated_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank of sparse integer rows by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                break
            a, b = piv[col], row[col]
            new = {}
            for k in row.keys() | piv.keys():
                v = a * row.get(k, 0) - b * piv.get(k, 0)
                if v:
                    new[k] = v
            row = _primitive(new)
    return len(pivots)


def truncated_quotient_dimension(ideal: IdealPresentation, d: int) -> int:
    """dim_Q of O/(I + m^d), computed on polynomials of degree < d."""
    n = ideal.ring.dimension
    monos = _monomials_below(n, d)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in ideal.generators:
        low = [(e, c) for e, c in g.terms.items() if sum(e) < d]
        if not low:
            continue
        order = min(sum(e) for e, _ in low)
        for m in monos:
            if sum(m) + order >= d:
                continue
            coeffs = {}
            for e, c in low:
                t = tuple(a + b for a, b in zip(e, m))
                if sum(t) < d:
                    coeffs[col[t]] = c
            if coeffs:
                rows.append(_integer_row(coeffs))
    return len(monos) - _truncated_rank(rows)


def colength_truncation_oracle(ideal: IdealPresentation, cap: int = DEFAULT_ORACLE_CAP) -> Colength | Inconclusive:
    """Independent colength check by linear algebra on truncations.

    For d = 1, 2, ... computes dim O/(I + m^d).  Once two consecutive values
    agree the common value is the colength: I + m^d = I + m^{d+1} forces m^d
    into I by Nakayama.  Returns
    ``Inconclusive`` when no stabilization happens for d <= cap.
    """
    if cap < 2:
        raise ValueError("oracle cap must be at least 2")
    dims: list[int] = []
    for d in range(1, cap + 1):
        dims.append(truncated_quotient_dimension(ideal, d))
        if dims[-1] == 0 or (len(dims) >= 2 and dims[-1] == dims[-2]):
            return Colength(dims[-1])
    return Inconclusive(cap, tuple(dims))
