"""Eisenbud-Levine-Khimshiashvili bilinear form and exact signatures.

The local algebra R_X = O/(X_1, ..., X_n) carries the pairing
Q(phi, psi) = l(phi * psi) for a linear functional l with l(J_X) > 0.  Its
signature is the index of the real vector field X.

Signatures are computed twice: by symmetric elimination with 1x1/2x2 pivots
and by Descartes' rule on the exact characteristic polynomial (all roots of a
symmetric matrix's characteristic polynomial are real, so the rule is exact).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DimensionError, NotAlgebraicallyIsolatedError, SignatureMismatchError
from .local_algebra import LocalAlgebra
from .poly import Exponent, Polynomial, RingContext, local_key


@dataclass(frozen=True)
class VectorFieldGerm:
    ring: RingContext
    components: tuple[Polynomial, ...]

    def __init__(self, ring: RingContext, components: Sequence[Polynomial]):
        comps = tuple(components)
        if len(comps) != ring.dimension:
            raise DimensionError(f"vector field needs {ring.dimension} components, got {len(comps)}")
        for c in comps:
            if c.ring != ring:
                raise DimensionError("component in a different ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "components", comps)


def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square polynomial matrix by memoized Laplace expansion."""
    n = len(rows)
    if n == 0:
        raise DimensionError("empty matrix")
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix must be square")

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        # rows[row:], restricted to cols
        if len(cols) == 1:
            return rows[row][cols[0]]
        total = None
        for k, c in enumerate(cols):
            entry = rows[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1 :])
            term = entry * sub
            if k % 2:
                term = -term
            total = term if total is None else total + term
        return total if total is not None else rows[0][0].ring.zero()

    return minor(0, tuple(range(n)))


def jacobian_determinant(X: VectorFieldGerm) -> Polynomial:
    """J_X = det(dX_i/dx_j)."""
    return determinant([c.gradient() for c in X.components])


@dataclass(frozen=True)
class LinearFunctional:
    """Values of l on the staircase monomials of a local algebra."""

    monomials: tuple[Exponent, ...]
    values: tuple[Fraction, ...]

    def __call__(self, p: Polynomial) -> Fraction:
        return sum((p.terms.get(m, 0) * v for m, v in zip(self.monomials, self.values)), Fraction(0))


def elk_functional(algebra: LocalAlgebra, jacobian: Polynomial, anchor: Exponent | None = None) -> LinearFunctional:
    """Coordinate functional at a staircase monomial of NF(J), sign-adjusted.

    By default the anchor is the smallest monomial (deepest in the staircase)
    with a nonzero coefficient in NF(J); any other such monomial may be
    passed explicitly.
    """
    nf = algebra.normal_form(jacobian)
    if not nf:
        raise NotAlgebraicallyIsolatedError("normal form of the Jacobian vanishes in the local algebra")
    if anchor is None:
        anchor = min(nf.terms, key=local_key)
    elif anchor not in nf.terms:
        raise ValueError(f"monomial {anchor} does not occur in NF(J)")
    sign = 1 if nf.terms[anchor] > 0 else -1
    mons = algebra.quotient.monomials
    return LinearFunctional(mons, tuple(Fraction(sign if m == anchor else 0) for m in mons))


@dataclass(frozen=True)
class SymmetricMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, entries: Sequence[Sequence[int | Fraction]]):
        rows = tuple(tuple(Fraction(x) for x in r) for r in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("symmetric matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise DimensionError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def congruent(self, a: Sequence[Sequence[int | Fraction]]) -> SymmetricMatrix:
        """A^T M A."""
        n = self.dimension
        m = self.entries
        ma = [[sum(m[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return SymmetricMatrix([[sum(a[k][i] * ma[k][j] for k in range(n)) for j in range(n)] for i in range(n)])


def gram_matrix(algebra: LocalAlgebra, functional: LinearFunctional) -> SymmetricMatrix:
    """Entries l(NF(m_i * m_j)) over the staircase monomials."""
    ring = algebra.ring
    mons = algebra.quotient.monomials
    n = len(mons)
    products: dict[Exponent, Fraction] = {}
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = tuple(a + b for a, b in zip(mons[i], mons[j]))
            if e not in products:
                products[e] = functional(algebra.normal_form(ring.monomial(e)))
            rows[i][j] = rows[j][i] = products[e]
    return SymmetricMatrix(rows)


@dataclass(frozen=True)
class SignatureResult:
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero


def inertia_by_elimination(m: SymmetricMatrix) -> SignatureResult:
    """Symmetric Gaussian elimination with 1x1 pivots, or 2x2 when the diagonal is zero."""
    a = [list(r) for r in m.entries]
    live = list(range(m.dimension))
    pos = neg = 0
    while live:
        piv = next((i for i in live if a[i][i]), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            live.remove(piv)
            col = [a[i][piv] for i in range(len(a))]
            for i in live:
                if col[i]:
                    f = col[i] / d
                    for j in live:
                        if col[j]:
                            a[i][j] -= f * col[j]
            continue
        pair = next(((i, j) for i in live for j in live if i < j and a[i][j]), None)
        if pair is None:
            break
        i, j = pair
        # block [[0, b], [b, 0]] has inertia (1, 1); its inverse is [[0, 1/b], [1/b, 0]]
        b = a[i][j]
        pos += 1
        neg += 1
        live.remove(i)
        live.remove(j)
        ci = [a[r][i] for r in range(len(a))]
        cj = [a[r][j] for r in range(len(a))]
        for r in live:
            for s in live:
                a[r][s] -= (ci[r] * cj[s] + cj[r] * ci[s]) / b
    return SignatureResult(pos, neg, m.dimension - pos - neg)


def characteristic_polynomial(m: SymmetricMatrix) -> list[Fraction]:
    """Coefficients of det(t I - M), constant term first.

    Reduces to upper Hessenberg form by exact similarity transforms, then
    runs the usual Hessenberg determinant recurrence.
    """
    n = m.dimension
    h = [list(r) for r in m.entries]
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[piv], h[k + 1] = h[k + 1], h[piv]
            for row in h:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        p = h[k + 1][k]
        for i in range(k + 2, n):
            if h[i][k]:
                f = h[i][k] / p
                for j in range(n):
                    h[i][j] -= f * h[k + 1][j]
                for row in h:
                    row[k + 1] += f * row[i]
    # polys[i] = char poly of leading i x i block, as coefficient lists
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for i in range(n):
        # (t - h_ii) * p_i
        prev = polys[i]
        cur = [Fraction(0)] + prev
        for d, c in enumerate(prev):
            cur[d] -= h[i][i] * c
        prod = Fraction(1)
        for j in range(i - 1, -1, -1):
            prod *= h[j + 1][j]
            coeff = prod * h[j][i]
            if coeff:
                for d, c in enumerate(polys[j]):
                    cur[d] -= coeff * c
        polys.append(cur)
    return polys[n]


def _sign_changes(coeffs: Sequence[Fraction]) -> int:
    signs = [c > 0 for c in coeffs if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia_by_descartes(m: SymmetricMatrix) -> SignatureResult:
    coeffs = characteristic_polynomial(m)
    zero = next(i for i, c in enumerate(coeffs) if c)
    reduced = coeffs[zero:]
    pos = _sign_changes(reduced)
    neg = _sign_changes([c if d % 2 == 0 else -c for d, c in enumerate(reduced)])
    return SignatureResult(pos, neg, zero)


def signature(m: SymmetricMatrix) -> SignatureResult:
    a = inertia_by_elimination(m)
    b = inertia_by_descartes(m)
    if a != b:
        raise SignatureMismatchError(f"elimination gives {a}, characteristic polynomial gives {b}")
    return a
