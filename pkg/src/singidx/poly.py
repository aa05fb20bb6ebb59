"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as ``{exponent tuple: Fraction}``.  Polynomials are treated
as immutable values; every operation returns a new object.

The only monomial ordering is the local ordering ``negdegrevlex``: lower total
degree is *larger*, ties are broken reverse-lexicographically.  In particular
``1`` is the largest monomial, which is what makes leading terms meaningful in
the local ring at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, SingularMatrixError, UnknownVariableError

Exponent = tuple[int, ...]
Number = int | Fraction


@dataclass(frozen=True)
class RingContext:
    """Ordered coordinate names of the ambient space (C^N, 0)."""

    variables: tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not (name.isidentifier() and name.isascii()):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "variables", names)

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: Number) -> Polynomial:
        return Polynomial(self, {(0,) * self.dimension: Fraction(c)})

    def var(self, name: str) -> Polynomial:
        return self.monomial(unit_exponent(self.dimension, self.index(name)))

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exp: Exponent, coeff: Number = 1) -> Polynomial:
        if len(exp) != self.dimension:
            raise DimensionError(f"exponent {exp} does not fit ring of dimension {self.dimension}")
        return Polynomial(self, {tuple(exp): Fraction(coeff)})

    def __str__(self) -> str:
        return ", ".join(self.variables)


def unit_exponent(n: int, i: int) -> Exponent:
    return tuple(1 if j == i else 0 for j in range(n))


# ---------- local ordering ----------


def local_key(exp: Exponent) -> tuple:
    """Sort key realizing negdegrevlex: a larger key is a larger monomial."""
    return (-sum(exp), tuple(-e for e in reversed(exp)))


def compare_local(a: Sequence[int], b: Sequence[int]) -> int:
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or less than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"cannot compare exponents {tuple(a)} and {tuple(b)}")
    ka, kb = local_key(tuple(a)), local_key(tuple(b))
    return (ka > kb) - (ka < kb)


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------- polynomials ----------


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Exponent, Number]):
        self.ring = ring
        n = ring.dimension
        clean = {}
        for exp, c in terms.items():
            if len(exp) != n:
                raise DimensionError(f"exponent {exp} does not fit ring of dimension {n}")
            if c:
                clean[tuple(exp)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms: dict[Exponent, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingContext, terms: dict[Exponent, Fraction]) -> Polynomial:
        # caller guarantees canonical terms
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the order of vanishing at 0)."""
        return min((sum(e) for e in self.terms), default=-1)

    def leading_exponent(self) -> Exponent:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=local_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_exponent()]

    def ecart(self) -> int:
        return self.degree() - sum(self.leading_exponent())

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.dimension, Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms from largest to smallest in the local ordering."""
        return sorted(self.terms.items(), key=lambda t: local_key(t[0]), reverse=True)

    # -- arithmetic

    def _check(self, other: Polynomial) -> None:
        if other.ring != self.ring:
            raise DimensionError(f"ring mismatch: ({self.ring}) vs ({other.ring})")

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Number) -> Polynomial:
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, exp: Exponent, c: Number) -> Polynomial:
        """Multiply by the single term ``c * x^exp``."""
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {tuple(x + y for x, y in zip(e, exp)): v * c for e, v in self.terms.items()}
        )

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def truncate(self, degree: int) -> Polynomial:
        """Drop every term of total degree >= ``degree``."""
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) < degree})

    # -- comparisons

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution

    def diff(self, var: str | int) -> Polynomial:
        i = var if isinstance(var, int) else self.ring.index(var)
        if not 0 <= i < self.ring.dimension:
            raise UnknownVariableError(str(var))
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                terms[tuple(d)] = c * e[i]
        return Polynomial._raw(self.ring, terms)

    def gradient(self) -> list[Polynomial]:
        return [self.diff(i) for i in range(self.ring.dimension)]

    def evaluate(self, point: Sequence[Number]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def compose(self, images: Sequence[Polynomial]) -> Polynomial:
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.dimension:
            raise DimensionError("need one image per variable")
        target = images[0].ring
        result = target.zero()
        powers: list[dict[int, Polynomial]] = [{0: target.one()} for _ in images]
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    if k not in powers[i]:
                        powers[i][k] = images[i] ** k
                    term = term * powers[i][k]
            result = result + term
        return result

    def rename(self, ring: RingContext, mapping: Sequence[int]) -> Polynomial:
        """Embed into ``ring``, sending variable i to variable ``mapping[i]``."""
        n = ring.dimension
        terms = {}
        for e, c in self.terms.items():
            new = [0] * n
            for i, k in enumerate(e):
                new[mapping[i]] += k
            terms[tuple(new)] = c
        return Polynomial._raw(ring, terms)

    # -- text

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(ring: RingContext, exp: Exponent) -> str:
    parts = []
    for name, k in zip(ring.variables, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Render in the input grammar, so that parsing the output gives ``p`` back."""
    if not p.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(p.ring, e)
        if not mono:
            body = format_coefficient(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_coefficient(a)}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def differentiate(p: Polynomial, var: str) -> Polynomial:
    return p.diff(var)


# ---------- exact rational matrices ----------


def invert_matrix(m: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises SingularMatrixError."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("matrix must be square")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def linear_images(ring: RingContext, m: Sequence[Sequence[Number]]) -> list[Polynomial]:
    """The polynomials ``sum_j m[i][j] x_j`` for every row i."""
    n = ring.dimension
    if len(m) != n or any(len(row) != n for row in m):
        raise DimensionError(f"substitution matrix must be {n}x{n}")
    return [
        Polynomial(ring, {unit_exponent(n, j): Fraction(m[i][j]) for j in range(n)}) for i in range(n)
    ]


def substitute_linear(p: Polynomial, m: Sequence[Sequence[Number]]) -> Polynomial:
    """Return ``p(M x)``: each x_i is replaced by ``sum_j M[i][j] x_j``."""
    invert_matrix(m)
    return p.compose(linear_images(p.ring, m))
