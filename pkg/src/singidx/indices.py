"""Indices of vector fields and 1-forms on isolated complete intersections.

Every index is an integer assembled from colengths of explicit ideals in the
local ring (and, for real vector fields, from the signature of the
Eisenbud-Levine-Khimshiashvili form).  Each function accepts an optional
:class:`Provenance` recorder that collects the ideals and colengths used.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    ChainError,
    DegenerateFormError,
    DimensionError,
    GenericityError,
    InfiniteColengthError,
    NotTangentError,
)
from .local_algebra import IdealPresentation, LocalAlgebra, colength, mora_divide, standard_basis
from .poly import Polynomial, RingContext, invert_matrix, linear_images, unit_exponent
from .quadratic_forms import (
    VectorFieldGerm,
    determinant,
    elk_functional,
    gram_matrix,
    jacobian_determinant,
    signature,
)

# ---------- provenance ----------


@dataclass(frozen=True)
class ColengthRecord:
    label: str
    ideal: IdealPresentation
    colength: int | None


@dataclass
class Provenance:
    """Collects every (ideal, colength) pair an index computation used."""

    records: list[ColengthRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, label: str, ideal: IdealPresentation, value: int | None) -> None:
        self.records.append(ColengthRecord(label, ideal, value))

    def colengths(self) -> list[int | None]:
        return [r.colength for r in self.records]


def _colength(label: str, gens: Sequence[Polynomial], ring: RingContext, prov: Provenance | None, error=InfiniteColengthError, message: str = "") -> int:
    ideal = IdealPresentation(ring, gens)
    value = colength(ideal).value
    if prov is not None:
        prov.add(label, ideal, value)
    if value is None:
        raise error(message or f"{label} {ideal} has infinite colength")
    return value


# ---------- geometric inputs ----------


@dataclass(frozen=True)
class ICISPresentation:
    """V = {f_1 = ... = f_k = 0} in (C^N, 0)."""

    ring: RingContext
    equations: tuple[Polynomial, ...]

    def __init__(self, ring: RingContext, equations: Sequence[Polynomial] = ()):
        eqs = tuple(equations)
        if len(eqs) >= ring.dimension:
            raise DimensionError(f"need fewer than {ring.dimension} equations, got {len(eqs)}")
        for f in eqs:
            if f.ring != ring:
                raise DimensionError("equation in a different ring")
            if f.constant_term():
                raise ValueError(f"equation {f} does not vanish at the origin")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "equations", eqs)

    @property
    def k(self) -> int:
        return len(self.equations)

    @property
    def n(self) -> int:
        return self.ring.dimension - self.k

    def section(self, g: Polynomial) -> ICISPresentation:
        """V intersected with {g = 0}."""
        return ICISPresentation(self.ring, self.equations + (g,))


@dataclass(frozen=True)
class OneFormGerm:
    """omega = sum A_i dx_i."""

    ring: RingContext
    coefficients: tuple[Polynomial, ...]

    def __init__(self, ring: RingContext, coefficients: Sequence[Polynomial]):
        coeffs = tuple(coefficients)
        if len(coeffs) != ring.dimension:
            raise DimensionError(f"1-form needs {ring.dimension} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.ring != ring:
                raise DimensionError("coefficient in a different ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def differential(cls, f: Polynomial) -> OneFormGerm:
        return cls(f.ring, f.gradient())


@dataclass(frozen=True)
class PoleChain:
    """Sections f_{k+1}, ..., f_{k+l} cutting out the pole divisors."""

    ring: RingContext
    sections: tuple[Polynomial, ...] = ()

    def __init__(self, ring: RingContext, sections: Sequence[Polynomial] = ()):
        secs = tuple(sections)
        for s in secs:
            if s.constant_term():
                raise ValueError(f"pole section {s} does not vanish at the origin")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "sections", secs)


@dataclass(frozen=True)
class CollectionSpec:
    """Partition (k_1, ..., k_s) of n with n - k_i + 1 forms in group i."""

    partition: tuple[int, ...]
    forms: tuple[tuple[OneFormGerm, ...], ...]

    def __init__(self, partition: Sequence[int], forms: Sequence[Sequence[OneFormGerm]]):
        part = tuple(partition)
        groups = tuple(tuple(g) for g in forms)
        if not part or any(k < 1 for k in part):
            raise ValueError("partition entries must be positive")
        if len(part) != len(groups):
            raise ValueError("need one group of forms per partition entry")
        n = sum(part)
        for k, g in zip(part, groups):
            if len(g) != n - k + 1:
                raise ValueError(f"partition entry {k} needs {n - k + 1} forms, got {len(g)}")
        object.__setattr__(self, "partition", part)
        object.__setattr__(self, "forms", groups)

    @classmethod
    def from_groups(cls, n: int, forms: Sequence[Sequence[OneFormGerm]]) -> CollectionSpec:
        """Infer k_i = n - len(group_i) + 1."""
        return cls([n - len(g) + 1 for g in forms], forms)

    @property
    def n(self) -> int:
        return sum(self.partition)


@dataclass(frozen=True)
class GenericitySampler:
    """Deterministic source of "generic" random linear data."""

    seed: int = 20240601
    trials: int = 3
    height: int = 7

    def __post_init__(self):
        if self.trials < 3:
            raise ValueError("need at least 3 trials")
        if self.height < 1:
            raise ValueError("coefficient height must be positive")

    def rng(self, trial: int, salt: int = 0) -> random.Random:
        return random.Random((self.seed * 1_000_003 + trial) * 101 + salt)

    def coefficient(self, rng: random.Random) -> Fraction:
        num = 0
        while num == 0:
            num = rng.randint(-self.height, self.height)
        return Fraction(num, rng.randint(1, self.height))

    def linear_form(self, ring: RingContext, rng: random.Random) -> Polynomial:
        n = ring.dimension
        return Polynomial(ring, {unit_exponent(n, i): self.coefficient(rng) for i in range(n)})

    def linear_function(self, ring: RingContext, trial: int) -> Polynomial:
        return self.linear_form(ring, self.rng(trial))


# ---------- coordinate changes ----------


def pullback_poly(p: Polynomial, m) -> Polynomial:
    return p.compose(linear_images(p.ring, m))


def pullback_form(omega: OneFormGerm, m) -> OneFormGerm:
    """Pull back along x = M y: new coefficients are M^T (A o M)."""
    invert_matrix(m)
    moved = [pullback_poly(a, m) for a in omega.coefficients]
    n = omega.ring.dimension
    return OneFormGerm(
        omega.ring, [sum((moved[i] * Fraction(m[i][j]) for i in range(n)), omega.ring.zero()) for j in range(n)]
    )


def pullback_icis(V: ICISPresentation, m) -> ICISPresentation:
    invert_matrix(m)
    return ICISPresentation(V.ring, [pullback_poly(f, m) for f in V.equations])


def pullback_vector_field(X: VectorFieldGerm, m) -> VectorFieldGerm:
    """Transport X along x = M y: new components are M^{-1} (X o M)."""
    inv = invert_matrix(m)
    moved = [pullback_poly(c, m) for c in X.components]
    n = X.ring.dimension
    return VectorFieldGerm(
        X.ring, [sum((moved[j] * inv[i][j] for j in range(n)), X.ring.zero()) for i in range(n)]
    )


# ---------- minors ----------


def maximal_minors(rows: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    """All r x r minors of an r x N matrix (empty if r > N)."""
    r = len(rows)
    width = len(rows[0])
    out = []
    for cols in combinations(range(width), r):
        m = determinant([[row[c] for c in cols] for row in rows])
        if m and m not in out:
            out.append(m)
    return out


def gsv_ideal(V: ICISPresentation, omega: OneFormGerm) -> IdealPresentation:
    """(f_1, ..., f_k) plus the (k+1)-minors of the matrix (df_1; ...; df_k; omega)."""
    rows = [f.gradient() for f in V.equations] + [list(omega.coefficients)]
    return IdealPresentation(V.ring, list(V.equations) + maximal_minors(rows))


# ---------- smooth ambient space ----------


def index_holomorphic_vf(X: VectorFieldGerm, provenance: Provenance | None = None) -> int:
    """dim O/(X_1, ..., X_N)."""
    return _colength(
        "J_X", X.components, X.ring, provenance, message="vector field does not have an isolated zero (non-isolated zero)"
    )


@dataclass(frozen=True)
class ELKData:
    algebra: LocalAlgebra
    jacobian: Polynomial
    gram: object
    inertia: object

    @property
    def index(self) -> int:
        return self.inertia.signature


def elk_data(X: VectorFieldGerm, anchor=None, provenance: Provenance | None = None) -> ELKData:
    index_holomorphic_vf(X, provenance)
    algebra = LocalAlgebra(IdealPresentation(X.ring, X.components))
    jac = jacobian_determinant(X)
    functional = elk_functional(algebra, jac, anchor)
    gram = gram_matrix(algebra, functional)
    inertia = signature(gram)
    if inertia.zero:
        raise DegenerateFormError("ELK form is degenerate although NF(J) is nonzero")
    if provenance is not None:
        basis = ", ".join(str(X.ring.monomial(m)) for m in algebra.quotient.monomials)
        rows = "; ".join(" ".join(str(v) for v in row) for row in gram.entries)
        provenance.notes.append(f"Gram matrix on ({basis}): [{rows}]")
        provenance.notes.append(f"inertia: +{inertia.positive} -{inertia.negative} 0:{inertia.zero}")
    return ELKData(algebra, jac, gram, inertia)


def index_elk(X: VectorFieldGerm, provenance: Provenance | None = None, anchor=None) -> int:
    """Index of a real vector field as the signature of the ELK form."""
    return elk_data(X, anchor, provenance).index


def gsv_index_1form(V: ICISPresentation, omega: OneFormGerm, provenance: Provenance | None = None) -> int:
    """GSV index of a holomorphic 1-form on an ICIS: colength of the minors ideal."""
    if omega.ring != V.ring:
        raise DimensionError("form and variety live in different rings")
    ideal = gsv_ideal(V, omega)
    return _colength(
        "GSV ideal",
        ideal.generators,
        V.ring,
        provenance,
        message="not an isolated singular point of the 1-form on V (or V not an ICIS)",
    )


def homological_index_1form_icis(V: ICISPresentation, omega: OneFormGerm, provenance: Provenance | None = None) -> int:
    """Homological index of a holomorphic 1-form on an ICIS; it coincides with the GSV index."""
    return gsv_index_1form(V, omega, provenance)


def milnor_number_hypersurface(f: Polynomial, provenance: Provenance | None = None) -> int:
    """Colength of the Jacobian ideal."""
    return _colength("Jacobian ideal", f.gradient(), f.ring, provenance, message=f"{f} has a non-isolated singularity")


def milnor_number_icis(V: ICISPresentation, provenance: Provenance | None = None) -> int:
    """Milnor number via the Le-Greuel chain mu(V_i) + mu(V_{i+1}) = dim O/I_i."""
    mu = 0
    for i in range(V.k):
        partial = ICISPresentation(V.ring, V.equations[:i])
        ideal = gsv_ideal(partial, OneFormGerm.differential(V.equations[i]))
        step = _colength(
            f"Le-Greuel step {i + 1}",
            ideal.generators,
            V.ring,
            provenance,
            error=ChainError,
            message=f"equation ordering does not give an ICIS chain at step {i + 1}; reorder equations",
        )
        mu = step - mu
    return mu


def radial_index_1form_icis(V: ICISPresentation, omega: OneFormGerm, provenance: Provenance | None = None) -> int:
    """GSV index minus the Milnor number of V."""
    return gsv_index_1form(V, omega, provenance) - milnor_number_icis(V, provenance)


# ---------- Gomez-Mont formula ----------


def tangency_cofactor(f: Polynomial, X: VectorFieldGerm) -> Polynomial:
    """A germ h with X(f) = h f in the local ring, up to a unit factor.

    Raises NotTangentError when X(f) is not in the ideal (f).
    """
    xf = sum((c * d for c, d in zip(X.components, f.gradient())), f.ring.zero())
    unit, (q,), rem = mora_divide(xf, [f])
    if rem:
        raise NotTangentError("vector field not tangent to V: X(f) is not in (f)")
    return q


def gsv_index_vf_hypersurface(f: Polynomial, X: VectorFieldGerm, provenance: Provenance | None = None) -> int:
    """GSV index of a tangent vector field on the hypersurface {f = 0}.

    Uses J_X, J_1 = (h, J_X), J_2 = (f, J_f), J_3 = (f, J_X); the sum taken
    depends on the parity of n = N - 1.
    """
    if f.ring != X.ring:
        raise DimensionError("f and X live in different rings")
    h = tangency_cofactor(f, X)
    ring = f.ring
    n = ring.dimension - 1
    msg = "zero not isolated in ambient space"
    jx = list(X.components)
    if n % 2 == 0:
        a = _colength("J_X", jx, ring, provenance, message=msg)
        b = _colength("J_1", [h] + jx, ring, provenance, message=msg)
        c = _colength("J_2", [f] + f.gradient(), ring, provenance, message=msg)
        return a + b + c
    c = _colength("J_2", [f] + f.gradient(), ring, provenance, message=msg)
    d = _colength("J_3", [f] + jx, ring, provenance, message=msg)
    return c + d


# ---------- Euler obstruction of a function ----------


def _sampled_common_value(values: list[int], what: str) -> int:
    if len(set(values)) != 1:
        raise GenericityError(f"genericity not reached for {what}: trials gave {values}; increase trials/height")
    return values[0]


def euler_obstruction_of_function_icis(
    V: ICISPresentation, g: Polynomial, sampler: GenericitySampler | None = None, provenance: Provenance | None = None
) -> int:
    """Eu_{V,0} dg = mu(V & {g=0}) - mu(V & {l=0}) for a generic linear l.

    Milnor fibres of the sliced ICIS have Euler characteristic
    1 + (-1)^(n-1) mu, which turns the Euler characteristic difference into a
    difference of Milnor numbers.
    """
    sampler = sampler or GenericitySampler()
    mu_g = milnor_number_icis(V.section(g), provenance)
    values = []
    for t in range(sampler.trials):
        ell = sampler.linear_function(V.ring, t)
        if provenance is not None:
            provenance.notes.append(f"trial {t}: l = {ell}")
        values.append(milnor_number_icis(V.section(ell), provenance))
    return mu_g - _sampled_common_value(values, "the linear function")


# ---------- meromorphic forms and collections ----------


def meromorphic_index(V: ICISPresentation, omega: OneFormGerm, poles: PoleChain | None = None, provenance: Provenance | None = None) -> int:
    """nu_0 - nu_1 + ... + (-1)^l nu_l, nu_i the colength of the i-th minors ideal."""
    sections = poles.sections if poles is not None else ()
    total = 0
    for i in range(len(sections) + 1):
        eqs = V.equations + sections[:i]
        rows = [f.gradient() for f in eqs] + [list(omega.coefficients)]
        nu = _colength(
            f"nu_{i}",
            list(eqs) + maximal_minors(rows),
            V.ring,
            provenance,
            message="chain not an ICIS / non-isolated singular points",
        )
        total += nu if i % 2 == 0 else -nu
    return total


def collection_ideal(V: ICISPresentation, C: CollectionSpec) -> IdealPresentation:
    if C.n != V.n:
        raise ValueError(f"partition sums to {C.n} but dim V = {V.n}")
    gens = list(V.equations)
    grads = [f.gradient() for f in V.equations]
    for group in C.forms:
        rows = grads + [list(w.coefficients) for w in group]
        for m in maximal_minors(rows):
            if m not in gens:
                gens.append(m)
    return IdealPresentation(V.ring, gens)


def collection_index(V: ICISPresentation, C: CollectionSpec, provenance: Provenance | None = None) -> int:
    ideal = collection_ideal(V, C)
    return _colength(
        "collection ideal",
        ideal.generators,
        V.ring,
        provenance,
        message="collection has a non-isolated special point",
    )


def generic_linear_collection(V: ICISPresentation, partition: Sequence[int], sampler: GenericitySampler, trial: int) -> CollectionSpec:
    """Constant-coefficient forms dl^{(i)}_j with random coefficients."""
    rng = sampler.rng(trial, salt=7)
    n = sum(partition)
    ring = V.ring
    groups = []
    for k in partition:
        groups.append([OneFormGerm(ring, [ring.constant(sampler.coefficient(rng)) for _ in range(ring.dimension)]) for _ in range(n - k + 1)])
    return CollectionSpec(partition, groups)


def chern_obstruction_collection(
    V: ICISPresentation, C: CollectionSpec, sampler: GenericitySampler | None = None, provenance: Provenance | None = None
) -> int:
    """ind{omega} - ind{l} with {l} a generic collection of linear functions."""
    sampler = sampler or GenericitySampler()
    own = collection_index(V, C, provenance)
    values = []
    for t in range(sampler.trials):
        values.append(collection_index(V, generic_linear_collection(V, C.partition, sampler, t), provenance))
    return own - _sampled_common_value(values, "the linear collection")


__all__ = [
    "ColengthRecord",
    "Provenance",
    "ICISPresentation",
    "OneFormGerm",
    "PoleChain",
    "CollectionSpec",
    "GenericitySampler",
    "VectorFieldGerm",
    "pullback_poly",
    "pullback_form",
    "pullback_icis",
    "pullback_vector_field",
    "maximal_minors",
    "gsv_ideal",
    "index_holomorphic_vf",
    "elk_data",
    "index_elk",
    "gsv_index_1form",
    "homological_index_1form_icis",
    "milnor_number_hypersurface",
    "milnor_number_icis",
    "radial_index_1form_icis",
    "tangency_cofactor",
    "gsv_index_vf_hypersurface",
    "euler_obstruction_of_function_icis",
    "meromorphic_index",
    "collection_ideal",
    "collection_index",
    "generic_linear_collection",
    "chern_obstruction_collection",
]
