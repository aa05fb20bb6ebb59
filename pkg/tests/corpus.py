"""Shared test corpus: named examples plus seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from singidx import parse_poly
from singidx.indices import ICISPresentation, OneFormGerm
from singidx.local_algebra import IdealPresentation, colength
from singidx.poly import Polynomial, RingContext
from singidx.quadratic_forms import VectorFieldGerm
from singidx.strata import StrataPoset

XY = RingContext(["x", "y"])
XYZ = RingContext(["x", "y", "z"])
X123 = RingContext(["x1", "x2", "x3"])
X1 = RingContext(["x"])


def P(ring: RingContext, text: str) -> Polynomial:
    return parse_poly(text, ring)


def ideal(ring: RingContext, *gens: str) -> IdealPresentation:
    return IdealPresentation(ring, [P(ring, g) for g in gens])


def form(ring: RingContext, *coeffs: str) -> OneFormGerm:
    return OneFormGerm(ring, [P(ring, c) for c in coeffs])


def field_(ring: RingContext, *comps: str) -> VectorFieldGerm:
    return VectorFieldGerm(ring, [P(ring, c) for c in comps])


def icis(ring: RingContext, *eqs: str) -> ICISPresentation:
    return ICISPresentation(ring, [P(ring, e) for e in eqs])


# (ICIS, 1-form) pairs with isolated singular points; used by the reduction identities
def icis_form_corpus() -> list[tuple[str, ICISPresentation, OneFormGerm]]:
    return [
        ("A1 surface, dz", icis(XYZ, "x^2+y^2+z^2"), form(XYZ, "0", "0", "1")),
        ("A1 surface, dx+2dy+3dz", icis(XYZ, "x^2+y^2+z^2"), form(XYZ, "1", "2", "3")),
        ("A2 surface, dz", icis(XYZ, "x^2+y^2+z^3"), form(XYZ, "0", "0", "1")),
        ("A1 surface, x dx + 2y dy + 3z dz", icis(XYZ, "x^2+y^2+z^2"), form(XYZ, "x", "2*y", "3*z")),
        ("cusp, dx", icis(XY, "x^3-y^2"), form(XY, "1", "0")),
        ("cusp, dy", icis(XY, "x^3-y^2"), form(XY, "0", "1")),
        ("node, dx+dy", icis(XY, "x*y"), form(XY, "1", "1")),
        ("E6 curve, x dx + y dy", icis(XY, "x^3+y^4"), form(XY, "x", "y")),
        ("space curve, dx", icis(XYZ, "x^2+y^2+z^2", "z"), form(XYZ, "1", "0", "0")),
        ("space curve, dx+2dy+5dz", icis(XYZ, "x^2+y^2-z^2", "x*y"), form(XYZ, "1", "2", "5")),
        ("D4 surface, dz", icis(XYZ, "x^2*y-y^3+z^2"), form(XYZ, "0", "0", "1")),
        ("smooth plane, x dx + y dy", icis(XY), form(XY, "x", "y")),
        ("smooth plane, y dx + x dy", icis(XY), form(XY, "y", "x")),
        ("smooth plane, x^2 dx + y^3 dy", icis(XY), form(XY, "x^2", "y^3")),
        ("smooth space, df for xyz+x^3+y^3+z^3", icis(XYZ), form(XYZ, "y*z+3*x^2", "x*z+3*y^2", "x*y+3*z^2")),
        ("smooth hypersurface z, x dx + y dy + dz", icis(XYZ, "z"), form(XYZ, "x", "y", "1")),
    ]


def random_poly(ring: RingContext, rng: random.Random, min_deg: int = 1, max_deg: int = 4, terms: int = 4, height: int = 5) -> Polynomial:
    n = ring.dimension
    out = {}
    for _ in range(terms):
        d = rng.randint(min_deg, max_deg)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        c = 0
        while c == 0:
            c = rng.randint(-height, height)
        out[tuple(e)] = Fraction(c)
    return Polynomial(ring, out)


def random_homogeneous(ring: RingContext, rng: random.Random, degree: int, height: int = 5) -> Polynomial:
    from itertools import combinations_with_replacement

    n = ring.dimension
    out = {}
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out[tuple(e)] = Fraction(rng.randint(-height, height))
    return Polynomial(ring, out)


def random_m_primary_ideals(count: int, seed: int = 7, max_colength: int = 50) -> list[IdealPresentation]:
    """Perturbed complete intersections in 1-3 variables, colength <= max_colength."""
    rng = random.Random(seed)
    rings = {1: X1, 2: XY, 3: XYZ}
    out = []
    while len(out) < count:
        n = rng.choice([1, 2, 2, 3, 3])
        ring = rings[n]
        degrees = [rng.randint(1, 4 if n == 3 else 7) for _ in range(n)]
        prod = 1
        for d in degrees:
            prod *= d
        if prod > max_colength:
            continue
        gens = []
        for d in degrees:
            g = random_homogeneous(ring, rng, d) + random_poly(ring, rng, d + 1, d + 3, terms=2)
            gens.append(g)
        if rng.random() < 0.5:
            # an extra redundant-looking generator
            gens.append(gens[0] * random_poly(ring, rng, 0, 1, terms=2) + random_poly(ring, rng, max(degrees) + 1, max(degrees) + 2, terms=1))
        I = IdealPresentation(ring, gens)
        c = colength(I)
        if c.finite and c.value <= max_colength:
            out.append(I)
    return out


def random_vector_fields(count: int, seed: int = 11, max_colength: int = 24) -> list[VectorFieldGerm]:
    """Random fields in <= 3 variables, degree <= 4, vanishing at 0 with finite colength."""
    rng = random.Random(seed)
    rings = {1: X1, 2: XY, 3: XYZ}
    out = []
    while len(out) < count:
        n = rng.choice([1, 2, 2, 3])
        ring = rings[n]
        comps = [random_poly(ring, rng, 1, 4, terms=rng.randint(1, 3)) for _ in range(n)]
        c = colength(IdealPresentation(ring, comps))
        if c.finite and 0 < c.value <= max_colength:
            out.append(VectorFieldGerm(ring, comps))
    return out


def random_invertible(n: int, rng: random.Random, height: int = 3) -> list[list[Fraction]]:
    from singidx.errors import SingularMatrixError
    from singidx.poly import invert_matrix

    while True:
        m = [[Fraction(rng.randint(-height, height)) for _ in range(n)] for _ in range(n)]
        try:
            invert_matrix(m)
            return m
        except SingularMatrixError:
            continue


def random_poset(rng: random.Random, size: int | None = None, height: int = 9) -> StrataPoset:
    """A random order on 1..8 strata: random edges i < j, transitively closed."""
    size = size or rng.randint(1, 8)
    elems = [f"V{i}" for i in range(size)]
    rel = {(elems[i], elems[j]) for i in range(size) for j in range(i + 1, size) if rng.random() < 0.4}
    changed = True
    while changed:
        extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        changed = bool(extra)
        rel |= extra
    rng.shuffle(elems)
    n = {p: rng.randint(-height, height) for p in rel}
    return StrataPoset(elems, rel, n)
