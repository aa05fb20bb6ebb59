"""Topological degree of real vector fields from the signature of a bilinear form.

For a field X with an isolated zero, the local algebra A = R[x]/(X) carries
the pairing <a, b> = l(a b), where l is any functional positive on the
Jacobian class.  Its signature is the degree of X at 0.

Run with ``python demos/real_degree_of_planar_fields.py``.
"""

from __future__ import annotations

from singidx import parse_poly
from singidx.indices import elk_data, index_holomorphic_vf
from singidx.poly import RingContext
from singidx.quadratic_forms import VectorFieldGerm

XY = RingContext(["x", "y"])

FIELDS = {
    "identity (x, y)": ("x", "y"),
    "reflection (x, -y)": ("x", "-y"),
    "fold (x^2, y)": ("x^2", "y"),
    "z^2 as a real map": ("x^2 - y^2", "2*x*y"),
    "z^3 as a real map": ("x^3 - 3*x*y^2", "3*x^2*y - y^3"),
    "conjugate of z^2": ("x^2 - y^2", "-2*x*y"),
    "(x^2, y^2)": ("x^2", "y^2"),
}

for name, comps in FIELDS.items():
    X = VectorFieldGerm(XY, [parse_poly(c, XY) for c in comps])
    data = elk_data(X)
    mons = [str(XY.monomial(m)) for m in data.algebra.quotient.monomials]
    print(f"{name}")
    print(f"  dim A = {index_holomorphic_vf(X)}, basis {mons}")
    for row in data.gram.entries:
        print("   ", " ".join(f"{str(v):>4}" for v in row))
    print(f"  inertia +{data.inertia.positive} -{data.inertia.negative}, degree {data.index}\n")
