"""Milnor numbers of complete intersections and the indices they feed.

Run with ``python demos/milnor_numbers_and_sections.py``.
"""

from __future__ import annotations

from singidx import parse_poly
from singidx.indices import (
    GenericitySampler,
    ICISPresentation,
    OneFormGerm,
    Provenance,
    euler_obstruction_of_function_icis,
    gsv_index_1form,
    milnor_number_icis,
    radial_index_1form_icis,
)
from singidx.poly import RingContext

XYZ = RingContext(["x", "y", "z"])


def P(text: str):
    return parse_poly(text, XYZ)


A1 = ICISPresentation(XYZ, [P("x^2 + y^2 + z^2")])
D4 = ICISPresentation(XYZ, [P("x^2*y - y^3 + z^2")])
curve = ICISPresentation(XYZ, [P("x^2 + y^2 - z^2"), P("x*y")])

for name, V in [("A1 surface", A1), ("D4 surface", D4), ("four lines in 3-space", curve)]:
    prov = Provenance()
    mu = milnor_number_icis(V, prov)
    steps = ", ".join(str(r.colength) for r in prov.records)
    print(f"{name}: mu = {mu} (chain colengths {steps})")

dz = OneFormGerm(XYZ, [P("0"), P("0"), P("1")])
print(f"\nGSV index of dz on the A1 surface: {gsv_index_1form(A1, dz)}")
print(f"radial index of dz: {radial_index_1form_icis(A1, dz)}")

print("\nradial index of dl versus the Milnor number of the section {l = 0}:")
sampler = GenericitySampler(seed=7, trials=4)
for V, name in [(A1, "A1"), (D4, "D4")]:
    for t in range(sampler.trials):
        ell = sampler.linear_function(XYZ, t)
        rad = radial_index_1form_icis(V, OneFormGerm.differential(ell))
        mu = milnor_number_icis(ICISPresentation(XYZ, (ell,) + V.equations))
        print(f"  {name}, l = {ell}: {rad} = {mu}")

print("\nEuler obstruction of functions on the A1 surface:")
for g in ["z", "x*y + z^2"]:
    print(f"  g = {g}: {euler_obstruction_of_function_icis(A1, P(g))}")
