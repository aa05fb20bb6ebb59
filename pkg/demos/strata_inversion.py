"""Moebius inversion on a poset of strata.

Radial indices of the closures are sums of Euler obstructions weighted by
normal-slice indices; inverting the weights recovers the obstructions.

Run with ``python demos/strata_inversion.py``.
"""

from __future__ import annotations

from singidx.strata import (
    StrataPoset,
    StratumIndexData,
    bmps_function_obstruction,
    mobius_inverse,
    obstruction_from_radial,
    radial_indices_of_closures,
)

# a point in two curves, both in the closure of a surface stratum
P = StrataPoset(
    ["O", "C1", "C2", "S"],
    {("O", "C1"), ("O", "C2"), ("O", "S"), ("C1", "S"), ("C2", "S")},
    {("O", "C1"): 2, ("O", "C2"): -1, ("O", "S"): 3, ("C1", "S"): 1, ("C2", "S"): 4},
)
m = mobius_inverse(P)
print("inverse weights m[i, S]:", {i: m[(i, "S")] for i in P.elements})

eu = {"O": 1, "C1": -2, "C2": 5, "S": 7}
rad = radial_indices_of_closures(P, eu)
print("Euler obstructions:", eu)
print("radial indices of closures:", rad)
back = {j: obstruction_from_radial(P, StratumIndexData(rad=rad), top=j) for j in P.elements}
print("recovered obstructions:", back)

# function obstruction on the A1 surface: the Milnor fibre of f on the regular
# stratum has chi = 1 - mu(V & {xy + z^2 = 0}) = 1 - 5, and Eu = 1 there
two = StrataPoset(["O", "reg"], {("O", "reg")})
value = bmps_function_obstruction(two, StratumIndexData(chi={"reg": -4}, euv={"reg": 1}), 0)
print("\nEuler obstruction of f = xy + z^2 on the A1 surface:", value)
