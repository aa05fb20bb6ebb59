"""Index of a collection of 1-forms on the quadric cone, checked two ways.

Run with ``python demos/quadric_collection.py``.
"""

from __future__ import annotations

from singidx import parse_poly
from singidx.indices import (
    CollectionSpec,
    GenericitySampler,
    ICISPresentation,
    OneFormGerm,
    Provenance,
    chern_obstruction_collection,
    collection_index,
)
from singidx.local_algebra import colength_truncation_oracle
from singidx.poly import RingContext

ring = RingContext(["x1", "x2", "x3"])


def form(*coeffs: str) -> OneFormGerm:
    return OneFormGerm(ring, [parse_poly(c, ring) for c in coeffs])


V = ICISPresentation(ring, [parse_poly("x1^2 + x2^2 + x3^2", ring)])
C = CollectionSpec(
    [1, 1],
    [
        [form("1", "0", "0"), form("0", "-x3", "x2")],
        [form("0", "1", "0"), form("-x3", "0", "x1")],
    ],
)

print("V = {x1^2 + x2^2 + x3^2 = 0}, a surface with an A1 point")
print("collection: (dx1, x2 dx3 - x3 dx2) and (dx2, x1 dx3 - x3 dx1)\n")

prov = Provenance()
index = collection_index(V, C, prov)
for rec in prov.records:
    oracle = colength_truncation_oracle(rec.ideal)
    print(f"{rec.label}: {', '.join(map(str, rec.ideal.generators))}")
    print(f"  standard basis colength {rec.colength}, truncation oracle {oracle.value}")
print(f"collection index = {index}\n")

for seed in (1, 2, 3):
    ch = chern_obstruction_collection(V, C, GenericitySampler(seed=seed))
    print(f"seed {seed}: Chern obstruction = index - index of generic constant forms = {ch}")
