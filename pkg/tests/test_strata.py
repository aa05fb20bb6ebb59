from __future__ import annotations

import random

import pytest
from corpus import XYZ, P, icis, random_poset
from hypothesis import given, settings
from hypothesis import strategies as st

from singidx.errors import MissingDataError, PosetError
from singidx.indices import GenericitySampler, ICISPresentation, euler_obstruction_of_function_icis, milnor_number_icis
from singidx.poly import RingContext
from singidx.strata import (
    StrataPoset,
    StratumIndexData,
    as_poset,
    bmps_function_obstruction,
    convolve,
    mobius_inverse,
    obstruction_from_radial,
    radial_from_obstructions,
    radial_indices_of_closures,
)


def identity_on(P: StrataPoset) -> dict:
    return {(i, k): int(i == k) for i in P.elements for k in P.elements if P.leq(i, k)}


def chain(n: dict) -> StrataPoset:
    """The chain 0 < 1 < ... < top, where top is the largest index used in n."""
    elems = list(range(1 + max(j for _, j in n)))
    return StrataPoset(elems, {(i, j) for i in elems for j in elems if i < j}, n)


POSETS = [random_poset(random.Random(1000 + s)) for s in range(100)]


# ---------- construction ----------


def test_poset_validation():
    with pytest.raises(PosetError, match="antisymmetric"):
        StrataPoset([0, 1], {(0, 1), (1, 0)})
    with pytest.raises(PosetError, match="transitive"):
        StrataPoset([0, 1, 2], {(0, 1), (1, 2)})
    with pytest.raises(PosetError, match="n_ii"):
        StrataPoset([0], set(), {(0, 0): 2})
    with pytest.raises(PosetError, match="not below"):
        StrataPoset([0, 1], set(), {(0, 1): 3})
    with pytest.raises(PosetError, match="duplicate"):
        StrataPoset([0, 0], set())


def test_missing_n_defaults_to_zero():
    P = StrataPoset([0, 1], {(0, 1)})
    assert P.n[(0, 1)] == 0 and P.n[(1, 1)] == 1


# ---------- Moebius inversion ----------


def test_two_chain():
    m = mobius_inverse(chain({(0, 1): 5}))
    assert m[(0, 1)] == -5


def test_three_chain_closed_formula():
    a, b, c = 3, -4, 7
    m = mobius_inverse(chain({(0, 1): a, (1, 2): b, (0, 2): c}))
    assert m[(0, 2)] == -c + a * b
    assert m[(0, 1)] == -a and m[(1, 2)] == -b


def test_antichain_gives_identity():
    P = StrataPoset(["a", "b", "c"], set())
    assert mobius_inverse(P) == identity_on(P)


def test_inverse_on_random_posets():
    for P in POSETS:
        m = mobius_inverse(P)
        assert convolve(P, P.n, m) == identity_on(P)
        assert convolve(P, m, P.n) == identity_on(P)


def test_inversion_is_an_involution():
    for P in POSETS:
        twice = mobius_inverse(as_poset(P, mobius_inverse(P)))
        assert twice == dict(P.n)


def test_chain_sum_formula():
    # m_ik = sum over chains i = k0 < k1 < ... < kr = k of (-1)^r n_{k0k1} ... n_{k(r-1)kr}
    def chains(P, i, k):
        if i == k:
            yield [i]
            return
        for j in P.elements:
            if (i, j) in P.relation and P.leq(j, k):
                for rest in chains(P, j, k):
                    yield [i] + rest

    for P in POSETS[:40]:
        m = mobius_inverse(P)
        for (i, k), v in m.items():
            total = 0
            for c in chains(P, i, k):
                term = (-1) ** (len(c) - 1)
                for a, b in zip(c, c[1:]):
                    term *= P.n[(a, b)]
                total += term
            assert total == v


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 8))
def test_inverse_property_hypothesis(seed, size):
    P = random_poset(random.Random(seed), size)
    assert convolve(P, P.n, mobius_inverse(P)) == identity_on(P)


# ---------- radial indices and Euler obstructions ----------


def test_radial_single_stratum():
    P = StrataPoset(["V"], set())
    assert radial_from_obstructions(P, StratumIndexData(n={"V": 1}, eu={"V": 7})) == 7
    assert obstruction_from_radial(P, StratumIndexData(rad={"V": 7})) == 7


def test_radial_isolated_singularity():
    # strata {0} < V_reg with n_0 = radial index of a generic dl
    P = StrataPoset(["0", "reg"], {("0", "reg")}, {("0", "reg"): 3})
    D = StratumIndexData(n={"0": 3, "reg": 1}, eu={"0": 1, "reg": -2})
    assert radial_from_obstructions(P, D) == 3 - 2
    assert radial_from_obstructions(P, StratumIndexData(eu={"0": 1, "reg": -2})) == 1


def test_radial_all_zero_obstructions():
    for P in POSETS[:10]:
        D = StratumIndexData(eu={i: 0 for i in P.elements})
        assert all(v == 0 for v in radial_indices_of_closures(P, D.eu).values())


def test_two_chain_obstruction():
    P = chain({(0, 1): 4})
    assert obstruction_from_radial(P, StratumIndexData(rad={0: 5, 1: 2})) == 2 - 4 * 5


def test_round_trip_on_random_posets():
    rng = random.Random(8)
    for P in POSETS:
        eu = {i: rng.randint(-20, 20) for i in P.elements}
        rad = radial_indices_of_closures(P, eu)
        for j in P.elements:
            assert obstruction_from_radial(P, StratumIndexData(rad=rad), top=j) == eu[j]
            assert radial_from_obstructions(P, StratumIndexData(eu=eu), top=j) == rad[j]


def test_missing_data_errors():
    P = chain({(0, 1): 1})
    with pytest.raises(MissingDataError):
        radial_from_obstructions(P, StratumIndexData(n={0: 1, 1: 1}, eu={0: 2}))
    with pytest.raises(MissingDataError):
        obstruction_from_radial(P, StratumIndexData(rad={1: 2}))
    with pytest.raises(MissingDataError, match="maximal"):
        obstruction_from_radial(StrataPoset(["a", "b"], set()), StratumIndexData(rad={"a": 1, "b": 1}))
    with pytest.raises(MissingDataError):
        bmps_function_obstruction(P, StratumIndexData(chi={1: 0}), 1)


# ---------- function obstruction ----------


def test_bmps_smooth_space():
    # one stratum, Eu_V = 1, chi(M_f) = 1 + (-1)^(n-1) mu
    P = StrataPoset(["C^n"], set())
    for n, mu in [(2, 1), (3, 1), (2, 4), (3, 2)]:
        chi = 1 + (-1) ** (n - 1) * mu
        assert bmps_function_obstruction(P, StratumIndexData(chi={"C^n": chi}, euv={"C^n": 1}), 1) == (-1) ** n * mu


def test_bmps_without_fibre_contributions():
    P = chain({(0, 1): 2})
    assert bmps_function_obstruction(P, StratumIndexData(chi={1: 0}, euv={1: 5}), 3) == 3


@pytest.mark.parametrize(
    "ring, equation, g",
    [
        (XYZ, "x^2+y^2+z^2", "x*y+z^2"),
        (XYZ, "x^2+y^2+z^2", "z"),
        (RingContext(["x", "y", "z", "w"]), "x^2+y^2+z^2+w^2", "x*y+w^2"),
    ],
)
def test_bmps_agrees_with_milnor_number_route(ring, equation, g):
    V = icis(ring, equation)
    g = P(ring, g)
    n = V.n
    sampler = GenericitySampler(seed=5)
    ell = sampler.linear_function(ring, 0)

    def chi(h):
        return 1 + (-1) ** (n - 1) * milnor_number_icis(ICISPresentation(ring, V.equations + (h,)))

    # strata {0} < V_reg; the complex link gives Eu_V(0), the point has empty Milnor fibre
    S = StrataPoset(["0", "reg"], {("0", "reg")})
    value = bmps_function_obstruction(S, StratumIndexData(chi={"reg": chi(g)}, euv={"reg": 1}), chi(ell))
    assert value == (-1) ** n * euler_obstruction_of_function_icis(V, g, sampler)
