"""``singidx`` command line front end.

Usage: ``singidx SUBCOMMAND --file PROBLEM [--format text|json] [--oracle]
[--oracle-cap D] [--seed S] [--trials T] [--height H]``.

Exit codes: 0 success, 1 failed mathematical precondition, 2 parse or usage
error, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Callable, Sequence

from .errors import InputError, MathError, ParseError, SingidxError
from .indices import (
    CollectionSpec,
    GenericitySampler,
    ICISPresentation,
    OneFormGerm,
    PoleChain,
    Provenance,
    chern_obstruction_collection,
    collection_index,
    euler_obstruction_of_function_icis,
    gsv_index_1form,
    gsv_index_vf_hypersurface,
    homological_index_1form_icis,
    index_elk,
    index_holomorphic_vf,
    meromorphic_index,
    milnor_number_hypersurface,
    milnor_number_icis,
    radial_index_1form_icis,
)
from .local_algebra import DEFAULT_ORACLE_CAP, IdealPresentation, colength, colength_truncation_oracle
from .poly import Polynomial
from .problem import Problem, parse_problem
from .quadratic_forms import VectorFieldGerm
from .report import STATUS_ERROR, STATUS_FAILED, Report, ProvenanceEntry, emit_report
from .strata import bmps_function_obstruction, mobius_inverse, obstruction_from_radial, radial_from_obstructions

DEFAULT_SEED = 20240601

EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_ORACLE = 0, 1, 2, 3


# ---------- argument coercion ----------


def _poly(prob: Problem, name: str) -> Polynomial:
    v = prob.value(name)
    if not isinstance(v, Polynomial):
        raise ParseError(f"{name!r} must be a polynomial")
    return v


def _poly_list(prob: Problem, name: str) -> list[Polynomial]:
    v = prob.value(name)
    if not isinstance(v, list) or not all(isinstance(p, Polynomial) for p in v):
        raise ParseError(f"{name!r} must be a list of polynomials")
    return v


def _vector(prob: Problem, name: str) -> list[Polynomial]:
    v = _poly_list(prob, name)
    if len(v) != prob.ring.dimension:
        raise ParseError(f"{name!r} needs {prob.ring.dimension} entries, got {len(v)}")
    return v


def _icis(prob: Problem, name: str) -> ICISPresentation:
    try:
        return ICISPresentation(prob.ring, _poly_list(prob, name))
    except ValueError as exc:
        raise ParseError(f"{name!r}: {exc}") from None


def _form(prob: Problem, name: str) -> OneFormGerm:
    return OneFormGerm(prob.ring, _vector(prob, name))


def _field(prob: Problem, name: str) -> VectorFieldGerm:
    return VectorFieldGerm(prob.ring, _vector(prob, name))


def _collection(prob: Problem, name: str, V: ICISPresentation) -> CollectionSpec:
    groups = prob.value(name)
    if not isinstance(groups, list) or not all(isinstance(g, list) for g in groups):
        raise ParseError(f"{name!r} must be a list of groups of 1-forms")
    forms = []
    for g in groups:
        group = []
        for w in g:
            if not isinstance(w, list) or len(w) != prob.ring.dimension or not all(isinstance(p, Polynomial) for p in w):
                raise ParseError(f"{name!r}: every 1-form needs {prob.ring.dimension} polynomial coefficients")
            group.append(OneFormGerm(prob.ring, w))
        forms.append(group)
    try:
        return CollectionSpec.from_groups(V.n, forms)
    except ValueError as exc:
        raise ParseError(f"{name!r}: {exc}") from None


def _integer(prob: Problem, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        pass
    p = _poly(prob, token)
    if not p.is_constant() or p.constant_term().denominator != 1:
        raise ParseError(f"{token!r} must be an integer constant")
    return int(p.constant_term())


# ---------- subcommands ----------

# name -> (arity as (min, max), needs ring, handler(prob, args, sampler, provenance))
Handler = Callable[[Problem, list[str], GenericitySampler, Provenance], object]
COMMANDS: dict[str, tuple[tuple[int, int], bool, Handler]] = {
    "vf-index": ((1, 1), True, lambda p, a, s, pr: index_holomorphic_vf(_field(p, a[0]), pr)),
    "elk": ((1, 1), True, lambda p, a, s, pr: index_elk(_field(p, a[0]), pr)),
    "gsv": ((2, 2), True, lambda p, a, s, pr: gsv_index_1form(_icis(p, a[0]), _form(p, a[1]), pr)),
    "milnor": ((1, 1), True, lambda p, a, s, pr: milnor_number_hypersurface(_poly(p, a[0]), pr)),
    "milnor-icis": ((1, 1), True, lambda p, a, s, pr: milnor_number_icis(_icis(p, a[0]), pr)),
    "gm-hypersurface": (
        (2, 2),
        True,
        lambda p, a, s, pr: gsv_index_vf_hypersurface(_poly(p, a[0]), _field(p, a[1]), pr),
    ),
    "homological": ((2, 2), True, lambda p, a, s, pr: homological_index_1form_icis(_icis(p, a[0]), _form(p, a[1]), pr)),
    "radial": ((2, 2), True, lambda p, a, s, pr: radial_index_1form_icis(_icis(p, a[0]), _form(p, a[1]), pr)),
    "euler-obstruction": (
        (2, 2),
        True,
        lambda p, a, s, pr: euler_obstruction_of_function_icis(_icis(p, a[0]), _poly(p, a[1]), s, pr),
    ),
    "meromorphic": (
        (2, 3),
        True,
        lambda p, a, s, pr: meromorphic_index(
            _icis(p, a[0]), _form(p, a[1]), PoleChain(p.ring, _poly_list(p, a[2]) if len(a) > 2 else []), pr
        ),
    ),
    "collection": ((2, 2), True, lambda p, a, s, pr: _run_collection(p, a, pr)),
    "chern": ((2, 2), True, lambda p, a, s, pr: _run_chern(p, a, s, pr)),
    "mobius": ((0, 0), False, lambda p, a, s, pr: _run_mobius(p)),
    "radial-from-eu": ((0, 1), False, lambda p, a, s, pr: radial_from_obstructions(p.poset(), p.data, a[0] if a else None)),
    "eu-from-radial": ((0, 1), False, lambda p, a, s, pr: obstruction_from_radial(p.poset(), p.data, a[0] if a else None)),
    "bmps": ((1, 1), False, lambda p, a, s, pr: bmps_function_obstruction(p.poset(), p.data, _integer(p, a[0]))),
    "oracle-colength": ((1, 1), True, lambda p, a, s, pr: _run_colength(p, a, pr)),
}


def _run_collection(prob, args, pr):
    V = _icis(prob, args[0])
    return collection_index(V, _collection(prob, args[1], V), pr)


def _run_chern(prob, args, sampler, pr):
    V = _icis(prob, args[0])
    return chern_obstruction_collection(V, _collection(prob, args[1], V), sampler, pr)


def _run_mobius(prob):
    P = prob.poset()
    m = mobius_inverse(P)
    rows = [[i, k, m[(i, k)]] for i in P.elements for k in P.elements if (i, k) in m]
    return {"mobius": rows}


def _run_colength(prob, args, pr):
    ideal = IdealPresentation(prob.ring, _poly_list(prob, args[0]))
    value = colength(ideal).value
    pr.add("ideal", ideal, value)
    if value is None:
        raise MathError(f"ideal {ideal} has infinite colength")
    return value


# ---------- driver ----------


def _seed(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("SINGIDX_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"SINGIDX_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="singidx", description="Indices of vector fields and 1-forms on singular germs.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--file", required=True, help="problem file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--oracle", action="store_true", help="recompute every colength with the truncation oracle")
        p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP, metavar="D")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--trials", type=int, default=3)
        p.add_argument("--height", type=int, default=7)
    return parser


def _oracle_value(ideal: IdealPresentation, cap: int):
    res = colength_truncation_oracle(ideal, cap)
    return res.value if res.finite else str(res)


def execute(prob: Problem, command: str, *, seed: int, oracle: bool = False, oracle_cap: int = DEFAULT_ORACLE_CAP, trials: int = 3, height: int = 7) -> tuple[Report, int]:
    """Run the task of ``prob``; returns the report and the exit code."""
    report = Report(task=" ".join([prob.task] + prob.args), seed=seed, oracle_checked=oracle)
    start = time.perf_counter()
    code = EXIT_OK
    prov = Provenance()
    try:
        if prob.task != command:
            raise ParseError(f"problem file task is {prob.task!r}, not {command!r}")
        (lo, hi), needs_ring, handler = COMMANDS[command]
        if not lo <= len(prob.args) <= hi:
            raise ParseError(f"{command} takes {lo}..{hi} arguments, got {len(prob.args)}")
        if needs_ring and prob.ring is None:
            raise ParseError(f"{command} needs a 'vars:' line")
        sampler = GenericitySampler(seed=seed, trials=trials, height=height)
        report.result = handler(prob, prob.args, sampler, prov)
    except InputError as exc:
        report.error, code = str(exc), EXIT_USAGE
    except MathError as exc:
        report.error, code = str(exc), EXIT_MATH
    except ValueError as exc:
        report.error, code = str(exc), EXIT_USAGE
    except SingidxError as exc:
        report.error, code = f"internal error: {exc}", EXIT_MATH
    for rec in prov.records:
        entry = ProvenanceEntry(rec.label, [str(g) for g in rec.ideal.generators], rec.colength)
        if oracle:
            entry.oracle = _oracle_value(rec.ideal, oracle_cap)
        report.provenance.append(entry)
    report.notes = list(prov.notes)
    if code != EXIT_OK:
        report.status = STATUS_ERROR
    if oracle and not all(p.oracle_agrees for p in report.provenance):
        report.status, code = STATUS_FAILED, EXIT_ORACLE
    report.timing = round(time.perf_counter() - start, 6)
    return report, code


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout.buffer
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        seed = _seed(ns.seed)
        if ns.oracle_cap < 2:
            raise ParseError("--oracle-cap must be at least 2")
        if ns.trials < 3:
            raise ParseError("--trials must be at least 3")
        with open(ns.file, encoding="utf-8") as fh:
            prob = parse_problem(fh.read())
    except (OSError, InputError) as exc:
        report = Report(task=ns.command, seed=_safe_seed(ns.seed), status=STATUS_ERROR, error=str(exc))
        stdout.write(emit_report(report, ns.format))
        return EXIT_USAGE
    report, code = execute(
        prob, ns.command, seed=seed, oracle=ns.oracle, oracle_cap=ns.oracle_cap, trials=ns.trials, height=ns.height
    )
    stdout.write(emit_report(report, ns.format))
    return code


def _safe_seed(explicit):
    try:
        return _seed(explicit)
    except ParseError:
        return DEFAULT_SEED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
