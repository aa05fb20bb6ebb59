"""Reader for ``.prob`` problem files.

Line grammar (``#`` starts a comment, blank lines are ignored)::

    vars: x, y, z
    let NAME = POLY | LIST            LIST := '[' (ITEM (',' ITEM)*)? ']'
                                      ITEM := LIST | POLY | NAME-of-a-list
    strata: A, B, C
    order: A < B, A < C, B < C        every strict pair, transitively closed
    n: A B = 2                        n_{A,B}
    data: A n=1 eu=2 rad=3 chi=0 euv=1
    task: SUBCOMMAND ARG ...

A 1-form is the list of its coefficients: ``[x, y, z]`` is x dx + y dy + z dz.
A collection is a list of groups of 1-forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import ParseError
from .parse import parse_poly
from .poly import Polynomial, RingContext
from .strata import StrataPoset, StratumIndexData

Value = Union[Polynomial, list]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_DATA_KEYS = ("n", "eu", "rad", "chi", "euv")


@dataclass
class Problem:
    ring: RingContext | None = None
    bindings: dict[str, Value] = field(default_factory=dict)
    strata: list[str] = field(default_factory=list)
    order: list[tuple[str, str]] = field(default_factory=list)
    n_values: dict[tuple[str, str], int] = field(default_factory=dict)
    data: StratumIndexData = field(default_factory=StratumIndexData)
    task: str | None = None
    args: list[str] = field(default_factory=list)

    def poset(self) -> StrataPoset:
        if not self.strata:
            raise ParseError("task needs a 'strata:' line")
        return StrataPoset(self.strata, self.order, self.n_values)

    def value(self, name: str) -> Value:
        if name not in self.bindings:
            raise ParseError(f"undefined binding {name!r}")
        return self.bindings[name]


def _split_top(text: str, line_no: int) -> list[str]:
    """Split on commas that are not nested in brackets or parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
            if depth < 0:
                raise ParseError(f"line {line_no}: unbalanced {ch!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ParseError(f"line {line_no}: unbalanced brackets")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _parse_value(text: str, prob: Problem, line_no: int) -> Value:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"line {line_no}: list must end with ']'")
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [_parse_value(item, prob, line_no) for item in _split_top(inner, line_no)]
    if _NAME.match(text) and isinstance(prob.bindings.get(text), list):
        return prob.bindings[text]
    if prob.ring is None:
        raise ParseError(f"line {line_no}: 'vars:' must be declared before polynomials")
    polys = {k: v for k, v in prob.bindings.items() if isinstance(v, Polynomial)}
    try:
        return parse_poly(text, prob.ring, polys)
    except ParseError as exc:
        raise ParseError(f"line {line_no}: {exc}") from None


def _names(text: str, line_no: int) -> list[str]:
    out = [t.strip() for t in text.split(",") if t.strip()]
    for t in out:
        if not _NAME.match(t):
            raise ParseError(f"line {line_no}: bad identifier {t!r}")
    return out


def parse_problem(text: str) -> Problem:
    prob = Problem()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("let "):
            m = re.match(r"let\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"line {line_no}: expected 'let NAME = VALUE'")
            name, body = m.groups()
            if prob.ring is not None and name in prob.ring.variables:
                raise ParseError(f"line {line_no}: binding {name!r} shadows a variable")
            prob.bindings[name] = _parse_value(body, prob, line_no)
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {line_no}: cannot parse {raw.strip()!r}")
        key, rest = key.strip(), rest.strip()
        if key == "vars":
            if prob.ring is not None:
                raise ParseError(f"line {line_no}: 'vars:' declared twice")
            try:
                prob.ring = RingContext(_names(rest, line_no))
            except ValueError as exc:
                raise ParseError(f"line {line_no}: {exc}") from None
        elif key == "strata":
            prob.strata.extend(_names(rest, line_no))
        elif key == "order":
            for pair in rest.split(","):
                lo, lt, hi = pair.partition("<")
                if not lt or not _NAME.match(lo.strip()) or not _NAME.match(hi.strip()):
                    raise ParseError(f"line {line_no}: expected 'A < B' pairs")
                prob.order.append((lo.strip(), hi.strip()))
        elif key == "n":
            m = re.match(r"(\w+)\s+(\w+)\s*=\s*(-?\d+)$", rest)
            if not m:
                raise ParseError(f"line {line_no}: expected 'n: A B = INT'")
            prob.n_values[(m.group(1), m.group(2))] = int(m.group(3))
        elif key == "data":
            fields = rest.split()
            if not fields:
                raise ParseError(f"line {line_no}: expected 'data: STRATUM key=INT ...'")
            stratum = fields[0]
            for item in fields[1:]:
                m = re.match(r"(\w+)=(-?\d+)$", item)
                if not m or m.group(1) not in _DATA_KEYS:
                    raise ParseError(f"line {line_no}: bad data item {item!r}")
                getattr(prob.data, m.group(1))[stratum] = int(m.group(2))
        elif key == "task":
            if prob.task is not None:
                raise ParseError(f"line {line_no}: exactly one task is allowed")
            words = rest.split()
            if not words:
                raise ParseError(f"line {line_no}: empty task")
            prob.task, prob.args = words[0], words[1:]
        else:
            raise ParseError(f"line {line_no}: unknown directive {key!r}")
    if prob.task is None:
        raise ParseError("problem file has no 'task:' line")
    return prob
