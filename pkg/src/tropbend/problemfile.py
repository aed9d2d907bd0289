"""Problem files for the CLI: a field header, a valuation header, a variable
list, a block of generator polynomials, and an optional options block.

    field: Q | Q_p(5) | Q(t)
    valuation: trivial | p-adic | t-adic
    vars: x y z
    gens:
    x^2 + x*y + y^2
    options:
    max_degree: 3

Polynomials use +, -, *, /, ^ and parentheses; coefficients are integer or
rational literals (1/2 parses as division), and in Q(t) the name `t` is the
field parameter.  Parse errors carry 1-based line and column numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ProblemParseError
from .fields import (
    QQ,
    QQt,
    PAdicValuation,
    RationalFunction,
    TAdicValuation,
    TrivialValuation,
    Valuation,
)
from .polynomials import Poly

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str, line_no: int) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ProblemParseError(f"unexpected character {text[pos]!r}", line_no, pos + 1)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


class _PolyParser:
    """Recursive-descent parser producing a Poly over the declared field."""

    def __init__(self, tokens, line_no: int, var_names: Sequence[str], field_obj):
        self.tokens = tokens
        self.i = 0
        self.line = line_no
        self.vars = list(var_names)
        self.field = field_obj

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, 0)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _error(self, message, col):
        raise ProblemParseError(message, self.line, col)

    def _constant(self, value) -> Poly:
        return Poly(len(self.vars), {tuple([0] * len(self.vars)): value})

    def parse(self) -> Poly:
        result = self.expr()
        kind, text, col = self._peek()
        if kind is not None:
            self._error(f"unexpected token {text!r}", col)
        return result

    def expr(self) -> Poly:
        value = self.term()
        while True:
            kind, text, _ = self._peek()
            if kind == "op" and text in "+-":
                self._next()
                rhs = self.term()
                value = value - rhs if text == "-" else value + rhs
            else:
                return value

    def term(self) -> Poly:
        value = self.factor()
        while True:
            kind, text, col = self._peek()
            if kind == "op" and text in "*/":
                self._next()
                rhs = self.factor()
                if text == "*":
                    value = value * rhs
                else:
                    if set(rhs.terms) - {tuple([0] * rhs.nvars)}:
                        self._error("division by a non-constant polynomial", col)
                    if not rhs:
                        self._error("division by zero", col)
                    inv = self.field.one() / rhs.terms[tuple([0] * rhs.nvars)]
                    value = value.scale(inv)
            else:
                return value

    def factor(self) -> Poly:
        kind, text, col = self._peek()
        if kind == "op" and text in "+-":
            self._next()
            inner = self.factor()
            return -inner if text == "-" else inner
        value = self.atom()
        kind, text, col = self._peek()
        if kind == "op" and text == "^":
            self._next()
            ekind, etext, ecol = self._next()
            if ekind != "int":
                self._error("exponent must be a natural number", ecol)
            out = self._constant(self.field.one())
            for _ in range(int(etext)):
                out = out * value
            return out
        return value

    def atom(self) -> Poly:
        kind, text, col = self._next()
        if kind == "int":
            return self._constant(self.field.from_int(int(text)))
        if kind == "name":
            if text in self.vars:
                expo = [0] * len(self.vars)
                expo[self.vars.index(text)] = 1
                return Poly(len(self.vars), {tuple(expo): self.field.one()})
            if text == "t" and self.field is QQt:
                return self._constant(RationalFunction.t())
            self._error(f"unknown variable {text!r}", col)
        if kind == "op" and text == "(":
            value = self.expr()
            kind, text, col = self._next()
            if text != ")":
                self._error("expected ')'", col)
            return value
        self._error(f"unexpected token {text!r}" if text else "unexpected end of input", col)


def parse_polynomial(text: str, var_names: Sequence[str], field_obj, line_no: int = 1) -> Poly:
    tokens = _tokenize(text, line_no)
    if not tokens:
        raise ProblemParseError("empty polynomial", line_no, 1)
    return _PolyParser(tokens, line_no, var_names, field_obj).parse()


@dataclass
class ProblemFile:
    field_name: str
    field: object
    valuation: Valuation
    var_names: List[str]
    gens: List[Poly]
    gen_texts: List[str]
    options: Dict[str, str] = field(default_factory=dict)


_FIELD_RE = re.compile(r"^(Q)$|^Q_p\((\d+)\)$|^(Q\(t\))$")


def _parse_field(text: str, line_no: int):
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ProblemParseError(f"unknown field {text.strip()!r} (expected Q, Q_p(p), or Q(t))", line_no, 8)
    if m.group(1):
        return "Q", QQ, TrivialValuation(QQ)
    if m.group(2):
        p = int(m.group(2))
        return f"Q_p({p})", QQ, PAdicValuation(p)
    return "Q(t)", QQt, TAdicValuation()


def parse_problem(text: str) -> ProblemFile:
    lines = text.splitlines()
    field_name = None
    field_obj = None
    default_valuation: Optional[Valuation] = None
    valuation: Optional[Valuation] = None
    var_names: Optional[List[str]] = None
    gens: List[Poly] = []
    gen_texts: List[str] = []
    options: Dict[str, str] = {}
    mode = "header"
    for idx, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        lowered = stripped.lower()
        if lowered.startswith("field:"):
            field_name, field_obj, default_valuation = _parse_field(stripped[6:], idx)
            continue
        if lowered.startswith("valuation:"):
            name = stripped[10:].strip().lower()
            if field_obj is None:
                raise ProblemParseError("valuation header before field header", idx, 1)
            if name == "trivial":
                valuation = TrivialValuation(field_obj)
            elif name in ("p-adic", "padic"):
                if not isinstance(default_valuation, PAdicValuation):
                    raise ProblemParseError("p-adic valuation needs field Q_p(p)", idx, 12)
                valuation = default_valuation
            elif name in ("t-adic", "tadic"):
                if field_obj is not QQt:
                    raise ProblemParseError("t-adic valuation needs field Q(t)", idx, 12)
                valuation = TAdicValuation()
            else:
                raise ProblemParseError(f"unknown valuation {name!r}", idx, 12)
            continue
        if lowered.startswith("vars:"):
            var_names = stripped[5:].split()
            if not var_names:
                raise ProblemParseError("empty variable list", idx, 6)
            for name in var_names:
                if not re.match(r"^[A-Za-z_][A-Za-z_0-9]*$", name):
                    raise ProblemParseError(f"bad variable name {name!r}", idx, 6)
            if field_obj is QQt and "t" in var_names:
                raise ProblemParseError("'t' is the field parameter of Q(t), not a variable", idx, 6)
            continue
        if lowered.startswith("gens:"):
            mode = "gens"
            continue
        if lowered.startswith("options:"):
            mode = "options"
            continue
        if mode == "gens":
            if field_obj is None or var_names is None:
                raise ProblemParseError("gens block before field/vars headers", idx, 1)
            gens.append(parse_polynomial(line, var_names, field_obj, idx))
            gen_texts.append(stripped)
            continue
        if mode == "options":
            if ":" not in stripped:
                raise ProblemParseError("options are 'name: value' lines", idx, 1)
            key, value = stripped.split(":", 1)
            options[key.strip()] = value.strip()
            continue
        raise ProblemParseError(f"unexpected line {stripped!r}", idx, 1)
    if field_obj is None:
        raise ProblemParseError("missing 'field:' header", max(len(lines), 1), 1)
    if var_names is None:
        raise ProblemParseError("missing 'vars:' header", max(len(lines), 1), 1)
    if valuation is None:
        valuation = default_valuation
    return ProblemFile(field_name, field_obj, valuation, var_names, gens, gen_texts, options)


def homogenize(problem: ProblemFile) -> Tuple[List[Poly], List[str], bool]:
    """Homogenize the generators if any is inhomogeneous, appending a fresh
    variable.  Returns (polys, names, changed)."""
    if all(g.is_homogeneous() for g in problem.gens if g):
        return problem.gens, list(problem.var_names), False
    fresh = next(n for n in ("w", "h", "u", "v_h") if n not in problem.var_names)
    names = list(problem.var_names) + [fresh]
    out = []
    for g in problem.gens:
        d = g.degree()
        out.append(
            Poly(
                g.nvars + 1,
                {m + (d - sum(m),): c for m, c in g.terms.items()},
            )
        )
    return out, names, True


def parse_point(text: str, field_obj, line_no: int = 1):
    """Comma-separated field elements (polynomial expressions allowed)."""
    coords = []
    for chunk in text.split(","):
        poly = parse_polynomial(chunk.strip(), [], field_obj, line_no)
        const = tuple()
        coords.append(poly.terms.get(const, field_obj.zero()))
    return coords
