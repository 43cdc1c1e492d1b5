"""Syntax, parser and grounder for weighted rule programs.

Concrete grammar (no function symbols, comments start with ``%``)::

    rule    := [label ':'] literal ['<-' item (',' item)*] '.' ['[' fuzzy ']']
    item    := 'not' literal | literal | fuzzy
    literal := ['-'] ident ['(' term (',' term)* ')']
    term    := Variable | ident | fuzzy
    fuzzy   := ('ifn'|'tfn'|'trfn') '(' number (',' number)* ')'

Identifiers start lowercase, variables uppercase.  A missing weight means
ifn(1,1); an empty body is the fold unit ifn(1,1).  Fuzzy numbers may occur
as body items (inline evidence) and as inert constants in argument
positions.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import CoreOutOfRange, DomainError, OrderViolation, ParseError, UnsafeRule
from .truthspace import TRUE, FuzzyTruth, ifn, tfn, trfn


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __repr__(self):
        return self.name


Term = Var | Const | FuzzyTruth


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple = ()

    @property
    def is_ground(self) -> bool:
        return not any(isinstance(t, Var) for t in self.args)

    def render(self) -> str:
        if not self.args:
            return self.predicate
        inner = ",".join(_render_term(t) for t in self.args)
        return f"{self.predicate}({inner})"

    def __repr__(self):
        return self.render()


@dataclass(frozen=True)
class Literal:
    atom: Atom
    negated: bool = False

    @property
    def is_ground(self) -> bool:
        return self.atom.is_ground

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def render(self) -> str:
        return ("-" if self.negated else "") + self.atom.render()

    def __repr__(self):
        return self.render()


@dataclass(frozen=True)
class Naf:
    """Negation-as-failure marker around a literal in a rule body."""

    literal: Literal

    def render(self) -> str:
        return f"not {self.literal.render()}"

    def __repr__(self):
        return self.render()


def _render_term(t) -> str:
    if isinstance(t, FuzzyTruth):
        return t.render()
    return t.name


@dataclass(frozen=True)
class Rule:
    """One weighted rule; body kept in written order (folding is ordered)."""

    head: Literal
    body: tuple = ()
    weight: FuzzyTruth = TRUE
    label: str | None = None

    @property
    def positive_body(self) -> tuple:
        """Literals and inline fuzzy constants, in written order."""
        return tuple(x for x in self.body if not isinstance(x, Naf))

    @property
    def naf_body(self) -> tuple:
        return tuple(x.literal for x in self.body if isinstance(x, Naf))

    @property
    def is_fact(self) -> bool:
        return all(isinstance(x, FuzzyTruth) for x in self.body)

    @property
    def is_ground(self) -> bool:
        return self.head.is_ground and all(
            isinstance(x, FuzzyTruth) or x.is_ground
            for x in (i.literal if isinstance(i, Naf) else i for i in self.body)
        )

    def render(self) -> str:
        parts = []
        if self.label:
            parts.append(f"{self.label}: ")
        parts.append(self.head.render())
        items = [x.render() for x in self.body]
        if items:
            parts.append(" <- " + ", ".join(items))
        parts.append(".")
        if self.weight.params != (1.0, 1.0, 1.0, 1.0):
            parts.append(f" [{self.weight.render()}]")
        return "".join(parts)

    def __repr__(self):
        return self.render()


@dataclass(frozen=True)
class Program:
    rules: tuple = ()

    def render(self) -> str:
        return "\n".join(r.render() for r in self.rules) + ("\n" if self.rules else "")


@dataclass(frozen=True)
class GroundProgram:
    """Variable-free program plus an index from head literal to its rules."""

    rules: tuple = ()
    index: dict = field(default_factory=dict, compare=False)

    @property
    def head_literals(self) -> tuple:
        return tuple(self.index.keys())

    @property
    def literals(self) -> tuple:
        """All ground literals occurring anywhere, in first-occurrence order."""
        seen: dict[Literal, None] = {}
        for r in self.rules:
            seen.setdefault(r.head)
            for item in r.body:
                if isinstance(item, Naf):
                    seen.setdefault(item.literal)
                elif isinstance(item, Literal):
                    seen.setdefault(item)
        return tuple(seen)

    def rules_for(self, literal: Literal) -> tuple:
        return tuple(self.rules[i] for i in self.index.get(literal, ()))

    @property
    def has_naf(self) -> bool:
        return any(r.naf_body for r in self.rules)

    def render(self) -> str:
        return "\n".join(r.render() for r in self.rules) + ("\n" if self.rules else "")


# --------------------------------------------------------------------------
# Lexer
# --------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<number>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)
  | (?P<arrow><-)
  | (?P<ident>[a-z]\w*)
  | (?P<var>[A-Z]\w*)
  | (?P<punct>[().,\[\]:/-])
""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if not m:
            raise ParseError(
                f"unexpected character {source[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        text = m.group()
        if kind not in ("ws", "comment"):
            col = pos - line_start + 1
            if kind == "punct" or kind == "arrow":
                kind = text
            tokens.append(_Token(kind, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, len(source) - line_start + 1))
    return tokens


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

_FUZZY_NAMES = {"ifn": (ifn, 2), "tfn": (tfn, 3), "trfn": (trfn, 4)}


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def _advance(self) -> _Token:
        tok = self.cur
        self.pos += 1
        return tok

    def _expect(self, kind: str) -> _Token:
        if self.cur.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {self.cur.text!r}",
                self.cur.line,
                self.cur.column,
            )
        return self._advance()

    def _error(self, message: str):
        raise ParseError(message, self.cur.line, self.cur.column)

    def parse_program(self) -> Program:
        rules = []
        while self.cur.kind != "eof":
            rules.append(self._rule())
        return Program(tuple(rules))

    def _rule(self) -> Rule:
        label = None
        if (
            self.cur.kind == "ident"
            and self.tokens[self.pos + 1].kind == ":"
        ):
            label = self._advance().text
            self._advance()
        head = self._literal()
        body: list = []
        if self.cur.kind == "<-":
            self._advance()
            body.append(self._body_item())
            while self.cur.kind == ",":
                self._advance()
                body.append(self._body_item())
        self._expect(".")
        weight = TRUE
        if self.cur.kind == "[":
            self._advance()
            weight = self._fuzzy_value()
            self._expect("]")
        return Rule(head, tuple(body), weight, label)

    def _body_item(self):
        if self.cur.kind == "ident" and self.cur.text == "not":
            self._advance()
            return Naf(self._literal())
        if self.cur.kind == "ident" and self.cur.text in _FUZZY_NAMES:
            return self._fuzzy_value()
        return self._literal()

    def _literal(self) -> Literal:
        negated = False
        if self.cur.kind == "-":
            self._advance()
            negated = True
        if self.cur.kind != "ident":
            self._error(f"expected a literal, found {self.cur.text!r}")
        if self.cur.text in _FUZZY_NAMES:
            self._error(f"{self.cur.text!r} is reserved for fuzzy literals")
        name = self._advance().text
        args: list = []
        if self.cur.kind == "(":
            self._advance()
            args.append(self._term())
            while self.cur.kind == ",":
                self._advance()
                args.append(self._term())
            self._expect(")")
        return Literal(Atom(name, tuple(args)), negated)

    def _term(self):
        if self.cur.kind == "var":
            return Var(self._advance().text)
        if self.cur.kind == "ident":
            if self.cur.text in _FUZZY_NAMES:
                return self._fuzzy_value()
            tok = self._advance()
            if self.cur.kind == "(":
                raise ParseError(
                    f"function symbol {tok.text!r} is not allowed", tok.line, tok.column
                )
            return Const(tok.text)
        self._error(f"expected a term, found {self.cur.text!r}")

    def _fuzzy_value(self) -> FuzzyTruth:
        tok = self._expect("ident")
        ctor, arity = _FUZZY_NAMES[tok.text]
        self._expect("(")
        args = [self._number()]
        while self.cur.kind == ",":
            self._advance()
            args.append(self._number())
        self._expect(")")
        if len(args) != arity:
            raise ParseError(
                f"{tok.text} takes {arity} parameters, got {len(args)}",
                tok.line,
                tok.column,
            )
        try:
            return ctor(*args)
        except (OrderViolation, CoreOutOfRange) as exc:
            raise DomainError(str(exc), tok.line, tok.column) from exc

    def _number(self) -> float:
        sign = 1.0
        if self.cur.kind == "-":
            self._advance()
            sign = -1.0
        value = sign * float(self._expect("number").text)
        if self.cur.kind == "/":
            self._advance()
            value /= float(self._expect("number").text)
        return value


def parse(source: str) -> Program:
    """Parse program text; raises ParseError/DomainError with location."""
    return _Parser(source).parse_program()


# --------------------------------------------------------------------------
# Grounding
# --------------------------------------------------------------------------


def _rule_literals(rule: Rule):
    yield rule.head
    for item in rule.body:
        if isinstance(item, Naf):
            yield item.literal
        elif isinstance(item, Literal):
            yield item


def _variables(literal: Literal) -> set[str]:
    return {t.name for t in literal.atom.args if isinstance(t, Var)}


def _check_safety(rule: Rule):
    positive = set()
    for item in rule.positive_body:
        if isinstance(item, Literal):
            positive |= _variables(item)
    needed = _variables(rule.head)
    for lit in rule.naf_body:
        needed |= _variables(lit)
    for var in sorted(needed - positive):
        raise UnsafeRule(var, rule)


def _substitute_literal(literal: Literal, binding: dict) -> Literal:
    args = tuple(
        binding[t.name] if isinstance(t, Var) else t for t in literal.atom.args
    )
    return Literal(Atom(literal.atom.predicate, args), literal.negated)


def _substitute(rule: Rule, binding: dict) -> Rule:
    body = tuple(
        item
        if isinstance(item, FuzzyTruth)
        else Naf(_substitute_literal(item.literal, binding))
        if isinstance(item, Naf)
        else _substitute_literal(item, binding)
        for item in rule.body
    )
    return Rule(_substitute_literal(rule.head, binding), body, rule.weight, rule.label)


def ground(program: Program) -> GroundProgram:
    """Herbrand grounding over the program's constants.

    Raises UnsafeRule when a head or naf variable has no positive body
    occurrence.  Propositional programs ground to themselves.
    """
    universe: dict = {}
    for rule in program.rules:
        for literal in _rule_literals(rule):
            for term in literal.atom.args:
                if not isinstance(term, Var):
                    universe.setdefault(term)
    constants = tuple(universe)

    ground_rules: list[Rule] = []
    for rule in program.rules:
        _check_safety(rule)
        variables = sorted({v for lit in _rule_literals(rule) for v in _variables(lit)})
        if not variables:
            ground_rules.append(rule)
            continue
        for combo in itertools.product(constants, repeat=len(variables)):
            ground_rules.append(_substitute(rule, dict(zip(variables, combo))))

    index: dict[Literal, tuple] = {}
    for i, rule in enumerate(ground_rules):
        index.setdefault(rule.head, ())
        index[rule.head] += (i,)
    return GroundProgram(tuple(ground_rules), index)
