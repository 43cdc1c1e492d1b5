"""Trapezoidal truth values over the unit interval.

Every epistemic state is stored as one quadruple (a, b, c, d) with
a <= b <= c <= d and core b, c inside [0, 1].  Intervals and triangles are
derived classifications (a=b and c=d, respectively b=c), not separate
representations.  A value whose support leaves [0, 1] keeps its original
parameters and carries a ``truncated`` flag meaning "interpreted as the
[0, 1]-truncation of this shape".
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import AlphaOutOfRange, CoreOutOfRange, OrderViolation, ParseError

#: default absolute tolerance for parameter comparison
DEFAULT_EPS = 1e-9


@dataclass(frozen=True)
class FuzzyTruth:
    """One truth value: quadruple plus truncation flag.

    Construct through :func:`make` / :func:`ifn` / :func:`tfn` / :func:`trfn`,
    which validate the parameters; connectives may build instances directly.
    """

    a: float
    b: float
    c: float
    d: float
    truncated: bool = False

    @property
    def params(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    @property
    def kind(self) -> str:
        """Derived class: 'ifn', 'tfn' or 'trfn'."""
        if self.a == self.b and self.c == self.d:
            return "ifn"
        if self.b == self.c:
            return "tfn"
        return "trfn"

    def render(self) -> str:
        """Canonical text form, re-emitting the derived class."""
        if self.kind == "ifn":
            return f"ifn({self.a!r},{self.d!r})"
        if self.kind == "tfn":
            return f"tfn({self.a!r},{self.b!r},{self.d!r})"
        return f"trfn({self.a!r},{self.b!r},{self.c!r},{self.d!r})"

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return self.render()


def make(a: float, b: float, c: float, d: float) -> FuzzyTruth:
    """Build a truth value from a trapezoidal quadruple.

    Raises OrderViolation unless a <= b <= c <= d and CoreOutOfRange unless
    b, c lie in [0, 1].  The truncated flag is set when the support leaves
    [0, 1]; the original parameters are preserved either way.
    """
    a, b, c, d = float(a), float(b), float(c), float(d)
    if not (a <= b <= c <= d):
        raise OrderViolation(f"parameters not ordered: ({a}, {b}, {c}, {d})")
    if not (0.0 <= b <= 1.0 and 0.0 <= c <= 1.0):
        raise CoreOutOfRange(f"core [{b}, {c}] outside [0, 1]")
    return FuzzyTruth(a, b, c, d, truncated=(a < 0.0 or d > 1.0))


def ifn(a: float, d: float) -> FuzzyTruth:
    """Interval value [a, d]."""
    return make(a, a, d, d)


def tfn(a: float, b: float, c: float) -> FuzzyTruth:
    """Triangular value with peak b on support [a, c]."""
    return make(a, b, b, c)


def trfn(a: float, b: float, c: float, d: float) -> FuzzyTruth:
    """Trapezoidal value; alias of :func:`make`."""
    return make(a, b, c, d)


#: total ignorance [0,1] and the two certainties
UNKNOWN = ifn(0.0, 1.0)
TRUE = ifn(1.0, 1.0)
FALSE = ifn(0.0, 0.0)


def membership(x: FuzzyTruth, v: float) -> float:
    """Piecewise-linear membership of ``v`` in ``x``.

    Truncated values return 0 outside [0, 1] and the untruncated membership
    inside.  At a degenerate jump (a=b or c=d) the plateau value 1 wins.
    """
    if x.truncated and not (0.0 <= v <= 1.0):
        return 0.0
    a, b, c, d = x.params
    if b <= v <= c:
        return 1.0
    if a <= v < b:
        return (v - a) / (b - a)
    if c < v <= d:
        return (d - v) / (d - c)
    return 0.0


@dataclass(frozen=True)
class AlphaCut:
    """Horizontal slice of a value at level alpha."""

    lower: float
    upper: float
    alpha: float


def alpha_cut(x: FuzzyTruth, alpha: float) -> AlphaCut:
    """Cut at level alpha, computed on the untruncated quadruple."""
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha {alpha} outside [0, 1]")
    a, b, c, d = x.params
    return AlphaCut(a + alpha * (b - a), d - alpha * (d - c), alpha)


def equal(x: FuzzyTruth, y: FuzzyTruth, eps: float = DEFAULT_EPS) -> bool:
    """Parameter-wise comparison within ``eps``.

    The truncation flag is derived from the parameters, so it adds no
    information here: a flag mismatch between parameter-close values can
    only be an eps-sized straddle of the [0, 1] boundary, which counts as
    equal.
    """
    return all(abs(p - q) <= eps for p, q in zip(x.params, y.params))


_VALUE_RE = re.compile(r"\s*(ifn|tfn|trfn)\s*\(([^()]*)\)\s*$")
_NUMBER_RE = re.compile(
    r"\s*(-?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(?:/\s*(\d+\.?\d*)\s*)?$"
)


def _parse_number(text: str) -> float:
    m = _NUMBER_RE.match(text)
    if not m:
        raise ParseError(f"malformed number {text!r}")
    value = float(m.group(1))
    if m.group(2) is not None:
        value /= float(m.group(2))
    return value


def parse_value(text: str) -> FuzzyTruth:
    """Parse ``ifn(a,d)`` / ``tfn(a,b,c)`` / ``trfn(a,b,c,d)`` literal text.

    Parameters are decimals, optionally simple fractions like 1/3.
    """
    m = _VALUE_RE.match(text)
    if not m:
        raise ParseError(f"malformed fuzzy literal {text!r}")
    name, argtext = m.group(1), m.group(2)
    args = [_parse_number(p) for p in argtext.split(",")]
    arity = {"ifn": 2, "tfn": 3, "trfn": 4}[name]
    if len(args) != arity:
        raise ParseError(f"{name} takes {arity} parameters, got {len(args)}")
    return {"ifn": ifn, "tfn": tfn, "trfn": trfn}[name](*args)
