"""Exact-rational enumeration of the restricted values over a lattice.

Used by the ``table`` CLI subcommand: every interval, triangular and
trapezoidal value whose parameters live on {0, 1/n, ..., 1} together with
its truth and uncertainty degrees, computed in exact rational arithmetic.
For n = 3 each row is cross-checked against a stored reference table and
flagged when the two disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement


def rational_measures(a: Fraction, b: Fraction, c: Fraction, d: Fraction):
    """(t, k) of a restricted quadruple, exactly."""
    k = Fraction(d + c - b - a, 2)
    if k == 0:
        return a, k
    s_left = a * a + a * b + b * b
    s_right = c * c + c * d + d * d
    t = (s_right - s_left) / (3 * (d + c - b - a))
    return t, k


@dataclass(frozen=True)
class TableRow:
    kind: str
    params: tuple
    t: Fraction
    k: Fraction
    reference: tuple | None = None

    @property
    def flagged(self) -> bool:
        return self.reference is not None and self.reference != (self.t, self.k)

    def value_text(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"{self.kind}({inner})"


def _row(kind: str, params: tuple, quad: tuple, reference_map) -> TableRow:
    t, k = rational_measures(*quad)
    ref = reference_map.get((kind, params))
    if ref is not None and ref == (t, k):
        ref = None
    return TableRow(kind, params, t, k, ref)


def enumerate_lattice(n: int, reference_map=None) -> list[TableRow]:
    """All restricted lattice values as rows: intervals, triangles, trapezoids."""
    if n < 1:
        raise ValueError("lattice step must be 1/n with n >= 1")
    reference_map = reference_map if reference_map is not None else {}
    points = [Fraction(i, n) for i in range(n + 1)]
    rows: list[TableRow] = []
    for a, d in combinations_with_replacement(points, 2):
        rows.append(_row("ifn", (a, d), (a, a, d, d), reference_map))
    for a, b, c in combinations_with_replacement(points, 3):
        if a < c:  # a = b = c is already an interval row
            rows.append(_row("tfn", (a, b, c), (a, b, b, c), reference_map))
    for a, b, c, d in combinations_with_replacement(points, 4):
        if b < c and not (a == b and c == d):  # proper trapezoids only
            rows.append(_row("trfn", (a, b, c, d), (a, b, c, d), reference_map))
    return rows


def _f(p: int, q: int = 1) -> Fraction:
    return Fraction(p, q)


#: reference (t, k) pairs for the n = 3 lattice, keyed by (kind, params)
REFERENCE_THIRDS = {
    ("ifn", (_f(0), _f(0))): (_f(0), _f(0)),
    ("ifn", (_f(1, 3), _f(1, 3))): (_f(1, 3), _f(0)),
    ("ifn", (_f(2, 3), _f(2, 3))): (_f(2, 3), _f(0)),
    ("ifn", (_f(1), _f(1))): (_f(1), _f(0)),
    ("ifn", (_f(0), _f(1, 3))): (_f(1, 6), _f(1, 3)),
    ("ifn", (_f(0), _f(2, 3))): (_f(1, 3), _f(2, 3)),
    ("ifn", (_f(0), _f(1))): (_f(1, 2), _f(1)),
    ("ifn", (_f(1, 3), _f(2, 3))): (_f(1, 2), _f(1, 3)),
    ("ifn", (_f(1, 3), _f(1))): (_f(2, 3), _f(2, 3)),
    ("ifn", (_f(2, 3), _f(1))): (_f(5, 6), _f(1, 3)),
    ("tfn", (_f(0), _f(1, 3), _f(1))): (_f(4, 9), _f(1, 2)),
    ("tfn", (_f(0), _f(1, 3), _f(2, 3))): (_f(1, 3), _f(1, 3)),
    ("tfn", (_f(0), _f(2, 3), _f(1))): (_f(5, 9), _f(1, 2)),
    ("tfn", (_f(0), _f(0), _f(2, 3))): (_f(2, 9), _f(1, 3)),
    ("tfn", (_f(0), _f(0), _f(1))): (_f(1, 3), _f(1, 2)),
    ("tfn", (_f(1, 3), _f(1), _f(1))): (_f(7, 9), _f(1, 3)),
    ("tfn", (_f(0), _f(1), _f(1))): (_f(2, 3), _f(1, 2)),
    ("tfn", (_f(1, 3), _f(2, 3), _f(1))): (_f(2, 3), _f(1, 3)),
    ("tfn", (_f(1, 3), _f(1, 3), _f(1))): (_f(5, 9), _f(1, 3)),
    ("tfn", (_f(0), _f(2, 3), _f(2, 3))): (_f(4, 9), _f(1, 3)),
    ("trfn", (_f(0), _f(1, 3), _f(2, 3), _f(1))): (_f(1, 2), _f(2, 3)),
    ("trfn", (_f(0), _f(0), _f(1, 3), _f(2, 3))): (_f(7, 27), _f(1, 2)),
    ("trfn", (_f(0), _f(0), _f(2, 3), _f(1))): (_f(19, 45), _f(5, 6)),
    ("trfn", (_f(1, 3), _f(1, 3), _f(2, 3), _f(1))): (_f(16, 27), _f(1, 2)),
    ("trfn", (_f(0), _f(1, 3), _f(1), _f(1))): (_f(26, 45), _f(5, 6)),
    ("trfn", (_f(0), _f(2, 3), _f(1), _f(1))): (_f(23, 36), _f(2, 3)),
    ("trfn", (_f(1, 3), _f(2, 3), _f(1), _f(1))): (_f(20, 27), _f(1, 2)),
    ("trfn", (_f(0), _f(1, 3), _f(2, 3), _f(2, 3))): (_f(11, 27), _f(1, 2)),
    ("trfn", (_f(0), _f(0), _f(1, 3), _f(1))): (_f(13, 36), _f(2, 3)),
}


def lattice_table(n: int) -> list[TableRow]:
    """Rows for step 1/n, cross-checked against the reference when n = 3."""
    return enumerate_lattice(n, REFERENCE_THIRDS if n == 3 else {})
