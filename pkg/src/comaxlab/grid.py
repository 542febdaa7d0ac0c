"""Finite model: functions on an n-point space with values in a chain.

A Chain is the desk-scale stand-in for [0,1]: a strictly increasing
tuple of rationals running from 0 to 1.  A GridFn is simply the value
vector of a function on ``{0..n-1}``.  Comonotonicity, the lattice
operations, and the pointwise order are all decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Iterator

from .rational import ONE, ZERO, check_unit_interval, format_rational, parse_rational


@dataclass(frozen=True)
class Chain:
    """Strictly increasing rational values from 0 to 1, closed under min/max."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 2:
            raise ValueError("chain needs at least the endpoints 0 and 1")
        if self.values[0] != ZERO or self.values[-1] != ONE:
            raise ValueError("chain must start at 0 and end at 1")
        for a, b in zip(self.values, self.values[1:]):
            if a >= b:
                raise ValueError("chain values must be strictly increasing")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __contains__(self, value: Fraction) -> bool:
        return value in self.values

    def index(self, value: Fraction) -> int:
        return self.values.index(value)


@dataclass(frozen=True)
class GridFn:
    """Function on a finite n-point space, stored as its value vector."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for v in self.values:
            check_unit_interval(v, "function value")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def leq(self, other: GridFn) -> bool:
        _check_lengths(self, other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def to_json(self) -> dict[str, Any]:
        return {"values": [format_rational(v) for v in self.values]}

    @classmethod
    def from_json(cls, data: Any) -> GridFn:
        if not isinstance(data, dict) or "values" not in data:
            raise ValueError('grid function JSON must be {"values": [...]}')
        raw = data["values"]
        if not isinstance(raw, list) or not raw:
            raise ValueError("values: must be a nonempty list")
        return cls(tuple(parse_rational(v) for v in raw))


def constant(c: Fraction, n: int) -> GridFn:
    check_unit_interval(c, "constant")
    return GridFn((c,) * n)


def _check_lengths(f: GridFn, g: GridFn) -> None:
    if len(f) != len(g):
        raise ValueError(f"length mismatch: {len(f)} vs {len(g)}")


def comonotone(f: GridFn, g: GridFn) -> bool:
    """True iff f and g never order two points oppositely."""
    _check_lengths(f, g)
    n = len(f)
    for i in range(n):
        for j in range(i + 1, n):
            if (f[i] - f[j]) * (g[i] - g[j]) < 0:
                return False
    return True


def join(f: GridFn, g: GridFn) -> GridFn:
    _check_lengths(f, g)
    return GridFn(tuple(max(a, b) for a, b in zip(f.values, g.values)))


def meet(f: GridFn, g: GridFn) -> GridFn:
    _check_lengths(f, g)
    return GridFn(tuple(min(a, b) for a, b in zip(f.values, g.values)))


def all_functions(chain: Chain, n: int) -> list[GridFn]:
    """Every function on n points with values in the chain, in lexicographic order."""
    return [GridFn(vals) for vals in product(chain.values, repeat=n)]
