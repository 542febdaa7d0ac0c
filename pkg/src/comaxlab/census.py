"""Exhaustive enumeration and classification of grid functionals.

A functional on the finite model is just a table: one chain value per
grid function.  There are ``m ** (m ** n)`` such tables for a chain of
size m on n points, so enumeration is guarded by an explicit budget and
refuses (with the exact count) rather than run away.

The census classifies every table as comonotonically maxitive and/or
monotone.  Both properties only compare values, so tables are walked as
tuples of chain indices with all pair structure precomputed; witnesses
are translated back to real functions for the report.  The table space
splits into contiguous lexicographic ranges, one per job, and the merge
is by shard order, so the report is independent of parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .grid import Chain, GridFn, all_functions, comonotone, join
from .parallel import run_shards, split_range
from .properties import BudgetExceededError
from .report import FINDING, PASS, VerificationReport, jsonify


@dataclass(frozen=True)
class TabulatedFunctional:
    """A total map from grid functions to chain values."""

    chain: Chain
    n: int
    domain: tuple[GridFn, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.domain) != len(self.values):
            raise ValueError("table must assign a value to every domain function")

    def __call__(self, f: GridFn) -> Fraction:
        return self.values[self.domain.index(f)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "table": {
                ",".join(jsonify(v) for v in f.values): jsonify(v_out)
                for f, v_out in zip(self.domain, self.values)
            },
        }


def table_count(chain: Chain, n: int) -> int:
    m = len(chain)
    return m ** (m**n)


def enumerate_functionals(
    chain: Chain, n: int, budget: int = 10**7
) -> Iterator[TabulatedFunctional]:
    """Yield every functional table in lexicographic order of its value row.

    Refuses up front when the total count exceeds the budget.
    """
    total = table_count(chain, n)
    if total > budget:
        raise BudgetExceededError(total, budget, "functional enumeration")
    domain = tuple(all_functions(chain, n))
    for row in product(chain.values, repeat=len(domain)):
        yield TabulatedFunctional(chain, n, domain, row)


@dataclass(frozen=True)
class _PairStructure:
    """Index form of every pair relation the census needs."""

    domain: tuple[GridFn, ...]
    maxitivity: tuple[tuple[int, int, int], ...]  # (i, j, index of join)
    order: tuple[tuple[int, int], ...]  # i strictly below j pointwise
    comonotone_order: tuple[tuple[int, int], ...]  # ordered and comonotone


def _pair_structure(chain: Chain, n: int) -> _PairStructure:
    domain = tuple(all_functions(chain, n))
    index = {f.values: i for i, f in enumerate(domain)}
    maxitivity = []
    order = []
    comonotone_order = []
    for i, f in enumerate(domain):
        for j in range(i + 1, len(domain)):
            g = domain[j]
            pair_comonotone = comonotone(f, g)
            if pair_comonotone:
                maxitivity.append((i, j, index[join(f, g).values]))
            if f.leq(g):
                order.append((i, j))
                if pair_comonotone:
                    comonotone_order.append((i, j))
            elif g.leq(f):
                order.append((j, i))
                if pair_comonotone:
                    comonotone_order.append((j, i))
    return _PairStructure(domain, tuple(maxitivity), tuple(order), tuple(comonotone_order))


def _decode_row(index: int, m: int, width: int) -> list[int]:
    row = [0] * width
    for pos in range(width - 1, -1, -1):
        index, row[pos] = divmod(index, m)
    return row


def _advance_row(row: list[int], m: int) -> None:
    pos = len(row) - 1
    while pos >= 0:
        row[pos] += 1
        if row[pos] < m:
            return
        row[pos] = 0
        pos -= 1


def _census_shard(args: tuple[tuple[Fraction, ...], int, int, int]) -> dict:
    """Classify tables with lexicographic indices in [lo, hi)."""
    chain_values, n, lo, hi = args
    chain = Chain(chain_values)
    structure = _pair_structure(chain, n)
    m = len(chain_values)
    d = len(structure.domain)

    counts = {
        "total": 0,
        "comonotone_maxitive": 0,
        "monotone": 0,
        "maxitive_not_monotone": 0,
        "monotone_not_maxitive": 0,
    }
    bad_maxitive: list[dict] = []
    first_monotone_only: dict | None = None

    row = _decode_row(lo, m, d)
    for _ in range(lo, hi):
        counts["total"] += 1

        maxitive = True
        maxitivity_break = None
        for i, j, k in structure.maxitivity:
            vi, vj = row[i], row[j]
            if row[k] != (vi if vi >= vj else vj):
                maxitive = False
                maxitivity_break = (i, j, k)
                break

        monotone = True
        for i, j in structure.order:
            if row[i] > row[j]:
                monotone = False
                break

        if maxitive:
            counts["comonotone_maxitive"] += 1
            for i, j in structure.comonotone_order:
                if row[i] > row[j]:
                    raise AssertionError(
                        "maxitive table not monotone on a comonotone ordered pair"
                    )
        if monotone:
            counts["monotone"] += 1
        if maxitive and not monotone:
            counts["maxitive_not_monotone"] += 1
            if len(bad_maxitive) < 5:
                bad_maxitive.append(
                    {"kind": "maxitive_not_monotone", "table": _row_json(structure, chain, row)}
                )
        if monotone and not maxitive:
            counts["monotone_not_maxitive"] += 1
            if first_monotone_only is None:
                i, j, k = maxitivity_break
                first_monotone_only = {
                    "kind": "monotone_not_maxitive",
                    "table": _row_json(structure, chain, row),
                    "pair": {
                        "f": structure.domain[i].to_json(),
                        "g": structure.domain[j].to_json(),
                        "F_join": jsonify(chain.values[row[k]]),
                        "max_F": jsonify(chain.values[max(row[i], row[j])]),
                    },
                }
        _advance_row(row, m)

    return {
        "counts": counts,
        "bad_maxitive": bad_maxitive,
        "first_monotone_only": first_monotone_only,
    }


def functional_census(
    chain: Chain, n: int, budget: int = 10**7, jobs: int = 1
) -> VerificationReport:
    """Classify every functional table on the grid.

    Reports how many tables are comonotonically maxitive, monotone,
    maxitive-but-not-monotone (the noteworthy count: on a finite space
    it is expected to be zero, and a nonzero tally is flagged as a
    finding rather than an error), and monotone-but-not-maxitive, with
    the first witness of the latter kind exhibited.  Also cross-checks
    that every maxitive table is monotone along comonotone ordered
    pairs, which maxitivity forces.
    """
    total = table_count(chain, n)
    if total > budget:
        raise BudgetExceededError(total, budget, "functional enumeration")

    shards = [
        (chain.values, n, lo, hi) for lo, hi in split_range(total, jobs)
    ]
    results = run_shards(_census_shard, shards, jobs)

    counts = {
        "total": 0,
        "comonotone_maxitive": 0,
        "monotone": 0,
        "maxitive_not_monotone": 0,
        "monotone_not_maxitive": 0,
    }
    witnesses: list[dict] = []
    first_monotone_only: dict | None = None
    for result in results:
        for key, value in result["counts"].items():
            counts[key] += value
        for item in result["bad_maxitive"]:
            if len(witnesses) < 5:
                witnesses.append(item)
        if first_monotone_only is None and result["first_monotone_only"] is not None:
            first_monotone_only = result["first_monotone_only"]
    if first_monotone_only is not None:
        witnesses.append(first_monotone_only)

    status = PASS if counts["maxitive_not_monotone"] == 0 else FINDING
    return VerificationReport(
        claim_id=f"finite-census-m{len(chain)}-n{n}",
        status=status,
        counts=counts,
        witnesses=witnesses,
    )


def _row_json(structure: _PairStructure, chain: Chain, row: list[int]) -> dict:
    return {
        ",".join(jsonify(v) for v in f.values): jsonify(chain.values[ix])
        for f, ix in zip(structure.domain, row)
    }
