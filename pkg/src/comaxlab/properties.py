"""Property checkers for functionals on grid functions.

Each checker takes a functional (any callable from GridFn to Fraction)
and decides one axiom exhaustively over a chain grid, returning the
verdict together with the first violating input when there is one.
``integral_property_suite`` bundles the four checks for the t-normed
integral across every capacity with values on the chain.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .capacity import enumerate_capacities
from .grid import Chain, GridFn, all_functions, comonotone, constant, join
from .integral import tnorm_integral
from .report import FAIL, PASS, VerificationReport, jsonify
from .tnorms import TNorm, apply, pointwise_scale

Functional = Callable[[GridFn], Fraction]

Witness = dict


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the caller's budget; carries the exact count."""

    def __init__(self, required: int, budget: int, what: str):
        super().__init__(f"{what} needs {required} items, over the budget of {budget}")
        self.required = required
        self.budget = budget
        self.what = what


def is_normalized(functional: Functional, chain: Chain, n: int) -> bool:
    """Does the functional send every constant c to c?"""
    return all(functional(constant(c, n)) == c for c in chain)


def is_comonotone_maxitive(
    functional: Functional, chain: Chain, n: int
) -> tuple[bool, Witness | None]:
    """Check F(f v g) = max(F(f), F(g)) over every comonotone pair on the grid."""
    fns = all_functions(chain, n)
    for i, f in enumerate(fns):
        for g in fns[i:]:
            if not comonotone(f, g):
                continue
            lhs = functional(join(f, g))
            rhs = max(functional(f), functional(g))
            if lhs != rhs:
                witness = {"f": f.to_json(), "g": g.to_json(), "F_join": lhs, "max_F": rhs}
                return False, jsonify(witness)
    return True, None


def is_monotone(functional: Functional, chain: Chain, n: int) -> tuple[bool, Witness | None]:
    """Check f <= g pointwise implies F(f) <= F(g), exhaustively on the grid."""
    fns = all_functions(chain, n)
    for f in fns:
        for g in fns:
            if not f.leq(g):
                continue
            vf, vg = functional(f), functional(g)
            if vf > vg:
                witness = {"f": f.to_json(), "g": g.to_json(), "F_f": vf, "F_g": vg}
                return False, jsonify(witness)
    return True, None


def chain_closed_under(norm: TNorm, chain: Chain) -> bool:
    return all(apply(norm, s, t) in chain for s in chain for t in chain)


def _sampled_rationals(rng: random.Random, max_denominator: int) -> Fraction:
    den = rng.randint(1, max_denominator)
    return Fraction(rng.randint(0, den), den)


def is_scale_homogeneous(
    functional: Functional,
    norm: TNorm,
    chain: Chain,
    n: int,
    samples: int = 200,
    seed: int = 0,
    max_denominator: int = 8,
) -> tuple[bool, Witness | None]:
    """Check F(c * f) = c * F(f) with the norm acting pointwise on the left.

    When the chain is closed under the norm the check is exhaustive over
    all scalars and functions on the grid.  Otherwise (the product norm
    on any chain with interior points) scaled functions leave the grid,
    so the check samples seeded rational scalars and functions instead;
    the functional must then accept off-chain inputs.
    """
    if chain_closed_under(norm, chain):
        cases = ((c, f) for c in chain for f in all_functions(chain, n))
    else:
        rng = random.Random(seed)
        cases = (
            (
                _sampled_rationals(rng, max_denominator),
                GridFn(tuple(_sampled_rationals(rng, max_denominator) for _ in range(n))),
            )
            for _ in range(samples)
        )
    for c, f in cases:
        scaled = GridFn(pointwise_scale(norm, c, f.values))
        lhs = functional(scaled)
        rhs = apply(norm, c, functional(f))
        if lhs != rhs:
            witness = {"c": c, "f": f.to_json(), "F_scaled": lhs, "c_times_F": rhs}
            return False, jsonify(witness)
    return True, None


def satisfies_all_axioms(
    functional: Functional,
    norm: TNorm,
    chain: Chain,
    n: int,
    samples: int = 200,
    seed: int = 0,
) -> bool:
    """Normalized, comonotonically maxitive, and homogeneous for the norm."""
    if not is_normalized(functional, chain, n):
        return False
    ok, _ = is_comonotone_maxitive(functional, chain, n)
    if not ok:
        return False
    ok, _ = is_scale_homogeneous(functional, norm, chain, n, samples=samples, seed=seed)
    return ok


def integral_property_suite(
    chain: Chain,
    n: int,
    norm: TNorm = TNorm.MINIMUM,
    budget: int = 10**7,
    seed: int = 0,
) -> VerificationReport:
    """Run the four checks on the t-normed integral for every chain capacity.

    Capacities range over all monotone set functions with values on the
    chain.  The number of raw value assignments is |chain|^(2^n - 2);
    if that exceeds the budget the suite refuses with the exact count.
    """
    free_slots = (1 << n) - 2
    required = len(chain) ** free_slots
    if required > budget:
        raise BudgetExceededError(required, budget, "capacity enumeration")

    counts = {
        "capacities": 0,
        "normalized_failures": 0,
        "maxitivity_failures": 0,
        "homogeneity_failures": 0,
        "monotonicity_failures": 0,
    }
    witnesses: list[dict] = []

    for cap in enumerate_capacities(chain.values, n):
        counts["capacities"] += 1
        cache: dict[tuple[Fraction, ...], Fraction] = {}

        def functional(f: GridFn, _cap=cap, _cache=cache) -> Fraction:
            value = _cache.get(f.values)
            if value is None:
                value = tnorm_integral(_cap, norm, f)
                _cache[f.values] = value
            return value

        if not is_normalized(functional, chain, n):
            counts["normalized_failures"] += 1
            witnesses.append({"property": "normalized", "capacity": cap.to_json()})
        ok, witness = is_comonotone_maxitive(functional, chain, n)
        if not ok:
            counts["maxitivity_failures"] += 1
            witnesses.append(
                {"property": "comonotone_maxitivity", "capacity": cap.to_json(), "witness": witness}
            )
        ok, witness = is_scale_homogeneous(functional, norm, chain, n, seed=seed)
        if not ok:
            counts["homogeneity_failures"] += 1
            witnesses.append(
                {"property": "scale_homogeneity", "capacity": cap.to_json(), "witness": witness}
            )
        ok, witness = is_monotone(functional, chain, n)
        if not ok:
            counts["monotonicity_failures"] += 1
            witnesses.append(
                {"property": "monotonicity", "capacity": cap.to_json(), "witness": witness}
            )

    failures = sum(v for k, v in counts.items() if k.endswith("_failures"))
    return VerificationReport(
        claim_id=f"integral-properties-{norm.value}-n{n}",
        status=PASS if failures == 0 else FAIL,
        counts=counts,
        witnesses=witnesses,
        seed=seed,
    )
