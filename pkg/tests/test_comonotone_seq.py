from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from comaxlab.pairgen import GeneratorParams, generate_pair, random_pair
from comaxlab.seq_comonotone import (
    comonotone,
    comonotone_truncated,
    comonotone_witness,
    defining_product,
)
from comaxlab.seqspace import ISOLATED, constant, make, ramp, seq

F = Fraction

small_fractions = st.fractions(min_value=0, max_value=1, max_denominator=6)


@st.composite
def seq_fns(draw):
    iso = draw(small_fractions)
    head = draw(st.lists(small_fractions, max_size=3))
    y_first = draw(small_fractions)
    y_limit = draw(small_fractions)
    m = len(head) + 1
    slope = (y_limit - y_first) * m
    return make(iso, head, slope, y_limit - slope)


def test_opposed_ramps_witness():
    witness = comonotone_witness(ramp(F(0)), ramp(F(1)))
    assert witness == (ISOLATED, seq(2))
    assert defining_product(ramp(F(0)), ramp(F(1)), *witness) == F(-1, 4)


def test_constants_comonotone_with_everything():
    for f in (ramp(F(0)), ramp(F(1)), make(F(1, 2), [F(0)], F(-1, 4), F(1, 4))):
        for c in (F(0), F(1, 3), F(1)):
            assert comonotone(f, constant(c))
            assert comonotone(constant(c), f)


def test_opposite_tail_slopes_always_clash():
    up = make(F(0), [], F(1, 2), F(0))
    down = make(F(0), [], F(-1, 2), F(1, 2))
    witness = comonotone_witness(up, down)
    assert witness is not None
    assert defining_product(up, down, *witness) < 0


def test_full_peak_function_clashes_with_unit_valued_partner():
    # A function below the unit ramp whose peak 1 is approached only along
    # the sequence must eventually exceed its own isolated value, while any
    # ramp-bounded partner with value 1 at the isolated point sits strictly
    # below 1 on the sequence: the orderings disagree.
    f = ramp(F(1, 2))  # below the ramp, peak 1 at the limit, iso value 1/2
    g = ramp(F(1))  # below the ramp with value 1 at the isolated point
    witness = comonotone_witness(f, g)
    assert witness is not None
    assert defining_product(f, g, *witness) < 0


def test_tail_against_fixed_point_interval_analysis():
    # f rises along the tail while g stays above f's isolated value only
    # beyond a crossing; the violating sequence index is found exactly.
    f = make(F(1, 2), [], F(1), F(0))  # ramp with iso 1/2
    g = make(F(0), [], F(1), F(0))  # plain ramp, iso 0
    assert comonotone(f, g)

    h = make(F(1, 2), [], F(-1, 2), F(1, 2))  # falls from 1/2 toward 0
    witness = comonotone_witness(f, h)
    assert witness is not None
    assert defining_product(f, h, *witness) < 0


def test_negativity_interval_boundary_zeros_are_allowed():
    # Both ramps sit at their crossing thresholds exactly on sequence
    # points: the defining product vanishes there but never goes negative,
    # so the pair is comonotone.
    f = make(F(1, 2), [], F(1), F(0))  # threshold hit exactly at seq(2)
    g = make(F(2, 3), [], F(1), F(0))  # threshold hit exactly at seq(3)
    assert comonotone_witness(f, g) is None
    assert comonotone_truncated(f, g, depth=50) is None


def test_negativity_interval_interior_point_is_found_exactly():
    # Same shape, but now one sequence point falls strictly between the
    # two thresholds; the decision must name it.
    f = make(F(1, 2), [], F(1), F(0))
    g = make(F(3, 4), [], F(1), F(0))
    witness = comonotone_witness(f, g)
    assert witness == (ISOLATED, seq(3))
    assert defining_product(f, g, *witness) < 0


def test_violation_beyond_truncated_horizon_is_still_found():
    # The thresholds 59/60 and 61/62 leave exactly one sequence point,
    # seq(61), inside the negativity interval: past the depth-50 oracle
    # but found by the interval analysis.
    f = make(F(59, 60), [], F(1), F(0))
    g = make(F(61, 62), [], F(1), F(0))
    assert comonotone_truncated(f, g, depth=50) is None
    witness = comonotone_witness(f, g)
    assert witness == (ISOLATED, seq(61))
    assert defining_product(f, g, *witness) < 0
    assert comonotone_truncated(f, g, depth=70) is not None


@given(seq_fns(), seq_fns())
@settings(max_examples=120)
def test_symmetry_and_reflexivity(f, g):
    assert comonotone(f, f)
    assert comonotone(f, g) == comonotone(g, f)


@given(seq_fns(), seq_fns())
@settings(max_examples=120)
def test_exact_decision_vs_truncated_oracle(f, g):
    exact = comonotone_witness(f, g)
    truncated = comonotone_truncated(f, g, depth=50)
    if truncated is not None:
        assert exact is not None, "exact check passed a pair the oracle rejects"
    if exact is not None:
        assert defining_product(f, g, *exact) < 0


@given(st.integers(min_value=0, max_value=500))
@settings(max_examples=100, deadline=None)
def test_generated_pairs_vs_oracle(seed):
    f, g = generate_pair(seed)
    assert comonotone_truncated(f, g, depth=50) is None
    assert comonotone_witness(f, g) is None


@given(st.integers(min_value=0, max_value=500))
@settings(max_examples=100, deadline=None)
def test_random_pairs_vs_oracle(seed):
    f, g = random_pair(seed, GeneratorParams())
    exact = comonotone_witness(f, g)
    truncated = comonotone_truncated(f, g, depth=50)
    if truncated is not None:
        assert exact is not None
    if exact is not None:
        assert defining_product(f, g, *exact) < 0
