from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from udlax.bbs import evolve, render_timeline, step
from udlax.lax import Potential
from udlax.samples import binary_block


def test_zero_is_fixed():
    assert step(Potential.zero()) == Potential.zero()
    assert all(s.is_zero() for s in evolve(Potential.zero(), 4))


def test_binary_block_advances_by_its_length():
    assert step(Potential(0, (1, 1, 1))) == Potential(3, (1, 1, 1))


def test_c1_bump_shifts_right():
    U = Potential(0, (0, F(1, 4), F(1, 2), F(1, 4), 0))
    assert step(U) == U.shift(1)


def test_evolve_zero_steps():
    U = binary_block(2)
    assert evolve(U, 0) == [U]
    with pytest.raises(ValueError):
        evolve(U, -1)


def test_big_soliton_overtakes_small_one():
    U = Potential(0, (1, 1, 0, 0, 0, 0, 1))
    last = evolve(U, 12)[-1]
    ones = [i for i in range(last.support_lo, last.support_hi + 1) if last[i] == 1]
    assert len(ones) == 3
    # the pair of adjacent ones now lies to the right of the single one
    assert ones[1] + 1 == ones[2] and ones[0] + 1 < ones[1]


def test_carry_can_outrun_a_single_pad_cell():
    U = Potential(0, (1, 1, 1, 1))
    nxt = step(U)
    assert nxt == Potential(4, (1, 1, 1, 1))
    assert nxt.support_hi - U.support_hi == 4


def test_render_single_soliton():
    text = render_timeline(evolve(binary_block(2), 2))
    assert text == "t=0 |11....\nt=1 |..11..\nt=2 |....11\n"


def test_render_zero_and_mixed():
    assert render_timeline([Potential.zero()]) == "t=0 |.\n"
    text = render_timeline([Potential(0, (F(1, 2), 1))])
    assert text.splitlines()[0] == "t=0 |*1"
    assert "legend" in text


@settings(max_examples=60, deadline=None)
@given(st.integers(-10, 10), st.lists(st.fractions(min_value=0, max_value=1, max_denominator=8), max_size=12))
def test_mass_conserved(lo, vals):
    states = evolve(Potential(lo, vals), 10)
    assert len({s.mass() for s in states}) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(-10, 10), st.lists(st.sampled_from([0, 1]), max_size=12))
def test_support_growth_bounded(lo, vals):
    states = evolve(Potential(lo, vals), 6)
    for a, b in zip(states, states[1:]):
        if not a.is_zero():
            assert b.support_lo >= a.support_lo
            assert b.support_hi - a.support_hi <= len(a.values)
