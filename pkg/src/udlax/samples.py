"""Worked instances and random generators for potentials and matrices."""

from __future__ import annotations

import random
from fractions import Fraction

from .lax import Case, Potential, classify_case
from .maxplus import NEG_INF, MaxPlusMatrix

PI = (Fraction(3, 5), Fraction(7, 10), Fraction(4, 5), Fraction(9, 10))


def one_soliton_table(pi=PI) -> Potential:
    """Sites 0..6 hold ``0, pi1, pi2, pi3, pi4, 0, 0``."""
    return Potential(0, (0, *pi, 0, 0))


def two_soliton_table(pi=PI) -> Potential:
    """Sites 0..8 hold ``0, pi1, pi2, 0, 0, pi3, pi4, 0, 0``."""
    p1, p2, p3, p4 = pi
    return Potential(0, (0, p1, p2, 0, 0, p3, p4, 0, 0))


def binary_block(m: int, start: int = 0) -> Potential:
    return Potential(start, (1,) * m)


def _grid_value(rng: random.Random, max_den: int, upper: Fraction = Fraction(1)) -> Fraction:
    den = rng.randint(1, max_den)
    top = -(-upper.numerator * den // upper.denominator)  # ceil(upper * den)
    return Fraction(rng.randrange(0, max(top, 1)), den)


def random_potential(
    rng: random.Random,
    radius: int = 12,
    max_den: int = 10,
    case=None,
    density: float = 0.6,
    max_tries: int = 10_000,
) -> Potential:
    """Random nonzero potential with values in ``[0, 1)`` supported in ``[-radius, radius]``.

    ``case`` restricts the output to C1, C2 or Borderline by rejection.
    """
    want = None if case is None else Case(case)
    for _ in range(max_tries):
        width = rng.randint(1, 2 * radius + 1)
        lo = rng.randint(-radius, radius - width + 1)
        upper = Fraction(1, 2) if want is Case.C1 and rng.random() < 0.5 else Fraction(1)
        vals = [_grid_value(rng, max_den, upper) if rng.random() < density else 0 for _ in range(width)]
        U = Potential(lo, vals)
        if U.is_zero():
            continue
        if want is None or classify_case(U).case is want:
            return U
    raise RuntimeError(f"no {want} potential found in {max_tries} tries")


def random_c1_solitons(rng: random.Random, max_den: int = 10, pieces: int = 3) -> Potential:
    """C1 potential whose maximal adjacent sum is attained on long alternating runs."""
    while True:
        v = Fraction(rng.randint(1, max_den - 1), max_den)
        vals = []
        for _ in range(rng.randint(1, pieces)):
            if rng.random() < 0.6:
                a = Fraction(rng.randint(0, v.numerator * 10), v.denominator * 10)
                run = rng.randint(2, 6)
                vals += [a if t % 2 == 0 else v - a for t in range(run)]
            vals += [0] * rng.randint(1, 3)
            filler = [Fraction(rng.randint(0, v.numerator), 2 * v.denominator) for _ in range(rng.randint(0, 3))]
            vals += filler + [0] * rng.randint(1, 2)
        lo = rng.randint(-12, 12 - len(vals)) if len(vals) < 24 else -12
        U = Potential(lo, vals[:25])
        tag = classify_case(U)
        if not U.is_zero() and tag.case is Case.C1 and tag.v_sup > 0:
            return U


def random_multi_soliton(
    rng: random.Random, n_solitons: int = 2, max_den: int = 10, gap: tuple = (1, 4), length: tuple = (2, 5)
) -> Potential:
    """C2 potential built from ``n_solitons`` blocks with adjacent sums >= 1, separated by zeros."""
    while True:
        vals = []
        for b in range(n_solitons):
            if b:
                vals += [0] * rng.randint(*gap)
            for _ in range(rng.randint(*length)):
                den = rng.randint(2, max_den)
                vals.append(Fraction(rng.randint(den // 2, den - 1), den))
        lo = rng.randint(-12, max(-12, 12 - len(vals) + 1))
        U = Potential(lo, vals)
        if classify_case(U).case is Case.C2:
            return U


def random_matrix(
    rng: random.Random,
    n: int,
    p_bottom: float = 0.35,
    grid: tuple = tuple(Fraction(k, 2) for k in range(-4, 5)),
    strongly_connected: bool = False,
    offset: int = 0,
) -> MaxPlusMatrix:
    """Entries from ``grid`` or bottom; optionally force a Hamiltonian cycle of finite edges."""
    rows = [[NEG_INF if rng.random() < p_bottom else rng.choice(grid) for _ in range(n)] for _ in range(n)]
    if strongly_connected:
        perm = list(range(n))
        rng.shuffle(perm)
        for a, b in zip(perm, perm[1:] + perm[:1]):
            if rows[a][b] is NEG_INF:
                rows[a][b] = rng.choice(grid)
    return MaxPlusMatrix(tuple(tuple(r) for r in rows), offset)
