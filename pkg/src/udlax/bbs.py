"""Ultradiscrete KdV (box-ball) time evolution.

    U^{t+1}_l = min(1 - U^t_l, S_l),   S_l = sum_{j<l} (U^t_j - U^{t+1}_j)

The new state appears on both sides, but ``S_l`` only involves sites left of
``l``, so a single left-to-right sweep with a running carry resolves it.
"""

from __future__ import annotations

from fractions import Fraction

from .lax import Potential


def step(U: Potential) -> Potential:
    if U.is_zero():
        return U
    carry = Fraction(0)
    out = {}
    i = U.support_lo
    # keep sweeping past the support until the carrier has emptied
    while i <= U.support_hi or carry != 0:
        new = min(1 - U[i], carry)
        carry += U[i] - new
        out[i] = new
        i += 1
    return Potential.from_dict(out)


def evolve(U: Potential, steps: int) -> list:
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    states = [U]
    for _ in range(steps):
        states.append(step(states[-1]))
    return states


def _glyph(v: Fraction) -> str:
    if v == 0:
        return "."
    if v == 1:
        return "1"
    return "*"


def render_timeline(states) -> str:
    """One fixed-width row per state, columns aligned by absolute site index."""
    states = list(states)
    nonzero = [s for s in states if not s.is_zero()]
    if nonzero:
        lo = min(s.support_lo for s in nonzero)
        hi = max(s.support_hi for s in nonzero)
    else:
        lo = hi = 0
    width = len(str(max(len(states) - 1, 0)))
    lines = [f"t={t:>{width}} |" + "".join(_glyph(s[i]) for i in range(lo, hi + 1)) for t, s in enumerate(states)]
    if any("*" in line.split("|", 1)[1] for line in lines):
        lines.append("legend: '.' = 0, '1' = 1, '*' = other value")
    return "\n".join(lines) + "\n"
