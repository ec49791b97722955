"""Coupling constraints of the full four-equation Lax system.

With ``Phi1`` the time-``t`` eigenvector and ``Phi2`` the time-``t+1`` one,
both gauged to right-tail value 0, the two extra equations read

    backward:  Phi1_l     = max(Phi2_{l+1}, Phi1_{l+1} + u_l - 1)
    forward:   Phi2_{l+1} = max(Phi1_l - mu, Phi2_l + u_l + k - 1)

and ``omega = mu + k``.

Window argument: left of ``-N`` all of ``Phi1``, ``Phi2`` move by ``k`` per step
and ``u = 0``; right of ``N`` they are constant.  Both sides of each equation
then shift by the same amount from one index to the next, so checking
``[-N-2, N+2]`` covers every integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .lax import (
    Case,
    EigenSeq,
    Potential,
    Soliton,
    build_delta_matrix,
    build_gamma_matrix,
    compute_k,
    fundamental_pair,
)
from .maxplus import is_eigenvector, saturation_graph


class Violation(NamedTuple):
    equation: str
    index: int
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {"equation": self.equation, "index": self.index, "lhs": str(self.lhs), "rhs": str(self.rhs)}


def verification_window(U: Potential, margin: int = 0) -> tuple:
    return (-U.N - 2 - margin, U.N + 2 + margin)


def check_backward(phi1: EigenSeq, phi2: EigenSeq, U: Potential, margin: int = 0) -> list:
    """Indices where the backward equation fails; empty means it holds everywhere."""
    lo, hi = verification_window(U, margin)
    bad = []
    for l in range(lo, hi + 1):
        lhs = phi1[l]
        rhs = max(phi2[l + 1], phi1[l + 1] + U[l] - 1)
        if lhs != rhs:
            bad.append(Violation("backward", l, lhs, rhs))
    return bad


def check_forward(
    phi1: EigenSeq, phi2: EigenSeq, U: Potential, mu: Fraction, k: Fraction, margin: int = 0
) -> list:
    """Indices where the forward equation fails for the given ``mu >= 0``."""
    if mu < 0:
        raise ValueError(f"mu must be nonnegative, got {mu}")
    lo, hi = verification_window(U, margin)
    bad = []
    for l in range(lo, hi + 1):
        lhs = phi2[l + 1]
        rhs = max(phi1[l] - mu, phi2[l] + U[l] + k - 1)
        if lhs != rhs:
            bad.append(Violation("forward", l, lhs, rhs))
    return bad


def compute_mu(U: Potential, sol: Soliton) -> Fraction:
    """0 in C1; otherwise the total excess of the soliton's adjacent sums over 1."""
    if sol.case is Case.C1:
        return Fraction(0)
    return sum((U.pair_sum(i) - 1 for i in range(sol.l, sol.hi)), Fraction(0))


def candidate_mus(phi1: EigenSeq, phi2: EigenSeq, U: Potential) -> list:
    """Sorted nonnegative values ``Phi1_l - Phi2_{l+1}`` over the verification window.

    Where the second branch of the forward equation is strictly below
    ``Phi2_{l+1}``, the first must be tight, which pins ``mu`` to one of these.
    If the first branch is never tight, the largest candidate works too.
    """
    lo, hi = verification_window(U)
    return sorted({d for d in (phi1[l] - phi2[l + 1] for l in range(lo, hi + 1)) if d >= 0})


def infer_mu(phi1: EigenSeq, phi2: EigenSeq, U: Potential, k: Fraction) -> Optional[Fraction]:
    """The ``mu >= 0`` making the forward equation hold, or ``None``."""
    for mu in candidate_mus(phi1, phi2, U):
        if not check_forward(phi1, phi2, U, mu, k):
            return mu
    return None


def fails_for_every_mu(U: Potential, phi1: EigenSeq, phi2: EigenSeq, k: Fraction) -> bool:
    """True iff no ``mu >= 0`` makes both coupling equations hold.

    Enumerates every candidate ``mu`` explicitly rather than trusting
    :func:`infer_mu`'s early exit.
    """
    if check_backward(phi1, phi2, U):
        return True
    return all(check_forward(phi1, phi2, U, mu, k) for mu in candidate_mus(phi1, phi2, U))


def forbidden_edges(U: Potential) -> tuple:
    """Edges no solution may saturate: ``(gamma_forward, delta_backward)``.

    Forward ``(i, i+1)`` is forbidden for ``Phi1`` when ``u_{i-1} + u_i > 1``;
    backward ``(i+1, i)`` is forbidden for ``Phi2`` when ``u_i + u_{i+1} > 1``.
    """
    lo, hi = U.window
    fwd = {(i, i + 1) for i in range(lo, hi) if U.pair_sum(i - 1) > 1}
    bwd = {(i + 1, i) for i in range(lo, hi) if U.pair_sum(i) > 1}
    return frozenset(fwd), frozenset(bwd)


@dataclass(frozen=True)
class ConstraintReport:
    gamma_ok: bool
    delta_ok: bool
    backward_ok: bool
    forward_ok: bool
    mu: Fraction
    omega: Fraction
    first_violation: Optional[Violation] = None

    @property
    def ok(self) -> bool:
        return self.gamma_ok and self.delta_ok and self.backward_ok and self.forward_ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "gamma_ok": self.gamma_ok,
            "delta_ok": self.delta_ok,
            "backward_ok": self.backward_ok,
            "forward_ok": self.forward_ok,
            "mu": str(self.mu),
            "omega": str(self.omega),
            "first_violation": None if self.first_violation is None else self.first_violation.to_json(),
        }


def _first_bad_row(A, v, equation: str) -> Optional[Violation]:
    for p, row in enumerate(A.entries):
        lhs = max(a + x for a, x in zip(row, v))
        if lhs != v[p]:
            return Violation(equation, A.offset + p, lhs, v[p])
    return None


def full_system_check(
    U: Potential, phi1: EigenSeq, phi2: EigenSeq, k: Fraction, mu: Fraction, margin: int = 0
) -> ConstraintReport:
    """All four equations: two eigen-equations on the verification window plus the couplings."""
    lo, hi = verification_window(U, margin)
    v1, v2 = phi1.restrict(lo, hi), phi2.restrict(lo, hi)
    Ag = build_gamma_matrix(U, k, lo, hi)
    Ad = build_delta_matrix(U, k, lo, hi)
    gamma_ok = is_eigenvector(Ag, v1)
    delta_ok = is_eigenvector(Ad, v2)
    back = check_backward(phi1, phi2, U, margin)
    fwd = check_forward(phi1, phi2, U, mu, k, margin)

    candidates = []
    if not gamma_ok:
        candidates.append(_first_bad_row(Ag, v1, "gamma"))
    if not delta_ok:
        candidates.append(_first_bad_row(Ad, v2, "delta"))
    candidates += back[:1] + fwd[:1]
    first = min(candidates, key=lambda v: v.index) if candidates else None
    return ConstraintReport(gamma_ok, delta_ok, not back, not fwd, mu, mu + k, first)


def saturation_pair(U: Potential, phi1: EigenSeq, phi2: EigenSeq, k: Fraction, margin: int = 0) -> tuple:
    """Saturation graphs of ``Phi1`` in ``A(gamma)`` and ``Phi2`` in ``A(delta)`` on the verification window."""
    lo, hi = verification_window(U, margin)
    sat1 = saturation_graph(build_gamma_matrix(U, k, lo, hi), phi1.restrict(lo, hi))
    sat2 = saturation_graph(build_delta_matrix(U, k, lo, hi), phi2.restrict(lo, hi))
    return sat1, sat2


def pair_status(U: Potential, sol: Soliton, k: Optional[Fraction] = None) -> ConstraintReport:
    """Full-system report for a soliton's own fundamental pair with its ``mu``."""
    if k is None:
        k = compute_k(U)
    phi1, phi2 = fundamental_pair(U, sol, k)
    return full_system_check(U, phi1, phi2, k, compute_mu(U, sol))

