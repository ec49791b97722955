"""Ultradiscrete Lax matrices of a box-ball potential and their fundamental eigenvectors.

A potential ``U`` is a finitely supported rational sequence.  For a fixed time
its two eigenproblems are tridiagonal max-plus systems ``A(gamma) (x) Phi = Phi``
and ``A(delta) (x) Phi = Phi`` built from

    gamma_i = min(u_i, 1 - u_{i-1}),    delta_i = min(u_{i-1}, 1 - u_i),

with ``A_{i,i-1} = c_i`` and ``A_{i,i+1} = c_i - k`` for ``c`` either sequence.
Everything is computed on the finite window ``[-N-1, N+1]`` and extended by
the tail rules of :class:`EigenSeq`.
"""

from __future__ import annotations

import enum
import functools
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .maxplus import (
    NEG_INF,
    MaxPlusMatrix,
    is_eigenvector,
    scalar,
    star_column,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class PotentialRangeWarning(UserWarning):
    """A potential value lies outside ``[0, 1)``; formulas are applied literally."""


def _rational(x) -> Fraction:
    v = scalar(x)
    if v is NEG_INF:
        raise ValueError("potential values must be finite")
    return v


@dataclass(frozen=True)
class Potential:
    """Finitely supported rational sequence, zero outside ``[support_lo, support_hi]``.

    Stored canonically: leading and trailing zeros are trimmed, and the zero
    potential has ``support_lo == 0`` and no values.
    """

    support_lo: int
    values: tuple

    def __post_init__(self):
        vals = [_rational(v) for v in self.values]
        lo = int(self.support_lo)
        while vals and vals[0] == 0:
            vals.pop(0)
            lo += 1
        while vals and vals[-1] == 0:
            vals.pop()
        if not vals:
            lo = 0
        object.__setattr__(self, "support_lo", lo)
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def zero(cls) -> "Potential":
        return cls(0, ())

    @classmethod
    def from_dict(cls, mapping: dict) -> "Potential":
        if not mapping:
            return cls.zero()
        lo, hi = min(mapping), max(mapping)
        return cls(lo, tuple(mapping.get(i, 0) for i in range(lo, hi + 1)))

    @property
    def support_hi(self) -> int:
        return self.support_lo + len(self.values) - 1

    def is_zero(self) -> bool:
        return not self.values

    def __getitem__(self, i: int) -> Fraction:
        p = i - self.support_lo
        if 0 <= p < len(self.values):
            return self.values[p]
        return ZERO

    @property
    def N(self) -> int:
        """Smallest ``N >= 0`` with ``u_i = 0`` whenever ``|i| >= N``."""
        if self.is_zero():
            return 0
        return max(abs(self.support_lo), abs(self.support_hi)) + 1

    @property
    def window(self) -> tuple:
        """Canonical computation window ``(-N-1, N+1)``."""
        return (-self.N - 1, self.N + 1)

    def pair_sum(self, i: int) -> Fraction:
        """``u_i + u_{i+1}``."""
        return self[i] + self[i + 1]

    def mass(self) -> Fraction:
        return sum(self.values, ZERO)

    def shift(self, m: int) -> "Potential":
        return Potential(self.support_lo + m, self.values)

    def out_of_range(self) -> list:
        """Indices whose value is negative or at least 1."""
        return [self.support_lo + p for p, v in enumerate(self.values) if v < 0 or v >= 1]

    def to_json(self) -> dict:
        return {"support_lo": self.support_lo, "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, data) -> "Potential":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "values" not in data:
            raise ValueError("potential JSON needs 'support_lo' and 'values'")
        extra = set(data) - {"support_lo", "values"}
        if extra:
            raise ValueError(f"unknown potential keys: {sorted(extra)}")
        lo = data.get("support_lo", 0)
        if isinstance(lo, bool) or not isinstance(lo, int):
            raise ValueError("support_lo must be an integer")
        if not isinstance(data["values"], list):
            raise ValueError("values must be a list")
        return cls(lo, tuple(_rational(v) for v in data["values"]))


class Case(str, enum.Enum):
    C1 = "C1"
    C2 = "C2"
    BORDERLINE = "Borderline"


@dataclass(frozen=True)
class CaseTag:
    case: Case
    v_sup: Fraction


@dataclass(frozen=True)
class Soliton:
    """Index run ``l, l+1, ..., l+s``."""

    l: int
    s: int
    case: Case

    @property
    def hi(self) -> int:
        return self.l + self.s

    def to_json(self) -> dict:
        return {"l": self.l, "s": self.s}


@functools.lru_cache(maxsize=4096)
def v_sup(U: Potential) -> Fraction:
    """``max_i (u_i + u_{i+1})``; pairs away from the support contribute 0."""
    if U.is_zero():
        return ZERO
    return max(ZERO, max(U.pair_sum(i) for i in range(U.support_lo - 1, U.support_hi + 1)))


def classify_case(U: Potential) -> CaseTag:
    bad = U.out_of_range()
    if bad:
        warnings.warn(f"potential values outside [0, 1) at {bad}", PotentialRangeWarning, stacklevel=2)
    v = v_sup(U)
    if v < 1:
        return CaseTag(Case.C1, v)
    if v > 1:
        return CaseTag(Case.C2, v)
    return CaseTag(Case.BORDERLINE, v)


def compute_k(U: Potential) -> Fraction:
    return min(v_sup(U), ONE)


def _window(U: Potential, lo, hi) -> tuple:
    wlo, whi = U.window
    return (wlo if lo is None else lo, whi if hi is None else hi)


def build_gamma(U: Potential, lo: Optional[int] = None, hi: Optional[int] = None) -> dict:
    lo, hi = _window(U, lo, hi)
    return {i: min(U[i], 1 - U[i - 1]) for i in range(lo, hi + 1)}


def build_delta(U: Potential, lo: Optional[int] = None, hi: Optional[int] = None) -> dict:
    lo, hi = _window(U, lo, hi)
    return {i: min(U[i - 1], 1 - U[i]) for i in range(lo, hi + 1)}


def _tridiagonal(lo: int, hi: int, sub, sup) -> MaxPlusMatrix:
    """``sub(i) = A[i+1, i]`` and ``sup(i) = A[i, i+1]`` for ``lo <= i < hi``."""
    n = hi - lo + 1
    rows = [[NEG_INF] * n for _ in range(n)]
    for i in range(lo, hi):
        p = i - lo
        rows[p + 1][p] = sub(i)
        rows[p][p + 1] = sup(i)
    return MaxPlusMatrix(tuple(tuple(r) for r in rows), lo)


def _branch(U: Potential, branch) -> Case:
    if branch is None:
        branch = classify_case(U).case
    branch = Case(branch)
    # the borderline potential may be read either way; both readings coincide
    return Case.C2 if branch is Case.BORDERLINE else branch


def build_gamma_matrix(
    U: Potential,
    k: Fraction,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
    branch: Optional[Case] = None,
) -> MaxPlusMatrix:
    """Window matrix ``A(gamma)`` from the case-specific coefficient formulas."""
    lo, hi = _window(U, lo, hi)
    u = U.__getitem__
    if _branch(U, branch) is Case.C1:
        return _tridiagonal(lo, hi, lambda i: u(i + 1), lambda i: u(i) - k)
    return _tridiagonal(
        lo,
        hi,
        lambda i: u(i + 1) if u(i) + u(i + 1) < 1 else 1 - u(i),
        lambda i: u(i) - k if u(i) + u(i - 1) < 1 else 1 - u(i - 1) - k,
    )


def build_delta_matrix(
    U: Potential,
    k: Fraction,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
    branch: Optional[Case] = None,
) -> MaxPlusMatrix:
    """Window matrix ``A(delta)`` from the case-specific coefficient formulas."""
    lo, hi = _window(U, lo, hi)
    u = U.__getitem__
    if _branch(U, branch) is Case.C1:
        return _tridiagonal(lo, hi, lambda i: u(i), lambda i: u(i - 1) - k)
    return _tridiagonal(
        lo,
        hi,
        lambda i: u(i) if u(i) + u(i + 1) < 1 else 1 - u(i + 1),
        lambda i: u(i - 1) - k if u(i) + u(i - 1) < 1 else 1 - u(i) - k,
    )


def build_matrix(U: Potential, kind: str, k: Fraction, lo=None, hi=None, branch=None) -> MaxPlusMatrix:
    if kind == "gamma":
        return build_gamma_matrix(U, k, lo, hi, branch)
    if kind == "delta":
        return build_delta_matrix(U, k, lo, hi, branch)
    raise ValueError(f"unknown matrix kind {kind!r}")


def detect_solitons(U: Potential) -> list:
    """Maximal runs of critical adjacent sums, left to right.

    In C1 the run condition is ``u_i + u_{i+1} == v_sup`` (and there are no
    solitons when ``v_sup == 0``); otherwise it is ``u_i + u_{i+1} >= 1``.
    """
    tag = classify_case(U)
    if tag.case is Case.C1:
        if tag.v_sup <= 0:
            return []
        hot = lambda i: U.pair_sum(i) == tag.v_sup  # noqa: E731
    else:
        hot = lambda i: U.pair_sum(i) >= 1  # noqa: E731
    lo, hi = U.window
    solitons = []
    i = lo
    while i < hi:
        if hot(i):
            start = i
            while i < hi and hot(i):
                i += 1
            solitons.append(Soliton(start, i - start, tag.case))
        else:
            i += 1
    return solitons


@dataclass(frozen=True)
class EigenSeq:
    """Eigenvector over all integers: stored window plus tail rules.

    Right of the window the sequence is constant; left of it the value drops by
    ``k`` per step.
    """

    lo: int
    values: tuple
    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_rational(v) for v in self.values))
        object.__setattr__(self, "k", _rational(self.k))
        if not self.values:
            raise ValueError("empty eigen-sequence")

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __getitem__(self, i: int) -> Fraction:
        if i > self.hi:
            return self.values[-1]
        if i < self.lo:
            return self.values[0] - self.k * (self.lo - i)
        return self.values[i - self.lo]

    def restrict(self, lo: int, hi: int) -> tuple:
        if lo > hi:
            raise ValueError("empty range")
        return tuple(self[i] for i in range(lo, hi + 1))

    def shifted(self, c) -> "EigenSeq":
        return EigenSeq(self.lo, tuple(v + c for v in self.values), self.k)

    def normalized(self) -> "EigenSeq":
        """Gauge with right-tail value 0."""
        return self.shifted(-self.values[-1])

    def to_json(self) -> dict:
        return {
            "window_lo": self.lo,
            "window_hi": self.hi,
            "k": str(self.k),
            "values": [str(v) for v in self.values],
        }


def restrict(phi: EigenSeq, lo: int, hi: int) -> tuple:
    return phi.restrict(lo, hi)


def extend_eigenseq(
    v: Sequence,
    U: Potential,
    k: Fraction,
    kind: str = "gamma",
    lo: Optional[int] = None,
) -> EigenSeq:
    """Unique tail extension of a window eigenvector.

    ``v`` lives on ``[lo, lo + len(v) - 1]`` (default: the canonical window)
    and must satisfy the window eigen-equation of the chosen matrix.
    """
    if lo is None:
        lo = U.window[0]
    hi = lo + len(v) - 1
    if lo > -U.N - 1 or hi < U.N + 1:
        raise ValueError("window must contain [-N-1, N+1]")
    A = build_matrix(U, kind, k, lo, hi)
    vec = tuple(scalar(x) for x in v)
    if any(x is NEG_INF for x in vec) or not is_eigenvector(A, vec):
        raise ValueError("vector is not a finite eigenvector of the window matrix")
    return EigenSeq(lo, vec, k)


def max_combination(seqs: Sequence[EigenSeq], coeffs: Iterable) -> EigenSeq:
    """``(+)_i c_i (x) seqs[i]`` for sequences sharing window and ``k``."""
    seqs = list(seqs)
    coeffs = [_rational(c) for c in coeffs]
    lo, hi, k = seqs[0].lo, seqs[0].hi, seqs[0].k
    if any(s.lo != lo or s.hi != hi or s.k != k for s in seqs):
        raise ValueError("sequences must share window and k")
    return EigenSeq(lo, tuple(max(c + s[i] for c, s in zip(coeffs, seqs)) for i in range(lo, hi + 1)), k)


def fundamental_column(U: Potential, kind: str, index: int, k: Optional[Fraction] = None) -> EigenSeq:
    """Column ``index`` of the window Kleene star, extended and normalized.

    Raises :class:`~udlax.maxplus.PositiveCycleError` when ``k`` is too small
    for the star to converge.
    """
    if k is None:
        k = compute_k(U)
    lo, hi = U.window
    col = star_column(build_matrix(U, kind, k, lo, hi), index)
    return extend_eigenseq(col, U, k, kind, lo).normalized()


def fundamental_pair(U: Potential, sol: Soliton, k: Optional[Fraction] = None) -> tuple:
    """``(Phi1, Phi2)``: column ``l`` of ``A(gamma)*`` and column ``l+s`` of ``A(delta)*``.

    Node ``l`` sits on the critical two-cycle at the soliton's left end in
    ``A(gamma)``, node ``l+s`` on the one at its right end in ``A(delta)``.
    """
    if k is None:
        k = compute_k(U)
    return (
        fundamental_column(U, "gamma", sol.l, k),
        fundamental_column(U, "delta", sol.hi, k),
    )
