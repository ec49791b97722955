"""Undressing a potential by a soliton's fundamental eigenvector pair."""

from __future__ import annotations

from .lax import Case, EigenSeq, Potential, Soliton, fundamental_pair


def undress_general(U: Potential, phi1: EigenSeq, phi2: EigenSeq) -> Potential:
    """``u~_i = u_i + Phi1_{i+1} + Phi2_i - Phi1_i - Phi2_{i+1}``.

    Evaluated on the canonical window widened by one site on each side, where
    both eigen-sequences are already in their tails.
    """
    lo, hi = U.window
    return Potential.from_dict(
        {i: U[i] + phi1[i + 1] + phi2[i] - phi1[i] - phi2[i + 1] for i in range(lo - 1, hi + 2)}
    )


def undress_closed_form(U: Potential, sol: Soliton) -> Potential:
    """Explicit undressed potential: left part moves right, right part moves left.

    Inside the soliton the values become ``u_{i-1}`` in C1 and ``1 - u_i``
    otherwise.
    """
    if sol is None:
        raise ValueError("no soliton selected")
    l, h = sol.l, sol.hi
    lo, hi = U.window
    out = {}
    for i in range(lo - 1, hi + 2):
        if i <= l:
            out[i] = U[i - 1]
        elif i >= h:
            out[i] = U[i + 1]
        elif sol.case is Case.C1:
            out[i] = U[i - 1]
        else:
            out[i] = 1 - U[i]
    return Potential.from_dict(out)


def undress(U: Potential, sol: Soliton) -> Potential:
    phi1, phi2 = fundamental_pair(U, sol)
    return undress_general(U, phi1, phi2)


def undress_crosscheck(U: Potential, sol: Soliton) -> bool:
    return undress(U, sol) == undress_closed_form(U, sol)
