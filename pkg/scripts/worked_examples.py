"""Print the worked one- and two-soliton instances: sequences, critical cycles,
fundamental pairs, undressing, mu and the forbidden edges.

    python scripts/worked_examples.py [--pi 3/5 7/10 4/5 9/10]
"""

import argparse
from fractions import Fraction

from udlax.constraints import compute_mu, fails_for_every_mu, forbidden_edges, pair_status
from udlax.lax import (
    build_delta,
    build_delta_matrix,
    build_gamma,
    build_gamma_matrix,
    classify_case,
    compute_k,
    detect_solitons,
    fundamental_pair,
)
from udlax.maxplus import critical_graph
from udlax.samples import PI, one_soliton_table, two_soliton_table
from udlax.undress import undress, undress_crosscheck


def row(label, values):
    return f"{label:>8}: " + " ".join(f"{str(v):>6}" for v in values)


def show(name, U, width):
    k = compute_k(U)
    tag = classify_case(U)
    print(f"== {name}  case={tag.case.value}  v_sup={tag.v_sup}  k={k}")
    sites = range(width)
    g, d = build_gamma(U, 0, width - 1), build_delta(U, 0, width - 1)
    print(row("l", sites))
    print(row("u", [U[i] for i in sites]))
    print(row("gamma", [g[i] for i in sites]))
    print(row("delta", [d[i] for i in sites]))
    for label, A in (("gamma", build_gamma_matrix(U, k)), ("delta", build_delta_matrix(U, k))):
        comps = [sorted(c) for c in critical_graph(A).components]
        print(f"critical components of A({label}): {comps}")
    fwd, bwd = forbidden_edges(U)
    print(f"forbidden in Sat(Phi1): {sorted(fwd)}   in Sat(Phi2): {sorted(bwd)}")
    for n, sol in enumerate(detect_solitons(U)):
        phi1, phi2 = fundamental_pair(U, sol, k)
        print(f"-- soliton {n}: l={sol.l} s={sol.s}  mu={compute_mu(U, sol)}")
        print(row("Phi1", phi1.restrict(0, width - 1)))
        print(row("Phi2", phi2.restrict(0, width - 1)))
        W = undress(U, sol)
        print(row("undress", [W[i] for i in sites]) + f"   closed form agrees: {undress_crosscheck(U, sol)}")
        rep = pair_status(U, sol, k)
        print(f"   full system with its mu: {'pass' if rep.ok else 'fail'}"
              f"; fails for every mu: {fails_for_every_mu(U, phi1, phi2, k)}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pi", nargs=4, type=Fraction, default=list(PI), metavar="P")
    args = ap.parse_args()
    show("one soliton", one_soliton_table(tuple(args.pi)), 7)
    show("two solitons", two_soliton_table(tuple(args.pi)), 9)


if __name__ == "__main__":
    main()
