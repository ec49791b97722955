"""Random survey of the statements that need care:

* critical components vs detected solitons (count mismatches),
* multi-soliton pairs that still solve the full system, split by whether
  every other soliton has all adjacent sums exactly 1.

    python scripts/survey.py [--n 500] [--seed 0]
"""

import argparse
import random
from collections import Counter

from udlax.constraints import fails_for_every_mu
from udlax.lax import Case, build_matrix, compute_k, detect_solitons, fundamental_pair
from udlax.maxplus import critical_graph
from udlax.samples import random_multi_soliton, random_potential


def strict(U, sol):
    return any(U.pair_sum(i) > 1 for i in range(sol.l, sol.hi))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    mismatch = Counter()
    example = None
    for t in range(args.n):
        U = random_potential(rng, case=(Case.C1, Case.C2, Case.BORDERLINE)[t % 3])
        k = compute_k(U)
        want = max(len(detect_solitons(U)), 1)
        for kind in ("gamma", "delta"):
            got = len(critical_graph(build_matrix(U, kind, k)).components)
            if got != want:
                mismatch[kind] += 1
                example = example or U
    print(f"component/soliton count mismatches over {args.n} potentials: {dict(mismatch) or 0}")
    if example is not None:
        print(f"  first mismatch: {example.to_json()}")

    table = Counter()
    for _ in range(args.n):
        U = random_multi_soliton(rng, n_solitons=rng.randint(2, 3), max_den=rng.choice([4, 10]))
        sols = detect_solitons(U)
        for s in sols:
            others_strict = any(strict(U, o) for o in sols if o != s)
            table[others_strict, fails_for_every_mu(U, *fundamental_pair(U, s), 1)] += 1
    print("multi-soliton pairs (another soliton has a sum > 1, pair fails for every mu): count")
    for key in sorted(table):
        print(f"  {key}: {table[key]}")


if __name__ == "__main__":
    main()
