"""
Maximal chains, descent sets, and the multichain identity
=========================================================

"""

import random

from schurcirc import (
    compute_q_star,
    enumerate_max_chains,
    enumerate_multichains,
    full_interval,
    multichain_gf_eval,
)

# height-2 strictly increasing columns with entries in {1..5},
# ordered entrywise; five maximal chains run bottom to top
iv = full_interval(2, 5)
chains = enumerate_max_chains(iv)
print(f"{len(chains)} maximal chains in the full interval")
for chain in chains:
    descents = compute_q_star(iv, chain).columns(chain)
    print("  chain", " ".join(str(c) for c in chain.columns), "| Q* =", descents)

# the descent sets split all multichains into disjoint families, which is
# what makes the generating function a plain sum over maximal chains
rng = random.Random(0)
weights = {e: rng.randint(1, 5) for e in iv.elements()}
print()
for m in range(4):
    closed = multichain_gf_eval(iv, m, weights)
    brute = 0
    for mc in enumerate_multichains(iv, m):
        term = 1
        for e in mc:
            term *= weights[e]
        brute += term
    print(f"size-{m} multichains: closed form {closed}, brute force {brute}")
