"""
Gate counts grow with log(degree), not degree
=============================================

"""

from schurcirc import CircuitBuilder, Partition, build_h_single, build_schur


def h_arith(k, n):
    b = CircuitBuilder(k)
    out = build_h_single(b, list(b.inputs()), n)
    return b.snapshot(out).gate_count()[0]


def schur_arith(n):
    b = CircuitBuilder(3)
    out, _ = build_schur(b, Partition((n, 1)), 3)
    return b.snapshot(out).gate_count()[0]


# doubling the degree adds a near-constant number of gates
print("n        h, k=3   h, k=4   s_(n,1), k=3")
for t in range(4, 15):
    n = 2 ** t
    print(f"{n:<8} {h_arith(3, n):<8} {h_arith(4, n):<8} {schur_arith(n)}")
