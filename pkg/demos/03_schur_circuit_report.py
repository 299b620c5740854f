"""
A Schur polynomial circuit and its gate-count report
====================================================

"""

from schurcirc import CircuitBuilder, Partition, build_schur, schur_eval

# s_(4,2) in four variables: first dissect the shape into rectangles,
# then sum one product of chain terms per pruning
shape = Partition((4, 2))
b = CircuitBuilder(4)
out, report = build_schur(b, shape, 4)
circ = b.snapshot(out)

point = (1, 2, 3, 4)
print("circuit value:", circ.evaluate(point))
print("oracle value: ", schur_eval(shape, 4, point))

# the report pairs measured gate counts with the coarse a-priori bound
print()
print(report.to_json())
