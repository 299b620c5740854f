"""
Building and evaluating monotone circuits
=========================================

"""

from schurcirc import CircuitBuilder, build_h_single, h_eval

# every gate lives in a builder; inputs() hands back the variable gates
b = CircuitBuilder(2)
x1, x2 = b.inputs()

# the degree-5 complete homogeneous polynomial in two variables
out = build_h_single(b, [x1, x2], 5)

# snapshot freezes the gates reachable from the output into a Circuit
circ = b.snapshot(out)
arith, total = circ.gate_count()
print(f"h_5(x1,x2): {arith} arithmetic gates, {total} gates overall")

# exact integer evaluation, and the brute-force oracle agrees
point = (1, 2)
print("circuit value at (1,2):", circ.evaluate(point))
print("oracle value at (1,2): ", h_eval(5, 2, point))

# the text form round-trips through deserialize()
print()
print(circ.serialize())
