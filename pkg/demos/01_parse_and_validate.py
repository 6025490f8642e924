"""
Reading and validating capacitated graphs
=========================================

The text format is a header line "n m" followed by one "u v c" line per
edge.  Validation enforces what the tolerance machinery needs: connected,
no self-loops, no parallel edges, and pairwise-distinct capacities.
"""

from bptol import parse_graph, serialize_graph, validate

text = """\
4 5
1 2 10
2 3 8
3 4 6
1 3 4
2 4 2
"""

g = parse_graph(text)
print(f"parsed: n={g.n}, m={g.m}")
print("edge 3 joins", g.endpoints(3), "with capacity", g.capacity(3))

# serialize_graph is the exact inverse of parse_graph.
assert serialize_graph(g) == text

# A valid graph returns no violation.
print("violation on the good graph:", validate(g))

# Duplicate capacities are rejected -- distinctness is what makes the
# maximum spanning tree (and hence every answer downstream) unique.
dup = parse_graph("3 3\n1 2 5\n2 3 5\n1 3 1\n")
v = validate(dup)
print("violation kind:", v.kind)
print("  ", v.message)

# Opting in to the documented tie-break (capacity, then edge id) lifts the
# restriction: comparisons then behave as if capacities were nudged apart.
print("with break-ties:", validate(dup, allow_equal_capacities=True))
