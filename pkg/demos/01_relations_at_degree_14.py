"""
Relations at degree 14
======================

Expand the eight relations behind the degree 14 computation, collect them
into a matrix over Q(w) and row reduce.  The fifth pivot, 5522, is the
leading term that becomes a new difference condition.
"""

from a22lead import RelationDescriptor, build_matrix, generate_relation, leading_terms, row_reduce
from a22lead.cyclotomic import CycNum
from a22lead.vertexrel import format_partition

# w is a primitive 6th root of unity; w^2 = w - 1
w = CycNum(0, 1)
print("w^2 =", w * w, "  w^6 =", w ** 6)

# S(-11)X(-3): the coefficients below 7 in every part
rel = generate_relation(RelationDescriptor.parse("S:[]:11:[3]"), max_part=6)
for coeff, parts in rel.to_pairs():
    print(f"{str(coeff):>10}  X(-{format_partition(parts)})")

# the eight rows; two of them are scaled by 1/3 to keep integers small
rows = []
for text, scale in [
    ("R(-11)X(-3)", CycNum(1) / 3), ("R(-12)X(-2)", 1), ("S(-11)X(-3)", 1), ("S(-12)X(-2)", 1),
    ("X(-6)R(-8)", CycNum(1) / 3), ("X(-5)R(-9)", 1), ("X(-6)S(-8)", 1), ("X(-5)S(-9)", 1),
]:
    rows.append(generate_relation(RelationDescriptor.parse(text), 6).scaled(scale))

m = build_matrix(rows, degree=14, length=4, max_part=6)
print()
print(m.to_tsv())

red = row_reduce(m)
print(red.to_tsv())

report = leading_terms(m)
print("pivots    ", [format_partition(p) for p in report.pivots])
print("new       ", [format_partition(p) for p in report.new_pivots])

# the certificate says which combination of the input rows gives 5522
for label, c in report.certificates[(5, 5, 2, 2)].items():
    print(f"{str(c):>12} * {label}")
