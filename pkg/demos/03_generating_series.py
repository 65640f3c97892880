"""
Counting partitions against the character
=========================================

Count partitions satisfying all 34 difference conditions and compare with
the principally specialized character, divided by its Heisenberg factor.
They agree up to q^41 and differ by one at q^42 and q^48.
"""

from a22lead import DominantWeight, builtin_condition_set, chi5, count_series, principal_character
from a22lead.characters import heisenberg_character, specialization_data
from a22lead.partitions import length7_candidates

for w in [(5, 0), (3, 1), (1, 2)]:
    data = specialization_data(DominantWeight(*w))
    print(w, "J =", data.j_residues, "mod", data.modulus)

chi = chi5(48)
# chi5 is the full character with the Heisenberg factor removed
assert principal_character(DominantWeight(5, 0), 48) == heisenberg_character(48) * chi
print(chi)

cs = builtin_condition_set("a22-level5")
g = count_series(cs, 48)
for n in range(49):
    if g[n] != chi[n]:
        print(f"q^{n}: g = {g[n]}, chi = {chi[n]}")

# one length-7 partition of 42 survives all conditions
print(length7_candidates(42, cs))
at48 = length7_candidates(48, cs)
print(len(at48), "length-7 candidates at 48, for example", at48[:3])
