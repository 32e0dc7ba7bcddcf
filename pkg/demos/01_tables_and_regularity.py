"""
Building operation tables and screening them for regularity
===========================================================

A three-sorted multiplication takes two elements and a connecting
symbol.  We store it as an (n, g, n) integer cube and everything else
in the library is a question about that cube.
"""

from gsg import GammaSemigroup, check_associativity, classify
from gsg.families import left_zero, zmod

# The modular family: x op_j y = x + y + j (mod n).  Two connecting
# symbols g0 and g1 mean "add, then shift by 0 or 1".
z4 = zmod(4, gammas=2)
print(z4.name, "elements:", z4.elements, "gammas:", z4.gammas)
print("1 g1 2 =", z4.mul("1", "g1", "2"))

# Associativity here is the mixed-symbol law (a x b) y c = a x (b y c).
# A clean table answers None; a corrupted one answers with a witness.
print("z4 associative:", check_associativity(z4) is None)

bad = z4.table.copy()
bad[0, 0, 0] = 3
broken = GammaSemigroup("broken", z4.elements, z4.gammas, bad)
print("corrupted witness:", check_associativity(broken))

# The regularity screen looks for x with a = a x' x x' a per element,
# all through one shared connecting symbol.
report = classify(z4)
print("z4 alpha-regular:", report.is_alpha_regular)
print("z4 completely alpha-regular:", report.is_completely_alpha_regular)
print("z4 gamma-inverse:", report.is_gamma_inverse)

# Left-zero tables answer every product with the left factor, so each
# element certifies itself.  They are completely regular but have many
# inverses, hence never gamma-inverse past one element.
lz = left_zero(["p", "q", "r"], ["g"], name="LZ3")
lz_report = classify(lz)
print("LZ3 completely alpha-regular:", lz_report.is_completely_alpha_regular)
print("LZ3 gamma-inverse:", lz_report.is_gamma_inverse)
for row in lz_report.per_element:
    print("  inverses of", row.element, "->", row.inverse_elements)
