"""
Congruences, quotient tables, and the first isomorphism check
=============================================================

Gluing two elements of a table forces more identifications until the
partition is compatible with every product.  The quotient then carries
a well-defined table of its own, and any homomorphism factors through
the quotient by its kernel.
"""

from gsg import (
    GammaHomomorphism,
    check_associativity,
    first_isomorphism_check,
    generate_congruence,
    kernel_congruence,
    quotient,
    verify_homomorphism,
)
from gsg.families import zmod

z4 = zmod(4)

# Ask for 0 ~ 2.  Compatibility with x op y = x + y forces 1 ~ 3 too,
# and the least such partition has exactly two classes.
rho = generate_congruence(z4, [("0", "2")])
print("classes of the congruence generated by 0 ~ 2:")
for cls in rho.classes():
    print("  ", cls)

q, proj = quotient(z4, rho)
print("quotient:", q.name, "elements:", q.elements)
print("quotient associative:", check_associativity(q) is None)
print("projection sends 3 to", proj.carrier_map["3"])

# The doubling map from Z4 onto Z2 has the same fibers, so its kernel
# congruence reproduces rho and the induced map is an isomorphism.
z2 = zmod(2)
dbl = GammaHomomorphism("dbl", z4, z2,
                        {"0": "0", "1": "1", "2": "0", "3": "1"},
                        {"g": "g"})
print("dbl is a homomorphism:", verify_homomorphism(dbl) is None)
print("kernel classes:", kernel_congruence(dbl).classes())

report = first_isomorphism_check(dbl)
print("induced map well defined:", report.well_defined)
print("induced map is a homomorphism:", report.is_homomorphism)
print("injective:", report.injective, " diagram commutes:", report.commutes)
print("image inside Z2:", report.image_elements)
