"""Walk through signed permutations, cycle types and the normaliser of R_r.

    python demos/signed_permutations.py
"""

from math import factorial

from hyperoct.perms import (
    GeneratorSet,
    SignedPermutation,
    all_cycle_types,
    centralizer_order,
    class_size,
    cycle_type,
    group_closure_order,
    make_rho,
    make_sigma,
    make_tau,
    make_z,
)

# Barred symbols are written with a trailing "-".  (1 2-)(1- 2) swaps 1 with
# 2-bar; it is a positive 2-cycle, so it is conjugate to (1 2)(1- 2-).
g = SignedPermutation.parse("(1 2-)(1- 2)")
h = SignedPermutation.parse("(1 2 1- 2-)")
print("cycle type of", g, "is", cycle_type(g))
print("cycle type of", h, "is", cycle_type(h))

# Conjugacy classes of C2 wr S_4, with the centraliser product formula.
n = 4
print(f"\nclasses of C2 wr S_{n}:")
for ct in all_cycle_types(n):
    print(f"  {str(ct):>10}  centraliser {centralizer_order(ct):>4}  class size {class_size(ct):>3}")
print("total:", sum(class_size(ct) for ct in all_cycle_types(n)), "=", 2**n * factorial(n))

# The normaliser of R_r = <sigma_1 ... sigma_r> at p = 3.
p = 3
for r in (1, 2):
    deg = r * p
    gens = [make_tau(i, p, deg) for i in range(1, r + 1)] + [make_sigma(i, p, deg) for i in range(1, r + 1)]
    gens += [make_rho(i, p, deg) for i in range(1, r)] + [make_z(r, p, deg)]
    order = group_closure_order(GeneratorSet(deg, tuple(gens)))
    print(f"\nr={r}: normaliser order {order} = (2p)^r r! (p-1) = {(2 * p) ** r * factorial(r) * (p - 1)}")
    print("  z_r =", make_z(r, p, deg))
