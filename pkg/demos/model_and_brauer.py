"""The involution-model modules M_(2a,b,c), their Brauer quotients and vertex candidates.

    python demos/model_and_brauer.py
"""

from hyperoct.brauer import (
    brauer_quotient_dim,
    case_r_dim,
    iter_fixed_basis,
    n_lambda_dim,
    r_r_gens,
    summand_dim_table,
    two_row_compositions,
    vertex_catalog,
)
from hyperoct.model import act, enumerate_basis
from hyperoct.perms import SignedPermutation
from hyperoct.repdata import ModelIndex, model_constituents, model_dim, specht_dim

idx = ModelIndex(1, 1, 1)
print(f"M_(2,1,1) has dimension {model_dim(idx)}; first basis vectors:")
for v in list(enumerate_basis(idx))[:4]:
    print("  ", v.to_json())

# The ordinary character is the multiplicity-free sum over its constituents.
parts = model_constituents(idx)
print("constituents:", parts, "dims sum to", sum(specht_dim(*x) for x in parts))

# Signs: swapping two bracket positions costs -1.
v = next(enumerate_basis(ModelIndex(0, 0, 2)))
print("\nswap acting on", v.to_json(), "->", act(v, SignedPermutation.parse("(1 2)(1- 2-)")).to_json())

# Brauer quotient of M_(2p,0,0) at R_2 has dimension 2p.
for p in (3, 5):
    dim = brauer_quotient_dim(ModelIndex(p, 0, 0), r_r_gens(2, p, 2 * p), method="search")
    print(f"\np={p}: dim M_(2p,0,0)(R_2) = {dim}")
fixed = list(iter_fixed_basis(ModelIndex(3, 0, 0), r_r_gens(2, 3, 6)))
print("the six fixed vectors at p=3:", [str(v.g) for v in fixed])

# Closed form versus fixed-point count, and the split over two-row compositions.
p = 3
print("\n(s,t,u)  formula  count  sum of N dims")
for s, t, u in [(1, 0, 0), (1, 1, 0), (0, 1, 1), (2, 0, 1)]:
    r = 2 * s + t + u
    count = brauer_quotient_dim(ModelIndex(s * p, t * p, u * p), r_r_gens(r, p, r * p), method="search")
    split = sum(n_lambda_dim(lam, t, u, p) for lam in two_row_compositions(s))
    print(f"{(s, t, u)}  {case_r_dim(s, t, u, p):>7}  {count:>5}  {split:>5}")

# A Brauer quotient at R_r decomposes over T^r.
idx = ModelIndex(3, 3, 3)
for row in summand_dim_table(idx, p, 2):
    print(f"T^2 row (2s,t,u)=({row.s2},{row.t},{row.u}): {row.local_dim} x {row.complement_dim}")

print("\nvertex candidates for M_(6,3,0) at p=3:")
for d in vertex_catalog(ModelIndex(3, 3, 0), 3):
    print("  r =", d.r, d.name)
