"""Hook-addition sets and decomposition columns of the blocks reached by involution models.

    python demos/decomposition_columns.py
"""

from hyperoct.decomp import decomposition_columns, projectivity_report
from hyperoct.errors import HypothesisViolation
from hyperoct.partitions import format_bipartition, hypothesis_check, maximal_elements, w_and_E

p = 3
for b in range(4):
    w, es = w_and_E((), p, b)
    print(f"E_{b}(empty) at p=3: weight {w}, members {es}, maximal {maximal_elements(es)}")
print("hypothesis at b=3:", hypothesis_check((), p, 3))

for gamma, delta, b, c in [((), (), 1, 0), ((), (), 1, 1), ((1,), (), 2, 1), ((), (), 2, 0)]:
    res = decomposition_columns(gamma, delta, b, c, p)
    print(f"\ngamma={gamma} delta={delta} b={b} c={c}: block {res.block.as_tuple()}, unique {res.unique}")
    for col in res.columns:
        print("  column", format_bipartition(col.label), "rows", [format_bipartition(r) for r in col.sorted_rows()])

print("\nprojectivity:", projectivity_report((), (), 1, 0, p))

try:
    decomposition_columns((), (), 3, 0, p)
except HypothesisViolation as exc:
    print("\nrefused:", exc)
