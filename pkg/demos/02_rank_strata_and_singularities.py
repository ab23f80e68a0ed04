#!/usr/bin/env python3
"""Two-eigenvalue varieties: rank strata, the singular middle closures, and
the exact tangent-space computation that detects them."""

from voganlab import enumerate_orbits, tangent_dim_at, two_eigenvalue_variety
from voganlab.report import format_table

for n in (2, 3):
    v = two_eigenvalue_variety("gl", n)
    table = enumerate_orbits(v)
    print(f"grades ({n}, {n}): V is the {v.total_dim}-dim matrix space, "
          f"{len(table)} rank orbits")
    rows = []
    for c in table:
        tangents = [tangent_dim_at(c, d) for d in table if d.index <= c.index]
        rows.append([
            c.label(), c.dim,
            ", ".join(str(t) for t in tangents),
            "smooth" if all(t == c.dim for t in tangents) else "SINGULAR",
        ])
    print(format_table(["orbit", "dim", "tangent dims at strata below", "closure"], rows))
    print()

print("The rank-r closure is the classical determinantal variety; its tangent")
print("space at a lower stratum jumps to the full ambient dimension, which is")
print("exactly what the first-order rank conditions report.")
