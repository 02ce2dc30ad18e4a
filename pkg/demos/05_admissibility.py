"""Certify 4-tuples (d, l, k, j) and compare with the classical bounds.

Run:  python demos/05_admissibility.py
"""

from __future__ import annotations

from massadmit.admissibility import Tuple4, bounds, check, search_min_d, table1

for rep in table1():
    t = rep.tuple
    print(f"({t.d}, {t.ell}, {t.k}, {t.j}) {rep.verdict.value:22s} witness {rep.witness}")

# The printed row (17, 14, 2, 15) is in the ideal; the same j certifies from d = 23.
print("least certifying d for k=2, j=15:", search_min_d(2, 15, 64))

for k, j in [(2, 5), (2, 7), (3, 3)]:
    b = bounds(k, j)
    d = search_min_d(k, j, 256, with_oracle=(k <= 2 and j <= 5))
    print(f"k={k} j={j}: Ramos lower {b.ramos_lower}, criterion threshold {d}, upper {b.mvz_upper}")

print(check(Tuple4(6, 2, 2, 2), "both").verdict.value)
