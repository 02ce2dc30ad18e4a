"""Two ways to decide whether an Euler class lies in the index ideal.

The fast path only looks for a term with every exponent below d.  The
oracle builds the whole homogeneous slice of the ideal and row-reduces it.
They agree whenever k <= l; when k > l only the oracle is meaningful.

Run:  python demos/03_membership_engines.py
"""

from __future__ import annotations

from massadmit.dickson import euler_class
from massadmit.index import RingSlice, membership_fast, membership_oracle

e = euler_class(2, 2)
print("e_2,2 =", e.poly)
for d, ell in [(3, 2), (4, 2), (5, 3)]:
    fast = membership_fast(e, d)
    oracle = membership_oracle(e, d, ell, 2)
    sl = RingSlice(d, ell, 2, e.degree)
    print(f"d={d} l={ell}: fast member={fast.member} witness={fast.witness}  "
          f"oracle member={oracle.member}  slice {sl.shape[0]}x{sl.shape[1]}, rank {sl.rank}")

# Outside k <= l the monomial test is too weak:
e = euler_class(2, 1)
print("k=2, l=1, d=3: fast says", membership_fast(e, 3).member, "oracle says", membership_oracle(e, 3, 1, 2).member)
