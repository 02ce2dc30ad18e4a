"""Dividing x^(d-1) by the configuration generator over the Grassmannian.

The remainder never vanishes: its top coefficient is the dual class
wb_(d-l), which is why x^(d-1) stays outside the ideal for k = 1.

Run:  python demos/04_division_identities.py
"""

from __future__ import annotations

from massadmit.index import cofactor_identity_check, crabb_division

for d, ell in [(4, 1), (5, 2), (6, 3)]:
    res = crabb_division(d, ell)
    coeffs = ", ".join(f"a{r} = {a}" for r, a in enumerate(res.remainder_coeffs))
    print(f"d={d} l={ell}: quotient {res.quotient}")
    print(f"   remainder coefficients: {coeffs}")
    print(f"   x^d lies in the ideal via the explicit cofactor: {cofactor_identity_check(d, ell)}")
