"""Dickson polynomials and the Euler classes e_{k,j} built from them.

Run:  python demos/02_dickson_and_euler.py
"""

from __future__ import annotations

from massadmit.dickson import critical_exponent, critical_slice, dickson_coeffs, euler_class, render_family

for name, text in render_family(2):
    print(f"{name:8s} {text}")

fam = dickson_coeffs(3)
print(f"Delta_3 has {len(fam.top)} terms in degree 7")

# e_{k,j} = Delta_k^j / (x1 ... xk) is symmetric of degree (2^k - 1) j - k.
for k, j in [(2, 3), (3, 2), (3, 20)]:
    e = euler_class(k, j)
    print(f"e_{k},{j}: degree {e.degree}, {len(e.poly)} terms")

# The largest x_k power that still leaves room for a witness sits at the
# critical exponent 2^(t+k-1) + r; its coefficient is a power of Delta_(k-1).
k, j = 3, 5
print(f"coefficient of x{k}^{critical_exponent(k, j)} in Delta_{k}^{j}: {len(critical_slice(k, j))} terms")
