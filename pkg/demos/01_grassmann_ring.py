"""Walk through the mod-2 cohomology of a small real Grassmannian.

Run:  python demos/01_grassmann_ring.py
"""

from __future__ import annotations

from math import comb

from massadmit.grassmann import GrassmannSpec, dual_classes, graded_basis, nonvanishing_certificates, q_binomial

spec = GrassmannSpec(5, 2)
print(f"G_{spec.ell}(R^{spec.d}): top degree {spec.top_degree}, dimension {comb(spec.d, spec.ell)}")

# The dual classes come from inverting the total Stiefel-Whitney class.
# Those of degree above d-l are the relations of the ring.
table = dual_classes(spec)
for r, p in enumerate(table.entries):
    tag = "relation" if r > spec.codim else ""
    print(f"  wb{r} = {p}  {tag}")

# Row reduction in each degree leaves a quotient basis whose size matches
# the Gaussian binomial coefficient.
for i in range(spec.top_degree + 1):
    gb = graded_basis(spec, i)
    basis = ", ".join(str(m) for m in gb.basis_monomials())
    print(f"  degree {i}: rank {gb.rank} (q-binomial {q_binomial(spec.d, spec.ell, i)})  {basis}")

print("top classes w_l^(d-l) and wb_(d-l)^l nonzero:", nonvanishing_certificates(spec))
