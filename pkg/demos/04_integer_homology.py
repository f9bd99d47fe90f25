"""Smith normal form and homology groups, exactly over the integers.

Run with:  PYTHONPATH=src python3 demos/04_integer_homology.py
"""

from effhom import (
    IntMatrix,
    cone_contraction,
    differential_matrix,
    homology_at,
    homology_via_effective_homology,
    smith_normal_form,
)
from effhom.instances import cone_example, fcc1, zxznat

# Diagonalize an integer matrix with unimodular transforms.
a = IntMatrix.from_rows([[2, 4], [6, 8]])
result = smith_normal_form(a)
print("A                :", a.to_rows())
print("D = U A V        :", result.D.to_rows())
print("invariant factors:", result.invariant_factors)
print("U                :", result.U.to_rows())
print("V                :", result.V.to_rows())

# Differentials of finite-type complexes become matrices.
print("\nd(0) of fcc1     :", differential_matrix(fcc1(), 0).to_rows())
print("d(1) of fcc1     :", differential_matrix(fcc1(), 1).to_rows())

# Homology per degree: kernel of the incoming map modulo the outgoing image.
print("\nhomology of fcc1:")
for i in range(-2, 3):
    print(f"  H_{i} = {homology_at(fcc1(), i)}")

# The same groups for an infinite-type complex, through its reduction.
print("\nhomology of cc1 (+) cc2, transferred to the finite bottom:")
for i in range(-2, 3):
    print(f"  H_{i} = {homology_via_effective_homology(zxznat(), i)}")

# The example cone is acyclic, two ways: by integer linear algebra on its
# finite-type bottom, and by the derived contracting homotopy.
bottom = cone_example().reduction.bottom
print("\nhomology of the example cone bottom:")
for i in range(-2, 3):
    print(f"  H_{i} = {homology_at(bottom, i)}")
k = cone_contraction(zxznat().reduction)
print("contraction witness built over", k.over.module_at(0))
