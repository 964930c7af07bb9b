"""Dualization, convolution, and left integrals.

The dual of a finite-dimensional Hopf algebra transposes every structure
matrix: multiplication and comultiplication trade places, as do unit and
counit.  Dualizing twice gives back the original object bit-for-bit, which
the canonical JSON serialization makes directly observable.
"""

from hopflab import FieldSpec, Matrix, convolution, convolution_unit, dual_hopf, left_integrals
from hopflab.serialize import dumps
from hopflab.turaev import cyclic_group, symmetric_group
from hopflab.zoo import group_algebra, sweedler4, truncated_poly

Q = FieldSpec.rationals()

print("=== dual(dual(H)) is byte-identical to H ===")
for h, name in [(sweedler4(Q), "sweedler4"), (group_algebra(symmetric_group(3), Q), "kS3")]:
    print(f"  {name}:", dumps(dual_hopf(dual_hopf(h))) == dumps(h))
print()

print("=== The dual of a group algebra is the function algebra ===")
kz2 = group_algebra(cyclic_group(2), Q)
fun = dual_hopf(kz2)
print("  delta-basis products (pointwise):")
for i in range(2):
    for j in range(2):
        print(f"    {fun.basis_names[i]} * {fun.basis_names[j]} ->",
              list(fun.algebra.product(i, j)))
print()

print("=== The antipode is the convolution inverse of the identity ===")
h = truncated_poly(5)
ident = Matrix.identity(h.field, h.dim)
lhs = convolution(ident, h.antipode, h.coalgebra, h.algebra)
print("  id * S == unit . counit:", lhs == convolution_unit(h.coalgebra, h.algebra))
print()

print("=== Left integrals: functionals t with f * t = f(1) t ===")
for h, name in [
    (group_algebra(cyclic_group(2), Q), "k[Z/2]"),
    (group_algebra(symmetric_group(3), Q), "k[S3]"),
    (sweedler4(Q), "sweedler4"),
    (truncated_poly(3), "F3[x]/(x^3)"),
]:
    space = left_integrals(h)
    basis = [" + ".join(f"({c})*{n}*" for c, n in zip(row, h.basis_names) if c != 0)
             for row in space.basis.data]
    print(f"  {name}: dimension {space.dim}, basis {basis}")
print()
print("For a group algebra the integral picks out the identity element,")
print("for the truncated polynomial algebra the top coefficient.")
