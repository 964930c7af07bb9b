"""Primitives, indecomposables, and the duality between them.

P(H) is the space of x with Delta(x) = 1 (x) x + x (x) 1, a Lie algebra
under the commutator.  Q(H) = ker(counit) / ker(counit)^2 is a Lie coalgebra
under the commutator cobracket.  For finite-dimensional H the two are dual
to each other across H <-> H*: the certificate below checks that the
transpose of the canonical projection pi : H -> Q(H) maps Q(H)* isomorphically
onto P(H*), bracket and all.

Over a field of characteristic 0 both sides vanish for every
finite-dimensional Hopf algebra, so the instances with content live over F_p.
"""

from hopflab import FieldSpec, indecomposables, michaelis_verify, primitives
from hopflab.turaev import cyclic_group, symmetric_group
from hopflab.zoo import function_hopf, group_algebra, sweedler4, truncated_poly

Q = FieldSpec.rationals()
F3 = FieldSpec.prime(3)

print("=== F3[x]/(x^3): the smallest example with nonzero P and Q ===")
h = truncated_poly(3)
p = primitives(h)
q = indecomposables(h)
print("  P basis (coordinates on 1, x, x2):", [list(r) for r in p.space.basis.data])
print("  ker(counit) dim:", q.ker_eps.dim, " (ker counit)^2 dim:", q.ker_eps_sq.dim)
print("  Q dim:", q.quotient.dim)
print()

print("=== The certificate for P(H*) = Q(H)* ===")
cert = michaelis_verify(h)
print("  dim P(H*) =", cert.dim_p, ", dim Q(H) =", cert.dim_q)
print("  alpha lands in primitives:", cert.image_in_primitives)
print("  alpha injective:", cert.injective)
print("  alpha is a Lie morphism:", cert.lie_morphism)
print("  verified:", cert.verified)
print()

print("=== Characteristic 0 forces both sides to zero ===")
for h, name in [(group_algebra(symmetric_group(3), Q), "k[S3]"), (sweedler4(Q), "sweedler4")]:
    cert = michaelis_verify(h)
    print(f"  {name}: P = {cert.dim_p}, Q = {cert.dim_q}, verified = {cert.verified}")
print()

print("=== Functions on Z/3 over F3: primitives are additive characters ===")
fun = function_hopf(cyclic_group(3), F3)
p = primitives(fun)
print("  basis (values at 0, 1, 2):", [list(r) for r in p.space.basis.data])
print("  ... the character i -> i, and the dual side:")
cert = michaelis_verify(group_algebra(cyclic_group(3), F3))
print("  k[Z/3] over F3: P(dual) =", cert.dim_p, ", Q =", cert.dim_q)
