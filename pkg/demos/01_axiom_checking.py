"""Axiom verification on structure constants, with witnesses.

Every object in this library is a bundle of dense matrices over an exact
field, and every axiom is a matrix identity checked with zero tolerance.
This script builds a few structures, verifies them, then deliberately breaks
one to show what a failure report looks like.
"""

from dataclasses import replace

from hopflab import FieldSpec, Matrix, check_hopf, check_group
from hopflab.zoo import group_algebra, sweedler4
from hopflab.turaev import symmetric_group

Q = FieldSpec.rationals()

print("=== The symmetric group on 3 letters, from its multiplication table ===")
s3 = symmetric_group(3)
print(check_group(s3))
print()

print("=== Its group algebra over Q as a Hopf algebra ===")
ks3 = group_algebra(s3, Q)
report = check_hopf(ks3)
print(report)
print()

print("=== A 4-dimensional Hopf algebra whose antipode has order 4 ===")
h4 = sweedler4(Q)
print(check_hopf(h4))
s2 = h4.antipode @ h4.antipode
print("S^2 == id:", s2 == Matrix.identity(Q, 4))
print("S^4 == id:", s2 @ s2 == Matrix.identity(Q, 4))
print()

print("=== Breaking the antipode produces a witness, not just a boolean ===")
tampered = replace(h4, antipode=Matrix.identity(Q, 4))
bad = check_hopf(tampered)
for check in bad.failures:
    print(f"  {check.name}: witness = {check.witness}")
