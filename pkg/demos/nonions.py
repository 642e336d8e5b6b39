"""The nonion algebra: two cube roots of the identity spanning all 3x3 matrices."""

from ternalg.cubic_matrix import NonionAlgebra, nonion_generators, nonion_relation_check
from ternalg.cyclotomic import omega

w = omega()
e1, e2 = nonion_generators()
print("eta1 =", e1.to_json())
print("eta2 eta1 == w^2 eta1 eta2:", e2 @ e1 == e1 @ e2 * (w * w))
print("rank of the 9 monomials:", NonionAlgebra().rank)
for triple in [(e1, e1, e1), (e1, e1, e2)]:
    r = nonion_relation_check(*triple)
    print(r.name, r.passed, r.details)
