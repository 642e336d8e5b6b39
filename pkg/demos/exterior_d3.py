"""The Z3 exterior differential: d^3 = 0 and the module dimensions."""

import random

from ternalg.exterior import DifferentialForm, d, d3_zero_check, module_dimension, random_poly
from ternalg.poly import variables

x, y, z = variables(3)
f = DifferentialForm.function(x * x * y + z ** 3)
print("f      =", f)
print("d f    =", d(f))
print("d^2 f  =", d(d(f)))
print("d^3 f  =", d(d(d(f))))
rng = random.Random(1)
print("d^3 = 0 on 20 random polynomials:",
      all(d3_zero_check(random_poly(rng, 3, 4)).passed for _ in range(20)))
print("module dimensions:", [module_dimension(n) for n in range(1, 6)])
