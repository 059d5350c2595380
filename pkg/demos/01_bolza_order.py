"""
Arithmetic in the Bolza order
=============================

The order has Z[sqrt2]-basis 1, alpha, beta, alpha*beta. Elements are exact,
so every identity below is checked with ``==``, not up to rounding.
"""

from bolza import order as bo
from bolza.quadratic import ZSqrt2
from bolza.quaternion import order_discriminant
from bolza.words import eval_word

a, b = bo.ALPHA, bo.BETA

# the defining relations of the (3,3,4) triangle group, lifted with a sign
print("alpha^3        =", a**3)
print("beta^3         =", b**3)
print("(alpha beta)^4 =", (a * b) ** 4)

# images in the quaternion algebra (-3, sqrt2)
print("alpha as a quaternion:", bo.basis_change(a))
print("beta  as a quaternion:", bo.basis_change(b))

# discriminants of the standard order, an intermediate order and the Bolza order
for name in ("standard", "O1", "bolza"):
    print(f"disc({name}) = {order_discriminant(bo.ORDERS[name])}")

# the element delta, written two ways
closed = bo.ONE + ZSqrt2(0, 1) * (bo.ONE + ZSqrt2(1, 1) * (a - b))
print("closed form                     :", closed)
print("(alpha beta)^2 (beta alpha)^-2  :", eval_word("ababABAB"))
print("(alpha beta)^2 (beta alpha)^2   :", (a * b) ** 2 * (b * a) ** 2)
# the last line is the negative: the two agree only in the projective group

# the systolic trace of the Bolza surface
print("trace of c1:", eval_word("AbaBab").trace())
