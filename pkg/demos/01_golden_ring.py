"""The coefficient ring: golden scalars and Laurent polynomials in v.

Scalars have the form a + b*phi with phi^2 = phi + 1 and rational a, b;
polynomials in v and v^-1 over these scalars carry the loop parameter
[2] = v + v^-1.  All arithmetic is exact.
"""

from fractions import Fraction

from tlh.ring import GAMMA1, GAMMA2, PHI, GoldenScalar, LaurentPoly, fib_pair

print("== golden scalars ==")
print(f"phi             = {PHI}")
print(f"phi * phi       = {PHI * PHI}        (phi solves x^2 = x + 1)")
print(f"gamma1, gamma2  = {GAMMA1} and {GAMMA2}  (the two roots)")
print(f"gamma1 * gamma2 = {GAMMA1 * GAMMA2}")
print(f"gamma1 + gamma2 = {GAMMA1 + GAMMA2}")
print(f"(1 - 2 phi)^2   = {GoldenScalar(1, -2) ** 2}    (the discriminant)")
print(f"1 / phi         = {PHI.inverse()}     (so coordinates may become rational)")
print(f"half            = {GoldenScalar(Fraction(1, 2))}")
print()

print("== decoration chains reduce through Fibonacci numbers ==")
print("a chain of r decorations on one edge splits as (r-1) and (r-2),")
print("so its weight on a closed loop is F(r-1) and on an open edge (F(r-1), F(r)):")
for r in range(7):
    print(f"  r = {r}: (F(r-1), F(r)) = {fib_pair(r)}")
print()

print("== Laurent polynomials ==")
delta = LaurentPoly.delta()
print(f"[2]        = {delta}")
print(f"[2]^2      = {delta ** 2}")
print(f"[2]^3      = {delta ** 3}")
print(f"[2]^3/[2]  = {(delta ** 3).exact_div(delta)}   (exact division, or None)")
print(f"[2] - [2]  = {delta - delta}   (zero prints as 0)")
mixed = delta * LaurentPoly.const(GAMMA2) + LaurentPoly.v_pow(-2)
print(f"mixed      = {mixed}")
print(f"serialized = {mixed.to_json()}")
print(f"round trip = {LaurentPoly.from_json(mixed.to_json()) == mixed}")
