"""Basis diagrams and their product: stack, then reduce loops and decorations.

A diagram on m strands is a crossing-free pairing of m north and m south
nodes whose arcs may carry decorations on west-exposed edges.  Multiplying
stacks one diagram on the other; closed loops become factors of [2], a loop
with a single decoration kills the term, and longer decoration chains split
with Fibonacci weights.
"""

from tlh.algebra import AlgebraElement, evaluate_word, special_elements
from tlh.diagram import generator_U

m = 3
u1 = AlgebraElement.from_diagram(generator_U(1, m))
u2 = AlgebraElement.from_diagram(generator_U(2, m))

print("== the generators on 3 strands ==")
print("a diagram prints as |north><south| with * for decorations")
print(f"U1 = {u1}")
print(f"U2 = {u2}")
print()

print("== products ==")
print(f"U1 * U1           = {u1 * u1}        (a doubly decorated loop gives [2])")
print(f"U1 * U2           = {u1 * u2}")
print(f"U2 * U1 * U2      = {u2 * u1 * u2}")
quintic = u1 * u2 * u1 * u2 * u1
print(f"U1U2U1U2U1        = {quintic}")
print(f"3 U1U2U1 - U1     = {(u1 * u2 * u1).scale(3) - u1}   (the quintic relation)")
print()

print("== the special combinations ==")
s = special_elements(m)
for name in ("alpha", "beta", "epsilon", "zeta"):
    print(f"{name:8} = {s[name]}")
print(f"epsilon * beta  = {s['epsilon'] * s['beta']}   (equals U1)")
print(f"zeta * alpha    = {s['zeta'] * s['alpha']}   (equals U2)")
print(f"U2 * epsilon    = {u2 * s['epsilon']}")
print(f"zeta * U1       = {s['zeta'] * u1}   (the same element)")
print()

print("== words over the generators ==")
for word in (["U1", "U2"], ["U2", "alpha"], ["U1", "zeta"]):
    print(f"{' '.join(word):12} evaluates to {evaluate_word(word, m)}")
