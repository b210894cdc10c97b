"""Counting the basis: layer sizes, the closed-form rank, one excluded shape.

The basis diagrams on n+1 strands stratify by the number k of caps per
face.  Each face of a k-cap diagram is an admissible half-diagram; there
are C(n+1, k) decorated half-diagrams in total and exactly one of them is
inadmissible, so each layer is indexed by C(n+1, k) - 1 halves.
"""

from math import comb

from tlh.cellular import lambda_poset, tableaux
from tlh.diagram import HalfDiagram, enumerate_diagrams, enumerate_generalized_half, enumerate_half

print("== total rank against the closed form ==")
for n in range(2, 7):
    enumerated = len(enumerate_diagrams(n + 1))
    formula = comb(2 * n + 2, n + 1) - 2 ** (n + 2) + n + 3
    print(f"n = {n}: enumerated {enumerated:5}, C(2n+2,n+1) - 2^(n+2) + n + 3 = {formula:5}")
print()

print("== cell layers at n = 4 (5 strands) ==")
n = 4
total = 0
for label in lambda_poset(n):
    tabs = tableaux(label, n)
    total += len(tabs) ** 2
    print(f"layer {str(label):3}: {len(tabs):2} tableaux -> {len(tabs) ** 2:3} diagrams")
print(f"sum of squares = {total} = rank")
print()

print("== the one inadmissible half-diagram ==")
m, k = 5, 2
generalized = enumerate_generalized_half(m, k)
admissible = enumerate_half(m, k)
excluded = set(generalized) - set(admissible)
print(f"m = {m}, k = {k}: {len(generalized)} decorated halves, {len(admissible)} admissible")
print(f"excluded: {excluded.pop()}   (matches {HalfDiagram.figure_four(m, k)})")
print()

print("== the admissible halves for m = 4, k = 2 ==")
for h in enumerate_half(4, 2):
    print(f"  {h}")
