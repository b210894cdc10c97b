"""The cell structure: layers, action matrices, forms, and branching.

Each layer with propagating edges is spanned by combinations
(bulleted diagram) - gamma * (plain diagram), with gamma = phi on the
plain layer and 1 - phi on the bullet layer.  Generators act on a layer
by matrices that are independent of the south tableau; each layer carries
a bilinear form whose nonzero determinant at every label certifies
semisimplicity, and dropping the east strand splits each layer over the
poset one rank down.
"""

from tlh.algebra import AlgebraElement
from tlh.cellular import (
    branching_report,
    cell_action_matrix,
    cell_element,
    gram_matrix,
    lambda_poset,
    semisimplicity_check,
    tableaux,
)
from tlh.diagram import generator_U

n = 2
print(f"== the label poset at n = {n} (lower = more caps) ==")
print(", ".join(str(label) for label in lambda_poset(n)))
print()

label = lambda_poset(n)[1]
tabs = tableaux(label, n)
print(f"== layer {label}: tableaux and a cell element ==")
print(f"tableaux: {', '.join(str(h) for h in tabs)}")
print(f"C({label}, {tabs[0]}, {tabs[1]}) = {cell_element(label, tabs[0], tabs[1])}")
print()

print(f"== generators acting on layer {label} ==")
for i in (1, 2):
    u = AlgebraElement.from_diagram(generator_U(i, n + 1))
    print(f"U{i} acts by")
    print(cell_action_matrix(u, label))
print()

print("== bilinear forms and their determinants ==")
for lam in lambda_poset(n):
    form = gram_matrix(lam, n)
    print(f"layer {lam}: det = {form.det()}")
print(f"semisimplicity check at n = 3: {semisimplicity_check(3) or 'all forms nondegenerate'}")
print()

print("== branching: dropping the east strand at n = 3 ==")
for lam in lambda_poset(3):
    report = branching_report(lam, 3)
    parts = " + ".join(f"{b['factor']} (dim {b['dim']})" for b in report["blocks"])
    status = "ok" if not report["problems"] else report["problems"]
    print(f"layer {report['label']} (dim {report['dim']}) -> {parts}   [{status}]")
