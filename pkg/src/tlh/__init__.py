"""Exact diagram calculus for the generalized Temperley-Lieb algebra of type H."""

from __future__ import annotations

from tlh.algebra import (
    AlgebraElement,
    ClosureViolation,
    evaluate_word,
    multiply,
    normal_form,
    positivity_check,
    reduce_tangle,
    special_elements,
    verify_presentation,
)
from tlh.cellular import (
    CellDatum,
    CellLabel,
    IndependenceViolation,
    RingMatrix,
    branching_report,
    cell_action_matrix,
    cell_datum,
    cell_element,
    combine_cell_terms,
    expand_in_cell_basis,
    gram_matrix,
    label_minus_one,
    lambda_poset,
    semisimplicity_check,
    tableaux,
    verify_branching,
    verify_cellular_axioms,
)
from tlh.diagram import (
    Diagram,
    DyadicForm,
    HalfDiagram,
    enumerate_diagrams,
    enumerate_half,
    generator_U,
    is_h_admissible,
)
from tlh.factor import FactorizationError, factorize
from tlh.ring import (
    GAMMA1,
    GAMMA2,
    PHI,
    GoldenScalar,
    LaurentPoly,
    fib_pair,
    fib_reduce,
)
from tlh.tangle import DecoratedTangle, NodeRef, random_tangle

__all__ = [
    "GAMMA1",
    "GAMMA2",
    "PHI",
    "AlgebraElement",
    "CellDatum",
    "CellLabel",
    "ClosureViolation",
    "DecoratedTangle",
    "Diagram",
    "DyadicForm",
    "FactorizationError",
    "GoldenScalar",
    "HalfDiagram",
    "IndependenceViolation",
    "LaurentPoly",
    "NodeRef",
    "RingMatrix",
    "branching_report",
    "cell_action_matrix",
    "cell_datum",
    "cell_element",
    "combine_cell_terms",
    "enumerate_diagrams",
    "enumerate_half",
    "evaluate_word",
    "expand_in_cell_basis",
    "factorize",
    "fib_pair",
    "fib_reduce",
    "generator_U",
    "gram_matrix",
    "is_h_admissible",
    "label_minus_one",
    "lambda_poset",
    "multiply",
    "normal_form",
    "positivity_check",
    "random_tangle",
    "reduce_tangle",
    "semisimplicity_check",
    "special_elements",
    "tableaux",
    "verify_branching",
    "verify_cellular_axioms",
    "verify_presentation",
]
