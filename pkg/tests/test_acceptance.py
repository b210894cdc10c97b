"""Acceptance gate: the ten headline properties, one test and one verdict line each.

Every check is exact -- integer equalities and ring-element equalities, no
tolerances.  Each test prints a single PASS line with the quantities it
verified; a failure shows up as the corresponding FAILED test.
"""

import itertools
import random
from math import comb

from tlh.algebra import (
    AlgebraElement,
    evaluate_word,
    normal_form,
    normal_form_random,
    positivity_check,
    verify_presentation,
)
from tlh.cellular import (
    lambda_poset,
    semisimplicity_check,
    tableaux,
    verify_branching,
    verify_cellular_axioms,
)
from tlh.diagram import (
    HalfDiagram,
    enumerate_diagrams,
    enumerate_generalized_half,
    enumerate_half,
)
from tlh.factor import factorize
from tlh.ring import LaurentPoly
from tlh.tangle import random_tangle

RANKS = {2: 9, 3: 44, 4: 195, 5: 804, 6: 3185, 7: 12368, 8: 47607}


def test_criterion_01_rank_reproduction():
    for n in range(2, 9):
        formula = comb(2 * n + 2, n + 1) - 2 ** (n + 2) + n + 3
        enumerated = len(enumerate_diagrams(n + 1))
        assert enumerated == formula
        assert enumerated == RANKS[n]
    print("PASS criterion 1: ranks n=2..8 equal the closed form (9, 44, 195, 804, 3185, 12368, 47607)")


def test_criterion_02_cell_set_sizes():
    checked = 0
    for n in range(2, 9):
        m = n + 1
        for label in lambda_poset(n):
            expected = 1 if label.k == 0 else comb(m, label.k) - 1
            assert len(tableaux(label, n)) == expected
            checked += 1
        for k in range(1, m // 2 + 1):
            generalized = enumerate_generalized_half(m, k)
            admissible = enumerate_half(m, k)
            assert len(generalized) == comb(m, k)
            assert set(generalized) - set(admissible) == {HalfDiagram.figure_four(m, k)}
    print(f"PASS criterion 2: all {checked} cell-set sizes equal C(n+1,k)-1, "
          "with exactly the one inadmissible half-diagram excluded each time")


def test_criterion_03_presentation():
    for m in range(3, 8):
        problems = verify_presentation(m)
        assert problems == [], f"m={m}: {problems}"
    print("PASS criterion 3: all defining relations and special-element identities hold for n=2..6")


def test_criterion_04_nine_element_model():
    monomials = (
        [],
        ["U1"],
        ["U2"],
        ["U1", "U2"],
        ["U2", "U1"],
        ["U1", "beta"],
        ["U2", "alpha"],
        ["U1", "zeta"],
        ["U2", "epsilon"],
    )
    seen = set()
    for word in monomials:
        terms = evaluate_word(word, 3).items()
        assert len(terms) == 1 and terms[0][1] == LaurentPoly.one(), word
        seen.add(terms[0][0])
    assert seen == set(enumerate_diagrams(3))
    print("PASS criterion 4: the nine generator monomials evaluate to the nine basis "
          "diagrams, each with coefficient 1")


def test_criterion_05_associativity_and_confluence():
    elements = [AlgebraElement.from_diagram(d) for d in enumerate_diagrams(3)]
    for x, y, z in itertools.product(elements, repeat=3):
        assert (x * y) * z == x * (y * z)
    for m, seed in ((4, 31), (5, 41)):
        pool = [AlgebraElement.from_diagram(d) for d in enumerate_diagrams(m)]
        rng = random.Random(seed)
        for _ in range(10_000):
            x, y, z = (rng.choice(pool) for _ in range(3))
            assert (x * y) * z == x * (y * z)
    rng = random.Random(20260825)
    for _ in range(10_000):
        top = rng.randint(2, 5)
        bottom = max(0, top + 2 * rng.randint(-1, 1))
        t = random_tangle(rng, top, bottom, max_dec=3, n_loops=rng.randint(0, 2))
        assert dict(normal_form(t)) == normal_form_random(t, rng)
    print("PASS criterion 5: 729 exhaustive triples (n=2), 10000 random triples each at "
          "n=3 and n=4, and 10000 reduction-order confluence checks, zero discrepancies")


def test_criterion_06_positivity():
    for m in (3, 4, 5):
        problems = positivity_check(m)
        assert problems == [], f"m={m}: {problems}"
    print("PASS criterion 6: every structure constant for n<=4 is a positive integer "
          "times [2]^k with k bounded by the cap counts")


def test_criterion_07_cellularity():
    for n in (2, 3, 4):
        problems = verify_cellular_axioms(n)
        assert problems == [], f"n={n}: {problems}"
    print("PASS criterion 7: cell-basis bijectivity, flip symmetry, and south-independent "
          "action coefficients hold for n<=4")


def test_criterion_08_semisimplicity():
    for n in (2, 3, 4, 5):
        problems = semisimplicity_check(n)
        assert problems == [], f"n={n}: {problems}"
    print("PASS criterion 8: all Gram determinants for n<=5 are nonzero and the rescaled "
          "forms are orthonormal-to-leading-order with the expected diagonal constants")


def test_criterion_09_branching():
    for n in (3, 4, 5, 6):
        problems = verify_branching(n)
        assert problems == [], f"n={n}: {problems}"
    print("PASS criterion 9: every cell layer at n=3..6 restricts block-triangularly with "
          "the identified lower-rank factors and matching dimension identities")


def test_criterion_10_factorization_round_trip():
    total = 0
    for m in (3, 4, 5):
        for d in enumerate_diagrams(m):
            assert evaluate_word(factorize(d), m) == AlgebraElement.from_diagram(d)
            total += 1
    print(f"PASS criterion 10: all {total} basis diagrams at n<=4 factor into generator "
          "words that evaluate back to the diagram with coefficient exactly 1")