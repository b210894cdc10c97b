"""Basis-diagram admissibility, dyadic form, and enumeration."""

from __future__ import annotations

import itertools
from math import comb

import pytest

from tlh.diagram import (
    Diagram,
    DyadicForm,
    HalfDiagram,
    enumerate_diagrams,
    enumerate_generalized_half,
    enumerate_half,
    generator_U,
    is_h_admissible,
)
from tlh.tangle import DecoratedTangle, NodeRef

N = lambda i: NodeRef("N", i)
S = lambda i: NodeRef("S", i)


def all_pairings(items):
    """Every perfect matching of a sequence (not just planar ones)."""
    if not items:
        yield ()
        return
    a, rest = items[0], items[1:]
    for i, b in enumerate(rest):
        for ps in all_pairings(rest[:i] + rest[i + 1 :]):
            yield ((a, b),) + ps


def brute_half_diagrams(m: int, k: int) -> set:
    """Independent oracle: try every cap set and decoration pattern."""
    found = set()
    for caps in itertools.combinations(range(1, m + 1), 2 * k):
        for pairing in all_pairings(caps):
            for decs in itertools.product((0, 1), repeat=k):
                try:
                    found.add(HalfDiagram(m, tuple((a, b, d) for (a, b), d in zip(pairing, decs))))
                except ValueError:
                    pass
    return found


def brute_diagrams(m: int) -> set:
    """Independent oracle: every admissible tangle, built point by point."""
    frame = DecoratedTangle(m, m)
    refs = sorted(
        [N(i) for i in range(1, m + 1)] + [S(i) for i in range(1, m + 1)],
        key=frame.position,
    )
    found = set()
    for pairing in all_pairings(tuple(refs)):
        plain = DecoratedTangle(m, m, frozenset((a, b, 0) for a, b in pairing))
        if plain.validate():
            continue
        exposed = [arc for arc in plain.arcs if plain.west_exposed(arc)]
        rest = [arc for arc in plain.arcs if not plain.west_exposed(arc)]
        for bits in itertools.product((0, 1), repeat=len(exposed)):
            arcs = frozenset((a, b, bit) for (a, b, _), bit in zip(exposed, bits)) | frozenset(rest)
            t = DecoratedTangle(m, m, arcs)
            if is_h_admissible(t)[0]:
                found.add(Diagram(t))
    return found


def test_half_constructor_rejects():
    with pytest.raises(ValueError, match="cross"):
        HalfDiagram(4, ((1, 3, 0), (2, 4, 0)))
    with pytest.raises(ValueError, match="unpaired node"):
        HalfDiagram(3, ((1, 3, 0),))
    with pytest.raises(ValueError, match="not west-exposed"):
        HalfDiagram(4, ((1, 4, 0), (2, 3, 1)))
    with pytest.raises(ValueError, match="not west-exposed"):
        HalfDiagram(4, ((2, 3, 1),))  # free node 1 blocks the west wall
    with pytest.raises(ValueError, match="decoration"):
        HalfDiagram(2, ((1, 2, 2),))
    with pytest.raises(ValueError, match="more than one cap"):
        HalfDiagram(4, ((1, 2, 0), (2, 3, 0)))
    with pytest.raises(ValueError, match="endpoints"):
        HalfDiagram(2, ((2, 1, 0),))


def test_half_free_points_and_exposure():
    h = HalfDiagram(7, ((2, 3, 0), (4, 7, 0), (5, 6, 0)))
    assert h.free_points == (1,)
    assert h.k == 3
    # free node 1 hides everything; nesting hides (5,6)
    assert h.exposed_caps() == ()
    g = HalfDiagram(6, ((1, 6, 1), (2, 3, 0), (4, 5, 0)))
    assert g.exposed_caps() == ((1, 6, 1),)
    flat = HalfDiagram(6, ((1, 2, 1), (3, 4, 0), (5, 6, 0)))
    assert flat.exposed_caps() == flat.pairs


def test_admissibility_of_faces():
    assert HalfDiagram(4).admissible()
    assert HalfDiagram(3, ((1, 2, 1),)).admissible()
    assert HalfDiagram(3, ((2, 3, 0),)).admissible()
    assert not HalfDiagram(3, ((1, 2, 0),)).admissible()
    assert not HalfDiagram(4, ((1, 2, 0), (3, 4, 1))).admissible()
    assert HalfDiagram(4, ((1, 2, 0), (3, 4, 0))).admissible()
    assert HalfDiagram(4, ((1, 4, 1), (2, 3, 0))).admissible()


def test_figure_four_is_the_unique_inadmissible_face():
    for m, k in [(3, 1), (4, 1), (4, 2), (5, 2), (6, 3), (7, 2)]:
        gen = set(enumerate_generalized_half(m, k))
        adm = set(enumerate_half(m, k))
        assert gen - adm == {HalfDiagram.figure_four(m, k)}
    with pytest.raises(ValueError):
        HalfDiagram.figure_four(4, 3)


def test_half_enumeration_against_brute_force():
    for m in range(1, 7):
        for k in range(0, m // 2 + 1):
            brute = brute_half_diagrams(m, k)
            assert set(enumerate_generalized_half(m, k)) == brute
            assert len(brute) == comb(m, k)
            assert set(enumerate_half(m, k)) == {h for h in brute if h.admissible()}


def test_half_enumeration_frozen_small():
    assert [h.pairs for h in enumerate_half(3, 1)] == [((1, 2, 1),), ((2, 3, 0),)]
    assert len(enumerate_half(4, 2)) == 5
    assert len(enumerate_half(9, 4)) == comb(9, 4) - 1


def test_generator_shapes():
    u1 = generator_U(1, 3)
    assert u1.tangle.arcs == frozenset(
        {(N(1), N(2), 1), (S(2), S(1), 1), (N(3), S(3), 0)}
    )
    u2 = generator_U(2, 3)
    assert all(dec == 0 for _, _, dec in u2.tangle.arcs)
    assert u2.k == 1 and u2.prop_count == 1
    with pytest.raises(ValueError):
        generator_U(3, 3)
    with pytest.raises(ValueError):
        generator_U(0, 3)


def test_is_h_admissible_reasons():
    ok, _ = is_h_admissible(DecoratedTangle.identity(4))
    assert ok
    bad = DecoratedTangle(2, 4, frozenset({(N(1), N(2), 0), (S(1), S(2), 0), (S(3), S(4), 0)}))
    assert is_h_admissible(bad) == (False, "not square: 2 north, 4 south nodes")
    looped = DecoratedTangle(1, 1, frozenset({(N(1), S(1), 0)}), loops=(0,))
    assert is_h_admissible(looped) == (False, "contains closed loops")
    dec_id = DecoratedTangle(2, 2, frozenset({(N(1), S(1), 1), (N(2), S(2), 0)}))
    assert is_h_admissible(dec_id) == (False, "decorated edge in an all-propagating diagram")
    heavy = DecoratedTangle(2, 2, frozenset({(N(1), N(2), 2), (S(1), S(2), 1)}))
    assert is_h_admissible(heavy) == (False, "an edge carries more than one decoration")
    fig4 = DecoratedTangle(
        4, 4,
        frozenset({(N(1), N(2), 0), (N(3), N(4), 1), (S(1), S(2), 1), (S(3), S(4), 0)}),
    )
    ok, reason = is_h_admissible(fig4)
    assert not ok and reason.startswith("face N")


def test_diagram_constructor_rejects():
    with pytest.raises(ValueError, match="not a basis diagram"):
        Diagram(DecoratedTangle(2, 2, frozenset({(N(1), N(2), 0), (S(1), S(2), 0)})))


def test_dyadic_round_trip():
    for m in (3, 4, 5):
        for d in enumerate_diagrams(m):
            form = d.dyadic()
            assert Diagram.from_dyadic(*form) == d
            if not d.is_identity:
                assert form.north.k == form.south.k == d.k
    h1, h2 = enumerate_half(4, 1)[0], enumerate_half(4, 1)[2]
    d = Diagram.from_dyadic(h1, h2, True)
    assert d.dyadic() == DyadicForm(h1, h2, True)


def test_from_dyadic_rejects():
    with pytest.raises(ValueError, match="strands"):
        Diagram.from_dyadic(HalfDiagram(3), HalfDiagram(4))
    with pytest.raises(ValueError, match="cap count"):
        Diagram.from_dyadic(HalfDiagram(4, ((2, 3, 0),)), HalfDiagram(4))
    with pytest.raises(ValueError, match="no propagating edge"):
        h = HalfDiagram(4, ((1, 2, 1), (3, 4, 0)))
        Diagram.from_dyadic(h, h, True)
    with pytest.raises(ValueError, match="not a basis diagram"):
        Diagram.from_dyadic(HalfDiagram.figure_four(4, 2), enumerate_half(4, 2)[0])


def test_star_swaps_faces():
    for d in enumerate_diagrams(4):
        form = d.dyadic()
        assert d.star().dyadic() == DyadicForm(form.south, form.north, form.bullet)
        assert d.star().star() == d
    assert generator_U(1, 5).star() == generator_U(1, 5)


def test_enumerate_diagrams_against_brute_force():
    for m in (3, 4):
        listed = enumerate_diagrams(m)
        assert len(listed) == len(set(listed))
        assert set(listed) == brute_diagrams(m)
    assert len(enumerate_diagrams(3)) == 9
    assert len(enumerate_diagrams(4)) == 44


def test_enumerate_diagrams_cap():
    with pytest.raises(ValueError, match="cap"):
        enumerate_diagrams(10)
    assert len(enumerate_diagrams(3, max_strands=3)) == 9
    with pytest.raises(ValueError):
        enumerate_diagrams(0)


def test_strings():
    assert str(HalfDiagram(4)) == "-"
    assert str(HalfDiagram(4, ((1, 2, 1), (3, 4, 0)))) == "1-2* 3-4"
    assert str(enumerate_diagrams(3)[0]) == "id3"
    u1 = generator_U(1, 3)
    assert str(u1) == "|1-2*><1-2*|"
    h1 = HalfDiagram(3, ((1, 2, 1),))
    h2 = HalfDiagram(3, ((2, 3, 0),))
    assert str(Diagram.from_dyadic(h1, h2, True)) == "|1-2*><2-3|*"


def test_json_round_trips():
    h = HalfDiagram(5, ((1, 2, 1), (3, 4, 0)))
    assert HalfDiagram.from_json(h.to_json()) == h
    assert h.to_json() == {"m": 5, "caps": [[1, 2, 1], [3, 4, 0]]}
    for d in enumerate_diagrams(3):
        assert Diagram.from_json(d.to_json()) == d
    with pytest.raises(ValueError):
        HalfDiagram.from_json({"caps": []})
