"""Basis diagrams of the type-H diagram algebra.

A diagram on m strands is a square, loop-free decorated tangle whose edges
carry at most one decoration each and which satisfies the two face
conditions: an all-propagating diagram carries no decorations, and a face
that contains caps must contain either a decorated cap on nodes {1, 2} or an
undecorated cap on some {i, i+1} with i > 1.

Such a diagram splits into dyadic form: a half-diagram of caps for the north
face, one for the south face, and an optional single decoration ("bullet")
on the westmost propagating edge, the only propagating edge that can reach
the west wall.  Conversely any compatible triple assembles into a diagram,
which gives the enumeration of the diagram basis.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from math import comb
from typing import NamedTuple

from tlh.tangle import DecoratedTangle, NodeRef


@dataclasses.dataclass(frozen=True)
class HalfDiagram:
    """Caps on a single face: m nodes on a line, k disjoint non-crossing pairs.

    Pairs are (west endpoint, east endpoint, decoration) with decoration 0 or
    1.  No cap may cover an unpaired node (its propagating edge would have to
    cross the cap), and a decorated cap must be west-exposed: not nested
    inside another cap, and with no unpaired node to its west.
    """

    m: int
    pairs: tuple = ()

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"negative strand count {self.m}")
        pairs = tuple(sorted(tuple(p) for p in self.pairs))
        used = set()
        for p in pairs:
            if len(p) != 3:
                raise ValueError(f"cap must be (west, east, dec), got {p!r}")
            a, b, dec = p
            if not (isinstance(a, int) and isinstance(b, int) and 1 <= a < b <= self.m):
                raise ValueError(f"bad cap endpoints ({a}, {b}) for {self.m} nodes")
            if dec not in (0, 1):
                raise ValueError(f"cap decoration must be 0 or 1, got {dec!r}")
            if used & {a, b}:
                raise ValueError(f"node on more than one cap in {pairs!r}")
            used |= {a, b}
        for (a, b, _), (c, d, _) in itertools.combinations(pairs, 2):
            if a < c < b < d or c < a < d < b:
                raise ValueError(f"caps ({a},{b}) and ({c},{d}) cross")
        free = [x for x in range(1, self.m + 1) if x not in used]
        for a, b, dec in pairs:
            if any(a < f < b for f in free):
                raise ValueError(f"cap ({a},{b}) covers an unpaired node")
            if dec and not self._exposed(a, b, pairs, free):
                raise ValueError(f"decorated cap ({a},{b}) is not west-exposed")
        object.__setattr__(self, "pairs", pairs)

    @staticmethod
    def _exposed(a: int, b: int, pairs, free) -> bool:
        if any(f < a for f in free):
            return False
        return not any(c < a and b < d for c, d, _ in pairs)

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def free_points(self) -> tuple:
        used = {x for p in self.pairs for x in p[:2]}
        return tuple(x for x in range(1, self.m + 1) if x not in used)

    def exposed_caps(self) -> tuple:
        free = self.free_points
        return tuple(p for p in self.pairs if self._exposed(p[0], p[1], self.pairs, free))

    def admissible(self) -> bool:
        """The face condition: no caps, or a decorated {1,2}, or a plain {i,i+1}, i > 1."""
        if not self.pairs:
            return True
        for a, b, dec in self.pairs:
            if (a, b, dec) == (1, 2, 1):
                return True
            if dec == 0 and b == a + 1 and a > 1:
                return True
        return False

    @classmethod
    def figure_four(cls, m: int, k: int) -> "HalfDiagram":
        """The unique face with k caps excluded by the face condition."""
        if k < 1 or 2 * k > m:
            raise ValueError(f"no {k}-cap face on {m} nodes")
        return cls(m, ((1, 2, 0),) + tuple((2 * j - 1, 2 * j, 1) for j in range(2, k + 1)))

    def __str__(self) -> str:
        if not self.pairs:
            return "-"
        return " ".join(f"{a}-{b}" + "*" * dec for a, b, dec in self.pairs)

    def to_json(self) -> dict:
        return {"m": self.m, "caps": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, obj: dict) -> "HalfDiagram":
        if not isinstance(obj, dict) or "m" not in obj:
            raise ValueError(f"half-diagram must be an object with 'm', got {obj!r}")
        return cls(obj["m"], tuple(tuple(p) for p in obj.get("caps", ())))


class DyadicForm(NamedTuple):
    """A diagram as (north caps, south caps, westmost-propagating decoration)."""

    north: HalfDiagram
    south: HalfDiagram
    bullet: bool


def is_h_admissible(t: DecoratedTangle) -> tuple[bool, str]:
    """Whether a tangle is a basis diagram; if not, the first reason why."""
    if not t.is_square:
        return False, f"not square: {t.n_top} north, {t.n_bottom} south nodes"
    if t.loops:
        return False, "contains closed loops"
    problems = t.validate()
    if problems:
        return False, problems[0]
    caps = [a for a in t.arcs if a[0].face == a[1].face]
    if any(dec > 1 for _, _, dec in t.arcs):
        return False, "an edge carries more than one decoration"
    if not caps:
        if any(dec for _, _, dec in t.arcs):
            return False, "decorated edge in an all-propagating diagram"
        return True, ""
    for face in "NS":
        face_caps = [(min(a.index, b.index), max(a.index, b.index), dec)
                     for a, b, dec in caps if a.face == face]
        ok = any(c == (1, 2, 1) for c in face_caps) or any(
            dec == 0 and b == a + 1 and a > 1 for a, b, dec in face_caps
        )
        if not ok:
            return False, f"face {face} has caps but no decorated 1-2 cap and no plain adjacent cap east of node 1"
    return True, ""


@dataclasses.dataclass(frozen=True)
class Diagram:
    """A basis diagram: an admissible square loop-free decorated tangle."""

    tangle: DecoratedTangle

    def __post_init__(self):
        ok, reason = is_h_admissible(self.tangle)
        if not ok:
            raise ValueError(f"not a basis diagram: {reason}")

    @property
    def m(self) -> int:
        return self.tangle.n_top

    @property
    def k(self) -> int:
        """Number of caps on each face."""
        return sum(1 for a, b, _ in self.tangle.arcs if a.face == b.face == "N")

    @property
    def prop_count(self) -> int:
        return self.m - 2 * self.k

    @property
    def is_identity(self) -> bool:
        return self.k == 0

    def star(self) -> "Diagram":
        return Diagram(self.tangle.flip())

    def half(self, face: str) -> HalfDiagram:
        pairs = tuple(
            (min(a.index, b.index), max(a.index, b.index), dec)
            for a, b, dec in self.tangle.arcs
            if a.face == b.face == face
        )
        return HalfDiagram(self.m, pairs)

    def dyadic(self) -> DyadicForm:
        bullet = any(
            dec for a, b, dec in self.tangle.arcs if a.face != b.face
        )
        return DyadicForm(self.half("N"), self.half("S"), bullet)

    @classmethod
    def from_dyadic(cls, north: HalfDiagram, south: HalfDiagram, bullet: bool = False) -> "Diagram":
        if north.m != south.m:
            raise ValueError(f"half-diagrams disagree on strands: {north.m} vs {south.m}")
        nf, sf = north.free_points, south.free_points
        if len(nf) != len(sf):
            raise ValueError(f"half-diagrams disagree on cap count: {north.k} vs {south.k}")
        if bullet and not nf:
            raise ValueError("no propagating edge to decorate")
        arcs = {(NodeRef("N", a), NodeRef("N", b), dec) for a, b, dec in north.pairs}
        arcs |= {(NodeRef("S", a), NodeRef("S", b), dec) for a, b, dec in south.pairs}
        arcs |= {
            (NodeRef("N", x), NodeRef("S", y), 1 if bullet and i == 0 else 0)
            for i, (x, y) in enumerate(zip(nf, sf))
        }
        return cls(DecoratedTangle(north.m, north.m, frozenset(arcs)))

    def sort_key(self):
        d = self.dyadic()
        return (self.k, d.north.pairs, d.south.pairs, d.bullet)

    def __str__(self) -> str:
        if self.is_identity:
            return f"id{self.m}"
        d = self.dyadic()
        return f"|{d.north}><{d.south}|" + ("*" if d.bullet else "")

    def to_json(self) -> dict:
        return self.tangle.to_json()

    @classmethod
    def from_json(cls, obj: dict) -> "Diagram":
        return cls(DecoratedTangle.from_json(obj))


def generator_U(i: int, m: int) -> Diagram:
    """The generator with caps on nodes {i, i+1} of both faces, decorated iff i = 1."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"generator index {i} out of range for {m} strands")
    dec = 1 if i == 1 else 0
    half = HalfDiagram(m, ((i, i + 1, dec),))
    return Diagram.from_dyadic(half, half)


def _shapes(points: tuple, k: int):
    """Non-crossing k-cap matchings on an ordered point set, caps covering no free point."""
    if k == 0:
        yield ()
        return
    if len(points) < 2 * k:
        return
    p = points[0]
    yield from _shapes(points[1:], k)  # p stays free
    for i in range(1, len(points), 2):
        inner_k = (i - 1) // 2
        if inner_k + 1 > k:
            break
        for si in _shapes(points[1:i], inner_k):
            for so in _shapes(points[i + 1 :], k - 1 - inner_k):
                yield ((p, points[i]),) + si + so


@functools.cache
def enumerate_generalized_half(m: int, k: int) -> tuple:
    """All k-cap faces with any west-exposed decoration pattern; count C(m, k)."""
    if k < 0 or 2 * k > m:
        return ()
    out = []
    for shape in _shapes(tuple(range(1, m + 1)), k):
        base = HalfDiagram(m, tuple((a, b, 0) for a, b in shape))
        exposed = [(a, b) for a, b, _ in base.exposed_caps()]
        hidden = [(a, b) for a, b in shape if (a, b) not in exposed]
        for bits in itertools.product((0, 1), repeat=len(exposed)):
            pairs = tuple((a, b, bit) for (a, b), bit in zip(exposed, bits))
            pairs += tuple((a, b, 0) for a, b in hidden)
            out.append(HalfDiagram(m, pairs))
    assert len(out) == comb(m, k), f"face count {len(out)} != C({m},{k})"
    return tuple(sorted(out, key=lambda h: h.pairs))


@functools.cache
def enumerate_half(m: int, k: int) -> tuple:
    """All admissible k-cap faces; count C(m, k) - 1 for k > 0."""
    out = tuple(h for h in enumerate_generalized_half(m, k) if h.admissible())
    expect = comb(m, k) - (1 if 0 < 2 * k <= m else 0)
    assert len(out) == expect, f"admissible face count {len(out)} != {expect}"
    return out


def enumerate_diagrams(m: int, max_strands: int = 9) -> list:
    """All basis diagrams on m strands, in a fixed canonical order."""
    if m < 1:
        raise ValueError(f"strand count must be positive, got {m}")
    if m > max_strands:
        raise ValueError(
            f"enumeration of {m} strands exceeds the cap of {max_strands}; raise max_strands to force"
        )
    out = []
    for k in range(0, m // 2 + 1):
        if k == 0:
            out.append(Diagram(DecoratedTangle.identity(m)))
            continue
        halves = enumerate_half(m, k)
        bullets = (False, True) if m - 2 * k > 0 else (False,)
        for north in halves:
            for south in halves:
                for bullet in bullets:
                    out.append(Diagram.from_dyadic(north, south, bullet))
    return out
