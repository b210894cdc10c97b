"""Decorated planar tangles in a rectangular frame.

A tangle has numbered nodes on its north edge (west to east) and south edge
(west to east), joined pairwise by non-crossing arcs; it may also contain
closed loops.  Arcs and loops carry a count of decorations, and a decoration
is only meaningful on an edge that can reach the west wall of the frame
without crossing anything ("west-exposed").

Walking the boundary clockwise from a cut in the west wall visits
N1, ..., Nt, S_b, ..., S1, which linearizes the frame to a disk: arcs become
chords, planarity becomes non-interleaving of chords, and west-exposure of
an arc becomes "not strictly nested inside another arc".

Tangles of matching widths compose by vertical stacking; decoration counts
add along glued paths, and closed loops record their total decoration count.
"""

from __future__ import annotations

import dataclasses
from collections import Counter
from typing import NamedTuple


class NodeRef(NamedTuple):
    """A boundary node: face 'N' or 'S', index counted from the west, 1-based."""

    face: str
    index: int

    @classmethod
    def parse(cls, text: str) -> "NodeRef":
        if len(text) >= 2 and text[0] in "NS" and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        raise ValueError(f"bad node reference {text!r} (expected e.g. 'N3' or 'S1')")

    def __str__(self) -> str:
        return f"{self.face}{self.index}"


Arc = tuple[NodeRef, NodeRef, int]


@dataclasses.dataclass(frozen=True)
class DecoratedTangle:
    """An immutable decorated tangle.

    ``arcs`` holds triples (a, b, dec) with endpoints in linearized order and
    dec the number of decorations on that arc; ``loops`` holds the decoration
    count of each closed loop.  The constructor enforces structural sanity
    (nodes in range, each node on at most one arc) but not geometry: use
    :meth:`validate` to check planarity and west-exposure.
    """

    n_top: int
    n_bottom: int
    arcs: frozenset = frozenset()
    loops: tuple = ()

    def __post_init__(self):
        if self.n_top < 0 or self.n_bottom < 0:
            raise ValueError(f"negative boundary width: {self.n_top}, {self.n_bottom}")
        norm = set()
        used = Counter()
        for arc in self.arcs:
            a, b, dec = arc
            for ref in (a, b):
                if not isinstance(ref, NodeRef):
                    raise ValueError(f"arc endpoint {ref!r} is not a NodeRef")
                width = self.n_top if ref.face == "N" else self.n_bottom if ref.face == "S" else None
                if width is None or not 1 <= ref.index <= width:
                    raise ValueError(f"node {ref} out of range for widths ({self.n_top}, {self.n_bottom})")
            if a == b:
                raise ValueError(f"arc joins node {a} to itself")
            if not isinstance(dec, int) or dec < 0:
                raise ValueError(f"bad decoration count {dec!r} on arc {a}-{b}")
            used[a] += 1
            used[b] += 1
            if self.position(a) > self.position(b):
                a, b = b, a
            norm.add((a, b, dec))
        dup = [str(n) for n, c in sorted(used.items()) if c > 1]
        if dup:
            raise ValueError(f"nodes on more than one arc: {', '.join(dup)}")
        if any(not isinstance(r, int) or r < 0 for r in self.loops):
            raise ValueError(f"bad loop decoration counts {self.loops!r}")
        object.__setattr__(self, "arcs", frozenset(norm))
        object.__setattr__(self, "loops", tuple(sorted(self.loops)))

    # -- geometry ----------------------------------------------------------

    def position(self, ref: NodeRef) -> int:
        """Linearized boundary position, clockwise from the west cut."""
        if ref.face == "N":
            return ref.index - 1
        return self.n_top + self.n_bottom - ref.index

    @property
    def boundary_size(self) -> int:
        return self.n_top + self.n_bottom

    @property
    def is_square(self) -> bool:
        return self.n_top == self.n_bottom

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs, key=lambda arc: (self.position(arc[0]), self.position(arc[1])))

    def west_exposed(self, arc: Arc) -> bool:
        """True if the arc can be joined to the west wall: no arc strictly encloses it."""
        a, b = self.position(arc[0]), self.position(arc[1])
        for other in self.arcs:
            c, d = self.position(other[0]), self.position(other[1])
            if c < a and b < d:
                return False
        return True

    def validate(self) -> list[str]:
        """All geometric violations, as human-readable strings; [] if valid."""
        problems = []
        covered = {ref for arc in self.arcs for ref in arc[:2]}
        for face, width in (("N", self.n_top), ("S", self.n_bottom)):
            for i in range(1, width + 1):
                if NodeRef(face, i) not in covered:
                    problems.append(f"node {face}{i} is not on any arc")
        arcs = self.sorted_arcs()
        for i, x in enumerate(arcs):
            a, b = self.position(x[0]), self.position(x[1])
            for y in arcs[i + 1 :]:
                c, d = self.position(y[0]), self.position(y[1])
                if a < c < b < d or c < a < d < b:
                    problems.append(f"arcs {x[0]}-{x[1]} and {y[0]}-{y[1]} cross")
        for arc in arcs:
            if arc[2] > 0 and not self.west_exposed(arc):
                problems.append(f"decorated arc {arc[0]}-{arc[1]} is not west-exposed")
        return problems

    # -- construction helpers ---------------------------------------------

    @classmethod
    def identity(cls, m: int) -> "DecoratedTangle":
        return cls(m, m, frozenset((NodeRef("N", i), NodeRef("S", i), 0) for i in range(1, m + 1)))

    def flip(self) -> "DecoratedTangle":
        """Reflect top-to-bottom (the * operation on diagrams)."""
        swap = lambda r: NodeRef("S" if r.face == "N" else "N", r.index)
        return DecoratedTangle(
            self.n_bottom,
            self.n_top,
            frozenset((swap(a), swap(b), dec) for a, b, dec in self.arcs),
            self.loops,
        )

    # -- composition -------------------------------------------------------

    def concat(self, other: "DecoratedTangle") -> "DecoratedTangle":
        """Stack self above other, gluing self's south edge to other's north edge.

        Decoration counts add along each glued path; closed paths through the
        glued layer become loops.  Both inputs must be loop-permitting valid
        tangles whose glued boundary is perfectly matched.
        """
        if self.n_bottom != other.n_top:
            raise ValueError(
                f"cannot glue: top tangle has {self.n_bottom} south nodes, "
                f"bottom tangle has {other.n_top} north nodes"
            )
        # nodes: ("T", i) outer top, ("B", i) outer bottom, ("M", i) glued middle
        adj: dict[tuple, list] = {}

        def add(node, entry):
            adj.setdefault(node, []).append(entry)

        for a, b, dec in self.arcs:
            na = ("T", a.index) if a.face == "N" else ("M", a.index)
            nb = ("T", b.index) if b.face == "N" else ("M", b.index)
            add(na, (nb, dec, "x"))
            add(nb, (na, dec, "x"))
        for a, b, dec in other.arcs:
            na = ("M", a.index) if a.face == "N" else ("B", a.index)
            nb = ("M", b.index) if b.face == "N" else ("B", b.index)
            add(na, (nb, dec, "y"))
            add(nb, (na, dec, "y"))
        for i in range(1, self.n_bottom + 1):
            halves = adj.get(("M", i), [])
            if len(halves) != 2:
                raise ValueError(f"glued node {i} lies on {len(halves)} arcs; tangles must be fully matched")

        out = DecoratedTangle(self.n_top, other.n_bottom)  # frame only, for positions
        to_ref = lambda n: NodeRef("N" if n[0] == "T" else "S", n[1])
        visited: set[tuple] = set()
        arcs = set()
        for start in [("T", i) for i in range(1, self.n_top + 1)] + [
            ("B", i) for i in range(1, other.n_bottom + 1)
        ]:
            if start in visited:
                continue
            if start not in adj:
                raise ValueError(f"outer node {to_ref(start)} is not on any arc")
            visited.add(start)
            node, dec_total, src = start, 0, None
            while True:
                nxt = next(h for h in adj[node] if h[2] != src) if node[0] == "M" else adj[node][0]
                node, src = nxt[0], nxt[2]
                dec_total += nxt[1]
                visited.add(node)
                if node[0] != "M":
                    break
            a, b = to_ref(start), to_ref(node)
            if out.position(a) > out.position(b):
                a, b = b, a
            arcs.add((a, b, dec_total))
        loops = list(self.loops) + list(other.loops)
        for i in range(1, self.n_bottom + 1):
            start = ("M", i)
            if start in visited:
                continue
            visited.add(start)
            node, dec_total, src = start, 0, "y"
            while True:
                nxt = next(h for h in adj[node] if h[2] != src)
                node, src = nxt[0], nxt[2]
                dec_total += nxt[1]
                if node == start:
                    break
                visited.add(node)
            loops.append(dec_total)
        result = DecoratedTangle(self.n_top, other.n_bottom, frozenset(arcs), tuple(loops))
        for arc in result.arcs:
            assert arc[2] == 0 or result.west_exposed(arc), (
                f"gluing produced a trapped decoration on {arc[0]}-{arc[1]}"
            )
        return result

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        bits = [f"{a}-{b}" + "*" * dec for a, b, dec in self.sorted_arcs()]
        bits += [f"(loop{'*' * r})" for r in self.loops]
        return f"[{self.n_top}|{self.n_bottom}] " + " ".join(bits) if bits else f"[{self.n_top}|{self.n_bottom}] empty"

    def to_json(self) -> dict:
        return {
            "n_top": self.n_top,
            "n_bottom": self.n_bottom,
            "arcs": [
                {"from": str(a), "to": str(b), "dec": dec} for a, b, dec in self.sorted_arcs()
            ],
            "loops": list(self.loops),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DecoratedTangle":
        if not isinstance(obj, dict):
            raise ValueError(f"tangle must be a JSON object, got {type(obj).__name__}")
        try:
            n_top, n_bottom = obj["n_top"], obj["n_bottom"]
            arcs = frozenset(
                (NodeRef.parse(a["from"]), NodeRef.parse(a["to"]), a.get("dec", 0))
                for a in obj.get("arcs", [])
            )
            loops = tuple(obj.get("loops", []))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed tangle object: {exc}") from exc
        return cls(n_top, n_bottom, arcs, loops)


def random_matching(rng, points: list) -> list[tuple]:
    """A random non-crossing perfect matching of an even-length sequence."""
    if len(points) % 2:
        raise ValueError("cannot match an odd number of points")
    if not points:
        return []
    j = rng.randrange(1, len(points), 2)
    pairs = [(points[0], points[j])]
    pairs += random_matching(rng, points[1:j])
    pairs += random_matching(rng, points[j + 1 :])
    return pairs


def random_tangle(rng, n_top: int, n_bottom: int, max_dec: int = 2, n_loops: int = 0) -> "DecoratedTangle":
    """A random valid decorated tangle, for property tests."""
    if (n_top + n_bottom) % 2:
        raise ValueError(f"odd boundary ({n_top} + {n_bottom}) admits no tangle")
    frame = DecoratedTangle(n_top, n_bottom)
    refs = [NodeRef("N", i) for i in range(1, n_top + 1)] + [
        NodeRef("S", i) for i in range(n_bottom, 0, -1)
    ]
    refs.sort(key=frame.position)
    plain = frozenset((a, b, 0) for a, b in random_matching(rng, refs))
    bare = DecoratedTangle(n_top, n_bottom, plain)
    arcs = frozenset(
        (a, b, rng.choice([0, 0, 1, 1, rng.randint(0, max_dec)]) if bare.west_exposed((a, b, 0)) else 0)
        for a, b, _ in plain
    )
    loops = tuple(rng.randint(0, max_dec) for _ in range(n_loops))
    return DecoratedTangle(n_top, n_bottom, arcs, loops)
