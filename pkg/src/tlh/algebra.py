"""The diagram algebra: reduction to the basis, products, presentation checks.

A raw gluing of two basis diagrams is a square tangle that may contain loops
and edges with stacked decorations.  Three rewriting rules reduce it to a
linear combination of basis diagrams:

  * an undecorated loop is removed, multiplying the term by delta = v + 1/v;
  * a loop with exactly one decoration kills the term;
  * an edge or loop with r >= 2 decorations splits the term in two, with
    r - 1 and r - 2 decorations in place of r.

Iterating the third rule resolves an r-decorated edge into
F(r-1) * (plain edge) + F(r) * (singly decorated edge), and an r-decorated
loop into the scalar F(r-1) * delta; ``normal_form`` applies these closed
forms directly, while ``normal_form_random`` replays single rules in a
random order so tests can confirm the rewriting system is confluent.
"""

from __future__ import annotations

import dataclasses

from tlh.diagram import Diagram, enumerate_diagrams, generator_U
from tlh.ring import G_ZERO, LaurentPoly, fib_pair
from tlh.tangle import DecoratedTangle


class ClosureViolation(Exception):
    """A reduced tangle fell outside the span of the basis diagrams."""


def normal_form(t: DecoratedTangle) -> list:
    """Reduce loops and stacked decorations; a list of (tangle, coefficient).

    The returned tangles are loop-free with at most one decoration per edge;
    they are not checked for basis membership.
    """
    coeff = LaurentPoly.one()
    for r in t.loops:
        weight = fib_pair(r)[0]
        if weight == 0:
            return []
        coeff = coeff * LaurentPoly({1: weight, -1: weight})
    plain = [a for a in t.sorted_arcs() if a[2] <= 1]
    heavy = [a for a in t.sorted_arcs() if a[2] >= 2]
    out = []
    choices = [(t, coeff)]
    for a, b, r in heavy:
        f_prev, f_r = fib_pair(r)
        grown = []
        for tang, c in choices:
            arcs = tang.arcs - {(a, b, r)}
            grown.append((dataclasses.replace(tang, arcs=arcs | {(a, b, 0)}), c * f_prev))
            grown.append((dataclasses.replace(tang, arcs=arcs | {(a, b, 1)}), c * f_r))
        choices = grown
    for tang, c in choices:
        out.append((dataclasses.replace(tang, loops=()), c))
    return out


def normal_form_random(t: DecoratedTangle, rng) -> dict:
    """Apply single reduction rules in a random order until none applies.

    Returns the combined terms as a tangle -> coefficient dict.  Used to
    check that the closed-form reduction does not depend on rule order.
    """
    pending = [(t, LaurentPoly.one())]
    done: dict[DecoratedTangle, LaurentPoly] = {}
    while pending:
        tang, coeff = pending.pop()
        redexes = [("loop", i) for i in range(len(tang.loops))]
        redexes += [("edge", a) for a in tang.sorted_arcs() if a[2] >= 2]
        if not redexes:
            done[tang] = done.get(tang, LaurentPoly.zero()) + coeff
            if done[tang].is_zero():
                del done[tang]
            continue
        kind, x = rng.choice(redexes)
        if kind == "loop":
            r = tang.loops[x]
            rest = tang.loops[:x] + tang.loops[x + 1 :]
            if r == 0:
                pending.append((dataclasses.replace(tang, loops=rest), coeff * LaurentPoly.delta()))
            elif r >= 2:
                pending.append((dataclasses.replace(tang, loops=rest + (r - 1,)), coeff))
                pending.append((dataclasses.replace(tang, loops=rest + (r - 2,)), coeff))
            # r == 1: the term vanishes
        else:
            a, b, r = x
            arcs = tang.arcs - {x}
            pending.append((dataclasses.replace(tang, arcs=arcs | {(a, b, r - 1)}), coeff))
            pending.append((dataclasses.replace(tang, arcs=arcs | {(a, b, r - 2)}), coeff))
    return done


class AlgebraElement:
    """A linear combination of basis diagrams on a common strand count."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms=None):
        clean: dict[Diagram, LaurentPoly] = {}
        for d, c in (terms or {}).items():
            if not isinstance(d, Diagram):
                raise TypeError(f"term key {d!r} is not a Diagram")
            if d.m != m:
                raise ValueError(f"diagram on {d.m} strands in an element on {m} strands")
            poly = LaurentPoly._coerce(c)
            if poly is None:
                raise TypeError(f"bad coefficient {c!r}")
            if not poly.is_zero():
                clean[d] = poly
        self.m = m
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "AlgebraElement":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "AlgebraElement":
        return cls.from_diagram(Diagram(DecoratedTangle.identity(m)))

    @classmethod
    def from_diagram(cls, d: Diagram, coeff=1) -> "AlgebraElement":
        return cls(d.m, {d: coeff})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def support(self) -> list:
        return sorted(self._terms, key=Diagram.sort_key)

    def items(self):
        return [(d, self._terms[d]) for d in self.support()]

    def coefficient(self, d: Diagram) -> LaurentPoly:
        return self._terms.get(d, LaurentPoly.zero())

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    # -- linear structure --------------------------------------------------

    def _require_same_frame(self, other: "AlgebraElement"):
        if self.m != other.m:
            raise ValueError(f"mixed strand counts {self.m} and {other.m}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._require_same_frame(other)
        terms = dict(self._terms)
        for d, c in other._terms.items():
            terms[d] = terms.get(d, LaurentPoly.zero()) + c
        return AlgebraElement(self.m, terms)

    def __neg__(self):
        return AlgebraElement(self.m, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        poly = LaurentPoly._coerce(c)
        if poly is None:
            raise TypeError(f"bad scalar {c!r}")
        return AlgebraElement(self.m, {d: poly * v for d, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def star(self) -> "AlgebraElement":
        """The anti-automorphism flipping every diagram top-to-bottom."""
        return AlgebraElement(self.m, {d.star(): c for d, c in self._terms.items()})

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for d, c in self.items():
            cs = str(c)
            bits.append(str(d) if cs == "1" else f"({cs})*{d}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"<AlgebraElement on {self.m} strands: {self}>"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"diagram": d.to_json(), "coeff": c.to_json()} for d, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraElement":
        if not isinstance(obj, dict) or "m" not in obj:
            raise ValueError(f"algebra element must be an object with 'm', got {obj!r}")
        terms: dict[Diagram, LaurentPoly] = {}
        for entry in obj.get("terms", []):
            d = Diagram.from_json(entry["diagram"])
            c = LaurentPoly.from_json(entry["coeff"])
            terms[d] = terms.get(d, LaurentPoly.zero()) + c
        return cls(obj["m"], terms)


def reduce_tangle(t: DecoratedTangle) -> AlgebraElement:
    """Fully reduce a square tangle to an element of the diagram algebra."""
    if not t.is_square:
        raise ValueError(f"cannot reduce a non-square tangle ({t.n_top} by {t.n_bottom})")
    terms: dict[Diagram, LaurentPoly] = {}
    for tang, coeff in normal_form(t):
        try:
            d = Diagram(tang)
        except ValueError as exc:
            raise ClosureViolation(f"reduction left a non-basis tangle {tang}: {exc}") from exc
        terms[d] = terms.get(d, LaurentPoly.zero()) + coeff
    return AlgebraElement(t.n_top, terms)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """The bilinear product: glue diagrams pairwise and reduce."""
    x._require_same_frame(y)
    terms: dict[Diagram, LaurentPoly] = {}
    for d1, c1 in x._terms.items():
        for d2, c2 in y._terms.items():
            c = c1 * c2
            for d, k in reduce_tangle(d1.tangle.concat(d2.tangle))._terms.items():
                terms[d] = terms.get(d, LaurentPoly.zero()) + k * c
    return AlgebraElement(x.m, terms)


def special_elements(m: int) -> dict:
    """alpha, beta, epsilon, zeta as elements on m strands."""
    if m < 3:
        raise ValueError(f"the special elements need at least 3 strands, got {m}")
    one = AlgebraElement.one(m)
    u1 = AlgebraElement.from_diagram(generator_U(1, m))
    u2 = AlgebraElement.from_diagram(generator_U(2, m))
    return {
        "alpha": u1 * u2 - one,
        "beta": u2 * u1 - one,
        "epsilon": u1 * u2 * u1 - u1.scale(2),
        "zeta": u2 * u1 * u2 - u2.scale(2),
    }


def evaluate_word(tokens, m: int) -> AlgebraElement:
    """The product of generator tokens: '1', 'U3', 'alpha', 'beta', 'epsilon', 'zeta'."""
    acc = AlgebraElement.one(m)
    specials = None
    for tok in tokens:
        if tok == "1":
            continue
        if tok.startswith("U") and tok[1:].isdigit():
            factor = AlgebraElement.from_diagram(generator_U(int(tok[1:]), m))
        elif tok in ("alpha", "beta", "epsilon", "zeta"):
            if specials is None:
                specials = special_elements(m)
            factor = specials[tok]
        else:
            raise ValueError(f"unknown generator token {tok!r}")
        acc = acc * factor
    return acc


def verify_presentation(m: int) -> list:
    """Check every defining relation among the generators; [] means all hold."""
    problems = []
    n = m - 1
    delta = LaurentPoly.delta()
    u = {i: AlgebraElement.from_diagram(generator_U(i, m)) for i in range(1, n + 1)}

    def check(name, lhs, rhs):
        if lhs != rhs:
            problems.append(f"{name}: {lhs} != {rhs}")

    for i in range(1, n + 1):
        check(f"U{i}^2 = [2]U{i}", u[i] * u[i], u[i].scale(delta))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            check(f"U{i}U{j} = U{j}U{i}", u[i] * u[j], u[j] * u[i])
    for i in range(2, n):
        for a, b in ((i, i + 1), (i + 1, i)):
            check(f"U{a}U{b}U{a} = U{a}", u[a] * u[b] * u[a], u[a])
    if n >= 2:
        for a, b in ((1, 2), (2, 1)):
            lhs = u[a] * u[b] * u[a] * u[b] * u[a]
            rhs = (u[a] * u[b] * u[a]).scale(3) - u[a]
            check(f"U{a}U{b}U{a}U{b}U{a} = 3U{a}U{b}U{a} - U{a}", lhs, rhs)
        s = special_elements(m)
        check("epsilon*beta = U1", s["epsilon"] * s["beta"], u[1])
        check("zeta*alpha = U2", s["zeta"] * s["alpha"], u[2])
        check("U2*epsilon = zeta*U1", u[2] * s["epsilon"], s["zeta"] * u[1])
    return problems


def positivity_check(m: int) -> list:
    """Check every structure coefficient is a positive integer times a power of delta."""
    problems = []
    delta = LaurentPoly.delta()
    diagrams = enumerate_diagrams(m)
    for d1 in diagrams:
        for d2 in diagrams:
            product = reduce_tangle(d1.tangle.concat(d2.tangle))
            for d, full in product._terms.items():
                c, power = full, 0
                while (q := c.exact_div(delta)) is not None:
                    c, power = q, power + 1
                const = c.coefficient(0)
                ok = (
                    c == LaurentPoly.const(const)
                    and const.b == 0
                    and isinstance(const.a, int)
                    and const.a > 0
                    and power <= min(d1.k, d2.k)
                )
                if not ok:
                    problems.append(f"({d1}) * ({d2}) has coefficient {full} at {d}")
    return problems
