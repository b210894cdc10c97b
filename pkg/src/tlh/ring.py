"""Exact scalar arithmetic for the type-H diagram calculus.

Decorations on diagram edges multiply like powers of a symbol gamma subject
to gamma^2 = gamma + 1, so the weight of r stacked decorations collapses to
F(r-1) + F(r)*gamma with the Fibonacci convention F(0) = 0, F(1) = 1.  We
realise gamma as the golden ratio phi and compute in Z[phi], passing to
exact rational coordinates in Q(phi) only where an inverse is genuinely
required (the cellular basis change divides by gamma2 - gamma1 = 1 - 2*phi).

Coefficients of the diagram algebra live one level up, in Laurent
polynomials in v over the golden ring; the loop parameter is the quantum
integer delta = [2] = v + v^(-1).  Everything here is immutable and exact:
no floats anywhere.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction


def _norm_coord(c):
    """Collapse denominator-1 fractions back to int."""
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


@dataclasses.dataclass(frozen=True)
class GoldenScalar:
    """An element a + b*phi of Z[phi] (or Q(phi)), with phi^2 = phi + 1.

    >>> phi = GoldenScalar(0, 1)
    >>> phi * phi == phi + 1
    True
    >>> (GoldenScalar(1, 0) - 2 * phi) ** 2 == GoldenScalar(5, 0)
    True
    """

    a: object = 0
    b: object = 0

    def __post_init__(self):
        object.__setattr__(self, "a", _norm_coord(self.a))
        object.__setattr__(self, "b", _norm_coord(self.b))

    @staticmethod
    def _coerce(x) -> "GoldenScalar | None":
        if isinstance(x, GoldenScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenScalar(x, 0)
        return None

    @property
    def is_integral(self) -> bool:
        return isinstance(self.a, int) and isinstance(self.b, int)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GoldenScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenScalar(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GoldenScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        return GoldenScalar(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenScalar":
        """The Galois conjugate phi -> 1 - phi."""
        return GoldenScalar(self.a + self.b, -self.b)

    def norm(self):
        """Field norm a^2 + ab - b^2; rational, zero only at zero."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> "GoldenScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero golden scalar")
        conj = self.conjugate()
        return GoldenScalar(Fraction(conj.a, 1) / n, Fraction(conj.b, 1) / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"nonnegative integer power expected, got {e!r}")
        out, base = GoldenScalar(1, 0), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        mag = -self.b if self.b < 0 else self.b
        term = "phi" if mag == 1 else f"{mag}*phi"
        if self.a == 0:
            return term if self.b > 0 else f"-{term}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {term}"

    def to_json(self):
        """Coordinate pair [a, b]; non-integer rationals render as 'p/q'."""
        enc = lambda c: c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"
        return [enc(self.a), enc(self.b)]

    @classmethod
    def from_json(cls, obj) -> "GoldenScalar":
        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise ValueError(f"golden scalar must be a pair, got {obj!r}")
        dec = lambda c: Fraction(c) if isinstance(c, str) else c
        return cls(dec(obj[0]), dec(obj[1]))


G_ZERO = GoldenScalar(0, 0)
G_ONE = GoldenScalar(1, 0)
PHI = GoldenScalar(0, 1)
#: The two roots of x^2 = x + 1: the decoration weights gamma1, gamma2.
GAMMA1 = PHI
GAMMA2 = GoldenScalar(1, -1)


def fib_pair(r: int) -> tuple[int, int]:
    """(F(r-1), F(r)) with F(0) = 0, F(1) = 1; F(-1) = 1.

    >>> [fib_pair(r) for r in range(4)]
    [(1, 0), (0, 1), (1, 1), (1, 2)]
    """
    if r < 0:
        raise ValueError(f"decoration count must be nonnegative, got {r}")
    a, b = 1, 0
    for _ in range(r):
        a, b = b, a + b
    return a, b


def fib_reduce(r: int) -> GoldenScalar:
    """gamma^r as an element of Z[phi]: F(r-1) + F(r)*phi.

    >>> fib_reduce(5)
    GoldenScalar(a=3, b=5)
    >>> fib_reduce(2) == PHI * PHI
    True
    """
    return GoldenScalar(*fib_pair(r))


class LaurentPoly:
    """Laurent polynomial in v with GoldenScalar coefficients.

    Stored as a finitely supported exponent -> coefficient map with no zero
    values.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[int, GoldenScalar] = {}
        for e, c in (terms or {}).items():
            g = GoldenScalar._coerce(c)
            if g is None:
                raise TypeError(f"bad coefficient {c!r}")
            if not g.is_zero():
                if not isinstance(e, int):
                    raise TypeError(f"bad exponent {e!r}")
                clean[e] = g
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def v_pow(cls, e: int) -> "LaurentPoly":
        return cls({e: 1})

    @classmethod
    def delta(cls) -> "LaurentPoly":
        """The loop weight [2] = v + v^(-1)."""
        return cls({1: 1, -1: 1})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, e: int) -> GoldenScalar:
        return self._terms.get(e, G_ZERO)

    @property
    def min_exp(self):
        return min(self._terms) if self._terms else None

    @property
    def max_exp(self):
        return max(self._terms) if self._terms else None

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly | None":
        if isinstance(x, LaurentPoly):
            return x
        g = GoldenScalar._coerce(x)
        if g is not None:
            return LaurentPoly({0: g})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, G_ZERO) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[int, GoldenScalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, G_ZERO) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"nonnegative integer power expected, got {e!r}")
        out, base = LaurentPoly.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    # -- division ----------------------------------------------------------

    def divmod_by(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Quotient and remainder over the coefficient field Q(phi).

        Both operands are shifted so their lowest exponent is zero, divided
        as ordinary polynomials, and shifted back, so self == q * other + r
        with r supported strictly below other's degree span.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        sf, sg = self.min_exp, other.min_exp
        G = {e - sg: c for e, c in other._terms.items()}
        deg_g = max(G)
        lead_inv = G[deg_g].inverse()
        rem = {e - sf: c for e, c in self._terms.items()}
        quo: dict[int, GoldenScalar] = {}
        while rem and max(rem) >= deg_g:
            top = max(rem)
            q_exp = top - deg_g
            q_coeff = rem[top] * lead_inv
            quo[q_exp] = q_coeff
            for e, c in G.items():
                ee = e + q_exp
                val = rem.get(ee, G_ZERO) - q_coeff * c
                if val.is_zero():
                    rem.pop(ee, None)
                else:
                    rem[ee] = val
            assert top not in rem
        q = LaurentPoly({e + sf - sg: c for e, c in quo.items()})
        r = LaurentPoly({e + sf: c for e, c in rem.items()})
        return q, r

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """self / other when the division is exact, else None."""
        q, r = self.divmod_by(other)
        return q if r.is_zero() else None

    # -- misc --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for e, c in self.items():
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]):
                cs = f"({cs})"
            if e == 0:
                bits.append(cs)
            else:
                ve = "v" if e == 1 else f"v^{e}"
                bits.append(ve if cs == "1" else f"{cs}*{ve}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    def to_json(self):
        """Triples [exponent, a, b] with strictly increasing exponents."""
        return [[e, *c.to_json()] for e, c in self.items()]

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        if not isinstance(obj, list):
            raise ValueError(f"laurent polynomial must be a list of triples, got {obj!r}")
        terms = {}
        last = None
        for t in obj:
            if not isinstance(t, list) or len(t) != 3:
                raise ValueError(f"bad laurent term {t!r}")
            e = t[0]
            if last is not None and e <= last:
                raise ValueError("laurent exponents must be strictly increasing")
            last = e
            terms[e] = GoldenScalar.from_json(t[1:])
        return cls(terms)
