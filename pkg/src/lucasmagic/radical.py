"""Exact arithmetic with quadratic radicals.

A :class:`Radical` is a value ``coeff * sqrt(radicand)`` with a rational
coefficient and an integer radicand, kept in the canonical form where the
radicand is squarefree (negative radicands denote imaginary values, with
``radicand == -1`` meaning ``coeff * i``).  Addition is only defined between
radicals over the same radicand; :class:`RadicalSum` covers the general case
(sums of radicals with distinct radicands), which is what products of
eigenvector entries produce.
"""

from __future__ import annotations

import math
from fractions import Fraction


def squarefree_split(n: int) -> tuple[int, int]:
    """Split n > 0 as k*k * f with f squarefree; returns (k, f)."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    k, f = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    return k, f * n


class Radical:
    """coeff * sqrt(radicand), normalized so the radicand is squarefree.

    The canonical zero is Radical(0, 0).  radicand == 1 means the value is
    rational; radicand == -1 means coeff * i.
    """

    __slots__ = ("coeff", "radicand")

    def __init__(self, coeff, radicand: int = 1):
        coeff = Fraction(coeff)
        if coeff == 0 or radicand == 0:
            object.__setattr__(self, "coeff", Fraction(0))
            object.__setattr__(self, "radicand", 0)
            return
        sign = -1 if radicand < 0 else 1
        k, f = squarefree_split(abs(radicand))
        object.__setattr__(self, "coeff", coeff * k)
        object.__setattr__(self, "radicand", sign * f)

    def __setattr__(self, name, value):
        raise AttributeError("Radical is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def sqrt(cls, n: int) -> "Radical":
        """The principal square root of an integer (i*sqrt(-n) if n < 0)."""
        return cls(1, n)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.radicand == 0

    def is_real(self) -> bool:
        return self.radicand >= 0

    def is_rational(self) -> bool:
        return self.radicand in (0, 1)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Radical":
        return Radical(-self.coeff, self.radicand)

    def __abs__(self) -> "Radical":
        return Radical(abs(self.coeff), abs(self.radicand))

    def __add__(self, other) -> "Radical":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.radicand != other.radicand:
            raise ValueError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) "
                "terms exactly; use RadicalSum"
            )
        return Radical(self.coeff + other.coeff, self.radicand)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "Radical":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Radical(0, 0)
        a, d = self.coeff, self.radicand
        b, e = other.coeff, other.radicand
        if d < 0 and e < 0:
            # i*sqrt(|d|) * i*sqrt(|e|) = -sqrt(|d|*|e|)
            return Radical(-(a * b), abs(d) * abs(e))
        return Radical(a * b, d * e)

    __rmul__ = __mul__

    def inverse(self) -> "Radical":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero radical")
        a, d = self.coeff, self.radicand
        if d > 0:
            return Radical(Fraction(1) / (a * d), d)
        return Radical(Fraction(-1) / (a * -d), d)

    def __truediv__(self, other) -> "Radical":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def square(self) -> Fraction:
        """The exact value of self*self as a rational."""
        return self.coeff * self.coeff * self.radicand

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coeff == other.coeff and self.radicand == other.radicand

    def __hash__(self):
        return hash((self.coeff, self.radicand))

    def _require_real(self):
        if not self.is_real():
            raise ValueError("magnitude comparison is undefined for imaginary radicals")

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        self._require_real()
        other._require_real()
        sa = (self.coeff > 0) - (self.coeff < 0)
        sb = (other.coeff > 0) - (other.coeff < 0)
        if sa != sb:
            return sa < sb
        # same sign: compare squared magnitudes, flipping for negatives
        lhs, rhs = self.square(), other.square()
        return lhs < rhs if sa >= 0 else rhs < lhs

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other < self

    def __ge__(self, other):
        return self == other or self > other

    # -- conversions -------------------------------------------------------

    def __float__(self) -> float:
        if self.radicand < 0:
            raise ValueError("imaginary radical has no float value; use complex()")
        return float(self.coeff) * math.sqrt(self.radicand)

    def __complex__(self) -> complex:
        if self.radicand >= 0:
            return complex(float(self), 0.0)
        return complex(0.0, float(self.coeff) * math.sqrt(-self.radicand))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self.radicand == 1:
            return str(self.coeff)
        if self.radicand == -1:
            return f"i*{self.coeff}"
        if self.radicand > 0:
            return f"{self.coeff}*sqrt({self.radicand})"
        return f"i*{self.coeff}*sqrt({-self.radicand})"

    def __repr__(self) -> str:
        return f"Radical({self.coeff!r}, {self.radicand})"

    def to_json(self) -> dict:
        return {
            "coeff": [self.coeff.numerator, self.coeff.denominator],
            "radicand": self.radicand,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Radical":
        num, den = obj["coeff"]
        return cls(Fraction(num, den), obj["radicand"])


def _coerce(x) -> Radical | None:
    if isinstance(x, Radical):
        return x
    if isinstance(x, (int, Fraction)):
        return Radical(x)
    return None


class RadicalSum:
    """A finite sum of radicals with pairwise distinct radicands.

    Closed under +, -, * (products of square roots recombine into single
    radicals), which makes it the natural scalar type for Kronecker products
    of eigenvector matrices.  A plain Radical embeds as a one-term sum.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict[int, Fraction] = {}
        for t in self._iter_terms(terms):
            if t.is_zero():
                continue
            acc[t.radicand] = acc.get(t.radicand, Fraction(0)) + t.coeff
        object.__setattr__(
            self,
            "_terms",
            tuple(
                Radical(c, d)
                for d, c in sorted(acc.items())
                if c != 0
            ),
        )

    @staticmethod
    def _iter_terms(terms):
        if isinstance(terms, (Radical, int, Fraction)):
            terms = (terms,)
        for t in terms:
            if isinstance(t, RadicalSum):
                yield from t._terms
            else:
                r = _coerce(t)
                if r is None:
                    raise TypeError(f"cannot build RadicalSum from {t!r}")
                yield r

    def __setattr__(self, name, value):
        raise AttributeError("RadicalSum is immutable")

    def terms(self) -> tuple[Radical, ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return all(t.is_real() for t in self._terms)

    def __neg__(self):
        return RadicalSum(-t for t in self._terms)

    def __add__(self, other):
        other = _coerce_sum(other)
        if other is None:
            return NotImplemented
        return RadicalSum(self._terms + other._terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_sum(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_sum(other)
        if other is None:
            return NotImplemented
        out = []
        for a in self._terms:
            for b in other._terms:
                out.append(a * b)
        return RadicalSum(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce_sum(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __complex__(self) -> complex:
        return sum((complex(t) for t in self._terms), complex(0))

    def __float__(self) -> float:
        z = complex(self)
        if z.imag != 0:
            raise ValueError("imaginary radical sum has no float value")
        return z.real

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(str(t) for t in self._terms)

    def __repr__(self) -> str:
        return f"RadicalSum({list(self._terms)!r})"


def _coerce_sum(x) -> RadicalSum | None:
    if isinstance(x, RadicalSum):
        return x
    if isinstance(x, (Radical, int, Fraction)):
        return RadicalSum(x)
    return None
