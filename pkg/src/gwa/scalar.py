"""Exact arithmetic in the Q-span of the unit 1 and formal transcendental symbols.

Every point of the complex line that the library ever touches (roots of
polynomials, translation amounts, base points of modules) is modelled as a
finite Q-linear combination

    q0 * 1 + q1 * w1 + q2 * w2 + ...

of the rational unit and opaque symbols ``w1, w2, ...``.  The symbols stand
for arbitrary complex numbers with no rational relations between them, which
is exactly the structure the mod-Z root combinatorics consumes: the only
questions ever asked of a Scalar are linear ones (sums, differences,
integrality).  There is deliberately no Scalar * Scalar product.

All coefficients are `fractions.Fraction`, so arithmetic is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Tuple, Union

#: Reserved symbol name carrying the rational part of a Scalar.
UNIT = "1"

RationalLike = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

SortKey = Tuple[Tuple[str, ...], Tuple[Fraction, ...], Fraction]


class Scalar:
    """Immutable element of the Q-vector space spanned by {1, w1, w2, ...}.

    Stored sparsely as ``symbol -> nonzero Fraction``; two Scalars are equal
    iff their coefficient maps are equal, so canonical form doubles as the
    equality test.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(
        self,
        coeffs: Union[Mapping[str, RationalLike], Iterable[Tuple[str, RationalLike]]] = (),
    ):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[str, Fraction] = {}
        for name, q in items:
            if name != UNIT and not _NAME_RE.match(name):
                raise ValueError(f"invalid symbol name {name!r}")
            if name == "h":
                raise ValueError("'h' is reserved for the polynomial variable")
            q = Fraction(q)
            if q:
                total = acc.get(name, Fraction(0)) + q
                if total:
                    acc[name] = total
                else:
                    acc.pop(name, None)
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))
        object.__setattr__(self, "_hash", hash(self._terms))

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, q: RationalLike) -> "Scalar":
        return cls(((UNIT, Fraction(q)),))

    @classmethod
    def symbol(cls, name: str, coeff: RationalLike = 1) -> "Scalar":
        return cls(((name, Fraction(coeff)),))

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[str, Fraction], ...]:
        return self._terms

    def coefficient(self, name: str) -> Fraction:
        for n, q in self._terms:
            if n == name:
                return q
        return Fraction(0)

    @property
    def rational_part(self) -> Fraction:
        return self.coefficient(UNIT)

    def is_rational(self) -> bool:
        return all(n == UNIT for n, _ in self._terms)

    def is_integer(self) -> bool:
        """True iff the value is a (possibly zero) integer."""
        return self.is_rational() and self.rational_part.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.rational_part)

    def sort_key(self) -> SortKey:
        """Deterministic total-order key: symbol names, then coefficients."""
        syms = tuple(n for n, _ in self._terms if n != UNIT)
        coeffs = tuple(q for n, q in self._terms if n != UNIT)
        return (syms, coeffs, self.rational_part)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: Union["Scalar", RationalLike]) -> "Scalar":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.rational(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["Scalar", RationalLike]) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self._terms + other._terms)

    __radd__ = __add__

    def __sub__(self, other: Union["Scalar", RationalLike]) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> "Scalar":
        return Scalar.rational(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(tuple((n, -q) for n, q in self._terms))

    def __mul__(self, q: RationalLike) -> "Scalar":
        if not isinstance(q, (int, Fraction)):
            return NotImplemented
        return Scalar(tuple((n, c * q) for n, c in self._terms))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    # -- formatting --------------------------------------------------------

    def signed_terms(self) -> Tuple[Tuple[int, str], ...]:
        """The canonical term sequence as (sign, unsigned text) pairs.

        Symbols come first in name order, the rational part last; used both
        by __str__ and by the polynomial printer, which needs explicit signs.
        """
        out = []
        for n, q in self._terms:
            if n == UNIT:
                continue
            sign = 1 if q > 0 else -1
            mag = abs(q)
            out.append((sign, n if mag == 1 else f"{mag}*{n}"))
        q = self.rational_part
        if q:
            out.append((1 if q > 0 else -1, str(abs(q))))
        return tuple(out)

    def __str__(self) -> str:
        terms = self.signed_terms()
        if not terms:
            return "0"
        parts = []
        for i, (sign, text) in enumerate(terms):
            if i == 0:
                parts.append(("-" if sign < 0 else "") + text)
            else:
                parts.append(("-" if sign < 0 else "+") + text)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


#: The zero scalar.
ZERO = Scalar()
#: The scalar 1.
ONE = Scalar.rational(1)


@lru_cache(maxsize=4096)
def integer(n: int) -> Scalar:
    """Cached integer Scalar; hot paths build many small integer points."""
    return Scalar.rational(n)


def integer_difference(a: Scalar, b: Scalar) -> Optional[int]:
    """The integer n with a - b = n, or None if a - b is not an integer.

    Definedness is symmetric and transitive: it is the "same class mod Z"
    relation underpinning all root-type combinatorics.
    """
    d = a - b
    if d.is_integer():
        return d.as_integer()
    return None
