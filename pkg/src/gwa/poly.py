"""Monic univariate polynomials in fully factored form, plus the text grammar.

A polynomial is a finite multiset of roots: ``{root: multiplicity}`` with
every root a :class:`~gwa.scalar.Scalar`.  The empty multiset is the constant
polynomial 1.  Polynomials are always monic — every criterion computed here
(root classes mod Z, multiplicity patterns, coprimality) is insensitive to a
global unit, so leading coefficients are dropped at the boundary.

Only totally factored input is accepted; no root finding is ever performed.

Grammar (liberal on input, canonical on output)::

    poly    := '1' | factor (['*'] factor)*
    factor  := '(' 'h' signed-scalar? ')' ('^' int)?  |  'h' ('^' int)?
    scalar  := ['-'] term (('+'|'-') term)*
    term    := rational | rational '*' symbol | symbol
    rational:= int ('/' int)?

``(h - s)`` contributes the root ``s``.  The canonical printer emits factors
in a deterministic order (descending root sort key, so ``(h)*(h+1)*(h+2)``)
with explicit ``*`` and omits ``^1``; ``parse(str(v)) == v`` holds bit-exactly.
The names ``1`` and ``h`` are reserved and cannot be used as symbols.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple, Union

from .errors import ParseError
from .scalar import Scalar

__all__ = [
    "FactoredPoly",
    "ONE_POLY",
    "coprime",
    "multiply",
    "parse",
    "parse_scalar",
]


class FactoredPoly:
    """Monic polynomial as a root multiset over the Scalar domain."""

    __slots__ = ("_factors", "_hash")

    def __init__(
        self,
        factors: Union[Mapping[Scalar, int], Iterable[Tuple[Scalar, int]]] = (),
    ):
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[Scalar, int] = {}
        for root, mult in items:
            if not isinstance(root, Scalar):
                raise TypeError(f"root must be a Scalar, got {root!r}")
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity must be an integer >= 1, got {mult!r}")
            acc[root] = acc.get(root, 0) + mult
        ordered = sorted(acc.items(), key=lambda it: it[0].sort_key(), reverse=True)
        object.__setattr__(self, "_factors", tuple(ordered))
        object.__setattr__(self, "_hash", hash(self._factors))

    # -- queries -----------------------------------------------------------

    @property
    def factors(self) -> Tuple[Tuple[Scalar, int], ...]:
        """(root, multiplicity) pairs in canonical (printing) order."""
        return self._factors

    def roots(self) -> Tuple[Scalar, ...]:
        return tuple(r for r, _ in self._factors)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self._factors)

    @property
    def is_one(self) -> bool:
        return not self._factors

    def multiplicity(self, a: Scalar) -> int:
        """Stored multiplicity of the root a, 0 if a is not a root."""
        for root, mult in self._factors:
            if root == a:
                return mult
        return 0

    def is_root(self, a: Scalar) -> bool:
        return self.multiplicity(a) > 0

    def value_factors(self, x: Scalar) -> Tuple[Scalar, ...]:
        """The exact value v(x) as a multiset of linear factors (x - root).

        Products of symbolic points leave the Scalar domain, so values are
        kept factored; the product is zero iff some factor is zero, i.e. iff
        x is a root.
        """
        out = []
        for root, mult in self._factors:
            out.extend([x - root] * mult)
        return tuple(sorted(out, key=Scalar.sort_key))

    # -- operations --------------------------------------------------------

    def shift(self, c: Union[Scalar, int]) -> "FactoredPoly":
        """v(h + c): every root r becomes r - c."""
        if isinstance(c, int):
            c = Scalar.rational(c)
        return FactoredPoly(tuple((r - c, m) for r, m in self._factors))

    def reflect(self, c: Union[Scalar, int]) -> "FactoredPoly":
        """Root multiset of v(c - h) up to a unit: every root r becomes c - r."""
        if isinstance(c, int):
            c = Scalar.rational(c)
        return FactoredPoly(tuple((c - r, m) for r, m in self._factors))

    def __mul__(self, other: "FactoredPoly") -> "FactoredPoly":
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        return FactoredPoly(self._factors + other._factors)

    def coprime(self, other: "FactoredPoly") -> bool:
        """True iff the root sets are disjoint."""
        mine = {r for r, _ in self._factors}
        return all(r not in mine for r, _ in other._factors)

    # -- dunder plumbing ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        parts = []
        for root, mult in self._factors:
            inner = "h"
            for sign, text in (-root).signed_terms():
                inner += ("-" if sign < 0 else "+") + text
            term = f"({inner})"
            if mult > 1:
                term += f"^{mult}"
            parts.append(term)
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"FactoredPoly({str(self)!r})"


#: The constant polynomial 1 (empty root multiset).
ONE_POLY = FactoredPoly()


def multiply(u: FactoredPoly, w: FactoredPoly) -> FactoredPoly:
    """Multiplicity-wise sum of the root multisets."""
    return u * w


def coprime(u: FactoredPoly, w: FactoredPoly) -> bool:
    """True iff u and w share no root."""
    return u.coprime(w)


# ---------------------------------------------------------------------------
# parsing


class _Tokens:
    """Flat token stream with positions, shared by the scalar and poly parsers."""

    PUNCT = "()*^+-/"

    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []  # (kind, value, position)
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in self.PUNCT:
                self.toks.append(("punct", ch, i))
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("number", text[i:j], i))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j], i))
                i = j
            else:
                raise ParseError(f"unexpected character {ch!r}", i)
        self.pos = 0

    def peek(self) -> Optional[tuple[str, str, int]]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def accept(self, value: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[0] == "punct" and tok[1] == value:
            self.pos += 1
            return True
        return False

    def expect(self, value: str) -> None:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {value!r}", len(self.text))
        if tok[0] != "punct" or tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.toks)


def _parse_rational(ts: _Tokens) -> Fraction:
    kind, value, pos = ts.next()
    if kind != "number":
        raise ParseError(f"expected a number, found {value!r}", pos)
    num = int(value)
    if ts.accept("/"):
        kind, value, pos = ts.next()
        if kind != "number":
            raise ParseError(f"expected a denominator, found {value!r}", pos)
        den = int(value)
        if den == 0:
            raise ParseError("zero denominator", pos)
        return Fraction(num, den)
    return Fraction(num)


def _parse_scalar_term(ts: _Tokens) -> Scalar:
    tok = ts.peek()
    if tok is None:
        raise ParseError("expected a scalar term", len(ts.text))
    kind, value, pos = tok
    if kind == "number":
        q = _parse_rational(ts)
        if ts.accept("*"):
            kind, value, pos = ts.next()
            if kind != "name":
                raise ParseError(f"expected a symbol after '*', found {value!r}", pos)
            _check_symbol(value, pos)
            return Scalar.symbol(value, q)
        return Scalar.rational(q)
    if kind == "name":
        ts.next()
        _check_symbol(value, pos)
        return Scalar.symbol(value)
    raise ParseError(f"expected a scalar term, found {value!r}", pos)


def _check_symbol(name: str, pos: int) -> None:
    if name in ("h", "1"):
        raise ParseError(f"{name!r} is reserved and cannot be a symbol", pos)


def _parse_scalar_sum(ts: _Tokens) -> Scalar:
    sign = -1 if ts.accept("-") else 1
    total = _parse_scalar_term(ts) * sign
    while True:
        tok = ts.peek()
        if tok is None:
            break
        if tok[0] == "punct" and tok[1] in "+-":
            ts.next()
            term = _parse_scalar_term(ts)
            total = total + (term if tok[1] == "+" else -term)
        else:
            break
    return total


def parse_scalar(text: str) -> Scalar:
    """Parse the textual scalar form, e.g. ``5/2``, ``w+3``, ``2*w-1/3``."""
    ts = _Tokens(text)
    value = _parse_scalar_sum(ts)
    if not ts.at_end():
        _, tok_value, pos = ts.next()
        raise ParseError(f"trailing input {tok_value!r}", pos)
    return value


def _parse_exponent(ts: _Tokens) -> int:
    if not ts.accept("^"):
        return 1
    kind, value, pos = ts.next()
    if kind != "number":
        raise ParseError(f"expected an exponent, found {value!r}", pos)
    exp = int(value)
    if exp < 1:
        raise ParseError(f"exponent must be >= 1, got {exp}", pos)
    return exp


def _parse_factor(ts: _Tokens) -> tuple[Scalar, int]:
    tok = ts.peek()
    assert tok is not None
    kind, value, pos = tok
    if kind == "name" and value == "h":
        ts.next()
        return Scalar(), _parse_exponent(ts)
    ts.expect("(")
    kind, value, pos = ts.next()
    if kind != "name" or value != "h":
        raise ParseError(f"expected 'h', found {value!r}", pos)
    tok = ts.peek()
    if tok is not None and tok[0] == "punct" and tok[1] in "+-":
        offset = _parse_scalar_sum(ts)
    else:
        offset = Scalar()
    ts.expect(")")
    # (h + s) = (h - (-s)) has root -s
    return -offset, _parse_exponent(ts)


def parse(text: str) -> FactoredPoly:
    """Parse a factored polynomial, e.g. ``(h)*(h+1)``, ``(h-w)^2*(h-1)``, ``h``.

    Raises :class:`~gwa.errors.ParseError` with a position on malformed input
    and on exponents < 1.  Implicit multiplication (``h(h+1)``) is accepted;
    the canonical printer always writes explicit ``*``.
    """
    ts = _Tokens(text)
    tok = ts.peek()
    if tok is None:
        raise ParseError("empty polynomial", 0)
    if tok[0] == "number" and tok[1] == "1":
        ts.next()
        if not ts.at_end():
            _, value, pos = ts.next()
            raise ParseError(f"trailing input {value!r}", pos)
        return ONE_POLY
    factors: list[tuple[Scalar, int]] = []
    while True:
        factors.append(_parse_factor(ts))
        if ts.at_end():
            break
        ts.accept("*")  # optional separator; adjacency also multiplies
        tok = ts.peek()
        if tok is None:
            raise ParseError("dangling '*'", len(ts.text))
        if not (tok[0] == "name" and tok[1] == "h") and not (tok[0] == "punct" and tok[1] == "("):
            raise ParseError(f"expected a factor, found {tok[1]!r}", tok[2])
    return FactoredPoly(factors)
