"""Root combinatorics modulo Z: type signatures, Morita and isomorphism tests.

Roots of a factored polynomial fall into translation classes modulo Z.  The
*type signature* records, per class, the ordered sequence of multiplicities
(gaps between consecutive roots are ignored).  Two classical generalized Weyl
algebras T(v1), T(v2) are strongly graded Morita equivalent iff v1(h+b) and
v2(h) have the same type for some shift b, and isomorphic iff the root
multisets match exactly under some affine map h -> nu ± h (Bavula–Jordan).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from .errors import DomainError
from .poly import FactoredPoly
from .scalar import ZERO, Scalar, integer_difference

__all__ = [
    "Sign",
    "TypeSignature",
    "ZClass",
    "check_star",
    "isomorphic",
    "morita_equivalent",
    "same_type",
    "z_classes",
]

Sign = Literal["plus", "minus"]


@dataclass(frozen=True)
class ZClass:
    """One translation class of roots: an anchor (the smallest root) plus
    (offset, multiplicity) entries with strictly increasing offsets from 0."""

    anchor: Scalar
    entries: Tuple[Tuple[int, int], ...]

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        """Multiplicity sequence in offset order; this is the class's type."""
        return tuple(m for _, m in self.entries)

    def roots(self) -> Tuple[Scalar, ...]:
        return tuple(self.anchor + off for off, _ in self.entries)


@dataclass(frozen=True)
class TypeSignature:
    """All Z-classes of a polynomial, sorted by the anchor's textual form."""

    classes: Tuple[ZClass, ...]


def z_classes(v: FactoredPoly) -> TypeSignature:
    """Partition the roots of v by integer difference.

    Within a class the anchor is the smallest root and entries are sorted by
    their integer offset from it.
    """
    groups: List[List[Tuple[Scalar, int]]] = []
    for root, mult in v.factors:
        for group in groups:
            if integer_difference(root, group[0][0]) is not None:
                group.append((root, mult))
                break
        else:
            groups.append([(root, mult)])
    classes = []
    for group in groups:
        ref = group[0][0]
        offsets = sorted(
            ((integer_difference(r, ref), r, m) for r, m in group), key=lambda t: t[0]
        )
        base = offsets[0][0]
        anchor = offsets[0][1]
        entries = tuple((off - base, m) for off, _, m in offsets)
        classes.append(ZClass(anchor=anchor, entries=entries))
    return TypeSignature(classes=tuple(sorted(classes, key=lambda c: str(c.anchor))))


def same_type(u: FactoredPoly, v: FactoredPoly) -> bool:
    """True iff the classes biject with congruent anchors mod Z and equal
    ordered multiplicity sequences (gaps ignored)."""
    su, sv = z_classes(u), z_classes(v)
    if len(su.classes) != len(sv.classes):
        return False
    unmatched = list(sv.classes)
    for cu in su.classes:
        for i, cv in enumerate(unmatched):
            if integer_difference(cu.anchor, cv.anchor) is not None:
                if cu.multiplicities != cv.multiplicities:
                    return False
                unmatched.pop(i)
                break
        else:
            return False
    return True


def _candidate_order(c: Scalar) -> tuple:
    # deterministic preference: 0 first, then canonical sort order
    return (c != ZERO, c.sort_key())


def _require_nonconstant(*polys: FactoredPoly) -> None:
    for p in polys:
        if p.degree == 0:
            raise DomainError("operation requires a polynomial of degree >= 1")


def morita_equivalent(v1: FactoredPoly, v2: FactoredPoly) -> Optional[Scalar]:
    """Some b with same_type(v1(h+b), v2), or None if no shift works.

    Candidates are exhaustive: a valid b must carry some root of v1 into the
    Z-class of some root of v2, so b = r1 - r2 modulo Z for a root pair, and
    shifting b by an integer does not change the verdict.
    """
    _require_nonconstant(v1, v2)
    raw = sorted({r1 - r2 for r1 in v1.roots() for r2 in v2.roots()}, key=_candidate_order)
    candidates: List[Scalar] = []
    for c in raw:
        if all(integer_difference(c, k) is None for k in candidates):
            candidates.append(c)
    for b in candidates:
        if same_type(v1.shift(b), v2):
            return b
    return None


def isomorphic(v1: FactoredPoly, v2: FactoredPoly) -> Optional[Tuple[Scalar, Sign]]:
    """Bavula–Jordan test: some (nu, sign) with the root multiset of v2 equal
    to that of v1(nu + h) (plus: roots r -> r - nu) or v1(nu - h) (minus:
    roots r -> nu - r).  The unit eta is absorbed by monic normalization.

    Unequal degrees return None.  Among valid witnesses the deterministic
    preference is nu = 0 first, then canonical scalar order, plus before
    minus.
    """
    _require_nonconstant(v1, v2)
    if v1.degree != v2.degree:
        return None
    valid: List[Tuple[Scalar, Sign]] = []
    plus_cands = {r1 - r2 for r1 in v1.roots() for r2 in v2.roots()}
    for nu in plus_cands:
        if v1.shift(nu) == v2:
            valid.append((nu, "plus"))
    minus_cands = {r1 + r2 for r1 in v1.roots() for r2 in v2.roots()}
    for nu in minus_cands:
        if v1.reflect(nu) == v2:
            valid.append((nu, "minus"))
    if not valid:
        return None
    return min(valid, key=lambda t: (_candidate_order(t[0]), t[1] == "minus"))


def check_star(t: Scalar, v: FactoredPoly) -> bool:
    """Projective-generator condition for translation by t on the zero set of v.

    Roots are single points, so the condition reduces to eventual disjointness
    of {r} and {r' + n*t}: it holds iff t != 0, and fails only for t = 0 with
    at least one root present.
    """
    return t != ZERO or v.degree == 0
