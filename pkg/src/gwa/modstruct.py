"""Graded weight-module structure theory for A = T(v) over C[h].

Conventions, fixed once and verified against the weight model:

* maximal ideals are points: lambda = (h - a) is identified with a;
* sigma translates by 1, so sigma^k(v) lies in (h - a) iff v(a + k) = 0,
  the point of sigma^k(lambda) is a - k, and the induced action Xi on
  points sends a to a + n;
* chi(v, a) = {k in Z : v(a + k) = 0} governs the submodule lattice of the
  cyclic module A^a = A/A(h - a), whose homogeneous components are all
  one-dimensional.

Every composition factor of the semisimplification of A^a is a shifted
simple S^(point)[shift] carried by a degree interval; the intervals cut Z
exactly at the elements of chi, and point + shift = a for every factor (the
Artinian block key).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

from .errors import DomainError
from .poly import FactoredPoly
from .roottype import z_classes
from .scalar import Scalar, integer_difference

__all__ = [
    "CompositionFactor",
    "DegreeInterval",
    "ExtStatus",
    "ProjectiveData",
    "SimpleLabel",
    "SubmoduleDescriptor",
    "WeightModel",
    "annihilator_An",
    "artinian_block_key",
    "chi",
    "composition_series",
    "ext1",
    "hom_degree",
    "m_nu_length",
    "oplus_blocks",
    "projective_data",
    "submodules",
    "verma_series",
    "weight_model",
]


@dataclass(frozen=True)
class SimpleLabel:
    """The simple module S^(h - point) shifted by `shift`."""

    point: Scalar
    shift: int

    def block_key(self) -> Scalar:
        return self.point + self.shift


@dataclass(frozen=True)
class DegreeInterval:
    """Inclusive integer interval; None stands for an infinite end."""

    lo: Optional[int]
    hi: Optional[int]

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def contains(self, d: int) -> bool:
        return (self.lo is None or self.lo <= d) and (self.hi is None or d <= self.hi)

    def translated(self, n: int) -> "DegreeInterval":
        return DegreeInterval(
            None if self.lo is None else self.lo + n,
            None if self.hi is None else self.hi + n,
        )

    def clip(self, lo: int, hi: int) -> Optional[range]:
        """Concrete range of degrees inside the window, None if disjoint."""
        start = lo if self.lo is None else max(self.lo, lo)
        stop = hi if self.hi is None else min(self.hi, hi)
        if start > stop:
            return None
        return range(start, stop + 1)

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


@dataclass(frozen=True)
class SubmoduleDescriptor:
    """Proper nontrivial graded submodule of A^a: a single tail A^{a,k} or a
    direct sum A^{a,k} + A^{a,k2} with k <= 0 < k2."""

    k: int
    k2: Optional[int] = None

    def __post_init__(self):
        if self.k2 is not None and not (self.k <= 0 < self.k2):
            raise ValueError("pair descriptor requires k <= 0 < k2")

    @property
    def kind(self) -> str:
        return "single" if self.k2 is None else "pair"

    def support(self, window_lo: int, window_hi: int) -> FrozenSet[int]:
        """Trace of the submodule's degree support on a finite window."""
        degs: Set[int] = set()
        for k in (self.k,) if self.k2 is None else (self.k, self.k2):
            if k <= 0:
                degs.update(range(window_lo, min(k - 1, window_hi) + 1))
            else:
                degs.update(range(max(k, window_lo), window_hi + 1))
        return frozenset(degs)


@dataclass(frozen=True)
class CompositionFactor:
    label: SimpleLabel
    delta: DegreeInterval
    in_o_plus: bool


CompositionSeries = Tuple[CompositionFactor, ...]


class ExtStatus(enum.Enum):
    """Verdict for Ext^1 between two shifted simples (pattern only)."""

    ZERO = "Zero"
    NONZERO_ADJACENT = "NonzeroAdjacent"
    NONZERO_SELF = "NonzeroSelf"
    UNKNOWN_SELF_IN_ZSIGMA = "UnknownSelfInZsigma"


@dataclass(frozen=True)
class ProjectiveData:
    """P_nu = A(N)_nu with degree-zero part C[h]/(h - nu)^f."""

    root: Scalar
    cutoff: int  # N >= 1
    power: int  # f >= mult(v, nu)


def chi(v: FactoredPoly, a: Union[Scalar, int]) -> Tuple[int, ...]:
    """Sorted {k in Z : v(a + k) = 0} = integer offsets of roots from a."""
    if isinstance(a, int):
        a = Scalar.rational(a)
    ks = []
    for root in v.roots():
        k = integer_difference(root, a)
        if k is not None:
            ks.append(k)
    return tuple(sorted(ks))


def submodules(v: FactoredPoly, a: Union[Scalar, int]) -> Tuple[SubmoduleDescriptor, ...]:
    """All proper nontrivial graded submodules of A^a.

    One single tail per element of chi, one pair per (k <= 0 < k2) in chi;
    A^a is simple iff chi is empty.
    """
    ks = chi(v, a)
    out = [SubmoduleDescriptor(k) for k in ks]
    for k in ks:
        if k <= 0:
            out.extend(SubmoduleDescriptor(k, k2) for k2 in ks if k2 > 0)
    return tuple(out)


def composition_series(v: FactoredPoly, a: Union[Scalar, int]) -> CompositionSeries:
    """Composition factors of the semisimplification of A^a, left to right.

    With chi sorted, the factor containing degree 0 is S^a itself on
    [max chi<=0, min chi>0 - 1] (infinite where the bound is missing); each
    nonpositive k in chi contributes the factor at point a + k - 1 with
    shift 1 - k on the interval ending at k - 1, and each positive k the
    factor at point a + k with shift -k on the interval starting at k.  The
    intervals partition Z; a factor lies in O+ iff its interval is bounded
    below.
    """
    if isinstance(a, int):
        a = Scalar.rational(a)
    ks = chi(v, a)
    neg = [k for k in ks if k <= 0]
    pos = [k for k in ks if k > 0]
    factors: List[CompositionFactor] = []
    for idx, k in enumerate(neg):
        lo = neg[idx - 1] if idx > 0 else None
        _append_factor(factors, SimpleLabel(a + (k - 1), 1 - k), lo, k - 1)
    _append_factor(
        factors,
        SimpleLabel(a, 0),
        neg[-1] if neg else None,
        pos[0] - 1 if pos else None,
    )
    for idx, k in enumerate(pos):
        hi = pos[idx + 1] - 1 if idx + 1 < len(pos) else None
        _append_factor(factors, SimpleLabel(a + k, -k), k, hi)
    return tuple(factors)


def _append_factor(
    factors: List[CompositionFactor], label: SimpleLabel, lo: Optional[int], hi: Optional[int]
) -> None:
    factors.append(
        CompositionFactor(
            label=label, delta=DegreeInterval(lo, hi), in_o_plus=lo is not None
        )
    )


def artinian_block_key(v: FactoredPoly, label: SimpleLabel) -> Scalar:
    """Block invariant point + shift: two shifted simples generate the same
    block of Artinian graded modules iff their keys agree.  (Independent of
    v; the argument is kept so all block queries share one signature.)"""
    del v
    return label.block_key()


def ext1(v: FactoredPoly, s1: SimpleLabel, s2: SimpleLabel) -> ExtStatus:
    """Ext^1 vanishing pattern between shifted simples s1 and s2.

    Different block keys force Zero.  At a point with empty chi the simple
    equals the whole cyclic module and only self-extensions survive, of
    dimension 1 over C[h] (NonzeroSelf).  Otherwise both simples are factors
    of one composition series: adjacent factors carry a guaranteed nonzero
    class, isomorphic factors are undecided (UnknownSelfInZsigma), and
    everything else vanishes.
    """
    if s1.block_key() != s2.block_key():
        return ExtStatus.ZERO
    if not chi(v, s1.point):
        return ExtStatus.NONZERO_SELF
    series = composition_series(v, s1.block_key())
    i1 = _cell_index(series, -s1.shift)
    i2 = _cell_index(series, -s2.shift)
    if i1 == i2:
        return ExtStatus.UNKNOWN_SELF_IN_ZSIGMA
    if abs(i1 - i2) == 1:
        return ExtStatus.NONZERO_ADJACENT
    return ExtStatus.ZERO


def _cell_index(series: CompositionSeries, d: int) -> int:
    # The abstract simple S^(h-p)[m] with key a occupies the unique factor
    # interval of the block-a series containing -m.
    for i, f in enumerate(series):
        if f.delta.contains(d):
            return i
    raise AssertionError("series intervals must partition Z")


def verma_series(v: FactoredPoly, nu: Union[Scalar, int]) -> CompositionSeries:
    """Composition series of the Verma module at a root nu of v.

    With the positive chi set {k1 < ... < km}, the factors occupy
    [0, k1-1], [k1, k2-1], ..., [km, inf); the factor starting at k > 0 has
    point nu + k and shift -k.  All factors lie in O+.
    """
    if isinstance(nu, int):
        nu = Scalar.rational(nu)
    if not v.is_root(nu):
        raise DomainError(f"{nu} is not a root of {v}")
    ks = [k for k in chi(v, nu) if k > 0]
    starts = [0] + ks
    factors: List[CompositionFactor] = []
    for idx, k in enumerate(starts):
        hi = starts[idx + 1] - 1 if idx + 1 < len(starts) else None
        factors.append(
            CompositionFactor(
                label=SimpleLabel(nu + k, -k),
                delta=DegreeInterval(k, hi),
                in_o_plus=True,
            )
        )
    return tuple(factors)


def oplus_blocks(v: FactoredPoly) -> Tuple[Tuple[Scalar, Tuple[int, ...]], ...]:
    """Blocks of the locally-nilpotent category: one per Z-class of roots.

    Each entry is (anchor, chi_w) where the anchor is the smallest root of
    the class (the fixed representative) and chi_w = {n : anchor + n is a
    root}; 0 always belongs to chi_w.
    """
    if v.degree == 0:
        raise DomainError("blocks require a polynomial of degree >= 1")
    sig = z_classes(v)
    return tuple((c.anchor, tuple(off for off, _ in c.entries)) for c in sig.classes)


def projective_data(v: FactoredPoly, nu: Union[Scalar, int]) -> ProjectiveData:
    """Cutoff and power of the projective generator at the root nu.

    N is least with nu - n not a root for all n >= N; f is the total
    multiplicity of the roots nu, nu-1, ..., nu-N+1, i.e. of all roots of the
    class lying at or below nu.
    """
    if isinstance(nu, int):
        nu = Scalar.rational(nu)
    if not v.is_root(nu):
        raise DomainError(f"{nu} is not a root of {v}")
    below = [-k for k in chi(v, nu) if k <= 0]  # n >= 0 with nu - n a root
    cutoff = 1 + max(below)
    power = sum(v.multiplicity(nu - j) for j in range(cutoff))
    return ProjectiveData(root=nu, cutoff=cutoff, power=power)


def hom_degree(
    v: FactoredPoly, nu1: Union[Scalar, int], nu2: Union[Scalar, int]
) -> Optional[int]:
    """The only degree n where Hom(P_nu1, P_nu2[n]) can be nonzero.

    That degree is the integer n with nu1 = nu2 + n; roots in distinct
    Z-classes admit no nonzero graded maps at all (None).
    """
    del v
    if isinstance(nu1, int):
        nu1 = Scalar.rational(nu1)
    if isinstance(nu2, int):
        nu2 = Scalar.rational(nu2)
    return integer_difference(nu1, nu2)


def annihilator_An(v: FactoredPoly, n: int) -> FactoredPoly:
    """Annihilator of A/A t_-^n: the product of v(h - j) for 0 <= j < n."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    out = FactoredPoly()
    for j in range(n):
        out = out * v.shift(-j)
    return out


def m_nu_length(v: FactoredPoly, nu: Union[Scalar, int]) -> int:
    """Length of the canonical nu-small module: the multiplicity of nu in v."""
    if isinstance(nu, int):
        nu = Scalar.rational(nu)
    if not v.is_root(nu):
        raise DomainError(f"{nu} is not a root of {v}")
    return v.multiplicity(nu)


class WeightModel:
    """Explicit matrix model of A^a on a degree window — the brute-force oracle.

    One basis vector e_d per degree d in [lo, hi].  The raising operator maps
    e_d to c_d^+ e_{d+1} and the lowering operator maps e_d to c_d^- e_{d-1},
    where

        c_d^+ = 1            for d >= 0,    v(a + d + 1)  for d < 0,
        c_d^- = v(a + d)     for d >= 1,    1             for d <= 0.

    Hence both composites act on degree d by v(a + d) and v(a + d + 1).
    Coefficients are stored as multisets of exact linear factors (values of
    v at symbolic points leave the Scalar domain); a coefficient vanishes
    iff one of its factors is zero.
    """

    def __init__(self, v: FactoredPoly, a: Scalar, lo: int, hi: int):
        if not lo < 0 < hi:
            raise DomainError(f"window must satisfy lo < 0 < hi, got [{lo}, {hi}]")
        self.v = v
        self.base_point = a
        self.lo = lo
        self.hi = hi
        one: Tuple[Scalar, ...] = ()
        self.up: Dict[int, Tuple[Scalar, ...]] = {}
        self.down: Dict[int, Tuple[Scalar, ...]] = {}
        for d in range(lo, hi + 1):
            self.up[d] = one if d >= 0 else v.value_factors(a + (d + 1))
            self.down[d] = v.value_factors(a + d) if d >= 1 else one

    @staticmethod
    def is_zero(factors: Tuple[Scalar, ...]) -> bool:
        return any(not f for f in factors)

    def up_is_zero(self, d: int) -> bool:
        return self.is_zero(self.up[d])

    def down_is_zero(self, d: int) -> bool:
        return self.is_zero(self.down[d])

    def _closure(self, seed: int) -> FrozenSet[int]:
        seen = {seed}
        stack = [seed]
        while stack:
            d = stack.pop()
            if d + 1 <= self.hi and d + 1 not in seen and not self.up_is_zero(d):
                seen.add(d + 1)
                stack.append(d + 1)
            if d - 1 >= self.lo and d - 1 not in seen and not self.down_is_zero(d):
                seen.add(d - 1)
                stack.append(d - 1)
        return frozenset(seen)

    def submodule_supports(self) -> Set[FrozenSet[int]]:
        """Degree supports of all proper nontrivial graded submodules, found
        by brute force: 0/1 support sets closed under both operators.

        Closed sets are unions of single-degree closures; a closed set
        containing degree 0 is the whole window (the module is cyclic at 0),
        so proper supports are exactly the closed sets avoiding 0.
        """
        closures = {self._closure(d) for d in range(self.lo, self.hi + 1)}
        closed = {c for c in closures if 0 not in c}
        while True:
            extra = {
                a | b for a, b in itertools.combinations(closed, 2) if 0 not in (a | b)
            } - closed
            if not extra:
                return closed
            closed |= extra

    def factor_cells(self) -> List[Tuple[int, int]]:
        """Supports of the composition factors restricted to the window.

        Degrees d and d+1 share a factor iff one can travel both ways, i.e.
        both c_d^+ and c_{d+1}^- are nonzero; cells are the maximal runs.
        """
        cells = []
        start = self.lo
        for d in range(self.lo, self.hi):
            if self.up_is_zero(d) or self.down_is_zero(d + 1):
                cells.append((start, d))
                start = d + 1
        cells.append((start, self.hi))
        return cells


def weight_model(
    v: FactoredPoly, a: Union[Scalar, int], lo: int, hi: int
) -> WeightModel:
    """Build the explicit weight model of A^a on the window [lo, hi]."""
    if isinstance(a, int):
        a = Scalar.rational(a)
    return WeightModel(v, a, lo, hi)
