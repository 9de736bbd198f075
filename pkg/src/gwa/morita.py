"""Elementary Morita moves and constructive witness chains.

An elementary move takes T(u*w) to T(u*w') where w is one root's full block
and w' is the same block translated by +-1, legal whenever the cofactor u is
coprime to the block at both the start and landing positions.  A chain of
such moves, together with two global translations (one applied to each input
polynomial), certifies a strongly graded Morita equivalence: the witness can
be re-verified step by step with no trust in the planner.

The planner translates the source far enough down that every class's roots
sit strictly below their targets, then walks blocks upward largest-first;
the ascending path above the largest remaining source meets only unoccupied
positions, so the coprimality preconditions never fail.  They are checked on
every step anyway, and `verify_witness` re-checks the finished chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple, Union

from .errors import DomainError, MoveError
from .poly import FactoredPoly, parse, parse_scalar
from .roottype import morita_equivalent, z_classes
from .scalar import Scalar, integer_difference

__all__ = [
    "MoveStep",
    "MoritaWitness",
    "apply_move",
    "check_witness",
    "verify_witness",
    "witness_chain",
    "witness_from_dict",
    "witness_to_dict",
]

Direction = Literal["up", "down"]


@dataclass(frozen=True)
class MoveStep:
    """One elementary move.  `w` is the moved block in the factorization
    before = u * (w or its translate) — for a down move w sits at block_root,
    for an up move at block_root + 1 (its landing position)."""

    before: FactoredPoly
    block_root: Scalar
    direction: str
    u: FactoredPoly
    w: FactoredPoly
    after: FactoredPoly


@dataclass(frozen=True)
class MoritaWitness:
    """Certificate connecting shift(v2, n_shift) to shift(v1, pre_shift) by
    elementary moves; consecutive steps compose."""

    pre_shift: Scalar
    n_shift: int
    steps: Tuple[MoveStep, ...]


def _block(root: Scalar, mult: int) -> FactoredPoly:
    return FactoredPoly(((root, mult),))


def apply_move(
    v: FactoredPoly, block_root: Union[Scalar, int], direction: str
) -> MoveStep:
    """Move the full block at block_root one step up or down.

    The cofactor u (v with the block removed) must not contain the landing
    root; u never contains block_root itself since the block carries the full
    multiplicity.  Raises MoveError naming the colliding root otherwise.
    """
    if isinstance(block_root, int):
        block_root = Scalar.rational(block_root)
    if direction not in ("up", "down"):
        raise DomainError(f"direction must be 'up' or 'down', got {direction!r}")
    mult = v.multiplicity(block_root)
    if mult == 0:
        raise MoveError(f"{block_root} is not a root of {v}")
    u = FactoredPoly(tuple((r, m) for r, m in v.factors if r != block_root))
    landing = block_root + (1 if direction == "up" else -1)
    if u.is_root(landing):
        raise MoveError(
            f"cannot move block at {block_root} {direction}: cofactor {u} has root {landing}"
        )
    # The lemma factorization is before = u*w, after = u*w(h+1) with w the
    # block at the higher of the two positions.
    w = _block(landing if direction == "up" else block_root, mult)
    after = u * _block(landing, mult)
    return MoveStep(
        before=v, block_root=block_root, direction=direction, u=u, w=w, after=after
    )


def _check_step(step: MoveStep) -> Optional[str]:
    """Re-derive one step from scratch; None if sound, else a reason."""
    w_roots = step.w.roots()
    if len(w_roots) != 1:
        return f"moved block {step.w} is not a single root"
    w_root = w_roots[0]
    if step.direction == "down":
        expected_pos, before_block, after_block = step.block_root, step.w, step.w.shift(1)
    elif step.direction == "up":
        expected_pos, before_block, after_block = step.block_root + 1, step.w.shift(1), step.w
    else:
        return f"unknown direction {step.direction!r}"
    if w_root != expected_pos:
        return f"block {step.w} is not at the stated position for a {step.direction} move"
    if step.before != step.u * before_block:
        return f"{step.before} does not factor as u * block"
    if step.after != step.u * after_block:
        return f"{step.after} is not the stated move of {step.before}"
    if not step.u.coprime(step.w):
        return f"cofactor {step.u} shares root {w_root} with the block"
    if not step.u.coprime(step.w.shift(1)):
        return f"cofactor {step.u} shares root {w_root - 1} with the translated block"
    return None


def check_witness(
    v1: FactoredPoly, v2: FactoredPoly, wit: MoritaWitness
) -> Optional[str]:
    """Verify a witness independently of the planner.

    Returns None when the chain's endpoints equal shift(v2, n_shift) and
    shift(v1, pre_shift), consecutive steps compose, and every step's
    factorization and coprimality preconditions hold; otherwise a reason.
    """
    start = v2.shift(wit.n_shift)
    end = v1.shift(wit.pre_shift)
    if not wit.steps:
        if start != end:
            return f"empty chain but {start} != {end}"
        return None
    if wit.steps[0].before != start:
        return f"chain starts at {wit.steps[0].before}, expected {start}"
    if wit.steps[-1].after != end:
        return f"chain ends at {wit.steps[-1].after}, expected {end}"
    for i, step in enumerate(wit.steps):
        if i > 0 and wit.steps[i - 1].after != step.before:
            return f"step {i} does not compose with step {i - 1}"
        reason = _check_step(step)
        if reason is not None:
            return f"step {i}: {reason}"
    return None


def verify_witness(v1: FactoredPoly, v2: FactoredPoly, wit: MoritaWitness) -> bool:
    return check_witness(v1, v2, wit) is None


def _plan_moves(
    source: FactoredPoly, target: FactoredPoly
) -> Optional[List[MoveStep]]:
    """Walk each class's blocks upward, largest first, onto its targets.

    Assumes every source root already lies strictly below every target root
    of its class; returns None if any move precondition fails (the caller
    retries with a larger translation).
    """
    tsig = z_classes(target)
    steps: List[MoveStep] = []
    current = source
    for scls in z_classes(source).classes:
        tcls = next(
            c
            for c in tsig.classes
            if integer_difference(c.anchor, scls.anchor) is not None
        )
        src_desc = sorted(
            scls.roots(), key=lambda r: integer_difference(r, scls.anchor), reverse=True
        )
        tgt_desc = sorted(
            tcls.roots(), key=lambda r: integer_difference(r, tcls.anchor), reverse=True
        )
        for src, tgt in zip(src_desc, tgt_desc):
            pos = src
            for _ in range(integer_difference(tgt, src)):
                try:
                    step = apply_move(current, pos, "up")
                except MoveError:
                    return None
                steps.append(step)
                current = step.after
                pos = pos + 1
    return steps if current == target else None


def witness_chain(v1: FactoredPoly, v2: FactoredPoly) -> Optional[MoritaWitness]:
    """A verified witness of strong graded Morita equivalence, or None.

    None exactly when no translate of v1 has the same type as v2.  Otherwise
    the witness connects shift(v2, N) to shift(v1, b): N is chosen so every
    shifted source root lies strictly below its class's targets, then blocks
    move upward largest-first.
    """
    b = morita_equivalent(v1, v2)
    if b is None:
        return None
    target = v1.shift(b)
    if target == v2:
        return MoritaWitness(pre_shift=b, n_shift=0, steps=())
    tsig = z_classes(target)
    base = 0
    for scls in z_classes(v2).classes:
        tcls = next(
            c
            for c in tsig.classes
            if integer_difference(c.anchor, scls.anchor) is not None
        )
        max_src = scls.roots()[-1]
        min_tgt = tcls.roots()[0]
        base = max(base, 1 + integer_difference(max_src, min_tgt))
    for n_shift in range(base, base + 4):
        steps = _plan_moves(v2.shift(n_shift), target)
        if steps is not None:
            wit = MoritaWitness(pre_shift=b, n_shift=n_shift, steps=tuple(steps))
            reason = check_witness(v1, v2, wit)
            if reason is None:
                return wit
    raise RuntimeError(f"witness planning failed for {v1} ~ {v2}")  # planner bug


# ---------------------------------------------------------------------------
# serialization — the JSON form embeds every intermediate polynomial so a
# third party can re-verify without any planner logic.


def witness_to_dict(wit: MoritaWitness) -> dict:
    return {
        "pre_shift": str(wit.pre_shift),
        "n_shift": wit.n_shift,
        "steps": [
            {
                "before": str(s.before),
                "block_root": str(s.block_root),
                "direction": s.direction,
                "u": str(s.u),
                "w": str(s.w),
                "after": str(s.after),
            }
            for s in wit.steps
        ],
    }


def witness_from_dict(data: dict) -> MoritaWitness:
    steps = tuple(
        MoveStep(
            before=parse(s["before"]),
            block_root=parse_scalar(s["block_root"]),
            direction=s["direction"],
            u=parse(s["u"]),
            w=parse(s["w"]),
            after=parse(s["after"]),
        )
        for s in data["steps"]
    )
    return MoritaWitness(
        pre_shift=parse_scalar(data["pre_shift"]),
        n_shift=int(data["n_shift"]),
        steps=steps,
    )
