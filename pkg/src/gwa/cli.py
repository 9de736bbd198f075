"""One-shot command-line front end with human-readable and JSON output.

Every subcommand prints a report; ``--json`` switches to a schema-stable
JSON document in which all scalars and polynomials appear in their canonical
textual forms and so parse back losslessly.  Exit codes: 0 = computed
(negative mathematical verdicts are answers, not errors), 1 = usage error,
2 = parse/input error, 3 = precondition or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import cyclegwa, modstruct, morita, roottype
from .errors import DomainError, ParseError
from .poly import FactoredPoly, parse, parse_scalar
from .scalar import Scalar

__all__ = ["main", "run"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, not argparse's 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="gwa", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--seed", type=int, default=None, help="seed for randomized self-test modes (reserved)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("type", parents=[common], help="root-type signature of v")
    p.add_argument("v")

    p = sub.add_parser(
        "equiv", parents=[common], help="decide strongly graded Morita equivalence"
    )
    p.add_argument("v1")
    p.add_argument("v2")
    p.add_argument("--witness", action="store_true", help="emit a verified move chain")

    p = sub.add_parser("iso", parents=[common], help="decide graded isomorphism")
    p.add_argument("v1")
    p.add_argument("v2")

    p = sub.add_parser(
        "module", parents=[common], help="submodule lattice and composition series of A^point"
    )
    p.add_argument("v")
    p.add_argument("point")

    p = sub.add_parser("verma", parents=[common], help="Verma composition series at a root")
    p.add_argument("v")
    p.add_argument("nu")

    p = sub.add_parser("blocks", parents=[common], help="block data of v")
    p.add_argument("v")
    p.add_argument(
        "--label",
        nargs=2,
        action="append",
        metavar=("POINT", "SHIFT"),
        help="shifted simple to locate (default: each root with shift 0)",
    )

    p = sub.add_parser(
        "proj", parents=[common], help="projective generator data at a root"
    )
    p.add_argument("v")
    p.add_argument("nu")

    p = sub.add_parser("ann", parents=[common], help="annihilator of A/A t_-^n")
    p.add_argument("v")
    p.add_argument("n", type=int)

    p = sub.add_parser("quiver", parents=[common], help="cycle-quiver computations")
    p.add_argument("file", help="JSON file with {n, translations, r}")
    p.add_argument("--check", action="store_true", help="verify the arc/vertex identities")
    p.add_argument("--vertex", type=int, default=None, metavar="I")
    p.add_argument("--pair", nargs=2, type=int, default=None, metavar=("I", "J"))

    p = sub.add_parser("verify", parents=[common], help="re-verify a Morita witness")
    p.add_argument("v1")
    p.add_argument("v2")
    p.add_argument("witness", help="JSON file holding the witness")

    return parser


# ---------------------------------------------------------------------------
# report builders


def _series_json(series) -> List[dict]:
    return [
        {
            "point": str(f.label.point),
            "shift": f.label.shift,
            "lo": f.delta.lo,
            "hi": f.delta.hi,
            "in_o_plus": f.in_o_plus,
        }
        for f in series
    ]


def _series_lines(series) -> List[str]:
    return [
        f"  S({f.label.point})[{f.label.shift}]  delta={f.delta}  O+={'yes' if f.in_o_plus else 'no'}"
        for f in series
    ]


def _cmd_type(args) -> tuple[dict, List[str]]:
    v = parse(args.v)
    sig = roottype.z_classes(v)
    result = {
        "classes": [
            {"anchor": str(c.anchor), "entries": [list(e) for e in c.entries]}
            for c in sig.classes
        ]
    }
    lines = [f"v = {v}"]
    for idx, c in enumerate(sig.classes):
        entries = ", ".join(f"offset {off}: mult {m}" for off, m in c.entries)
        lines.append(f"class {idx}: anchor = {c.anchor}; {entries}")
    return {"command": "type", "inputs": {"v": str(v)}, "result": result}, lines


def _cmd_equiv(args) -> tuple[dict, List[str]]:
    v1, v2 = parse(args.v1), parse(args.v2)
    wit: Optional[morita.MoritaWitness] = None
    if args.witness:
        wit = morita.witness_chain(v1, v2)
        b = wit.pre_shift if wit is not None else None
    else:
        b = roottype.morita_equivalent(v1, v2)
    result = {
        "equivalent": b is not None,
        "b": None if b is None else str(b),
        "witness": None if wit is None else morita.witness_to_dict(wit),
    }
    lines = [f"v1 = {v1}", f"v2 = {v2}"]
    if b is None:
        lines.append("strongly graded Morita equivalent: no")
    else:
        lines.append(f"strongly graded Morita equivalent: yes (b = {b})")
        if wit is not None:
            lines.append(
                f"witness: pre_shift = {wit.pre_shift}, n_shift = {wit.n_shift}, "
                f"{len(wit.steps)} moves"
            )
            for i, s in enumerate(wit.steps):
                lines.append(
                    f"  {i}: {s.direction} block at {s.block_root}: {s.before} -> {s.after}"
                )
    return {
        "command": "equiv",
        "inputs": {"v1": str(v1), "v2": str(v2)},
        "result": result,
    }, lines


def _cmd_iso(args) -> tuple[dict, List[str]]:
    v1, v2 = parse(args.v1), parse(args.v2)
    found = roottype.isomorphic(v1, v2)
    result = {
        "isomorphic": found is not None,
        "nu": None if found is None else str(found[0]),
        "sign": None if found is None else found[1],
    }
    lines = [f"v1 = {v1}", f"v2 = {v2}"]
    if found is None:
        lines.append("isomorphic: no")
    else:
        lines.append(f"isomorphic: yes (nu = {found[0]}, sign = {found[1]})")
    return {
        "command": "iso",
        "inputs": {"v1": str(v1), "v2": str(v2)},
        "result": result,
    }, lines


def _cmd_module(args) -> tuple[dict, List[str]]:
    v = parse(args.v)
    a = parse_scalar(args.point)
    ks = modstruct.chi(v, a)
    subs = modstruct.submodules(v, a)
    series = modstruct.composition_series(v, a)
    result = {
        "chi": list(ks),
        "submodules": [
            {"kind": d.kind, "k": d.k} if d.k2 is None else {"kind": d.kind, "k": d.k, "k2": d.k2}
            for d in subs
        ],
        "series": _series_json(series),
    }
    lines = [f"v = {v}", f"point = {a}", f"chi = {list(ks)}"]
    if not subs:
        lines.append("A^point is simple (no proper nontrivial submodules)")
    else:
        for d in subs:
            lines.append(
                f"submodule: single k={d.k}" if d.k2 is None else f"submodule: pair k={d.k}, k'={d.k2}"
            )
    lines.append("composition series:")
    lines.extend(_series_lines(series))
    return {
        "command": "module",
        "inputs": {"v": str(v), "point": str(a)},
        "result": result,
    }, lines


def _cmd_verma(args) -> tuple[dict, List[str]]:
    v = parse(args.v)
    nu = parse_scalar(args.nu)
    series = modstruct.verma_series(v, nu)
    lines = [f"v = {v}", f"nu = {nu}", "Verma composition series:"]
    lines.extend(_series_lines(series))
    return {
        "command": "verma",
        "inputs": {"v": str(v), "nu": str(nu)},
        "result": {"series": _series_json(series)},
    }, lines


def _cmd_blocks(args) -> tuple[dict, List[str]]:
    v = parse(args.v)
    blocks = modstruct.oplus_blocks(v)
    if args.label:
        labels = [
            modstruct.SimpleLabel(parse_scalar(p), int(s)) for p, s in args.label
        ]
    else:
        labels = [modstruct.SimpleLabel(r, 0) for r in v.roots()]
    keys = [
        {"point": str(l.point), "shift": l.shift, "key": str(modstruct.artinian_block_key(v, l))}
        for l in labels
    ]
    result = {
        "oplus_blocks": [
            {"anchor": str(anchor), "chi_w": list(offs)} for anchor, offs in blocks
        ],
        "artinian_keys": keys,
    }
    lines = [f"v = {v}"]
    for anchor, offs in blocks:
        lines.append(f"O+ block: anchor = {anchor}, chi_w = {list(offs)}")
    for entry in keys:
        lines.append(
            f"artinian block key of S({entry['point']})[{entry['shift']}] = {entry['key']}"
        )
    return {"command": "blocks", "inputs": {"v": str(v)}, "result": result}, lines


def _cmd_proj(args) -> tuple[dict, List[str]]:
    v = parse(args.v)
    nu = parse_scalar(args.nu)
    data = modstruct.projective_data(v, nu)
    homs = []
    for r1 in v.roots():
        for r2 in v.roots():
            n = modstruct.hom_degree(v, r1, r2)
            homs.append({"nu1": str(r1), "nu2": str(r2), "n": n})
    result = {
        "projective": {"root": str(data.root), "cutoff": data.cutoff, "power": data.power},
        "hom_degrees": homs,
    }
    lines = [
        f"v = {v}",
        f"P_nu at nu = {data.root}: cutoff N = {data.cutoff}, power f = {data.power}",
        "hom degrees (nu1, nu2) -> n with Hom(P_nu1, P_nu2[n]) possibly nonzero:",
    ]
    for e in homs:
        lines.append(f"  ({e['nu1']}, {e['nu2']}) -> {'none' if e['n'] is None else e['n']}")
    return {
        "command": "proj",
        "inputs": {"v": str(v), "nu": str(nu)},
        "result": result,
    }, lines


def _cmd_ann(args) -> tuple[dict, List[str]]:
    v = parse(args.v)
    out = modstruct.annihilator_An(v, args.n)
    return {
        "command": "ann",
        "inputs": {"v": str(v), "n": args.n},
        "result": {"annihilator": str(out)},
    }, [f"v = {v}", f"ann(A({args.n})) = ({out})"]


def _cmd_quiver(args) -> tuple[dict, List[str]]:
    with open(args.file, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    c = cyclegwa.cycle_from_dict(data)
    result: dict = {"n": c.n, "theta_shift": str(c.theta_shift())}
    lines = [f"cycle length n = {c.n}", f"theta shift = {c.theta_shift()}"]
    if args.check:
        ok = cyclegwa.verify_identities(c)
        result["identities_hold"] = ok
        lines.append(f"arc/vertex identities hold: {'yes' if ok else 'no'}")
    if args.vertex is not None:
        vd = cyclegwa.vertex_data(c, args.vertex)
        result["vertex"] = {
            "index": args.vertex,
            "theta_shift": str(vd.theta_shift),
            "v": str(vd.v),
        }
        lines.append(f"vertex {args.vertex}: v = {vd.v}")
    if args.pair is not None:
        i, j = args.pair
        alpha_ij, beta_ij = cyclegwa.arc_elements(c, i, j)
        alpha_ji, beta_ji = cyclegwa.arc_elements(c, j, i)
        equivalent = cyclegwa.vertex_morita_check(c, i, j)
        result["pair"] = {
            "i": i,
            "j": j,
            "alpha_ij": str(alpha_ij),
            "beta_ij": str(beta_ij),
            "alpha_ji": str(alpha_ji),
            "beta_ji": str(beta_ji),
            "morita_equivalent": equivalent,
            "note": "per n=2 pattern" if c.n > 2 else None,
        }
        lines.append(f"alpha_{i}{j} = {alpha_ij}, beta_{i}{j} = {beta_ij}")
        lines.append(f"alpha_{j}{i} = {alpha_ji}, beta_{j}{i} = {beta_ji}")
        verdict = "yes" if equivalent else "no"
        suffix = " (per n=2 pattern)" if c.n > 2 else ""
        lines.append(f"vertices {i}, {j} strongly graded Morita equivalent: {verdict}{suffix}")
    return {"command": "quiver", "inputs": {"file": args.file}, "result": result}, lines


def _cmd_verify(args) -> tuple[dict, List[str]]:
    v1, v2 = parse(args.v1), parse(args.v2)
    with open(args.witness, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "steps" not in data:  # accept a full `equiv --json` report as well
        data = (data.get("result") or {}).get("witness")
        if data is None:
            raise ParseError("no witness found in file", 0)
    wit = morita.witness_from_dict(data)
    reason = morita.check_witness(v1, v2, wit)
    result = {"valid": reason is None, "reason": reason}
    lines = [f"v1 = {v1}", f"v2 = {v2}"]
    lines.append("witness valid: yes" if reason is None else f"witness valid: no ({reason})")
    return {
        "command": "verify",
        "inputs": {"v1": str(v1), "v2": str(v2), "witness": args.witness},
        "result": result,
    }, lines


_HANDLERS = {
    "type": _cmd_type,
    "equiv": _cmd_equiv,
    "iso": _cmd_iso,
    "module": _cmd_module,
    "verma": _cmd_verma,
    "blocks": _cmd_blocks,
    "proj": _cmd_proj,
    "ann": _cmd_ann,
    "quiver": _cmd_quiver,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str], out=None, err=None) -> int:
    """Execute one command; returns the exit code without calling sys.exit."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as e:
        print(f"usage error: {e}", file=err)
        return 1
    try:
        report, lines = _HANDLERS[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return 2
    except json.JSONDecodeError as e:
        print(f"parse error: invalid JSON: {e}", file=err)
        return 2
    except FileNotFoundError as e:
        print(f"parse error: {e}", file=err)
        return 2
    except DomainError as e:
        print(f"domain error: {e}", file=err)
        return 3
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
