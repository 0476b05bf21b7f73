"""Command-line entry point: ``tfg <command> ...``.

Data commands print JSON on stdout. ``tfg verify`` prints a readable
report, or JSON with ``--json``. Exit codes: 0 success, 1 verification
failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import dihedral as dh
from .errors import TFGError
from .full_group import (
    FullGroupElement,
    act,
    compose,
    in_derived_at_level,
    in_derived_up_to,
    index,
    inverse,
    normal_form,
)
from .induction import CosetSystem, catalog_subgroup, verify_corner
from .koopman import evaluate, koopman_matrix, tau
from .odometer import ClopenSet, OdometerType, measure
from .scalars import GaussRational
from .verify import CITED_NOT_VERIFIED, DEFAULT_SEED, DEFAULT_SPACE, SUITES, Options, run_suite

DEFAULT_SPACE_JSON = json.dumps({"levels": list(DEFAULT_SPACE)})


class InputError(Exception):
    pass


def _load(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON for {what} at line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}") from None


def _space(args) -> OdometerType:
    return OdometerType.from_json(_load(args.space, "--space"))


def _element(space: OdometerType, text: str, what: str) -> FullGroupElement:
    return FullGroupElement.from_json(space, _load(text, what))


def _dihedral(space: OdometerType, text: str, what: str) -> dh.DihedralElement:
    return dh.DihedralElement.from_json(space, _load(text, what))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_z(text: str):
    """'1', '-1', 'i', '-i', 'a/b+c/di' exact forms, or a complex literal like '0.6+0.8j'."""
    t = text.strip().replace(" ", "")
    exact = {"1": GaussRational(1), "-1": GaussRational(-1), "i": GaussRational(0, 1), "-i": GaussRational(0, -1)}
    if t in exact:
        return exact[t]
    try:
        return complex(t)
    except ValueError:
        raise InputError(f"cannot parse z = {text!r}") from None


# command handlers


def cmd_odometer_info(args) -> int:
    space = _space(args)
    info = {"levels": list(space.levels), "depth": space.depth}
    if args.set:
        A = ClopenSet.from_json(space, _load(args.set, "--set"))
        canon = A.canonical()
        info["set"] = {"canonical": canon.to_json(), "measure": str(measure(A))}
    _emit(info)
    return 0


def cmd_element(args) -> int:
    space = _space(args)
    op = args.op
    if op == "compose":
        g, h = _element(space, args.a, "--a"), _element(space, args.b, "--b")
        _emit(compose(g, h).to_json())
    elif op == "invert":
        _emit(inverse(_element(space, args.a, "--a")).to_json())
    elif op == "normal-form":
        g = _element(space, args.a, "--a")
        k = args.level or g.canonical_level
        m, sigma = normal_form(g, k)
        _emit({"level": k, "m": list(m), "sigma": list(sigma)})
    elif op == "index":
        _emit({"index": index(_element(space, args.a, "--a"))})
    elif op == "in-derived":
        g = _element(space, args.a, "--a")
        if args.level:
            _emit({"level": args.level, "in_derived": in_derived_at_level(g, args.level)})
        else:
            _emit({"up_to_level": space.depth, "in_derived": in_derived_up_to(g)})
    elif op == "act":
        g = _element(space, args.a, "--a")
        A = ClopenSet.from_json(space, _load(args.set, "--set"))
        _emit(act(g, A).to_json())
    return 0


def cmd_koopman(args) -> int:
    space = _space(args)
    g = _element(space, args.element, "--element")
    k = args.level or g.canonical_level
    M = koopman_matrix(g, k)
    op = args.op or "matrix"
    if op == "matrix":
        _emit(M.to_json())
    elif op == "tau":
        _emit({"tau": tau(M).to_json()})
    elif op == "eval":
        z = _parse_z(args.z)
        value = evaluate(M, z)
        if isinstance(z, GaussRational):
            _emit({"z": args.z, "matrix": [[x.to_json() for x in row] for row in value]})
        else:
            _emit({"z": args.z, "matrix": [[[v.real, v.imag] for v in row] for row in value.tolist()]})
    return 0


def cmd_dihedral(args) -> int:
    space = _space(args)
    if args.op == "compose":
        g, h = _dihedral(space, args.a, "--a"), _dihedral(space, args.b, "--b")
        _emit(dh.compose(g, h).to_json())
    elif args.op == "decompose":
        g = _dihedral(space, args.a, "--a")
        k = args.level or g.canonical_level
        word = dh.decompose(g, k)
        ok = dh.recompose(space, word) == g
        _emit({"level": k, "word": [w.to_json() for w in word], "recomposes": ok})
        return 0 if ok else 1
    elif args.op == "verify-jtj":
        from .full_group import power_of_T

        J = dh.gen_J(space)
        ok = all(
            dh.compose(J, dh.compose(dh.embed(power_of_T(space, 1)), J)).cocycle_at(k)
            == dh.embed(power_of_T(space, -1)).cocycle_at(k)
            for k in range(1, space.depth + 1)
        )
        _emit({"jtj_equals_t_inverse": ok, "levels_checked": space.depth})
        return 0 if ok else 1
    return 0


def cmd_induction(args) -> int:
    G, H = catalog_subgroup(args.group, args.subgroup)
    system = CosetSystem.scan(G, H)
    ok = verify_corner(system)
    _emit({
        "group": args.group,
        "subgroup": args.subgroup,
        "order": G.order,
        "index": system.index,
        "transversal": [G.name(x) for x in system.transversal],
        "corner_identity": ok,
    })
    return 0 if ok else 1


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("TFG_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"TFG_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def cmd_verify(args) -> int:
    if not args.all and not args.suite:
        raise InputError("name a suite or pass --all; suites: " + ", ".join(SUITES))
    if args.suite and args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from: " + ", ".join(SUITES))
    opts = Options(seed=_seed(args), space=_space(args), level=args.level, n=args.n, samples=args.samples)
    names = list(SUITES) if args.all else [args.suite]
    reports = [run_suite(name, opts) for name in names]
    status = max(r.exit_status for r in reports)
    if args.json:
        payload = {"seed": opts.seed, "space": opts.space.to_json(), "reports": [r.to_json(timing=args.timing) for r in reports]}
        if args.all:
            payload["cited_not_verified"] = list(CITED_NOT_VERIFIED)
        payload["exit_status"] = status
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for r in reports:
            print(r.summary())
        if args.all:
            print("cited, not verified:")
            for claim in CITED_NOT_VERIFIED:
                print(f"  - {claim}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tfg", description="Exact computation in topological full groups of odometers.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def with_space(p):
        p.add_argument("--space", default=DEFAULT_SPACE_JSON, help='odometer type, e.g. \'{"levels":[2,4,8]}\'')
        return p

    p = with_space(sub.add_parser("odometer", help="odometer and clopen-set information"))
    p.add_argument("op", choices=["info"])
    p.add_argument("--set", help='clopen set, e.g. \'{"level":2,"labels":[0,2]}\'')
    p.set_defaults(func=cmd_odometer_info)

    p = with_space(sub.add_parser("element", help="full-group element operations"))
    p.add_argument("op", choices=["compose", "invert", "normal-form", "index", "in-derived", "act"])
    p.add_argument("--a", "--element", dest="a", required=True, help='element, e.g. \'{"level":1,"cocycle":[1,-1]}\'')
    p.add_argument("--b")
    p.add_argument("--set")
    p.add_argument("--level", type=int)
    p.set_defaults(func=cmd_element)

    p = with_space(sub.add_parser("koopman", help="Koopman matrix of an element"))
    p.add_argument("op", nargs="?", choices=["matrix", "eval", "tau"], default="matrix")
    p.add_argument("--element", required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--z", default="1", help="point of the unit circle: 1, -1, i, -i or a complex literal")
    p.set_defaults(func=cmd_koopman)

    p = with_space(sub.add_parser("dihedral", help="dihedral full-group operations"))
    p.add_argument("op", choices=["compose", "decompose", "verify-jtj"])
    p.add_argument("--a", "--element", dest="a")
    p.add_argument("--b")
    p.add_argument("--level", type=int)
    p.set_defaults(func=cmd_dihedral)

    p = sub.add_parser("induction", help="coset-block checks for finite groups")
    p.add_argument("op", choices=["verify"])
    p.add_argument("--group", required=True, help="z<n>, s3, s4, d4, q8")
    p.add_argument("--subgroup", required=True, help="trivial, whole, d<m>, a3, a4, v4, rotations, center, i")
    p.set_defaults(func=cmd_induction)

    p = with_space(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("suite", nargs="?", help="one of: " + ", ".join(SUITES))
    p.add_argument("--all", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--level", type=int, help="highest level to sample")
    p.add_argument("--n", type=int, help="symmetric-group degree for lemma-sym")
    p.add_argument("--samples", type=int, help="override per-suite sample counts")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include elapsed time in JSON output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    dihedral_needs = {"compose": ("a", "b"), "decompose": ("a",)}
    if args.command == "dihedral":
        for name in dihedral_needs.get(args.op, ()):
            if getattr(args, name) is None:
                parser.error(f"dihedral {args.op} needs --{name}")
    if args.command == "element" and args.op == "compose" and args.b is None:
        parser.error("element compose needs --b")
    if args.command == "element" and args.op == "act" and args.set is None:
        parser.error("element act needs --set")
    try:
        return args.func(args)
    except (InputError, TFGError) as exc:
        print(f"tfg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
