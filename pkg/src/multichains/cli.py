"""Command-line surface: one-line machine-readable results, deterministic output.

Exit status: 0 for success / a true verdict, 1 for a false verdict or an
isomorphism refusal, 2 for usage or domain errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families
from .errors import PosetError
from .formats import (format_labels, format_poset, read_labels, read_poset,
                      to_dot)
from .incidence import count_multichains, mobius, zeta_polynomial_eval
from .iso import DEFAULT_NODE_BUDGET, are_isomorphic
from .lattice import (is_distributive, is_join_semidistributive, is_lattice,
                      is_lower_semimodular, is_meet_semidistributive,
                      is_modular, is_upper_semimodular)
from .multichain import multichain_poset
from .poset import DEFAULT_ELEMENT_CAP
from .shellability import is_el_labeling, product_labeling_on

_PROPERTY_CHECKS = {
    "graded": lambda p: p.is_graded(),
    "lattice": is_lattice,
    "distributive": is_distributive,
    "modular": is_modular,
    "jsd": is_join_semidistributive,
    "msd": is_meet_semidistributive,
    "lsm": is_lower_semimodular,
    "usm": is_upper_semimodular,
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_family(args) -> int:
    kind, params = args.kind, args.params
    cap = args.element_cap
    if kind == "chain" and len(params) == 1:
        p = families.chain(int(params[0]))
    elif kind == "boolean" and len(params) == 1:
        p = families.boolean_lattice(int(params[0]), cap)
    elif kind == "grid" and len(params) == 2:
        p = families.grid(int(params[0]), int(params[1]), cap)
    elif kind == "hypercube" and len(params) == 1:
        p = families.hypercube_face_lattice(int(params[0]), cap)
    elif kind == "ideals" and len(params) == 1:
        p = families.ideal_lattice(read_poset(params[0]), cap)
    else:
        raise PosetError(f"unknown family invocation: {kind} {' '.join(params)}")
    _emit(format_poset(p), args.output)
    return 0


def _cmd_multichain(args) -> int:
    base = read_poset(args.file)
    mp = multichain_poset(base, args.m, args.element_cap)
    out = Path(args.output)
    out.write_text(format_poset(mp.poset), encoding="utf-8")
    decode_lines = [f"{i} " + ",".join(map(str, t)) for i, t in enumerate(mp.elements)]
    Path(str(out) + ".decode").write_text("\n".join(decode_lines) + "\n", encoding="utf-8")
    return 0


def _cmd_check(args) -> int:
    p = read_poset(args.file)
    if args.property == "el":
        if args.labels is None:
            raise PosetError("--property=el requires --labels")
        result = is_el_labeling(p, read_labels(args.labels))
        if not result:
            print(f"{result.failure_kind} on interval {result.interval}", file=sys.stderr)
        verdict = bool(result)
    else:
        verdict = _PROPERTY_CHECKS[args.property](p)
    print("true" if verdict else "false")
    return 0 if verdict else 1


def _cmd_zeta(args) -> int:
    print(zeta_polynomial_eval(read_poset(args.file), args.t))
    return 0


def _cmd_mobius(args) -> int:
    print(mobius(read_poset(args.file)))
    return 0


def _cmd_count(args) -> int:
    print(count_multichains(read_poset(args.file), args.m))
    return 0


def _cmd_hypercube_count(args) -> int:
    print(families.hypercube_multichain_count(args.n, args.m))
    return 0


def _cmd_iso(args) -> int:
    witness = are_isomorphic(read_poset(args.file_a), read_poset(args.file_b),
                             node_budget=args.node_budget)
    if witness:
        print(" ".join(f"{i}->{j}" for i, j in enumerate(witness.mapping)))
        return 0
    print(f"refused: {witness.refusal}")
    return 1


def _cmd_ellabel_product(args) -> int:
    base = read_poset(args.file)
    labeling = read_labels(args.labels)
    mp = multichain_poset(base, args.m, args.element_cap)
    _emit(format_labels(product_labeling_on(mp, labeling)), args.output)
    return 0


def _cmd_export_dot(args) -> int:
    p = read_poset(args.file)
    labeling = read_labels(args.labels) if args.labels else None
    _emit(to_dot(p, labeling), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multichains",
        description="Finite poset toolkit: families, multichain posets, "
                    "property checks, incidence computations, and labelings.")
    sub = parser.add_subparsers(dest="command", required=True)

    cap_parent = argparse.ArgumentParser(add_help=False)
    cap_parent.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP,
                            help=f"element cap for size-multiplying constructions "
                                 f"(default {DEFAULT_ELEMENT_CAP})")

    s = sub.add_parser("family", parents=[cap_parent],
                       help="emit a family poset (chain K | boolean N | grid A B | "
                            "hypercube N | ideals FILE)")
    s.add_argument("kind", choices=["chain", "boolean", "grid", "hypercube", "ideals"])
    s.add_argument("params", nargs="+")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=_cmd_family)

    s = sub.add_parser("multichain", parents=[cap_parent],
                       help="emit the multichain poset plus a .decode sidecar")
    s.add_argument("file")
    s.add_argument("m", type=int)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=_cmd_multichain)

    s = sub.add_parser("check", help="check a property; prints true/false")
    s.add_argument("file")
    s.add_argument("--property", default="lattice",
                   choices=sorted(_PROPERTY_CHECKS) + ["el"])
    s.add_argument("--labels", default=None)
    s.set_defaults(func=_cmd_check)

    s = sub.add_parser("zeta", help="evaluate the zeta polynomial at an integer")
    s.add_argument("file")
    s.add_argument("t", type=int)
    s.set_defaults(func=_cmd_zeta)

    s = sub.add_parser("mobius", help="Moebius value between bottom and top")
    s.add_argument("file")
    s.set_defaults(func=_cmd_mobius)

    s = sub.add_parser("count", help="number of m-multichains, via the zeta polynomial")
    s.add_argument("file")
    s.add_argument("m", type=int)
    s.set_defaults(func=_cmd_count)

    s = sub.add_parser("hypercube-count",
                       help="closed-form multichain count for the cube face lattice")
    s.add_argument("n", type=int)
    s.add_argument("m", type=int)
    s.set_defaults(func=_cmd_hypercube_count)

    s = sub.add_parser("iso", help="decide isomorphism; prints a witness or a refusal")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                   help=f"backtracking node budget (default {DEFAULT_NODE_BUDGET})")
    s.set_defaults(func=_cmd_iso)

    s = sub.add_parser("ellabel-product", parents=[cap_parent],
                       help="emit the product labeling on the multichain poset")
    s.add_argument("file")
    s.add_argument("labels")
    s.add_argument("m", type=int)
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=_cmd_ellabel_product)

    s = sub.add_parser("export-dot", help="DOT rendering of the Hasse diagram")
    s.add_argument("file")
    s.add_argument("--labels", default=None)
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PosetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
