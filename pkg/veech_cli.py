"""
origami-veech Command Line
Cylinder decompositions, Veech groups, non-congruence certificates and
surjectivity sweeps for regular origamis stored as JSON.

Exit codes: 0 success or certified, 2 input or precondition error,
3 criterion not satisfied.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from config import get_config
from src.congruence import certify_by_abc, certify_by_proposition, surjectivity_table
from src.errors import OrigamiError
from src.families import abc_search, alternating_origami, dihedral_origami, psl2_group
from src.modular import veech_group
from src.serialization import AbcInput, load_origami, origami_to_dict, save_json
from src.surfaces import make_regular_origami, origami_summary
from src.surfaces.cylinders import cylinders_in_direction, cylinders_in_vector_direction
from src.utils import ReportGenerator

logger = logging.getLogger("veech_cli")

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_NOT_CERTIFIED = 3


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def cmd_cylinders(args: argparse.Namespace) -> int:
    """Cylinder decomposition in direction (1, -m) or an explicit vector."""
    O = load_origami(args.file)
    if args.direction:
        p, q = (int(v) for v in args.direction.split(","))
        decomposition = cylinders_in_vector_direction(O, (p, q))
    else:
        decomposition = cylinders_in_direction(O, args.m)
    if args.json:
        _emit(decomposition.to_dict())
    else:
        print(ReportGenerator().cylinder_report(decomposition, origami_summary(O)))
    return EXIT_OK


def cmd_veech(args: argparse.Namespace) -> int:
    """Index, generators, cusp widths and level of the Veech group."""
    O = load_origami(args.file)
    veech = veech_group(O, use_cache=not args.no_cache)
    if args.json:
        _emit(veech.to_dict())
    else:
        print(ReportGenerator().veech_report(veech))
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    """
    Try to certify the totally non-congruence property.

    With --method abc the file holds (G, X, Y) and the certified
    (a,b,c)-generators are x = Y, y = X.
    """
    O = load_origami(args.file)
    if args.method == "abc":
        if not args.abc:
            raise ValueError("--method abc needs --abc a,b,c")
        orders = AbcInput.parse(args.abc)
        certificate = certify_by_abc(O.group, O.y, O.x, orders.a, orders.b, orders.c)
    else:
        certificate = certify_by_proposition(O)

    if args.json:
        _emit(certificate.to_dict() if certificate is not None else {"certified": False})
    else:
        print(ReportGenerator().certificate_report(certificate))
    if args.output and certificate is not None:
        save_json(certificate.to_dict(), args.output)
    return EXIT_OK if certificate is not None else EXIT_NOT_CERTIFIED


def cmd_surjectivity(args: argparse.Namespace) -> int:
    """Table n -> surjects onto SL(2,Z/nZ) for 2 <= n <= max_n."""
    O = load_origami(args.file)
    veech = veech_group(O, use_cache=not args.no_cache)
    table = surjectivity_table(veech, args.max_n)
    if args.json:
        _emit([
            {"n": int(row.n), "surjects": bool(row.surjects)}
            for row in table.itertuples(index=False)
        ])
    else:
        print(ReportGenerator().surjectivity_report(table))
    return EXIT_OK


def cmd_families(args: argparse.Namespace) -> int:
    """Write a family member as origami JSON."""
    if args.family == "alternating":
        O = alternating_origami(args.n)
    elif args.family == "dihedral":
        O = dihedral_origami(args.k)
    else:
        orders = AbcInput.parse(args.abc)
        G = psl2_group(args.psl)
        pair = abc_search(G, orders.a, orders.b, orders.c)
        if pair is None:
            logger.error(f"PSL(2,{args.psl}) has no ({args.abc})-generators")
            return EXIT_INPUT_ERROR
        x, y = pair
        O = make_regular_origami(G, y, x)

    data = origami_to_dict(O)
    if args.output:
        save_json(data, args.output)
    else:
        _emit(data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veech_cli",
        description="Veech groups of regular origamis"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cylinders", help="Cylinder decomposition in a rational direction")
    p.add_argument("file", type=str, help="Origami JSON file")
    p.add_argument("--m", type=int, default=0, help="Direction (1,-m) (default 0, horizontal)")
    p.add_argument("--direction", type=str, help="Primitive direction p,q (overrides --m)")
    p.add_argument("--json", action="store_true", help="Emit JSON")
    p.set_defaults(handler=cmd_cylinders)

    p = sub.add_parser("veech", help="Veech group of an origami")
    p.add_argument("file", type=str, help="Origami JSON file")
    p.add_argument("--json", action="store_true", help="Emit JSON")
    p.add_argument("--no-cache", action="store_true", help="Recompute the orbit")
    p.set_defaults(handler=cmd_veech)

    p = sub.add_parser("certify", help="Certify the totally non-congruence property")
    p.add_argument("file", type=str, help="Origami JSON file")
    p.add_argument("--method", choices=["proposition", "abc"], default="proposition")
    p.add_argument("--abc", type=str, help="Orders a,b,c for --method abc")
    p.add_argument("--json", action="store_true", help="Emit JSON")
    p.add_argument("--output", type=str, help="Also write the certificate JSON here")
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("surjectivity", help="Surjectivity onto SL(2,Z/nZ)")
    p.add_argument("file", type=str, help="Origami JSON file")
    p.add_argument("--max-n", type=int, required=True, help="Largest modulus")
    p.add_argument("--json", action="store_true", help="Emit JSON")
    p.add_argument("--no-cache", action="store_true", help="Recompute the orbit")
    p.set_defaults(handler=cmd_surjectivity)

    p = sub.add_parser("families", help="Emit a family member as origami JSON")
    families = p.add_subparsers(dest="family", required=True)
    f = families.add_parser("alternating", help="(A_n, (1,2,3), (1,...,n))")
    f.add_argument("n", type=int)
    f.add_argument("--output", type=str, help="Output file (default stdout)")
    f = families.add_parser("dihedral", help="(D_2k, r, s)")
    f.add_argument("k", type=int)
    f.add_argument("--output", type=str, help="Output file (default stdout)")
    f = families.add_parser("abc", help="(PSL(2,q), y, x) for (a,b,c)-generators x, y")
    f.add_argument("--psl", type=int, required=True, help="Prime q")
    f.add_argument("--abc", type=str, required=True, help="Orders a,b,c")
    f.add_argument("--output", type=str, help="Output file (default stdout)")
    p.set_defaults(handler=cmd_families)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    config = get_config()
    logging.basicConfig(
        level=config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        stream=sys.stderr
    )
    args = build_parser().parse_args(argv)

    logger.info("=" * 60)
    logger.info(f"origami-veech {args.command}")
    logger.info("=" * 60)

    try:
        code = args.handler(args)
    except (OrigamiError, ValidationError, json.JSONDecodeError, OSError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    logger.info("=" * 60)
    logger.info(f"Finished with exit code {code}")
    logger.info("=" * 60)
    return code


if __name__ == "__main__":
    sys.exit(main())
