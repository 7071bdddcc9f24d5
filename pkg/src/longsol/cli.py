"""Command line front end.

One subcommand per task family; every answer is a single JSON document on
stdout (``--format text`` flattens it to ``key: value`` lines).  Failures
print ``{"error": {"code", "message", "position"?}}`` and exit 1; anything
unexpected exits 2.  Two environment knobs bound the work done per call:
``LONGSOL_DEPTH`` caps thread depth (default 6) and ``LONGSOL_INDEX_BOUND``
caps stage sizes (default 48).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import parsing
from .arcs import circular_chain_check, format_position, indecomposability_witness
from .cohomology import (
    dl_add,
    dl_of_rational,
    dl_value,
    h1_action,
    member,
    mccord_equivalent,
    supernatural_of,
)
from .errors import CommandError, LongSolError
from .longline import partition_class
from .ordinal import add, compare, mul, omega_pow
from .stages import (
    RECIPE,
    apply_recipe,
    extend_thread,
    fiber,
    synthesize_recipe,
    verify_commutes,
)
from .tower import point_type

DEFAULT_DEPTH = 6
DEFAULT_INDEX_BOUND = 48

# Which subcommand exercises each library operation.  Audited by the test
# suite so the table cannot rot: every public operation stays reachable
# from exactly one entry here.
OPERATION_COVERAGE = {
    "ordinal.compare": "ord",
    "ordinal.add": "ord",
    "ordinal.mul": "ord",
    "ordinal.omega_pow": "ord",
    "longline.is_ng": "classify",
    "longline.partition_class": "classify",
    "longline.distinct_orbit_proof": "orbit",
    "longline.same_orbit_recipe": "orbit",
    "tower.point_type": "classify",
    "tower.same_orbit": "orbit",
    "tower.base_automorphism_token": "orbit",
    "tower.strip_top": "orbit",
    "tower.within_copy_hat": "orbit",
    "stages.apply_bond": "thread verify",
    "stages.fiber": "fiber",
    "stages.rotate": "orbit",
    "stages.translate": "orbit",
    "stages.apply_hat": "orbit",
    "stages.apply_recipe": "orbit",
    "stages.verify_commutes": "orbit",
    "stages.synthesize_recipe": "orbit",
    "stages.extend_thread": "thread extend",
    "arcs.preimage_components": "indecomp",
    "arcs.uncovered_point": "indecomp",
    "arcs.indecomposability_witness": "indecomp",
    "arcs.circular_chain_check": "chain-check",
    "cohomology.supernatural_of": "cohomology invariant",
    "cohomology.mccord_equivalent": "cohomology equiv",
    "cohomology.member": "cohomology member",
    "cohomology.dl_of_rational": "cohomology sum",
    "cohomology.dl_add": "cohomology sum",
    "cohomology.dl_value": "cohomology sum",
    "cohomology.h1_action": "cohomology degree",
}


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise CommandError("%s must be an integer" % name) from None
    if value < 1:
        raise CommandError("%s must be positive" % name)
    return value


def _depth_bound():
    return _env_int("LONGSOL_DEPTH", DEFAULT_DEPTH)


def _index_bound():
    return _env_int("LONGSOL_INDEX_BOUND", DEFAULT_INDEX_BOUND)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandError(message)


def _mode(args):
    if getattr(args, "tower", None) is not None:
        if args.tower < 1:
            raise CommandError("--tower takes a level >= 1")
        return "tower", args.tower
    if getattr(args, "long", False):
        return "long", None
    raise CommandError("choose --tower KAPPA or --long")


def _exponents(args):
    exps = tuple(parsing._parse_int(piece, start) for piece, start in
                 parsing._split_top(args.p, ","))
    if not exps:
        raise CommandError("--p takes a comma separated exponent list")
    bound = _index_bound()
    size = 1
    for k in exps:
        if k < 1:
            raise CommandError("bonding exponents are positive")
        size *= k
        if size > bound:
            raise CommandError(
                "stage size %d exceeds LONGSOL_INDEX_BOUND=%d" % (size, bound)
            )
    if len(exps) + 1 > _depth_bound():
        raise CommandError(
            "depth %d exceeds LONGSOL_DEPTH=%d" % (len(exps) + 1, _depth_bound())
        )
    return exps


def _token_doc(token):
    doc = {"mode": token.mode}
    if token.kappa is not None:
        doc["kappa"] = token.kappa
    if token.translate_by:
        doc["translate_by"] = token.translate_by
    if token.mode == "mapping":
        doc["source"] = str(token.source)
        doc["target"] = str(token.target)
    return doc


def _recipe_doc(recipe):
    return [
        {
            "level": level,
            "rot": recipe.rotations[level - 1],
            "trans": recipe.translate_by if recipe.translate_by else 0,
            "hat": _token_doc(recipe.hat),
        }
        for level in range(1, len(recipe.rotations) + 1)
    ]


def _cmd_ord(args):
    chosen = [
        name
        for name, value in (
            ("--expr", args.expr),
            ("--add", args.add),
            ("--mul", args.mul),
            ("--cmp", args.cmp),
            ("--omega-pow", args.omega_pow),
        )
        if value is not None
    ]
    if args.expr is not None:
        if len(chosen) != 1:
            raise CommandError("--expr stands alone")
        return {"normal": str(parsing.parse_ordinal(args.expr))}
    if args.omega_pow is not None:
        if len(chosen) != 1:
            raise CommandError("--omega-pow stands alone")
        return {"result": str(omega_pow(parsing.parse_ordinal(args.omega_pow)))}
    if args.a is None or len(chosen) != 1:
        raise CommandError("give --a with exactly one of --add, --mul, --cmp")
    a = parsing.parse_ordinal(args.a)
    if args.add is not None:
        return {"result": str(add(a, parsing.parse_ordinal(args.add)))}
    if args.mul is not None:
        return {"result": str(mul(a, parsing.parse_ordinal(args.mul)))}
    b = parsing.parse_ordinal(args.cmp)
    order = compare(a, b)
    return {"order": {-1: "less", 0: "equal", 1: "greater"}[order]}


def _cmd_classify(args):
    mode, kappa = _mode(args)
    if mode == "tower":
        point = parsing.parse_tower_point(args.point, kappa)
        return {"kappa": kappa, "type": point_type(point)}
    label = partition_class(parsing.parse_long_point(args.point))
    return {"class": label.kind, "gamma": str(label.gamma)}


def _parse_pair_of_threads(args):
    mode, kappa = _mode(args)
    exps = _exponents(args)
    x = parsing.parse_thread(exps, args.x, mode, kappa)
    y = parsing.parse_thread(exps, args.y, mode, kappa)
    return exps, kappa, x, y


def _cmd_orbit(args):
    _, kappa, x, y = _parse_pair_of_threads(args)
    result = synthesize_recipe(x, y, kappa=kappa)
    doc = {"status": result.status}
    if result.status == RECIPE:
        recipe = result.recipe
        ok, witness = verify_commutes(recipe)
        doc["recipe"] = _recipe_doc(recipe)
        doc["verified"] = ok
        doc["maps_x_to_y"] = apply_recipe(recipe, x) == y
        if witness is not None:
            doc["counterexample"] = {
                key: str(value) for key, value in witness.items()
            }
    return doc


def _cmd_fiber(args):
    if args.m < 1 or args.n < 1:
        raise CommandError("--m and --n are positive")
    if args.m * args.n > _index_bound():
        raise CommandError(
            "stage size %d exceeds LONGSOL_INDEX_BOUND=%d"
            % (args.m * args.n, _index_bound())
        )
    stripped = args.point.strip()
    if stripped.startswith("inf"):
        q = parsing.parse_stage_point(args.point, args.n)
    else:
        mode, kappa = _mode(args)
        q = parsing.parse_stage_point(args.point, args.n, mode, kappa)
    points = fiber(args.m, args.n, q)
    return {"stage": args.m * args.n, "points": [str(p) for p in points]}


def _thread_inputs(args):
    mode = None
    kappa = None
    if getattr(args, "tower", None) is not None or getattr(args, "long", False):
        mode, kappa = _mode(args)
    exps = _exponents(args)
    return exps, mode, kappa


def _cmd_thread_verify(args):
    exps, mode, kappa = _thread_inputs(args)
    try:
        thread = parsing.parse_thread(exps, args.points, mode, kappa)
    except LongSolError as err:
        if err.code == "parse-error":
            raise
        return {"valid": False, "reason": str(err)}
    return {
        "valid": True,
        "depth": thread.depth,
        "top_stage": thread.points[-1].n,
    }


def _cmd_thread_extend(args):
    exps, mode, kappa = _thread_inputs(args)
    thread = parsing.parse_thread(exps, args.points, mode, kappa)
    if args.levels < 1:
        raise CommandError("--levels is positive")
    if thread.depth + args.levels > _depth_bound():
        raise CommandError(
            "depth %d exceeds LONGSOL_DEPTH=%d"
            % (thread.depth + args.levels, _depth_bound())
        )
    extensions = extend_thread(thread, args.levels)
    return {"count": len(extensions), "threads": [str(t) for t in extensions]}


def _cmd_indecomp(args):
    if args.n < 1:
        raise CommandError("--n is positive")
    if args.pn < 1:
        raise CommandError("--pn is positive")
    if args.pn * args.n > _index_bound():
        raise CommandError(
            "stage size %d exceeds LONGSOL_INDEX_BOUND=%d"
            % (args.pn * args.n, _index_bound())
        )
    c_arc = parsing.parse_arc(args.c_arc, args.n)
    g_arc = parsing.parse_arc(args.g_arc, args.n)
    report = indecomposability_witness(args.pn, args.n, c_arc, g_arc)
    return {
        "multiplicity": report.multiplicity,
        "stage": report.stage,
        "c_components": [str(a) for a in report.c_components],
        "g_components": [str(a) for a in report.g_components],
        "c_separators": [format_position(p) for p in report.c_separators],
        "g_separators": [format_position(p) for p in report.g_separators],
        "uncovered": [
            {"c": i, "g": j, "point": format_position(point)}
            for (i, j), point in report.pair_uncovered
        ],
        "witness": report.witnesses_indecomposability,
    }


def _cmd_chain_check(args):
    if args.n < 1:
        raise CommandError("--n is positive")
    pieces = parsing._split_top(args.arcs, ",")
    arcs = [parsing.parse_arc(piece, args.n, start) for piece, start in pieces]
    return {"circular": circular_chain_check(arcs)}


def _sup_doc(sup):
    return {
        "finite": {str(prime): mult for prime, mult in sup.finite},
        "infinite": sorted(sup.infinite),
    }


def _cmd_coh_invariant(args):
    descriptor = parsing.parse_descriptor(args.s)
    return _sup_doc(supernatural_of(descriptor))


def _cmd_coh_equiv(args):
    a = parsing.parse_descriptor(args.a)
    b = parsing.parse_descriptor(args.b)
    return {"equivalent": mccord_equivalent(a, b)}


def _cmd_coh_member(args):
    descriptor = parsing.parse_descriptor(args.s)
    value = parsing.parse_rational(args.r)
    return {"member": member(descriptor, value)}


def _cmd_coh_sum(args):
    descriptor = parsing.parse_descriptor(args.s)
    a = dl_of_rational(descriptor, parsing.parse_rational(args.a))
    b = dl_of_rational(descriptor, parsing.parse_rational(args.b))
    total = dl_add(descriptor, a, b)
    return {
        "level": total.level,
        "numerator": total.numerator,
        "value": str(dl_value(descriptor, total)),
    }


def _cmd_coh_degree(args):
    return {"degree": h1_action(args.m, args.n)}


def build_parser():
    parser = _Parser(prog="longsol", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--format", choices=("json", "text"), default="json",
        help="output style (default json)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ord", help="ordinal arithmetic in normal form")
    p.add_argument("--expr", help="normalize one expression")
    p.add_argument("--a", help="left operand for --add/--mul/--cmp")
    p.add_argument("--add", help="right operand of a sum")
    p.add_argument("--mul", help="right operand of a product")
    p.add_argument("--cmp", help="right operand of a comparison")
    p.add_argument("--omega-pow", dest="omega_pow", help="exponent for w^x")
    p.set_defaults(handler=_cmd_ord)

    p = sub.add_parser("classify", help="type or class of a single point")
    p.add_argument("--tower", type=int, help="tower level kappa")
    p.add_argument("--long", action="store_true", help="long line mode")
    p.add_argument("--point", required=True)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("orbit", help="decide or witness a homeomorphism move")
    p.add_argument("--tower", type=int)
    p.add_argument("--long", action="store_true")
    p.add_argument("--p", required=True, help="bonding exponents k(1),k(2),...")
    p.add_argument("--x", required=True, help="first thread")
    p.add_argument("--y", required=True, help="second thread")
    p.set_defaults(handler=_cmd_orbit)

    p = sub.add_parser("fiber", help="preimages of a point under a bonding map")
    p.add_argument("--m", type=int, required=True, help="covering degree")
    p.add_argument("--n", type=int, required=True, help="base stage size")
    p.add_argument("--point", required=True)
    p.add_argument("--tower", type=int)
    p.add_argument("--long", action="store_true")
    p.set_defaults(handler=_cmd_fiber)

    p = sub.add_parser("thread", help="thread validity and extension")
    thread_sub = p.add_subparsers(dest="thread_command", required=True)
    for name, handler in (
        ("verify", _cmd_thread_verify),
        ("extend", _cmd_thread_extend),
    ):
        q = thread_sub.add_parser(name)
        q.add_argument("--p", required=True)
        q.add_argument("--points", required=True)
        q.add_argument("--tower", type=int)
        q.add_argument("--long", action="store_true")
        if name == "extend":
            q.add_argument("--levels", type=int, default=1)
        q.set_defaults(handler=handler)

    p = sub.add_parser("indecomp", help="two-arc indecomposability witness")
    p.add_argument("--pn", type=int, required=True, help="covering multiplicity")
    p.add_argument("--n", type=int, required=True, help="base stage size")
    p.add_argument("--c-arc", dest="c_arc", required=True)
    p.add_argument("--g-arc", dest="g_arc", required=True)
    p.set_defaults(handler=_cmd_indecomp)

    p = sub.add_parser("chain-check", help="circular chain adjacency audit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arcs", required=True, help="comma separated arcs")
    p.set_defaults(handler=_cmd_chain_check)

    p = sub.add_parser("cohomology", help="first Cech cohomology of a solenoid")
    coh_sub = p.add_subparsers(dest="cohomology_command", required=True)
    q = coh_sub.add_parser("invariant")
    q.add_argument("--s", required=True, help="bonding descriptor PREFIX:CYCLE")
    q.set_defaults(handler=_cmd_coh_invariant)
    q = coh_sub.add_parser("equiv")
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.set_defaults(handler=_cmd_coh_equiv)
    q = coh_sub.add_parser("member")
    q.add_argument("--s", required=True)
    q.add_argument("--r", required=True, help="rational N/D")
    q.set_defaults(handler=_cmd_coh_member)
    q = coh_sub.add_parser("sum")
    q.add_argument("--s", required=True)
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.set_defaults(handler=_cmd_coh_sum)
    q = coh_sub.add_parser("degree")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(handler=_cmd_coh_degree)

    return parser


def _flatten(doc, prefix=""):
    lines = []
    if isinstance(doc, dict):
        for key in sorted(doc):
            lines.extend(_flatten(doc[key], prefix + key + "."))
    elif isinstance(doc, (list, tuple)):
        for i, item in enumerate(doc):
            lines.extend(_flatten(item, prefix + "%d." % i))
    else:
        lines.append("%s: %s" % (prefix[:-1], doc))
    return lines


def _emit(doc, fmt):
    if fmt == "text":
        print("\n".join(_flatten(doc)))
    else:
        print(json.dumps(doc, sort_keys=True))


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        doc = args.handler(args)
    except LongSolError as err:
        error = {"code": err.code, "message": str(err)}
        if err.position is not None:
            error["position"] = err.position
        print(json.dumps({"error": error}, sort_keys=True))
        return 1
    except SystemExit:
        raise
    except Exception as err:  # pragma: no cover - defensive
        print(json.dumps(
            {"error": {"code": "internal", "message": str(err)}}, sort_keys=True
        ))
        return 2
    _emit(doc, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
