"""Command-line interface: one JSON document in, one JSON document out.

Exit codes: 0 ok (including true results), 1 false results and
witness-bearing negative verdicts, 2 malformed input.
"""

import argparse
import json
import sys

from . import convex, order as ordmod, semigroup as semi
from .rational import DimensionError
from .serialize import (InputError, certificate_to_json, difference_from_json,
                        order_from_json, order_to_json, parse_vector,
                        pointset_from_json, require, semigroup_from_json,
                        vector_to_json)

OK, FALSE, INPUT_ERROR = 0, 1, 2
DEFAULT_LIMIT = 100_000


def _order(doc, dim=None, key="order"):
    M = order_from_json(require(doc, key), key)
    if dim is not None and M.dim != dim:
        raise InputError(f"{key}.dim", f"expected dimension {dim}, got {M.dim}")
    return M


def _vec(doc, key, dim):
    return parse_vector(require(doc, key), key, dim)


def order_compare(doc, opts):
    M = _order(doc)
    res = ordmod.compare(M, _vec(doc, "u", M.dim), _vec(doc, "v", M.dim))
    return OK, {"result": str(res)}


def order_total(doc, opts):
    total = ordmod.is_total_on_space(_order(doc))
    return (OK if total else FALSE), {"total": total}


def order_canonicalize(doc, opts):
    return OK, {"order": order_to_json(ordmod.canonicalize(_order(doc)))}


def order_equal(doc, opts):
    first = _order(doc, key="first")
    second = _order(doc, first.dim, key="second")
    eq = ordmod.orders_equal(first, second)
    return (OK if eq else FALSE), {"equal": eq}


def order_flag(doc, opts):
    flag = ordmod.flag_of(_order(doc))
    return OK, {
        "dims": list(flag.dims),
        "subspaces": [{"dim": d, "basis": [vector_to_json(b) for b in basis]}
                      for d, basis in flag.subspaces],
        "orientations": [vector_to_json(r) for r in flag.orientations],
    }


def order_group_compare(doc, opts):
    M = _order(doc)
    a1 = difference_from_json(require(doc, "a1"), "a1", M.dim)
    a2 = difference_from_json(require(doc, "a2"), "a2", M.dim)
    return OK, {"result": str(ordmod.group_extend_compare(M, a1, a2))}


def hull_member(doc, opts):
    A = pointset_from_json(doc)
    m = convex.point_in_hull(A, _vec(doc, "x", A.dim))
    if m.inside:
        return OK, {"member": True, "coeffs": vector_to_json(m.coeffs)}
    return FALSE, {"member": False, "functional": vector_to_json(m.functional),
                   "threshold": vector_to_json([m.threshold])[0]}


def hull_caratheodory(doc, opts):
    A = pointset_from_json(doc)
    cert = convex.caratheodory(A, _vec(doc, "x", A.dim))
    if cert is None:
        return FALSE, {"member": False}
    return OK, {"member": True, **certificate_to_json(cert)}


def hull_origin_witness(doc, opts):
    w = convex.natural_combination_witness(pointset_from_json(doc))
    if w is None:
        return FALSE, {"witness": None}
    payload = {"witness": list(w.coeffs)}
    if w.zero_generator:
        payload["zero_generator"] = True
    return OK, payload


def hull_separate(doc, opts):
    A = pointset_from_json(doc)
    try:
        sep = convex.separate_from_hull(A, _vec(doc, "vertex", A.dim))
    except convex.MembershipError as exc:
        return FALSE, {"member": True, "certificate": certificate_to_json(exc.certificate)}
    return OK, {"order": order_to_json(sep.order), "vertex": vector_to_json(sep.vertex)}


def _well_order_or_fail(S, M):
    verdict = semi.is_well_ordered(S, M)
    if verdict:
        return None
    return FALSE, {"verdict": "not-well-ordered", "witness": vector_to_json(verdict.witness)}


def _total_order(doc, dim):
    M = _order(doc, dim)
    if not ordmod.is_total_on_space(M):
        raise InputError("order", "order must be total (rank equal to dim)")
    return M


def semigroup_find_order(doc, opts):
    res = semi.find_well_order(semigroup_from_json(doc))
    if isinstance(res, ordmod.MatrixOrder):
        return OK, {"order": order_to_json(res)}
    return FALSE, {"witness": list(res.coeffs)}


def semigroup_wellorder(doc, opts):
    S = semigroup_from_json(doc)
    return _well_order_or_fail(S, _total_order(doc, S.dim)) or (OK, {"verdict": "well-ordered"})


def semigroup_enumerate(doc, opts):
    S = semigroup_from_json(doc)
    M = _total_order(doc, S.dim)
    if opts.count < 0:
        raise InputError("--count", "must be nonnegative")
    if opts.count > opts.limit:
        raise InputError("--count", f"exceeds the limit {opts.limit}")
    failed = _well_order_or_fail(S, M)
    if failed:
        return failed
    elems = semi.enumerate_ascending(S, M, opts.count)
    return OK, {"count": len(elems), "elements": [vector_to_json(e) for e in elems]}


def semigroup_member(doc, opts):
    S = semigroup_from_json(doc)
    if opts.bound < 1:
        raise InputError("--bound", "must be at least 1")
    res = semi.bounded_membership(S, _vec(doc, "x", S.dim), opts.bound)
    if isinstance(res, semi.Member):
        return OK, {"member": True, "multiplicities": list(res.multiplicities)}
    return FALSE, {"member": False, "bound": res.bound}


def semigroup_min(doc, opts):
    S = semigroup_from_json(doc)
    M = _total_order(doc, S.dim)
    return (_well_order_or_fail(S, M)
            or (OK, {"minimum": vector_to_json(semi.minimum_element(S, M))}))


COMMANDS = {
    "order": {
        "compare": order_compare,
        "total": order_total,
        "canonicalize": order_canonicalize,
        "equal": order_equal,
        "flag": order_flag,
        "group-compare": order_group_compare,
    },
    "hull": {
        "member": hull_member,
        "caratheodory": hull_caratheodory,
        "origin-witness": hull_origin_witness,
        "separate": hull_separate,
    },
    "semigroup": {
        "find-order": semigroup_find_order,
        "wellorder": semigroup_wellorder,
        "enumerate": semigroup_enumerate,
        "member": semigroup_member,
        "min": semigroup_min,
    },
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lexsemigroup",
        description="Exact lexicographic orders, convex certificates and semigroups.")
    groups = parser.add_subparsers(dest="group", required=True)
    for group, commands in COMMANDS.items():
        gp = groups.add_parser(group).add_subparsers(dest="command", required=True)
        for name in commands:
            p = gp.add_parser(name)
            p.add_argument("input", nargs="?", default="-",
                           help="JSON input file (default: standard input)")
            if group == "semigroup" and name == "enumerate":
                p.add_argument("--count", type=int, default=10)
                p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
            if group == "semigroup" and name == "member":
                p.add_argument("--bound", type=int, default=10)
    return parser


def dumps(payload):
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n"


def run(argv, stdin=None):
    """Execute one invocation; returns ``(exit_code, output_text)``."""
    opts = build_parser().parse_args(argv)
    try:
        if opts.input == "-":
            text = (stdin if stdin is not None else sys.stdin).read()
        else:
            with open(opts.input, encoding="utf-8") as fh:
                text = fh.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("input", f"malformed JSON: {exc.msg}") from None
        if not isinstance(doc, dict):
            raise InputError("input", "expected a JSON object")
        code, payload = COMMANDS[opts.group][opts.command](doc, opts)
    except InputError as exc:
        return INPUT_ERROR, dumps({"error": exc.message, "field": exc.field})
    except (DimensionError, ValueError) as exc:
        return INPUT_ERROR, dumps({"error": str(exc), "field": "input"})
    except OSError as exc:
        return INPUT_ERROR, dumps({"error": exc.strerror or str(exc), "field": "input"})
    return code, dumps(payload)


def main(argv=None):
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
