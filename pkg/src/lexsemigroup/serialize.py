"""JSON encodings of the library's values.

Rationals are strings ``"p/q"`` (``"p"`` when q == 1); JSON integers are
accepted on input, floats are not.
"""

from .convex import PointSet
from .order import FormalDifference, MatrixOrder
from .rational import format_rational, to_rational
from .semigroup import FGSemigroup


class InputError(ValueError):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


def rational_to_json(q):
    return format_rational(q)


def vector_to_json(v):
    return [format_rational(a) for a in v]


def parse_rational(value, field):
    if isinstance(value, float):
        raise InputError(field, "floating-point numbers are not accepted")
    try:
        return to_rational(value)
    except (TypeError, ValueError) as exc:
        raise InputError(field, str(exc)) from None


def parse_vector(value, field, dim=None):
    if not isinstance(value, list):
        raise InputError(field, "expected a list of rationals")
    v = tuple(parse_rational(a, f"{field}[{i}]") for i, a in enumerate(value))
    if dim is not None and len(v) != dim:
        raise InputError(field, f"expected dimension {dim}, got {len(v)}")
    return v


def require(doc, key, field=None):
    field = field or key
    if not isinstance(doc, dict):
        raise InputError(field.rpartition(".")[0] or "input", "expected a JSON object")
    if key not in doc:
        raise InputError(field, "missing field")
    return doc[key]


def parse_dim(doc, field):
    dim = require(doc, "dim", f"{field}.dim" if field else "dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputError(f"{field}.dim" if field else "dim", "expected a positive integer")
    return dim


def _vector_list(doc, key, field, dim, nonempty=True):
    path = f"{field}.{key}" if field else key
    items = require(doc, key, path)
    if not isinstance(items, list) or (nonempty and not items):
        raise InputError(path, "expected a nonempty list of vectors")
    return [parse_vector(v, f"{path}[{i}]", dim) for i, v in enumerate(items)]


def order_to_json(order):
    return {"dim": order.dim, "rows": [vector_to_json(r) for r in order.rows]}


def order_from_json(doc, field="order"):
    dim = parse_dim(doc, field)
    return MatrixOrder(dim, _vector_list(doc, "rows", field, dim))


def pointset_to_json(A):
    return {"dim": A.dim, "points": [vector_to_json(p) for p in A.points]}


def pointset_from_json(doc, field=""):
    dim = parse_dim(doc, field)
    return PointSet(dim, _vector_list(doc, "points", field, dim))


def semigroup_to_json(S):
    return {"dim": S.dim,
            "generators": [vector_to_json(g) for g in S.generators],
            "include_identity": S.include_identity}


def semigroup_from_json(doc, field=""):
    dim = parse_dim(doc, field)
    gens = _vector_list(doc, "generators", field, dim)
    flag = doc.get("include_identity", False)
    if not isinstance(flag, bool):
        raise InputError(f"{field}.include_identity" if field else "include_identity",
                         "expected a boolean")
    return FGSemigroup(dim, gens, flag)


def difference_from_json(doc, field, dim):
    plus = parse_vector(require(doc, "plus", f"{field}.plus"), f"{field}.plus", dim)
    minus = parse_vector(require(doc, "minus", f"{field}.minus"), f"{field}.minus", dim)
    return FormalDifference(plus, minus)


def certificate_to_json(cert):
    return {"indices": list(cert.indices), "coords": vector_to_json(cert.coords)}
