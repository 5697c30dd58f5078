"""JSON encodings.

Scalars are never written as floats: a rational is "num/den" (or "n"), a
quaternion is a list of four such strings.  Objects carry an optional
"ring" key; when it is missing the ring is inferred from the scalar shapes.
"""
from __future__ import annotations

import json
from pathlib import Path

from .banded import INF, BandedMatrix
from .biortho import BiorthoSystem
from .errors import NCBError
from .linalg import Matrix
from .pairing import BimomentTable
from .poly import CentralPoly, LeftPoly, RightPoly
from .ring import Ring, parse_ring


class FormatError(NCBError, ValueError):
    """Input JSON does not have the expected shape."""

    def __init__(self, where, message):
        self.where = where
        super().__init__(f"{where}: {message}")


def _looks_quaternion(obj):
    return isinstance(obj, list) and len(obj) == 4 and all(
        isinstance(c, (str, int)) and not isinstance(c, bool) for c in obj
    )


def _infer_ring(scalars):
    for s in scalars:
        if _looks_quaternion(s):
            return Ring.QUATERNION
    return Ring.RATIONAL


def _ring_from(obj, scalars, where, ring=None):
    if isinstance(obj, dict) and "ring" in obj:
        try:
            named = parse_ring(obj["ring"])
        except ValueError as exc:
            raise FormatError(where, str(exc)) from None
        if ring is not None and named is not ring:
            raise FormatError(where, f"ring {named.value} does not match expected {ring.value}")
        return named
    return ring or _infer_ring(scalars)


def _scalar(ring, obj, where):
    try:
        return ring.parse(obj)
    except ValueError as exc:
        raise FormatError(where, str(exc)) from None


def _key(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(where, f"missing key {key!r}")
    return obj[key]


# scalars and scalar lists


def dump_scalars(ring, xs):
    return {"ring": ring.value, "values": [ring.dump(x) for x in xs]}


def load_scalars(obj, where="scalars", ring=None):
    values = obj["values"] if isinstance(obj, dict) and "values" in obj else obj
    if not isinstance(values, list):
        raise FormatError(where, "expected a list of scalars")
    ring = _ring_from(obj, values, where, ring)
    return ring, [_scalar(ring, v, f"{where}[{i}]") for i, v in enumerate(values)]


# polynomials


def dump_poly(p):
    return {"ring": p.ring.value, "var": p.var, "coeffs": [p.ring.dump(c) for c in p.coeffs]}


def load_poly(obj, where="poly", ring=None, central=False, var=None):
    coeffs = _key(obj, "coeffs", where)
    if not isinstance(coeffs, list):
        raise FormatError(where, "coeffs must be a list")
    v = obj.get("var", var)
    if var is not None and v != var:
        raise FormatError(where, f"expected a polynomial in {var}, got {v}")
    if v not in ("x", "y"):
        raise FormatError(where, "var must be 'x' or 'y'")
    ring = _ring_from(obj, coeffs, where, ring)
    cs = [_scalar(ring, c, f"{where}.coeffs[{i}]") for i, c in enumerate(coeffs)]
    if central:
        try:
            return CentralPoly(cs, ring, v)
        except ValueError as exc:
            raise FormatError(where, str(exc)) from None
    return (LeftPoly if v == "x" else RightPoly)(cs, ring)


def load_poly_list(obj, where="polys", ring=None, var=None):
    items = obj["polys"] if isinstance(obj, dict) and "polys" in obj else obj
    if not isinstance(items, list):
        raise FormatError(where, "expected a list of polynomials")
    if isinstance(obj, dict):
        ring = _ring_from(obj, [], where, ring)
    if ring is None:
        ring = _infer_ring(c for it in items if isinstance(it, dict)
                           for c in it.get("coeffs", []))
    return [load_poly(it, f"{where}[{i}]", ring, var=var) for i, it in enumerate(items)]


def dump_poly_list(polys, ring):
    return {"ring": ring.value, "polys": [dump_poly(p) for p in polys]}


# tables and matrices


def dump_table(t: BimomentTable):
    return {
        "ring": t.ring.value,
        "rows": t.rows,
        "cols": t.cols,
        "entries": [[t.ring.dump(x) for x in row] for row in t.entries],
    }


def _grid(obj, where, ring):
    entries = _key(obj, "entries", where)
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise FormatError(where, "entries must be a list of rows")
    ring = _ring_from(obj, [x for r in entries for x in r], where, ring)
    grid = [[_scalar(ring, x, f"{where}.entries[{a}][{b}]") for b, x in enumerate(r)]
            for a, r in enumerate(entries)]
    if grid and any(len(r) != len(grid[0]) for r in grid):
        raise FormatError(where, "entries must be rectangular")
    return ring, grid


def load_table(obj, where="bimoments", ring=None) -> BimomentTable:
    ring, grid = _grid(obj, where, ring)
    if not grid or not grid[0]:
        raise FormatError(where, "table is empty")
    for key, actual in (("rows", len(grid)), ("cols", len(grid[0]))):
        if key in obj and obj[key] != actual:
            raise FormatError(where, f"{key}={obj[key]} but entries have {actual}")
    return BimomentTable(grid, ring)


def dump_matrix(m: Matrix):
    return {"ring": m.ring.value, "entries": [[m.ring.dump(x) for x in r] for r in m.entries]}


def load_matrix(obj, where="matrix", ring=None) -> Matrix:
    ring, grid = _grid(obj, where, ring)
    if not grid:
        raise FormatError(where, "matrix is empty")
    return Matrix(grid, ring)


def _bound_json(x):
    return "+inf" if x == INF else "-inf" if x == -INF else int(x)


def _bound_load(x, where):
    if x in ("+inf", "inf"):
        return INF
    if x == "-inf":
        return -INF
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise FormatError(where, f"band bound must be an integer or '+inf'/'-inf', got {x!r}")


def dump_banded(b: BandedMatrix):
    return {
        "ring": b.ring.value,
        "trunc": b.trunc,
        "lo": _bound_json(b.lo),
        "hi": _bound_json(b.hi),
        "exact": b.exact,
        "entries": [[u, v, b.ring.dump(x)] for (u, v), x in sorted(b.entries.items())],
    }


def load_banded(obj, where="banded", ring=None) -> BandedMatrix:
    entries = _key(obj, "entries", where)
    if not isinstance(entries, list):
        raise FormatError(where, "entries must be a list of [u, v, scalar]")
    for i, e in enumerate(entries):
        if not (isinstance(e, list) and len(e) == 3
                and all(isinstance(k, int) and not isinstance(k, bool) for k in e[:2])):
            raise FormatError(f"{where}.entries[{i}]", "expected [u, v, scalar]")
    ring = _ring_from(obj, [e[2] for e in entries], where, ring)
    data = {(e[0], e[1]): _scalar(ring, e[2], f"{where}.entries[{i}]")
            for i, e in enumerate(entries)}
    return BandedMatrix(ring, int(_key(obj, "trunc", where)),
                        _bound_load(_key(obj, "lo", where), where),
                        _bound_load(_key(obj, "hi", where), where),
                        data, obj.get("exact"))


def dump_system(s: BiorthoSystem):
    return {
        "ring": s.ring.value,
        "normalization": s.normalization,
        "size": len(s),
        "ps": [dump_poly(p) for p in s.ps],
        "qs": [dump_poly(q) for q in s.qs],
    }


def load_system(obj, where="system", ring=None) -> BiorthoSystem:
    ring = _ring_from(obj, [], where, ring) if isinstance(obj, dict) and "ring" in obj else ring
    ps = load_poly_list(_key(obj, "ps", where), f"{where}.ps", ring, var="x")
    qs = load_poly_list(_key(obj, "qs", where), f"{where}.qs", ring, var="y")
    try:
        return BiorthoSystem(ps, qs, obj.get("normalization", "monic"))
    except ValueError as exc:
        raise FormatError(where, str(exc)) from None


# files


def read_json(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(str(path), f"cannot read: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def write_json(path, obj):
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if path in (None, "-"):
        print(text, end="")
    else:
        Path(path).write_text(text)
