"""JSON file formats.

Scalars are always strings ("3/4", "2+5i", "1") and are parsed by the
declared field.  Algebra files look like::

    {"field": "Q", "dim": 2, "basis": ["e11", "e12"],
     "product": [[0, 0, 0, "1"], [0, 1, 1, "1"]],
     "star": [[0, 0, "1"]]}

``product`` entries ``[i, j, k, s]`` mean ``b_i b_j`` has coefficient ``s``
at ``b_k``; ``star`` entries ``[i, j, s]`` mean ``b_i*`` has ``s`` at ``b_j``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import FiniteAlgebra
from .coalgebra import FiniteCoalgebra
from .errors import ValidationError
from .fields import Field, field_from_name
from .modules import FiniteModule


class ParseError(ValidationError):
    """Malformed input file; the message names the offending location."""


def read_json(path) -> dict:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    return data


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _field(data: dict, override: Field | None) -> Field:
    if override is not None:
        return override
    if "field" not in data:
        raise ParseError("missing key 'field'")
    try:
        return field_from_name(str(data["field"]))
    except ValueError as exc:
        raise ParseError(f"field: {exc}") from None


def _int(value, where: str, lo: int = 0, hi: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    if value < lo or (hi is not None and value >= hi):
        raise ParseError(f"{where}: index {value} out of range")
    return value


def _scalar(field: Field, value, where: str):
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise ParseError(f"{where}: scalars must be strings, got {value!r}")
    try:
        return field.parse(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def _dim_and_basis(data: dict, prefix: str = "b"):
    if "dim" not in data:
        raise ParseError("missing key 'dim'")
    dim = _int(data["dim"], "dim")
    basis = data.get("basis")
    if basis is None:
        basis = [f"{prefix}{i}" for i in range(dim)]
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise ParseError(f"basis: expected {dim} string labels")
    return dim, basis


def algebra_from_spec(data: dict, field: Field | None = None) -> FiniteAlgebra:
    f = _field(data, field)
    dim, basis = _dim_and_basis(data)
    product = []
    for n, entry in enumerate(data.get("product", [])):
        where = f"product[{n}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(f"{where}: expected [i, j, k, scalar]")
        i, j, k = (_int(entry[t], f"{where}[{t}]", 0, dim) for t in range(3))
        product.append((i, j, k, _scalar(f, entry[3], f"{where}[3]")))
    star = None
    if data.get("star") is not None:
        star = [[f.zero] * dim for _ in range(dim)]
        for n, entry in enumerate(data["star"]):
            where = f"star[{n}]"
            if not isinstance(entry, list) or len(entry) != 3:
                raise ParseError(f"{where}: expected [i, j, scalar]")
            i, j = (_int(entry[t], f"{where}[{t}]", 0, dim) for t in range(2))
            star[i][j] = f.add(star[i][j], _scalar(f, entry[2], f"{where}[2]"))
    return FiniteAlgebra(f, dim, product, labels=basis, star=star, name=data.get("name"))


def algebra_to_spec(A: FiniteAlgebra) -> dict:
    f = A.field
    out = {
        "field": f.name,
        "dim": A.dim,
        "basis": list(A.labels),
        "product": [[i, j, k, f.format(c)] for (i, j, k, c) in A.product],
    }
    if A.name:
        out["name"] = A.name
    if A.has_star:
        out["star"] = [[i, j, f.format(c)] for i, row in enumerate(A.star_matrix) for j, c in enumerate(row) if c]
    return out


def load_algebra(path, field: Field | None = None) -> FiniteAlgebra:
    return algebra_from_spec(read_json(path), field)


# ----------------------------------------------------------------------------
# coalgebras


def coalgebra_from_spec(data: dict, field: Field | None = None) -> FiniteCoalgebra:
    """``{"field", "dim", "basis", "delta": [[i, j, k, s]], "counit": [s, ...]}``"""
    f = _field(data, field)
    dim, basis = _dim_and_basis(data, "c")
    delta = []
    for n, entry in enumerate(data.get("delta", [])):
        where = f"delta[{n}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(f"{where}: expected [i, j, k, scalar]")
        i, j, k = (_int(entry[t], f"{where}[{t}]", 0, dim) for t in range(3))
        delta.append((i, j, k, _scalar(f, entry[3], f"{where}[3]")))
    counit = data.get("counit")
    if not isinstance(counit, list) or len(counit) != dim:
        raise ParseError(f"counit: expected a list of {dim} scalars")
    eps = [_scalar(f, c, f"counit[{n}]") for n, c in enumerate(counit)]
    return FiniteCoalgebra(f, dim, delta, eps, labels=basis, name=data.get("name"))


def coalgebra_to_spec(C: FiniteCoalgebra) -> dict:
    f = C.field
    return {
        "field": f.name,
        "dim": C.dim,
        "basis": list(C.labels),
        "delta": [[i, j, k, f.format(c)] for (i, j, k, c) in C.delta_triples],
        "counit": [f.format(c) for c in C.counit],
        "name": C.name,
    }


# ----------------------------------------------------------------------------
# modules and homs


def module_from_spec(data: dict, A: FiniteAlgebra) -> FiniteModule:
    """``{"dim", "side", "action": [[i, j, k, s]]}`` with ``b_i . m_j`` having s at m_k."""
    f = A.field
    dim, basis = _dim_and_basis(data, "m")
    side = data.get("side", "left")
    if side not in ("left", "right"):
        raise ParseError("side: expected 'left' or 'right'")
    triples = []
    for n, entry in enumerate(data.get("action", [])):
        where = f"action[{n}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(f"{where}: expected [i, j, k, scalar]")
        i = _int(entry[0], f"{where}[0]", 0, A.dim)
        j, k = (_int(entry[t], f"{where}[{t}]", 0, dim) for t in (1, 2))
        triples.append((i, j, k, _scalar(f, entry[3], f"{where}[3]")))
    return FiniteModule.from_tensor(A, dim, triples, side=side, labels=basis)


def _matrix(f: Field, rows, shape, where):
    r, c = shape
    if not isinstance(rows, list) or len(rows) != r or any(not isinstance(x, list) or len(x) != c for x in rows):
        raise ParseError(f"{where}: expected a {r} x {c} matrix")
    return [[_scalar(f, v, f"{where}[{i}][{j}]") for j, v in enumerate(row)] for i, row in enumerate(rows)]


def hom_from_spec(data: dict, A: FiniteAlgebra, B: FiniteAlgebra):
    """Either ``{"map": dim B x dim A matrix}`` (a map into B) or
    ``{"images": [{"lambda": M, "rho": M}, ...]}`` (multipliers of B)."""
    from .homs import NonDegenerateHom
    from .multipliers import Multiplier, compute_multiplier_algebra

    f = B.field
    if "map" in data:
        m = _matrix(f, data["map"], (B.dim, A.dim), "map")
        return NonDegenerateHom.into_algebra(A, B, m)
    if "images" in data:
        imgs = data["images"]
        if not isinstance(imgs, list) or len(imgs) != A.dim:
            raise ParseError(f"images: expected {A.dim} entries")
        mults = []
        for n, img in enumerate(imgs):
            if not isinstance(img, dict) or "lambda" not in img or "rho" not in img:
                raise ParseError(f"images[{n}]: expected keys 'lambda' and 'rho'")
            lam = _matrix(f, img["lambda"], (B.dim, B.dim), f"images[{n}].lambda")
            rho = _matrix(f, img["rho"], (B.dim, B.dim), f"images[{n}].rho")
            mults.append(Multiplier(tuple(map(tuple, lam)), tuple(map(tuple, rho))))
        return NonDegenerateHom.from_images(A, compute_multiplier_algebra(B), mults)
    raise ParseError("hom spec needs 'map' or 'images'")
