"""JSON instance files: named spaces, products and operators with rationals as strings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Literal

from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr, ValidationError

from .errors import OrthoError
from .exact import RatMatrix, format_rational, rat
from .lattice import LatticeSpace
from .operators import RegularOperator
from .product import OrthoProduct


class InstanceError(OrthoError, ValueError):
    """Malformed instance file; the message carries the location."""


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class SpaceModel(_Strict):
    dim: StrictInt
    order: Literal["coordinatewise", "lexicographic"] = "coordinatewise"


class ProductModel(_Strict):
    domain: SpaceModel
    codomain: SpaceModel
    B: List[List[List[StrictStr]]]


class OperatorModel(_Strict):
    domain: SpaceModel
    codomain: SpaceModel
    matrix: List[List[StrictStr]]


class InstanceModel(_Strict):
    spaces: Dict[str, SpaceModel] = {}
    products: Dict[str, ProductModel] = {}
    operators: Dict[str, OperatorModel] = {}


@dataclass
class Instance:
    spaces: dict = field(default_factory=dict)
    products: dict = field(default_factory=dict)
    operators: dict = field(default_factory=dict)


def _space(m: SpaceModel, where: str) -> LatticeSpace:
    if m.dim < 1:
        raise InstanceError(f"{where}.dim: dimension must be at least 1")
    return LatticeSpace(m.dim, m.order)


def _rational(s: str, where: str):
    try:
        return rat(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceError(f"{where}: {exc}") from None


def _product(m: ProductModel, where: str) -> OrthoProduct:
    dom, cod = _space(m.domain, where + ".domain"), _space(m.codomain, where + ".codomain")
    n, k = dom.dim, cod.dim
    if len(m.B) != n:
        raise InstanceError(f"{where}.B: expected {n} rows, got {len(m.B)}")
    tensor = []
    for i, row in enumerate(m.B):
        if len(row) != n:
            raise InstanceError(f"{where}.B[{i}]: expected {n} entries, got {len(row)}")
        out_row = []
        for j, v in enumerate(row):
            if len(v) != k:
                raise InstanceError(f"{where}.B[{i}][{j}]: expected {k} codomain coordinates, got {len(v)}")
            out_row.append(tuple(_rational(x, f"{where}.B[{i}][{j}][{c}]") for c, x in enumerate(v)))
        tensor.append(tuple(out_row))
    return OrthoProduct(dom, cod, tuple(tensor))


def _operator(m: OperatorModel, where: str) -> RegularOperator:
    dom, cod = _space(m.domain, where + ".domain"), _space(m.codomain, where + ".codomain")
    if len(m.matrix) != cod.dim:
        raise InstanceError(f"{where}.matrix: expected {cod.dim} rows, got {len(m.matrix)}")
    rows = []
    for i, row in enumerate(m.matrix):
        if len(row) != dom.dim:
            raise InstanceError(f"{where}.matrix[{i}]: expected {dom.dim} entries, got {len(row)}")
        rows.append([_rational(x, f"{where}.matrix[{i}][{j}]") for j, x in enumerate(row)])
    try:
        return RegularOperator(dom, cod, RatMatrix.from_rows(rows, cols=dom.dim))
    except OrthoError as exc:
        raise InstanceError(f"{where}: {exc}") from None


def parse_instance(text: str) -> Instance:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        model = InstanceModel.model_validate(raw)
    except ValidationError as exc:
        err = exc.errors()[0]
        loc = ".".join(str(x) for x in err["loc"]) or "<root>"
        raise InstanceError(f"{loc}: {err['msg']}") from None
    return Instance(
        spaces={k: _space(v, f"spaces.{k}") for k, v in model.spaces.items()},
        products={k: _product(v, f"products.{k}") for k, v in model.products.items()},
        operators={k: _operator(v, f"operators.{k}") for k, v in model.operators.items()},
    )


def load_instance(path: str) -> Instance:
    import sys
    if path == "-":
        return parse_instance(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def space_to_json(s: LatticeSpace) -> dict:
    return s.to_json()


def product_to_json(p: OrthoProduct) -> dict:
    return {"domain": p.domain.to_json(), "codomain": p.codomain.to_json(),
            "B": [[[format_rational(x) for x in v] for v in row] for row in p.tensor]}


def operator_to_json(t: RegularOperator) -> dict:
    return {"domain": t.domain.to_json(), "codomain": t.codomain.to_json(),
            "matrix": [[format_rational(x) for x in t.matrix.row(i)] for i in range(t.matrix.rows)]}


def instance_to_json(inst: Instance) -> dict:
    out = {}
    if inst.spaces:
        out["spaces"] = {k: space_to_json(v) for k, v in inst.spaces.items()}
    if inst.products:
        out["products"] = {k: product_to_json(v) for k, v in inst.products.items()}
    if inst.operators:
        out["operators"] = {k: operator_to_json(v) for k, v in inst.operators.items()}
    return out


def dump_instance(inst: Instance) -> str:
    return json.dumps(instance_to_json(inst), indent=2) + "\n"
