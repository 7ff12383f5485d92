"""
Order files: a basis of O written out as JSON

    {"p": 61, "a": 61, "b": 7,
     "basis": [["1", "0", "0", "0"], ["1/2", "0", "1/2", "0"], ...]}

Each basis row holds the coefficients on (1, i, j, k) as "num/den" strings.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from src.algebra.quaternion import QuatAlgebra
from src.errors import ParseError
from src.lattices.lattice import Order, make_order


@dataclass(frozen=True)
class OrderFile:
    p: int
    a: int
    b: int
    basis: Tuple[Tuple[str, str, str, str], ...]

    def to_dict(self) -> dict:
        return {"p": self.p, "a": self.a, "b": self.b, "basis": [list(row) for row in self.basis]}

    def to_order(self) -> Order:
        algebra = QuatAlgebra(self.p, self.a, self.b)
        rows = [[_rational(x) for x in row] for row in self.basis]
        return make_order(algebra, [algebra.from_coeffs(row) for row in rows])


def _rational(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def _int_field(data: dict, name: str) -> int:
    value = data.get(name)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"field {name!r} must be an integer, got {value!r}")
    return value


def order_file_from_dict(data: dict) -> OrderFile:
    if not isinstance(data, dict):
        raise ParseError("order file must hold a JSON object")
    basis = data.get("basis")
    if not isinstance(basis, list) or len(basis) != 4 or any(not isinstance(r, list) or len(r) != 4 for r in basis):
        raise ParseError("basis must be a 4x4 array of rationals")
    rows = tuple(tuple(str(x) for x in row) for row in basis)
    for row in rows:
        for x in row:
            _rational(x)
    return OrderFile(_int_field(data, "p"), _int_field(data, "a"), _int_field(data, "b"), rows)


def parse_order_file(path: Union[str, Path]) -> Order:
    """Read an order file and build the order it describes.

    Raises:
        ParseError: if the file is not a well-formed order file
        InputError: (a subclass) if the basis does not span an order of B_p
    """
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read order file {path}: {exc}") from exc
    return order_file_from_dict(data).to_order()


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_order_file(order: Order) -> OrderFile:
    A = order.algebra
    basis = tuple(tuple(_fmt(c) for c in e.coeffs) for e in order.basis)
    return OrderFile(A.p, A.a, A.b, basis)


def basis_strings(order: Order) -> List[List[str]]:
    return [list(row) for row in format_order_file(order).basis]


def write_order_file(order: Order, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(format_order_file(order).to_dict(), indent=2) + "\n")
    return path
