"""JSON documents for algebras, with rationals as "p/q" strings."""

from __future__ import annotations

import json
import os
from typing import Union

from .algebra import StructureConstants
from .linalg import format_matrix, format_rational, parse_matrix, parse_rational
from .presentation import Bl4Presentation

Algebra = Union[StructureConstants, Bl4Presentation]


class DocumentError(ValueError):
    """Malformed algebra document."""


def _rational(x, where: str):
    if not isinstance(x, str) and not (isinstance(x, int) and not isinstance(x, bool)):
        raise DocumentError(f"{where}: rationals must be 'p/q' strings")
    try:
        return parse_rational(str(x))
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def parse_document(obj) -> Algebra:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    kind = obj.get("kind")
    if kind == "constants":
        dim = obj.get("dim")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise DocumentError("dim must be a positive integer")
        entries = obj.get("entries")
        if not isinstance(entries, list):
            raise DocumentError("entries must be a list")
        products: dict = {}
        for n, e in enumerate(entries):
            if not isinstance(e, dict) or set(e) != {"i", "j", "k", "v"}:
                raise DocumentError(f"entry {n}: expected keys i, j, k, v")
            i, j, k = e["i"], e["j"], e["k"]
            if not all(isinstance(t, int) and not isinstance(t, bool) and 0 <= t < dim for t in (i, j, k)):
                raise DocumentError(f"entry {n}: indices must be integers in [0, {dim})")
            if i >= j:
                raise DocumentError(f"entry {n}: requires i < j (antisymmetry is implied)")
            vec = products.setdefault((i, j), [0] * dim)
            if vec[k] != 0:
                raise DocumentError(f"entry {n}: duplicate coefficient ({i},{j},{k})")
            vec[k] = _rational(e["v"], f"entry {n}")
        try:
            return StructureConstants.from_products(products, dim)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
    if kind == "presentation":
        missing = {"x11", "xi3", "X"} - set(obj)
        if missing:
            raise DocumentError(f"presentation is missing {sorted(missing)}")
        try:
            X = parse_matrix(obj["X"], 2)
        except ValueError as exc:
            raise DocumentError(f"X: {exc}") from None
        x11 = _rational(obj["x11"], "x11")
        xi3 = _rational(obj["xi3"], "xi3")
        try:
            return Bl4Presentation(x11, xi3, X)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
    raise DocumentError("kind must be 'constants' or 'presentation'")


def to_document(alg: Algebra) -> dict:
    if isinstance(alg, Bl4Presentation):
        return {
            "kind": "presentation",
            "x11": format_rational(alg.x11),
            "xi3": format_rational(alg.xi3),
            "X": format_matrix(alg.X),
        }
    entries = [
        {"i": i, "j": j, "k": k, "v": format_rational(alg.c[i][j][k])}
        for i in range(alg.dim)
        for j in range(i + 1, alg.dim)
        for k in range(alg.dim)
        if alg.c[i][j][k] != 0
    ]
    return {"kind": "constants", "dim": alg.dim, "entries": entries}


def load_json_arg(text: str):
    """Inline JSON, or the path of a UTF-8 JSON file."""
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)
