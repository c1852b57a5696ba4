"""JSON file formats for groups, braces and set-theoretic solutions."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .braces import SkewBrace, verify_brace
from .groups import FiniteGroup, verify_group_axioms
from .ybe import SetSolution, make_solution


class InputFormatError(ValueError):
    """Malformed or invalid input file."""


def _load_json(path: Union[str, Path]) -> dict:
    try:
        payload = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise InputFormatError(f"{path}: top-level value must be an object")
    return payload


def _check_table(payload: dict, key: str, n: int) -> list[list[int]]:
    table = payload.get(key)
    if not isinstance(table, list) or len(table) != n:
        raise InputFormatError(f"'{key}' must be a list of {n} rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise InputFormatError(f"'{key}' row {i} must be a list of {n} entries")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise InputFormatError(
                    f"'{key}' row {i}, column {j}: {v!r} is not an index in 0..{n - 1}")
    return table


def load_group(path: Union[str, Path]) -> FiniteGroup:
    """Group JSON: {"order": n, "table": [[...]]}."""
    payload = _load_json(path)
    n = payload.get("order")
    if not isinstance(n, int) or n <= 0:
        raise InputFormatError("'order' must be a positive integer")
    return verify_group_axioms(_check_table(payload, "table", n))


def load_brace(path: Union[str, Path]) -> SkewBrace:
    """Brace JSON: {"order": n, "add": [[...]], "circle": [[...]]}."""
    payload = _load_json(path)
    n = payload.get("order")
    if not isinstance(n, int) or n <= 0:
        raise InputFormatError("'order' must be a positive integer")
    add = _check_table(payload, "add", n)
    circle = _check_table(payload, "circle", n)
    return verify_brace(add, circle)


def brace_payload(A: SkewBrace) -> dict:
    return {
        "order": A.order,
        "add": [list(row) for row in A.add.table],
        "circle": [list(row) for row in A.circle.table],
    }


def save_brace(A: SkewBrace, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(brace_payload(A)))


def load_solution(path: Union[str, Path]) -> SetSolution:
    """Solution JSON: {"size": n, "sigma": [[...]], "tau": [[...]]}."""
    payload = _load_json(path)
    n = payload.get("size")
    if not isinstance(n, int) or n <= 0:
        raise InputFormatError("'size' must be a positive integer")
    sigma = _check_table(payload, "sigma", n)
    tau = _check_table(payload, "tau", n)
    return make_solution(sigma, tau)


def solution_payload(S: SetSolution) -> dict:
    return {
        "size": S.size,
        "sigma": [list(row) for row in S.sigma],
        "tau": [list(row) for row in S.tau],
    }


def save_solution(S: SetSolution, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(solution_payload(S)))


def dumps(payload) -> str:
    """Canonical JSON used everywhere: sorted keys, stable separators."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
