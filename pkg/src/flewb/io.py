"""Reading and writing the JSON algebra file format.

Keys: ``elements`` (names, containing "0" and "1"), exactly one of ``leq``
(every pair of the order, no closure taken) or ``hasse`` (cover pairs,
closure taken), ``monoid`` (object ``"a,b" -> name`` or a row-major array),
and optional ``B``, ``D``, ``Delta`` objects ``name -> name``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .algebra import FiniteRL, build_algebra
from .errors import AlgebraFileError
from .fixtures import order_from_covers

ALLOWED_KEYS = {"elements", "leq", "hasse", "monoid", "B", "D", "Delta"}
OPERATOR_KEYS = ("B", "D", "Delta")


def _names(data: Mapping[str, Any]) -> list[str]:
    elements = data.get("elements")
    if not isinstance(elements, list) or not elements or not all(isinstance(e, str) for e in elements):
        raise AlgebraFileError('"elements" must be a non-empty array of strings')
    if len(set(elements)) != len(elements):
        raise AlgebraFileError("duplicate element names")
    if len(elements) > 1 and ("0" not in elements or "1" not in elements):
        raise AlgebraFileError('"elements" must contain "0" and "1"')
    # index 0 is reserved for the bottom
    if "0" in elements:
        elements = ["0"] + [e for e in elements if e != "0"]
    return elements


def _pair_list(value, what: str, known: set[str]) -> list[tuple[str, str]]:
    if not isinstance(value, list):
        raise AlgebraFileError(f'"{what}" must be an array of pairs')
    out = []
    for p in value:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p)):
            raise AlgebraFileError(f'"{what}" entries must be 2-element arrays of names')
        for x in p:
            if x not in known:
                raise AlgebraFileError(f'unknown element {x!r} in "{what}"')
        out.append((p[0], p[1]))
    return out


def _split_key(key: str, known: set[str]) -> tuple[str, str]:
    # names may contain commas, e.g. "(1,0)"; accept the unique valid split
    splits = [
        (key[:i], key[i + 1:]) for i, ch in enumerate(key)
        if ch == "," and key[:i].strip() in known and key[i + 1:].strip() in known
    ]
    if len(splits) != 1:
        raise AlgebraFileError(f"cannot read monoid key {key!r}")
    a, b = splits[0]
    return a.strip(), b.strip()


def _monoid(value, elements: list[str], file_order: list[str]) -> list[list[int]]:
    n = len(elements)
    idx = {e: i for i, e in enumerate(elements)}
    known = set(elements)
    mon: list[list[int | None]] = [[None] * n for _ in range(n)]
    if isinstance(value, dict):
        for key, v in value.items():
            a, b = _split_key(key, known)
            if v not in known:
                raise AlgebraFileError(f"unknown element {v!r} in monoid")
            mon[idx[a]][idx[b]] = idx[v]
        for a in range(n):
            for b in range(n):
                if mon[a][b] is None:
                    if mon[b][a] is None:
                        raise AlgebraFileError(
                            f"monoid misses {elements[a]},{elements[b]}"
                        )
                    mon[a][b] = mon[b][a]
        return mon
    if isinstance(value, list):
        rows = value
        if len(value) == n * n and all(isinstance(v, str) for v in value):
            rows = [value[i * n:(i + 1) * n] for i in range(n)]
        if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise AlgebraFileError(f"monoid array must be {n}x{n}")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v not in known:
                    raise AlgebraFileError(f"unknown element {v!r} in monoid")
                mon[idx[file_order[i]]][idx[file_order[j]]] = idx[v]
        return mon
    raise AlgebraFileError('"monoid" must be an object or an array')


def _unary(value, key: str, elements: list[str]) -> tuple[int, ...]:
    idx = {e: i for i, e in enumerate(elements)}
    if not isinstance(value, dict):
        raise AlgebraFileError(f'"{key}" must be an object mapping names to names')
    for k, v in value.items():
        if k not in idx or v not in idx:
            raise AlgebraFileError(f'unknown element in "{key}": {k!r} -> {v!r}')
    missing = [e for e in elements if e not in value]
    if missing:
        raise AlgebraFileError(f'"{key}" misses {missing}')
    return tuple(idx[value[e]] for e in elements)


def algebra_from_dict(data: Mapping[str, Any], name: str = "") -> tuple[FiniteRL, dict[str, tuple[int, ...]]]:
    """Parse a decoded algebra file.

    Returns the validated algebra and any supplied operator tables keyed by
    ``"B"``, ``"D"``, ``"Delta"``. Format problems raise ``AlgebraFileError``;
    law violations raise the ``AlgebraError`` subclasses of ``build_algebra``.
    """
    if not isinstance(data, Mapping):
        raise AlgebraFileError("algebra file must hold a JSON object")
    unknown = sorted(set(data) - ALLOWED_KEYS)
    if unknown:
        raise AlgebraFileError(f"unknown keys: {unknown}")
    file_order = list(data.get("elements") or [])
    elements = _names(data)
    known = set(elements)
    if ("leq" in data) == ("hasse" in data):
        raise AlgebraFileError('exactly one of "leq" or "hasse" is required')
    if "monoid" not in data:
        raise AlgebraFileError('"monoid" is required')
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    if "leq" in data:
        leq = [[False] * n for _ in range(n)]
        for a, b in _pair_list(data["leq"], "leq", known):
            leq[idx[a]][idx[b]] = True
    else:
        leq = order_from_covers(elements, _pair_list(data["hasse"], "hasse", known))
    mon = _monoid(data["monoid"], elements, file_order)
    algebra = build_algebra(elements, leq, mon, name=name)
    tables = {k: _unary(data[k], k, elements) for k in OPERATOR_KEYS if k in data}
    return algebra, tables


def load_algebra(path: str | Path) -> tuple[FiniteRL, dict[str, tuple[int, ...]]]:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{path}: invalid JSON: {exc}") from exc
    return algebra_from_dict(data, name=path.stem)


def file_names(A: FiniteRL) -> list[str]:
    """Element names as written to a file: the bounds are always "0" and "1"."""
    names = list(A.elements)
    if A.n > 1 and (names[0] != "0" or names[A.top] != "1"):
        if any(x in ("0", "1") for i, x in enumerate(names) if i not in (0, A.top)):
            raise AlgebraFileError("cannot rename the bounds to 0 and 1: names clash")
        names[0], names[A.top] = "0", "1"
    return names


def algebra_to_dict(A: FiniteRL, tables: Mapping[str, tuple[int, ...]] | None = None) -> dict[str, Any]:
    """Serialise ``A``; products such as "(0,0)" get their bounds renamed to "0"/"1"."""
    names = file_names(A)
    data: dict[str, Any] = {
        "elements": list(names),
        "hasse": [[names[a], names[b]] for a, b in A.covers()],
        "monoid": [[names[v] for v in row] for row in A.monoid],
    }
    for key, table in (tables or {}).items():
        if table is not None:
            data[key] = {names[a]: names[table[a]] for a in range(A.n)}
    return data


def dumps_algebra(A: FiniteRL, tables: Mapping[str, tuple[int, ...]] | None = None) -> str:
    return json.dumps(algebra_to_dict(A, tables), indent=2, ensure_ascii=False)
