"""Lattice documents (canonical JSON) and Graphviz DOT export.

The JSON form is {"elements": [...], "covers": [[upper, lower], ...]}
with an optional "meta" string map.  Cover pairs are [upper, lower],
matching the Hasse-arrow convention that arrows point from the covering
element down to the covered one.  Canonical output lists elements in
the internal topological order and covers sorted by (upper id, lower
id), so emit o parse is byte-stable.
"""

from __future__ import annotations

import json
from typing import Any

from ._bits import bits_of
from .orders import OrderRelation
from .errors import ParseError
from .intervals import SetFamilyPoset
from .lattice import Interval, Lattice, build_lattice
from .labeling import ArrowLabeling


def parse_document(text: str) -> tuple[Lattice, dict[str, str] | None]:
    """Parse a lattice document; returns the lattice and its meta map, if any."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    unknown = set(doc) - {"elements", "covers", "meta"}
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(sorted(unknown))}")
    elements = doc.get("elements")
    covers = doc.get("covers")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ParseError('"elements" must be a list of strings')
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)
        for c in covers
    ):
        raise ParseError('"covers" must be a list of [upper, lower] string pairs')
    meta = doc.get("meta")
    if meta is not None and (
        not isinstance(meta, dict)
        or not all(isinstance(k, str) and isinstance(v, str) for k, v in meta.items())
    ):
        raise ParseError('"meta" must be a string-to-string map')
    return build_lattice(elements, [(u, l) for u, l in covers]), meta


def parse_lattice(text: str) -> Lattice:
    return parse_document(text)[0]


def lattice_document(lattice: Lattice, meta: dict[str, str] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "elements": list(lattice.names),
        "covers": [[lattice.names[u], lattice.names[l]] for u, l in lattice.covers],
    }
    if meta:
        doc["meta"] = {k: meta[k] for k in sorted(meta)}
    return doc


def emit_lattice(lattice: Lattice, meta: dict[str, str] | None = None) -> str:
    return json.dumps(lattice_document(lattice, meta), indent=2, ensure_ascii=False) + "\n"


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(
    lattice: Lattice,
    labeling: ArrowLabeling | None = None,
    highlight_interval: Interval | None = None,
) -> str:
    """Hasse quiver as DOT: arrows from covering to covered element.

    With a labeling, each edge carries its join-irreducible label; with
    an interval, the elements inside it are shaded.
    """
    inside = 0
    if highlight_interval is not None:
        a, b = lattice.check_interval(highlight_interval)
        inside = lattice.up[a] & lattice.down[b]
    lines = ["digraph lattice {", "  rankdir=TB;"]
    for x in range(lattice.n):
        attrs = ""
        if (inside >> x) & 1:
            attrs = " [style=filled, fillcolor=lightgrey]"
        lines.append(f"  {_quote(lattice.names[x])}{attrs};")
    for u, l in lattice.covers:
        label = ""
        if labeling is not None:
            label = f' [label="{lattice.names[labeling.gamma[(u, l)]]}"]'
        lines.append(f"  {_quote(lattice.names[u])} -> {_quote(lattice.names[l])}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def member_name(lattice: Lattice, mask: int) -> str:
    return "{" + ",".join(lattice.names[j] for j in bits_of(mask)) + "}"


def family_document(lattice: Lattice, family: SetFamilyPoset) -> dict[str, Any]:
    return {
        "kind": family.kind,
        "members": [[lattice.names[j] for j in bits_of(m)] for m in family.members],
        "witnesses": [
            [lattice.names[a], lattice.names[b]] for a, b in family.witnesses
        ],
        "hasse": [[u, l] for u, l in family.hasse],
    }


def emit_family_dot(lattice: Lattice, family: SetFamilyPoset) -> str:
    lines = ["digraph labelsets {", "  rankdir=TB;"]
    for m in family.members:
        lines.append(f"  {_quote(member_name(lattice, m))};")
    for u, l in family.hasse:
        lines.append(
            f"  {_quote(member_name(lattice, family.members[u]))}"
            f" -> {_quote(member_name(lattice, family.members[l]))};"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def relation_document(lattice: Lattice, relation: OrderRelation) -> dict[str, Any]:
    return {
        "kind": relation.kind,
        "elements": list(lattice.names),
        "hasse": [[lattice.names[u], lattice.names[l]] for u, l in relation.hasse],
    }


def emit_relation_dot(lattice: Lattice, relation: OrderRelation) -> str:
    lines = [f"digraph {relation.kind}_order {{", "  rankdir=TB;"]
    for x in range(lattice.n):
        lines.append(f"  {_quote(lattice.names[x])};")
    for u, l in relation.hasse:
        lines.append(f"  {_quote(lattice.names[u])} -> {_quote(lattice.names[l])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
