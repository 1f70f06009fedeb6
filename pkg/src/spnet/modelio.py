"""Reading and writing ``.spn.json`` model files.

Schema (UTF-8 JSON object, keys in this order when written)::

    {
      "places": ["p1", "p2"],
      "transitions": ["t1"],
      "arcs": [
        {"from": "p1", "to": "t1", "sign": "+", "weight": 1},
        {"from": "t1", "to": "p2", "sign": "-", "weight": 1}
      ],
      "initial_marking": {
        "positive": [1, 0],
        "negative": [0, 0]
      }
    }

Vertex names must be unique across places and transitions.  ``weight`` may be
omitted on input and defaults to 1; it is always written.  The writer emits
arcs in canonical order (place-sourced arcs first, then by source and target
index), so equal nets serialize to identical text.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DimensionError, ModelFormatError
from .model import Arc, Marking, Sign, SignedPetriNet, SpnStructure

_KEYS = ("places", "transitions", "arcs", "initial_marking")


def _expect(condition: bool, message: str, field: str) -> None:
    if not condition:
        raise ModelFormatError(message, field=field)


def _names(doc: dict, key: str) -> list[str]:
    value = doc.get(key)
    _expect(isinstance(value, list), "expected a list of names", key)
    for i, name in enumerate(value):
        _expect(isinstance(name, str) and name.strip() != "", "expected a non-empty string", f"{key}[{i}]")
    return value


def _counts(value, field: str) -> tuple[int, ...]:
    _expect(isinstance(value, list), "expected a list of token counts", field)
    for i, x in enumerate(value):
        _expect(
            isinstance(x, int) and not isinstance(x, bool) and x >= 0,
            f"token count must be a non-negative integer, got {x!r}",
            f"{field}[{i}]",
        )
    return tuple(value)


def load_model(text: str) -> SignedPetriNet:
    """Parse model-file text.  The result is not validated; call ``validate``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(exc.msg, line=exc.lineno) from None
    _expect(isinstance(doc, dict), "top level must be an object", "<root>")
    unknown = sorted(set(doc) - set(_KEYS))
    _expect(not unknown, f"unknown keys {unknown}", "<root>")
    for key in _KEYS:
        _expect(key in doc, "missing required key", key)

    places, transitions = _names(doc, "places"), _names(doc, "transitions")
    index = set()
    for kind, names in (("places", places), ("transitions", transitions)):
        for i, name in enumerate(names):
            _expect(name not in index, f"duplicate vertex name {name!r}", f"{kind}[{i}]")
            index.add(name)

    structure = SpnStructure.build(places, transitions, [])
    arcs = []
    _expect(isinstance(doc["arcs"], list), "expected a list of arcs", "arcs")
    for i, entry in enumerate(doc["arcs"]):
        where = f"arcs[{i}]"
        _expect(isinstance(entry, dict), "expected an object", where)
        extra = sorted(set(entry) - {"from", "to", "sign", "weight"})
        _expect(not extra, f"unknown keys {extra}", where)
        for key in ("from", "to", "sign"):
            _expect(key in entry, "missing required key", f"{where}.{key}")
            _expect(isinstance(entry[key], str), "expected a string", f"{where}.{key}")
        for key in ("from", "to"):
            _expect(entry[key] in index, f"unknown vertex {entry[key]!r}", f"{where}.{key}")
        _expect(entry["sign"] in ("+", "-"), "sign must be \"+\" or \"-\"", f"{where}.sign")
        weight = entry.get("weight", 1)
        _expect(
            isinstance(weight, int) and not isinstance(weight, bool) and weight >= 1,
            f"weight must be a positive integer, got {weight!r}",
            f"{where}.weight",
        )
        source, target = structure.vertex(entry["from"]), structure.vertex(entry["to"])
        _expect(source.kind != target.kind, "arc must join a place and a transition", where)
        arcs.append(Arc(source, target, weight, Sign.parse(entry["sign"])))

    seen = set()
    for i, arc in enumerate(arcs):
        _expect(arc.key not in seen, "duplicate arc between the same vertices", f"arcs[{i}]")
        seen.add(arc.key)

    marking = doc["initial_marking"]
    _expect(isinstance(marking, dict), "expected an object", "initial_marking")
    _expect(
        set(marking) == {"positive", "negative"},
        "expected exactly the keys 'positive' and 'negative'",
        "initial_marking",
    )
    pos = _counts(marking["positive"], "initial_marking.positive")
    neg = _counts(marking["negative"], "initial_marking.negative")
    for name, vec in (("positive", pos), ("negative", neg)):
        if len(vec) != len(places):
            raise DimensionError(
                f"initial_marking.{name} has {len(vec)} entries but there are "
                f"{len(places)} places"
            )
    structure = SpnStructure(len(places), len(transitions), tuple(arcs), (tuple(places), tuple(transitions)))
    return SignedPetriNet(structure, Marking(pos, neg))


def _dump(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def save_model(net: SignedPetriNet) -> str:
    s = net.structure
    places, transitions = s.labels
    lines = ["{"]
    lines.append(f'  "places": {_dump(list(places))},')
    lines.append(f'  "transitions": {_dump(list(transitions))},')
    if s.arcs:
        lines.append('  "arcs": [')
        rendered = [
            "    {"
            f'"from": {_dump(s.label(a.source))}, "to": {_dump(s.label(a.target))}, '
            f'"sign": "{a.sign}", "weight": {a.weight}'
            "}"
            for a in s.arcs
        ]
        lines.append(",\n".join(rendered))
        lines.append("  ],")
    else:
        lines.append('  "arcs": [],')
    m = net.initial_marking
    lines.append('  "initial_marking": {')
    lines.append(f'    "positive": {_dump(list(m.positive))},')
    lines.append(f'    "negative": {_dump(list(m.negative))}')
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def canonicalize(text: str) -> str:
    return save_model(load_model(text))


def read_model(path: str | Path) -> SignedPetriNet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ModelFormatError(f"not UTF-8: {exc}") from None
    return load_model(text)


def write_model(net: SignedPetriNet, path: str | Path) -> None:
    Path(path).write_text(save_model(net), encoding="utf-8")
