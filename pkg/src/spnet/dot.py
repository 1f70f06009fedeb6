"""Graphviz export.

Places are circles, transitions are black bars.  Positive arcs are solid and
negative arcs dashed.  Tokens are drawn inside places as filled dots (positive)
and open dots (negative); beyond a handful they are written as counts.
"""

from __future__ import annotations

from .model import Marking, Sign, SignedPetriNet, check_marking

FILLED, OPEN = "●", "○"
_MAX_DOTS = 6


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _tokens(pos: int, neg: int) -> str:
    if pos + neg == 0:
        return ""
    if pos + neg <= _MAX_DOTS:
        return FILLED * pos + OPEN * neg
    parts = []
    if pos:
        parts.append(f"{FILLED}{pos}")
    if neg:
        parts.append(f"{OPEN}{neg}")
    return " ".join(parts)


def export_dot(net: SignedPetriNet, marking: Marking | None = None) -> str:
    s = net.structure
    marking = net.initial_marking if marking is None else marking
    check_marking(s, marking)
    ids = {v: f"{'p' if v.is_place else 't'}{v.index}" for v in s.vertices}
    out = ["digraph spn {", "  rankdir=LR;"]
    for p in s.places:
        tokens = _tokens(*marking[p])
        label = _quote(s.label(p))
        if tokens:
            label = label[:-1] + f'\\n{tokens}"'
        out.append(f"  {ids[p]} [shape=circle, label={label}];")
    for t in s.transitions:
        out.append(
            f"  {ids[t]} [shape=box, style=filled, fillcolor=black, label=\"\", "
            f"width=0.08, height=0.5, xlabel={_quote(s.label(t))}];"
        )
    for a in s.arcs:
        attrs = ["style=solid" if a.sign is Sign.POS else "style=dashed"]
        if a.weight != 1:
            attrs.append(f"label={_quote(str(a.weight))}")
        out.append(f"  {ids[a.source]} -> {ids[a.target]} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"
