"""DOT export for complexes and link graphs."""

from __future__ import annotations

from .complexes import PreComplex
from .links import LinkGraph


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot_complex(c: PreComplex) -> str:
    """The 1-skeleton as a digraph, edges labeled by id, in stored order."""
    lines = ["digraph complex {"]
    for v in c.vertices:
        lines.append(f"  {_quote(v)};")
    for e, (tail, head) in c.edges.items():
        lines.append(f"  {_quote(tail)} -> {_quote(head)} [label={_quote(e)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot_link(lg: LinkGraph) -> str:
    """A link graph as an undirected graph; edges carry the face id and
    traversal index of the corner they came from."""
    lines = ["graph " + _quote(f"link_{lg.center}") + " {"]
    for lv in lg.vertices:
        lines.append(f"  {_quote(lv.label(lv.edge in lg.loops))};")
    for le in lg.edges:
        u = le.u.label(le.u.edge in lg.loops)
        w = le.w.label(le.w.edge in lg.loops)
        lines.append(
            f"  {_quote(u)} -- {_quote(w)} [label={_quote(f'{le.face}#{le.pos}')}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
