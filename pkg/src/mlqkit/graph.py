"""Graded crystal graphs on filtered multiline queue sets.

Vertices are queues with cached statistics; directed i-edges are nontrivial
f_right_i applications.  Build-time checks assert that every edge preserves
maj and the recording tableau.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinat import compress, conjugate, sort_composition
from .errors import TooFewColumnsError, UsageError
from .collapse import collapse
from .crystal import col_lower, col_raise
from .mlq import MLQ, enumerate_mlq, maj, mlq_type


@dataclass(frozen=True)
class VertexInfo:
    mlq: MLQ
    type: tuple[int, ...]
    strtype: tuple[int, ...]
    maj: int
    record: tuple[tuple[int, ...], ...]


@dataclass
class CrystalGraph:
    n: int
    vertices: list[VertexInfo]
    edges: list[tuple[int, int, int]]  # (source, target, operator index)
    index: dict[MLQ, int] = field(default_factory=dict)

    def components(self) -> list[list[int]]:
        """Undirected connected components, each sorted, ordered by minimum."""
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for v in range(len(self.vertices)):
            groups.setdefault(find(v), []).append(v)
        return [sorted(g) for _, g in sorted(groups.items())]

    def induced(self, keep) -> "CrystalGraph":
        """Subgraph on the vertex subset selected by the predicate."""
        kept = [i for i, v in enumerate(self.vertices) if keep(v)]
        remap = {old: new for new, old in enumerate(kept)}
        vertices = [self.vertices[i] for i in kept]
        edges = [
            (remap[u], remap[v], i)
            for u, v, i in self.edges
            if u in remap and v in remap
        ]
        g = CrystalGraph(self.n, vertices, edges)
        g.index = {v.mlq: i for i, v in enumerate(vertices)}
        return g

    def to_dot(self) -> str:
        palette = [
            "lightblue", "lightgreen", "lightyellow", "lightpink", "lightgray",
            "orange", "cyan", "violet", "wheat", "salmon",
        ]
        colors: dict[tuple[int, ...], str] = {}
        lines = ["digraph crystal {"]
        for i, v in enumerate(self.vertices):
            color = colors.setdefault(v.type, palette[len(colors) % len(palette)])
            label = str([sorted(r) for r in v.mlq.rows]).replace(" ", "")
            typ = "(" + ",".join(str(x) for x in v.type) + ")"
            lines.append(
                f'  v{i} [label="{label}", type="{typ}", maj={v.maj}, '
                f'style=filled, fillcolor={color}];'
            )
        for u, v, i in self.edges:
            lines.append(f"  v{u} -> v{v} [label={i}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _parse_filter(filter_spec: str):
    if filter_spec == "all":
        return lambda info: True
    if filter_spec == "nonwrapping":
        return lambda info: info.maj == 0
    if filter_spec.startswith("type="):
        alpha = tuple(int(x) for x in filter_spec[5:].split(",") if x != "")
        return lambda info: info.type == alpha
    if filter_spec.startswith("strtype="):
        gamma = tuple(int(x) for x in filter_spec[8:].split(",") if x != "")
        return lambda info: info.strtype == gamma
    raise UsageError(f"unknown filter {filter_spec!r}")


def build_graph(lam, n: int, filter_spec: str = "all", check: bool = True) -> CrystalGraph:
    """Crystal graph over the filtered queues of shape lam on n columns.

    Edges are induced: an f_right_i edge appears only when both endpoints
    pass the filter.
    """
    lam = tuple(lam)
    lam_c = conjugate(lam)
    if lam_c and n < lam_c[0]:
        raise TooFewColumnsError(f"need {lam_c[0]} columns, got {n}")
    keep = _parse_filter(filter_spec)

    vertices: list[VertexInfo] = []
    index: dict[MLQ, int] = {}
    for m in enumerate_mlq(lam, n):
        t = mlq_type(m)
        info = VertexInfo(m, t, compress(t), maj(m), collapse(m).record)
        if keep(info):
            index[m] = len(vertices)
            vertices.append(info)

    edges = []
    for u, info in enumerate(vertices):
        for i in range(1, n):
            image, acted = col_lower(info.mlq, i)
            if not acted or image not in index:
                continue
            v = index[image]
            edges.append((u, v, i))
            if check:
                tgt = vertices[v]
                assert tgt.maj == info.maj, "edge changed maj"
                assert tgt.record == info.record, "edge changed the recording tableau"

    g = CrystalGraph(n, vertices, edges)
    g.index = index
    return g


def trace_path(m: MLQ, ops) -> list[dict]:
    """Replay (direction, index) operators, recording each queue and its type.

    direction is 'e<' (column raise) or 'f>' (column lower).  The trace stops
    early, flagged, at the first trivial action.
    """
    table = {"e<": col_raise, "f>": col_lower}
    out = [{"mlq": m, "type": mlq_type(m), "acted": True}]
    for kind, i in ops:
        if kind not in table:
            raise UsageError(f"trace_path supports e< and f>, got {kind!r}")
        m, acted = table[kind](m, i)
        out.append({"mlq": m, "type": mlq_type(m), "acted": acted})
        if not acted:
            break
    return out
