"""Graph document files and the bundled figure fixtures.

A graph document is a JSON object with fields `order` (int), `edges`
(list of [u, v, weight] triples), optional `partition` ({"cells": [[...],
...], "d": [...]}) and optional free-form `metadata`. Vertex indices are
0-based; fixtures carry a `labels` metadata entry mapping to the 1-based
labels used in figures. Writing is canonical (sorted edges, plain JSON
float formatting), so read-write round trips are byte identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ParallelEdges, ParseError
from .graph import WeightedDigraph
from .switching import SeidelPartition


@dataclass(frozen=True)
class GraphDocument:
    order: int
    edges: tuple[tuple[int, int, float], ...]
    partition: SeidelPartition | None = None
    metadata: dict = field(default_factory=dict)

    def graph(self) -> WeightedDigraph:
        return WeightedDigraph.from_edges(self.order, self.edges)

    @classmethod
    def from_graph(
        cls,
        g: WeightedDigraph,
        partition: SeidelPartition | None = None,
        metadata: dict | None = None,
    ) -> "GraphDocument":
        triples = tuple(sorted((u, v, w) for (u, v), w in g.edges.items()))
        return cls(g.order, triples, partition, metadata or {})


def _parse_document(raw: dict, source: str) -> GraphDocument:
    if not isinstance(raw, dict):
        raise ParseError(f"{source}: top level must be an object")
    try:
        order = raw["order"]
        edge_items = raw["edges"]
    except KeyError as missing:
        raise ParseError(f"{source}: missing required field {missing}") from None
    if not isinstance(order, int) or order < 1:
        raise ParseError(f"{source}: order must be a positive integer")
    seen: set[tuple[int, int]] = set()
    edges = []
    for item in edge_items:
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError(f"{source}: edge entries must be [u, v, weight], got {item!r}")
        u, v, w = item
        if not isinstance(u, int) or not isinstance(v, int):
            raise ParseError(f"{source}: edge endpoints must be integers, got {item!r}")
        if not 0 <= u < order or not 0 <= v < order:
            raise ParseError(f"{source}: edge ({u}, {v}) outside 0..{order - 1}")
        if (u, v) in seen:
            raise ParallelEdges(f"{source}: duplicate ordered pair ({u}, {v})")
        seen.add((u, v))
        try:
            w = float(w)
        except (TypeError, ValueError):
            raise ParseError(f"{source}: edge ({u}, {v}) weight {w!r} is not a number") from None
        if w == 0.0:
            raise ParseError(f"{source}: edge ({u}, {v}) has zero weight")
        edges.append((u, v, w))
    partition = None
    if raw.get("partition") is not None:
        p = raw["partition"]
        try:
            partition = SeidelPartition(
                cells=tuple(tuple(c) for c in p["cells"]),
                d_cell=tuple(p.get("d", ())),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"{source}: malformed partition: {exc}") from None
    metadata = raw.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ParseError(f"{source}: metadata must be an object")
    return GraphDocument(order, tuple(edges), partition, metadata)


def loads_document(text: str, source: str = "<string>") -> GraphDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno}: {exc.msg}") from None
    return _parse_document(raw, source)


def read_document(path: str | Path) -> GraphDocument:
    path = Path(path)
    return loads_document(path.read_text(), source=str(path))


def dumps_document(doc: GraphDocument) -> str:
    """Canonical rendering: sorted edges, one per line, trailing newline."""
    lines = ["{", f'  "order": {doc.order},']
    edge_lines = [f"    [{u}, {v}, {json.dumps(w)}]" for u, v, w in sorted(doc.edges)]
    if edge_lines:
        lines.append('  "edges": [')
        lines.append(",\n".join(edge_lines))
        lines.append("  ]" + ("," if doc.partition is not None or doc.metadata else ""))
    else:
        lines.append('  "edges": []' + ("," if doc.partition is not None or doc.metadata else ""))
    if doc.partition is not None:
        cells = json.dumps([list(c) for c in doc.partition.cells])
        d = json.dumps(list(doc.partition.d_cell))
        lines.append(f'  "partition": {{"cells": {cells}, "d": {d}}}'
                     + ("," if doc.metadata else ""))
    if doc.metadata:
        meta = json.dumps(doc.metadata, indent=4, sort_keys=True)
        lines.append(f'  "metadata": {meta.replace(chr(10), chr(10) + "  ")}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_document(doc: GraphDocument, path: str | Path) -> None:
    Path(path).write_text(dumps_document(doc))


def fixture_names() -> list[str]:
    root = resources.files("seidelkit") / "fixtures"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".graph"))


def load_fixture(name: str) -> GraphDocument:
    """Bundled figure fixture by file name, e.g. 'fig2.graph'."""
    if not name.endswith(".graph"):
        name += ".graph"
    text = (resources.files("seidelkit") / "fixtures" / name).read_text()
    return loads_document(text, source=f"fixture:{name}")
