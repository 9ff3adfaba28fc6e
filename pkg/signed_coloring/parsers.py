"""
Readers and writers for the signed graph (.sg) and coloring (.col) text formats.

Signed graph file::

    c family=wheel
    c hub=1
    p signed 5 8
    e 1 2 +
    e 1 3 -

Coloring file::

    p coloring 3 4
    i 1 1 2 0
    i 2 1 2 0

Vertices are 1-indexed in files and 0-indexed in memory. ``c key=value``
lines carry metadata; other ``c`` lines are comments.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterator, Optional

from .exceptions import BadColoringFile, BadSign, GraphSyntaxError, HeaderMismatch
from .models import NEGATIVE, POSITIVE, Graph, Incidence, IncidenceColoring, Signature, SignedGraph

logger = logging.getLogger(__name__)

# metadata keys whose values are vertex ids (shifted to 0-indexed on read)
VERTEX_KEYS = {"hub", "hubs", "left", "right", "center"}

SIGN_TOKENS = {"+": POSITIVE, "-": NEGATIVE}

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class SignedGraphFile:
    signed_graph: SignedGraph
    metadata: dict[str, Any] = field(default_factory=dict)


def _tokens(line: str) -> list[tuple[str, int]]:
    """Tokens with their 1-based column."""
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _lines(text: str) -> Iterator[tuple[int, list[tuple[str, int]]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(raw)
        if tokens:
            yield number, tokens


def _int_token(token: tuple[str, int], line: int, what: str, error=GraphSyntaxError) -> int:
    text, column = token
    try:
        return int(text)
    except ValueError:
        raise error(f"{what} must be an integer, got {text!r}", line, column)


def _parse_metadata_value(key: str, value: str) -> Any:
    parts = [p for p in value.split(",") if p != ""]
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        return value
    if key in VERTEX_KEYS:
        numbers = [x - 1 for x in numbers]
    if "," in value:
        return numbers
    return numbers[0] if numbers else value


def _format_metadata_value(key: str, value: Any) -> str:
    if isinstance(value, (list, tuple)):
        items = [x + 1 if key in VERTEX_KEYS else x for x in value]
        # trailing comma keeps a one-element list a list on re-read
        return ",".join(str(x) for x in items) + ("," if len(items) == 1 else "")
    if key in VERTEX_KEYS and isinstance(value, int):
        return str(value + 1)
    return str(value)


def parse_signed_graph_file(text: str) -> SignedGraphFile:
    """
    Parse a signed graph file together with its metadata comments.

    Args:
        text: Contents of a .sg file

    Returns:
        SignedGraphFile with 0-indexed vertices and metadata values parsed

    Raises:
        GraphSyntaxError: malformed line (with line and column)
        BadSign: sign token other than + or -
        HeaderMismatch: edge count differs from the header
        DuplicateEdge, SelfLoop: simple-graph violations
    """
    metadata: dict[str, Any] = {}
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    signs: list[int] = []

    for number, tokens in _lines(text):
        kind, column = tokens[0]
        if kind == "c":
            if len(tokens) == 2 and "=" in tokens[1][0]:
                key, _, value = tokens[1][0].partition("=")
                metadata[key] = _parse_metadata_value(key, value)
            continue
        if kind == "p":
            if header is not None:
                raise GraphSyntaxError("second problem line", number, column)
            if len(tokens) != 4 or tokens[1][0] != "signed":
                raise GraphSyntaxError("expected 'p signed N M'", number, column)
            n = _int_token(tokens[2], number, "vertex count")
            m = _int_token(tokens[3], number, "edge count")
            if n < 1 or m < 0:
                raise GraphSyntaxError(f"invalid header counts {n} {m}", number, tokens[2][1])
            header = (n, m)
            continue
        if kind == "e":
            if header is None:
                raise GraphSyntaxError("edge line before the problem line", number, column)
            if len(tokens) != 4:
                raise GraphSyntaxError("expected 'e U V SIGN'", number, column)
            u = _int_token(tokens[1], number, "vertex")
            v = _int_token(tokens[2], number, "vertex")
            for w, tok in ((u, tokens[1]), (v, tokens[2])):
                if not 1 <= w <= header[0]:
                    raise GraphSyntaxError(f"vertex {w} outside 1..{header[0]}", number, tok[1])
            sign_text, sign_column = tokens[3]
            if sign_text not in SIGN_TOKENS:
                raise BadSign(f"sign must be '+' or '-', got {sign_text!r}", number, sign_column)
            edges.append((u - 1, v - 1))
            signs.append(SIGN_TOKENS[sign_text])
            continue
        raise GraphSyntaxError(f"unknown line type {kind!r}", number, column)

    if header is None:
        raise GraphSyntaxError("missing problem line 'p signed N M'", 1)
    if len(edges) != header[1]:
        raise HeaderMismatch(f"header declares {header[1]} edges, file has {len(edges)}")

    sg = SignedGraph(Graph(header[0], tuple(edges)), Signature(tuple(signs)))
    logger.debug(f"Parsed signed graph: {sg.vertex_count} vertices, {sg.edge_count} edges")
    return SignedGraphFile(sg, metadata)


def parse_signed_graph(text: str) -> SignedGraph:
    return parse_signed_graph_file(text).signed_graph


def serialize_signed_graph(sg: SignedGraph, metadata: Optional[dict[str, Any]] = None) -> str:
    """Metadata comments, the problem line, then one edge line per edge in id order."""
    lines = [f"c {key}={_format_metadata_value(key, value)}" for key, value in (metadata or {}).items()]
    lines.append(f"p signed {sg.vertex_count} {sg.edge_count}")
    for idx, (u, v) in enumerate(sg.graph.edges):
        lines.append(f"e {u + 1} {v + 1} {'+' if sg.sign(idx) == POSITIVE else '-'}")
    return "\n".join(lines) + "\n"


def load_signed_graph(path: Path) -> SignedGraphFile:
    """
    Load a signed graph file with its metadata comments.

    Args:
        path: Path to the .sg file

    Returns:
        SignedGraphFile with the signed graph and its metadata

    Raises:
        FileNotFoundError: if the file does not exist
        GraphSyntaxError: if the file is malformed
    """
    if not path.exists():
        raise FileNotFoundError(f"Signed graph file not found: {path}")
    logger.info(f"Loading signed graph from {path}")
    return parse_signed_graph_file(path.read_text(encoding="utf-8"))


def parse_coloring(text: str, sg: SignedGraph) -> IncidenceColoring:
    """
    Parse a coloring file against the graph it colors.

    Colors are not checked against M_n here; verify_coloring reports them.

    Raises:
        BadColoringFile: malformed record, unknown edge or repeated incidence
        HeaderMismatch: record count differs from the header
    """
    header: Optional[tuple[int, int]] = None
    assignment: dict[Incidence, int] = {}

    for number, tokens in _lines(text):
        kind, column = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if header is not None or len(tokens) != 4 or tokens[1][0] != "coloring":
                raise BadColoringFile("expected a single 'p coloring N R' line", number, column)
            n = _int_token(tokens[2], number, "color count", BadColoringFile)
            records = _int_token(tokens[3], number, "record count", BadColoringFile)
            header = (n, records)
            continue
        if kind != "i":
            raise BadColoringFile(f"unknown line type {kind!r}", number, column)
        if header is None:
            raise BadColoringFile("record before the problem line", number, column)
        if len(tokens) != 5:
            raise BadColoringFile("expected 'i VERTEX U V COLOR'", number, column)
        vertex, u, v, color = (
            _int_token(tok, number, what, BadColoringFile)
            for tok, what in zip(tokens[1:], ("vertex", "endpoint", "endpoint", "color"))
        )
        edge = sg.graph.edge_id(u - 1, v - 1) if 1 <= u <= sg.vertex_count and 1 <= v <= sg.vertex_count else None
        if edge is None:
            raise BadColoringFile(f"no edge {u} {v} in the graph", number, tokens[2][1])
        if vertex not in (u, v):
            raise BadColoringFile(f"vertex {vertex} is not an endpoint of edge {u} {v}", number, tokens[1][1])
        inc = Incidence(vertex - 1, edge)
        if inc in assignment:
            raise BadColoringFile(f"incidence of vertex {vertex} on edge {u} {v} repeated", number, column)
        assignment[inc] = color

    if header is None:
        raise BadColoringFile("missing problem line 'p coloring N R'", 1)
    if len(assignment) != header[1]:
        raise HeaderMismatch(f"header declares {header[1]} records, file has {len(assignment)}")
    return IncidenceColoring(header[0], assignment)


def serialize_coloring(sg: SignedGraph, c: IncidenceColoring) -> str:
    """Records ordered by edge id, lower endpoint first."""
    lines = [f"p coloring {c.n} {len(c.assignment)}"]
    for idx, (u, v) in enumerate(sg.graph.edges):
        a, b = sorted((u, v))
        for w in (a, b):
            inc = Incidence(w, idx)
            if inc in c.assignment:
                lines.append(f"i {w + 1} {a + 1} {b + 1} {c.assignment[inc]}")
    return "\n".join(lines) + "\n"


def load_coloring(path: Path, sg: SignedGraph) -> IncidenceColoring:
    """
    Load a coloring file for a signed graph.

    Args:
        path: Path to the .col file
        sg: Signed graph the coloring refers to

    Returns:
        IncidenceColoring keyed by 0-indexed incidences

    Raises:
        FileNotFoundError: if the file does not exist
        BadColoringFile: if a record is malformed or names an unknown edge
    """
    if not path.exists():
        raise FileNotFoundError(f"Coloring file not found: {path}")
    logger.info(f"Loading coloring from {path}")
    return parse_coloring(path.read_text(encoding="utf-8"), sg)
