"""Point sets, unit disk communication graphs and sink selection."""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import ConnectivityError, DomainError, FormatError, ParseError

CENTER = (0.5, 0.5)


@dataclass(frozen=True)
class PointSet:
    points: np.ndarray
    source_id: str = ""

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        object.__setattr__(self, "points", pts)
        pts.setflags(write=False)

    def __len__(self):
        return len(self.points)


def _read_text(stream):
    if isinstance(stream, str):
        return stream
    return stream.read()


def _check_points(rows, lines):
    seen = {}
    for i, ((x, y), ln) in enumerate(zip(rows, lines)):
        if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
            raise DomainError(f"line {ln}: point ({x}, {y}) lies outside the unit square")
        if (x, y) in seen:
            raise DomainError(f"line {ln}: duplicate of point {seen[(x, y)]}")
        seen[(x, y)] = i


def _parse_orlib(text):
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise FormatError("empty input")
    first_line, first = lines[0]
    if len(first) != 1:
        raise ParseError("expected a single point count", first_line)
    try:
        count = int(first[0])
    except ValueError:
        raise ParseError(f"bad point count {first[0]!r}", first_line) from None
    rows, where = [], []
    for ln, toks in lines[1:]:
        if len(toks) != 2:
            raise ParseError(f"expected 'x y', got {' '.join(toks)!r}", ln)
        try:
            rows.append((float(toks[0]), float(toks[1])))
        except ValueError:
            raise ParseError(f"bad coordinate in {' '.join(toks)!r}", ln) from None
        where.append(ln)
    if len(rows) != count:
        raise FormatError(f"declared {count} points, found {len(rows)}")
    return rows, where


def _parse_csv(text):
    reader = csv.reader(io.StringIO(text))
    rows, where = [], []
    header = None
    for ln, rec in enumerate(reader, start=1):
        if not rec or all(not c.strip() for c in rec):
            continue
        if header is None:
            header = [c.strip().lower() for c in rec]
            if header != ["x", "y"]:
                raise ParseError("expected header 'x,y'", ln)
            continue
        if len(rec) != 2:
            raise ParseError(f"expected 2 fields, got {len(rec)}", ln)
        try:
            rows.append((float(rec[0]), float(rec[1])))
        except ValueError:
            raise ParseError(f"bad coordinate in {','.join(rec)!r}", ln) from None
        where.append(ln)
    if header is None:
        raise FormatError("empty input")
    return rows, where


def load_points(stream, format="orlib", source_id=""):
    """Read a point set from text or a file object.

    ``format`` is ``"orlib"`` (point count, then one ``x y`` pair per line)
    or ``"csv"`` (header ``x,y``).
    """
    text = _read_text(stream)
    if not text.strip():
        raise FormatError("empty input")
    if format == "orlib":
        rows, where = _parse_orlib(text)
    elif format == "csv":
        rows, where = _parse_csv(text)
    else:
        raise ValueError(f"unknown format {format!r}")
    _check_points(rows, where)
    return PointSet(np.array(rows, dtype=float).reshape(-1, 2), source_id)


def load_orlib_case(stream, case, source_id=None):
    """Read case number ``case`` (1-based) from a multi-problem OR-Library
    Steiner file: problem count, then per problem a point count and its
    coordinate pairs."""
    tokens = _read_text(stream).split()
    if not tokens:
        raise FormatError("empty input")
    try:
        n_problems = int(tokens[0])
    except ValueError:
        raise FormatError(f"bad problem count {tokens[0]!r}") from None
    if not 1 <= case <= n_problems:
        raise FormatError(f"case {case} not in 1..{n_problems}")
    pos = 1
    for k in range(1, n_problems + 1):
        if pos >= len(tokens):
            raise FormatError(f"file ends before problem {k}")
        n = int(tokens[pos])
        block = tokens[pos + 1: pos + 1 + 2 * n]
        if len(block) != 2 * n:
            raise FormatError(f"problem {k}: declared {n} points, found {len(block) // 2}")
        if k == case:
            rows = [(float(block[2 * i]), float(block[2 * i + 1])) for i in range(n)]
            _check_points(rows, [f"{k}:{i + 1}" for i in range(n)])
            sid = source_id if source_id is not None else f"case{case}"
            return PointSet(np.array(rows, dtype=float), sid)
        pos += 1 + 2 * n
    raise FormatError(f"case {case} not found")  # pragma: no cover


def sink_of(ps):
    """Vertex nearest to the square center; lowest id wins ties."""
    pts = ps.points if isinstance(ps, PointSet) else np.asarray(ps, dtype=float)
    if len(pts) == 0:
        raise DomainError("empty point set")
    d2 = (pts[:, 0] - CENTER[0]) ** 2 + (pts[:, 1] - CENTER[1]) ** 2
    return int(np.argmin(d2))


@dataclass(frozen=True, eq=False)
class Instance:
    """Unit disk graph over a point set, with sink and hop levels.

    ``adjacency[v]`` is a sorted tuple of neighbors; ``arcs`` lists every
    directed pair ``(v, u)`` along an edge with ``v`` not the sink.
    """

    point_set: PointSet
    d: float
    adjacency: tuple
    sink: int
    level: tuple
    neighbor_sets: tuple = field(repr=False)
    arcs: tuple = field(repr=False)

    @property
    def n(self):
        return len(self.adjacency)

    @property
    def points(self):
        return self.point_set.points

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self.neighbor_sets[u]

    def edges(self):
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]


def bfs_levels(adjacency, source):
    level = [-1] * len(adjacency)
    level[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if level[w] < 0:
                level[w] = level[u] + 1
                queue.append(w)
    return level


def udg_adjacency(points, d):
    pts = np.asarray(points, dtype=float)
    diff = pts[:, None, :] - pts[None, :, :]
    d2 = (diff ** 2).sum(axis=-1)
    close = d2 <= d * d
    np.fill_diagonal(close, False)
    return tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in close)


def from_graph(point_set, d, adjacency, sink):
    """Assemble an Instance from a prepared adjacency (used by tests and by
    callers that already hold a graph)."""
    adjacency = tuple(tuple(sorted(nb)) for nb in adjacency)
    for u, nb in enumerate(adjacency):
        for v in nb:
            if v == u or u not in adjacency[v]:
                raise DomainError(f"adjacency not symmetric at ({u}, {v})")
    level = bfs_levels(adjacency, sink)
    for v, lv in enumerate(level):
        if lv < 0:
            raise ConnectivityError(f"vertex {v} is not reachable from sink {sink}", vertex=v)
    arcs = tuple((v, u) for v in range(len(adjacency)) if v != sink for u in adjacency[v])
    return Instance(
        point_set=point_set,
        d=float(d),
        adjacency=adjacency,
        sink=sink,
        level=tuple(level),
        neighbor_sets=tuple(frozenset(nb) for nb in adjacency),
        arcs=arcs,
    )


def build_instance(ps, d):
    if not d > 0:
        raise DomainError(f"critical distance must be positive, got {d}")
    return from_graph(ps, d, udg_adjacency(ps.points, d), sink_of(ps))
