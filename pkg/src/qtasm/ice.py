"""Square-ice graphs, their ice-rule states and exact partition functions.

Geometry conventions
--------------------
Every tetravalent vertex lists its four edge slots counterclockwise; for a
grid crossing that is (E, N, W, S).  The vertex label sits in the quadrant
between slot ``quadrant`` and slot ``quadrant + 1``.  For a crossing of a
horizontal line with parameter ``h`` and a vertical line with parameter
``v`` the label is ``h / v`` in the north-east quadrant.

A vertex weight depends only on which two slots point inward, read
relative to the label quadrant (see :data:`WEIGHT_TABLE`):

* inward slots opposite each other: ``sigma(a**2)``;
* inward slots bounding the label quadrant or the opposite one:
  ``sigma(a * label)``;
* inward slots bounding either of the two remaining quadrants:
  ``sigma(a / label)``.

This assignment is the one for which the three-vertex Yang-Baxter relation
holds exactly when ``x*y*z == a`` and for which the order-3 quarter-turn
pattern gives ``sigma(a) * sigma(a**2)``; both are part of the test suite.

Bivalent vertices (on the bent lines of the quarter-turn patterns) have
weight 1 and force their two edges to be both inward or both outward.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from qtasm import kernels
from qtasm.exact import LaurentPoly, power, product, sigma
from qtasm.kernels import SearchLimitExceeded

__all__ = [
    "Pattern", "Vertex", "Edge", "IceGraph", "IceState", "WEIGHT_TABLE",
    "build_pattern", "enumerate_states", "partition_function", "symbolic_point",
    "z_qt", "z_dwbc", "z_ht", "yang_baxter_sides", "yang_baxter_check",
    "PatternSizeError", "SearchLimitExceeded",
]

E, N, W, S = 0, 1, 2, 3

builtin_enumerate = enumerate


class Pattern(enum.Enum):
    DWBC = "dwbc"
    QT_EVEN = "qt-even"
    QT_ODD = "qt-odd"
    HT_ODD = "ht-odd"


class PatternSizeError(ValueError):
    pass


# Weight class of a tetravalent vertex, keyed by its inward-slot pattern
# rotated so that the label quadrant lies between positions 0 and 1.
WEIGHT_TABLE: dict[tuple[bool, bool, bool, bool], str] = {
    (True, False, True, False): "c",
    (False, True, False, True): "c",
    (True, True, False, False): "label",
    (False, False, True, True): "label",
    (False, True, True, False): "inverse",
    (True, False, False, True): "inverse",
}

_CLASS_INDEX = {"c": 0, "label": 1, "inverse": 2}


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str  # "tetravalent" or "bivalent"
    edges: tuple[int, ...]
    quadrant: int = 0
    label: tuple[tuple[str, int], ...] = ()
    name: str = ""

    def label_value(self, point: Mapping[str, object]):
        return product((power(point[v], k) for v, k in self.label), 1)


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int | None
    head: int | None
    fixed: bool | None = None  # True: oriented tail -> head


@dataclass(frozen=True)
class IceState:
    """One admissible orientation; ``orientation[e]`` is True when edge ``e`` runs tail -> head."""

    orientation: tuple[bool, ...]

    def inward(self, graph: "IceGraph", vertex: Vertex) -> tuple[bool, ...]:
        out = []
        for e in vertex.edges:
            edge = graph.edges[e]
            out.append(self.orientation[e] == (edge.head == vertex.id))
        return tuple(out)


class IceGraph:
    """An immutable ice graph.  States are computed on first use and cached."""

    def __init__(self, pattern: Pattern | None, size: int, vertices: Sequence[Vertex],
                 edges: Sequence[Edge], variables: Sequence[str]):
        self.pattern = pattern
        self.size = size
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.variables = tuple(variables)
        self._states: list[IceState] | None = None
        self._classes: dict = {}
        self._check()

    def _check(self) -> None:
        for v in self.vertices:
            want = 4 if v.kind == "tetravalent" else 2
            if len(v.edges) != want or len(set(v.edges)) != want:
                raise ValueError(f"vertex {v.name or v.id} has edges {v.edges}")
            for e in v.edges:
                if v.id not in (self.edges[e].tail, self.edges[e].head):
                    raise ValueError(f"edge {e} does not meet vertex {v.id}")
        for e in self.edges:
            if (e.tail is None or e.head is None) and e.fixed is None:
                raise ValueError(f"boundary edge {e.id} has no fixed orientation")

    @property
    def tetravalent(self) -> list[Vertex]:
        return [v for v in self.vertices if v.kind == "tetravalent"]

    def __repr__(self):
        tag = self.pattern.value if self.pattern else "custom"
        return f"IceGraph({tag}, {self.size}, V={len(self.tetravalent)}, E={len(self.edges)})"

    # ---- compilation for the search kernel

    def _compile(self):
        """Union edges through bivalent vertices, returning kernel inputs.

        ``rep[e] = (root, parity)`` means ``value(e) = value(root) ^ parity``,
        where value 1 is the tail -> head orientation.
        """
        parent = list(range(len(self.edges)))
        par = [0] * len(self.edges)

        def find(e):
            p = 0
            while parent[e] != e:
                p ^= par[e]
                e = parent[e]
            return e, p

        for v in self.vertices:
            if v.kind != "bivalent":
                continue
            e1, e2 = v.edges
            # inward at v: value == (head == v); equal inwardness gives value2 = value1 ^ rel
            rel = int(self.edges[e1].head != v.id) ^ int(self.edges[e2].head != v.id)
            (r1, p1), (r2, p2) = find(e1), find(e2)
            if r1 == r2:
                if p1 ^ p2 != rel:
                    raise ValueError("inconsistent bivalent cycle")
                continue
            parent[r2] = r1
            par[r2] = p1 ^ p2 ^ rel

        rep = [find(e) for e in range(len(self.edges))]
        roots = sorted({r for r, _ in rep})
        index = {r: k for k, r in builtin_enumerate(roots)}
        nvar = len(roots)
        fixed = [-1] * nvar
        for e, (r, p) in builtin_enumerate(rep):
            f = self.edges[e].fixed
            if f is None:
                continue
            want = int(f) ^ p
            k = index[r]
            if fixed[k] not in (-1, want):
                raise ValueError("boundary orientations contradict each other")
            fixed[k] = want
        slot_var, slot_sign = [], []
        for v in self.tetravalent:
            for e in v.edges:
                r, p = rep[e]
                slot_var.append(index[r])
                slot_sign.append(int(self.edges[e].head == v.id) ^ p)
        return rep, index, nvar, slot_var, slot_sign, fixed

    def states(self, max_states: int | None = None) -> list[IceState]:
        if self._states is not None:
            if max_states is not None and len(self._states) > max_states:
                raise SearchLimitExceeded(f"more than {max_states} states")
            return self._states
        rep, index, nvar, slot_var, slot_sign, fixed = self._compile()
        limit = -1 if max_states is None else max_states
        sols = kernels.ice_solutions(nvar, slot_var, slot_sign, fixed, limit)
        self._states = [IceState(tuple(bool(sol[index[r]] ^ p) for r, p in rep)) for sol in sols]
        return self._states

    def classes(self, table: Mapping, max_states: int | None = None) -> list[tuple[int, ...]]:
        """Per state, the weight class index of every tetravalent vertex under ``table``."""
        key = tuple(sorted(table.items()))
        cached = self._classes.get(key)
        if cached is None:
            tet = self.tetravalent
            cached = [tuple(_classify(st.inward(self, v), v.quadrant, table) for v in tet)
                      for st in self.states(max_states)]
            self._classes[key] = cached
        elif max_states is not None and len(cached) > max_states:
            raise SearchLimitExceeded(f"more than {max_states} states")
        return cached


def _rotate(ins: tuple[bool, ...], q: int) -> tuple[bool, ...]:
    return tuple(ins[(q + s) % 4] for s in range(4))


def _classify(ins: tuple[bool, ...], quadrant: int, table: Mapping) -> int:
    return _CLASS_INDEX[table[_rotate(ins, quadrant)]]


# --------------------------------------------------------------------------
# pattern builders


class _Builder:
    def __init__(self):
        self.vertices: list[dict] = []
        self.edges: list[list] = []

    def vertex(self, name, label=(), quadrant=0, kind="tetravalent") -> int:
        nslot = 4 if kind == "tetravalent" else 2
        self.vertices.append(dict(name=name, label=tuple(label), quadrant=quadrant,
                                  kind=kind, slots=[None] * nslot))
        return len(self.vertices) - 1

    def _attach(self, v, s, e):
        if self.vertices[v]["slots"][s] is not None:
            raise ValueError(f"slot {s} of {self.vertices[v]['name']} used twice")
        self.vertices[v]["slots"][s] = e

    def join(self, v1, s1, v2, s2) -> int:
        e = len(self.edges)
        self.edges.append([v1, v2, None])
        self._attach(v1, s1, e)
        self._attach(v2, s2, e)
        return e

    def boundary(self, v, s, inward: bool) -> int:
        e = len(self.edges)
        self.edges.append([None, v, inward])
        self._attach(v, s, e)
        return e

    def bent(self, v1, s1, v2, s2, name) -> int:
        """Join two slots through a bivalent vertex."""
        b = self.vertex(name, kind="bivalent")
        self.join(v1, s1, b, 0)
        self.join(b, 1, v2, s2)
        return b

    def graph(self, pattern, size, variables) -> IceGraph:
        verts = []
        for i, d in builtin_enumerate(self.vertices):
            if any(s is None for s in d["slots"]):
                raise ValueError(f"vertex {d['name']} has an open slot")
            verts.append(Vertex(i, d["kind"], tuple(d["slots"]), d["quadrant"], d["label"], d["name"]))
        edges = [Edge(k, t, h, f) for k, (t, h, f) in builtin_enumerate(self.edges)]
        return IceGraph(pattern, size, verts, edges, variables)


def _ratio(h: str, v: str) -> tuple[tuple[str, int], ...]:
    if h == v:
        return ()
    return ((h, 1), (v, -1))


def _grid(b: _Builder, rows: Sequence[str], cols: Sequence[str], prefix="") -> dict:
    """Crossings of horizontal lines ``rows`` (bottom to top) with vertical lines ``cols``.

    Internal horizontal and vertical edges are joined; outer slots stay open.
    """
    at = {}
    for i, h in builtin_enumerate(rows, 1):
        for j, v in builtin_enumerate(cols, 1):
            at[i, j] = b.vertex(f"{prefix}({i},{j})", _ratio(h, v))
    for i in range(1, len(rows) + 1):
        for j in range(1, len(cols)):
            b.join(at[i, j], E, at[i, j + 1], W)
    for j in range(1, len(cols) + 1):
        for i in range(1, len(rows)):
            b.join(at[i, j], N, at[i + 1, j], S)
    return at


def _qt_odd(n: int) -> IceGraph:
    m = (n - 1) // 2
    xs = [f"x{k}" for k in range(1, m + 2)]
    b = _Builder()
    if m == 0:
        return b.graph(Pattern.QT_ODD, n, xs)
    at = _grid(b, xs[:m], xs)
    for i in range(1, m + 1):
        b.boundary(at[i, 1], W, True)
    for j in range(1, m + 2):
        b.boundary(at[1, j], S, False)
    # the middle line ends at the top of the last column; its direction
    # alternates with the parity of m
    b.boundary(at[m, m + 1], N, m % 2 == 0)
    for i in range(1, m + 1):
        b.bent(at[i, m + 1], E, at[m, i], N, f"b{i}")
    return b.graph(Pattern.QT_ODD, n, xs)


def _qt_even(n: int) -> IceGraph:
    k = n // 2
    xs = [f"x{t}" for t in range(1, k + 1)]
    b = _Builder()
    at = _grid(b, xs, xs)
    for i in range(1, k + 1):
        b.boundary(at[i, 1], W, True)
        b.boundary(at[1, i], S, False)
    for i in range(1, k + 1):
        b.bent(at[i, k], E, at[k, i], N, f"b{i}")
    return b.graph(Pattern.QT_EVEN, n, xs)


def _dwbc(n: int) -> IceGraph:
    xs = [f"x{k}" for k in range(1, n + 1)]
    ys = [f"y{k}" for k in range(1, n + 1)]
    b = _Builder()
    at = _grid(b, xs, ys)
    for i in range(1, n + 1):
        b.boundary(at[i, 1], W, True)
        b.boundary(at[i, n], E, True)
        b.boundary(at[1, i], S, False)
        b.boundary(at[n, i], N, False)
    return b.graph(Pattern.DWBC, n, xs + ys)


def _ht_odd(n: int) -> IceGraph:
    l = (n + 1) // 2
    xs = [f"x{k}" for k in range(1, l + 1)]
    ys = [f"y{k}" for k in range(1, l + 1)]
    b = _Builder()
    if l == 1:
        return b.graph(Pattern.HT_ODD, n, xs + ys)
    R = 2 * l - 1
    rows = [xs[min(r, 2 * l - r) - 1] for r in range(1, R + 1)]
    at = _grid(b, rows, ys[:l - 1])
    # the middle vertical line only meets the lower l-1 rows
    for r in range(1, l):
        at[r, l] = b.vertex(f"({r},{l})", _ratio(rows[r - 1], ys[l - 1]))
        b.join(at[r, l - 1], E, at[r, l], W)
    for r in range(1, l - 1):
        b.join(at[r, l], N, at[r + 1, l], S)
    for r in range(1, R + 1):
        b.boundary(at[r, 1], W, True)
    for j in range(1, l):
        b.boundary(at[1, j], S, False)
        b.boundary(at[R, j], N, False)
    b.boundary(at[1, l], S, False)
    # row r < l turns round and comes back as row 2l - r
    for r in range(1, l):
        b.join(at[r, l], E, at[2 * l - r, l - 1], E)
    # the middle row bends down into the top of the middle column
    b.join(at[l, l - 1], E, at[l - 1, l], N)
    return b.graph(Pattern.HT_ODD, n, xs + ys)


def _validate_size(pattern: Pattern, n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PatternSizeError(f"{pattern.value}: size must be a positive integer, got {n!r}")
    if pattern is Pattern.QT_EVEN and n % 4 != 0:
        raise PatternSizeError(
            f"qt-even: order {n} is not a multiple of 4 (even-order quarter-turn "
            f"symmetric matrices exist only for n = 0 mod 4)")
    if pattern in (Pattern.QT_ODD, Pattern.HT_ODD) and n % 2 == 0:
        raise PatternSizeError(f"{pattern.value}: order {n} must be odd")


@functools.lru_cache(maxsize=None)
def _build(pattern: Pattern, n: int) -> IceGraph:
    return {Pattern.QT_ODD: _qt_odd, Pattern.QT_EVEN: _qt_even,
            Pattern.DWBC: _dwbc, Pattern.HT_ODD: _ht_odd}[pattern](n)


def build_pattern(pattern: Pattern | str, n: int) -> IceGraph:
    """Ice graph of ``pattern`` at order ``n``.

    ``n`` is the matrix order: ``2m+1`` for qt-odd, ``4l`` for qt-even,
    ``l`` for dwbc and ``2l-1`` for ht-odd.
    """
    pattern = Pattern(pattern)
    _validate_size(pattern, n)
    return _build(pattern, n)


def enumerate_states(graph: IceGraph, max_states: int | None = None) -> Iterator[IceState]:
    """All ice-rule orientations of ``graph`` in a fixed search order."""
    yield from graph.states(max_states)


# --------------------------------------------------------------------------
# partition functions


def symbolic_point(graph: IceGraph) -> dict[str, LaurentPoly]:
    names = ("a",) + graph.variables
    return {v: LaurentPoly.var(v) for v in names}


def _vertex_weights(v: Vertex, point: Mapping[str, object], c):
    lab = v.label_value(point)
    a = point["a"]
    return (c, sigma(a * lab), sigma(a / lab))


def partition_function(graph: IceGraph, point: Mapping[str, object] | str,
                       weights: Mapping | None = None, max_states: int | None = None):
    """Sum over states of the product of vertex weights.

    ``point`` maps ``"a"`` and each graph variable to a domain element, or is
    the string ``"symbolic"`` for a Laurent polynomial in all of them.
    ``weights`` overrides :data:`WEIGHT_TABLE` (used by mutation tests).
    """
    if isinstance(point, str):
        if point != "symbolic":
            raise ValueError(f"unknown point mode {point!r}")
        point = symbolic_point(graph)
    missing = [v for v in ("a",) + graph.variables if v not in point]
    if missing:
        raise KeyError(f"point lacks values for {missing}")
    classes = graph.classes(WEIGHT_TABLE if weights is None else weights, max_states)
    c = sigma(point["a"] * point["a"])
    table = [_vertex_weights(v, point, c) for v in graph.tetravalent]
    # group states by their leading vertices so shared prefixes multiply once
    return _trie_sum(classes, table, 0, 1)


def _trie_sum(classes: list[tuple[int, ...]], table, depth: int, prefix):
    if not classes:
        return 0 * prefix
    if depth == len(table):
        return prefix * len(classes)
    groups: dict[int, list] = {}
    for cl in classes:
        groups.setdefault(cl[depth], []).append(cl)
    total = None
    for k in sorted(groups):
        part = _trie_sum(groups[k], table, depth + 1, prefix * table[depth][k])
        total = part if total is None else total + part
    return total


def _point(graph: IceGraph, a, named: Mapping[str, Sequence]) -> dict:
    point = {"a": a}
    for prefix, values in named.items():
        for k, val in builtin_enumerate(values, 1):
            point[f"{prefix}{k}"] = val
    missing = [v for v in graph.variables if v not in point]
    if missing:
        raise ValueError(f"{graph!r} needs values for {missing}")
    return point


def z_qt(n: int, x: Sequence, a, **kw):
    """Quarter-turn partition function of order ``n`` (odd, or a multiple of 4)."""
    if n % 2:
        g = build_pattern(Pattern.QT_ODD, n)
        need = (n - 1) // 2 + 1
    else:
        g = build_pattern(Pattern.QT_EVEN, n)
        need = n // 2
    if len(x) != need:
        raise ValueError(f"order {n} takes {need} spectral parameters, got {len(x)}")
    return partition_function(g, _point(g, a, {"x": x}), **kw)


def z_dwbc(l: int, x: Sequence, y: Sequence, a, **kw):
    if len(x) != l or len(y) != l:
        raise ValueError(f"dwbc({l}) takes {l} x and {l} y values")
    g = build_pattern(Pattern.DWBC, l)
    return partition_function(g, _point(g, a, {"x": x, "y": y}), **kw)


def z_ht(n: int, x: Sequence, y: Sequence, a, **kw):
    """Half-turn partition function of odd order ``n = 2l-1`` with ``l`` x and ``l`` y values."""
    l = (n + 1) // 2
    if len(x) != l or len(y) != l:
        raise ValueError(f"ht-odd({n}) takes {l} x and {l} y values")
    g = build_pattern(Pattern.HT_ODD, n)
    return partition_function(g, _point(g, a, {"x": x, "y": y}), **kw)


# --------------------------------------------------------------------------
# Yang-Baxter


# Each side: vertices as (slot names ccw, label quadrant, label variable),
# internal slot pairs, and the six external slots in a common order.
_YB_LEFT = (
    [(("p.c2+", "p.c1+", "p.c2-", "p.c1-"), 0, "z"),
     (("r.c1+", "r.top", "r.c1-", "r.bot"), 0, "y"),
     (("q.top", "q.c2-", "q.bot", "q.c2+"), 2, "x")],
    [("p.c1+", "r.c1-"), ("p.c2+", "q.c2-"), ("r.bot", "q.top")],
    ["p.c1-", "p.c2-", "r.c1+", "q.c2+", "r.top", "q.bot"],
)
_YB_RIGHT = (
    [(("u.1", "u.2", "u.to_w", "u.to_v"), 0, "z"),
     (("w.top", "w.3", "w.to_v", "w.to_u"), 0, "x"),
     (("v.to_u", "v.to_w", "v.1", "v.bot"), 2, "y")],
    [("u.to_w", "w.to_u"), ("u.to_v", "v.to_u"), ("w.to_v", "v.to_w")],
    ["v.1", "w.3", "u.2", "u.1", "w.top", "v.bot"],
)


def _yb_graph(side, boundary: Sequence[bool]) -> IceGraph:
    verts_spec, internal, external = side
    b = _Builder()
    where = {}
    for slots, q, lab in verts_spec:
        v = b.vertex(slots[0].split(".")[0], ((lab, 1),), quadrant=q)
        for s, name in builtin_enumerate(slots):
            where[name] = (v, s)
    for n1, n2 in internal:
        b.join(*where[n1], *where[n2])
    for name, inward in zip(external, boundary):
        b.boundary(*where[name], inward)
    return b.graph(None, 3, ("x", "y", "z"))


def yang_baxter_sides(x, y, z, a, weights: Mapping | None = None) -> dict:
    """Both three-vertex contractions for each of the 64 boundary assignments."""
    point = {"x": x, "y": y, "z": z, "a": a}
    out = {}
    for bnd in itertools.product((False, True), repeat=6):
        left = partition_function(_yb_graph(_YB_LEFT, bnd), point, weights)
        right = partition_function(_yb_graph(_YB_RIGHT, bnd), point, weights)
        out[bnd] = (left, right)
    return out


def yang_baxter_check(x, y, z, a, weights: Mapping | None = None, *, require: bool = True) -> bool:
    """True when both sides agree on all 64 boundary assignments.

    With ``require`` (the default) the labels must satisfy ``x*y*z == a``.
    """
    if require and x * y * z != a:
        raise ValueError("Yang-Baxter check requires x*y*z == a")
    return all(l == r for l, r in yang_baxter_sides(x, y, z, a, weights).values())
