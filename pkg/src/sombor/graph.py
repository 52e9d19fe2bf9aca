"""Graphs, rooted trees, Sombor index evaluation, canonical forms and edge-list I/O."""

from __future__ import annotations

import math
import re
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Edge = Tuple[int, int]
Root = Union[int, Tuple[int, int]]
CanonicalCode = str


class GraphFormatError(ValueError):
    """Raised on malformed edge-list text or invalid graph construction."""


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1`` with sorted adjacency tuples."""

    n: int
    adj: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphFormatError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphFormatError(f"self-loop at {v}")
            if len(set(nbrs)) != len(nbrs):
                raise GraphFormatError(f"duplicate edge at {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise GraphFormatError(f"asymmetric or out-of-range edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {u}-{v} out of range for n={n}")
            if v in rows[u]:
                raise GraphFormatError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def degree_sequence(self) -> Tuple[int, ...]:
        """Degrees sorted non-increasing."""
        return tuple(sorted(self.degrees(), reverse=True))

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_unicyclic(self) -> bool:
        return self.n >= 3 and self.m == self.n and self.is_connected()

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def with_edges(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> "Graph":
        """Copy with ``remove`` deleted and ``add`` inserted; raises on a missing or duplicate edge."""
        edges = {frozenset(e) for e in self.edges()}
        for u, v in remove:
            key = frozenset((u, v))
            if key not in edges:
                raise GraphFormatError(f"edge {u}-{v} not present")
            edges.remove(key)
        for u, v in add:
            key = frozenset((u, v))
            if u == v or key in edges:
                raise GraphFormatError(f"edge {u}-{v} would be a loop or duplicate")
            edges.add(key)
        return Graph.from_edges(self.n, (tuple(e) for e in edges))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def spider(*legs: int) -> Graph:
    """Center 0 with pendent paths of the given lengths."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


# ---------------------------------------------------------------------------
# Sombor index


@dataclass(frozen=True)
class EdgeTypeMultiset:
    """Multiset of unordered endpoint-degree pairs ``(a, b)`` with ``a <= b``.

    Stored as a sorted tuple of ``((a, b), count)`` so it hashes and compares exactly.
    """

    items: Tuple[Tuple[Edge, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[Edge, int]) -> "EdgeTypeMultiset":
        norm: Counter = Counter()
        for (a, b), c in counts.items():
            if c:
                norm[(min(a, b), max(a, b))] += c
        return cls(tuple(sorted(norm.items())))

    @property
    def counts(self) -> dict:
        return dict(self.items)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.items)

    def sombor(self, alpha: float = 0.5) -> float:
        terms = [c * float(a * a + b * b) ** alpha for (a, b), c in self.items]
        return math.fsum(terms)

    def to_json(self) -> list:
        return [[a, b, c] for (a, b), c in self.items]


@dataclass(frozen=True)
class SomborValue:
    value: float
    alpha: float
    edge_types: EdgeTypeMultiset

    def same_as(self, other: "SomborValue") -> bool:
        """Exact equality via edge-type multisets."""
        return self.edge_types == other.edge_types


def edge_type_multiset(g: Graph) -> EdgeTypeMultiset:
    deg = g.degrees()
    counts: Counter = Counter()
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        counts[(a, b) if a <= b else (b, a)] += 1
    return EdgeTypeMultiset(tuple(sorted(counts.items())))


def sombor_index(g: Graph, alpha: float = 0.5) -> SomborValue:
    ets = edge_type_multiset(g)
    return SomborValue(ets.sombor(alpha), alpha, ets)


def sombor(g: Graph, alpha: float = 0.5) -> float:
    """Shortcut returning only the float value."""
    return sombor_index(g, alpha).value


# ---------------------------------------------------------------------------
# Canonical forms (AHU from the center)


def tree_centers(t: Graph) -> list:
    """One or two central vertices, found by repeatedly stripping leaves."""
    n = t.n
    if n <= 2:
        return list(range(n))
    deg = list(t.degrees())
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for v in t.adj[u]:
                deg[v] -= 1
                if deg[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def _ahu(t: Graph, root: int, blocked: int) -> str:
    # Iterative post-order so deep paths do not hit the recursion limit.
    order = []
    parent = {root: blocked}
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for v in t.adj[u]:
            if v != parent[u]:
                parent[v] = u
                stack.append(v)
    code: dict = {}
    for u in reversed(order):
        kids = sorted(code[v] for v in t.adj[u] if v != parent[u])
        code[u] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_form(t: Graph) -> CanonicalCode:
    """AHU code of a tree rooted at its center (or center edge); equal iff isomorphic."""
    if not t.is_tree():
        raise NotATreeError("canonical_form requires a tree")
    centers = tree_centers(t)
    if len(centers) == 1:
        return "V" + _ahu(t, centers[0], -1)
    a, b = centers
    ca, cb = sorted((_ahu(t, a, b), _ahu(t, b, a)))
    return "E" + ca + cb


def rooted_code(rt: "RootedTree") -> CanonicalCode:
    """Canonical code of a rooted tree (root-preserving isomorphism)."""
    t = rt.tree
    if isinstance(rt.root, int):
        return "V" + _ahu(t, rt.root, -1)
    a, b = rt.root
    ca, cb = sorted((_ahu(t, a, b), _ahu(t, b, a)))
    return "E" + ca + cb


# ---------------------------------------------------------------------------
# Rooted views


@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: Root
    parent: Tuple[Optional[int], ...]
    level: Tuple[int, ...]

    def children(self, v: int) -> Tuple[int, ...]:
        p = self.parent[v]
        if isinstance(self.root, tuple) and v in self.root:
            other = self.root[1] if v == self.root[0] else self.root[0]
            return tuple(u for u in self.tree.adj[v] if u != other)
        return tuple(u for u in self.tree.adj[v] if u != p)

    def root_vertices(self) -> Tuple[int, ...]:
        return (self.root,) if isinstance(self.root, int) else tuple(self.root)

    def depth(self) -> int:
        return max(self.level)

    def levels(self) -> list:
        """Vertices grouped by level, index 0 holding level 1."""
        out: list = [[] for _ in range(self.depth())]
        for v, lv in enumerate(self.level):
            out[lv - 1].append(v)
        return out

    def branch(self, v: int) -> set:
        """Vertex set of the complete branch T_v (v and its descendants)."""
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for c in self.children(u):
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return seen

    def is_ancestor(self, a: int, v: int) -> bool:
        """True if ``a`` lies on the path from ``v`` up to the root (inclusive of ``v``)."""
        while v is not None:
            if v == a:
                return True
            v = self.parent[v]
        return False


def rooted_view(t: Graph, root: Root) -> RootedTree:
    if not t.is_tree():
        raise NotATreeError("rooted_view requires a tree")
    parent: list = [None] * t.n
    level = [0] * t.n
    if isinstance(root, tuple):
        a, b = root
        if not (0 <= a < t.n and 0 <= b < t.n) or not t.has_edge(a, b):
            raise ValueError(f"edge root {root} is not an edge")
        starts = [a, b]
        blocked = {a: b, b: a}
    else:
        if not 0 <= root < t.n:
            raise ValueError(f"root {root} not in graph")
        starts = [root]
        blocked = {root: -1}
    queue = deque()
    for s in starts:
        level[s] = 1
        queue.append(s)
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if v == blocked.get(u) or v == parent[u]:
                continue
            parent[v] = u
            level[v] = level[u] + 1
            queue.append(v)
    return RootedTree(t, root, tuple(parent), tuple(level))


def all_roots(t: Graph) -> list:
    """Every vertex root followed by every edge root, in sorted order."""
    return list(range(t.n)) + sorted(t.edges())


@dataclass(frozen=True)
class LeveledDegreeSequence:
    levels: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "levels", tuple(tuple(sorted(lv, reverse=True)) for lv in self.levels)
        )

    @property
    def edge_rooted(self) -> bool:
        return len(self.levels[0]) == 2

    @property
    def order(self) -> int:
        return sum(len(lv) for lv in self.levels)

    def consistency_error(self) -> Optional[str]:
        """Describe the first violated structural constraint, or None if consistent."""
        if not self.levels or len(self.levels[0]) not in (1, 2):
            return "first level must hold one or two vertices"
        if any(d < 0 for lv in self.levels for d in lv):
            return "negative degree"
        if any(not lv for lv in self.levels):
            return "empty level"
        if self.order == 1:
            return None if self.levels == ((0,),) else "single vertex must have degree 0"
        if any(d < 1 for lv in self.levels for d in lv):
            return "degrees must be positive"
        for i, lv in enumerate(self.levels):
            if i == 0 and not self.edge_rooted:
                expected = lv[0]
            else:
                expected = sum(d - 1 for d in lv)
            have = len(self.levels[i + 1]) if i + 1 < len(self.levels) else 0
            if have != expected:
                return f"level {i + 2} has {have} vertices, expected {expected}"
        return None

    def is_consistent(self) -> bool:
        return self.consistency_error() is None


def leveled_degree_sequence(rt: RootedTree) -> LeveledDegreeSequence:
    deg = rt.tree.degrees()
    return LeveledDegreeSequence(tuple(tuple(deg[v] for v in lv) for lv in rt.levels()))


# ---------------------------------------------------------------------------
# Edge-list text format and DOT export

_LINE = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not re.fullmatch(r"\d+", line):
                raise GraphFormatError(f"line {lineno}: expected vertex count, got {raw!r}")
            n = int(line)
            continue
        m = _LINE.match(line)
        if not m:
            raise GraphFormatError(f"line {lineno}: malformed edge {raw!r}")
        u, v = int(m.group(1)), int(m.group(2))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range in {raw!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop {raw!r}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("empty input")
    try:
        return Graph.from_edges(n, edges)
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def export_dot(g: Graph, name: str = "G") -> str:
    deg = g.degrees()
    out = [f"graph {name} {{"]
    for v in range(g.n):
        out.append(f'  {v} [label="{v} (d={deg[v]})"];')
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
