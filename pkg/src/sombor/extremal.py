"""Greedy and alternating greedy trees, plus the local extremality checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .degseq import DegreeSequence, ReducedDegreeSequence, reduce, validate
from .graph import (
    Graph,
    LeveledDegreeSequence,
    Root,
    RootedTree,
    all_roots,
    rooted_view,
)


class InconsistentLevels(ValueError):
    pass


class _Builder:
    def __init__(self):
        self.adj: List[List[int]] = []

    def vertex(self) -> int:
        self.adj.append([])
        return len(self.adj) - 1

    def edge(self, u: int, v: int) -> None:
        self.adj[u].append(v)
        self.adj[v].append(u)

    def hang(self, parent: int, count: int) -> List[int]:
        kids = []
        for _ in range(count):
            c = self.vertex()
            self.edge(parent, c)
            kids.append(c)
        return kids

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def graph(self) -> Graph:
        return Graph(len(self.adj), tuple(tuple(sorted(a)) for a in self.adj))


# ---------------------------------------------------------------------------
# Greedy trees


def greedy_tree(d: Sequence[int]) -> Graph:
    """G(D): BFS from a root of degree d_1, handing out degrees in non-increasing order.

    Vertex ``i`` receives degree ``D[i]``, so larger-degree parents (earlier in the
    queue) get the larger-degree children.
    """
    d = validate(d)
    n = len(d)
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    edges = []
    nxt = 1
    for u in range(n):
        slots = d[u] if u == 0 else d[u] - 1
        for _ in range(slots):
            edges.append((u, nxt))
            nxt += 1
    return Graph.from_edges(n, edges)


def _level_tree(ld: LeveledDegreeSequence, alternating: bool) -> RootedTree:
    err = ld.consistency_error()
    if err:
        raise InconsistentLevels(err)
    levels = ld.levels
    if ld.order == 1:
        return rooted_view(Graph(1, ((),)), 0)
    b = _Builder()
    current = [b.vertex() for _ in levels[0]]
    degs = list(levels[0])
    if len(current) == 2:
        b.edge(current[0], current[1])
        root: Root = (current[0], current[1])
    else:
        root = current[0]
    for h in range(1, len(levels)):
        # h here is the 0-based index of the new level; the parent level is number h (1-based).
        nxt_degs = list(levels[h])
        if alternating and h % 2 == 1:
            nxt_degs.reverse()
        nxt = []
        for v, dv in zip(current, degs):
            slots = dv if (h == 1 and len(current) == 1) else dv - 1
            nxt.extend(b.hang(v, slots))
        current, degs = nxt, nxt_degs
    t = b.graph()
    rt = rooted_view(t, root)
    return rt


def level_greedy_tree(ld: LeveledDegreeSequence) -> RootedTree:
    """Level greedy tree: within each level, larger parents get larger children."""
    return _level_tree(ld, alternating=False)


def alternating_level_greedy_tree(ld: LeveledDegreeSequence) -> RootedTree:
    """Alternating level greedy tree: the assignment order flips on odd parent levels."""
    return _level_tree(ld, alternating=True)


# ---------------------------------------------------------------------------
# Alternating greedy tree M(D)


@dataclass(frozen=True)
class LabeledAltGreedyTree:
    """M(D) with its labels.

    ``labels[i]`` is the vertex carrying label ``v_{i+1}``. ``merge_roots`` are the
    unlabeled vertices created when a branch R_{d_t} is merged onto a leaf, and
    ``attachments`` records ``(s, leaf)`` for each recursive step, with ``s`` 1-based.
    """

    tree: Graph
    labels: Tuple[int, ...]
    merge_roots: Tuple[int, ...] = ()
    attachments: Tuple[Tuple[int, int], ...] = field(default=())

    def label_degrees(self) -> Tuple[int, ...]:
        return tuple(self.tree.degree(v) for v in self.labels)


def _build_m(r: Tuple[int, ...], b: _Builder, merges: list, attachments: list) -> List[int]:
    t = len(r)
    dt = r[-1]
    if t <= dt + 1:
        center = b.vertex()
        leaves = b.hang(center, dt)
        roots = []
        for i in range(t - 1):
            b.hang(leaves[i], r[i] - 1)
            roots.append(leaves[i])
        roots.sort(key=lambda v: (b.degree(v), v))
        return [center] + roots
    labels = _build_m(r[dt - 1 : t - 1], b, merges, attachments)
    s = next(
        i for i, v in enumerate(labels) if any(b.degree(u) == 1 for u in b.adj[v])
    )
    z = min(u for u in b.adj[labels[s]] if b.degree(u) == 1)
    attachments.append((s + 1, z))
    merges.append(z)
    roots = b.hang(z, dt - 1)
    for i, root in enumerate(roots):
        b.hang(root, r[i] - 1)
    roots.sort(key=lambda v: (b.degree(v), v))
    return labels + roots


def alternating_greedy_tree(r) -> LabeledAltGreedyTree:
    """M(D) from a reduced degree sequence (a full degree sequence is also accepted)."""
    if not isinstance(r, ReducedDegreeSequence):
        seq = tuple(r)
        if seq == (0,):
            return LabeledAltGreedyTree(Graph(1, ((),)), ())
        r = reduce(seq) if 1 in seq else ReducedDegreeSequence(seq)
    if r.t == 0:
        return LabeledAltGreedyTree(Graph.from_edges(2, [(0, 1)]), ())
    b = _Builder()
    merges: list = []
    attachments: list = []
    labels = _build_m(r.internal, b, merges, attachments)
    return LabeledAltGreedyTree(b.graph(), tuple(labels), tuple(merges), tuple(attachments))


def alt_greedy_tree(d: Sequence[int]) -> Graph:
    """M(D) as a plain graph, from a full degree sequence."""
    d = validate(d)
    if d == (0,):
        return Graph(1, ((),))
    return alternating_greedy_tree(reduce(d)).tree


# ---------------------------------------------------------------------------
# Local extremality checks


@dataclass(frozen=True)
class PropertyReport:
    passed: bool
    root: Optional[Root] = None
    level: Optional[int] = None
    witnesses: Optional[Tuple[int, int]] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _check(rt: RootedTree, maximal: bool) -> PropertyReport:
    deg = rt.tree.degrees()
    for lv_index, verts in enumerate(rt.levels(), 1):
        info = []
        for v in verts:
            kids = [deg[c] for c in rt.children(v)]
            if kids:
                info.append((v, deg[v], min(kids), max(kids)))
        for p, dp, pmin, pmax in info:
            for r, dr, rmin, rmax in info:
                if dp <= dr:
                    continue
                if maximal and pmax > rmin:
                    return PropertyReport(
                        False, rt.root, lv_index, (p, r),
                        f"deg {dp} > {dr} but max child deg {pmax} > min child deg {rmin}",
                    )
                if not maximal and pmin < rmax:
                    return PropertyReport(
                        False, rt.root, lv_index, (p, r),
                        f"deg {dp} > {dr} but min child deg {pmin} < max child deg {rmax}",
                    )
    return PropertyReport(True, rt.root)


def check_max_property(rt: RootedTree) -> PropertyReport:
    """Same-level pairs with deg(p) > deg(r) need max child deg of p <= min child deg of r."""
    return _check(rt, maximal=True)


def check_min_property(rt: RootedTree) -> PropertyReport:
    """Same-level pairs with deg(p) > deg(r) need min child deg of p >= max child deg of r."""
    return _check(rt, maximal=False)


def _scan(t: Graph, check) -> PropertyReport:
    for root in all_roots(t):
        rep = check(rooted_view(t, root))
        if not rep.passed:
            return rep
    return PropertyReport(True)


def check_max_all_roots(t: Graph) -> PropertyReport:
    """First violation over all vertex roots then all edge roots, in sorted order."""
    return _scan(t, check_max_property)


def check_min_all_roots(t: Graph) -> PropertyReport:
    return _scan(t, check_min_property)


def phi(x: float, y: float) -> float:
    """sqrt(x^2 + y^2) - sqrt((x-1)^2 + y^2), increasing in x, decreasing in y."""
    if not (x > 1 and y > 0):
        raise ValueError(f"phi needs x > 1 and y > 0, got x={x}, y={y}")
    return math.hypot(x, y) - math.hypot(x - 1, y)


__all__ = [
    "DegreeSequence",
    "InconsistentLevels",
    "LabeledAltGreedyTree",
    "PropertyReport",
    "alt_greedy_tree",
    "alternating_greedy_tree",
    "alternating_level_greedy_tree",
    "check_max_all_roots",
    "check_max_property",
    "check_min_all_roots",
    "check_min_property",
    "greedy_tree",
    "level_greedy_tree",
    "phi",
]
