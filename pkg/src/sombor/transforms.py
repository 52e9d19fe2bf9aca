"""Sombor-index-changing surgeries on trees and unicyclic graphs.

Every surgery returns the new graph together with ``delta = SO(new) - SO(old)``,
computed from the edges around the touched vertices only.
"""

from __future__ import annotations

import math
import os
from collections import deque
from typing import Iterable, List, NamedTuple, Optional, Set, Tuple

from .degseq import majorizes
from .graph import (
    CanonicalCode,
    Graph,
    Root,
    RootedTree,
    canonical_form,
    cycle_graph,
    sombor,
)

DEBUG = bool(os.environ.get("SOMBOR_DEBUG"))


class SurgeryError(ValueError):
    pass


class ClosureOverflow(RuntimeError):
    pass


class Surgery(NamedTuple):
    graph: Graph
    delta: float


class BranchMove(NamedTuple):
    graph: Graph
    delta: float
    before: Tuple[int, ...]
    after: Tuple[int, ...]
    majorized: bool  # before ◁ after


def local_delta(old: Graph, new: Graph, touched: Iterable[int], alpha: float = 0.5) -> float:
    """SO_alpha(new) - SO_alpha(old) summed over edges meeting ``touched``."""
    touched = set(touched)
    terms = []
    for g, sign in ((new, 1.0), (old, -1.0)):
        deg = g.degrees()
        for u, v in g.edges():
            if u in touched or v in touched:
                terms.append(sign * float(deg[u] ** 2 + deg[v] ** 2) ** alpha)
    delta = math.fsum(terms)
    if DEBUG:
        full = sombor(new, alpha) - sombor(old, alpha)
        assert abs(full - delta) <= 1e-9 * max(1.0, abs(full)), (full, delta)
    return delta


# ---------------------------------------------------------------------------
# Branch exchange


def branch_swap(rt: RootedTree, u: int, z: int, v: int, w: int, alpha: float = 0.5) -> Surgery:
    """T' = T - vw - uz + vz + uw, where z is a child of u and w a child of v."""
    if u == v:
        raise SurgeryError("u and v must differ")
    if z not in rt.children(u):
        raise SurgeryError(f"{z} is not a child of {u}")
    if w not in rt.children(v):
        raise SurgeryError(f"{w} is not a child of {v}")
    if v in rt.branch(z) or u in rt.branch(w):
        raise SurgeryError("swap would merge the two branches")
    t = rt.tree
    new = t.with_edges(remove=[(v, w), (u, z)], add=[(v, z), (u, w)])
    return Surgery(new, local_delta(t, new, (u, v, w, z), alpha))


def _swap_neighbors(g: Graph, a: int, c: int, b: int, d: int) -> Optional[Graph]:
    """g - ac - bd + ad + bc if that is again a tree, else None."""
    if c == b or d == a or c == d or g.has_edge(a, d) or g.has_edge(b, c):
        return None
    new = g.with_edges(remove=[(a, c), (b, d)], add=[(a, d), (b, c)])
    return new if new.is_connected() else None


def same_degree_swaps(t: Graph) -> Iterable[Graph]:
    """All trees reachable by one exchange of branches between two equal-degree vertices.

    For equal-degree ``a, b`` and neighbors ``c`` of ``a``, ``d`` of ``b``, the move
    ``t - ac - bd + ad + bc`` is kept whenever the result is a tree: under a suitable
    rooting it either trades the branches hanging at a and b, or trades the
    equal-degree branch roots a and b between their parents. Both keep the
    edge-type multiset. Leaf pairs are skipped since they only relabel.
    """
    deg = t.degrees()
    for a in range(t.n):
        if deg[a] < 2:
            continue
        for b in range(a + 1, t.n):
            if deg[b] != deg[a]:
                continue
            for c in t.adj[a]:
                for d in t.adj[b]:
                    new = _swap_neighbors(t, a, c, b, d)
                    if new is not None:
                        yield new


def same_degree_swap_closure(t: Graph, cap: int = 100_000) -> Set[CanonicalCode]:
    """Canonical codes of every tree reachable by iterated equal-degree branch exchanges."""
    start = canonical_form(t)
    seen = {start}
    queue = deque([t])
    while queue:
        g = queue.popleft()
        for new in same_degree_swaps(g):
            code = canonical_form(new)
            if code not in seen:
                seen.add(code)
                if len(seen) > cap:
                    raise ClosureOverflow(f"closure exceeded {cap} states")
                queue.append(new)
    return seen


# ---------------------------------------------------------------------------
# Moving a branch between vertices


def tree_path(t: Graph, a: int, b: int) -> List[int]:
    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for v in t.adj[u]:
            if v not in prev:
                prev[v] = u
                queue.append(v)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def same_level_root(t: Graph, x: int, y: int) -> Root:
    """A vertex or edge root placing ``x`` and ``y`` on the same level."""
    path = tree_path(t, x, y)
    mid, odd = divmod(len(path) - 1, 2)
    if not odd:
        return path[mid]
    return (path[mid], path[mid + 1])


def _component_without(g: Graph, start: int, cut: int) -> Set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v == cut and u == start:
                continue
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def move_branch(t: Graph, x: int, y: int, x_child: int, alpha: float = 0.5) -> BranchMove:
    """Detach the branch at ``x_child`` from ``y`` and hang it from ``x``."""
    if not t.has_edge(y, x_child):
        raise SurgeryError(f"{x_child} is not adjacent to {y}")
    if x == y:
        raise SurgeryError("x and y must differ")
    if x in _component_without(t, x_child, y):
        raise SurgeryError(f"{x} lies inside the moved branch")
    new = t.with_edges(remove=[(y, x_child)], add=[(x, x_child)])
    before = t.degree_sequence()
    after = new.degree_sequence()
    return BranchMove(
        new, local_delta(t, new, (x, y, x_child), alpha), before, after, majorizes(before, after)
    )


# ---------------------------------------------------------------------------
# Pendent paths and unicyclic graphs


def pendent_path(g: Graph, u: int, w: int) -> Optional[List[int]]:
    """Vertices of the maximal pendent path leaving ``u`` through ``w``, or None."""
    path = [w]
    prev, cur = u, w
    while g.degree(cur) == 2:
        nxt = g.adj[cur][0] if g.adj[cur][0] != prev else g.adj[cur][1]
        if nxt == u or len(path) > g.n:
            return None
        prev, cur = cur, nxt
        path.append(cur)
    return path if g.degree(cur) == 1 else None


def pendent_paths(g: Graph, u: int) -> List[List[int]]:
    if g.degree(u) < 3:
        return []
    out = []
    for w in g.adj[u]:
        p = pendent_path(g, u, w)
        if p is not None:
            out.append(p)
    return out


def pendent_path_merge(
    g: Graph, u: int, v: int, w: Optional[int] = None, z: Optional[int] = None,
    alpha: float = 0.5,
) -> Surgery:
    """Move the pendent path starting at ``w`` (at ``u``) to the free end ``z`` of a path at ``v``.

    ``u == v`` is accepted when ``u`` carries two pendent paths.
    """
    x, y = g.degree(u), g.degree(v)
    if not x >= y >= 3:
        raise SurgeryError(f"need deg(u) >= deg(v) >= 3, got {x}, {y}")
    at_u = pendent_paths(g, u)
    at_v = pendent_paths(g, v)
    if w is None:
        if not at_u:
            raise SurgeryError(f"no pendent path at {u}")
        p_k = at_u[0]
    else:
        p_k = next((p for p in at_u if p[0] == w), None)
        if p_k is None:
            raise SurgeryError(f"no pendent path at {u} through {w}")
    candidates = [p for p in at_v if p[0] != p_k[0]]
    if z is not None:
        candidates = [p for p in candidates if p[-1] == z]
    if not candidates:
        raise SurgeryError(f"no second pendent path at {v}")
    p_j = candidates[0]
    w, z = p_k[0], p_j[-1]
    new = g.with_edges(remove=[(u, w)], add=[(z, w)])
    return Surgery(new, local_delta(g, new, (u, w, z), alpha))


def tailed_cycle(n: int, k: int) -> Graph:
    """Cycle C_k on 0..k-1 with a pendent path k, ..., n-1 hanging from vertex 0."""
    if not 3 <= k <= n:
        raise ValueError(f"tailed cycle needs 3 <= k <= n, got n={n}, k={k}")
    if k == n:
        return cycle_graph(n)
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(0, k)] + [(i, i + 1) for i in range(k, n - 1)]
    return Graph.from_edges(n, edges)


def girth(g: Graph) -> Optional[int]:
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    c = dist[u] + dist[v] + 1
                    if best is None or c < best:
                        best = c
    return best


def merge_step(g: Graph) -> Optional[Surgery]:
    """One pendent-path merge from the highest-degree carrier, or None when none applies."""
    carriers = [(g.degree(u), u) for u in range(g.n) if pendent_paths(g, u)]
    if not carriers:
        return None
    carriers.sort(key=lambda c: (-c[0], c[1]))
    u = carriers[0][1]
    others = [c[1] for c in carriers[1:]]
    if others:
        return pendent_path_merge(g, u, others[0])
    if len(pendent_paths(g, u)) >= 2:
        return pendent_path_merge(g, u, u)
    return None


def merge_until_stable(g: Graph, limit: int = 10_000) -> List[Surgery]:
    """Apply :func:`merge_step` until no merge applies."""
    steps = []
    while len(steps) < limit:
        step = merge_step(g)
        if step is None:
            return steps
        steps.append(step)
        g = step.graph
    raise RuntimeError("merge iteration did not terminate")
