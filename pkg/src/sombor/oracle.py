"""Exhaustive ground truth over small tree families and per-theorem verification."""

from __future__ import annotations

import heapq
import itertools
import math
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .degseq import (
    DegreeSequence,
    corollary_sequence,
    feasible_parameters,
    format_sequence,
    majorization_chain,
    majorizes,
    validate,
)
from .extremal import alt_greedy_tree, greedy_tree, level_greedy_tree
from .graph import (
    CanonicalCode,
    Graph,
    LeveledDegreeSequence,
    SomborValue,
    all_roots,
    canonical_form,
    edge_type_multiset,
    leveled_degree_sequence,
    rooted_code,
    rooted_view,
    serialize_edge_list,
    sombor_index,
)
from .transforms import girth, merge_until_stable, same_degree_swap_closure, tailed_cycle

DEFAULT_CAP = 10_000_000
MARGIN = 1e-9


class CapExceeded(RuntimeError):
    pass


def enumeration_cap() -> int:
    return int(os.environ.get("SOMBOR_CAP", DEFAULT_CAP))


# ---------------------------------------------------------------------------
# Enumeration


def multiset_permutations(items: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Distinct permutations in lexicographic order (next-permutation walk)."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def prufer_decode(code: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def labeled_count(d: Sequence[int]) -> int:
    """Number of Prüfer words with vertex i repeated d_i - 1 times."""
    n = len(d)
    if n <= 2:
        return 1
    out = math.factorial(n - 2)
    for x in d:
        out //= math.factorial(x - 1)
    return out


@lru_cache(maxsize=None)
def _trees(d: DegreeSequence) -> Tuple[Graph, ...]:
    n = len(d)
    if n == 1:
        return (Graph(1, ((),)),)
    if n == 2:
        return (Graph.from_edges(2, [(0, 1)]),)
    content = [i for i, x in enumerate(d) for _ in range(x - 1)]
    seen: Dict[CanonicalCode, Graph] = {}
    for word in multiset_permutations(content):
        g = prufer_decode(word, n)
        code = canonical_form(g)
        if code not in seen:
            seen[code] = g
    return tuple(seen[c] for c in sorted(seen))


def enumerate_trees(d: Sequence[int], cap: Optional[int] = None) -> Iterator[Graph]:
    """One tree per isomorphism class with degree sequence ``d``, sorted by canonical code."""
    d = validate(d)
    cap = enumeration_cap() if cap is None else cap
    if labeled_count(d) > cap:
        raise CapExceeded(f"{labeled_count(d)} labeled trees exceed cap {cap}")
    return iter(_trees(d))


def partitions(total: int, parts_max: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``total`` into at most ``parts_max`` parts, non-increasing, largest first."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    if parts_max == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, parts_max - 1, first):
            yield (first,) + rest


def all_tree_degree_sequences(n: int) -> Iterator[DegreeSequence]:
    """Every tree degree sequence of order n: partitions of 2(n-1) into n positive parts."""
    if n < 1:
        return
    if n == 1:
        yield validate((0,))
        return
    for p in partitions(n - 2, n):
        yield validate(tuple(x + 1 for x in p) + (1,) * (n - len(p)))


def all_trees(n: int) -> List[Graph]:
    return [t for d in all_tree_degree_sequences(n) for t in enumerate_trees(d)]


# ---------------------------------------------------------------------------
# Extremal scans


@dataclass(frozen=True)
class ExtremalScan:
    sequence: DegreeSequence
    tree_count: int
    min_value: SomborValue
    max_value: SomborValue
    argmin: FrozenSet[CanonicalCode]
    argmax: FrozenSet[CanonicalCode]

    def to_json(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "tree_count": self.tree_count,
            "min": round_sig(self.min_value.value),
            "max": round_sig(self.max_value.value),
            "min_edge_types": self.min_value.edge_types.to_json(),
            "max_edge_types": self.max_value.edge_types.to_json(),
            "argmin_count": len(self.argmin),
            "argmax_count": len(self.argmax),
        }


def round_sig(x: float, digits: int = 12) -> float:
    return float(f"{x:.{digits}g}")


def extremal_scan(d: Sequence[int], cap: Optional[int] = None, alpha: float = 0.5) -> ExtremalScan:
    d = validate(d)
    groups: Dict = defaultdict(set)
    count = 0
    for t in enumerate_trees(d, cap):
        groups[edge_type_multiset(t)].add(canonical_form(t))
        count += 1
    values = {ets: ets.sombor(alpha) for ets in groups}
    lo = min(values.values())
    hi = max(values.values())
    lo_keys = sorted((k for k, v in values.items() if v == lo), key=lambda k: k.items)
    hi_keys = sorted((k for k, v in values.items() if v == hi), key=lambda k: k.items)
    return ExtremalScan(
        d,
        count,
        SomborValue(lo, alpha, lo_keys[0]),
        SomborValue(hi, alpha, hi_keys[0]),
        frozenset().union(*(groups[k] for k in lo_keys)),
        frozenset().union(*(groups[k] for k in hi_keys)),
    )


# ---------------------------------------------------------------------------
# Unicyclic graphs (brute-force canonical form with degree-refined cells)


def _refined_colors(g: Graph) -> List[int]:
    colors = list(g.degrees())
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def graph_certificate(g: Graph) -> Tuple:
    """Exact isomorphism certificate: minimum sorted edge list over color-preserving orderings."""
    colors = _refined_colors(g)
    cells: Dict[int, List[int]] = defaultdict(list)
    for v, c in enumerate(colors):
        cells[c].append(v)
    ordered = [cells[c] for c in sorted(cells)]
    best = None
    for choice in itertools.product(*(itertools.permutations(cell) for cell in ordered)):
        pos = {}
        for v in itertools.chain.from_iterable(choice):
            pos[v] = len(pos)
        key = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return (tuple(sorted(colors)), best)


def unicyclic_graphs(n: int) -> List[Graph]:
    """Every connected unicyclic graph of order n up to isomorphism (desk scale only)."""
    seen: Dict[Tuple, Graph] = {}
    for t in all_trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if t.has_edge(u, v):
                    continue
                g = t.with_edges(add=[(u, v)])
                cert = graph_certificate(g)
                if cert not in seen:
                    seen[cert] = g
    return [seen[c] for c in sorted(seen)]


def diameter(t: Graph) -> int:
    def far(s):
        dist = {s: 0}
        order = [s]
        for u in order:
            for v in t.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    order.append(v)
        last = order[-1]
        return last, dist[last]

    if t.n == 1:
        return 0
    a, _ = far(0)
    return far(a)[1]


# ---------------------------------------------------------------------------
# Verification


@dataclass
class VerificationReport:
    theorem: str
    scope: dict
    instances: int = 0
    failures: List[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, meta: bool = True) -> dict:
        out = {
            "theorem": self.theorem,
            "scope": self.scope,
            "instances": self.instances,
            "verdict": "pass" if self.passed else "fail",
            "failures": self.failures,
        }
        if self.notes:
            out["notes"] = self.notes
        if meta:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _failure(seq, witness: Optional[Graph], expected, got) -> dict:
    return {
        "sequence": list(seq) if seq is not None else None,
        "witness_edges": [list(e) for e in witness.edges()] if witness is not None else None,
        "expected": expected,
        "got": got,
    }


def _check_extremal(d: DegreeSequence) -> List[dict]:
    scan = extremal_scan(d)
    out = []
    g, m = greedy_tree(d), alt_greedy_tree(d)
    if edge_type_multiset(g) != scan.min_value.edge_types:
        out.append(_failure(d, g, round_sig(scan.min_value.value), round_sig(sombor_index(g).value)))
    if edge_type_multiset(m) != scan.max_value.edge_types:
        out.append(_failure(d, m, round_sig(scan.max_value.value), round_sig(sombor_index(m).value)))
    return out


def _check_greedy(d: DegreeSequence) -> List[dict]:
    scan = extremal_scan(d)
    g = greedy_tree(d)
    if edge_type_multiset(g) != scan.min_value.edge_types:
        return [_failure(d, g, round_sig(scan.min_value.value), round_sig(sombor_index(g).value))]
    return []


def _check_max(d: DegreeSequence) -> List[dict]:
    scan = extremal_scan(d)
    m = alt_greedy_tree(d)
    if edge_type_multiset(m) != scan.max_value.edge_types:
        return [_failure(d, m, round_sig(scan.max_value.value), round_sig(sombor_index(m).value))]
    return []


def _check_alter(d: DegreeSequence) -> List[dict]:
    scan = extremal_scan(d)
    m = alt_greedy_tree(d)
    closure = same_degree_swap_closure(m)
    if closure != scan.argmax:
        return [_failure(d, m, len(scan.argmax), len(closure))]
    return []


def _check_alter2(d: DegreeSequence) -> List[dict]:
    scan = extremal_scan(d)
    g = greedy_tree(d)
    closure = same_degree_swap_closure(g)
    if closure != scan.argmin:
        return [_failure(d, g, len(scan.argmin), len(closure))]
    return []


def chain_values(d: Sequence[int], d2: Sequence[int]) -> List[Tuple[DegreeSequence, float]]:
    return [(c, sombor_index(alt_greedy_tree(c)).value) for c in majorization_chain(d, d2)]


def _chain_step_ok(a: Sequence[int], b: Sequence[int]) -> bool:
    diff = [(i, y - x) for i, (x, y) in enumerate(zip(a, b)) if x != y]
    return (
        len(diff) == 2 and diff[0][1] == 1 and diff[1][1] == -1 and majorizes(a, b)
    )


def _check_diffdegree_pair(d: DegreeSequence, d2: DegreeSequence) -> List[dict]:
    values = chain_values(d, d2)
    out = []
    for (a, va), (b, vb) in zip(values, values[1:]):
        if not _chain_step_ok(a, b) or not vb > va + MARGIN:
            out.append(_failure(b, alt_greedy_tree(b), f"> {round_sig(va)} after {format_sequence(a)}",
                                round_sig(vb)))
    return out


def _check_rooted(n: int) -> Tuple[int, List[dict]]:
    groups: Dict[LeveledDegreeSequence, Dict[CanonicalCode, Tuple]] = defaultdict(dict)
    for t in all_trees(n):
        for root in all_roots(t):
            rt = rooted_view(t, root)
            groups[leveled_degree_sequence(rt)][rooted_code(rt)] = edge_type_multiset(t)
    instances = 0
    failures = []
    for ld, realizations in sorted(groups.items(), key=lambda kv: kv[0].levels):
        if len(realizations) < 2:
            continue
        instances += 1
        best = min(realizations.values(), key=lambda e: e.sombor())
        lg = level_greedy_tree(ld)
        ok = leveled_degree_sequence(lg) == ld and edge_type_multiset(lg.tree) == best
        if not ok:
            failures.append(_failure(None, lg.tree, round_sig(best.sombor()),
                                     round_sig(sombor_index(lg.tree).value)) | {"levels": [list(x) for x in ld.levels]})
    return instances, failures


def _check_unicyclic(n: int) -> Tuple[int, List[dict], dict]:
    family = unicyclic_graphs(n)
    by_girth: Dict[int, List[Graph]] = defaultdict(list)
    for g in family:
        by_girth[girth(g)].append(g)
    failures = []
    instances = 0
    for k, graphs in sorted(by_girth.items()):
        target = tailed_cycle(n, k)
        target_cert = graph_certificate(target)
        target_ets = edge_type_multiset(target)
        lo = min(sombor_index(g).value for g in graphs)
        if not math.isclose(lo, target_ets.sombor(), rel_tol=0, abs_tol=1e-12):
            failures.append(_failure(None, target, round_sig(lo), round_sig(target_ets.sombor())))
        for g in graphs:
            instances += 1
            steps = merge_until_stable(g)
            end = steps[-1].graph if steps else g
            bad_sign = [s.delta for s in steps if not s.delta < -MARGIN]
            if graph_certificate(end) != target_cert or bad_sign:
                failures.append(_failure(None, g, "terminates at tailed cycle with negative deltas",
                                         {"end_edges": [list(e) for e in end.edges()], "bad_deltas": bad_sign}))
    return instances, failures, {"family_size": len(family), "girths": sorted(by_girth)}


def _corollary_family(kind: str, n: int, param: int, trees: List[Graph]) -> List[Graph]:
    if kind == "max_degree":
        return [t for t in trees if max(t.degrees()) == param]
    if kind == "leaves":
        return [t for t in trees if sum(1 for x in t.degrees() if x == 1) == param]
    if kind == "diameter":
        return [t for t in trees if diameter(t) == param]
    if kind == "branching":
        return [t for t in trees if sum(1 for x in t.degrees() if x >= 3) >= param]
    return list(trees)


def check_corollary(kind: str, n: int) -> Tuple[int, List[dict], dict]:
    """Exhaustive check of one corollary over all feasible parameters at order n."""
    kind = kind.replace("-", "_")
    trees = all_trees(n)
    failures = []
    instances = 0
    notes = {}
    for param in feasible_parameters(kind, n):
        seq = corollary_sequence(kind, n, param)
        family = _corollary_family(kind, n, param, trees)
        if not family:
            continue
        if kind == "branching":
            bound = sombor_index(greedy_tree(seq)).value
            bad = [t for t in family if sombor_index(t).value < bound - MARGIN]
        else:
            bound = sombor_index(alt_greedy_tree(seq)).value
            bad = [t for t in family if sombor_index(t).value > bound + MARGIN]
        if kind == "star":
            star_code = canonical_form(alt_greedy_tree(seq))
            bad += [t for t in family if canonical_form(t) != star_code
                    and not sombor_index(t).value < bound - MARGIN]
        instances += len(family)
        for t in bad:
            failures.append(_failure(seq, t, round_sig(bound), round_sig(sombor_index(t).value)))
        if kind == "leaves":
            equal = sum(1 for t in family if edge_type_multiset(t) == edge_type_multiset(alt_greedy_tree(seq)))
            notes[str(param)] = {"family": len(family), "attaining_bound": equal,
                                 "equality_for_all": equal == len(family)}
    return instances, failures, notes


PER_SEQUENCE: Dict[str, Callable[[DegreeSequence], List[dict]]] = {
    "extremal": _check_extremal,
    "greedy": _check_greedy,
    "max": _check_max,
    "alter": _check_alter,
    "alter2": _check_alter2,
}
COROLLARIES = {
    "cor_star": "star",
    "cor_max_degree": "max_degree",
    "cor_leaves": "leaves",
    "cor_diameter": "diameter",
    "cor_branching": "branching",
}
THEOREMS = tuple(PER_SEQUENCE) + ("diffdegree", "rooted", "unicyclic") + tuple(COROLLARIES)


def _run_sequence_check(args):
    name, d = args
    return PER_SEQUENCE[name](d)


def verify(
    theorem: str,
    n: Optional[int] = None,
    seq: Optional[Sequence[int]] = None,
    seq2: Optional[Sequence[int]] = None,
    jobs: int = 1,
) -> VerificationReport:
    """Check one theorem over an order ``n`` or an explicit sequence (pair for diffdegree)."""
    theorem = theorem.replace("-", "_")
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    start = time.perf_counter()
    scope: dict = {}
    if n is not None:
        scope["n"] = n
    if seq is not None:
        seq = validate(seq)
        scope["seq"] = list(seq)
    if seq2 is not None:
        seq2 = validate(seq2)
        scope["seq2"] = list(seq2)
    report = VerificationReport(theorem, scope)

    if theorem in PER_SEQUENCE:
        if seq is not None:
            sequences = [seq]
        elif n is not None:
            sequences = list(all_tree_degree_sequences(n))
        else:
            raise ValueError("give an order n or a sequence")
        for d in sequences:
            enumerate_trees(d)  # raises CapExceeded before any work is spawned
        tasks = [(theorem, d) for d in sequences]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_sequence_check, tasks))
        else:
            results = [_run_sequence_check(t) for t in tasks]
        report.instances = len(sequences)
        for r in results:
            report.failures.extend(r)
        if seq is not None and theorem in ("alter", "alter2"):
            scan = extremal_scan(seq)
            report.notes["argmax_count" if theorem == "alter" else "argmin_count"] = len(
                scan.argmax if theorem == "alter" else scan.argmin
            )
    elif theorem == "diffdegree":
        if seq is not None and seq2 is not None:
            pairs = [(seq, seq2)]
            report.notes["chain"] = [
                {"sequence": list(c), "sombor": round_sig(v)} for c, v in chain_values(seq, seq2)
            ]
        elif n is not None:
            seqs = list(all_tree_degree_sequences(n))
            pairs = [(a, b) for a in seqs for b in seqs if a != b and majorizes(a, b)]
        else:
            raise ValueError("give an order n or both sequences")
        for a, b in pairs:
            report.failures.extend(_check_diffdegree_pair(a, b))
        report.instances = len(pairs)
    elif theorem == "rooted":
        if n is None:
            raise ValueError("rooted verification needs an order n")
        report.instances, report.failures = _check_rooted(n)
    elif theorem == "unicyclic":
        if n is None or n < 3:
            raise ValueError("unicyclic verification needs an order n >= 3")
        report.instances, report.failures, report.notes = _check_unicyclic(n)
    else:
        if n is None:
            raise ValueError("corollary verification needs an order n")
        report.instances, report.failures, report.notes = check_corollary(COROLLARIES[theorem], n)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def witness_text(g: Graph) -> str:
    return serialize_edge_list(g)
