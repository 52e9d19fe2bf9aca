"""Degree sequences of trees: validation, reduction, majorization and chains."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, List, Sequence, Tuple


class NonRealizable(ValueError):
    """The sequence is not the degree sequence of any tree."""


class SequenceSyntaxError(ValueError):
    pass


class DegreeSequence(tuple):
    """Non-increasing tree degree sequence. Construct via :func:`validate`."""

    def __new__(cls, entries: Iterable[int]):
        seq = tuple(sorted((int(d) for d in entries), reverse=True))
        reason = _realizability_error(seq)
        if reason:
            raise NonRealizable(reason)
        return super().__new__(cls, seq)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"DegreeSequence({tuple(self)})"


def _realizability_error(seq: Tuple[int, ...]):
    n = len(seq)
    if n == 0:
        return "empty sequence"
    if n == 1:
        return None if seq == (0,) else "a single vertex must have degree 0"
    if min(seq) < 1:
        return f"entry {min(seq)} < 1"
    if sum(seq) != 2 * (n - 1):
        return f"sum {sum(seq)} != 2(n-1) = {2 * (n - 1)}"
    return None


def validate(seq: Iterable[int]) -> DegreeSequence:
    return DegreeSequence(seq)


def is_realizable(seq: Iterable[int]) -> bool:
    return _realizability_error(tuple(sorted(seq, reverse=True))) is None


def parse_sequence(text: str) -> List[int]:
    """Parse ``3,2,2,1,1,1`` or the shorthand ``3,2^2,1^3``."""
    out: List[int] = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
        if not m:
            raise SequenceSyntaxError(f"bad sequence token {tok!r}")
        out.extend([int(m.group(1))] * int(m.group(2) or 1))
    if not out:
        raise SequenceSyntaxError("empty sequence")
    return out


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(d) for d in seq)


@dataclass(frozen=True)
class ReducedDegreeSequence:
    """Internal degrees ``d_1 >= ... >= d_t >= 2``; the leaf count is implied."""

    internal: Tuple[int, ...]

    def __post_init__(self):
        internal = tuple(sorted(self.internal, reverse=True))
        if any(d < 2 for d in internal):
            raise NonRealizable("reduced entries must be >= 2")
        object.__setattr__(self, "internal", internal)

    @property
    def t(self) -> int:
        return len(self.internal)

    @property
    def leaves(self) -> int:
        return -2 * self.t + 2 + sum(self.internal)

    @property
    def n(self) -> int:
        return self.t + self.leaves


def reduce(d: Sequence[int]) -> ReducedDegreeSequence:
    d = validate(d)
    return ReducedDegreeSequence(tuple(x for x in d if x >= 2))


def expand(r: ReducedDegreeSequence) -> DegreeSequence:
    # t = 0 stands for the single edge; K1 is only reachable through validate((0,)).
    return validate(r.internal + (1,) * r.leaves)


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is majorized by ``b`` (written a ◁ b): prefix sums of a never exceed b's."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    a = sorted(a, reverse=True)
    b = sorted(b, reverse=True)
    return all(x <= y for x, y in zip(accumulate(a), accumulate(b)))


def majorization_chain(d: Sequence[int], d2: Sequence[int]) -> List[DegreeSequence]:
    """Chain ``d = C_0 ◁ C_1 ◁ ... ◁ C_m = d2`` of single unit transfers.

    Each step moves one unit from position k to an earlier position j. k is the
    first index after the first prefix-sum gap where the gap closes again; j is the
    latest position before k that can take the unit without breaking the order.
    """
    cur = list(validate(d))
    target = list(validate(d2))
    if not majorizes(cur, target):
        raise ValueError(f"{tuple(cur)} is not majorized by {tuple(target)}")
    chain = [DegreeSequence(cur)]
    while cur != target:
        pc = list(accumulate(cur))
        pt = list(accumulate(target))
        j0 = next(i for i in range(len(cur)) if pc[i] != pt[i])
        k = next(i for i in range(j0 + 1, len(cur)) if pc[i] == pt[i])
        j = max(i for i in range(j0, k) if i == 0 or cur[i - 1] > cur[i])
        cur[j] += 1
        cur[k] -= 1
        chain.append(DegreeSequence(cur))
    return chain


COROLLARY_KINDS = ("max_degree", "leaves", "diameter", "branching", "star")


def corollary_sequence(kind: str, n: int, param: int = 0) -> DegreeSequence:
    """Extremal degree sequence for a constrained tree family of order ``n``.

    max_degree: as many entries equal to ``param`` as fit, then one remainder entry.
    leaves:     ``(param, 2, ..., 2, 1, ..., 1)`` with ``param`` ones.
    diameter:   ``(n - param + 1, 2, ..., 2, 1, ..., 1)`` with ``param - 2`` twos.
    branching:  ``(3, ..., 3, 2, ..., 2, 1, ..., 1)`` with ``param`` threes.
    star:       ``(n - 1, 1, ..., 1)``; ``param`` ignored.
    """
    kind = kind.replace("-", "_")
    if n < 3:
        raise NonRealizable(f"corollary sequences need n >= 3, got {n}")
    if kind == "max_degree":
        delta = param
        if not 2 <= delta <= n - 1:
            raise NonRealizable(f"max degree {delta} infeasible for n={n}")
        q, r = divmod(n - 2, delta - 1)
        seq = [delta] * q + [r + 1] + [1] * (n - q - 1)
    elif kind == "leaves":
        ell = param
        if not 2 <= ell <= n - 1:
            raise NonRealizable(f"{ell} leaves infeasible for n={n}")
        seq = [ell] + [2] * (n - ell - 1) + [1] * ell
    elif kind == "diameter":
        diam = param
        if not 2 <= diam <= n - 1:
            raise NonRealizable(f"diameter {diam} infeasible for n={n}")
        seq = [n - diam + 1] + [2] * (diam - 2) + [1] * (n - diam + 1)
    elif kind == "branching":
        k = param
        if k < 0 or n - 2 * k - 2 < 0:
            raise NonRealizable(f"{k} branching vertices infeasible for n={n}")
        seq = [3] * k + [2] * (n - 2 * k - 2) + [1] * (k + 2)
    elif kind == "star":
        seq = [n - 1] + [1] * (n - 1)
    else:
        raise ValueError(f"unknown corollary kind {kind!r}")
    return validate(seq)


def feasible_parameters(kind: str, n: int) -> List[int]:
    kind = kind.replace("-", "_")
    if kind == "max_degree":
        return list(range(2, n))
    if kind in ("leaves", "diameter"):
        return list(range(2, n))
    if kind == "branching":
        return list(range(0, (n - 2) // 2 + 1))
    if kind == "star":
        return [0]
    raise ValueError(f"unknown corollary kind {kind!r}")
