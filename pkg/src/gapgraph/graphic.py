"""Graphicality tests on degree multisets.

Sequences are kept as value -> multiplicity maps. Prime gap sequences have
only a handful of distinct values, so the reduced test costs
O(#distinct) per call no matter how long the sequence is.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .exceptions import DomainError, SequencingError
from .primes import GapRecord


class DegreeMultiset:
    """Immutable multiset of nonnegative degrees."""

    __slots__ = ("_items", "n", "total")

    def __init__(self, counts: Mapping[int, int]):
        items = []
        for d, c in counts.items():
            if d < 0:
                raise DomainError(f"negative degree {d}")
            if c < 0:
                raise DomainError(f"negative multiplicity for degree {d}")
            if c:
                items.append((int(d), int(c)))
        items.sort(reverse=True)
        self._items = tuple(items)
        self.n = sum(c for _, c in items)
        self.total = sum(d * c for d, c in items)

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> DegreeMultiset:
        return cls(Counter(int(d) for d in seq))

    @property
    def counts(self) -> dict[int, int]:
        return dict(self._items)

    def items(self) -> tuple[tuple[int, int], ...]:
        """``(degree, multiplicity)`` pairs, degrees strictly descending."""
        return self._items

    def __iter__(self) -> Iterator[int]:
        return (d for d, _ in self._items)

    def degrees(self) -> list[int]:
        """The nonincreasing sequence d_1 >= ... >= d_n."""
        return [d for d, c in self._items for _ in range(c)]

    def max_degree(self) -> int:
        return self._items[0][0] if self._items else 0

    def __eq__(self, other):
        if not isinstance(other, DegreeMultiset):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return f"DegreeMultiset({dict(self._items)})"


@dataclass(frozen=True)
class GraphicVerdict:
    graphic: bool
    failing_k: int | None
    m: int
    checked_ks: Sequence[int]

    def to_json(self) -> dict:
        return {
            "graphic": self.graphic,
            "failingK": self.failing_k,
            "m": self.m,
            "checkedKs": list(self.checked_ks),
        }


def _as_multiset(seq) -> DegreeMultiset:
    if isinstance(seq, DegreeMultiset):
        return seq
    return DegreeMultiset.from_sequence(seq)


def durfee_m(items: Sequence[tuple[int, int]]) -> int:
    """m = max{i : d_i >= i} for descending ``(value, count)`` items (0 if none)."""
    m, pos = 0, 0
    for v, c in items:
        top = min(pos + c, v)
        if top > pos:
            m = top
        pos += c
        if pos >= v:
            break
    return m


def _reduced_check(items: Sequence[tuple[int, int]], n: int, total: int) -> GraphicVerdict:
    # prefix tables over blocks of equal degree: P = positions, S = degree sums
    P, S, neg = [0], [0], []
    m = 0
    for v, c in items:
        pos = P[-1]
        top = min(pos + c, v)
        if top > pos:
            m = top
        P.append(pos + c)
        S.append(S[-1] + v * c)
        neg.append(-v)
    r = len(neg)

    def sides(k):
        j0 = bisect_left(P, k, 1)  # block holding position k (1-based)
        v0 = -neg[j0 - 1]
        lhs = S[j0 - 1] + (k - P[j0 - 1]) * v0
        s = max(bisect_left(neg, -k) + 1, j0 + 1)  # first later block with v <= k
        rhs = k * (k - 1) + (P[j0] - k) * min(k, v0) + k * (P[s - 1] - P[j0]) + S[r] - S[s - 1]
        return lhs, rhs

    ks = [p for p in P[1:] if p < m]  # descents below m
    if m:
        ks.append(m)
    failing = None
    for k in ks:
        lhs, rhs = sides(k)
        if lhs > rhs:
            failing = k
            break
    return GraphicVerdict(total % 2 == 0 and failing is None, failing, m, tuple(ks))


def zz_tv_reduced(seq) -> GraphicVerdict:
    """Reduced Erdős–Gallai test: only k = m and the descents below m are checked.

    m is max{i : d_i >= i}. When m equals the sequence length the k = n
    inequality is checked as well; it is a necessary condition and the
    single-vertex case needs it.
    """
    ms = _as_multiset(seq)
    verdict = _reduced_check(ms.items(), ms.n, ms.total)
    assert verdict.m * verdict.m <= ms.total
    return verdict


def erdos_gallai_full(seq) -> GraphicVerdict:
    """Full Erdős–Gallai test over every k in 1..n, vectorised.

    Uses ``sum_{i>k} min(k, d_i) = sum_i min(k, d_i) - sum_{i<=k} min(k, d_i)``
    with counts of degrees >= k and prefix sums of the sorted sequence.
    """
    ms = _as_multiset(seq)
    n = ms.n
    m = durfee_m(ms.items())
    if n == 0:
        return GraphicVerdict(True, None, 0, ())
    d = np.array(ms.degrees(), dtype=np.int64)
    prefix = np.concatenate([[0], np.cumsum(d)])
    top = max(ms.max_degree(), n) + 2
    cnt = np.bincount(d, minlength=top)
    # ge[k] = #{i : d_i >= k}; below[k] = sum of d_i < k
    ge = cnt[::-1].cumsum()[::-1]
    below = np.concatenate([[0], np.cumsum(np.arange(top) * cnt)])[:top]
    k = np.arange(1, n + 1)
    all_min = below[k] + k * ge[k]
    w = ge[k]
    head_min = np.where(w >= k, k * k, k * w + prefix[k] - prefix[np.minimum(w, k)])
    lhs = prefix[k]
    rhs = k * (k - 1) + all_min - head_min
    bad = np.flatnonzero(lhs > rhs)
    failing = int(k[bad[0]]) if bad.size else None
    graphic = ms.total % 2 == 0 and failing is None
    return GraphicVerdict(graphic, failing, m, range(1, n + 1))


def is_graphic(seq) -> bool:
    return zz_tv_reduced(seq).graphic


class _Fenwick:
    """Prefix counts and sums of degrees by value."""

    def __init__(self, size: int = 256) -> None:
        self.size = size
        self.cnt = [0] * (size + 1)
        self.tot = [0] * (size + 1)

    def add(self, value: int, times: int = 1) -> None:
        i = value + 1
        while i <= self.size:
            self.cnt[i] += times
            self.tot[i] += value * times
            i += i & -i

    def below(self, value: int) -> tuple[int, int]:
        """(count, sum) of entries with degree < value."""
        i = min(value, self.size)
        c = t = 0
        while i > 0:
            c += self.cnt[i]
            t += self.tot[i]
            i -= i & -i
        return c, t


class IncrementalVerifier:
    """Maintains PD_n as gap records arrive and checks each prefix.

    Only the blocks of degrees down to m are walked per check; the tail sums
    come from a Fenwick tree, so a check costs O(#blocks above m + log maxdeg).
    """

    def __init__(self) -> None:
        self.counts: Counter = Counter()
        self._values: list[int] = []  # distinct degrees, ascending
        self._tree = _Fenwick()
        self.n = 0
        self.total = 0

    def push(self, record: GapRecord) -> GraphicVerdict:
        if record.index != self.n + 1:
            raise SequencingError(f"expected record {self.n + 1}, got {record.index}")
        g = record.gap
        if g < 0:
            raise DomainError(f"negative gap {g}")
        if g not in self.counts:
            insort(self._values, g)
        self.counts[g] += 1
        if g >= self._tree.size:
            self._tree = _Fenwick(2 * g + 2)
            for v, c in self.counts.items():
                self._tree.add(v, c)
        else:
            self._tree.add(g)
        self.n += 1
        self.total += g
        return self.check()

    def check(self) -> GraphicVerdict:
        counts = self.counts
        # head blocks, largest degree first, until the Durfee condition breaks
        ends, sums, vals = [], [], []
        m = pos = acc = 0
        for v in reversed(self._values):
            c = counts[v]
            top = min(pos + c, v)
            if top > pos:
                m = top
            if pos >= v:
                break
            pos += c
            acc += v * c
            ends.append(pos)
            sums.append(acc)
            vals.append(v)
        ks = [e for e in ends if e < m]
        if m:
            ks.append(m)
        failing = None
        j = 0
        for k in ks:
            while ends[j] < k:
                j += 1
            lhs = sums[j] - (ends[j] - k) * vals[j]
            lt_count, lt_sum = self._tree.below(k)
            # the top k degrees are all >= k, so they contribute k*k to sum(min(k, d))
            rhs = k * (k - 1) + k * (self.n - lt_count) + lt_sum - k * k
            if lhs > rhs:
                failing = k
                break
        return GraphicVerdict(self.total % 2 == 0 and failing is None, failing, m, tuple(ks))

    def snapshot(self) -> DegreeMultiset:
        return DegreeMultiset(self.counts)


def incremental_pd_verifier(gaps: Iterable[GapRecord], max_n: int) -> Iterator[tuple[int, GraphicVerdict]]:
    """Yield ``(n, verdict for PD_n)`` for n = 1 .. max_n."""
    if max_n < 2:
        raise DomainError("max_n must be >= 2")
    verifier = IncrementalVerifier()
    for rec in gaps:
        if rec.index > max_n:
            break
        yield rec.index, verifier.push(rec)


def sweep(max_n: int, gaps: Iterable[GapRecord] | None = None) -> dict:
    """Check PD_n for all n <= max_n; returns a JSON-ready report."""
    from .primes import nth_primes, sieve_gaps

    if gaps is None:
        gaps = sieve_gaps(int(nth_primes(max_n)[-1]))
    failures = []
    checked = 0
    for n, verdict in incremental_pd_verifier(gaps, max_n):
        checked = n
        if n >= 2 and not verdict.graphic:
            failures.append({"n": n, **verdict.to_json()})
    return {
        "maxN": max_n,
        "checked": checked,
        "failures": failures,
        "pass": checked == max_n and not failures,
    }
