"""Degree-preserving growth (DPG) driven by the prime gap sequence.

A growth step adds a vertex of even degree 2*nu: delete nu disjoint edges
and join the new vertex to their 2*nu endpoints. Every old vertex keeps
its degree, so a realization of PD_n becomes a realization of PD_{n+1}.
"""

from __future__ import annotations

import random
from bisect import insort
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Iterator

from .exceptions import DomainError, DpgStuckError
from .graphs import SimpleGraph, enumerate_realizations, havel_hakimi_realize, maximum_matching
from .primes import gap_sequence


@dataclass
class DpgState:
    graph: SimpleGraph
    n: int
    next_gap: int
    rng: random.Random | None = None


@dataclass(frozen=True)
class DpgCertificate:
    n: int
    gap: int
    matching_size: int
    witness_n: int | None
    lhs: int | None
    rhs: int | None
    passed: bool

    def to_json(self) -> dict:
        d = asdict(self)
        return {
            "n": d["n"],
            "gap": d["gap"],
            "matchingSize": d["matching_size"],
            "witnessN": d["witness_n"],
            "lhs": d["lhs"],
            "rhs": d["rhs"],
            "pass": d["passed"],
        }


def _next_gap_after(n: int) -> int:
    """p_{n+1} - p_n."""
    return int(gap_sequence(n + 1)[-1])


def dpg_step(state: DpgState, following_gap: int | None = None) -> DpgState:
    """Apply one growth step, rewiring ``state.graph`` in place.

    The returned state shares the (mutated) graph; the input state must not
    be reused. ``following_gap`` is the gap after the new one and defaults to
    the next prime gap.
    """
    gap = state.next_gap
    if gap % 2 or gap < 2:
        raise DomainError(f"growth step needs an even gap >= 2, got {gap}")
    nu = gap // 2
    g = state.graph
    rng = state.rng or random.Random(0)
    matching = maximum_matching(g, seed=rng.getrandbits(32), target=nu)
    if len(matching) < nu:
        raise DpgStuckError(state.n, gap, len(matching))
    edges = sorted(matching.edges[:nu])
    ends = sorted(x for e in edges for x in e)
    before = [g.degree(x) for x in ends]
    for u, v in edges:
        g.remove_edge(u, v)
    new = g.add_vertex()
    for x in ends:
        g.add_edge(new, x)
    assert [g.degree(x) for x in ends] == before and g.degree(new) == gap
    if following_gap is None:
        following_gap = _next_gap_after(state.n + 1)
    return DpgState(g, state.n + 1, following_gap, rng)


class _GapHistogram:
    """PD_n kept as gap -> count with the distinct values in sorted order."""

    def __init__(self, gaps):
        self.counts = Counter(int(g) for g in gaps)
        self.values = sorted(self.counts)
        self.total = sum(g * c for g, c in self.counts.items())

    def add(self, gap: int) -> None:
        if gap not in self.counts:
            insort(self.values, gap)
        self.counts[gap] += 1
        self.total += gap

    def witness(self, next_gap: int) -> tuple[int | None, int, int]:
        """First N >= 2 with N*next_gap + 2*S'_N < p_n, where S'_N sums gaps > N.

        S'_N only changes at gap values, so N ranges over 2 and the distinct
        gaps above 2. Returns ``(N or None, lhs, rhs)``; without a witness
        the smallest left side found is reported.
        """
        p_n = self.total + 1
        above = self.total - sum(g * self.counts[g] for g in self.values if g <= 2)
        candidates = [2] + [v for v in self.values if v > 2]
        best = None
        for i, N in enumerate(candidates):
            if i:
                above -= N * self.counts[N]
            lhs = N * next_gap + 2 * above
            if lhs < p_n:
                return N, lhs, p_n
            if best is None or lhs < best:
                best = lhs
        return None, best, p_n


def dpg_inequality_witness(n: int) -> DpgCertificate:
    """Search an integer N >= 2 satisfying the growth inequality at PD_n."""
    if n < 3:
        raise DomainError("witness search needs n >= 3")
    gaps = gap_sequence(n + 1)
    hist = _GapHistogram(gaps[:n].tolist())
    nxt = int(gaps[n])
    witness, lhs, rhs = hist.witness(nxt)
    return DpgCertificate(n, nxt, 0, witness, lhs, rhs, witness is not None)


def dpg_run(start_n: int, end_n: int, seed: int = 0, check_degrees: bool = True) -> Iterator[DpgCertificate]:
    """Grow a realization of PD_start_n up to PD_end_n, one certificate per step.

    Vertex ``l - 1`` carries the gap ``p_l - p_{l-1}``. With
    ``check_degrees`` the full degree multiset is compared with PD_n after
    every step.
    """
    if not 2 <= start_n < end_n:
        raise DomainError("need 2 <= start_n < end_n")
    gaps = gap_sequence(end_n + 1).tolist()
    graph = havel_hakimi_realize(gaps[:start_n])
    state = DpgState(graph, start_n, gaps[start_n], random.Random(seed))
    hist = _GapHistogram(gaps[:start_n])
    for n in range(start_n, end_n):
        gap = gaps[n]
        witness, lhs, rhs = hist.witness(gap) if n >= 3 else (None, None, None)
        state = dpg_step(state, following_gap=gaps[n + 1])
        hist.add(gap)
        if check_degrees and Counter(state.graph.degrees()) != hist.counts:
            raise AssertionError(f"degree multiset diverged from PD_{n + 1}")
        yield DpgCertificate(n, gap, gap // 2, witness, lhs, rhs, True)


def final_graph(start_n: int, end_n: int, seed: int = 0) -> SimpleGraph:
    """Run the growth process and return the final realization of PD_end_n."""
    gaps = gap_sequence(end_n + 1).tolist()
    state = DpgState(havel_hakimi_realize(gaps[:start_n]), start_n, gaps[start_n], random.Random(seed))
    for n in range(start_n, end_n):
        state = dpg_step(state, following_gap=gaps[n + 1])
    return state.graph


def small_n_matching_check(max_n: int = 8) -> list[dict]:
    """For each n <= max_n, the smallest maximum matching over all labeled
    realizations of PD_n, against the half-gap the next step needs."""
    rows = []
    gaps = gap_sequence(max_n + 1).tolist()
    for n in range(2, max_n + 1):
        need = gaps[n] // 2
        worst, count = None, 0
        for g in enumerate_realizations(gaps[:n]):
            size = len(maximum_matching(g))
            count += 1
            worst = size if worst is None else min(worst, size)
        rows.append({"n": n, "nextGap": gaps[n], "realizations": count,
                     "minMaxMatching": worst, "ok": worst is not None and worst >= need})
    return rows
