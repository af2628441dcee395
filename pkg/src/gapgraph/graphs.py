"""Simple graphs, Havel–Hakimi realization, matchings and realization enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .exceptions import DomainError, RealizationError, ScaleRefusal
from .graphic import DegreeMultiset, zz_tv_reduced

ENUMERATION_MAX_N = 10


class SimpleGraph:
    """Undirected graph without loops or multi-edges on vertices ``0..n-1``.

    Adjacency is stored as sets so the growth process can rewire edges in
    place; :meth:`neighbors` returns the sorted neighbor list.
    """

    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int]] = ()):
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.m = 0
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n(self) -> int:
        return len(self.adj)

    def add_vertex(self) -> int:
        self.adj.append(set())
        return len(self.adj) - 1

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise DomainError(f"self-loop at {u}")
        if v in self.adj[u]:
            raise DomainError(f"duplicate edge {u}-{v}")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.m += 1

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self.adj[u]:
            raise DomainError(f"no edge {u}-{v}")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.m -= 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def degree_multiset(self) -> DegreeMultiset:
        return DegreeMultiset.from_sequence(self.degrees())

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    def copy(self) -> SimpleGraph:
        g = SimpleGraph()
        g.adj = [set(a) for a in self.adj]
        g.m = self.m
        return g

    def check(self) -> None:
        """Assert the structural invariants (symmetry, no loops, edge count)."""
        half = 0
        for u, nbrs in enumerate(self.adj):
            assert u not in nbrs, f"self-loop at {u}"
            for v in nbrs:
                assert u in self.adj[v], f"asymmetric edge {u}-{v}"
            half += len(nbrs)
        assert half == 2 * self.m

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.adj == other.adj

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"

    # edge-list text format: header "n m", then one "u v" per line, 0-indexed
    def to_edgelist(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> SimpleGraph:
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows or len(rows[0]) != 2:
            raise DomainError("edge list needs an 'n m' header line")
        n, m = map(int, rows[0])
        g = cls(n, ((int(u), int(v)) for u, v in rows[1:]))
        if g.m != m:
            raise DomainError(f"header says {m} edges, found {g.m}")
        return g

    def write(self, path) -> None:
        Path(path).write_text(self.to_edgelist())

    @classmethod
    def read(cls, path) -> SimpleGraph:
        return cls.from_edgelist(Path(path).read_text())


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.edges)

    def verify(self, g: SimpleGraph) -> None:
        seen = set()
        for u, v in self.edges:
            assert g.has_edge(u, v), f"matching edge {u}-{v} not in graph"
            assert u not in seen and v not in seen, f"edge {u}-{v} shares a vertex"
            seen.update((u, v))

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> Matching:
        return cls(tuple((u, v) for u, v in enumerate(mate) if v > u))


def _degree_list(seq) -> list[int]:
    if isinstance(seq, DegreeMultiset):
        return seq.degrees()
    return [int(d) for d in seq]


def havel_hakimi_realize(seq) -> SimpleGraph:
    """Realize a degree sequence by the Havel–Hakimi laying-off procedure.

    Vertex ``i`` receives degree ``seq[i]`` (a :class:`DegreeMultiset` is
    laid out in descending order). At each round the vertex of largest
    residual degree is joined to the next-largest ones; ties go to the lower
    index, so the output is deterministic.
    """
    degs = _degree_list(seq)
    verdict = zz_tv_reduced(degs)
    if not verdict.graphic:
        raise RealizationError(
            f"sequence is not graphic (failing k={verdict.failing_k})", verdict.failing_k
        )
    g = SimpleGraph(len(degs))
    residual = list(degs)
    for _ in range(len(degs)):
        order = sorted(range(len(degs)), key=lambda v: (-residual[v], v))
        v = order[0]
        r = residual[v]
        if r == 0:
            break
        targets = order[1 : r + 1]
        if len(targets) < r or residual[targets[-1]] == 0:
            raise RealizationError("laying-off failed", verdict.failing_k)
        for u in targets:
            g.add_edge(v, u)
            residual[u] -= 1
        residual[v] = 0
    return g


# --- maximum matching -----------------------------------------------------


def _greedy(g: SimpleGraph, mate: list[int], rng: random.Random, target: int | None) -> int:
    """Randomized greedy matching; returns the number of edges added."""
    n = g.n
    size = 0
    if target is not None and n:
        # cheap random probing first; the growth process only needs a few edges
        for _ in range(8 * target + 16):
            if size >= target:
                return size
            v = rng.randrange(n)
            if mate[v] != -1:
                continue
            for u in sorted(g.adj[v]):
                if mate[u] == -1:
                    mate[u], mate[v] = v, u
                    size += 1
                    break
    order = list(range(n))
    rng.shuffle(order)
    for v in order:
        if target is not None and size >= target:
            break
        if mate[v] != -1:
            continue
        for u in sorted(g.adj[v]):
            if mate[u] == -1:
                mate[u], mate[v] = v, u
                size += 1
                break
    return size


def _augment_from(g: SimpleGraph, mate: list[int], root: int) -> bool:
    """Search an augmenting path from the exposed vertex ``root`` (Edmonds).

    Blossoms are contracted by relabelling ``base``, which maps each vertex
    to the representative of the pseudo-node containing it.
    """
    adj = g.adj
    n = g.n
    base = list(range(n))
    parent = [-1] * n
    in_tree = [False] * n
    in_tree[root] = True  # even (outer) vertices, already queued
    touched = [root]  # every vertex in the alternating tree
    queue = [root]

    def lca(a, b):
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark(v, b, child, blossom):
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                b = lca(v, to)
                blossom: set[int] = set()
                mark(v, b, to, blossom)
                mark(to, b, v, blossom)
                for i in touched:
                    if base[i] in blossom:
                        base[i] = b
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                touched.append(to)
                if mate[to] == -1:
                    # flip the alternating path ending at ``to``
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                m_to = mate[to]
                in_tree[m_to] = True
                touched.append(m_to)
                queue.append(m_to)
    return False


def maximum_matching(g: SimpleGraph, seed: int | None = 0, target: int | None = None) -> Matching:
    """Maximum-cardinality matching of a general graph.

    A seeded random greedy pass seeds the matching, then Edmonds' blossom
    search augments from every exposed vertex. With ``target`` set, the
    search stops as soon as the matching reaches that size.
    """
    rng = random.Random(seed)
    mate = [-1] * g.n
    size = _greedy(g, mate, rng, target)
    if target is None or size < target:
        for v in range(g.n):
            if target is not None and size >= target:
                break
            if mate[v] == -1 and g.adj[v] and _augment_from(g, mate, v):
                size += 1
    return Matching.from_mate(mate)


def vizing_matching_bound(seq, delta: int, d: int) -> bool:
    """Sufficient condition for every realization to contain ``d/2`` disjoint edges.

    True iff ``delta*d <= sum(d_i < delta) - sum(d_i >= delta)``.
    """
    if d % 2:
        raise DomainError(f"d must be even, got {d}")
    if d < 2 or delta < 1:
        raise DomainError("need delta >= 1 and even d >= 2")
    degs = _degree_list(seq)
    low = sum(x for x in degs if x < delta)
    high = sum(x for x in degs if x >= delta)
    return delta * d <= low - high


def _small_graphic(degs: list[int]) -> bool:
    # plain Erdős–Gallai; cheaper than the multiset machinery for n <= 10
    d = sorted(degs, reverse=True)
    if sum(d) % 2:
        return False
    left = 0
    for k in range(1, len(d) + 1):
        left += d[k - 1]
        if left > k * (k - 1) + sum(min(k, x) for x in d[k:]):
            return False
    return True


def _first_row_orbits(degs: list[int]) -> Iterator[tuple[int, ...]]:
    """Neighbor sets for vertex 0, one per orbit under permutations of equal-degree vertices."""
    classes: dict[int, list[int]] = {}
    for j in range(1, len(degs)):
        if degs[j] > 0:
            classes.setdefault(degs[j], []).append(j)
    groups = list(classes.values())

    def rec(k, left):
        if k == len(groups):
            if left == 0:
                yield ()
            return
        for c in range(min(left, len(groups[k])) + 1):
            for rest in rec(k + 1, left - c):
                yield tuple(groups[k][:c]) + rest

    return rec(0, degs[0])


def _adjacency_masks(degs: list[int], up_to_symmetry: bool = False) -> Iterator[tuple[int, ...]]:
    n = len(degs)
    residual = list(degs)
    adj = [0] * n

    def rec(i):
        if i == n:
            yield tuple(adj)
            return
        need = residual[i]
        cands = [j for j in range(i + 1, n) if residual[j] > 0]
        if need > len(cands):
            return
        choices = _first_row_orbits(degs) if i == 0 and up_to_symmetry else combinations(cands, need)
        for nbrs in choices:
            for j in nbrs:
                residual[j] -= 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            if _small_graphic(residual[i + 1 :]):
                yield from rec(i + 1)
            for j in nbrs:
                residual[j] += 1
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    if _small_graphic(degs):
        yield from rec(0)


def matching_number_small(adj: Sequence[int]) -> int:
    """Matching number of a graph given as neighbor bitmasks, by exhaustive recursion."""
    memo: dict[int, int] = {0: 0}

    def f(free):
        if free in memo:
            return memo[free]
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        best = f(rest)
        nb = adj[v] & rest
        while nb:
            b = nb & -nb
            nb ^= b
            best = max(best, 1 + f(rest & ~b))
        memo[free] = best
        return best

    return f((1 << len(adj)) - 1)


def enumerate_realizations(seq, cap: int | None = None) -> Iterator[SimpleGraph]:
    """Every labeled simple graph in which vertex ``i`` has degree ``seq[i]``.

    Backtracks vertex by vertex over the upper triangle of the adjacency
    matrix, pruning whenever the residual sequence stops being graphic.
    """
    degs = _degree_list(seq)
    n = len(degs)
    if n > ENUMERATION_MAX_N:
        raise ScaleRefusal(f"enumeration refused for n={n} > {ENUMERATION_MAX_N}")
    for emitted, adj in enumerate(_adjacency_masks(degs)):
        if cap is not None and emitted >= cap:
            return
        yield SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1])


def delta_condition_need(seq) -> int:
    """Largest d/2 such that the low/high degree condition holds for some delta, else 0."""
    degs = _degree_list(seq)
    best = 0
    for delta in range(1, max(degs, default=0) + 2):
        spare = sum(x for x in degs if x < delta) - sum(x for x in degs if x >= delta)
        d = spare // delta // 2 * 2
        if d >= 2:
            best = max(best, d // 2)
    return best


def matching_bound_sweep(max_len: int = 8, max_entry: int = 7) -> dict:
    """Check every realization of every qualifying sequence has the promised matching.

    Sorted graphic sequences up to ``max_len`` entries of size at most
    ``max_entry`` are tried; realizations are visited up to relabeling of
    vertex 0's neighbors within equal-degree classes, which preserves the
    matching number.
    """
    if max_len > ENUMERATION_MAX_N:
        raise ScaleRefusal(f"sweep refused for length {max_len} > {ENUMERATION_MAX_N}")
    sequences = graphs_checked = 0
    counterexamples = []
    for n in range(1, max_len + 1):
        for seq in combinations_with_replacement(range(max_entry, -1, -1), n):
            if not _small_graphic(list(seq)):
                continue
            need = delta_condition_need(seq)
            if not need:
                continue
            sequences += 1
            for adj in _adjacency_masks(list(seq), up_to_symmetry=True):
                graphs_checked += 1
                nu = matching_number_small(adj)
                if nu < need:
                    counterexamples.append({"seq": list(seq), "need": need, "matching": nu})
                    break
    return {"maxLen": max_len, "maxEntry": max_entry, "sequences": sequences,
            "graphsChecked": graphs_checked, "counterexamples": counterexamples,
            "pass": not counterexamples}
