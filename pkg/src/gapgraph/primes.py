"""Segmented sieve, the prime gap stream PD_n and gap statistics.

Gap indexing follows two conventions that must not be mixed up:

* the *backward* gap of the l-th prime, ``p_l - p_{l-1}`` with ``p_0 = 1``,
  which is what the degree sequence PD_n is built from;
* the *forward* gap ``p_{l+1} - p_l`` used by ``k_N(x)``, ``S_N(x)`` and
  ``M(x)``, indexed by primes ``p_l <= x``.
"""

from __future__ import annotations

import math
import os
import struct
import zlib
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .exceptions import CacheChecksumError, DomainError, EmptyRangeError

SEGMENT_ODDS = 1 << 20
TELESCOPE_EVERY = 100_000
CACHE_MAGIC = b"PGG1"
CACHE_ENV = "GAPGRAPH_CACHE"


class GapRecord(NamedTuple):
    index: int
    prime: int
    gap: int


@dataclass(frozen=True)
class GapStats:
    x: int
    max_gap: int
    k: dict[int, int]
    s: dict[int, int]
    histogram: dict[int, int] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "maxGap": self.max_gap,
            "kN": {str(n): v for n, v in self.k.items()},
            "sN": {str(n): v for n, v in self.s.items()},
            "histogram": {str(g): c for g, c in sorted(self.histogram.items())},
        }


def small_primes(limit: int) -> np.ndarray:
    """Plain sieve of Eratosthenes, used for base primes up to sqrt(limit)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def prime_segments(lo: int, hi: int, segment_odds: int = SEGMENT_ODDS) -> Iterator[np.ndarray]:
    """Yield the primes in ``[lo, hi]`` one segment at a time, ascending.

    Each segment is an odd-only bitmap of ``segment_odds`` entries, so a
    segment boundary is always an even number and the sieve can be resumed
    from any boundary.
    """
    if hi < max(lo, 2):
        return
    if lo <= 2:
        yield np.array([2], dtype=np.int64)
        lo = 3
    base = small_primes(math.isqrt(hi) + 1)[1:]  # odd base primes
    low = lo if lo % 2 else lo + 1
    span = 2 * segment_odds
    while low <= hi:
        high = min(low + span, hi + 1)  # exclusive
        count = (high - low + 1) // 2
        mask = np.ones(count, dtype=bool)
        for p in base:
            p = int(p)
            p2 = p * p
            if p2 >= high:
                break
            start = max(p2, -(-low // p) * p)
            if start % 2 == 0:
                start += p
            if start < high:
                mask[(start - low) // 2 :: p] = False
        idx = np.flatnonzero(mask)
        if idx.size:
            yield low + 2 * idx.astype(np.int64)
        low = high if high % 2 else high + 1


def primes_upto(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    parts = list(prime_segments(2, limit))
    return np.concatenate(parts) if parts else np.array([], dtype=np.int64)


class _PrimeCache:
    """Grow-only in-process table of the primes sieved so far."""

    def __init__(self) -> None:
        self.limit = 1
        self.primes = np.array([], dtype=np.int64)

    def through(self, x: int) -> np.ndarray:
        """Primes up to at least ``x`` (possibly more)."""
        if x > self.limit:
            new_limit = max(x, 2 * self.limit, 1 << 16)
            extra = list(prime_segments(self.limit + 1, new_limit))
            if extra:
                self.primes = np.concatenate([self.primes, *extra])
            self.limit = new_limit
        return self.primes

    def beyond(self, x: int) -> np.ndarray:
        """Primes up to and including the first prime above ``x``."""
        primes = self.through(x)
        bound = x
        while primes.size == 0 or primes[-1] <= x:
            bound = 2 * bound + 2
            primes = self.through(bound)
        return primes


_cache = _PrimeCache()


def nth_primes(n: int) -> np.ndarray:
    """The first ``n`` primes ``p_1 .. p_n``."""
    if n < 1:
        return np.array([], dtype=np.int64)
    est = 30 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 10
    primes = _cache.through(est)
    while primes.size < n:
        est *= 2
        primes = _cache.through(est)
    return primes[:n]


def gap_sequence(n: int) -> np.ndarray:
    """PD_n as an array: backward gaps of ``p_1 .. p_n`` with ``p_0 = 1``."""
    primes = nth_primes(n)
    return np.diff(primes, prepend=1)


def sieve_gaps(limit: int, start: GapRecord | None = None) -> Iterator[GapRecord]:
    """Stream a :class:`GapRecord` for every prime ``<= limit``.

    Pass the last record of an earlier run as ``start`` to resume right
    after it.
    """
    if limit < 2:
        raise EmptyRangeError(f"no primes up to {limit}")
    if start is None:
        index, prev, running = 0, 1, 0
        lo = 2
    else:
        index, prev = start.index, start.prime
        running = prev - 1
        lo = prev + 1
    for seg in prime_segments(lo, limit):
        gaps = np.diff(seg, prepend=prev)
        for p, g in zip(seg.tolist(), gaps.tolist()):
            index += 1
            running += g
            if index % TELESCOPE_EVERY == 0 and running != p - 1:
                raise AssertionError(f"gap sum broke telescoping at index {index}")
            yield GapRecord(index, p, g)
        prev = int(seg[-1])


def pi(x: int) -> int:
    if x < 2:
        return 0
    return int(np.searchsorted(_cache.through(x), x, side="right"))


def psi(x: int) -> float:
    """Chebyshev's psi: sum of log p over prime powers p**k <= x."""
    if x < 1:
        raise DomainError("psi needs x >= 1")
    if x < 2:
        return 0.0
    primes = _cache.through(x)
    primes = primes[: np.searchsorted(primes, x, side="right")]
    root = math.isqrt(x)
    terms = []
    for p in primes[: np.searchsorted(primes, root, side="right")].tolist():
        k, q = 0, p
        while q <= x:
            k += 1
            q *= p
        terms.append(k * math.log(p))
    large = primes[np.searchsorted(primes, root, side="right") :]
    terms.extend(np.log(large.astype(np.float64)).tolist())
    return math.fsum(terms)


def theta(x: float) -> float:
    """Chebyshev's theta: sum of log p over primes p <= x."""
    x = int(math.floor(x))
    if x < 2:
        return 0.0
    primes = _cache.through(x)
    primes = primes[: np.searchsorted(primes, x, side="right")]
    return math.fsum(np.log(primes.astype(np.float64)).tolist())


def forward_gaps(x: int) -> np.ndarray:
    """Forward gaps ``p_{l+1} - p_l`` for every prime ``p_l <= x``."""
    primes = _cache.beyond(x)
    count = int(np.searchsorted(primes, x, side="right"))
    return primes[1 : count + 1] - primes[:count]


def max_gap(x: int) -> int:
    """M(x): the largest gap starting at a prime ``<= x``.

    The gap may end above ``x``.
    """
    if x < 3:
        raise DomainError("max_gap needs x >= 3")
    return int(forward_gaps(x).max())


def k_and_s(x: int, n: int) -> tuple[int, int]:
    """``(k_N(x), S_N(x))``: count of forward gaps ``>= N`` and sum of those ``> N``."""
    if x < 2 or n < 1:
        raise DomainError("k_and_s needs x >= 2 and N >= 1")
    gaps = forward_gaps(x)
    return int((gaps >= n).sum()), int(gaps[gaps > n].sum())


def gap_stats(x: int, n_values: Iterable[int]) -> GapStats:
    gaps = forward_gaps(x)
    values, counts = np.unique(gaps, return_counts=True)
    hist = dict(zip(values.tolist(), counts.tolist()))
    ks, ss = {}, {}
    for n in sorted(set(n_values)):
        ks[n], ss[n] = k_and_s(x, n)
    return GapStats(x=x, max_gap=int(values.max()), k=ks, s=ss, histogram=hist)


def histogram_of(gaps: Iterable[int]) -> Counter:
    return Counter(gaps)


# --- gap cache file -------------------------------------------------------
# Layout: b"PGG1", u64 limit, u32 crc32(payload), payload = LEB128 varints.


def encode_varints(values: Iterable[int]) -> bytes:
    out = bytearray()
    for v in values:
        v = int(v)
        if v < 0:
            raise DomainError("varints must be nonnegative")
        while v >= 0x80:
            out.append((v & 0x7F) | 0x80)
            v >>= 7
        out.append(v)
    return bytes(out)


def decode_varints(data: bytes) -> list[int]:
    values, cur, shift = [], 0, 0
    for b in data:
        cur |= (b & 0x7F) << shift
        if b & 0x80:
            shift += 7
        else:
            values.append(cur)
            cur, shift = 0, 0
    if shift:
        raise CacheChecksumError("truncated varint at end of gap cache")
    return values


def write_gap_cache(path: str | os.PathLike, limit: int) -> Path:
    path = Path(path)
    primes = primes_upto(limit)
    payload = encode_varints(np.diff(primes, prepend=1).tolist())
    header = CACHE_MAGIC + struct.pack("<QI", limit, zlib.crc32(payload))
    path.write_bytes(header + payload)
    return path


def read_gap_cache(path: str | os.PathLike) -> tuple[int, np.ndarray]:
    """Return ``(limit, gaps)`` from a cache file, verifying its checksum."""
    data = Path(path).read_bytes()
    if len(data) < 16 or data[:4] != CACHE_MAGIC:
        raise CacheChecksumError(f"{path}: not a gap cache (bad magic)")
    limit, crc = struct.unpack("<QI", data[4:16])
    payload = data[16:]
    if zlib.crc32(payload) != crc:
        raise CacheChecksumError(f"{path}: checksum mismatch")
    gaps = np.array(decode_varints(payload), dtype=np.int64)
    if gaps.size and (gaps.sum() + 1 > limit):
        raise CacheChecksumError(f"{path}: gaps run past the recorded limit")
    return limit, gaps


def cached_gaps(limit: int, cache_dir: str | os.PathLike | None = None) -> np.ndarray:
    """PD gaps for all primes ``<= limit``, reusing ``gaps.bin`` when it is large enough."""
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    if cache_dir is None:
        return np.diff(primes_upto(limit), prepend=1)
    path = Path(cache_dir) / "gaps.bin"
    if path.exists():
        cached_limit, gaps = read_gap_cache(path)
        if cached_limit >= limit:
            primes = np.cumsum(gaps) + 1
            return gaps[: np.searchsorted(primes, limit, side="right")]
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    write_gap_cache(path, limit)
    return read_gap_cache(path)[1]
