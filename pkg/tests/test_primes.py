import math
import struct

import numpy as np
import pytest

from gapgraph import primes
from gapgraph.exceptions import CacheChecksumError, DomainError, EmptyRangeError


def naive_primes(limit):
    return [p for p in range(2, limit + 1) if all(p % q for q in range(2, math.isqrt(p) + 1))]


def naive_psi(x):
    total = 0.0
    for p in naive_primes(x):
        q = p
        while q <= x:
            total += math.log(p)
            q *= p
    return total


@pytest.mark.parametrize("limit", [2, 3, 10, 97, 100, 1000, 7919])
def test_primes_upto_matches_trial_division(limit):
    assert primes.primes_upto(limit).tolist() == naive_primes(limit)


def test_segments_cover_range_across_boundaries():
    segs = list(primes.prime_segments(2, 50_000, segment_odds=257))
    got = np.concatenate(segs).tolist()
    assert got == naive_primes(50_000)
    assert len(segs) > 10


def test_segment_range_inside_interval():
    got = np.concatenate(list(primes.prime_segments(1000, 1100))).tolist()
    assert got == [p for p in naive_primes(1100) if p >= 1000]


def test_known_counts():
    assert primes.pi(10**6) == 78498
    assert primes.pi(10**7) == 664579
    assert int(primes.nth_primes(10**6)[-1]) == 15485863


def test_gap_sequence_starts_at_one():
    # p_0 = 1, so the first gap is 2 - 1
    assert primes.gap_sequence(8).tolist() == [1, 1, 2, 2, 4, 2, 4, 2]


def test_sieve_gaps_records_and_resume():
    recs = list(primes.sieve_gaps(200))
    assert recs[0] == primes.GapRecord(1, 2, 1)
    assert [r.prime for r in recs] == naive_primes(200)
    assert all(r.index == i + 1 for i, r in enumerate(recs))
    tail = list(primes.sieve_gaps(200, start=recs[9]))
    assert tail == recs[10:]


@pytest.mark.parametrize("x", [1, 2, 10, 30, 100, 1024, 4096, 10_000])
def test_psi_oracle(x):
    assert primes.psi(x) == pytest.approx(naive_psi(x), rel=1e-12, abs=1e-12)


def test_psi_rejects_nonpositive():
    with pytest.raises(DomainError):
        primes.psi(0)


def test_theta_le_psi():
    for x in (10, 100, 1000, 10**5):
        assert primes.theta(x) <= primes.psi(x)
    assert primes.theta(10) == pytest.approx(math.log(2 * 3 * 5 * 7))


def test_forward_gaps_and_max_gap():
    # primes <= 30 and the gaps that start at them; the last one ends at 31
    assert primes.forward_gaps(30).tolist() == [1, 2, 2, 4, 2, 4, 2, 4, 6, 2]
    assert primes.max_gap(30) == 6
    assert primes.max_gap(113) == 14  # 113 -> 127
    with pytest.raises(DomainError):
        primes.max_gap(2)


def test_k_and_s_against_direct_count():
    x = 10_000
    ps = naive_primes(x + 100)
    gaps = [b - a for a, b in zip(ps, ps[1:]) if a <= x]
    for n in (1, 2, 4, 6, 10, 20):
        k, s = primes.k_and_s(x, n)
        assert k == sum(g >= n for g in gaps)
        assert s == sum(g for g in gaps if g > n)


def test_sn_below_x_for_n_at_least_two():
    for x in (7, 100, 10**4, 10**6):
        for n in (2, 4, 8):
            assert primes.k_and_s(x, n)[1] <= x


def test_gap_stats_histogram_sums():
    st = primes.gap_stats(10**5, [2, 4])
    assert sum(st.histogram.values()) == primes.pi(10**5)
    assert st.max_gap == max(st.histogram)
    js = st.to_json()
    assert js["kN"]["2"] == st.k[2]


def test_varint_roundtrip():
    vals = [0, 1, 127, 128, 300, 2**32, 2**63 - 1]
    assert primes.decode_varints(primes.encode_varints(vals)) == vals
    with pytest.raises(CacheChecksumError):
        primes.decode_varints(b"\x80")
    with pytest.raises(DomainError):
        primes.encode_varints([-1])


def test_cache_roundtrip(tmp_path):
    path = primes.write_gap_cache(tmp_path / "gaps.bin", 10**5)
    limit, gaps = primes.read_gap_cache(path)
    assert limit == 10**5
    assert np.array_equal(np.cumsum(gaps) + 1, primes.primes_upto(10**5))


def test_cache_detects_corruption(tmp_path):
    path = primes.write_gap_cache(tmp_path / "gaps.bin", 10**4)
    data = bytearray(path.read_bytes())
    data[-5] ^= 0x01
    path.write_bytes(bytes(data))
    with pytest.raises(CacheChecksumError):
        primes.read_gap_cache(path)
    path.write_bytes(b"NOPE" + bytes(20))
    with pytest.raises(CacheChecksumError):
        primes.read_gap_cache(path)


def test_cache_rejects_gaps_past_limit(tmp_path):
    payload = primes.encode_varints([1, 1, 2, 2])
    import zlib

    path = tmp_path / "gaps.bin"
    path.write_bytes(primes.CACHE_MAGIC + struct.pack("<QI", 5, zlib.crc32(payload)) + payload)
    with pytest.raises(CacheChecksumError):
        primes.read_gap_cache(path)


def test_cached_gaps_reuses_larger_cache(tmp_path, monkeypatch):
    big = primes.cached_gaps(10**5, tmp_path)
    assert (tmp_path / "gaps.bin").exists()
    small = primes.cached_gaps(1000, tmp_path)
    assert np.array_equal(small, big[: primes.pi(1000)])
    monkeypatch.setenv(primes.CACHE_ENV, str(tmp_path / "env"))
    primes.cached_gaps(100)
    assert (tmp_path / "env" / "gaps.bin").exists()


def test_sieve_gaps_empty_range():
    with pytest.raises(EmptyRangeError):
        list(primes.sieve_gaps(1))
