import math

from fitts3d.rng import Xoshiro256StarStar, derive_stream_seed, _splitmix64


def test_splitmix64_published_vector():
    # reference outputs for seed 0
    state = 0
    outs = []
    for _ in range(3):
        state, out = _splitmix64(state)
        outs.append(out)
    assert outs[0] == 0xE220A8397B1DCDAF
    assert outs[1] == 0x6E789E6AA1B965F4
    assert outs[2] == 0x06C45D188009454F


def test_stream_determinism():
    a = Xoshiro256StarStar(42)
    b = Xoshiro256StarStar(42)
    assert [a.next_uint64() for _ in range(100)] == [b.next_uint64() for _ in range(100)]
    c = Xoshiro256StarStar(43)
    assert Xoshiro256StarStar(42).next_uint64() != c.next_uint64()


def test_uniform_range_and_grain():
    g = Xoshiro256StarStar(7)
    vals = [g.random() for _ in range(10000)]
    assert all(0.0 <= v < 1.0 for v in vals)
    mean = sum(vals) / len(vals)
    assert abs(mean - 0.5) < 0.02


def test_normal_moments():
    g = Xoshiro256StarStar(123)
    vals = [g.normal() for _ in range(20000)]
    n = len(vals)
    mean = sum(vals) / n
    var = sum((v - mean) ** 2 for v in vals) / n
    assert abs(mean) < 0.03
    assert abs(var - 1.0) < 0.05
    assert all(math.isfinite(v) for v in vals)


def test_normal_consumes_two_uniforms():
    # the documented draw order: each normal() advances the stream by
    # exactly two 64-bit outputs
    g1 = Xoshiro256StarStar(9)
    g1.normal()
    after_normal = g1.next_uint64()
    g2 = Xoshiro256StarStar(9)
    g2.next_uint64()
    g2.next_uint64()
    assert after_normal == g2.next_uint64()


def test_derive_stream_seed():
    assert derive_stream_seed(0, 0) == 0xE220A8397B1DCDAF
    assert derive_stream_seed(0, 1) == 0x6E789E6AA1B965F4
    seeds = {derive_stream_seed(12345, i) for i in range(64)}
    assert len(seeds) == 64  # no collisions across condition indices
    assert derive_stream_seed(12345, 3) == derive_stream_seed(12345, 3)
