import numpy as np

from juristat.rng import XorShift64Star, splitmix64


def scalar_xorshift64star(state, count):
    """Reference one-lane implementation in plain Python integers."""
    mask = (1 << 64) - 1
    out = []
    for _ in range(count):
        state ^= state >> 12
        state ^= (state << 25) & mask
        state ^= state >> 27
        out.append((state * 2685821657736338717) & mask)
    return out


def test_matches_scalar_reference():
    seed = 12345
    gen = XorShift64Star(seed, lanes=1)
    assert list(map(int, gen.next_uint64(50))) == scalar_xorshift64star(splitmix64(seed), 50)


def test_lane_interleaving():
    gen = XorShift64Star(9, lanes=3)
    draws = gen.next_uint64(9).reshape(3, 3)
    for lane in range(3):
        assert list(map(int, draws[:, lane])) == scalar_xorshift64star(splitmix64(9 + lane), 3)


def test_uniform_range_and_moments():
    u = XorShift64Star(2024).random(200_000)
    assert u.min() >= 0.0 and u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.005
    assert abs(u.var() - 1 / 12) < 0.002


def test_reproducible():
    a = XorShift64Star(5).random(1000)
    b = XorShift64Star(5).random(1000)
    assert np.array_equal(a, b)
