"""Portable, seedable pseudo-random generator for the Monte Carlo routines.

The generator is xorshift64* (Vigna 2016): shifts (12, 25, 27) and the output
multiplier 2685821657736338717. To keep numpy vectorisation, ``lanes``
independent xorshift64* streams advance in lock step; lane ``j`` is seeded
with SplitMix64 applied to ``seed + j``. Draws are emitted step by step,
lane 0 first, so a given ``(seed, lanes)`` yields the same sequence on every
platform.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_MULT = np.uint64(2685821657736338717)
_S12, _S25, _S27 = np.uint64(12), np.uint64(25), np.uint64(27)
_S11 = np.uint64(11)


def splitmix64(x: int) -> int:
    """One SplitMix64 output for state ``x`` (used only for seeding)."""
    z = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int, lanes: int = 1024):
        if lanes < 1:
            raise ValueError("lanes must be positive")
        states = []
        for j in range(lanes):
            s = splitmix64((int(seed) + j) & _MASK64)
            states.append(s or 0x2545F4914F6CDD1D)  # all-zero state is a fixed point
        self._state = np.array(states, dtype=np.uint64)

    def _step(self) -> np.ndarray:
        x = self._state
        x ^= x >> _S12
        x ^= x << _S25
        x ^= x >> _S27
        self._state = x
        return x * _MULT

    def next_uint64(self, size: int) -> np.ndarray:
        lanes = self._state.size
        steps = -(-size // lanes)
        out = np.empty((steps, lanes), dtype=np.uint64)
        for i in range(steps):
            out[i] = self._step()
        return out.ravel()[:size]

    def random(self, size: int) -> np.ndarray:
        """``size`` doubles uniform on [0, 1), built from the top 53 bits."""
        return (self.next_uint64(size) >> _S11).astype(np.float64) * (2.0**-53)
