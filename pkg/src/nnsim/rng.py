"""Deterministic random number generation for reproducible simulations.

The core generator is xoshiro256** (Blackman & Vigna), seeded through
splitmix64 as its authors recommend. Distribution sampling uses fixed,
explicitly chosen algorithms (Box-Muller for normals, exponentiation of a
normal for log-normals, Marsaglia-Tsang for gammas) so that a given seed
produces the same variate stream in any compliant reimplementation,
independent of library defaults.

Every distribution method documents how many core draws it consumes; the
draw order is part of the reproducibility contract.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_INV_2_53 = 2.0 ** -53


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


def splitmix64(seed: int):
    """Endless splitmix64 stream; used only to expand seeds into state."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


class Xoshiro256StarStar:
    """xoshiro256** generator with the distribution helpers the model needs.

    Not thread-safe; each simulation stream owns its own instance.
    """

    def __init__(self, seed: int):
        expander = splitmix64(seed)
        self._s = [next(expander) for _ in range(4)]
        if not any(self._s):
            # the all-zero state is the one fixed point of the generator
            self._s[0] = 0x9E3779B97F4A7C15

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def random(self) -> float:
        """Uniform in [0, 1), 53 bits of precision. Consumes one draw."""
        return (self.next_uint64() >> 11) * _INV_2_53

    def standard_normal(self) -> float:
        """Box-Muller, cosine form. Consumes exactly two draws per call.

        No spare value is cached: each call is a pure function of the next
        two uniforms, which keeps stream accounting trivial.
        """
        u1 = 1.0 - self.random()  # in (0, 1], keeps the log finite
        u2 = self.random()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def normal(self, mean: float, std_dev: float) -> float:
        return mean + std_dev * self.standard_normal()

    def lognormal(self, mean_log: float, sigma_log: float) -> float:
        return math.exp(self.normal(mean_log, sigma_log))

    def gamma(self, shape: float, scale: float) -> float:
        """Marsaglia-Tsang squeeze method; rejection, so draws vary per call.

        Shapes below 1 are boosted through Gamma(shape + 1) and scaled by
        U^(1/shape), the standard companion trick.
        """
        if shape <= 0.0 or scale <= 0.0:
            raise ValueError("gamma requires shape > 0 and scale > 0")
        if shape < 1.0:
            u = 1.0 - self.random()
            return self.gamma(shape + 1.0, scale) * u ** (1.0 / shape)
        d = shape - 1.0 / 3.0
        c = 1.0 / math.sqrt(9.0 * d)
        while True:
            x = self.standard_normal()
            v = 1.0 + c * x
            if v <= 0.0:
                continue
            v = v * v * v
            u = 1.0 - self.random()
            if u < 1.0 - 0.0331 * x * x * x * x:
                return d * v * scale
            if math.log(u) < 0.5 * x * x + d * (1.0 - v + math.log(v)):
                return d * v * scale
