"""Deterministic 64-bit generator for reproducible random corpora.

The random-graph generator is specified down to the bit so that two runs
(or two machines) given the same seed produce identical edge sets.  We use
SplitMix64: the entire state is one 64-bit word and the update is a fixed
sequence of xor-shifts and multiplies, which makes it trivial to port.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator.

    next_u64 advances the state by the golden-gamma constant and applies
    the standard mix (xor-shift 30 / mul / xor-shift 27 / mul / xor-shift 31).
    random() maps the top 53 bits to a float in [0, 1).
    """

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4B9FB) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (inclusive), by rejection-free modulo.

        Bias is below 2**-40 for ranges under 2**24, which is all we use.
        """
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)
